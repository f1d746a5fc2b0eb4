"""Consistency between literature tags and computed verdicts.

The inclusions symmetric ⊂ weakly symmetric ⊂ GO ⊂ D'Atri and naturally
reductive ⊂ GO, together with the computed verdicts, constrain the tags a
catalog entry may carry. A contradiction is a catalog error.
"""
from logging import getLogger

from gospace.config import DEFAULT_BOUND
from gospace.config import DEFAULT_NUM_SAMPLES
from gospace.config import DEFAULT_SEED
from gospace.geodesic.go_checker import certify_go_linear
from gospace.geodesic.go_checker import check_go
from gospace.natred.natural_reductivity import is_naturally_reductive


class AuditReport(object):
    """Catalog errors keyed by ``(tag, property)``; repeats are dropped."""

    def __init__(self, space_name):
        self.space_name = space_name
        self.errors = []
        self._keys = set()

    def add(self, tag, prop, detail):
        if (tag, prop) in self._keys:
            return
        self._keys.add((tag, prop))
        self.errors.append({'tag': tag, 'property': prop, 'detail': detail})

    @property
    def ok(self):
        return not self.errors

    def to_dict(self):
        return {'space': self.space_name,
                'ok': self.ok,
                'catalog_errors': list(self.errors)}


def inclusion_audit(space, go_verdict=None, natred=None,
                    commutator_report=None, samples=DEFAULT_NUM_SAMPLES,
                    seed=DEFAULT_SEED, bound=DEFAULT_BOUND, n_jobs=None,
                    logger=None):
    """Audits the tags of `space` against computed verdicts.

    Args:
        space (ReductiveSpace): validated space.
        go_verdict (GoVerdict or None): precomputed verdict; computed with
            :func:`check_go` in auto mode when `None`.
        natred (bool or None): precomputed natred decision.
        commutator_report (dict or None): when given, a commutative tag is
            checked against its refutations, and so is a weakly
            symmetric tag on a riemannian space.
        samples (int): GO sampling budget.
        seed (int): random seed.
        bound (int): coordinate bound.
        n_jobs (int or None): worker count.
        logger:

    Returns (AuditReport): catalog errors.

    """
    logger = logger or getLogger(__name__)
    if go_verdict is None:
        go_verdict = check_go(space, samples=samples, seed=seed, bound=bound,
                              n_jobs=n_jobs, logger=logger)
    if natred is None:
        natred, _ = is_naturally_reductive(space)
    tags = space.tags
    refuted = go_verdict.is_refuted
    certified = go_verdict.is_certified
    report = AuditReport(space.name)

    for tag in ('weakly_symmetric', 'naturally_reductive', 'symmetric',
                'geodesic_orbit'):
        if tags[tag].is_true() and refuted:
            report.add(tag, 'geodesic_orbit',
                       'tagged {} but GO is refuted'.format(tag))
    if tags['geodesic_orbit'].is_false() and certified:
        report.add('geodesic_orbit', 'geodesic_orbit',
                   'tagged not GO but a linear certificate exists')
    if tags['naturally_reductive'].is_true() and not natred:
        report.add('naturally_reductive', 'naturally_reductive',
                   'tagged naturally reductive but the identity fails')
    if tags['naturally_reductive'].is_false() and natred:
        report.add('naturally_reductive', 'naturally_reductive',
                   'tagged not naturally reductive but the identity holds')
    if natred and not certified and certify_go_linear(space) is None:
        report.add('naturally_reductive', 'certificate',
                   'naturally reductive but no linear certificate')

    if tags['symmetric'].is_true():
        if not space.is_symmetric_pair()[0]:
            report.add('symmetric', 'symmetric_pair',
                       'tagged symmetric but [m, m] is not in h')
        if tags['weakly_symmetric'].is_false():
            report.add('symmetric', 'weakly_symmetric',
                       'tagged symmetric but not weakly symmetric')

    if tags['datri'].is_false():
        if certified or tags['geodesic_orbit'].is_true():
            report.add('datri', 'geodesic_orbit',
                       'tagged not D\'Atri but GO')
        if natred:
            report.add('datri', 'naturally_reductive',
                       'tagged not D\'Atri but naturally reductive')
        if tags['commutative'].is_true():
            report.add('datri', 'commutative',
                       'tagged not D\'Atri but commutative')

    if tags['weakly_symmetric'].is_true() and \
            tags['commutative'].is_false() and space.is_riemannian():
        report.add('weakly_symmetric', 'commutative',
                   'riemannian weakly symmetric but tagged not commutative')

    if commutator_report is not None and tags['commutative'].is_true() and \
            commutator_report['refutations']:
        report.add('commutative', 'commutator',
                   'tagged commutative but commutators are nonzero')
    # riemannian weakly symmetric implies commutative
    if commutator_report is not None and \
            tags['weakly_symmetric'].is_true() and \
            commutator_report['refutations'] and space.is_riemannian():
        report.add('weakly_symmetric', 'commutator',
                   'riemannian weakly symmetric but commutators are '
                   'nonzero')

    for e in report.errors:
        logger.error('CATALOG ERROR in {}: {}'.format(space.name,
                                                      e['detail']))
    return report
