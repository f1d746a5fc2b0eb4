"""Report builders shared by the commands; `analyze` composes them."""
from logging import getLogger

from gospace.config import DEFAULT_BOUND
from gospace.config import DEFAULT_MAX_DEGREE
from gospace.config import DEFAULT_NUM_SAMPLES
from gospace.config import DEFAULT_SEED
from gospace.exactla.scalar import format_scalar
from gospace.family.inclusion_audit import inclusion_audit
from gospace.geodesic.go_checker import check_crown_go_consistency
from gospace.geodesic.go_checker import check_go
from gospace.invariants.commutator import commutator_report
from gospace.invariants.derivation import check_invariants_realform
from gospace.invariants.derivation import invariant_basis
from gospace.liespace.reductive_space import DegenerateMetricError
from gospace.liespace.validation import validate
from gospace.natred.natural_reductivity import check_crown_natred
from gospace.natred.natural_reductivity import is_naturally_reductive
from gospace.natred.natural_reductivity import natred_implies_go_audit


def validation_report(space, logger=None):
    return validate(space, logger=logger).to_dict()


def go_report(space, mode='auto', samples=DEFAULT_NUM_SAMPLES,
              seed=DEFAULT_SEED, bound=DEFAULT_BOUND, n_jobs=None,
              show_progress=False, logger=None):
    return check_go(space, mode=mode, samples=samples, seed=seed,
                    bound=bound, n_jobs=n_jobs, show_progress=show_progress,
                    logger=logger)


def natred_report(space, logger=None):
    """Natred decision; crown consistency and the ``L = 0`` audit included."""
    if space.is_rational():
        report = check_crown_natred(space, logger=logger)
    else:
        natred, witness, value = is_naturally_reductive(space,
                                                        return_value=True)
        report = {'space': space.name, 'natred': natred}
        if witness is not None:
            report['witness'] = list(witness)
            report['psi'] = format_scalar(value)
    report['zero_section'] = natred_implies_go_audit(
        space, logger=logger)['ok']
    return report


def invariants_report(space, d_max=DEFAULT_MAX_DEGREE, logger=None):
    """Per-degree invariant bases, with the crown dimensions when rational."""
    bases = [[p.format(_m_labels(space)) for p in invariant_basis(space, d)]
             for d in range(d_max + 1)]
    if space.is_rational():
        report = check_invariants_realform(space, d_max, logger=logger)
    else:
        report = {'space': space.name, 'degree_cap': d_max,
                  'dims': [len(b) for b in bases]}
    report['bases'] = bases
    return report


def _m_labels(space):
    return [space.basis_labels[k] for k in space.complement]


def signature_report(space):
    try:
        return list(space.signature())
    except DegenerateMetricError:
        return None


def analyze(space, mode='auto', samples=DEFAULT_NUM_SAMPLES,
            seed=DEFAULT_SEED, bound=DEFAULT_BOUND,
            d_max=DEFAULT_MAX_DEGREE, n_jobs=None, show_progress=False,
            logger=None):
    """Full report of a space, composed of the individual command reports.

    An invalid space gets its validation report only.

    Returns (dict): report with a ``violations`` list of theorem violations
        and catalog errors.

    """
    logger = logger or getLogger(__name__)
    validation = validation_report(space, logger=logger)
    report = {'space': space.name, 'field': space.field,
              'validation': validation}
    if not validation['valid']:
        return report
    symmetric, witness = space.is_symmetric_pair()
    report['signature'] = signature_report(space)
    report['symmetric_pair'] = {'value': symmetric,
                                'witness': list(witness) if witness else None}
    verdict = go_report(space, mode=mode, samples=samples, seed=seed,
                        bound=bound, n_jobs=n_jobs,
                        show_progress=show_progress, logger=logger)
    report['go'] = verdict.to_dict()
    violations = []
    if space.is_rational():
        crown_go = check_crown_go_consistency(
            space, budget=samples, seed=seed, bound=bound, n_jobs=n_jobs,
            logger=logger)
        report['crown_go'] = crown_go
        violations.extend(crown_go['violations'])
    natred = natred_report(space, logger=logger)
    report['natred'] = natred
    if not natred.get('consistent', True):
        violations.append('natred differs between the space and its crown')
    if not natred['zero_section']:
        violations.append('naturally reductive but L = 0 is not a section')
    invariants = invariants_report(space, d_max=d_max, logger=logger)
    report['invariants'] = invariants
    if not invariants.get('consistent', True):
        violations.append('invariant dimensions differ over the crown')
    commutators = commutator_report(space, d_max=d_max, logger=logger)
    report['commutators'] = commutators
    if commutators['crown_consistent'] is False:
        violations.append('commutator refutations differ over the crown')
    audit = inclusion_audit(space, go_verdict=verdict,
                            natred=natred['natred'],
                            commutator_report=commutators, logger=logger)
    report['inclusion_audit'] = audit.to_dict()
    violations.extend('CATALOG ERROR: {}'.format(e['detail'])
                      for e in audit.errors)
    report['violations'] = violations
    return report
