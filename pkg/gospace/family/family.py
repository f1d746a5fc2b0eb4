"""Real form families: a crown and the members fixed by its conjugations."""
from logging import getLogger
import os

from gospace.config import DEFAULT_BOUND
from gospace.config import DEFAULT_MAX_DEGREE
from gospace.config import DEFAULT_NUM_SAMPLES
from gospace.config import DEFAULT_SEED
from gospace.exactla.matrix import Matrix
from gospace.exactla.scalar import QQ_I
from gospace.exactla.scalar import to_domain
from gospace.family.conjugation import Conjugation
from gospace.family.crown import complexify
from gospace.family.real_form import real_form
from gospace.geodesic.go_checker import check_go
from gospace.invariants.commutator import find_refutations
from gospace.invariants.derivation import invariant_dimensions
from gospace.liespace.space_io import load_space
from gospace.liespace.space_io import parse_space
from gospace.liespace.space_io import SpaceFormatError
from gospace.liespace.validation import validate
from gospace.liespace.validation import ValidationReport
from gospace.natred.natural_reductivity import is_naturally_reductive
from gospace.utils.json_utils import load_json

FAMILY_FIELDS = ('name', 'crown', 'members')


class FamilyMember(object):
    """A member space with the basis change into its crown.

    Args:
        name (str): member name.
        space (ReductiveSpace): the member over the rationals.
        basis_change (Matrix): columns are the member basis vectors in crown
            coordinates.
        conjugation (Conjugation or None): conjugation the member was
            extracted from, `None` for a directly specified member.

    """

    def __init__(self, name, space, basis_change, conjugation=None):
        self.name = name
        self.space = space
        self.basis_change = basis_change
        self.conjugation = conjugation


class Family(object):

    def __init__(self, name, crown, members):
        self.name = name
        self.crown = crown
        self.members = list(members)

    def spaces(self):
        """Members in declaration order, then the crown."""
        return [m.space for m in self.members] + [self.crown]


def compare_with_crown(crown, member, basis_change):
    """Checks a member against the crown through `basis_change`.

    With ``f_a`` the columns of `basis_change`, the crown must satisfy
    ``[f_a, f_b] = sum_k c'(a, b, k) f_k`` with the member's structure
    constants ``c'``, ``<f_p, f_q> = Q'_pq`` on ``m``, and ``f_a`` must lie
    in ``h`` exactly for the member's isotropy indices.

    Returns (ValidationReport): failures with witnesses.

    """
    report = ValidationReport(member.name)
    if member.dim != crown.dim or member.dim_h != crown.dim_h:
        report.add('dimension', (member.dim, crown.dim),
                   'member and crown dimensions differ')
        return report
    f = basis_change.convert(QQ_I)
    columns = [f.column(a) for a in range(member.dim)]
    for a in range(member.dim):
        for b in range(a + 1, member.dim):
            expected = f.dot([
                to_domain(member.structure_constant(a, b, k), QQ_I)
                for k in range(member.dim)])
            if crown.bracket(columns[a], columns[b]) != expected:
                report.add('structure', (a, b),
                           'bracket of f_{} and f_{} differs'.format(a, b))
    for a in member.isotropy:
        if any(crown.to_m(columns[a])):
            report.add('isotropy', (a,),
                       'f_{} is not in the crown isotropy'.format(a))
    for k in member.complement:
        if any(crown.to_h(columns[k])):
            report.add('isotropy', (k,),
                       'f_{} is not in the crown complement'.format(k))
    m_columns = [crown.to_m(columns[k]) for k in member.complement]
    for p in range(member.dim_m):
        for q in range(p, member.dim_m):
            if crown.metric_eval(m_columns[p], m_columns[q]) != \
                    to_domain(member.metric[p, q], QQ_I):
                report.add('metric', (p, q),
                           'metric differs on ({}, {})'.format(p, q))
    return report


def _load_space_entry(entry, basedir, catalog_dir):
    if isinstance(entry, dict):
        return parse_space(entry)
    if not isinstance(entry, str):
        raise SpaceFormatError('space entry must be an object or a path')
    candidates = [os.path.join(basedir, entry)]
    if catalog_dir is not None:
        candidates.append(os.path.join(catalog_dir, entry))
    for path in candidates:
        if os.path.exists(path):
            return load_space(path)
    raise SpaceFormatError('referenced space {} not found'.format(entry))


def _check_valid(space):
    report = validate(space)
    if not report.ok:
        raise SpaceFormatError('{} fails validation: {}'.format(
            space.name, ', '.join(report.failed_checks())))


def parse_family(params, basedir='.', catalog_dir=None, logger=None):
    """Builds a :class:`Family` from a decoded family document.

    The crown is a space document or a path (relative to `basedir`, then to
    `catalog_dir`); a rational crown is complexified. Members are given by a
    conjugation matrix or by a space.

    Returns (Family): family with every member extracted and validated.

    """
    logger = logger or getLogger(__name__)
    if not isinstance(params, dict):
        raise SpaceFormatError('family document must be an object')
    unknown = sorted(set(params) - set(FAMILY_FIELDS))
    missing = [f for f in FAMILY_FIELDS if f not in params]
    if unknown or missing:
        raise SpaceFormatError('family fields: unknown {}, missing {}'
                               .format(unknown, missing))
    crown = _load_space_entry(params['crown'], basedir, catalog_dir)
    _check_valid(crown)
    if crown.is_rational():
        crown = complexify(crown)

    members = []
    names = set()
    for entry in params['members']:
        if not isinstance(entry, dict) or 'name' not in entry or \
                len(set(entry) & {'conjugation', 'space'}) != 1 or \
                len(entry) != 2:
            raise SpaceFormatError(
                'member must have a name and exactly one of conjugation or '
                'space: {!r}'.format(entry))
        name = entry['name']
        if name in names:
            raise SpaceFormatError('duplicate member {}'.format(name))
        names.add(name)
        if 'conjugation' in entry:
            sigma = Conjugation.from_strings(entry['conjugation'])
            space, basis_change = real_form(crown, sigma, name=name,
                                            return_basis=True, logger=logger)
            members.append(FamilyMember(name, space, basis_change, sigma))
        else:
            space = _load_space_entry(entry['space'], basedir, catalog_dir)
            _check_valid(space)
            members.append(FamilyMember(
                name, space, Matrix.identity(space.dim, QQ_I)))
    return Family(params['name'], crown, members)


def load_family(filepath, catalog_dir=None, logger=None):
    """Loads a family file.

    Args:
        filepath (str): path to the JSON family file.
        catalog_dir (str or None): fallback directory for crown and member
            references.
        logger:

    Returns (Family): the family.

    """
    if not os.path.exists(filepath):
        raise SpaceFormatError('family file {} does not exist'
                               .format(filepath))
    try:
        params = load_json(filepath)
    except ValueError as e:
        raise SpaceFormatError('{} is not valid JSON: {}'.format(filepath, e))
    return parse_family(params, basedir=os.path.dirname(filepath),
                        catalog_dir=catalog_dir, logger=logger)


def _space_summary(space, samples, seed, bound, d_max, n_jobs, logger):
    verdict = check_go(space, mode='auto', samples=samples, seed=seed,
                       bound=bound, n_jobs=n_jobs, logger=logger)
    natred, witness = is_naturally_reductive(space)
    refutations = find_refutations(space, d_max, logger=logger)
    summary = {'name': space.name, 'field': space.field,
               'signature': list(space.signature()),
               'go': verdict.to_dict(),
               'natred': natred}
    if witness is not None:
        summary['natred_witness'] = list(witness)
    summary['invariant_dims'] = invariant_dimensions(space, d_max)
    summary['commutator_refuted'] = bool(refutations)
    return summary


def family_verify(family, samples=DEFAULT_NUM_SAMPLES, seed=DEFAULT_SEED,
                  bound=DEFAULT_BOUND, d_max=DEFAULT_MAX_DEGREE, n_jobs=None,
                  logger=None):
    """Checks that the properties agree across a family and its crown.

    GO statuses never mix certified and refuted; the natred decision, the
    invariant dimensions and the presence of commutator refutations are
    identical across members and crown; every member matches the crown
    through its basis change.

    Returns (dict): report ``{family, members, crown, violations}``.

    """
    logger = logger or getLogger(__name__)
    members = []
    violations = []
    for member in family.members:
        summary = _space_summary(member.space, samples, seed, bound, d_max,
                                 n_jobs, logger)
        comparison = compare_with_crown(family.crown, member.space,
                                        member.basis_change)
        summary['matches_crown'] = comparison.ok
        if not comparison.ok:
            violations.append('{} does not match the crown: {}'.format(
                member.name, ', '.join(comparison.failed_checks())))
        members.append(summary)
    crown = _space_summary(family.crown, samples, seed, bound, d_max, n_jobs,
                           logger)
    summaries = members + [crown]

    modes = [s['go']['mode'] for s in summaries]
    if 'certified_linear' in modes and 'refuted' in modes:
        violations.append('GO statuses mix certified and refuted: {}'
                          .format(modes))
    for key, what in (('natred', 'natred decisions'),
                      ('invariant_dims', 'invariant dimensions'),
                      ('commutator_refuted', 'commutator refutations')):
        values = [s[key] for s in summaries]
        if any(v != values[0] for v in values):
            violations.append('{} differ: {}'.format(what, values))
    for v in violations:
        logger.error('THEOREM VIOLATION in {}: {}'.format(family.name, v))
    return {'family': family.name,
            'members': members,
            'crown': crown,
            'violations': violations}
