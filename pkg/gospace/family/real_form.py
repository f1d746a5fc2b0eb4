"""Real forms of a crown from its conjugations."""
from logging import getLogger

from gospace.exactla.matrix import kernel_basis
from gospace.exactla.matrix import Matrix
from gospace.exactla.matrix import solve_linear
from gospace.exactla.scalar import imag_part
from gospace.exactla.scalar import QQ
from gospace.exactla.scalar import QQ_I
from gospace.exactla.scalar import RATIONAL
from gospace.exactla.scalar import real_part
from gospace.family.conjugation import ConjugationError
from gospace.family.conjugation import validate_conjugation
from gospace.liespace.reductive_space import ReductiveSpace
from gospace.liespace.reductive_space import Tag
from gospace.liespace.reductive_space import TAG_NAMES
from gospace.liespace.reductive_space import UNKNOWN
from gospace.liespace.validation import validate


def _fixed_vectors(s, block):
    """Rational basis of the vectors ``p + i q`` on `block` fixed by sigma.

    With ``S = R + i T`` restricted to the block, ``sigma`` fixes ``p + i q``
    iff ``[[R - I, T], [T, -R - I]] (p, q) = 0`` over the rationals.
    """
    n = len(block)
    rows = []
    for r in range(n):
        rows.append([real_part(s[block[r], block[c]]) - (1 if r == c else 0)
                     for c in range(n)] +
                    [imag_part(s[block[r], block[c]]) for c in range(n)])
    for r in range(n):
        rows.append([imag_part(s[block[r], block[c]]) for c in range(n)] +
                    [-real_part(s[block[r], block[c]]) - (1 if r == c else 0)
                     for c in range(n)])
    kernel = kernel_basis(Matrix(rows, QQ, cols=2 * n))
    if len(kernel) != n:
        raise ConjugationError(
            'fixed set has real dimension {} on a block of size {}'
            .format(len(kernel), n))
    return [tuple(QQ_I(v[c], v[n + c]) for c in range(n)) for v in kernel]


def _label(crown, vector):
    support = [(k, v) for k, v in enumerate(vector) if v]
    if len(support) == 1:
        k, v = support[0]
        if v == QQ_I(1, 0):
            return crown.basis_labels[k]
        if v == QQ_I(0, 1):
            return 'i{}'.format(crown.basis_labels[k])
    return None


def _real_coordinates(values, what):
    result = []
    for v in values:
        if imag_part(v):
            raise ConjugationError('{} is not real in the fixed basis'
                                   .format(what))
        result.append(real_part(v))
    return result


def real_form(crown, sigma, name=None, return_basis=False, logger=None):
    """Extracts the member of the family fixed by `sigma`.

    The fixed set is computed block by block (``m``, then ``h``); the
    ``k``-th fixed vector of a block takes the ``k``-th index of that block,
    so the member keeps the crown's isotropy indices. Structure constants and
    metric are read in the fixed basis and must be rational.

    Args:
        crown (ReductiveSpace): space over the Gaussian rationals.
        sigma (Conjugation): valid conjugation of `crown`.
        name (str or None): name of the member.
        return_basis (bool): If `True`, also returns the basis change
            :class:`Matrix` whose columns are the fixed vectors in crown
            coordinates.
        logger:

    Returns (ReductiveSpace): the real form, over the rationals.

    """
    logger = logger or getLogger(__name__)
    report = validate_conjugation(crown, sigma)
    if not report.ok:
        raise ConjugationError('invalid conjugation of {}: {}'
                               .format(crown.name,
                                       ', '.join(report.failed_checks())))
    name = name or '{}-real-form'.format(crown.name)
    s = sigma.matrix
    columns = [None] * crown.dim
    for block in (crown.complement, crown.isotropy):
        for k, local in zip(block, _fixed_vectors(s, block)):
            v = [QQ_I.zero] * crown.dim
            for index, value in zip(block, local):
                v[index] = value
            columns[k] = tuple(v)
    basis_change = Matrix.from_columns(columns, QQ_I, rows=crown.dim)

    labels = []
    for k, v in enumerate(columns):
        label = _label(crown, v)
        if label is None or label in labels:
            label = 'f{}'.format(k)
        labels.append(label)

    brackets = {}
    for a in range(crown.dim):
        for b in range(a + 1, crown.dim):
            value = crown.bracket(columns[a], columns[b])
            if not any(value):
                continue
            x = solve_linear(basis_change, value)
            coords = _real_coordinates(
                x, '[{}, {}]'.format(labels[a], labels[b]))
            brackets[(a, b)] = dict((k, c) for k, c in enumerate(coords)
                                    if c)

    m_vectors = [crown.to_m(columns[k]) for k in crown.complement]
    metric = [_real_coordinates(
        [crown.metric_eval(u, w) for w in m_vectors], 'metric')
        for u in m_vectors]

    source = 'real form of {}'.format(crown.name)
    tags = dict((t, Tag(UNKNOWN, source)) for t in TAG_NAMES)
    member = ReductiveSpace(name, RATIONAL, labels, brackets, crown.isotropy,
                            Matrix(metric, QQ, cols=crown.dim_m), tags=tags)
    validation = validate(member, logger=logger)
    if not validation.ok:
        raise ConjugationError('real form {} fails validation: {}'
                               .format(name,
                                       ', '.join(validation.failed_checks())))
    logger.info('{}: real form {} with signature {}'
                .format(crown.name, name, member.signature()))
    if return_basis:
        return member, basis_change
    return member
