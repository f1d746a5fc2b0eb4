"""Deterministic candidate vectors for the GO checks.

Every random draw derives from ``(seed, stream, index)`` only, so the same
vectors are produced whatever order the samples are evaluated in.
"""
import numpy

from gospace.exactla.matrix import add_vectors
from gospace.exactla.scalar import QQ_I

# stream identifiers, kept apart so that the checks do not share draws
REFUTE_STREAM = 1
SAMPLE_STREAM = 2
REALFORM_STREAM = 3
CERTIFICATE_STREAM = 4


def get_random_state(seed, stream, index):
    return numpy.random.RandomState([seed, stream, index])


def enumeration_prefix(space):
    """Basis vectors, then ``e_p + e_q`` and ``e_p - e_q`` for ``p < q``."""
    n = space.dim_m
    basis = [space.m_basis_vector(p) for p in range(n)]
    vectors = list(basis)
    for p in range(n):
        for q in range(p + 1, n):
            vectors.append(add_vectors(basis[p], basis[q]))
            vectors.append(tuple(x - y for x, y in zip(basis[p], basis[q])))
    return vectors


def random_integers(random_state, size, bound, gaussian=False):
    """Integer (or Gaussian integer) coordinates in ``[-bound, bound]``."""
    re_part = random_state.randint(-bound, bound + 1, size=size)
    if not gaussian:
        return [int(v) for v in re_part]
    im_part = random_state.randint(-bound, bound + 1, size=size)
    return [QQ_I(int(a), int(b)) for a, b in zip(re_part, im_part)]


def random_m_vector(space, seed, stream, index, bound):
    """Nonzero random ``m`` vector; zero draws are drawn again.

    Raises ValueError when ``m`` is trivial, as no nonzero vector exists,
    and when `bound` is below 1.
    """
    if not space.dim_m:
        raise ValueError('{} has an empty complement, m has no nonzero '
                         'vectors'.format(space.name))
    if bound < 1:
        raise ValueError('bound must be positive, got {}'.format(bound))
    random_state = get_random_state(seed, stream, index)
    gaussian = not space.is_rational()
    while True:
        xi = space.convert_vector(random_integers(
            random_state, space.dim_m, bound, gaussian=gaussian))
        if any(xi):
            return xi


def null_vectors(space):
    """Null vectors ``v + i w`` from pairs of the enumeration prefix.

    A pair qualifies when ``<v, v> = <w, w>`` and ``<v, w> = 0``; only
    Gaussian spaces admit these vectors.
    """
    if space.is_rational():
        return []
    i = QQ_I(0, 1)
    prefix = enumeration_prefix(space)
    result = []
    for a, v in enumerate(prefix):
        vv = space.metric_eval(v, v)
        for w in prefix[a + 1:]:
            if space.metric_eval(w, w) != vv or space.metric_eval(v, w):
                continue
            result.append(tuple(x + i * y for x, y in zip(v, w)))
    return result
