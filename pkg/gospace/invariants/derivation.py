"""Invariants of the isotropy action on the symmetric algebra ``S(m)``.

Each ``h_j`` acts on ``S(m)`` as the derivation extending
``xi -> [h_j, xi]_m``; the invariants of degree ``d`` are the common kernel
of these derivations restricted to degree ``d``.
"""
from logging import getLogger

from gospace.exactla.matrix import kernel_basis
from gospace.exactla.matrix import Matrix
from gospace.invariants.sym_poly import exponents_to_letters
from gospace.invariants.sym_poly import letters_to_exponents
from gospace.invariants.sym_poly import monomial_count
from gospace.invariants.sym_poly import monomials
from gospace.invariants.sym_poly import SymPoly


def _check_degree(d):
    if d < 0:
        raise ValueError('degree must be nonnegative, got {}'.format(d))


def derivation_matrix(space, j, d):
    """Matrix of the derivation of ``h_j`` on degree `d` monomials.

    Rows and columns follow the graded-lex order of :func:`monomials`;
    column ``c`` holds the image of monomial ``c`` (Leibniz rule).

    Args:
        space (ReductiveSpace): validated space.
        j (int): position of the isotropy generator in ``h``.
        d (int): degree.

    Returns (Matrix): square matrix over the field of `space`.

    """
    _check_degree(d)
    n = space.dim_m
    basis = monomials(n, d)
    position = dict((e, r) for r, e in enumerate(basis))
    ad = space.ad_h(j)
    zero = space.domain.zero
    rows = [[zero] * len(basis) for _ in basis]
    for c, exponents in enumerate(basis):
        letters = exponents_to_letters(exponents)
        for s, p in enumerate(letters):
            for r in range(n):
                value = ad[r, p]
                if not value:
                    continue
                replaced = letters[:s] + (r,) + letters[s + 1:]
                target = position[letters_to_exponents(replaced, n)]
                rows[target][c] += value
    return Matrix(rows, space.domain, cols=len(basis))


def invariant_basis(space, d):
    """Echelon-normalized basis of the degree `d` invariants.

    Returns (list): :class:`SymPoly` list; every monomial when ``h = 0``.

    """
    _check_degree(d)
    size = monomial_count(space.dim_m, d)
    rows = []
    for j in range(space.dim_h):
        m = derivation_matrix(space, j, d)
        rows.extend(m.row(r) for r in range(m.rows))
    stacked = Matrix(rows, space.domain, cols=size)
    return [SymPoly.from_vector(space.dim_m, d, v, space.domain)
            for v in kernel_basis(stacked)]


def invariant_dimensions(space, d_max):
    """Dimensions of the invariants for degrees ``0..d_max``."""
    return [len(invariant_basis(space, d)) for d in range(d_max + 1)]


def check_invariants_realform(space, d_max, logger=None):
    """Compares per-degree invariant dimensions over ``QQ`` and ``QQ_I``.

    Returns (dict): report ``{space, degree_cap, dims, crown_dims,
        consistent}``.

    """
    from gospace.family.crown import complexify

    logger = logger or getLogger(__name__)
    if not space.is_rational():
        raise ValueError('{} is not a rational space'.format(space.name))
    dims = invariant_dimensions(space, d_max)
    crown_dims = invariant_dimensions(complexify(space), d_max)
    consistent = dims == crown_dims
    if not consistent:
        logger.error('THEOREM VIOLATION on {}: invariant dimensions {} over '
                     'the rationals, {} over the crown'
                     .format(space.name, dims, crown_dims))
    return {'space': space.name, 'degree_cap': d_max, 'dims': dims,
            'crown_dims': crown_dims, 'consistent': consistent}
