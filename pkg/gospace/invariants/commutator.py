"""Degree-capped commutativity tests for invariant differential operators.

Invariants of ``S(m)`` are symmetrized into ``U(g)``; the commutator of two
of them is reduced modulo the left ideal ``U(g) h``. A nonzero remainder
refutes commutativity. All zero remainders up to the cap are evidence only.
"""
from logging import getLogger

from gospace.config import DEFAULT_MAX_DEGREE
from gospace.invariants.derivation import invariant_basis
from gospace.invariants.pbw import format_term
from gospace.invariants.pbw import PBWAlgebra

COMMUTATOR_NOTE = (
    'vanishing commutators up to the degree cap are evidence, not a proof of '
    'commutativity; the computed algebra uses the given group G, which may '
    'be smaller than the full isometry group')


def symmetrized_invariants(space, d_max, algebra=None):
    """Symmetrized invariants of degrees ``1..d_max``.

    Returns (list): ``((degree, index), PBWElement)`` pairs in
        ``(degree, index)`` order.

    """
    algebra = algebra or PBWAlgebra(space)
    result = []
    for d in range(1, d_max + 1):
        for index, poly in enumerate(invariant_basis(space, d)):
            result.append(((d, index), algebra.symmetrize(poly)))
    return result


def reduced_commutator(algebra, p, q):
    return algebra.reduce_mod_isotropy(algebra.commutator(p, q))


def find_refutations(space, d_max, logger=None):
    """Pairs of invariants whose reduced commutator is nonzero.

    Returns (list): dicts ``{p, q, nonzero_term}`` with ``p`` and ``q`` given
        as ``[degree, index]``.

    """
    logger = logger or getLogger(__name__)
    algebra = PBWAlgebra(space)
    elements = symmetrized_invariants(space, d_max, algebra)
    refutations = []
    for a, (p_key, p) in enumerate(elements):
        for q_key, q in elements[a:]:
            remainder = reduced_commutator(algebra, p, q)
            if remainder.is_zero():
                continue
            word, value = remainder.sorted_terms()[0]
            refutations.append({
                'p': list(p_key), 'q': list(q_key),
                'nonzero_term': format_term(word, value, algebra.labels)})
    logger.debug('{}: {} invariants, {} refutations'
                 .format(space.name, len(elements), len(refutations)))
    return refutations


def commutator_report(space, d_max=DEFAULT_MAX_DEGREE, logger=None):
    """Commutator tests on `space` and, for rational spaces, on its crown.

    Args:
        space (ReductiveSpace): validated space.
        d_max (int): degree cap, at least 1.
        logger:

    Returns (dict): report ``{space, degree_cap, dims, refutations,
        crown_consistent, note}``. ``crown_consistent`` is `None` for a
        Gaussian space, which is its own crown.

    """
    from gospace.family.crown import complexify

    logger = logger or getLogger(__name__)
    if d_max < 1:
        raise ValueError('d_max must be at least 1, got {}'.format(d_max))
    dims = [len(invariant_basis(space, d)) for d in range(d_max + 1)]
    refutations = find_refutations(space, d_max, logger=logger)
    crown_consistent = None
    if space.is_rational():
        crown_refutations = find_refutations(complexify(space), d_max,
                                             logger=logger)
        keys = [(r['p'], r['q']) for r in refutations]
        crown_keys = [(r['p'], r['q']) for r in crown_refutations]
        crown_consistent = keys == crown_keys
        if not crown_consistent:
            logger.error('THEOREM VIOLATION on {}: commutator refutations '
                         'differ between the space and its crown'
                         .format(space.name))
    if refutations:
        logger.info('{}: commutativity refuted by {} pairs'
                    .format(space.name, len(refutations)))
    return {'space': space.name,
            'degree_cap': d_max,
            'dims': dims,
            'refutations': refutations,
            'crown_consistent': crown_consistent,
            'note': COMMUTATOR_NOTE}
