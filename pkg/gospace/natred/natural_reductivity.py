"""Exact decision of natural reductivity for the given decomposition.

The trilinear form

    psi(xi, eta, zeta) = <[xi, eta]_m, zeta> + <eta, [xi, zeta]_m>

vanishes on all of ``m`` iff it vanishes on every triple of basis vectors,
which makes this the one property decided exactly, with no sampling.
"""
from logging import getLogger

from gospace.exactla.matrix import DimensionMismatchError
from gospace.exactla.matrix import Matrix
from gospace.exactla.matrix import zero_vector
from gospace.exactla.scalar import format_scalar
from gospace.geodesic.go_checker import is_linear_section


class NatTriple(object):
    """A point ``(xi, eta, zeta)`` of ``m x m x m``.

    Args:
        space (ReductiveSpace): space whose field is used.
        xi, eta, zeta (sequence): ``m`` vectors.

    """

    def __init__(self, space, xi, eta, zeta):
        for label, v in (('xi', xi), ('eta', eta), ('zeta', zeta)):
            if len(v) != space.dim_m:
                raise DimensionMismatchError(
                    '{} must have length {}, got {}'
                    .format(label, space.dim_m, len(v)))
        self.xi = space.convert_vector(xi)
        self.eta = space.convert_vector(eta)
        self.zeta = space.convert_vector(zeta)

    @classmethod
    def from_indices(cls, space, i, j, k):
        e = space.m_basis_vector
        return cls(space, e(i), e(j), e(k))

    def __repr__(self):
        return 'NatTriple({}, {}, {})'.format(
            *[[format_scalar(v) for v in w]
              for w in (self.xi, self.eta, self.zeta)])


def psi(space, t):
    """Evaluates the natural reductivity form on a :class:`NatTriple`."""
    return (space.metric_eval(space.bracket_m(t.xi, t.eta), t.zeta) +
            space.metric_eval(t.eta, space.bracket_m(t.xi, t.zeta)))


def is_naturally_reductive(space, return_value=False):
    """Decides natural reductivity on basis triples.

    Args:
        space (ReductiveSpace): validated space.
        return_value (bool): If `True`, also returns the nonzero value of
            ``psi`` at the witness (`None` when there is no witness).

    Returns (tuple): ``(natred, witness)`` where witness is the
        lexicographically first failing triple ``(i, j, k)`` of ``m``
        positions, or `None`.

    """
    n = space.dim_m
    for i in range(n):
        for j in range(n):
            for k in range(n):
                value = psi(space, NatTriple.from_indices(space, i, j, k))
                if value:
                    if return_value:
                        return False, (i, j, k), value
                    return False, (i, j, k)
    if return_value:
        return True, None, None
    return True, None


def check_crown_natred(space, logger=None):
    """Compares the natred decision on `space` and on its crown.

    Returns (dict): report ``{space, natred, witness?, psi?, crown_natred,
        consistent}``.

    """
    from gospace.family.crown import complexify

    logger = logger or getLogger(__name__)
    if not space.is_rational():
        raise ValueError('{} is not a rational space'.format(space.name))
    natred, witness, value = is_naturally_reductive(space, return_value=True)
    crown_natred, crown_witness = is_naturally_reductive(complexify(space))
    consistent = natred == crown_natred and witness == crown_witness
    report = {'space': space.name, 'natred': natred}
    if witness is not None:
        report['witness'] = list(witness)
        report['psi'] = format_scalar(value)
    report['crown_natred'] = crown_natred
    report['consistent'] = consistent
    if not consistent:
        logger.error('THEOREM VIOLATION on {}: natred {} on the space, {} '
                     'on its crown'.format(space.name, natred, crown_natred))
    return report


def natred_implies_go_audit(space, logger=None):
    """Checks that a naturally reductive space admits the section ``L = 0``.

    Returns (dict): report ``{space, natred, zero_section, ok}``; ``ok`` is
        `False` only when the space is naturally reductive and ``L = 0``
        fails.

    """
    logger = logger or getLogger(__name__)
    natred, _ = is_naturally_reductive(space)
    zero_section = is_linear_section(
        space, Matrix([zero_vector(space.dim_m, space.domain)] * space.dim_h,
                      space.domain, cols=space.dim_m))
    ok = zero_section or not natred
    if not ok:
        logger.error('{} is naturally reductive but L = 0 is not a linear '
                     'section'.format(space.name))
    return {'space': space.name, 'natred': natred,
            'zero_section': zero_section, 'ok': ok}
