"""The polynomial phi, the moduli varieties and geodesic vectors.

For ``xi`` in ``m``, ``alpha`` in ``h`` and a scalar ``c``,

    phi(xi, alpha, zeta) = <[xi + alpha, zeta]_m, xi> - c <xi, zeta>

and ``xi + alpha`` is a geodesic vector iff ``phi`` vanishes for every
``zeta``. By linearity in ``zeta`` only the ``m`` basis is tested.
"""
from gospace.exactla.matrix import add_vectors
from gospace.exactla.matrix import DimensionMismatchError
from gospace.exactla.matrix import Matrix
from gospace.exactla.matrix import solve_linear
from gospace.exactla.scalar import format_scalar
from gospace.exactla.scalar import to_domain


class ZeroVectorError(ValueError):
    pass


class ModuliPoint(object):
    """A triple ``(xi, alpha, c)`` tested against the moduli variety.

    Args:
        space (ReductiveSpace): space whose field and metric are used.
        xi (sequence): ``m`` coordinates.
        alpha (sequence): ``h`` coordinates.
        c (scalar): constant; must be 0 unless ``xi`` is null.

    """

    def __init__(self, space, xi, alpha, c=0):
        if len(xi) != space.dim_m or len(alpha) != space.dim_h:
            raise DimensionMismatchError(
                'point needs |m| = {} and |h| = {} coordinates, got {} and {}'
                .format(space.dim_m, space.dim_h, len(xi), len(alpha)))
        self.xi = space.convert_vector(xi)
        self.alpha = space.convert_vector(alpha)
        self.c = to_domain(c, space.domain)
        if self.c and space.metric_eval(self.xi, self.xi):
            raise ValueError('c must be 0 when <xi, xi> != 0, got c = {}'
                             .format(format_scalar(self.c)))

    def to_dict(self):
        return {'xi': [format_scalar(v) for v in self.xi],
                'alpha': [format_scalar(v) for v in self.alpha],
                'c': format_scalar(self.c)}

    def __eq__(self, other):
        if not isinstance(other, ModuliPoint):
            return NotImplemented
        return (self.xi, self.alpha, self.c) == \
            (other.xi, other.alpha, other.c)

    def __repr__(self):
        return 'ModuliPoint({xi}, {alpha}, {c})'.format(**self.to_dict())


def phi(space, point, zeta):
    """Evaluates ``phi(xi, alpha, zeta)`` exactly.

    Args:
        space (ReductiveSpace): validated space.
        point (ModuliPoint): the triple ``(xi, alpha, c)``.
        zeta (sequence): ``m`` vector.

    Returns: scalar in the domain of `space`.

    """
    zeta = space.convert_vector(zeta)
    x = add_vectors(space.from_m(point.xi), space.from_h(point.alpha))
    bracket = space.to_m(space.bracket(x, space.from_m(zeta)))
    value = space.metric_eval(bracket, point.xi)
    if point.c:
        value -= point.c * space.metric_eval(point.xi, zeta)
    return value


def omega_member(space, point):
    """Whether `point` lies on the moduli variety of `space`.

    Over a rational space this is the real variety, over a Gaussian space
    its complexification.
    """
    return all(not phi(space, point, space.m_basis_vector(j))
               for j in range(space.dim_m))


def _check_nonzero(xi):
    if not any(xi):
        raise ZeroVectorError('xi must be nonzero')


def geodesic_system(space, xi):
    """Linear system whose solutions are the ``(alpha, c)`` for `xi`.

    Unknowns are the ``h`` coordinates of ``alpha``, followed by ``c`` when
    ``<xi, xi> = 0``. Row ``j`` reads

        sum_a alpha_a <[h_a, zeta_j]_m, xi> - c <xi, zeta_j>
            = -<[xi, zeta_j]_m, xi>

    Args:
        space (ReductiveSpace): validated space.
        xi (sequence): nonzero ``m`` vector.

    Returns (tuple): ``(A, b)`` with ``A`` a :class:`Matrix`.

    """
    xi = space.convert_vector(xi)
    if len(xi) != space.dim_m:
        raise DimensionMismatchError('xi must have length {}, got {}'
                                     .format(space.dim_m, len(xi)))
    _check_nonzero(xi)
    null = not space.metric_eval(xi, xi)
    q_xi = space.metric.dot(xi)
    ads = [space.ad_h(a) for a in range(space.dim_h)]
    rows = []
    rhs = []
    for j in range(space.dim_m):
        zeta = space.m_basis_vector(j)
        row = [sum((u * v for u, v in zip(ad.column(j), q_xi)),
                   space.domain.zero) for ad in ads]
        if null:
            row.append(-q_xi[j])
        rows.append(row)
        rhs.append(-space.metric_eval(space.bracket_m(xi, zeta), xi))
    cols = space.dim_h + (1 if null else 0)
    return Matrix(rows, space.domain, cols=cols), tuple(rhs)


def solve_geodesic_vector(space, xi, return_rank=False):
    """Finds ``(alpha, c)`` making ``xi + alpha`` a geodesic vector.

    Args:
        space (ReductiveSpace): validated space.
        xi (sequence): nonzero ``m`` vector.
        return_rank (bool): If `True`, also returns
            ``(rank([A|b]), rank(A))`` of the geodesic system.

    Returns (ModuliPoint or None): the point, or `None` if no ``alpha``
        exists.

    """
    xi = space.convert_vector(xi)
    a, b = geodesic_system(space, xi)
    solution, ranks = solve_linear(a, b, return_rank=True)
    point = None
    if solution is not None:
        alpha = solution[:space.dim_h]
        c = solution[space.dim_h] if a.cols > space.dim_h else 0
        point = ModuliPoint(space, xi, alpha, c)
    if return_rank:
        return point, ranks
    return point
