from gospace.exactla.matrix import DimensionMismatchError
from gospace.exactla.matrix import Matrix
from gospace.exactla.scalar import get_domain
from gospace.exactla.scalar import RATIONAL
from gospace.exactla.scalar import to_domain

TAG_NAMES = ('symmetric', 'weakly_symmetric', 'naturally_reductive',
             'geodesic_orbit', 'commutative', 'datri')
UNKNOWN = 'unknown'


class DegenerateMetricError(ValueError):
    pass


class Tag(object):
    """Literature metadata for one property of a space.

    Args:
        value (bool or str): `True`, `False` or ``'unknown'``.
        source (str): provenance of the value.

    """

    def __init__(self, value=UNKNOWN, source=''):
        if value not in (True, False, UNKNOWN):
            raise ValueError('tag value must be true, false or "unknown", '
                             'got {!r}'.format(value))
        self.value = value
        self.source = source

    def is_true(self):
        return self.value is True

    def is_false(self):
        return self.value is False

    def __eq__(self, other):
        if not isinstance(other, Tag):
            return NotImplemented
        return self.value == other.value and self.source == other.source

    def __repr__(self):
        return 'Tag({!r}, {!r})'.format(self.value, self.source)


class ReductiveSpace(object):
    """Homogeneous space ``G/H`` with metric, at the Lie algebra level.

    The Lie algebra ``g`` has basis ``e_0, ..., e_{dim-1}`` and brackets
    ``[e_i, e_j] = sum_k c(i, j, k) e_k``. ``h`` is spanned by the isotropy
    indices, ``m`` by the remaining (complement) indices in increasing order.

    Args:
        name (str): identifier of the space.
        field (str): 'rational' or 'gaussian'.
        basis (list): labels of the basis vectors.
        brackets (dict): ``{(i, j): {k: scalar}}`` for ``i < j`` only,
            antisymmetry is generated.
        isotropy (list): indices spanning ``h``.
        metric (Matrix or list): Gram matrix of the metric on the ``m`` basis,
            in complement order.
        tags (dict or None): property name to :class:`Tag`.

    """

    def __init__(self, name, field, basis, brackets, isotropy, metric,
                 tags=None):
        self.name = name
        self.field = field
        self.domain = get_domain(field)
        self.basis_labels = tuple(basis)
        self.dim = len(self.basis_labels)
        isotropy = tuple(sorted(set(isotropy)))
        for a in isotropy:
            if not 0 <= a < self.dim:
                raise IndexError('isotropy index {} out of range [0, {})'
                                 .format(a, self.dim))
        self.isotropy = isotropy
        self.complement = tuple(i for i in range(self.dim)
                                if i not in isotropy)
        self._m_position = {k: p for p, k in enumerate(self.complement)}
        self._h_position = {k: p for p, k in enumerate(self.isotropy)}

        zero = self.domain.zero
        structure = [[[zero] * self.dim for _ in range(self.dim)]
                     for _ in range(self.dim)]
        for (i, j), coeffs in brackets.items():
            if not 0 <= i < j < self.dim:
                raise IndexError('bracket pair ({}, {}) must satisfy '
                                 '0 <= i < j < {}'.format(i, j, self.dim))
            for k, value in coeffs.items():
                value = to_domain(value, self.domain)
                structure[i][j][k] = value
                structure[j][i][k] = -value
        self._structure = tuple(tuple(tuple(row) for row in plane)
                                for plane in structure)
        # nonzero terms only, used by the bracket
        self._terms = tuple(
            tuple(tuple((k, v) for k, v in enumerate(self._structure[i][j])
                        if v) for j in range(self.dim))
            for i in range(self.dim))

        if not isinstance(metric, Matrix):
            metric = Matrix(metric, self.domain, cols=len(self.complement))
        elif metric.domain != self.domain:
            metric = metric.convert(self.domain)
        n = len(self.complement)
        if metric.shape != (n, n):
            raise DimensionMismatchError(
                'metric must be {0}x{0} on the complement, got {1}'
                .format(n, metric.shape))
        self.metric = metric
        self.tags = dict((t, Tag()) for t in TAG_NAMES)
        if tags is not None:
            self.tags.update(tags)
        self._ad_cache = {}

    # --- structure constants ---
    def structure_constant(self, i, j, k):
        return self._structure[i][j][k]

    def bracket_table(self):
        """Nonzero brackets ``{(i, j): {k: value}}`` for ``i < j``."""
        table = {}
        for i in range(self.dim):
            for j in range(i + 1, self.dim):
                if self._terms[i][j]:
                    table[(i, j)] = dict(self._terms[i][j])
        return table

    @property
    def dim_m(self):
        return len(self.complement)

    @property
    def dim_h(self):
        return len(self.isotropy)

    def is_rational(self):
        return self.field == RATIONAL

    # --- vectors ---
    def basis_vector(self, i):
        v = [self.domain.zero] * self.dim
        v[i] = self.domain.one
        return tuple(v)

    def m_basis_vector(self, p):
        v = [self.domain.zero] * self.dim_m
        v[p] = self.domain.one
        return tuple(v)

    def to_m(self, x):
        """Coordinates of the ``m`` component of a ``g`` vector."""
        return tuple(x[k] for k in self.complement)

    def to_h(self, x):
        """Coordinates of the ``h`` component of a ``g`` vector."""
        return tuple(x[k] for k in self.isotropy)

    def from_m(self, xi):
        self._check_length(xi, self.dim_m, 'm')
        v = [self.domain.zero] * self.dim
        for k, value in zip(self.complement, xi):
            v[k] = value
        return tuple(v)

    def from_h(self, alpha):
        self._check_length(alpha, self.dim_h, 'h')
        v = [self.domain.zero] * self.dim
        for k, value in zip(self.isotropy, alpha):
            v[k] = value
        return tuple(v)

    def convert_vector(self, v):
        return tuple(to_domain(x, self.domain) for x in v)

    @staticmethod
    def _check_length(v, n, name):
        if len(v) != n:
            raise DimensionMismatchError(
                '{}-vector must have length {}, got {}'
                .format(name, n, len(v)))

    # --- operations ---
    def bracket(self, x, y):
        """Exact bilinear bracket of two ``g`` vectors."""
        self._check_length(x, self.dim, 'g')
        self._check_length(y, self.dim, 'g')
        result = [self.domain.zero] * self.dim
        for i, xi in enumerate(x):
            if not xi:
                continue
            row = self._terms[i]
            for j, yj in enumerate(y):
                if not yj:
                    continue
                coeff = xi * yj
                for k, c in row[j]:
                    result[k] += coeff * c
        return tuple(result)

    def bracket_m(self, xi, zeta):
        """``[xi, zeta]_m`` for two ``m`` vectors."""
        return self.to_m(self.bracket(self.from_m(xi), self.from_m(zeta)))

    def ad_h(self, a):
        """Matrix of ``zeta -> [h_a, zeta]_m`` on the ``m`` basis.

        Column ``p`` holds the coordinates of ``[h_a, m_p]_m``.
        """
        if a not in self._ad_cache:
            ha = self.basis_vector(self.isotropy[a])
            columns = [self.to_m(self.bracket(ha, self.from_m(
                self.m_basis_vector(p)))) for p in range(self.dim_m)]
            self._ad_cache[a] = Matrix.from_columns(
                columns, self.domain, rows=self.dim_m)
        return self._ad_cache[a]

    def metric_eval(self, xi, zeta):
        """``<xi, zeta>`` extended bilinearly, never sesquilinearly."""
        self._check_length(xi, self.dim_m, 'm')
        self._check_length(zeta, self.dim_m, 'm')
        q_zeta = self.metric.dot(zeta)
        acc = self.domain.zero
        for a, b in zip(xi, q_zeta):
            if a and b:
                acc += a * b
        return acc

    def signature(self):
        """Signature ``(p, q)`` of the metric.

        Over the rationals this is Sylvester's law of inertia applied to a
        symmetric congruence reduction. A complex bilinear form has no
        signature of its own; crowns report ``(n, n)`` with
        ``n = dim m``.

        Returns (tuple): ``(positives, negatives)``

        """
        n = self.dim_m
        if not self.is_rational():
            # rank check only
            if _congruence_inertia(self.metric, check_only=True) is None:
                raise DegenerateMetricError(
                    'metric of {} is degenerate'.format(self.name))
            return n, n
        inertia = _congruence_inertia(self.metric)
        if inertia is None:
            raise DegenerateMetricError(
                'metric of {} is degenerate'.format(self.name))
        return inertia

    def is_riemannian(self):
        return self.is_rational() and self.signature() == (self.dim_m, 0)

    def is_symmetric_pair(self):
        """Checks ``[m, m] ⊆ h``.

        Returns (tuple): ``(True, None)`` or ``(False, (p, q))`` where
            ``p < q`` are the ``m`` positions of the first pair with a
            nonzero ``m`` component.

        """
        for p in range(self.dim_m):
            for q in range(p + 1, self.dim_m):
                if any(self.bracket_m(self.m_basis_vector(p),
                                      self.m_basis_vector(q))):
                    return False, (p, q)
        return True, None

    def copy(self, name=None, field=None, tags=None):
        """Copy of this space, optionally renamed or moved to another field."""
        field = field or self.field
        domain = get_domain(field)
        return ReductiveSpace(
            name or self.name, field, self.basis_labels,
            self.bracket_table(), self.isotropy,
            self.metric.convert(domain),
            tags=dict(self.tags) if tags is None else tags)

    def __repr__(self):
        return 'ReductiveSpace({!r}, field={!r}, dim={}, isotropy={})'.format(
            self.name, self.field, self.dim, list(self.isotropy))


def _congruence_inertia(metric, check_only=False):
    """Diagonalizes a symmetric matrix by congruence and counts signs.

    Returns `None` for a degenerate matrix. With `check_only`, the sign count
    is skipped (complex entries have no sign) and ``(0, 0)`` is returned for
    a nondegenerate matrix.
    """
    m = [list(metric.row(i)) for i in range(metric.rows)]
    positives = negatives = 0
    while m:
        n = len(m)
        pivot = next((i for i in range(n) if m[i][i]), None)
        if pivot is None:
            pair = next(((i, j) for i in range(n) for j in range(n)
                         if m[i][j]), None)
            if pair is None:
                return None
            i, j = pair
            # e_i -> e_i + e_j makes the diagonal entry 2 m[i][j] nonzero
            for r in range(n):
                m[r][i] += m[r][j]
            for c in range(n):
                m[i][c] += m[j][c]
            pivot = i
        p = m[pivot][pivot]
        if not check_only:
            if p > 0:
                positives += 1
            else:
                negatives += 1
        rest = [r for r in range(n) if r != pivot]
        m = [[m[r][c] - m[r][pivot] * m[pivot][c] / p for c in rest]
             for r in rest]
    return positives, negatives
