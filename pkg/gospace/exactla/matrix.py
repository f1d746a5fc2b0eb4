"""Dense exact matrices and the three solvers everything else rests on.

Elimination is delegated to sympy's ``DomainMatrix``; `Matrix` is a small
immutable row store which also admits empty shapes.
"""
from sympy.polys.matrices import DomainMatrix

from gospace.exactla.scalar import conjugate as conjugate_scalar
from gospace.exactla.scalar import format_scalar
from gospace.exactla.scalar import parse_scalar
from gospace.exactla.scalar import to_domain


class DimensionMismatchError(ValueError):
    pass


class Matrix(object):
    """Immutable dense matrix over ``QQ`` or ``QQ_I``.

    Args:
        rows (list): list of rows, each a sequence of scalars (ints and
            domain elements are accepted).
        domain: sympy domain of the entries.
        cols (int or None): number of columns. Required only when `rows` is
            empty.

    """

    def __init__(self, rows, domain, cols=None):
        rows = [tuple(to_domain(v, domain) for v in row) for row in rows]
        if cols is None:
            cols = len(rows[0]) if rows else 0
        for i, row in enumerate(rows):
            if len(row) != cols:
                raise DimensionMismatchError(
                    'row {} has length {}, expected {}'
                    .format(i, len(row), cols))
        self._rows = tuple(rows)
        self.domain = domain
        self.shape = (len(rows), cols)

    @classmethod
    def zeros(cls, rows, cols, domain):
        return cls([[domain.zero] * cols for _ in range(rows)], domain,
                   cols=cols)

    @classmethod
    def identity(cls, n, domain):
        return cls([[domain.one if i == j else domain.zero
                     for j in range(n)] for i in range(n)], domain, cols=n)

    @classmethod
    def from_columns(cls, columns, domain, rows=None):
        if rows is None:
            rows = len(columns[0]) if columns else 0
        return cls([[columns[j][i] for j in range(len(columns))]
                    for i in range(rows)], domain, cols=len(columns))

    @classmethod
    def from_strings(cls, rows, domain, cols=None):
        """Builds a matrix from nested lists of scalar strings."""
        return cls([[parse_scalar(v, domain) for v in row] for row in rows],
                   domain, cols=cols)

    @property
    def rows(self):
        return self.shape[0]

    @property
    def cols(self):
        return self.shape[1]

    @property
    def entries(self):
        """Row-major tuple of all entries."""
        return tuple(v for row in self._rows for v in row)

    def row(self, i):
        return self._rows[i]

    def column(self, j):
        return tuple(row[j] for row in self._rows)

    def __getitem__(self, index):
        i, j = index
        return self._rows[i][j]

    def __eq__(self, other):
        if not isinstance(other, Matrix):
            return NotImplemented
        return self.shape == other.shape and self._rows == other._rows

    def __ne__(self, other):
        result = self.__eq__(other)
        if result is NotImplemented:
            return result
        return not result

    def __hash__(self):
        return hash((self.shape, self._rows))

    def __repr__(self):
        return 'Matrix({})'.format(self.tolist())

    def tolist(self):
        """Nested lists of scalar strings."""
        return [[format_scalar(v) for v in row] for row in self._rows]

    def transpose(self):
        return Matrix([self.column(j) for j in range(self.cols)],
                      self.domain, cols=self.rows)

    def conjugate(self):
        return Matrix([[conjugate_scalar(v) for v in row]
                       for row in self._rows], self.domain, cols=self.cols)

    def convert(self, domain):
        return Matrix(self._rows, domain, cols=self.cols)

    def dot(self, vector):
        """Matrix-vector product."""
        if len(vector) != self.cols:
            raise DimensionMismatchError(
                'vector length {} does not match {} columns'
                .format(len(vector), self.cols))
        zero = self.domain.zero
        result = []
        for row in self._rows:
            acc = zero
            for a, x in zip(row, vector):
                if a and x:
                    acc += a * x
            result.append(acc)
        return tuple(result)

    def matmul(self, other):
        if self.cols != other.rows:
            raise DimensionMismatchError(
                'cannot multiply {} by {}'.format(self.shape, other.shape))
        columns = [self.dot(other.column(j)) for j in range(other.cols)]
        return Matrix.from_columns(columns, self.domain, rows=self.rows)

    __matmul__ = matmul

    def is_zero(self):
        return not any(v for row in self._rows for v in row)

    def is_symmetric(self):
        return self.rows == self.cols and all(
            self._rows[i][j] == self._rows[j][i]
            for i in range(self.rows) for j in range(i + 1, self.cols))

    def to_domain_matrix(self):
        return DomainMatrix([list(row) for row in self._rows], self.shape,
                            self.domain)


def _rref(rows, cols, domain):
    """Returns the reduced row echelon form (as lists) and pivot columns."""
    if not rows or cols == 0:
        return [], ()
    dm = DomainMatrix([list(row) for row in rows], (len(rows), cols), domain)
    reduced, pivots = dm.rref()
    return reduced.to_list(), tuple(pivots)


def rank(a):
    """Exact rank of `a` over its domain.

    Args:
        a (Matrix): input matrix.

    Returns (int): rank

    """
    _, pivots = _rref(a._rows, a.cols, a.domain)
    return len(pivots)


def solve_linear(a, b, return_rank=False):
    """Solves ``a x = b`` exactly.

    When the solution space is positive dimensional, free variables are set
    to zero, which makes the returned solution deterministic.

    Args:
        a (Matrix): coefficient matrix.
        b (sequence): right hand side of length ``a.rows``.
        return_rank (bool): If `True`, also returns the pair
            ``(rank([a|b]), rank(a))``.

    Returns (tuple or None): solution vector, or `None` when the system is
        inconsistent.

    """
    if len(b) != a.rows:
        raise DimensionMismatchError(
            'matrix has {} rows but right hand side has length {}'
            .format(a.rows, len(b)))
    domain = a.domain
    n = a.cols
    augmented = [row + (to_domain(v, domain),) for row, v in zip(a._rows, b)]
    reduced, pivots = _rref(augmented, n + 1, domain)
    inconsistent = n in pivots
    ranks = (len(pivots), len(pivots) - 1 if inconsistent else len(pivots))
    if inconsistent:
        x = None
    else:
        x = [domain.zero] * n
        for r, p in enumerate(pivots):
            x[p] = reduced[r][n]
        x = tuple(x)
    if return_rank:
        return x, ranks
    return x


def kernel_basis(a):
    """Basis of the null space of `a`.

    Each basis vector has a 1 at one free column and zeros at the other free
    columns; vectors are ordered by their free column.

    Args:
        a (Matrix): input matrix.

    Returns (list): list of tuples, empty iff ``rank(a) == a.cols``.

    """
    domain = a.domain
    reduced, pivots = _rref(a._rows, a.cols, domain)
    basis = []
    for f in range(a.cols):
        if f in pivots:
            continue
        v = [domain.zero] * a.cols
        v[f] = domain.one
        for r, p in enumerate(pivots):
            v[p] = -reduced[r][f]
        basis.append(tuple(v))
    return basis


def zero_vector(n, domain):
    return (domain.zero,) * n


def add_vectors(u, v):
    if len(u) != len(v):
        raise DimensionMismatchError(
            'vector lengths {} and {} differ'.format(len(u), len(v)))
    return tuple(x + y for x, y in zip(u, v))
