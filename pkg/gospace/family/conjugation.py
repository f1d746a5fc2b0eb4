"""Conjugations of a crown: anti-linear involutive isometric automorphisms."""
from gospace.exactla.matrix import DimensionMismatchError
from gospace.exactla.matrix import Matrix
from gospace.exactla.scalar import conjugate
from gospace.exactla.scalar import QQ_I
from gospace.liespace.validation import ValidationReport


class ConjugationError(ValueError):
    pass


class Conjugation(object):
    """The map ``sigma(v) = S conj(v)`` on the crown's ``g``.

    Args:
        matrix (Matrix or list): ``S`` on the crown basis; columns are the
            images of the basis vectors.

    """

    def __init__(self, matrix):
        if not isinstance(matrix, Matrix):
            matrix = Matrix(matrix, QQ_I)
        elif matrix.domain != QQ_I:
            matrix = matrix.convert(QQ_I)
        if matrix.rows != matrix.cols:
            raise DimensionMismatchError(
                'conjugation matrix must be square, got {}'
                .format(matrix.shape))
        self.matrix = matrix

    @classmethod
    def identity(cls, n):
        """Plain complex conjugation."""
        return cls(Matrix.identity(n, QQ_I))

    @classmethod
    def diagonal(cls, entries):
        n = len(entries)
        return cls([[entries[i] if i == j else 0 for j in range(n)]
                    for i in range(n)])

    @classmethod
    def from_strings(cls, rows):
        return cls(Matrix.from_strings(rows, QQ_I))

    @property
    def dim(self):
        return self.matrix.rows

    def __call__(self, v):
        return self.matrix.dot([conjugate(x) for x in v])

    def to_dict(self):
        return {'matrix': self.matrix.tolist()}

    def __repr__(self):
        return 'Conjugation({})'.format(self.matrix.tolist())


def validate_conjugation(crown, sigma):
    """Checks the four conjugation properties exactly on basis elements.

    'involutive' (``S conj(S) = I``), 'automorphism'
    (``sigma [e_a, e_b] = [sigma e_a, sigma e_b]``), 'isotropy' and
    'complement' (``h`` and ``m`` are preserved) and 'isometry'
    (``<sigma xi, sigma zeta> = conj <xi, zeta>``).

    Args:
        crown (ReductiveSpace): space over the Gaussian rationals.
        sigma (Conjugation): candidate conjugation.

    Returns (ValidationReport): failures with witnesses.

    """
    if crown.is_rational():
        raise ConjugationError('{} is not a crown'.format(crown.name))
    if sigma.dim != crown.dim:
        raise DimensionMismatchError(
            'conjugation of size {} on a {}-dimensional crown'
            .format(sigma.dim, crown.dim))
    report = ValidationReport(crown.name)
    s = sigma.matrix
    if s.matmul(s.conjugate()) != Matrix.identity(crown.dim, QQ_I):
        report.add('involutive', (), 'S conj(S) is not the identity')

    images = [s.column(a) for a in range(crown.dim)]
    for a in range(crown.dim):
        for b in range(a + 1, crown.dim):
            left = sigma(crown.bracket(crown.basis_vector(a),
                                       crown.basis_vector(b)))
            if left != crown.bracket(images[a], images[b]):
                report.add('automorphism', (a, b),
                           'sigma does not preserve [e_{}, e_{}]'
                           .format(a, b))

    for a in crown.isotropy:
        if any(crown.to_m(images[a])):
            report.add('isotropy', (a,), 'sigma moves h_{} out of h'
                       .format(a))
    for k in crown.complement:
        if any(crown.to_h(images[k])):
            report.add('complement', (k,), 'sigma moves e_{} out of m'
                       .format(k))

    m_images = [crown.to_m(images[k]) for k in crown.complement]
    for p in range(crown.dim_m):
        for q in range(p, crown.dim_m):
            value = crown.metric_eval(m_images[p], m_images[q])
            if value != conjugate(crown.metric[p, q]):
                report.add('isometry', (crown.complement[p],
                                        crown.complement[q]),
                           'sigma is not isometric on this pair')
    return report
