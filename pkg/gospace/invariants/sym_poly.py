from itertools import combinations_with_replacement

from scipy.special import comb

from gospace.exactla.scalar import format_scalar


def monomial_count(n, d):
    """Number of degree `d` monomials in `n` variables."""
    if n == 0:
        return 1 if d == 0 else 0
    return int(comb(n + d - 1, d, exact=True))


def monomials(n, d):
    """Degree `d` exponent tuples in `n` variables, graded-lex order.

    ``x0^2`` comes before ``x0 x1``, which comes before ``x1^2``.
    """
    result = []
    for letters in combinations_with_replacement(range(n), d):
        exponents = [0] * n
        for p in letters:
            exponents[p] += 1
        result.append(tuple(exponents))
    return result


def exponents_to_letters(exponents):
    """``(2, 0, 1)`` -> ``(0, 0, 2)``"""
    return tuple(p for p, e in enumerate(exponents) for _ in range(e))


def letters_to_exponents(letters, n):
    exponents = [0] * n
    for p in letters:
        exponents[p] += 1
    return tuple(exponents)


class SymPoly(object):
    """Homogeneous element of the symmetric algebra ``S(m)``.

    Args:
        n (int): number of variables (``dim m``).
        degree (int): total degree of every monomial.
        coefficients (dict): exponent tuple -> scalar. Zero coefficients are
            dropped.
        domain: sympy domain of the coefficients.

    """

    def __init__(self, n, degree, coefficients, domain):
        self.n = n
        self.degree = degree
        self.domain = domain
        terms = {}
        for exponents, value in coefficients.items():
            exponents = tuple(exponents)
            if len(exponents) != n or sum(exponents) != degree:
                raise ValueError('monomial {} is not of degree {} in {} '
                                 'variables'.format(exponents, degree, n))
            if value:
                terms[exponents] = value
        self.coefficients = terms

    @classmethod
    def from_vector(cls, n, degree, vector, domain):
        """Polynomial with coordinates `vector` on :func:`monomials`."""
        return cls(n, degree, dict(zip(monomials(n, degree), vector)),
                   domain)

    def to_vector(self):
        return tuple(self.coefficients.get(e, self.domain.zero)
                     for e in monomials(self.n, self.degree))

    def is_zero(self):
        return not self.coefficients

    def __eq__(self, other):
        if not isinstance(other, SymPoly):
            return NotImplemented
        return (self.n, self.degree, self.coefficients) == \
            (other.n, other.degree, other.coefficients)

    def __ne__(self, other):
        result = self.__eq__(other)
        if result is NotImplemented:
            return result
        return not result

    def format(self, labels=None):
        """Human readable form such as ``x^2 + y^2``."""
        if not self.coefficients:
            return '0'
        labels = labels or ['x{}'.format(p) for p in range(self.n)]
        parts = []
        for exponents in monomials(self.n, self.degree):
            if exponents not in self.coefficients:
                continue
            factors = [labels[p] if e == 1 else '{}^{}'.format(labels[p], e)
                       for p, e in enumerate(exponents) if e]
            coeff = format_scalar(self.coefficients[exponents])
            if not factors:
                parts.append(coeff)
            elif coeff == '1':
                parts.append('*'.join(factors))
            else:
                parts.append('({})*{}'.format(coeff, '*'.join(factors)))
        return ' + '.join(parts)

    def __repr__(self):
        return 'SymPoly({})'.format(self.format())
