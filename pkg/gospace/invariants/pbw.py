"""PBW normal forms in the enveloping algebra ``U(g)``.

Letters are ``g`` basis indices. The normal order puts the complement
indices first (by position in ``m``) and the isotropy indices last, so the
left ideal ``U(g) h`` is spanned by the normal monomials holding an
isotropy letter.
"""
from sympy.utilities.iterables import multiset_permutations

from gospace.exactla.scalar import format_scalar
from gospace.invariants.sym_poly import exponents_to_letters

STRATEGIES = ('leftmost', 'rightmost')


class PBWElement(object):
    """Linear combination of normal monomials.

    Args:
        terms (dict): word (tuple of ``g`` indices, in normal order) ->
            scalar. Zero coefficients are dropped.
        domain: sympy domain of the coefficients.

    """

    def __init__(self, terms, domain):
        self.domain = domain
        self.terms = dict((tuple(w), v) for w, v in terms.items() if v)

    def is_zero(self):
        return not self.terms

    def __add__(self, other):
        terms = dict(self.terms)
        for w, v in other.terms.items():
            terms[w] = terms.get(w, self.domain.zero) + v
        return PBWElement(terms, self.domain)

    def __neg__(self):
        return PBWElement(dict((w, -v) for w, v in self.terms.items()),
                          self.domain)

    def __sub__(self, other):
        return self + (-other)

    def __eq__(self, other):
        if not isinstance(other, PBWElement):
            return NotImplemented
        return self.terms == other.terms

    def __ne__(self, other):
        result = self.__eq__(other)
        if result is NotImplemented:
            return result
        return not result

    def sorted_terms(self):
        """Terms by increasing length, then by word."""
        return sorted(self.terms.items(), key=lambda t: (len(t[0]), t[0]))

    def format(self, labels):
        if not self.terms:
            return '0'
        return ' + '.join(format_term(w, v, labels)
                          for w, v in self.sorted_terms())

    def __repr__(self):
        return 'PBWElement({!r})'.format(self.terms)


def format_term(word, value, labels):
    """``(1/2, (0, 1))`` -> ``'(1/2)*x*y'``"""
    letters = '*'.join(labels[k] for k in word) or '1'
    coeff = format_scalar(value)
    if coeff == '1':
        return letters
    return '({})*{}'.format(coeff, letters)


class PBWAlgebra(object):
    """Straightening in ``U(g)`` for a :class:`ReductiveSpace`.

    Out-of-order pairs ``e_b e_a`` are rewritten as ``e_a e_b + [e_b, e_a]``
    until every word is in normal order. Normal forms of single words are
    memoized per strategy.

    Args:
        space (ReductiveSpace): validated space.

    """

    def __init__(self, space):
        self.space = space
        self.domain = space.domain
        self.letter_order = space.complement + space.isotropy
        self._rank = dict((k, r) for r, k in enumerate(self.letter_order))
        self._isotropy = frozenset(space.isotropy)
        self._cache = dict((s, {}) for s in STRATEGIES)

    def is_normal(self, word):
        return all(self._rank[a] <= self._rank[b]
                   for a, b in zip(word, word[1:]))

    def _inversion(self, word, strategy):
        positions = range(len(word) - 1)
        if strategy == 'rightmost':
            positions = reversed(positions)
        for s in positions:
            if self._rank[word[s]] > self._rank[word[s + 1]]:
                return s
        return None

    def normalize_word(self, word, strategy='leftmost'):
        """Normal form of a single word.

        Args:
            word (tuple): ``g`` indices.
            strategy (str): 'leftmost' or 'rightmost', the inversion rewritten
                first.

        Returns (dict): normal word -> scalar.

        """
        if strategy not in STRATEGIES:
            raise ValueError('strategy must be one of {}, got {}'
                             .format(STRATEGIES, strategy))
        word = tuple(word)
        cache = self._cache[strategy]
        if word in cache:
            return cache[word]
        s = self._inversion(word, strategy)
        if s is None:
            result = {word: self.domain.one}
        else:
            b, a = word[s], word[s + 1]
            head, tail = word[:s], word[s + 2:]
            result = dict(self.normalize_word(head + (a, b) + tail, strategy))
            for k in range(self.space.dim):
                c = self.space.structure_constant(b, a, k)
                if not c:
                    continue
                for w, v in self.normalize_word(head + (k,) + tail,
                                                strategy).items():
                    result[w] = result.get(w, self.domain.zero) + c * v
            result = dict((w, v) for w, v in result.items() if v)
        cache[word] = result
        return result

    def pbw_normalize(self, raw, strategy='leftmost'):
        """Normal form of a combination of raw words.

        Args:
            raw (dict or iterable): word -> scalar, or ``(word, scalar)``
                pairs.
            strategy (str): rewrite strategy.

        Returns (PBWElement): normal form.

        """
        items = raw.items() if isinstance(raw, dict) else raw
        terms = {}
        for word, value in items:
            if not value:
                continue
            for w, v in self.normalize_word(word, strategy).items():
                terms[w] = terms.get(w, self.domain.zero) + value * v
        return PBWElement(terms, self.domain)

    def multiply(self, p, q, strategy='leftmost'):
        raw = {}
        for u, x in p.terms.items():
            for w, y in q.terms.items():
                raw[u + w] = raw.get(u + w, self.domain.zero) + x * y
        return self.pbw_normalize(raw, strategy)

    def commutator(self, p, q, strategy='leftmost'):
        return self.multiply(p, q, strategy) - self.multiply(q, p, strategy)

    def symmetrize(self, poly):
        """Symmetrization of a :class:`SymPoly` into ``U(g)``.

        Each monomial becomes the average of all orderings of its letters.
        """
        raw = {}
        for exponents, value in poly.coefficients.items():
            letters = [self.space.complement[p]
                       for p in exponents_to_letters(exponents)]
            orderings = [tuple(w) for w in multiset_permutations(letters)]
            weight = value / self.domain.convert(len(orderings))
            for w in orderings:
                raw[w] = raw.get(w, self.domain.zero) + weight
        return self.pbw_normalize(raw)

    def reduce_mod_isotropy(self, element):
        """Drops the monomials holding an isotropy letter."""
        return PBWElement(
            dict((w, v) for w, v in element.terms.items()
                 if not self._isotropy.intersection(w)),
            self.domain)

    @property
    def labels(self):
        return self.space.basis_labels
