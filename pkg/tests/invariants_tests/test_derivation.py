import os

import numpy
import pytest

from gospace.config import DEFAULT_CATALOG_DIR
from gospace.exactla.scalar import QQ
from gospace.invariants.derivation import check_invariants_realform
from gospace.invariants.derivation import derivation_matrix
from gospace.invariants.derivation import invariant_basis
from gospace.invariants.derivation import invariant_dimensions
from gospace.invariants.sym_poly import monomial_count
from gospace.invariants.sym_poly import monomials
from gospace.invariants.sym_poly import SymPoly
from gospace.liespace.reductive_space import ReductiveSpace
from gospace.liespace.space_io import load_space

space_names = ['abelian-flat', 'su2-round', 'su2-123', 'su2-berger',
               'sphere2', 'heisenberg-bare', 'heisenberg-wsym']


def _load(name):
    return load_space(os.path.join(DEFAULT_CATALOG_DIR, name + '.json'))


def test_monomials_graded_lex():
    assert monomials(2, 2) == [(2, 0), (1, 1), (0, 2)]
    assert monomials(3, 0) == [(0, 0, 0)]
    assert len(monomials(3, 4)) == monomial_count(3, 4) == 15


def test_derivation_degree_zero():
    assert derivation_matrix(_load('sphere2'), 0, 0).tolist() == [['0']]


def test_derivation_degree_one():
    assert derivation_matrix(_load('sphere2'), 0, 1).tolist() == \
        [['0', '-1'], ['1', '0']]


@pytest.mark.parametrize('d', [0, 1, 2, 3])
def test_derivation_trivial_action(d):
    space = ReductiveSpace('flat', 'rational', ['a', 'b', 'h'], {}, [2],
                           [[1, 0], [0, 1]])
    assert derivation_matrix(space, 0, d).is_zero()


def _product(u, v):
    """Coefficients of the product of two linear forms."""
    n = len(u)
    result = {}
    for p in range(n):
        for q in range(n):
            e = [0] * n
            e[p] += 1
            e[q] += 1
            result[tuple(e)] = result.get(tuple(e), QQ(0)) + u[p] * v[q]
    return SymPoly(n, 2, result, QQ).to_vector()


@pytest.mark.parametrize('name', ['sphere2', 'heisenberg-wsym'])
def test_leibniz(name):
    space = _load(name)
    d1 = derivation_matrix(space, 0, 1)
    d2 = derivation_matrix(space, 0, 2)
    random_state = numpy.random.RandomState(0)
    for _ in range(5):
        u = [QQ(int(v)) for v in random_state.randint(-3, 4, space.dim_m)]
        v = [QQ(int(w)) for w in random_state.randint(-3, 4, space.dim_m)]
        left = d2.dot(_product(u, v))
        right = [a + b for a, b in zip(_product(d1.dot(u), v),
                                       _product(u, d1.dot(v)))]
        assert list(left) == right


def test_invariant_basis_no_isotropy():
    space = _load('su2-round')
    assert len(invariant_basis(space, 2)) == monomial_count(3, 2)


def test_invariant_basis_sphere2():
    space = _load('sphere2')
    assert invariant_basis(space, 1) == []
    basis = invariant_basis(space, 2)
    assert basis == [SymPoly(2, 2, {(2, 0): QQ(1), (0, 2): QQ(1)}, QQ)]
    assert basis[0].format(['x', 'y']) == 'x^2 + y^2'


def test_invariant_dimensions_sphere2():
    assert invariant_dimensions(_load('sphere2'), 4) == [1, 0, 1, 0, 1]


def test_invariant_basis_heisenberg():
    space = _load('heisenberg-wsym')
    assert invariant_basis(space, 1) == \
        [SymPoly(3, 1, {(0, 0, 1): QQ(1)}, QQ)]
    assert len(invariant_basis(space, 2)) == 2


def test_invariant_basis_negative_degree():
    with pytest.raises(ValueError):
        invariant_basis(_load('sphere2'), -1)


@pytest.mark.parametrize('name', space_names)
def test_invariants_realform(name):
    report = check_invariants_realform(_load(name), 3)
    assert report['consistent']
    assert report['dims'] == report['crown_dims']


def test_invariants_realform_sphere2():
    report = check_invariants_realform(_load('sphere2'), 4)
    assert report['crown_dims'] == [1, 0, 1, 0, 1]


if __name__ == '__main__':
    pytest.main([__file__, '-v', '-s'])
