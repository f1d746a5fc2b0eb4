import numpy
import pytest

from gospace.exactla.matrix import DimensionMismatchError
from gospace.exactla.matrix import kernel_basis
from gospace.exactla.matrix import Matrix
from gospace.exactla.matrix import rank
from gospace.exactla.matrix import solve_linear
from gospace.exactla.scalar import QQ
from gospace.exactla.scalar import QQ_I


def _random_matrix(random_state, rows, cols, domain=QQ):
    values = random_state.randint(-3, 4, size=(rows, cols))
    return Matrix([[int(v) for v in row] for row in values], domain,
                  cols=cols)


def test_solve_identity():
    x = solve_linear(Matrix.identity(2, QQ), [3, 5])
    assert x == (QQ(3), QQ(5))


def test_solve_inconsistent():
    a = Matrix([[1, 1], [2, 2]], QQ)
    x, ranks = solve_linear(a, [1, 3], return_rank=True)
    assert x is None
    assert ranks == (2, 1)


def test_solve_free_variable_zeroed():
    a = Matrix([[1, 1], [2, 2]], QQ)
    assert solve_linear(a, [1, 2]) == (QQ(1), QQ(0))


def test_solve_dimension_mismatch():
    with pytest.raises(DimensionMismatchError):
        solve_linear(Matrix.identity(2, QQ), [1, 2, 3])


def test_solve_empty_system():
    a = Matrix([], QQ, cols=2)
    assert solve_linear(a, []) == (QQ(0), QQ(0))


@pytest.mark.parametrize('seed', range(10))
@pytest.mark.parametrize('shape', [(3, 3), (4, 2), (2, 5)])
def test_solve_constructed(seed, shape):
    random_state = numpy.random.RandomState(seed)
    a = _random_matrix(random_state, *shape)
    x0 = [int(v) for v in random_state.randint(-5, 6, size=shape[1])]
    b = a.dot([QQ(v) for v in x0])
    x = solve_linear(a, b)
    assert x is not None
    assert a.dot(x) == b


def test_rank():
    assert rank(Matrix.zeros(3, 3, QQ)) == 0
    assert rank(Matrix.identity(4, QQ)) == 4
    a = Matrix([[1, QQ_I(0, 1)], [QQ_I(0, 1), -1]], QQ_I)
    assert rank(a) == 1


@pytest.mark.parametrize('seed', range(5))
def test_rank_field_extension(seed):
    a = _random_matrix(numpy.random.RandomState(seed), 4, 5)
    assert rank(a) == rank(a.convert(QQ_I))


def test_kernel_basis():
    assert kernel_basis(Matrix.identity(3, QQ)) == []
    assert len(kernel_basis(Matrix.zeros(2, 3, QQ))) == 3
    assert kernel_basis(Matrix([[1, 1]], QQ)) == [(QQ(-1), QQ(1))]


@pytest.mark.parametrize('seed', range(10))
def test_kernel_basis_random(seed):
    a = _random_matrix(numpy.random.RandomState(seed), 3, 5)
    basis = kernel_basis(a)
    assert len(basis) == a.cols - rank(a)
    for v in basis:
        assert not any(a.dot(v))
    if basis:
        assert rank(Matrix(basis, QQ)) == len(basis)


def test_matrix_operations():
    a = Matrix([[1, 2], [3, 4]], QQ)
    assert a.transpose() == Matrix([[1, 3], [2, 4]], QQ)
    assert a @ Matrix.identity(2, QQ) == a
    assert a.tolist() == [['1', '2'], ['3', '4']]
    assert not a.is_symmetric()
    z = Matrix([[QQ_I(1, 1)]], QQ_I)
    assert z.conjugate() == Matrix([[QQ_I(1, -1)]], QQ_I)


def test_matrix_ragged_rows():
    with pytest.raises(DimensionMismatchError):
        Matrix([[1, 2], [3]], QQ)


if __name__ == '__main__':
    pytest.main([__file__, '-v', '-s'])
