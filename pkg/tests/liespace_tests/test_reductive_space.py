import os

import pytest

from gospace.config import DEFAULT_CATALOG_DIR
from gospace.exactla.matrix import DimensionMismatchError
from gospace.exactla.scalar import QQ
from gospace.liespace.reductive_space import DegenerateMetricError
from gospace.liespace.reductive_space import ReductiveSpace
from gospace.liespace.reductive_space import Tag
from gospace.liespace.space_io import load_space


def _load(name):
    return load_space(os.path.join(DEFAULT_CATALOG_DIR, name + '.json'))


@pytest.fixture
def sphere2():
    return _load('sphere2')


@pytest.fixture
def heisenberg():
    return _load('heisenberg-wsym')


def test_decomposition(sphere2):
    assert sphere2.isotropy == (2,)
    assert sphere2.complement == (0, 1)
    assert sphere2.dim_m == 2
    assert sphere2.dim_h == 1


def test_structure_antisymmetric(heisenberg):
    assert heisenberg.structure_constant(0, 1, 2) == QQ(1)
    assert heisenberg.structure_constant(1, 0, 2) == QQ(-1)
    assert heisenberg.structure_constant(3, 0, 1) == QQ(1)


def test_bracket(heisenberg):
    e = heisenberg.basis_vector
    assert heisenberg.bracket(e(0), e(1)) == e(2)
    assert heisenberg.bracket(e(3), e(1)) == tuple(-v for v in e(0))
    assert heisenberg.bracket_m(heisenberg.m_basis_vector(0),
                                heisenberg.m_basis_vector(1)) == \
        heisenberg.m_basis_vector(2)


def test_ad_h(sphere2):
    # [e2, e0] = e1 and [e2, e1] = -e0
    assert sphere2.ad_h(0).tolist() == [['0', '-1'], ['1', '0']]


def test_signature(sphere2):
    assert sphere2.signature() == (2, 0)
    assert sphere2.is_riemannian()


def test_signature_split():
    space = ReductiveSpace('split', 'rational', ['a', 'b'], {}, [],
                           [[0, 1], [1, 0]])
    assert space.signature() == (1, 1)
    assert not space.is_riemannian()


def test_signature_degenerate():
    space = ReductiveSpace('flat', 'rational', ['a', 'b'], {}, [],
                           [[1, 0], [0, 0]])
    with pytest.raises(DegenerateMetricError):
        space.signature()


def test_signature_gaussian(sphere2):
    crown = sphere2.copy(name='crown', field='gaussian')
    assert crown.signature() == (2, 2)


def test_symmetric_pair(sphere2, heisenberg):
    assert sphere2.is_symmetric_pair() == (True, None)
    assert heisenberg.is_symmetric_pair() == (False, (0, 1))


def test_metric_shape_mismatch():
    with pytest.raises(DimensionMismatchError):
        ReductiveSpace('bad', 'rational', ['a', 'b'], {}, [], [[1]])


def test_invalid_bracket_pair():
    with pytest.raises(IndexError):
        ReductiveSpace('bad', 'rational', ['a', 'b'], {(1, 0): {0: 1}}, [],
                       [[1, 0], [0, 1]])


def test_tag():
    assert Tag(True, 'x').is_true()
    assert Tag(False).is_false()
    assert not Tag().is_true()
    with pytest.raises(ValueError):
        Tag('yes')


if __name__ == '__main__':
    pytest.main([__file__, '-v', '-s'])
