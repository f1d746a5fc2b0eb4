import os

import pytest

from gospace.config import DEFAULT_CATALOG_DIR
from gospace.family.crown import complexify
from gospace.geodesic.samplers import enumeration_prefix
from gospace.geodesic.samplers import null_vectors
from gospace.geodesic.samplers import random_m_vector
from gospace.geodesic.samplers import REFUTE_STREAM
from gospace.geodesic.samplers import SAMPLE_STREAM
from gospace.liespace.reductive_space import ReductiveSpace
from gospace.liespace.space_io import load_space


@pytest.fixture
def sphere2():
    return load_space(os.path.join(DEFAULT_CATALOG_DIR, 'sphere2.json'))


def test_enumeration_prefix(sphere2):
    prefix = enumeration_prefix(sphere2)
    assert [[int(v) for v in xi] for xi in prefix] == \
        [[1, 0], [0, 1], [1, 1], [1, -1]]


def test_random_vector_deterministic(sphere2):
    a = random_m_vector(sphere2, 0, REFUTE_STREAM, 5, 10)
    b = random_m_vector(sphere2, 0, REFUTE_STREAM, 5, 10)
    assert a == b
    assert any(a)
    assert all(-10 <= v <= 10 for v in a)


def test_random_vector_streams_differ(sphere2):
    draws = [random_m_vector(sphere2, 0, stream, i, 10)
             for stream in (REFUTE_STREAM, SAMPLE_STREAM) for i in range(20)]
    assert draws[:20] != draws[20:]


def test_random_vector_gaussian(sphere2):
    crown = complexify(sphere2)
    vectors = [random_m_vector(crown, 1, SAMPLE_STREAM, i, 10)
               for i in range(10)]
    assert any(v.y for xi in vectors for v in xi)


def test_null_vectors(sphere2):
    assert null_vectors(sphere2) == []
    crown = complexify(sphere2)
    nulls = null_vectors(crown)
    assert len(nulls) == 2
    for xi in nulls:
        assert any(xi)
        assert crown.metric_eval(xi, xi) == 0


def test_random_vector_needs_nonzero_draws(sphere2):
    point = ReductiveSpace('point', 'rational', ['t'], {}, [0], [])
    with pytest.raises(ValueError):
        random_m_vector(point, 0, REFUTE_STREAM, 0, 10)
    with pytest.raises(ValueError):
        random_m_vector(sphere2, 0, REFUTE_STREAM, 0, 0)


if __name__ == '__main__':
    pytest.main([__file__, '-v', '-s'])
