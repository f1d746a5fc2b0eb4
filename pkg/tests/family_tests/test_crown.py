import os

import pytest

from gospace.config import DEFAULT_CATALOG_DIR
from gospace.exactla.scalar import GAUSSIAN
from gospace.exactla.scalar import QQ_I
from gospace.family.crown import complexify
from gospace.family.crown import FieldError
from gospace.liespace.space_io import load_space
from gospace.liespace.validation import validate


def _load(name):
    return load_space(os.path.join(DEFAULT_CATALOG_DIR, name + '.json'))


@pytest.mark.parametrize('name', ['sphere2', 'su2-123', 'heisenberg-wsym'])
def test_complexify(name):
    space = _load(name)
    crown = complexify(space)
    assert crown.name == name + '-crown'
    assert crown.field == GAUSSIAN
    assert crown.domain == QQ_I
    assert crown.isotropy == space.isotropy
    assert crown.metric == space.metric.convert(QQ_I)
    assert validate(crown).ok
    assert crown.signature() == (space.dim_m, space.dim_m)
    assert all(t.value == 'unknown' for t in crown.tags.values())
    assert crown.tags['symmetric'].source == \
        'complexification of {}'.format(name)


def test_complexify_name():
    assert complexify(_load('sphere2'), name='so3c').name == 'so3c'


def test_complexify_twice():
    crown = complexify(_load('sphere2'))
    with pytest.raises(FieldError):
        complexify(crown)


if __name__ == '__main__':
    pytest.main([__file__, '-v', '-s'])
