import copy
import os

import pytest

from gospace.config import DEFAULT_CATALOG_DIR
from gospace.liespace.space_io import dump_space
from gospace.liespace.space_io import load_space
from gospace.liespace.space_io import parse_space
from gospace.liespace.space_io import save_space
from gospace.liespace.space_io import SpaceFormatError
from gospace.utils.json_utils import load_json


@pytest.fixture
def params():
    return load_json(os.path.join(DEFAULT_CATALOG_DIR, 'heisenberg-wsym.json'))


def test_parse_space(params):
    space = parse_space(params)
    assert space.name == 'heisenberg-wsym'
    assert space.basis_labels == ('x', 'y', 'z', 't')
    assert space.isotropy == (3,)
    assert space.tags['weakly_symmetric'].is_true()
    assert space.tags['naturally_reductive'].value == 'unknown'


def test_dump_parse(params):
    space = parse_space(params)
    dumped = dump_space(space)
    assert dumped['brackets'] == params['brackets']
    assert dumped['metric'] == params['metric']
    again = parse_space(dumped)
    assert again.bracket_table() == space.bracket_table()
    assert again.metric == space.metric
    assert again.tags == space.tags


def test_save_load(tmpdir, params):
    space = parse_space(params)
    filepath = os.path.join(str(tmpdir), 'space.json')
    save_space(filepath, space)
    assert load_space(filepath).bracket_table() == space.bracket_table()


def _broken(params, path, value):
    params = copy.deepcopy(params)
    target = params
    for key in path[:-1]:
        target = target[key]
    target[path[-1]] = value
    return params


@pytest.mark.parametrize('path,value', [
    (('field',), 'real'),
    (('dimension',), 'four'),
    (('basis',), ['x', 'y', 'z']),
    (('basis',), ['x', 'x', 'z', 't']),
    (('brackets', 0, 'i'), 2),
    (('brackets', 0, 'j'), 7),
    (('brackets', 0, 'coeffs'), {'2': '1/0'}),
    (('brackets', 0, 'coeffs'), {'x': '1'}),
    (('isotropy',), [3, 3]),
    (('metric',), [['1', '0'], ['0', '1']]),
    (('metric', 0, 0), 'one'),
    (('name',), ['h']),
    (('field',), ['rational']),
    (('basis',), 'xyzt'),
    (('basis', 0), ['x']),
    (('basis', 0), 1),
    (('brackets',), {'i': 0, 'j': 1, 'coeffs': {}}),
    (('brackets', 0), [0, 1, {'2': '1'}]),
    (('brackets', 0, 'coeffs'), ['1']),
    (('isotropy',), 3),
    (('isotropy',), '3'),
    (('metric',), 1),
    (('metric',), ['100', '010', '001']),
    (('metric', 0), '100'),
    (('tags', 'symmetric', 'value'), 'maybe'),
])
def test_parse_space_invalid(params, path, value):
    with pytest.raises(SpaceFormatError):
        parse_space(_broken(params, path, value))


def test_parse_space_unknown_field(params):
    params['extra'] = 1
    with pytest.raises(SpaceFormatError):
        parse_space(params)


def test_parse_space_missing_field(params):
    del params['metric']
    with pytest.raises(SpaceFormatError):
        parse_space(params)


def test_parse_space_duplicate_bracket(params):
    params['brackets'].append(dict(params['brackets'][0]))
    with pytest.raises(SpaceFormatError):
        parse_space(params)


def test_load_space_missing_file(tmpdir):
    with pytest.raises(SpaceFormatError):
        load_space(os.path.join(str(tmpdir), 'missing.json'))


if __name__ == '__main__':
    pytest.main([__file__, '-v', '-s'])
