import os

import pytest

from gospace.config import DEFAULT_CATALOG_DIR
from gospace.family.family import family_verify
from gospace.family.family import load_family
from gospace.family.family import parse_family
from gospace.liespace.space_io import SpaceFormatError


@pytest.fixture(scope='module')
def sphere_family():
    return load_family(os.path.join(DEFAULT_CATALOG_DIR,
                                    'sphere-family.json'))


def test_load_family(sphere_family):
    assert sphere_family.name == 'sphere-family'
    assert sphere_family.crown.name == 'sphere2-crown'
    assert [m.name for m in sphere_family.members] == ['S2', 'dS2', 'H2']
    assert [m.space.signature() for m in sphere_family.members] == \
        [(2, 0), (1, 1), (0, 2)]
    assert len(sphere_family.spaces()) == 4


def test_family_verify(sphere_family):
    report = family_verify(sphere_family, samples=50, d_max=2)
    assert report['violations'] == []
    assert all(s['matches_crown'] for s in report['members'])
    summaries = report['members'] + [report['crown']]
    assert all(s['go']['mode'] == 'certified_linear' for s in summaries)
    assert all(s['natred'] for s in summaries)
    assert all(s['invariant_dims'] == [1, 0, 1] for s in summaries)
    assert not any(s['commutator_refuted'] for s in summaries)


def test_singleton_refuted_family():
    params = {'name': 'su2-123-family', 'crown': 'su2-123.json',
              'members': [{'name': 'su2-123', 'space': 'su2-123.json'}]}
    family = parse_family(params, catalog_dir=DEFAULT_CATALOG_DIR)
    report = family_verify(family, samples=50, d_max=1)
    assert report['violations'] == []
    assert report['members'][0]['go']['mode'] == 'refuted'
    assert report['crown']['go']['mode'] == 'refuted'
    assert report['crown']['natred'] is False


def test_heisenberg_family():
    params = {'name': 'heisenberg-family', 'crown': 'heisenberg-wsym.json',
              'members': [{'name': 'H', 'conjugation': [
                  ['1', '0', '0', '0'], ['0', '1', '0', '0'],
                  ['0', '0', '1', '0'], ['0', '0', '0', '1']]}]}
    family = parse_family(params, catalog_dir=DEFAULT_CATALOG_DIR)
    report = family_verify(family, samples=50, d_max=2)
    assert report['violations'] == []
    assert report['crown']['go']['mode'] == 'certified_linear'


@pytest.mark.parametrize('params', [
    [],
    {'name': 'f', 'crown': 'sphere2.json'},
    {'name': 'f', 'crown': 'sphere2.json', 'members': [], 'extra': 1},
    {'name': 'f', 'crown': 'missing.json', 'members': []},
    {'name': 'f', 'crown': 'sphere2.json',
     'members': [{'name': 'a'}]},
    {'name': 'f', 'crown': 'sphere2.json',
     'members': [{'name': 'a', 'space': 'sphere2.json'},
                 {'name': 'a', 'space': 'sphere2.json'}]},
])
def test_parse_family_invalid(params):
    with pytest.raises(SpaceFormatError):
        parse_family(params, catalog_dir=DEFAULT_CATALOG_DIR)


def test_load_family_missing(tmpdir):
    with pytest.raises(SpaceFormatError):
        load_family(os.path.join(str(tmpdir), 'none.json'))


if __name__ == '__main__':
    pytest.main([__file__, '-v', '-s'])
