import os

import pytest

from gospace.config import DEFAULT_CATALOG_DIR
from gospace.exactla.matrix import Matrix
from gospace.exactla.scalar import QQ
from gospace.family.crown import complexify
from gospace.geodesic.go_checker import certify_go_linear
from gospace.geodesic.go_checker import check_crown_go_consistency
from gospace.geodesic.go_checker import check_go
from gospace.geodesic.go_checker import check_omega_realform
from gospace.geodesic.go_checker import is_linear_section
from gospace.geodesic.go_checker import refute_go
from gospace.geodesic.go_checker import sample_go
from gospace.geodesic.go_checker import verify_graph_map
from gospace.geodesic.moduli import solve_geodesic_vector
from gospace.geodesic.verdict import CERTIFIED
from gospace.geodesic.verdict import INCONCLUSIVE
from gospace.geodesic.verdict import REFUTED
from gospace.geodesic.verdict import SAMPLED
from gospace.liespace.reductive_space import ReductiveSpace
from gospace.liespace.space_io import load_space

space_names = ['abelian-flat', 'su2-round', 'su2-123', 'su2-berger',
               'sphere2', 'heisenberg-bare', 'heisenberg-wsym']
certified_names = ['abelian-flat', 'su2-round', 'sphere2', 'heisenberg-wsym']
refuted_names = ['su2-123', 'su2-berger', 'heisenberg-bare']


def _load(name):
    return load_space(os.path.join(DEFAULT_CATALOG_DIR, name + '.json'))


@pytest.mark.parametrize('name,witness', [
    ('su2-123', (1, 1, 0)),
    ('heisenberg-bare', (1, 0, 1)),
])
def test_refute_in_prefix(name, witness):
    space = _load(name)
    verdict = refute_go(space, budget=0)
    assert verdict.mode == REFUTED
    assert verdict.witness == tuple(QQ(v) for v in witness)
    assert verdict.ranks == (1, 0)
    assert verdict.extra['enumerated'] == 9


@pytest.mark.parametrize('name', refuted_names)
def test_refutation_sound(name):
    space = _load(name)
    verdict = refute_go(space)
    augmented, coefficient = verdict.ranks
    assert augmented == coefficient + 1
    assert solve_geodesic_vector(space, verdict.witness) is None


@pytest.mark.parametrize('name', certified_names)
def test_refute_none(name):
    assert refute_go(_load(name), budget=50) is None


def test_certify_heisenberg():
    verdict = certify_go_linear(_load('heisenberg-wsym'))
    assert verdict.mode == CERTIFIED
    assert verdict.graph_map.tolist() == [['0', '0', '1']]


def test_certify_symmetric_pair():
    verdict = certify_go_linear(_load('sphere2'))
    assert verdict.graph_map.tolist() == [['0', '0']]


def test_certify_trivial_isotropy():
    verdict = certify_go_linear(_load('su2-round'))
    assert verdict.graph_map.shape == (0, 3)
    assert certify_go_linear(_load('su2-123')) is None


@pytest.mark.parametrize('name', certified_names)
def test_certificate_sound(name):
    space = _load(name)
    verdict = certify_go_linear(space)
    assert is_linear_section(space, verdict.graph_map)
    assert verify_graph_map(space, verdict.graph_map, n=1000) == 0


def test_wrong_graph_map():
    space = _load('heisenberg-wsym')
    zero = Matrix([[0, 0, 0]], space.domain)
    assert not is_linear_section(space, zero)
    assert verify_graph_map(space, zero, n=50) > 0


@pytest.mark.parametrize('name', space_names)
def test_certificate_transfers_to_crown(name):
    space = _load(name)
    real = certify_go_linear(space)
    crown = certify_go_linear(complexify(space))
    assert (real is None) == (crown is None)
    if real is not None:
        assert real.graph_map.tolist() == crown.graph_map.tolist()


def test_check_go_auto():
    verdict = check_go(_load('sphere2'))
    assert verdict.mode == CERTIFIED
    assert verdict.tested == 1000
    assert verdict.failed == 0
    assert check_go(_load('su2-123')).mode == REFUTED


def test_check_go_modes():
    space = _load('su2-123')
    assert check_go(space, mode='certify').mode == INCONCLUSIVE
    verdict = check_go(_load('sphere2'), mode='refute', samples=20)
    assert verdict.mode == SAMPLED
    assert verdict.tested == 20
    with pytest.raises(ValueError):
        check_go(space, mode='prove')


@pytest.mark.parametrize('n_jobs', [1, 4])
def test_check_go_thread_independent(n_jobs):
    space = _load('heisenberg-bare')
    expected = check_go(space, mode='refute', n_jobs=1).to_dict()
    assert check_go(space, mode='refute', n_jobs=n_jobs).to_dict() == expected


def test_verdict_to_dict():
    report = check_go(_load('su2-123')).to_dict()
    assert list(report) == ['space', 'mode', 'witness', 'ranks', 'samples']
    assert report['witness'] == ['1', '1', '0']
    assert report['ranks'] == {'augmented': 1, 'coefficient': 0}
    report = check_go(_load('heisenberg-wsym')).to_dict()
    assert report['graph_map'] == [['0', '0', '1']]
    assert 'caveat' in report


def test_sample_crown_sphere2():
    crown = complexify(_load('sphere2'))
    verdict = sample_go(crown, n=200)
    assert verdict.mode == SAMPLED
    assert verdict.tested == 200
    assert verdict.failed == 0
    assert verdict.extra['null'] == 2


def test_sample_crown_su2_123():
    verdict = sample_go(complexify(_load('su2-123')), n=200)
    assert verdict.mode == REFUTED


def test_sample_abelian_crown():
    verdict = sample_go(complexify(_load('abelian-flat')), n=50)
    assert verdict.mode == SAMPLED


def test_sample_invalid_count():
    with pytest.raises(ValueError):
        sample_go(_load('sphere2'), n=0)


@pytest.mark.parametrize('name', space_names)
def test_omega_realform(name):
    report = check_omega_realform(_load(name), n=200)
    assert report['discrepancies'] == 0
    assert report['members'] + report['non_members'] == 200


def test_omega_realform_mixes_members():
    report = check_omega_realform(_load('heisenberg-wsym'), n=200)
    assert report['members'] > 0
    assert report['non_members'] > 0


def test_omega_realform_rejects_crown():
    with pytest.raises(ValueError):
        check_omega_realform(complexify(_load('sphere2')))


@pytest.mark.parametrize('name,mode', [
    ('sphere2', CERTIFIED),
    ('su2-123', REFUTED),
    ('heisenberg-wsym', CERTIFIED),
])
def test_crown_go_consistency(name, mode):
    report = check_crown_go_consistency(_load(name), budget=50)
    assert not report['violation']
    assert report['real']['mode'] == mode
    assert report['crown']['mode'] == mode


@pytest.fixture
def point():
    # isotropy is the whole algebra, so m is trivial
    return ReductiveSpace('point', 'rational', ['t'], {}, [0], [])


@pytest.mark.parametrize('mode', ['auto', 'certify', 'refute', 'sample'])
def test_check_go_trivial_complement(point, mode):
    verdict = check_go(point, mode=mode, samples=10, seed=3)
    assert verdict.mode == CERTIFIED
    assert verdict.tested == 0
    assert verdict.failed == 0
    assert verdict.seed == 3
    assert verdict.graph_map.shape == (1, 0)


def test_trivial_complement_helpers(point):
    assert refute_go(point, budget=10) is None
    assert verify_graph_map(point, Matrix.zeros(1, 0, QQ)) == 0
    verdict = sample_go(point, n=10)
    assert verdict.mode == SAMPLED
    assert verdict.tested == 0
    report = check_omega_realform(point, n=10)
    assert report['samples'] == 0
    assert report['discrepancies'] == 0
    report = check_crown_go_consistency(point, budget=10)
    assert not report['violation']
    assert report['real']['certified']
    assert report['crown']['certified']


if __name__ == '__main__':
    pytest.main([__file__, '-v', '-s'])
