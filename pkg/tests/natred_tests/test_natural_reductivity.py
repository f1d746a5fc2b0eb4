import os

import numpy
import pytest

from gospace.config import DEFAULT_CATALOG_DIR
from gospace.exactla.scalar import QQ
from gospace.family.crown import complexify
from gospace.liespace.space_io import load_space
from gospace.natred.natural_reductivity import check_crown_natred
from gospace.natred.natural_reductivity import is_naturally_reductive
from gospace.natred.natural_reductivity import natred_implies_go_audit
from gospace.natred.natural_reductivity import NatTriple
from gospace.natred.natural_reductivity import psi

space_names = ['abelian-flat', 'su2-round', 'su2-123', 'su2-berger',
               'sphere2', 'heisenberg-bare', 'heisenberg-wsym']


def _load(name):
    return load_space(os.path.join(DEFAULT_CATALOG_DIR, name + '.json'))


@pytest.mark.parametrize('name,expected', [
    ('su2-round', QQ(0)),
    ('su2-123', QQ(1)),
])
def test_psi_basis_triple(name, expected):
    space = _load(name)
    assert psi(space, NatTriple.from_indices(space, 0, 1, 2)) == expected


def test_psi_symmetric_pair():
    space = _load('sphere2')
    assert psi(space, NatTriple(space, [1, 2], [3, -1], [0, 5])) == 0


@pytest.mark.parametrize('name,natred,witness', [
    ('sphere2', True, None),
    ('su2-round', True, None),
    ('abelian-flat', True, None),
    ('su2-123', False, (0, 1, 2)),
    ('heisenberg-wsym', False, (0, 1, 2)),
    ('su2-berger', False, (0, 1, 2)),
])
def test_is_naturally_reductive(name, natred, witness):
    assert is_naturally_reductive(_load(name)) == (natred, witness)


def test_witness_value():
    _, witness, value = is_naturally_reductive(_load('heisenberg-wsym'),
                                               return_value=True)
    assert witness == (0, 1, 2)
    assert value == QQ(1)


@pytest.mark.parametrize('name', ['su2-123', 'heisenberg-wsym'])
def test_psi_trilinear_and_slot_identity(name):
    space = _load(name)
    random_state = numpy.random.RandomState(0)

    def draw():
        return [QQ(int(v)) for v in
                random_state.randint(-4, 5, size=space.dim_m)]

    def m_value(xi, eta, zeta):
        return space.metric_eval(space.bracket_m(xi, eta), zeta)

    for _ in range(10):
        xi, eta, zeta, other = draw(), draw(), draw(), draw()
        t = NatTriple(space, xi, eta, zeta)
        summed = NatTriple(space, [a + b for a, b in zip(xi, other)], eta,
                           zeta)
        assert psi(space, summed) == \
            psi(space, t) + psi(space, NatTriple(space, other, eta, zeta))
        swapped = NatTriple(space, xi, zeta, eta)
        assert psi(space, t) + psi(space, swapped) == \
            2 * (m_value(xi, eta, zeta) + m_value(xi, zeta, eta))


@pytest.mark.parametrize('name', space_names)
def test_crown_natred(name):
    space = _load(name)
    report = check_crown_natred(space)
    assert report['consistent']
    assert report['natred'] == report['crown_natred']
    assert is_naturally_reductive(space) == \
        is_naturally_reductive(complexify(space))


def test_crown_natred_report():
    report = check_crown_natred(_load('su2-123'))
    assert report == {'space': 'su2-123', 'natred': False,
                      'witness': [0, 1, 2], 'psi': '1',
                      'crown_natred': False, 'consistent': True}


@pytest.mark.parametrize('name', space_names)
def test_natred_implies_go(name):
    report = natred_implies_go_audit(_load(name))
    assert report['ok']
    if report['natred']:
        assert report['zero_section']


if __name__ == '__main__':
    pytest.main([__file__, '-v', '-s'])
