import pytest

from denthex.exactmath import macmahon
from denthex.lattice import Down, Graph, HexDentSpec, Region, Up, build_hexagon, dual_graph
from denthex.oracle import NotBipartite, count_matchings, count_tilings, enumerate_tilings


def hexagon(a, b, c):
    return build_hexagon(HexDentSpec(a, b, c))


def test_frozen_small_hexagons():
    # counted by hand: the unit hexagon has 2 tilings, H_{2,2,2} has 20
    assert count_tilings(hexagon(1, 1, 1)) == 2
    assert count_tilings(hexagon(2, 2, 2)) == 20
    assert count_tilings(hexagon(1, 2, 3)) == macmahon(1, 2, 3) == 10


def test_empty_and_unbalanced():
    assert count_tilings(Region()) == 1
    assert count_tilings(Region([Up(0, 0)])) == 0
    assert count_tilings(Region([Up(0, 0), Down(4, 4)])) == 0


def test_matchings_agree_with_tilings():
    r = hexagon(2, 1, 2)
    assert count_matchings(dual_graph(r)) == count_tilings(r)


def test_odd_cycle_rejected():
    g = Graph(3, ((0, 1), (1, 2), (0, 2)))
    with pytest.raises(NotBipartite):
        count_matchings(g)


def test_enumerate_tilings():
    r = hexagon(2, 2, 1)
    tilings = enumerate_tilings(r, 100)
    assert len(tilings) == count_tilings(r) == len(set(tilings))
    for t in tilings:
        covered = [cell for lozenge in t for cell in lozenge]
        assert sorted(covered) == sorted(r.cells)
    assert len(enumerate_tilings(r, 2)) == 2
    assert enumerate_tilings(r, 3) == enumerate_tilings(r, 3)
    with pytest.raises(ValueError):
        enumerate_tilings(r, 0)
