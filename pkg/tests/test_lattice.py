import random

import pytest

from denthex.lattice import (
    ALPHA_SIDES,
    BETA_SIDES,
    DOWN,
    UNTILEABLE,
    UP,
    DentKind,
    DentSpec,
    Down,
    HexDentSpec,
    InvalidDent,
    Region,
    RegionTag,
    Side,
    Up,
    apply_symmetry,
    build_barred_base,
    build_hexagon,
    canonical_form,
    classify,
    cyclic_order,
    dent_to_cell,
    dual_graph,
    gamma,
    locate_dent,
    neighbors,
    normalize,
    reduce_forced,
    region_adjacent,
    region_notch,
    region_opposite,
    region_trapezoid,
    transform,
)


def D(side, pos):
    return DentSpec(Side.parse(side), pos)


# cells and sides

def test_down_cell_neighbours():
    assert set(neighbors(Down(3, 4))) == {Up(3, 4), Up(4, 4), Up(3, 5)}
    for cell in (Up(0, 0), Down(-2, 5)):
        for nb in neighbors(cell):
            assert nb.orient != cell.orient
            assert cell in neighbors(nb)


def test_side_parse_and_orientation():
    assert Side.parse("s") is Side.BOTTOM
    assert Side.parse("Northwest") is Side.NW
    with pytest.raises(InvalidDent):
        Side.parse("east")
    assert all(s.orient == UP for s in ALPHA_SIDES)
    assert all(s.orient == DOWN for s in BETA_SIDES)


def test_dent_kind_must_match_side():
    assert D("S", 1).kind is DentKind.ALPHA
    assert D("SW", 1).kind is DentKind.BETA
    with pytest.raises(InvalidDent):
        DentSpec(Side.TOP, 1, DentKind.ALPHA)
    with pytest.raises(InvalidDent):
        DentSpec(Side.NE, 1, DentKind.GAMMA)


@pytest.mark.parametrize("a,b,c,k", [(1, 1, 1, 0), (2, 3, 1, 2), (3, 0, 2, 1), (6, 10, 7, 5)])
def test_side_lengths_and_balance(a, b, c, k):
    spec = HexDentSpec(a, b, c, k)
    L = spec.bounds().side_lengths()
    assert [L[s] for s in (Side.TOP, Side.NE, Side.SE, Side.BOTTOM, Side.SW, Side.NW)] == \
        [a, b + k, c, a + k, b, c + k]
    r = build_hexagon(spec)
    assert r.n_up - r.n_down == k
    B = spec.bounds()
    assert [len(B.side_cells(s)) for s in (Side.BOTTOM, Side.NE, Side.NW)] == [a + k, b + k, c + k]
    rim_ups = {cell for cell in r if cell.orient == UP and r.is_on_outer_boundary(cell)}
    assert len(rim_ups) <= a + b + c + 3 * k


def test_boundary_up_cells_count():
    # each of a+b+c+3k boundary unit edges on the alpha sides belongs to its own up cell
    spec = HexDentSpec(3, 2, 4, 2)
    B = spec.bounds()
    cells = set()
    for s in ALPHA_SIDES:
        cells |= set(B.side_cells(s))
    assert len(cells) == 3 + 2 + 4 + 3 * 2


# building

def test_unit_hexagon():
    r = build_hexagon(HexDentSpec(1, 1, 1))
    assert (r.n_up, r.n_down) == (3, 3)
    g = dual_graph(r)
    assert g.n == 6 and len(g.edges) == 6
    assert all(len(nb) == 2 for nb in g.adjacency())


def test_unit_hexagon_with_two_dents():
    r = build_hexagon(HexDentSpec(1, 1, 1, 0, [D("S", 1)], [D("N", 1)]))
    assert (r.n_up, r.n_down) == (2, 2)


def test_dual_graph_trivia():
    assert dual_graph(Region([Up(0, 0)])).n == 1
    assert dual_graph(Region([Up(0, 0)])).edges == ()
    assert len(dual_graph(Region([Up(0, 0), Down(0, 0)])).edges) == 1


def test_dent_positions():
    spec = HexDentSpec(3, 2, 2, 1)
    bottom = spec.bounds().side_cells(Side.BOTTOM)
    assert dent_to_cell(spec, D("S", 1)) == min(bottom, key=lambda c: c.x)
    top = spec.bounds().side_cells(Side.TOP)
    assert dent_to_cell(spec, D("N", 2)) == top[1]
    # gammas run left to right directly below the bottom
    barred = spec.replace(barred=True)
    assert [dent_to_cell(barred, gamma(j)) for j in (1,)] == [Down(0, -1)]
    with pytest.raises(InvalidDent):
        dent_to_cell(spec, D("NE", 99))
    with pytest.raises(InvalidDent):
        dent_to_cell(spec, gamma(2))


def test_locate_dent_inverts_dent_to_cell():
    spec = HexDentSpec(2, 3, 2, 1)
    for side in Side:
        for pos in range(1, spec.side_length(side) + 1):
            d = D(side.value, pos)
            assert locate_dent(spec, dent_to_cell(spec, d), prefer=[side]) == d


def test_duplicate_dent_rejected():
    spec = HexDentSpec(2, 2, 2, 0, [D("S", 1), D("S", 1)], [D("N", 1), D("N", 2)])
    with pytest.raises(InvalidDent):
        build_hexagon(spec)


def figure_one_spec():
    alphas = [D("S", 2), D("S", 4), D("S", 7)] + [D("NE", p) for p in (2, 4, 6, 9, 13)] \
        + [D("NW", p) for p in (1, 3, 5, 8, 10)]
    betas = [D("SE", p) for p in (1, 3, 4, 6)] + [D("N", p) for p in (1, 2, 4, 5)]
    return HexDentSpec(6, 10, 7, 5, alphas, betas, barred=True)


def test_figure_one_balance_and_order():
    spec = figure_one_spec()
    r = build_hexagon(spec.replace(barred=False))
    assert r.n_up == r.n_down
    labels = [label for label, _ in cyclic_order(spec)]
    expected = ["gamma1", "gamma2", "alpha1", "gamma3", "gamma4", "alpha2", "gamma5", "alpha3"] \
        + [f"beta{i}" for i in range(1, 5)] + [f"alpha{i}" for i in range(4, 9)] \
        + [f"beta{i}" for i in range(5, 9)] + [f"alpha{i}" for i in range(9, 14)]
    assert labels == expected


def test_cyclic_order_trivia():
    assert cyclic_order(HexDentSpec(2, 2, 2)) == []
    spec = HexDentSpec(2, 2, 2, 0, [D("NW", 1)], [D("SE", 1)])
    assert [label for label, _ in cyclic_order(spec)] == ["beta1", "alpha1"]


# forced lozenges

def test_barred_hexagon_strips():
    spec = HexDentSpec(6, 10, 7, 5, barred=True)
    base = build_barred_base(spec)
    red = reduce_forced(base)
    assert red is not UNTILEABLE
    cls = classify(red.region)
    assert cls.tag is RegionTag.PLAIN_HEXAGON
    assert sorted(cls.params) == sorted((6, 15, 7))
    assert 2 * len(red.lozenges) == len(base) - len(red.region)
    covered = {cell for lozenge in red.lozenges for cell in lozenge}
    assert all(g in covered for g in spec.gammas())


def test_plain_hexagon_has_no_forced_lozenges():
    r = build_hexagon(HexDentSpec(2, 3, 2))
    red = reduce_forced(r)
    assert red.region == r and not red.lozenges


def test_isolated_cell_untileable():
    assert reduce_forced(Region([Up(0, 0), Down(5, 5)])) is UNTILEABLE


def test_reduce_forced_confluent():
    rng = random.Random(11)
    for _ in range(100):
        a, b, c, k = rng.randint(1, 3), rng.randint(1, 3), rng.randint(1, 3), rng.randint(0, 2)
        base = build_barred_base(HexDentSpec(a, b, c, k, barred=True))
        cells = sorted(base)
        r = base.without(*rng.sample(cells, rng.randint(0, 4)))
        one = reduce_forced(r, random.Random(rng.random()))
        two = reduce_forced(r, random.Random(rng.random()))
        if one is UNTILEABLE:
            assert two is UNTILEABLE
        else:
            assert two is not UNTILEABLE and one.region == two.region


# symmetries and classification

def test_symmetries_are_lattice_automorphisms():
    cell = Up(2, 1)
    for g in range(12):
        image = apply_symmetry(g, cell)
        assert set(apply_symmetry(g, n) for n in neighbors(cell)) == set(neighbors(image))


def test_canonical_form_is_symmetry_invariant():
    r = build_hexagon(HexDentSpec(2, 3, 1, 1, [D("S", 1), D("NE", 2)], [D("N", 1)]))
    key = canonical_form(r.cells)
    for g in range(12):
        assert canonical_form(transform(g, r.cells)) == key


def _roundtrip(region, tag, params):
    red = reduce_forced(region)
    cls = classify(red.region)
    assert cls.tag is tag
    rebuilt = reduce_forced(region_for(cls.tag, cls.params)).region
    assert canonical_form(rebuilt.cells) == canonical_form(red.region.cells)
    return cls


def region_for(tag, params):
    from denthex.lattice import template
    return template(tag, params)


def test_classify_adjacent_roundtrip():
    for a in range(1, 4):
        for b in range(0, 3):
            for c in range(1, 4):
                for j in range(1, a + 1):
                    for k in range(1, c + 1):
                        r = region_adjacent(a, b, c, j, k)
                        red = reduce_forced(r)
                        if red is UNTILEABLE:
                            continue
                        cls = classify(red.region)
                        assert cls.tag is not RegionTag.UNKNOWN
                        # with b = 0 the region is itself a plain hexagon
                        if b > 0 and len(red.region) == len(r):
                            assert cls.tag is RegionTag.HEX_TWO_DENTS_ADJACENT
                            rebuilt = region_adjacent(*cls.params)
                            assert canonical_form(rebuilt.cells) == canonical_form(r.cells)


def test_classify_families():
    assert classify(Region()).tag is RegionTag.EMPTY
    assert classify(Region([Up(0, 0)])).tag is RegionTag.UNTILEABLE
    # a small trapezoid can collapse to a plain hexagon once forced lozenges go
    small = reduce_forced(region_trapezoid(3, 2, (2, 4))).region
    assert classify(small).tag is RegionTag.PLAIN_HEXAGON
    trap = reduce_forced(region_trapezoid(3, 3, (1, 3, 5))).region
    assert classify(trap).tag is RegionTag.TRAPEZOID_TOP_DENTS
    cls = _roundtrip(region_notch(2, 2, 1, 1, 1, "A"), RegionTag.NOTCH_REGION_A, (2, 2, 1, 1, 1))
    assert cls.symmetry is not None
    _roundtrip(region_opposite(3, 2, 2, 2, 2), RegionTag.HEX_TWO_DENTS_OPPOSITE, (3, 2, 2, 2, 2))


def test_classify_is_translation_invariant():
    r = region_adjacent(3, 2, 2, 2, 1)
    moved = Region(normalize(transform(4, r.cells)))
    assert classify(moved).tag is classify(r).tag


def test_degenerate_hexagons_build():
    assert len(build_hexagon(HexDentSpec(0, 0, 0))) == 0
    r = build_hexagon(HexDentSpec(2, 0, 3))
    assert r.n_up == r.n_down == 6
    assert len(reduce_forced(r).region) == 0
    assert len(build_hexagon(HexDentSpec(2, 1, 0))) == 4
