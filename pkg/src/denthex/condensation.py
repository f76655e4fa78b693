"""Pfaffian formulas for dented hexagons, and Kuo's condensation identities.

Everything here reduces a tiling count to a Pfaffian whose entries count
regions with only two extra cells removed.  Those entries come either from
the closed forms in :mod:`denthex.formulas` (via forced reduction and the
region classifier) or from the brute-force oracle, so the two sources can
be compared entry by entry.
"""

from __future__ import annotations

from dataclasses import dataclass
from enum import Enum
from fractions import Fraction
from functools import lru_cache
from itertools import combinations
from typing import Callable, Sequence

from .exactmath import OddDimension, SkewMatrix, macmahon, pfaffian
from .formulas import NotchParams, adjacent_dents, clp_trapezoid, gk_notch, opposite_dents
from .lattice import (
    BETA_SIDES,
    CCW_SIDES,
    ORIENTATION_PRESERVING,
    UNTILEABLE,
    UP,
    DentKind,
    DentSpec,
    HexDentSpec,
    Region,
    RegionTag,
    Side,
    UnitTriangle,
    bounds_of,
    build_barred_base,
    classify,
    cyclic_order,
    dent_cells,
    locate_dent,
    neighbors,
    reduce_forced,
    transform,
)
from .oracle import count_tilings


class ZeroDenominator(ArithmeticError):
    pass


class NonIntegerResult(ArithmeticError):
    pass


class UnclassifiableResidual(RuntimeError):
    pass


class BetaOnForbiddenSide(ValueError):
    pass


class InvalidCellPattern(ValueError):
    pass


Counter = Callable[[Region], int]


# ---------------------------------------------------------------------------
# Entry providers


@lru_cache(maxsize=65536)
def _closed_form_cells(cells: frozenset) -> int:
    r = Region(cells)
    if not r.balanced:
        return 0
    red = reduce_forced(r)
    if red is UNTILEABLE:
        return 0
    cls = classify(red.region)
    tag, p = cls.tag, cls.params
    if tag is RegionTag.EMPTY:
        return 1
    if tag is RegionTag.UNTILEABLE:
        return 0
    if tag is RegionTag.PLAIN_HEXAGON:
        return macmahon(*p)
    if tag is RegionTag.HEX_TWO_DENTS_ADJACENT:
        return adjacent_dents(*p)
    if tag is RegionTag.HEX_TWO_DENTS_OPPOSITE:
        return opposite_dents(*p)
    if tag is RegionTag.TRAPEZOID_TOP_DENTS:
        return clp_trapezoid(*p)
    if tag is RegionTag.NOTCH_REGION_A:
        return gk_notch(NotchParams(*p, variant="A"))
    if tag is RegionTag.NOTCH_REGION_B:
        return gk_notch(NotchParams(*p, variant="B"))
    raise UnclassifiableResidual(f"no closed form for residual region with {len(red.region)} cells")


def closed_form_count(r: Region) -> int:
    """Tilings of ``r`` by forced reduction, classification and a product formula."""
    return _closed_form_cells(r.cells)


@lru_cache(maxsize=65536)
def _oracle_cells(cells: frozenset) -> int:
    return count_tilings(Region(cells))


def oracle_count(r: Region) -> int:
    return _oracle_cells(r.cells)


class EntryMode(Enum):
    CLOSED_FORM = "ClosedForm"
    ORACLE = "Oracle"


@dataclass(frozen=True)
class EntryProvider:
    """Where the two-cell-removed counts inside a Pfaffian come from."""

    mode: EntryMode = EntryMode.CLOSED_FORM

    def count(self, r: Region) -> int:
        if self.mode is EntryMode.ORACLE:
            return oracle_count(r)
        return closed_form_count(r)


CLOSED_FORM = EntryProvider(EntryMode.CLOSED_FORM)
ORACLE = EntryProvider(EntryMode.ORACLE)


def _divide(pf: Fraction, base: int, power: int, what: str) -> int:
    if power < 0:
        value = pf * Fraction(base) ** -power
    else:
        value = pf / Fraction(base) ** power
    if value.denominator != 1 or value < 0:
        raise NonIntegerResult(f"{what}: {pf} / {base}^{power} is not a count")
    return value.numerator


# ---------------------------------------------------------------------------
# The generic Pfaffian formula


def pfaffian_count_generic(r: Region, removable: Sequence[UnitTriangle], counter: Counter = oracle_count) -> int:
    """Tilings of ``r`` minus ``removable``, from counts with only two of them removed.

    ``removable`` lists 2k cells of ``r`` in cyclic order around the outer
    boundary.  The result is Pf[M(r - {d_i, d_j})] / M(r)^(k-1).
    """
    cells = list(removable)
    if len(cells) % 2:
        raise OddDimension(f"need an even number of cells, got {len(cells)}")
    if len(set(cells)) != len(cells):
        raise ValueError("removable cells must be distinct")
    for c in cells:
        if c not in r:
            raise ValueError(f"{c!r} is not a cell of the region")
        if not r.is_on_outer_boundary(c):
            raise ValueError(f"{c!r} is not on the outer boundary")
    k = len(cells) // 2
    if k == 0:
        return counter(r)
    base = counter(r)
    if base == 0:
        raise ZeroDenominator("the region without removals has no tilings")
    A = SkewMatrix.from_function(len(cells), lambda i, j: counter(r.without(cells[i], cells[j])))
    return _divide(pfaffian(A), base, k - 1, "generic Pfaffian")


# ---------------------------------------------------------------------------
# Moving dents around the hexagon


def _shape_params(B) -> tuple[int, int, int, int] | None:
    L = B.side_lengths()
    a, b, c = L[Side.TOP], L[Side.SW], L[Side.SE]
    k = L[Side.BOTTOM] - a
    if k < 0 or L[Side.NE] != b + k or L[Side.NW] != c + k:
        return None
    return a, b, c, k


def symmetric_specs(spec: HexDentSpec):
    """Yield ``(g, spec')`` for each up-preserving symmetry ``g`` of the lattice.

    ``spec'`` describes the image of the (unbarred) dented hexagon, placed in
    standard position, so it has the same number of tilings as ``spec``.
    """
    hexcells = spec.bounds().cells()
    alphas, betas = dent_cells(spec)
    for g in ORIENTATION_PRESERVING:
        image = transform(g, hexcells)
        shape = _shape_params(bounds_of(image))
        if shape is None:
            continue
        a, b, c, k = shape
        target = HexDentSpec(a, b, c, k)
        dx = min(t.x for t in target.bounds().cells()) - min(t.x for t in image) if image else 0
        dy = min(t.y for t in target.bounds().cells()) - min(t.y for t in image) if image else 0

        def move(cell, sides):
            (m,) = transform(g, [cell])
            moved = UnitTriangle(m.x + dx, m.y + dy, m.orient)
            return locate_dent(target, moved, prefer=sides)

        new_alphas = tuple(move(x, [s for s in CCW_SIDES if s not in BETA_SIDES]) for x in alphas)
        new_betas = tuple(move(x, list(BETA_SIDES)) for x in betas)
        yield g, target.replace(alphas=new_alphas, betas=new_betas)


def rehome(spec: HexDentSpec) -> HexDentSpec:
    """An equivalent spec with no beta dent on the southwestern side."""
    if all(d.side is not Side.SW for d in spec.betas):
        return spec
    for _, s in symmetric_specs(spec):
        if all(d.side is not Side.SW for d in s.betas):
            return s
    raise BetaOnForbiddenSide("beta dents occur on all three of their sides")


# ---------------------------------------------------------------------------
# Theorem 1: one beta side free of dents


LabeledDent = tuple[str, UnitTriangle]


def _kind(label: str) -> DentKind:
    for kind in DentKind:
        if label.startswith(kind.value):
            return kind
    raise ValueError(f"unrecognised dent label {label!r}")


def _label_index(label: str) -> int:
    """0-based index into the spec's dent list for labels like ``alpha3``."""
    return int(label[len(_kind(label).value):]) - 1


def west_corner_distance(spec: HexDentSpec, cell: UnitTriangle) -> int | None:
    """Distance from a northwestern dent to the western corner, else None."""
    cells = spec.bounds().side_cells(Side.NW)
    if cell not in cells:
        return None
    return len(cells) - 1 - cells.index(cell)


def stated_zero(spec: HexDentSpec, d1: LabeledDent, d2: LabeledDent, nw_slack: int = 0) -> bool:
    """Whether the written vanishing conditions declare the entry for (d1, d2) zero.

    ``nw_slack`` widens the northwestern distance bound: 0 reads the bound
    as k-1 (resp. j-2), 1 as k (resp. j-1).
    """
    (l1, c1), (l2, c2) = sorted((d1, d2), key=lambda d: _kind(d[0]).value)
    k1, k2 = _kind(l1), _kind(l2)
    if k1 is k2 or {k1, k2} == {DentKind.BETA, DentKind.GAMMA}:
        return True
    gammas = spec.gammas()
    touching = [j for j, g in enumerate(gammas, 1) if c1 in neighbors(g)]
    dist = west_corner_distance(spec, c1)
    if k2 is DentKind.BETA:
        return bool(touching) or (dist is not None and dist <= spec.k - 1 + nw_slack)
    j = gammas.index(c2) + 1
    return any(t != j for t in touching) or (dist is not None and dist <= j - 2 + nw_slack)


def theorem1_entry(spec: HexDentSpec, d1: LabeledDent, d2: LabeledDent,
                   provider: EntryProvider = CLOSED_FORM) -> int:
    """M(barred hexagon minus the two given dents).

    Same-type pairs and beta-gamma pairs vanish for lack of balance.  The
    remaining pairs are counted by ``provider``; in closed-form mode the
    residual after forced lozenges is classified and sent to its formula.
    """
    k1, k2 = _kind(d1[0]), _kind(d2[0])
    if k1 is k2 or {k1, k2} == {DentKind.BETA, DentKind.GAMMA}:
        return 0
    base = build_barred_base(spec.replace(barred=True))
    value = provider.count(base.without(d1[1], d2[1]))
    if value and stated_zero(spec, d1, d2):
        raise AssertionError(f"entry {d1[0]},{d2[0]} is {value} but the vanishing conditions say 0")
    return value


def theorem1_count(spec: HexDentSpec, provider: EntryProvider = CLOSED_FORM,
                   order: Sequence[LabeledDent] | None = None) -> int:
    """Tilings of the dented hexagon H^k_{a,b,c} via the barred-hexagon Pfaffian.

    Needs n+k alpha dents and n beta dents, with some beta side free of
    dents; the spec is first moved so that this side is the southwestern one.
    ``order`` overrides the cyclic listing of the dents (it must be one of the
    cyclic orders of the moved spec, e.g. a rotation of the default).
    """
    if len(spec.alphas) != spec.n + spec.k:
        raise ValueError(f"need n+k = {spec.n + spec.k} alpha dents, got {len(spec.alphas)}")
    s = rehome(spec.replace(barred=False)).replace(barred=True)
    deltas = list(order) if order is not None else cyclic_order(s)
    if not deltas:
        return macmahon(s.a, s.b, s.c)
    base = macmahon(s.a, s.b + s.k, s.c)
    A = SkewMatrix.from_function(len(deltas), lambda i, j: theorem1_entry(s, deltas[i], deltas[j], provider))
    return _divide(pfaffian(A), base, s.n + s.k - 1, f"Theorem 1 Pfaffian for {spec}")


# ---------------------------------------------------------------------------
# Theorem 2: arbitrary dents, nested Pfaffian


def _carvings(alpha_order: list[int], k: int):
    """Index sets of k alpha dents: the first k in cyclic order, then the rest."""
    first = tuple(alpha_order[:k])
    yield first
    for combo in combinations(alpha_order, k):
        if combo != first:
            yield combo


def theorem2_count(spec: HexDentSpec, provider: EntryProvider = CLOSED_FORM,
                   carve: Sequence[int] | None = None) -> int:
    """Tilings of H^k_{a,b,c} with dents anywhere on their allowed sides.

    k of the alpha dents are carved out first; the remaining 2n dents give
    an outer Pfaffian whose entries each have a single beta dent and so fall
    under :func:`theorem1_count`.  ``carve`` picks the carved alphas by
    0-based index; by default the first k in cyclic order are used, moving
    on to other choices if that region happens to have no tilings.
    """
    if spec.k < 1:
        raise ValueError("Theorem 2 needs k >= 1; use theorem3_count for k = 0")
    if len(spec.alphas) != spec.n + spec.k:
        raise ValueError(f"need n+k = {spec.n + spec.k} alpha dents, got {len(spec.alphas)}")
    plain = spec.replace(barred=False)
    order = cyclic_order(plain)
    alpha_order = [_label_index(label) for label, _ in order if label.startswith("alpha")]
    choices = [tuple(carve)] if carve is not None else _carvings(alpha_order, spec.k)
    for carved in choices:
        kept = [spec.alphas[i] for i in carved]
        m_d = theorem1_count(plain.replace(alphas=kept, betas=()), provider)
        if m_d:
            break
    else:
        raise ZeroDenominator(f"every carving of {spec} leaves a region with no tilings")
    if spec.n == 0:
        return m_d

    rest = [label for label, _ in order
            if not (label.startswith("alpha") and _label_index(label) in carved)]

    def dent(label: str) -> DentSpec:
        dents = spec.alphas if label.startswith("alpha") else spec.betas
        return dents[_label_index(label)]

    def entry(i: int, j: int) -> int:
        li, lj = rest[i], rest[j]
        if li[0] == lj[0]:
            return 0
        al, be = (li, lj) if li.startswith("alpha") else (lj, li)
        inner = plain.replace(alphas=kept + [dent(al)], betas=[dent(be)])
        return theorem1_count(inner, provider)

    A = SkewMatrix.from_function(len(rest), entry)
    return _divide(pfaffian(A), m_d, spec.n - 1, f"Theorem 2 Pfaffian for {spec}")


# ---------------------------------------------------------------------------
# Theorem 3: k = 0


def theorem3_count(spec: HexDentSpec, provider: EntryProvider = CLOSED_FORM) -> int:
    """Tilings of H_{a,b,c} with n alpha and n beta dents anywhere.

    Each Pfaffian entry is a hexagon with one dent of each type, counted by
    the adjacent- or opposite-dent formula.
    """
    if spec.k != 0:
        raise ValueError("Theorem 3 is the case k = 0")
    if len(spec.alphas) != spec.n:
        raise ValueError("need as many alpha dents as beta dents")
    plain = spec.replace(barred=False)
    deltas = cyclic_order(plain)
    base = macmahon(spec.a, spec.b, spec.c)
    if not deltas:
        return base
    if base == 0:
        raise ZeroDenominator(f"hexagon {spec.a},{spec.b},{spec.c} has no tilings")
    hexagon = build_barred_base(plain)

    def entry(i: int, j: int) -> int:
        (li, ci), (lj, cj) = deltas[i], deltas[j]
        if li[0] == lj[0]:
            return 0
        return provider.count(hexagon.without(ci, cj))

    A = SkewMatrix.from_function(len(deltas), entry)
    return _divide(pfaffian(A), base, spec.n - 1, f"Theorem 3 Pfaffian for {spec}")


# ---------------------------------------------------------------------------
# Kuo condensation


def _check_cells(r: Region, cells, pattern, name: str) -> None:
    if len(set(cells)) != 4:
        raise InvalidCellPattern(f"{name}: the four cells must be distinct")
    for c in cells:
        if c not in r:
            raise InvalidCellPattern(f"{name}: {c!r} is not in the region")
        if not r.is_on_outer_boundary(c):
            raise InvalidCellPattern(f"{name}: {c!r} is not on the boundary")
    got = tuple(c.orient == UP for c in cells)
    flipped = tuple(not p for p in pattern)
    if got != tuple(pattern) and got != flipped:
        want = ",".join("Up" if p else "Down" for p in pattern)
        raise InvalidCellPattern(f"{name}: orientations must be {want} (or all swapped)")


def check_kuo_four_one(r: Region, w: UnitTriangle, x: UnitTriangle, y: UnitTriangle, z: UnitTriangle,
                       counter: Counter = oracle_count) -> bool:
    """Kuo's identity for alternating colours w, x, y, z in cyclic order on a face.

    M(G) M(G-wxyz) = M(G-wx) M(G-yz) + M(G-wz) M(G-xy).
    """
    _check_cells(r, (w, x, y, z), (True, False, True, False), "four_one")
    M = counter
    lhs = M(r) * M(r.without(w, x, y, z))
    rhs = M(r.without(w, x)) * M(r.without(y, z)) + M(r.without(w, z)) * M(r.without(x, y))
    return lhs == rhs


def check_kuo_two_two(r: Region, w: UnitTriangle, x: UnitTriangle, y: UnitTriangle, z: UnitTriangle,
                      counter: Counter = oracle_count) -> bool:
    """Kuo's identity for w, x of one colour and y, z of the other, in cyclic order.

    M(G) M(G-wxyz) = M(G-wz) M(G-xy) - M(G-wy) M(G-xz).
    """
    _check_cells(r, (w, x, y, z), (True, True, False, False), "two_two")
    M = counter
    lhs = M(r) * M(r.without(w, x, y, z))
    rhs = M(r.without(w, z)) * M(r.without(x, y)) - M(r.without(w, y)) * M(r.without(x, z))
    return lhs == rhs
