"""Regions on the triangular lattice.

Coordinates
-----------
Lattice points are integer pairs ``(x, y)`` in the basis e1 = (1, 0),
e2 = (1/2, sqrt(3)/2).  The up-pointing cell ``Up(x, y)`` has corners
(x, y), (x+1, y), (x, y+1); the down-pointing cell ``Down(x, y)`` has corners
(x+1, y), (x, y+1), (x+1, y+1).  Hence ``Down(x, y)`` shares an edge with
exactly ``Up(x, y)``, ``Up(x+1, y)`` and ``Up(x, y+1)``.

A lattice hexagon is the set of cells whose corners satisfy
``xmin <= x <= xmax``, ``ymin <= y <= ymax`` and ``smin <= x + y <= smax``.
Its sides are called Top, NE, SE, Bottom, SW, NW.  Up-pointing boundary
cells sit on Bottom, NE and NW; down-pointing ones on Top, SE and SW.

Dent positions are 1-based and counted in the counterclockwise direction of
travel along each side (Bottom left to right, SE upwards, NE from the east
corner upwards, Top right to left, NW downwards, SW from the west corner
downwards).
"""

from __future__ import annotations

import random
from collections import deque
from dataclasses import dataclass, field
from enum import Enum, IntEnum
from fractions import Fraction
from functools import lru_cache
from typing import Iterable, NamedTuple, Sequence


class Orient(IntEnum):
    UP = 0
    DOWN = 1


UP = Orient.UP
DOWN = Orient.DOWN


class UnitTriangle(NamedTuple):
    x: int
    y: int
    orient: Orient

    def __repr__(self) -> str:
        return f"{'Up' if self.orient == UP else 'Down'}({self.x},{self.y})"

    def vertices(self) -> tuple[tuple[int, int], ...]:
        x, y = self.x, self.y
        if self.orient == UP:
            return ((x, y), (x + 1, y), (x, y + 1))
        return ((x + 1, y), (x, y + 1), (x + 1, y + 1))


def Up(x: int, y: int) -> UnitTriangle:
    return UnitTriangle(x, y, UP)


def Down(x: int, y: int) -> UnitTriangle:
    return UnitTriangle(x, y, DOWN)


def neighbors(cell: UnitTriangle) -> tuple[UnitTriangle, ...]:
    """The three cells sharing an edge with ``cell``."""
    x, y, o = cell
    if o == UP:
        return (Down(x, y), Down(x - 1, y), Down(x, y - 1))
    return (Up(x, y), Up(x + 1, y), Up(x, y + 1))


def scan_key(cell: UnitTriangle) -> tuple[int, int, int]:
    """Row-major order; the canonical cell order used by the oracle."""
    return (cell.y, cell.x, cell.orient)


class InvalidDent(ValueError):
    pass


# ---------------------------------------------------------------------------
# Sides and dent specifications


class Side(Enum):
    TOP = "N"
    NE = "NE"
    SE = "SE"
    BOTTOM = "S"
    SW = "SW"
    NW = "NW"

    @property
    def orient(self) -> Orient:
        """Orientation of the boundary cells along this side."""
        return UP if self in (Side.BOTTOM, Side.NE, Side.NW) else DOWN

    @classmethod
    def parse(cls, tag: str) -> "Side":
        aliases = {
            "N": cls.TOP, "TOP": cls.TOP,
            "S": cls.BOTTOM, "BOTTOM": cls.BOTTOM,
            "NE": cls.NE, "NORTHEAST": cls.NE,
            "SE": cls.SE, "SOUTHEAST": cls.SE,
            "SW": cls.SW, "SOUTHWEST": cls.SW,
            "NW": cls.NW, "NORTHWEST": cls.NW,
        }
        try:
            return aliases[tag.strip().upper()]
        except KeyError:
            raise InvalidDent(f"unknown side {tag!r}") from None


# counterclockwise from the western corner
CCW_SIDES = (Side.SW, Side.BOTTOM, Side.SE, Side.NE, Side.TOP, Side.NW)
ALPHA_SIDES = (Side.BOTTOM, Side.NE, Side.NW)
BETA_SIDES = (Side.TOP, Side.SE, Side.SW)


class DentKind(Enum):
    ALPHA = "alpha"
    BETA = "beta"
    GAMMA = "gamma"


@dataclass(frozen=True)
class DentSpec:
    side: Side
    pos: int
    kind: DentKind | None = None

    def __post_init__(self):
        expected = DentKind.ALPHA if self.side.orient == UP else DentKind.BETA
        if self.kind is DentKind.GAMMA and self.side is Side.BOTTOM:
            return
        if self.kind is None:
            object.__setattr__(self, "kind", expected)
        elif self.kind != expected:
            raise InvalidDent(f"{self.kind.value} dent cannot lie on side {self.side.name}")


@dataclass(frozen=True)
class HexDentSpec:
    a: int
    b: int
    c: int
    k: int = 0
    alphas: tuple[DentSpec, ...] = ()
    betas: tuple[DentSpec, ...] = ()
    barred: bool = False

    def __post_init__(self):
        object.__setattr__(self, "alphas", tuple(self.alphas))
        object.__setattr__(self, "betas", tuple(self.betas))
        if min(self.a, self.b, self.c, self.k) < 0:
            raise InvalidDent("side parameters must be non-negative")

    @property
    def n(self) -> int:
        return len(self.betas)

    def bounds(self) -> "HexBounds":
        return hexagon_bounds(self.a, self.b + self.k, self.c, self.a + self.k, self.b, self.c + self.k)

    def side_length(self, side: Side) -> int:
        return self.bounds().side_lengths()[side]

    def gammas(self) -> list[UnitTriangle]:
        return [Down(j, -1) for j in range(self.k)]

    def replace(self, **kw) -> "HexDentSpec":
        d = dict(a=self.a, b=self.b, c=self.c, k=self.k, alphas=self.alphas, betas=self.betas, barred=self.barred)
        d.update(kw)
        return HexDentSpec(**d)


# ---------------------------------------------------------------------------
# Hexagon geometry


@dataclass(frozen=True)
class HexBounds:
    xmin: int
    xmax: int
    ymin: int
    ymax: int
    smin: int
    smax: int

    def contains_point(self, x: int, y: int) -> bool:
        return (self.xmin <= x <= self.xmax and self.ymin <= y <= self.ymax
                and self.smin <= x + y <= self.smax)

    def contains(self, cell: UnitTriangle) -> bool:
        return all(self.contains_point(x, y) for x, y in cell.vertices())

    def cells(self) -> frozenset[UnitTriangle]:
        out = []
        for y in range(self.ymin, self.ymax):
            for x in range(self.xmin, self.xmax):
                for o in (UP, DOWN):
                    c = UnitTriangle(x, y, o)
                    if self.contains(c):
                        out.append(c)
        return frozenset(out)

    def side_cells(self, side: Side) -> list[UnitTriangle]:
        """Boundary cells along ``side`` in counterclockwise travel order."""
        xmin, xmax, ymin, ymax, smin, smax = (
            self.xmin, self.xmax, self.ymin, self.ymax, self.smin, self.smax)
        if side is Side.BOTTOM:
            cells = [Up(x, ymin) for x in range(max(xmin, smin - ymin), min(xmax, smax - ymin))]
        elif side is Side.SE:
            cells = [Down(xmax - 1, y) for y in range(max(ymin, smin - xmax), min(ymax, smax - xmax))]
        elif side is Side.NE:
            cells = [Up(smax - 1 - y, y) for y in range(max(ymin, smax - xmax), min(ymax, smax - xmin))]
        elif side is Side.TOP:
            cells = [Down(x, ymax - 1) for x in range(max(xmin, smin - ymax), min(xmax, smax - ymax))][::-1]
        elif side is Side.NW:
            cells = [Up(xmin, y) for y in range(max(ymin, smin - xmin), min(ymax, smax - xmin))][::-1]
        else:
            cells = [Down(smin - 1 - y, y) for y in range(max(ymin, smin - xmax), min(ymax, smin - xmin))][::-1]
        return [c for c in cells if self.contains(c)]

    def side_lengths(self) -> dict[Side, int]:
        xmin, xmax, ymin, ymax, smin, smax = (
            self.xmin, self.xmax, self.ymin, self.ymax, self.smin, self.smax)
        return {
            Side.TOP: min(xmax, smax - ymax) - max(xmin, smin - ymax),
            Side.NE: min(ymax, smax - xmin) - max(ymin, smax - xmax),
            Side.SE: min(ymax, smax - xmax) - max(ymin, smin - xmax),
            Side.BOTTOM: min(xmax, smax - ymin) - max(xmin, smin - ymin),
            Side.SW: min(ymax, smin - xmin) - max(ymin, smin - xmax),
            Side.NW: min(ymax, smax - xmin) - max(ymin, smin - xmin),
        }

    def is_centrally_symmetric(self) -> bool:
        L = self.side_lengths()
        return L[Side.TOP] == L[Side.BOTTOM] and L[Side.NE] == L[Side.SW] and L[Side.SE] == L[Side.NW]


def hexagon_bounds(top: int, ne: int, se: int, bottom: int, sw: int, nw: int) -> HexBounds:
    """Bounds of the hexagon with the given side lengths, clockwise from the top.

    The bottom-left corner sits at the origin.
    """
    if min(top, ne, se, bottom, sw, nw) < 0:
        raise ValueError("side lengths must be non-negative")
    if bottom - ne - top + sw != 0 or se + ne - nw - sw != 0:
        raise ValueError(f"side lengths {top, ne, se, bottom, sw, nw} do not close up")
    return HexBounds(bottom - ne - top, bottom, 0, se + ne, 0, bottom + se)


def bounds_of(cells: Iterable[UnitTriangle]) -> HexBounds:
    """Smallest lattice hexagon containing every cell."""
    xs, ys, ss = [], [], []
    for c in cells:
        for x, y in c.vertices():
            xs.append(x)
            ys.append(y)
            ss.append(x + y)
    if not xs:
        raise ValueError("empty cell set has no bounds")
    return HexBounds(min(xs), max(xs), min(ys), max(ys), min(ss), max(ss))


# ---------------------------------------------------------------------------
# Regions


@dataclass(frozen=True)
class Region:
    cells: frozenset[UnitTriangle]

    def __init__(self, cells: Iterable[UnitTriangle] = ()):
        object.__setattr__(self, "cells", frozenset(cells))

    def __len__(self) -> int:
        return len(self.cells)

    def __iter__(self):
        return iter(sorted(self.cells, key=scan_key))

    def __contains__(self, cell) -> bool:
        return cell in self.cells

    @property
    def n_up(self) -> int:
        return sum(1 for c in self.cells if c.orient == UP)

    @property
    def n_down(self) -> int:
        return len(self.cells) - self.n_up

    @property
    def balanced(self) -> bool:
        return self.n_up == self.n_down

    def without(self, *cells: UnitTriangle) -> "Region":
        missing = [c for c in cells if c not in self.cells]
        if missing:
            raise KeyError(f"cells not in region: {missing}")
        return Region(self.cells.difference(cells))

    def neighbors_in(self, cell: UnitTriangle) -> list[UnitTriangle]:
        return [n for n in neighbors(cell) if n in self.cells]

    def is_on_outer_boundary(self, cell: UnitTriangle) -> bool:
        return len(self.neighbors_in(cell)) < 3


EMPTY_REGION = Region()


def _dent_cell(bounds: HexBounds, d: DentSpec) -> UnitTriangle:
    cells = bounds.side_cells(d.side)
    if not 1 <= d.pos <= len(cells):
        raise InvalidDent(f"position {d.pos} out of range 1..{len(cells)} on side {d.side.name}")
    return cells[d.pos - 1]


def dent_to_cell(spec: HexDentSpec, d: DentSpec) -> UnitTriangle:
    """Cell addressed by ``d``; gamma dents index the appended bottom strip from the left."""
    if d.kind is DentKind.GAMMA:
        if not 1 <= d.pos <= spec.k:
            raise InvalidDent(f"gamma index {d.pos} out of range 1..{spec.k}")
        return spec.gammas()[d.pos - 1]
    return _dent_cell(spec.bounds(), d)


def gamma(j: int) -> DentSpec:
    return DentSpec(Side.BOTTOM, j, DentKind.GAMMA)


def dent_cells(spec: HexDentSpec) -> tuple[list[UnitTriangle], list[UnitTriangle]]:
    alphas = [dent_to_cell(spec, d) for d in spec.alphas]
    betas = [dent_to_cell(spec, d) for d in spec.betas]
    allc = alphas + betas
    if len(set(allc)) != len(allc):
        raise InvalidDent("duplicate dent cells")
    return alphas, betas


def build_barred_base(spec: HexDentSpec) -> Region:
    cells = spec.bounds().cells()
    if spec.barred:
        cells = cells | frozenset(spec.gammas())
    return Region(cells)


def build_hexagon(spec: HexDentSpec) -> Region:
    """Cells of the (optionally barred) hexagon with all alpha and beta dents removed."""
    alphas, betas = dent_cells(spec)
    return build_barred_base(spec).without(*alphas, *betas)


def locate_dent(spec: HexDentSpec, cell: UnitTriangle, prefer: Iterable[Side] = ()) -> DentSpec:
    """Inverse of :func:`dent_to_cell` for the alpha/beta boundary cells."""
    bounds = spec.bounds()
    order = list(prefer) + [s for s in CCW_SIDES if s not in prefer]
    for side in order:
        cells = bounds.side_cells(side)
        if cell in cells:
            return DentSpec(side, cells.index(cell) + 1)
    raise InvalidDent(f"{cell!r} is not a boundary cell of H^{spec.k}_{spec.a},{spec.b},{spec.c}")


def _arc_position(spec: HexDentSpec, d: DentSpec) -> Fraction:
    L = spec.bounds().side_lengths()
    offset = 0
    for side in CCW_SIDES:
        if side is d.side:
            break
        offset += L[side]
    return offset + Fraction(2 * d.pos - 1, 2)


_TIE_RANK = {DentKind.GAMMA: 0, DentKind.ALPHA: 1, DentKind.BETA: 2}


def cyclic_order(spec: HexDentSpec) -> list[tuple[str, UnitTriangle]]:
    """All dents (gammas included when barred) in counterclockwise boundary order.

    The walk starts at the western corner.  A gamma cell is met at the same
    moment as the bottom cell directly above it; ties go gamma, alpha, beta.
    Labels are ``alpha<i>``, ``beta<i>``, ``gamma<j>`` with indices into the
    spec's dent lists (1-based).
    """
    items = []
    for i, d in enumerate(spec.alphas, 1):
        items.append((_arc_position(spec, d), _TIE_RANK[DentKind.ALPHA], f"alpha{i}", dent_to_cell(spec, d)))
    for i, d in enumerate(spec.betas, 1):
        items.append((_arc_position(spec, d), _TIE_RANK[DentKind.BETA], f"beta{i}", dent_to_cell(spec, d)))
    if spec.barred:
        L = spec.bounds().side_lengths()
        for j in range(1, spec.k + 1):
            arc = L[Side.SW] + Fraction(2 * j - 1, 2)
            items.append((arc, _TIE_RANK[DentKind.GAMMA], f"gamma{j}", spec.gammas()[j - 1]))
    items.sort(key=lambda t: (t[0], t[1]))
    return [(label, cell) for _, _, label, cell in items]


# ---------------------------------------------------------------------------
# Dual graph


@dataclass(frozen=True)
class Graph:
    """Simple undirected graph on vertices ``0..n-1`` with optional labels."""

    n: int
    edges: tuple[tuple[int, int], ...]
    labels: tuple = ()

    def adjacency(self) -> list[list[int]]:
        adj: list[list[int]] = [[] for _ in range(self.n)]
        for u, v in self.edges:
            adj[u].append(v)
            adj[v].append(u)
        return adj


def dual_graph(r: Region) -> Graph:
    """Planar dual of ``r``: one vertex per cell in scan order, edges across shared edges."""
    cells = sorted(r.cells, key=scan_key)
    index = {c: i for i, c in enumerate(cells)}
    edges = []
    for c in cells:
        if c.orient == DOWN:
            for nb in neighbors(c):
                if nb in index:
                    edges.append(tuple(sorted((index[c], index[nb]))))
    edges.sort()
    return Graph(len(cells), tuple(edges), tuple(cells))


# ---------------------------------------------------------------------------
# Forced lozenges


class _Untileable:
    _inst = None

    def __new__(cls):
        if cls._inst is None:
            cls._inst = super().__new__(cls)
        return cls._inst

    def __repr__(self) -> str:
        return "UNTILEABLE"

    def __bool__(self) -> bool:
        return False


UNTILEABLE = _Untileable()


@dataclass(frozen=True)
class Reduced:
    region: Region
    lozenges: tuple[tuple[UnitTriangle, UnitTriangle], ...] = field(default=())


def reduce_forced(r: Region, rng: random.Random | None = None) -> Reduced | _Untileable:
    """Remove lozenges forced by cells with a single coverable neighbour.

    Returns :data:`UNTILEABLE` as soon as some cell has no neighbour left.
    ``rng`` shuffles the processing order (the result does not depend on it).
    """
    cells = set(r.cells)
    deg = {c: sum(1 for n in neighbors(c) if n in cells) for c in cells}
    if any(d == 0 for d in deg.values()):
        return UNTILEABLE
    queue = [c for c, d in deg.items() if d == 1]
    if rng is not None:
        rng.shuffle(queue)
    else:
        queue.sort(key=scan_key)
    queue = deque(queue)
    placed = []
    while queue:
        if rng is not None and len(queue) > 1:
            queue.rotate(-rng.randrange(len(queue)))
        c = queue.popleft()
        if c not in cells:
            continue
        partners = [n for n in neighbors(c) if n in cells]
        if not partners:
            return UNTILEABLE
        if len(partners) > 1:
            continue
        p = partners[0]
        cells.discard(c)
        cells.discard(p)
        placed.append((c, p) if c.orient == UP else (p, c))
        for removed in (c, p):
            for n in neighbors(removed):
                if n in cells:
                    deg[n] -= 1
                    if deg[n] == 0:
                        return UNTILEABLE
                    if deg[n] == 1:
                        queue.append(n)
    return Reduced(Region(cells), tuple(placed))


# ---------------------------------------------------------------------------
# Lattice symmetries


def _mat_mul(A, B):
    return ((A[0][0] * B[0][0] + A[0][1] * B[1][0], A[0][0] * B[0][1] + A[0][1] * B[1][1]),
            (A[1][0] * B[0][0] + A[1][1] * B[1][0], A[1][0] * B[0][1] + A[1][1] * B[1][1]))


_ROT60 = ((0, -1), (1, 1))      # (x, y) -> (-y, x + y)
_SWAP = ((0, 1), (1, 0))        # (x, y) -> (y, x): mirror through the 30 degree line


def _build_group():
    mats = []
    R = ((1, 0), (0, 1))
    for _ in range(6):
        mats.append(R)
        R = _mat_mul(_ROT60, R)
    mats += [_mat_mul(m, _SWAP) for m in mats[:6]]
    return tuple(mats)


SYMMETRIES = _build_group()
# indices of the symmetries that keep up-cells up-pointing
ORIENTATION_PRESERVING = (0, 2, 4, 6, 8, 10)


def apply_symmetry(g: int, cell: UnitTriangle) -> UnitTriangle:
    (a, b), (c, d) = SYMMETRIES[g]
    px, py = 3 * cell.x + 1 + cell.orient, 3 * cell.y + 1 + cell.orient
    qx, qy = a * px + b * py, c * px + d * py
    o = qx % 3 - 1
    assert qy % 3 - 1 == o
    return UnitTriangle((qx - 1 - o) // 3, (qy - 1 - o) // 3, Orient(o))


def transform(g: int, cells: Iterable[UnitTriangle]) -> frozenset[UnitTriangle]:
    return frozenset(apply_symmetry(g, c) for c in cells)


def normalize(cells: Iterable[UnitTriangle]) -> frozenset[UnitTriangle]:
    """Translate so the minimal x and y over all cells are zero."""
    cells = list(cells)
    if not cells:
        return frozenset()
    mx = min(c.x for c in cells)
    my = min(c.y for c in cells)
    return frozenset(UnitTriangle(c.x - mx, c.y - my, c.orient) for c in cells)


def canonical_form(cells: Iterable[UnitTriangle]) -> tuple[UnitTriangle, ...]:
    """Representative of the orbit under translations and the 12 lattice symmetries."""
    cells = list(cells)
    best = None
    for g in range(len(SYMMETRIES)):
        key = tuple(sorted(normalize(transform(g, cells)), key=scan_key))
        if best is None or key < best:
            best = key
    return best or ()


# ---------------------------------------------------------------------------
# Region families with closed-form counts


def region_plain(a: int, b: int, c: int) -> Region:
    return Region(hexagon_bounds(a, b, c, a, b, c).cells())


def region_adjacent(a: int, b: int, c: int, j: int, k: int) -> Region:
    """H_{a,b,c} with an up-dent on the bottom side and a down-dent on the SE side.

    Both positions are counted from the bottom-right corner, which the two
    sides (of lengths a and c) share.
    """
    B = hexagon_bounds(a, b, c, a, b, c)
    bottom, se = B.side_cells(Side.BOTTOM), B.side_cells(Side.SE)
    if not (1 <= j <= len(bottom) and 1 <= k <= len(se)):
        raise InvalidDent(f"adjacent dents j={j}, k={k} out of range for sides {a}, {c}")
    return Region(B.cells()).without(bottom[-j], se[k - 1])


def region_opposite(a: int, b: int, c: int, i: int, j: int) -> Region:
    """H_{a,b,c} with an up-dent on the bottom and a down-dent on the top.

    The bottom dent is counted from the corner shared with the SW side
    (length b); the top dent from the corner shared with the NW side
    (length c).  Both therefore count from the left.
    """
    B = hexagon_bounds(a, b, c, a, b, c)
    bottom, top = B.side_cells(Side.BOTTOM), B.side_cells(Side.TOP)[::-1]
    if not (1 <= i <= len(bottom) and 1 <= j <= len(top)):
        raise InvalidDent(f"opposite dents i={i}, j={j} out of range 1..{a}")
    return Region(B.cells()).without(bottom[i - 1], top[j - 1])


def region_trapezoid(m: int, n: int, xs: Sequence[int]) -> Region:
    """Trapezoid with bottom m, legs n, top m+n, minus top down-cells at ``xs`` (from the left)."""
    B = hexagon_bounds(m + n, 0, n, m, n, 0)
    top = B.side_cells(Side.TOP)[::-1]
    if len(xs) != n or any(not 1 <= x <= m + n for x in xs) or len(set(xs)) != n:
        raise InvalidDent(f"positions {list(xs)} invalid for trapezoid m={m}, n={n}")
    return Region(B.cells()).without(*(top[x - 1] for x in xs))


def up_triangle_cells(x0: int, y0: int, size: int) -> list[UnitTriangle]:
    """Unit cells of the up-pointing triangle of side ``size`` with lower-left corner (x0, y0)."""
    out = []
    for y in range(y0, y0 + size):
        for x in range(x0, x0 + size):
            if x + y <= x0 + y0 + size - 1:
                out.append(Up(x, y))
            if x + y <= x0 + y0 + size - 2:
                out.append(Down(x, y))
    return out


def region_notch(a: int, b: int, c: int, k: int, l: int, variant: str) -> Region:
    """Hexagon a, b+k+1, c, a+k+1, b, c+k+1 with a NW up-dent and a side-k NE notch.

    The NW dent is the up cell whose lower corner is ``l`` units above the
    western corner.  Variant ``"A"`` puts the notch one unit above the
    eastern corner, variant ``"B"`` one unit below the northeastern corner.
    """
    K = k + 1
    B = hexagon_bounds(a, b + K, c, a + K, b, c + K)
    if not 0 <= l <= c + k:
        raise InvalidDent(f"NW offset l={l} out of range 0..{c + k}")
    nw = Up(-b, b + l)
    if variant == "A":
        notch = up_triangle_cells(a, c + 1, k)
    elif variant == "B":
        notch = up_triangle_cells(a - b + 1, b + c, k)
    else:
        raise ValueError(f"unknown notch variant {variant!r}")
    return Region(B.cells()).without(nw, *notch)


# ---------------------------------------------------------------------------
# Classification


class RegionTag(Enum):
    PLAIN_HEXAGON = "PlainHexagon"
    HEX_TWO_DENTS_ADJACENT = "HexTwoDentsAdjacent"
    HEX_TWO_DENTS_OPPOSITE = "HexTwoDentsOpposite"
    TRAPEZOID_TOP_DENTS = "TrapezoidTopDents"
    NOTCH_REGION_A = "NotchRegionA"
    NOTCH_REGION_B = "NotchRegionB"
    EMPTY = "Empty"
    UNTILEABLE = "Untileable"
    UNKNOWN = "Unknown"


@dataclass(frozen=True)
class RegionClass:
    tag: RegionTag
    params: tuple = ()
    symmetry: int | None = None


def _missing_on(B: HexBounds, side: Side, region: frozenset) -> list[int]:
    """1-based ccw positions of side cells absent from ``region``."""
    return [i for i, c in enumerate(B.side_cells(side), 1) if c not in region]


def _propose_plain(R, B, missing):
    if not missing and B.is_centrally_symmetric():
        L = B.side_lengths()
        yield RegionTag.PLAIN_HEXAGON, (L[Side.TOP], L[Side.NE], L[Side.SE])


def _propose_adjacent(R, B, missing):
    if not missing or not B.is_centrally_symmetric():
        return
    L = B.side_lengths()
    a, b, c = L[Side.BOTTOM], L[Side.SW], L[Side.SE]
    bot = _missing_on(B, Side.BOTTOM, R)
    se = _missing_on(B, Side.SE, R)
    if len(missing) == 2 and len(bot) == 1 and len(se) == 1:
        yield RegionTag.HEX_TWO_DENTS_ADJACENT, (a, b, c, a + 1 - bot[0], se[0])
        return
    # forced lozenges may have merged a dent with its neighbours; try them all
    for j in range(1, a + 1):
        for k in range(1, c + 1):
            yield RegionTag.HEX_TWO_DENTS_ADJACENT, (a, b, c, j, k)


def _propose_opposite(R, B, missing):
    if not missing or not B.is_centrally_symmetric():
        return
    L = B.side_lengths()
    a, b, c = L[Side.TOP], L[Side.NE], L[Side.SE]
    bot = _missing_on(B, Side.BOTTOM, R)
    top = _missing_on(B, Side.TOP, R)
    if len(missing) == 2 and len(bot) == 1 and len(top) == 1:
        yield RegionTag.HEX_TWO_DENTS_OPPOSITE, (a, b, c, bot[0], a + 1 - top[0])
        return
    for i in range(1, a + 1):
        for j in range(1, a + 1):
            yield RegionTag.HEX_TWO_DENTS_OPPOSITE, (a, b, c, i, j)


def _propose_trapezoid(R, B, missing):
    n = B.ymax - B.ymin
    T = HexBounds(B.smin - B.ymax, B.xmax, B.ymin, B.ymax, B.smin, B.xmax + B.ymax)
    m = T.side_lengths()[Side.BOTTOM]
    if n <= 0 or m < 0:
        return
    if not all(T.contains(c) for c in R):
        return
    top = T.side_cells(Side.TOP)[::-1]
    xs = tuple(i for i, c in enumerate(top, 1) if c not in R)
    if len(xs) == n:
        yield RegionTag.TRAPEZOID_TOP_DENTS, (m, n, xs)


def _propose_notch(R, B, missing):
    L = B.side_lengths()
    a, b, c = L[Side.TOP], L[Side.SW], L[Side.SE]
    K = L[Side.BOTTOM] - a
    if K < 1 or L[Side.NE] != b + K or L[Side.NW] != c + K:
        return
    k = K - 1
    west_y = B.smin - B.xmin
    nw_missing = [c_.y - west_y for c_ in B.side_cells(Side.NW) if c_ not in R]
    candidates = nw_missing if len(nw_missing) == 1 else range(c + k + 1)
    for l in candidates:
        yield RegionTag.NOTCH_REGION_A, (a, b, c, k, l)
        yield RegionTag.NOTCH_REGION_B, (a, b, c, k, l)


_PROPOSERS = (_propose_plain, _propose_adjacent, _propose_opposite, _propose_trapezoid, _propose_notch)


def template(tag: RegionTag, params: tuple) -> Region:
    """Canonically placed region for a recognised family and parameter tuple."""
    if tag is RegionTag.PLAIN_HEXAGON:
        return region_plain(*params)
    if tag is RegionTag.HEX_TWO_DENTS_ADJACENT:
        return region_adjacent(*params)
    if tag is RegionTag.HEX_TWO_DENTS_OPPOSITE:
        return region_opposite(*params)
    if tag is RegionTag.TRAPEZOID_TOP_DENTS:
        return region_trapezoid(*params)
    if tag is RegionTag.NOTCH_REGION_A:
        return region_notch(*params, variant="A")
    if tag is RegionTag.NOTCH_REGION_B:
        return region_notch(*params, variant="B")
    if tag is RegionTag.EMPTY:
        return EMPTY_REGION
    raise ValueError(f"no template for {tag}")


@lru_cache(maxsize=None)
def _reduced_template(tag: RegionTag, params: tuple):
    try:
        t = template(tag, params)
    except (InvalidDent, ValueError):
        return None
    red = reduce_forced(t)
    if red is UNTILEABLE:
        return None
    return normalize(red.region.cells)


@lru_cache(maxsize=4096)
def _classify_cells(cells: frozenset) -> RegionClass:
    if not cells:
        return RegionClass(RegionTag.EMPTY)
    n_up = sum(1 for c in cells if c.orient == UP)
    if 2 * n_up != len(cells):
        return RegionClass(RegionTag.UNTILEABLE)
    for g in range(len(SYMMETRIES)):
        R = normalize(transform(g, cells))
        B = bounds_of(R)
        hexcells = B.cells()
        if not R <= hexcells:
            continue
        missing = hexcells - R
        for propose in _PROPOSERS:
            for tag, params in propose(R, B, missing):
                if _reduced_template(tag, params) == R:
                    return RegionClass(tag, params, g)
    return RegionClass(RegionTag.UNKNOWN)


def classify(r: Region) -> RegionClass:
    """Recognise a forced-reduced region as one of the closed-form families.

    The region is tried in each of the 12 lattice orientations; in each one
    the family parameters are read off its bounding hexagon and missing
    boundary cells, and accepted only if the forced reduction of the
    rebuilt family member coincides with the region up to translation.
    ``symmetry`` records the orientation that matched.
    """
    return _classify_cells(r.cells)
