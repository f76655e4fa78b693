"""Command line: count, verify, sweep, identities and render.

A region is given as a JSON document::

    {"a": 2, "b": 2, "c": 2, "k": 1,
     "alpha": [{"side": "S", "pos": 1}, {"side": "NE", "pos": 1}],
     "beta":  [{"side": "N", "pos": 1}]}

Sides use compass tags (alpha dents on S, NE, NW; beta dents on N, SE, SW)
and positions are 1-based, counted counterclockwise along each side.

Exit codes: 0 success, 1 a check failed, 2 unparsable input, 3 invalid
region spec (or a method that does not apply to it), 4 an internal
invariant was violated.
"""

from __future__ import annotations

import argparse
import json
import math
import os
import sys
import time
from concurrent.futures import ProcessPoolExecutor
from typing import Sequence

from .condensation import (
    NonIntegerResult,
    UnclassifiableResidual,
    closed_form_count,
    theorem1_count,
    theorem2_count,
    theorem3_count,
)
from .lattice import (
    BETA_SIDES,
    UNTILEABLE,
    UP,
    DentKind,
    DentSpec,
    HexDentSpec,
    InvalidDent,
    Region,
    RegionTag,
    Side,
    UnitTriangle,
    Down,
    build_hexagon,
    classify,
    dent_cells,
    reduce_forced,
    scan_key,
)
from .oracle import count_tilings, enumerate_tilings
from .suite import all_specs, check_spec, random_spec, run_identities, spec_to_json

EXIT_OK = 0
EXIT_FAILED = 1
EXIT_PARSE = 2
EXIT_INVALID = 3
EXIT_INTERNAL = 4


class SpecParseError(ValueError):
    pass


class NotApplicable(ValueError):
    pass


# ---------------------------------------------------------------------------
# Spec files


def _int_field(doc: dict, key: str, default: int | None = None) -> int:
    if key not in doc:
        if default is None:
            raise SpecParseError(f"missing field {key!r}")
        return default
    value = doc[key]
    if isinstance(value, bool) or not isinstance(value, int):
        raise SpecParseError(f"field {key!r} must be an integer")
    return value


def _dents(doc: dict, key: str) -> tuple[DentSpec, ...]:
    items = doc.get(key, [])
    if not isinstance(items, list):
        raise SpecParseError(f"field {key!r} must be a list")
    out = []
    for item in items:
        if not isinstance(item, dict) or not isinstance(item.get("side"), str):
            raise SpecParseError(f"each {key} dent needs a string 'side' and an integer 'pos'")
        pos = _int_field(item, "pos")
        out.append((item["side"], pos))
    kind = DentKind.ALPHA if key == "alpha" else DentKind.BETA
    return tuple(DentSpec(Side.parse(side), pos, kind) for side, pos in out)


def parse_spec(text: str) -> HexDentSpec:
    """Parse and validate a region spec.

    Raises SpecParseError for malformed JSON or fields, InvalidDent for a
    well-formed document that does not describe a valid dented hexagon.
    """
    try:
        doc = json.loads(text)
    except json.JSONDecodeError as exc:
        raise SpecParseError(f"not valid JSON: {exc}") from None
    if not isinstance(doc, dict):
        raise SpecParseError("spec must be a JSON object")
    a, b, c = (_int_field(doc, key) for key in "abc")
    k = _int_field(doc, "k", 0)
    spec = HexDentSpec(a, b, c, k, _dents(doc, "alpha"), _dents(doc, "beta"))
    dent_cells(spec)
    if len(spec.alphas) != spec.n + spec.k:
        raise InvalidDent(f"need len(alpha) = len(beta) + k = {spec.n + spec.k}, got {len(spec.alphas)}")
    return spec


def read_spec(path: str) -> HexDentSpec:
    if path == "-":
        return parse_spec(sys.stdin.read())
    try:
        with open(path, encoding="utf-8") as fh:
            return parse_spec(fh.read())
    except OSError as exc:
        raise SpecParseError(f"cannot read {path}: {exc.strerror}") from None


# ---------------------------------------------------------------------------
# Counting methods


def count_formula(spec: HexDentSpec) -> int:
    try:
        return closed_form_count(build_hexagon(spec))
    except UnclassifiableResidual:
        raise NotApplicable("region has no direct closed form") from None


def has_direct_formula(spec: HexDentSpec) -> bool:
    r = build_hexagon(spec)
    if not r.balanced:
        return True
    red = reduce_forced(r)
    return red is UNTILEABLE or classify(red.region).tag is not RegionTag.UNKNOWN


def theorem1_applies(spec: HexDentSpec) -> bool:
    return any(all(d.side is not s for d in spec.betas) for s in BETA_SIDES)


def count_pfaffian(spec: HexDentSpec) -> int:
    if spec.k == 0:
        return theorem3_count(spec)
    if theorem1_applies(spec):
        return theorem1_count(spec)
    return theorem2_count(spec)


def count_auto(spec: HexDentSpec) -> int:
    if has_direct_formula(spec):
        return count_formula(spec)
    return count_pfaffian(spec)


METHODS = {
    "auto": count_auto,
    "oracle": lambda spec: count_tilings(build_hexagon(spec)),
    "pfaffian": count_pfaffian,
    "formula": count_formula,
}


def verify_methods(spec: HexDentSpec) -> list[tuple[str, object]]:
    """Every method that applies to ``spec``, as (name, callable) pairs."""
    out = [("oracle", METHODS["oracle"])]
    if has_direct_formula(spec):
        out.append(("formula", count_formula))
    if spec.k == 0:
        out.append(("theorem3", theorem3_count))
    else:
        if theorem1_applies(spec):
            out.append(("theorem1", theorem1_count))
        out.append(("theorem2", theorem2_count))
    return out


# ---------------------------------------------------------------------------
# Rendering

# Each text line holds one strip of cells plus the horizontal edges on its
# lower boundary.  An edge is named by its up-pointing cell and a glyph:
# '/' the left edge, '\' the right edge, '_' the bottom edge.


def _edges(cell: UnitTriangle):
    """(up-cell, glyph, other cell) for the three edges of ``cell``."""
    x, y = cell.x, cell.y
    if cell.orient == UP:
        return [(cell, "/", Down(x - 1, y)), (cell, "\\", Down(x, y)), (cell, "_", Down(x, y - 1))]
    return [(UnitTriangle(x, y, UP), "\\", cell),
            (UnitTriangle(x + 1, y, UP), "/", cell),
            (UnitTriangle(x, y + 1, UP), "_", cell)]


def _partner_map(tiling) -> dict:
    partner = {}
    for u, d in tiling or ():
        partner[u] = d
        partner[d] = u
    return partner


def render_ascii(region: Region, tiling=None) -> str:
    if not region.cells:
        return ""
    partner = _partner_map(tiling)
    glyphs: dict[tuple[int, int], str] = {}
    offsets = {"/": 1, "_": 2, "\\": 3}
    for cell in region.cells:
        for up, glyph, other in _edges(cell):
            inside = [c for c in (up, other) if c in region]
            if tiling is not None and len(inside) == 2 and partner.get(up) == other:
                continue
            glyphs[(up.y, 4 * up.x + 2 * up.y + offsets[glyph])] = glyph
    rows = sorted({r for r, _ in glyphs}, reverse=True)
    col0 = min(c for _, c in glyphs)
    lines = []
    for r in range(rows[0], rows[-1] - 1, -1):
        cols = {c - col0: g for (rr, c), g in glyphs.items() if rr == r}
        width = max(cols) + 1 if cols else 0
        lines.append("".join(cols.get(i, " ") for i in range(width)).rstrip())
    return "\n".join(lines) + "\n"


_LOZENGE_FILL = {"/": "#e8b04a", "\\": "#5d8fc9", "_": "#b9d98c"}


def render_svg(region: Region, tiling=None, scale: float = 24.0) -> str:
    cells = sorted(region.cells, key=scan_key)
    if not cells:
        return '<svg xmlns="http://www.w3.org/2000/svg" width="0" height="0"></svg>\n'
    h = math.sqrt(3) / 2
    pts = [p for c in cells for p in c.vertices()]
    ymax = max(y for _, y in pts)
    xs = [x + y / 2 for x, y in pts]
    x0 = min(xs)

    def xy(p):
        x, y = p
        return f"{(x + y / 2 - x0) * scale + 2:.2f},{(ymax - y) * h * scale + 2:.2f}"

    width = (max(xs) - x0) * scale + 4
    height = (ymax - min(y for _, y in pts)) * h * scale + 4
    out = [f'<svg xmlns="http://www.w3.org/2000/svg" width="{width:.2f}" height="{height:.2f}">']
    for c in cells:
        kind = "up" if c.orient == UP else "down"
        out.append(f'<polygon class="cell {kind}" points="{" ".join(xy(p) for p in c.vertices())}" '
                   f'fill="none" stroke="#999" stroke-width="0.5"/>')
    for up, down in sorted(tiling or (), key=lambda p: scan_key(p[0])):
        glyph = next(g for _, g, other in _edges(up) if other == down)
        a, b, c = up.vertices()
        (far,) = [v for v in down.vertices() if v not in (a, b, c)]
        shared = [v for v in up.vertices() if v in down.vertices()]
        (apex,) = [v for v in up.vertices() if v not in shared]
        poly = [apex, shared[0], far, shared[1]]
        out.append(f'<polygon class="lozenge" points="{" ".join(xy(p) for p in poly)}" '
                   f'fill="{_LOZENGE_FILL[glyph]}" stroke="#222" stroke-width="1"/>')
    out.append("</svg>")
    return "\n".join(out) + "\n"


# ---------------------------------------------------------------------------
# Subcommands


def cmd_count(args) -> int:
    spec = read_spec(args.specfile)
    print(METHODS[args.method](spec))
    return EXIT_OK


def cmd_verify(args) -> int:
    spec = read_spec(args.specfile)
    values = []
    print(f"{'method':<10} {'count':>24} {'seconds':>9}")
    for name, fn in verify_methods(spec):
        t0 = time.perf_counter()
        value = fn(spec)
        dt = time.perf_counter() - t0
        values.append(value)
        print(f"{name:<10} {value:>24} {dt:>9.3f}")
    agree = len(set(values)) == 1
    print("agree" if agree else "DISAGREE")
    return EXIT_OK if agree else EXIT_FAILED


def _threads() -> int:
    try:
        return max(1, int(os.environ.get("DENTHEX_THREADS", "1")))
    except ValueError:
        return 1


def sweep_specs(args) -> list[HexDentSpec]:
    if args.samples:
        import random
        rng = random.Random(args.seed)
        specs = []
        for _ in range(args.samples):
            k, n = rng.randint(0, args.kmax), rng.randint(0, args.nmax)
            spec = random_spec(rng, args.amax, args.bmax, args.cmax, k, n)
            if spec is not None:
                specs.append(spec)
        return specs
    return list(all_specs(args.amax, args.bmax, args.cmax, args.kmax, args.nmax))


def cmd_sweep(args) -> int:
    specs = sweep_specs(args)
    workers = _threads()
    if workers > 1:
        with ProcessPoolExecutor(workers) as pool:
            outcomes = list(pool.map(check_spec, specs, chunksize=16))
    else:
        outcomes = [check_spec(s) for s in specs]
    failures = [o for o in outcomes if not o.ok]
    for o in failures:
        print(f"FAIL oracle={o.oracle} {o.theorems} spec={json.dumps(spec_to_json(o.spec))}")
    print(f"checked {len(outcomes)} configurations, {len(failures)} failures")
    return EXIT_OK if not failures else EXIT_FAILED


def cmd_identities(args) -> int:
    results = run_identities(args.trials, args.seed)
    for r in results:
        print(f"{r.name:<18} {r.passed}/{r.total} {'ok' if r.ok else 'FAIL'}")
    return EXIT_OK if all(r.ok for r in results) else EXIT_FAILED


def cmd_render(args) -> int:
    spec = read_spec(args.specfile)
    region = build_hexagon(spec)
    tiling = None
    if args.with_tiling:
        found = enumerate_tilings(region, 1)
        if not found:
            print("region has no tilings", file=sys.stderr)
            return EXIT_INVALID
        tiling = found[0]
    text = render_ascii(region, tiling) if args.format == "ascii" else render_svg(region, tiling)
    if args.out:
        with open(args.out, "w", encoding="utf-8", newline="\n") as fh:
            fh.write(text)
    else:
        sys.stdout.write(text)
    return EXIT_OK


def build_parser() -> argparse.ArgumentParser:
    p = argparse.ArgumentParser(prog="denthex", description="Exact lozenge-tiling counts for dented hexagons.")
    sub = p.add_subparsers(dest="command", required=True)

    c = sub.add_parser("count", help="print the number of tilings")
    c.add_argument("specfile", help="JSON region spec, or - for stdin")
    c.add_argument("--method", choices=sorted(METHODS), default="auto")
    c.set_defaults(func=cmd_count)

    v = sub.add_parser("verify", help="run every applicable method and compare")
    v.add_argument("specfile")
    v.set_defaults(func=cmd_verify)

    s = sub.add_parser("sweep", help="cross-check the Pfaffian theorems against brute force")
    for name, default in (("amax", 2), ("bmax", 2), ("cmax", 2), ("kmax", 1), ("nmax", 1)):
        s.add_argument(f"--{name}", type=int, default=default)
    s.add_argument("--seed", type=int, default=0)
    s.add_argument("--samples", type=int, default=0, help="random configurations to draw (0: all)")
    s.set_defaults(func=cmd_sweep)

    i = sub.add_parser("identities", help="check the hypergeometric, Kuo and recurrence identities")
    i.add_argument("--trials", type=int, default=100)
    i.add_argument("--seed", type=int, default=0)
    i.set_defaults(func=cmd_identities)

    r = sub.add_parser("render", help="draw the region, optionally with one tiling")
    r.add_argument("specfile")
    r.add_argument("--format", choices=("ascii", "svg"), default="ascii")
    r.add_argument("--with-tiling", action="store_true")
    r.add_argument("--out")
    r.set_defaults(func=cmd_render)
    return p


def main(argv: Sequence[str] | None = None) -> int:
    parser = build_parser()
    try:
        args = parser.parse_args(argv)
    except SystemExit as exc:
        return EXIT_PARSE if exc.code else EXIT_OK
    try:
        return args.func(args)
    except SpecParseError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_PARSE
    except (InvalidDent, NotApplicable) as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_INVALID
    except (NonIntegerResult, AssertionError) as exc:
        print(f"internal error: {exc}", file=sys.stderr)
        return EXIT_INTERNAL


if __name__ == "__main__":
    sys.exit(main())
