"""Random instance generators, the identity runner and the cross-check sweep.

Shared by the command line and the acceptance tests.
"""

from __future__ import annotations

import itertools
import random
from dataclasses import dataclass
from fractions import Fraction
from typing import Iterator

from .condensation import (
    check_kuo_four_one,
    check_kuo_two_two,
    theorem1_count,
    theorem2_count,
    theorem3_count,
)
from .exactmath import (
    CONTIGUOUS,
    HypSeries,
    InstanceNotEvaluable,
    check_chu_vandermonde,
    check_contiguous,
    check_pfaff_saalschutz,
)
from .formulas import check_rec_adjacent, check_rec_opposite
from .lattice import (
    ALPHA_SIDES,
    BETA_SIDES,
    CCW_SIDES,
    UP,
    DentSpec,
    HexDentSpec,
    InvalidDent,
    Side,
    build_hexagon,
    dent_cells,
)
from .oracle import count_tilings


def _rat(rng: random.Random) -> Fraction:
    """A random non-integer rational with a small denominator."""
    while True:
        q = rng.choice((2, 3, 5, 7))
        p = rng.randint(-12, 12)
        if p % q:
            return Fraction(p, q)


# ---------------------------------------------------------------------------
# Hypergeometric identities


def _evaluable(check, args) -> bool:
    try:
        check(*args)
    except ZeroDivisionError:
        return False
    return True


def random_chu_vandermonde(rng: random.Random) -> tuple:
    while True:
        args = (_rat(rng), _rat(rng), rng.randint(0, 6))
        if _evaluable(check_chu_vandermonde, args):
            return args


def random_pfaff_saalschutz(rng: random.Random) -> tuple:
    """Parameters with no vanishing Pochhammer in any denominator."""
    while True:
        args = (_rat(rng), _rat(rng), _rat(rng), rng.randint(0, 6))
        if _evaluable(check_pfaff_saalschutz, args):
            return args


_CONTIG_SHAPE = {"C30": (3, 2), "C40": (2, 2), "C42": (2, 2), "C54": (3, 2), "C55": (3, 2), "C57": (2, 3)}


def random_contiguous(rel: str, rng: random.Random) -> HypSeries:
    """A terminating instance of ``rel``: a negative integer sits among the free upper parameters."""
    nu, nl = _CONTIG_SHAPE[rel]
    while True:
        upper = [_rat(rng) for _ in range(nu)]
        lower = [_rat(rng) for _ in range(nl)]
        upper[-1] = Fraction(-rng.randint(1, 5))
        z = rng.choice((Fraction(1), _rat(rng)))
        h = HypSeries(upper, lower, z)
        try:
            check_contiguous(rel, h)
        except InstanceNotEvaluable:
            continue
        return h


# ---------------------------------------------------------------------------
# Dented hexagons


def random_spec(rng: random.Random, amax: int, bmax: int, cmax: int, k: int, n: int,
                beta_sides=BETA_SIDES, amin: int = 1) -> HexDentSpec | None:
    """A random H^k_{a,b,c} with n+k alpha and n beta dents, or None if it has no room."""
    for _ in range(100):
        a, b, c = rng.randint(amin, amax), rng.randint(amin, bmax), rng.randint(amin, cmax)
        base = HexDentSpec(a, b, c, k)
        B = base.bounds()
        al = [(s, i) for s in ALPHA_SIDES for i in range(1, len(B.side_cells(s)) + 1)]
        be = [(s, i) for s in beta_sides for i in range(1, len(B.side_cells(s)) + 1)]
        if len(al) < n + k or len(be) < n:
            continue
        spec = base.replace(alphas=tuple(DentSpec(*x) for x in rng.sample(al, n + k)),
                            betas=tuple(DentSpec(*x) for x in rng.sample(be, n)))
        try:
            dent_cells(spec)
        except InvalidDent:
            continue
        return spec
    return None


def all_specs(amax: int, bmax: int, cmax: int, kmax: int, nmax: int, amin: int = 1) -> Iterator[HexDentSpec]:
    """Every dent configuration within the bounds, in a fixed order."""
    for a, b, c in itertools.product(range(amin, amax + 1), range(amin, bmax + 1), range(amin, cmax + 1)):
        for k in range(kmax + 1):
            base = HexDentSpec(a, b, c, k)
            B = base.bounds()
            al = [(s, i) for s in ALPHA_SIDES for i in range(1, len(B.side_cells(s)) + 1)]
            be = [(s, i) for s in BETA_SIDES for i in range(1, len(B.side_cells(s)) + 1)]
            for n in range(nmax + 1):
                for A in itertools.combinations(al, n + k):
                    for Bt in itertools.combinations(be, n):
                        spec = base.replace(alphas=tuple(DentSpec(*x) for x in A),
                                            betas=tuple(DentSpec(*x) for x in Bt))
                        try:
                            dent_cells(spec)
                        except InvalidDent:
                            continue
                        yield spec


def boundary_cycle(spec: HexDentSpec) -> list:
    """Cells of the hexagon's rim still present after the dents, counterclockwise."""
    B = spec.bounds()
    alphas, betas = dent_cells(spec)
    gone = set(alphas) | set(betas)
    out = []
    for side in CCW_SIDES:
        out += [c for c in B.side_cells(side) if c not in gone and c not in out]
    return out


def random_kuo_instance(rng: random.Random, pattern: str):
    """(region, w, x, y, z) with orientations alternating ("four_one") or paired ("two_two")."""
    while True:
        spec = random_spec(rng, 3, 3, 3, 0, rng.randint(0, 1))
        if spec is None:
            continue
        cycle = boundary_cycle(spec)
        ups = [i for i, c in enumerate(cycle) if c.orient == UP]
        downs = [i for i, c in enumerate(cycle) if c.orient != UP]
        if len(ups) < 2 or len(downs) < 2:
            continue
        idx = sorted(rng.sample(ups, 2) + rng.sample(downs, 2))
        up = [cycle[i].orient == UP for i in idx]
        # rotate so the sequence starts with an Up cell in the requested pattern
        for r in range(4):
            rot = up[r:] + up[:r]
            want = [True, False, True, False] if pattern == "four_one" else [True, True, False, False]
            if rot == want:
                cells = [cycle[i] for i in idx[r:] + idx[:r]]
                return (build_hexagon(spec), *cells)


# ---------------------------------------------------------------------------
# Identity runner


@dataclass
class IdentityResult:
    name: str
    passed: int
    total: int

    @property
    def ok(self) -> bool:
        return self.passed == self.total


def _random_rec_adjacent(rng):
    a, c = rng.randint(2, 4), rng.randint(2, 4)
    return a, rng.randint(1, 4), c, rng.randint(1, a - 1), rng.randint(1, c - 1)


def _random_rec_opposite(rng):
    a = rng.randint(3, 5)
    return a, rng.randint(1, 4), rng.randint(1, 4), rng.randint(2, a - 1), rng.randint(2, a - 1)


def run_identities(trials: int = 100, seed: int = 0) -> list[IdentityResult]:
    """Every identity over ``trials`` random admissible instances each."""
    rng = random.Random(seed)
    results = []

    def run(name, gen, check):
        passed = sum(1 for _ in range(trials) if check(gen()))
        results.append(IdentityResult(name, passed, trials))

    run("chu_vandermonde", lambda: random_chu_vandermonde(rng), lambda t: check_chu_vandermonde(*t))
    run("pfaff_saalschutz", lambda: random_pfaff_saalschutz(rng), lambda t: check_pfaff_saalschutz(*t))
    for rel in CONTIGUOUS:
        run(rel, lambda rel=rel: random_contiguous(rel, rng), lambda h, rel=rel: check_contiguous(rel, h))
    run("kuo_four_one", lambda: random_kuo_instance(rng, "four_one"), lambda t: check_kuo_four_one(*t))
    run("kuo_two_two", lambda: random_kuo_instance(rng, "two_two"), lambda t: check_kuo_two_two(*t))
    run("rec_adjacent", lambda: _random_rec_adjacent(rng), lambda t: check_rec_adjacent(*t))
    run("rec_opposite", lambda: _random_rec_opposite(rng), lambda t: check_rec_opposite(*t))
    return results


# ---------------------------------------------------------------------------
# Cross-check sweep


@dataclass
class SweepOutcome:
    spec: HexDentSpec
    oracle: int
    theorems: dict[str, int | str]

    @property
    def ok(self) -> bool:
        return all(v == self.oracle for v in self.theorems.values())


def applicable_theorems(spec: HexDentSpec) -> list[str]:
    if spec.k == 0:
        return ["theorem3"]
    names = ["theorem2"]
    if any(all(d.side is not s for d in spec.betas) for s in BETA_SIDES):
        names.insert(0, "theorem1")
    return names


def run_theorem(name: str, spec: HexDentSpec) -> int:
    return {"theorem1": theorem1_count, "theorem2": theorem2_count, "theorem3": theorem3_count}[name](spec)


def check_spec(spec: HexDentSpec) -> SweepOutcome:
    """Oracle count against every applicable Pfaffian theorem; errors are recorded, not raised."""
    oracle = count_tilings(build_hexagon(spec))
    got: dict[str, int | str] = {}
    for name in applicable_theorems(spec):
        try:
            got[name] = run_theorem(name, spec)
        except (ArithmeticError, ValueError, RuntimeError, AssertionError) as exc:
            got[name] = f"{type(exc).__name__}: {exc}"
    return SweepOutcome(spec, oracle, got)


def spec_to_json(spec: HexDentSpec) -> dict:
    return {
        "a": spec.a, "b": spec.b, "c": spec.c, "k": spec.k,
        "alpha": [{"side": d.side.value, "pos": d.pos} for d in spec.alphas],
        "beta": [{"side": d.side.value, "pos": d.pos} for d in spec.betas],
    }


__all__ = [
    "IdentityResult",
    "SweepOutcome",
    "Side",
    "all_specs",
    "applicable_theorems",
    "boundary_cycle",
    "check_spec",
    "random_contiguous",
    "random_kuo_instance",
    "random_spec",
    "run_identities",
    "run_theorem",
    "spec_to_json",
]
