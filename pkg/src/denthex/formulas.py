"""Closed-form tiling counts for the two-dent and notched families, and the
condensation recurrences they satisfy.

All evaluation is exact; every function returns a Python ``int`` and
asserts that the rational intermediate really was integral.
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from math import comb, factorial
from typing import Sequence

from .exactmath import hyp, macmahon, pochhammer, prod


class InvalidParams(ValueError):
    pass


class InternalZeroDenominator(ArithmeticError):
    pass


def _as_count(value: Fraction, what: str) -> int:
    if value.denominator != 1 or value < 0:
        raise ArithmeticError(f"{what} evaluated to non-count {value}")
    return value.numerator


# ---------------------------------------------------------------------------
# Trapezoid with top dents


def clp_trapezoid(m: int, n: int, xs: Sequence[int]) -> int:
    """Tilings of the trapezoid (bottom m, legs n, top m+n) with top dents at ``xs``."""
    xs = list(xs)
    if m < 0 or n < 0 or len(xs) != n:
        raise InvalidParams(f"need n={n} positions, got {xs}")
    if any(not 1 <= x <= m + n for x in xs) or any(x >= y for x, y in zip(xs, xs[1:])):
        raise InvalidParams(f"positions {xs} must be strictly increasing in 1..{m + n}")
    value = Fraction(1)
    for j in range(n):
        for i in range(j):
            value *= Fraction(xs[j] - xs[i], j - i)
    return _as_count(value, "trapezoid formula")


# ---------------------------------------------------------------------------
# Hexagons with a NW dent and a NE notch


@dataclass(frozen=True)
class NotchParams:
    a: int
    b: int
    c: int
    k: int
    l: int
    variant: str = "A"


def _staircase(base: int, lo: int, hi: int) -> Fraction:
    """prod over t = 1..lo+hi-1 of (base + t)^min(t, lo, lo + hi - t)."""
    out = Fraction(1)
    for t in range(1, lo + hi):
        out *= Fraction(base + t) ** min(t, lo, lo + hi - t)
    return out


def _r_factor(b: int, k: int, c: int) -> Fraction:
    nu = min(b - 1, k)
    if nu == -1:
        return 1 / pochhammer(c + 1, k)
    if nu == 0:
        return Fraction(1)
    # bases c+2 .. c+b+k-1, exponents rising to nu, flat, then falling
    out = Fraction(1)
    top = b + k - 1
    for t in range(1, top):
        out *= Fraction(c + 1 + t) ** min(t, nu, top - t)
    return out


def _notch_poly(a: int, b: int, k: int, c: int, l: int, variant: str) -> Fraction:
    m, M = min(a, b), max(a, b)
    common = pochhammer(l + 1, b) * pochhammer(c + k - l + 1, a) * _staircase(c + k + 1, m, M)
    total = Fraction(0)
    for i in range(1, k + 2):
        term = Fraction((-1) ** (i - 1), factorial(i - 1) * factorial(k - i + 1))
        term *= pochhammer(l - k + i, k - i + 1) * pochhammer(l + b + 1, i - 1)
        if variant == "A":
            term *= pochhammer(c + 1, i - 1) * pochhammer(c + i + 1, k - i + 1)
        else:
            term *= pochhammer(l - k - c, i - 1) * pochhammer(l - k - c + i, k - i + 1)
        total += term
    if variant == "B":
        common *= _r_factor(b, k, c)
    return common * total


def gk_notch(p: NotchParams) -> int:
    """Tilings of the notched hexagon of :func:`denthex.lattice.region_notch`.

    Variant A is normalised by the box count for a x b x k (the region at
    c = l = 0 after its forced lozenges are removed).  In variant B the
    unnamed shift in the second Pochhammer factor is ``c``, as in variant A.
    """
    a, b, c, k, l = p.a, p.b, p.c, p.k, p.l
    if min(a, b, c, k) < 0 or not 0 <= l <= c + k:
        raise InvalidParams(f"invalid notch parameters {p}")
    if p.variant not in ("A", "B"):
        raise InvalidParams(f"unknown variant {p.variant!r}")
    base = _notch_poly(a, b, k, 0, 0, p.variant)
    if base == 0:
        raise InternalZeroDenominator(f"normalising polynomial vanishes at {p}")
    ratio = _notch_poly(a, b, k, c, l, p.variant) / base
    if p.variant == "A":
        value = macmahon(a, b, k) * ratio
    else:
        value = comb(a + k, k) * ratio
    return _as_count(value, f"notch formula {p}")


# ---------------------------------------------------------------------------
# Two dents on adjacent / opposite sides of H_{a,b,c}


def adjacent_dents(a: int, b: int, c: int, j: int, k: int) -> int:
    """Tilings of H_{a,b,c} minus dents on the sides of length a and c.

    Positions ``j`` and ``k`` are counted from the vertex the two sides share.
    """
    if b < 0 or not (1 <= j <= a and 1 <= k <= c):
        raise InvalidParams(f"need 1 <= j <= a and 1 <= k <= c, got a={a} c={c} j={j} k={k}")
    pre = prod((pochhammer(c + i, b) / pochhammer(1 + i, b) for i in range(a)), Fraction(1))
    series = hyp([-a + j, b, -c + k], [1 - a - c, 1 + b])
    tail = (pochhammer(1 + b, a - j) * pochhammer(j, k - 1) * pochhammer(1 + c - k, k - 1)
            / (pochhammer(1, a - j) * pochhammer(1, k - 1) * pochhammer(1 + b + c - k, k - 1)))
    return _as_count(pre * series * tail, f"adjacent formula at {(a, b, c, j, k)}")


def opposite_dents(a: int, b: int, c: int, i: int, j: int) -> int:
    """Tilings of H_{a,b,c} minus one dent on each of the two sides of length a.

    ``i`` counts from the corner shared with a side of length b, ``j`` from
    the corner shared with a side of length c.

    Lower parameters of the 4F3 can be non-positive integers at the edges
    of the parameter range (1+b-j, 2+a-i-j, and 2-c-j when c = 0).  Each
    such Pochhammer is cancelled term by term against the numerator factor
    it divides, (1+b-j)_{i-1}, (2+a-i-j)_{i+j-2} and (c)_{j-1}, so the sum
    is a polynomial expression and never divides by zero.
    """
    if min(b, c) < 0 or not (1 <= i <= a and 1 <= j <= a):
        raise InvalidParams(f"need b,c >= 0 and 1 <= i,j <= a, got {(a, b, c, i, j)}")
    pre = prod((pochhammer(1 + c + t, b) / pochhammer(1 + t, b) for t in range(a - 1)), Fraction(1))
    N = min(i - 1, j - 1)
    series = Fraction(0)
    for n in range(N + 1):
        num = pochhammer(1 - i, n) * pochhammer(1 - j, n) * pochhammer(1 + a + b - j, n)
        if num == 0:
            continue
        # (1-c-j)_n / (2-c-j)_n * (c)_{j-1}  ==  (1-c-j) (c)_{j-1} / (1-c-j+n)
        if n == 0:
            c_part = pochhammer(c, j - 1)
        else:
            c_part = -prod((c + t for t in range(j - 1) if t != j - 1 - n), Fraction(1))
            c_part *= 1 - c - j
        term = num * c_part / factorial(n)
        term *= pochhammer(1 + b - j + n, i - 1 - n) * pochhammer(2 + a - i - j + n, i + j - 2 - n)
        series += term
    tail = 1 / (
        pochhammer(1, i - 1) * pochhammer(1, j - 1)
        * pochhammer(1 + a + c - i, i - 1) * pochhammer(1 + a + b - j, j - 1))
    return _as_count(pre * series * tail, f"opposite formula at {(a, b, c, i, j)}")


# ---------------------------------------------------------------------------
# Recurrences from Kuo condensation


def check_rec_adjacent(a: int, b: int, c: int, j: int, k: int) -> bool:
    if not (a >= 2 and c >= 2 and b >= 1 and 1 <= j < a and 1 <= k < c):
        raise InvalidParams(f"recurrence needs a,c >= 2, b >= 1, j < a, k < c: {(a, b, c, j, k)}")

    def ADJ(a_, b_, c_):
        return adjacent_dents(a_, b_, c_, j, k)

    lhs = ADJ(a, b, c) * ADJ(a - 1, b, c - 1)
    rhs = ADJ(a, b, c - 1) * ADJ(a - 1, b, c) + ADJ(a - 1, b + 1, c - 1) * ADJ(a, b - 1, c)
    return lhs == rhs


def check_rec_opposite(a: int, b: int, c: int, i: int, j: int) -> bool:
    if not (a >= 3 and 1 < i < a and 1 < j < a and b >= 1 and c >= 1):
        raise InvalidParams(f"recurrence needs a >= 3, 1 < i,j < a, b,c >= 1: {(a, b, c, i, j)}")

    def OPP(a_, b_, c_, i_, j_):
        return opposite_dents(a_, b_, c_, i_, j_)

    lhs = OPP(a, b, c, i, j) * OPP(a - 2, b, c, i - 1, j - 1)
    rhs = (OPP(a - 1, b, c, i - 1, j - 1) * OPP(a - 1, b, c, i, j)
           - OPP(a - 1, b - 1, c + 1, i, j - 1) * OPP(a - 1, b + 1, c - 1, i - 1, j))
    return lhs == rhs
