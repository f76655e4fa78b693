"""Exact arithmetic kernels: Pochhammer symbols, MacMahon's box formula,
Pfaffians of rational skew-symmetric matrices and terminating
hypergeometric series.

Everything here works on ``int`` and ``fractions.Fraction``; no floating
point is ever involved.
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from functools import reduce
from math import factorial
from operator import mul
from typing import Callable, Iterable, Sequence

Rat = Fraction


class OddDimension(ValueError):
    pass


class NonTerminating(ValueError):
    pass


class DivisionByZeroInLowerParameter(ZeroDivisionError):
    pass


class InstanceNotEvaluable(ValueError):
    pass


def as_rat(x) -> Fraction:
    return x if isinstance(x, Fraction) else Fraction(x)


def prod(xs: Iterable, start=1):
    return reduce(mul, xs, start)


def pochhammer(x, n: int) -> Fraction:
    """Rising factorial ``x (x+1) ... (x+n-1)``; ``1`` when ``n == 0``."""
    if n < 0:
        raise ValueError(f"negative Pochhammer length {n}")
    x = as_rat(x)
    out = Fraction(1)
    for i in range(n):
        out *= x + i
    return out


def macmahon(a: int, b: int, c: int) -> int:
    """Number of plane partitions in an a x b x c box.

    Evaluates the triple product of (i+j+k-1)/(i+j+k-2) exactly.
    """
    if min(a, b, c) < 0:
        raise ValueError("box dimensions must be non-negative")
    out = Fraction(1)
    for i in range(1, a + 1):
        for j in range(1, b + 1):
            for k in range(1, c + 1):
                out *= Fraction(i + j + k - 1, i + j + k - 2)
    assert out.denominator == 1
    return out.numerator


# ---------------------------------------------------------------------------
# Pfaffians


class SkewMatrix:
    """Skew-symmetric matrix stored through its strict upper triangle."""

    __slots__ = ("n", "_upper")

    def __init__(self, n: int, upper: dict[tuple[int, int], Fraction] | None = None):
        self.n = n
        self._upper: dict[tuple[int, int], Fraction] = {}
        for (i, j), v in (upper or {}).items():
            self[i, j] = v

    @classmethod
    def from_function(cls, n: int, entry: Callable[[int, int], object]) -> "SkewMatrix":
        """Build from ``entry(i, j)`` evaluated for ``i < j`` only."""
        m = cls(n)
        for i in range(n):
            for j in range(i + 1, n):
                m[i, j] = entry(i, j)
        return m

    @classmethod
    def from_rows(cls, rows: Sequence[Sequence]) -> "SkewMatrix":
        n = len(rows)
        for i in range(n):
            if len(rows[i]) != n or rows[i][i] != 0:
                raise ValueError("not a square matrix with zero diagonal")
            for j in range(i):
                if rows[i][j] != -rows[j][i]:
                    raise ValueError("matrix is not skew-symmetric")
        return cls.from_function(n, lambda i, j: rows[i][j])

    def __getitem__(self, ij: tuple[int, int]) -> Fraction:
        i, j = ij
        if i == j:
            return Fraction(0)
        if i < j:
            return self._upper.get((i, j), Fraction(0))
        return -self._upper.get((j, i), Fraction(0))

    def __setitem__(self, ij: tuple[int, int], value) -> None:
        i, j = ij
        if not (0 <= i < self.n and 0 <= j < self.n) or i == j:
            raise IndexError(ij)
        value = as_rat(value)
        if i < j:
            self._upper[i, j] = value
        else:
            self._upper[j, i] = -value

    def rows(self) -> list[list[Fraction]]:
        return [[self[i, j] for j in range(self.n)] for i in range(self.n)]

    def permuted(self, order: Sequence[int]) -> "SkewMatrix":
        """Matrix with rows and columns reindexed: new[i, j] = old[order[i], order[j]]."""
        return SkewMatrix.from_function(self.n, lambda i, j: self[order[i], order[j]])


def pfaffian(A: SkewMatrix) -> Fraction:
    """Exact Pfaffian by expansion along the first remaining index.

    Sub-Pfaffians are memoised on the bitmask of remaining indices, so the
    cost is O(2^n * n) rather than (n-1)!!.
    """
    n = A.n
    if n % 2:
        raise OddDimension(f"Pfaffian of odd dimension {n}")
    entries = [[A[i, j] for j in range(n)] for i in range(n)]
    memo: dict[int, Fraction] = {0: Fraction(1)}

    def pf(mask: int) -> Fraction:
        if mask in memo:
            return memo[mask]
        i = (mask & -mask).bit_length() - 1
        rest = mask & ~(1 << i)
        total = Fraction(0)
        sign = 1
        m = rest
        while m:
            j = (m & -m).bit_length() - 1
            m &= m - 1
            a = entries[i][j]
            if a:
                total += sign * a * pf(rest & ~(1 << j))
            sign = -sign
        memo[mask] = total
        return total

    return pf((1 << n) - 1)


# ---------------------------------------------------------------------------
# Terminating hypergeometric series


@dataclass(frozen=True)
class HypSeries:
    upper: tuple[Fraction, ...]
    lower: tuple[Fraction, ...]
    z: Fraction = Fraction(1)

    def __init__(self, upper: Iterable, lower: Iterable, z=1):
        object.__setattr__(self, "upper", tuple(as_rat(u) for u in upper))
        object.__setattr__(self, "lower", tuple(as_rat(b) for b in lower))
        object.__setattr__(self, "z", as_rat(z))

    def termination_index(self) -> int:
        """Smallest N with all terms beyond N vanishing, from the upper parameters."""
        cands = [-u.numerator for u in self.upper if u.denominator == 1 and u <= 0]
        if not cands:
            if self.z == 0:
                return 0
            raise NonTerminating(f"no non-positive integer upper parameter in {self.upper}")
        return min(cands)


def hyp_eval(h: HypSeries) -> Fraction:
    """Sum of a terminating series ``rFs(upper; lower; z)`` starting at the k=0 term."""
    N = h.termination_index()
    total = Fraction(0)
    term = Fraction(1)
    for k in range(N + 1):
        total += term
        if k == N:
            break
        num = prod((u + k for u in h.upper), Fraction(1))
        den = prod((b + k for b in h.lower), Fraction(1))
        if den == 0:
            raise DivisionByZeroInLowerParameter(
                f"lower parameter Pochhammer vanishes at index {k + 1} in {h.lower}"
            )
        term = term * num * h.z / (den * (k + 1))
    return total


def hyp_naive(h: HypSeries) -> Fraction:
    """Independent summation: every term recomputed from Pochhammer symbols."""
    N = h.termination_index()
    total = Fraction(0)
    for k in range(N + 1):
        den = prod((pochhammer(b, k) for b in h.lower), Fraction(1))
        if den == 0:
            raise DivisionByZeroInLowerParameter(f"lower Pochhammer vanishes at index {k}")
        num = prod((pochhammer(u, k) for u in h.upper), Fraction(1))
        total += num * h.z**k / (den * factorial(k))
    return total


def hyp(upper, lower, z=1) -> Fraction:
    return hyp_eval(HypSeries(upper, lower, z))


def check_chu_vandermonde(x, y, n: int) -> bool:
    """2F1(x, -n; y; 1) == (y-x)_n / (y)_n."""
    x, y = as_rat(x), as_rat(y)
    lhs = hyp([x, -n], [y])
    return lhs == pochhammer(y - x, n) / pochhammer(y, n)


def check_pfaff_saalschutz(w, x, y, n: int) -> bool:
    """Balanced 3F2 summation; the second lower parameter is forced to 1+w+x-y-n."""
    w, x, y = as_rat(w), as_rat(x), as_rat(y)
    lhs = hyp([w, x, -n], [y, 1 + w + x - y - n])
    rhs = pochhammer(y - w, n) * pochhammer(y - x, n) / (pochhammer(y, n) * pochhammer(y - w - x, n))
    return lhs == rhs


# Each relation expands F(upper; lower; z) into a combination of contiguous
# series.  Designated parameters are read from the front of the lists:
#   C30: upper = (x, y, *A)         lower = (*B)
#   C40, C42: upper = (x, *A)       lower = (y, *B)
#   C54, C55: upper = (w, x, *A)    lower = (y, *B)
#   C57: upper = (w, *A)            lower = (x, y, *B)


def _c30(h: HypSeries):
    x, y, *A = h.upper
    B = list(h.lower)
    z = h.z
    coeff = (1 - x + y) * z * prod(A, Fraction(1)) / prod(B, Fraction(1))
    return [
        (Fraction(1), HypSeries([x - 1, y + 1, *A], B, z)),
        (coeff, HypSeries([x, y + 1, *(a + 1 for a in A)], [b + 1 for b in B], z)),
    ]


def _c40(h: HypSeries):
    x, *A = h.upper
    y, *B = h.lower
    z = h.z
    coeff = (y - x) * z / ((y - 1) * y) * prod(A, Fraction(1)) / prod(B, Fraction(1))
    return [
        (Fraction(1), HypSeries([x - 1, *A], [y - 1, *B], z)),
        (coeff, HypSeries([x, *(a + 1 for a in A)], [y + 1, *(b + 1 for b in B)], z)),
    ]


def _c42(h: HypSeries):
    x, *A = h.upper
    y, *B = h.lower
    z = h.z
    coeff = (
        (y - 2) * (y - 1) / ((y - x - 1) * z)
        * prod((b - 1 for b in B), Fraction(1))
        / prod((a - 1 for a in A), Fraction(1))
    )
    Am = [a - 1 for a in A]
    Bm = [b - 1 for b in B]
    return [
        (coeff, HypSeries([x, *Am], [y - 1, *Bm], z)),
        (-coeff, HypSeries([x - 1, *Am], [y - 2, *Bm], z)),
    ]


def _c54(h: HypSeries):
    w, x, *A = h.upper
    y, *B = h.lower
    z = h.z
    return [
        (x * (y - w) / ((x - w) * y), HypSeries([w, x + 1, *A], [y + 1, *B], z)),
        (w * (y - x) / ((w - x) * y), HypSeries([w + 1, x, *A], [y + 1, *B], z)),
    ]


def _c55(h: HypSeries):
    w, x, *A = h.upper
    y, *B = h.lower
    z = h.z
    return [
        ((1 - w + x) * (y - 1) / ((w - 1) * (1 + x - y)), HypSeries([w - 1, x, *A], [y - 1, *B], z)),
        (x * (y - w) / ((w - 1) * (y - x - 1)), HypSeries([w - 1, x + 1, *A], [y, *B], z)),
    ]


def _c57(h: HypSeries):
    w, *A = h.upper
    x, y, *B = h.lower
    z = h.z
    return [
        ((x - 1) * (y - w) / ((w - 1) * (y - x)), HypSeries([w - 1, *A], [x - 1, y, *B], z)),
        ((x - w) * (y - 1) / ((w - 1) * (x - y)), HypSeries([w - 1, *A], [x, y - 1, *B], z)),
    ]


CONTIGUOUS = {
    "C30": _c30,
    "C40": _c40,
    "C42": _c42,
    "C54": _c54,
    "C55": _c55,
    "C57": _c57,
}

# minimum (upper, lower) lengths so the designated parameters exist
_MIN_SHAPE = {"C30": (2, 0), "C40": (1, 1), "C42": (1, 1), "C54": (2, 1), "C55": (2, 1), "C57": (1, 2)}


def contiguous_expansion(rel: str, h: HypSeries) -> list[tuple[Fraction, HypSeries]]:
    if rel not in CONTIGUOUS:
        raise ValueError(f"unknown contiguous relation {rel!r}")
    nu, nl = _MIN_SHAPE[rel]
    if len(h.upper) < nu or len(h.lower) < nl:
        raise InstanceNotEvaluable(f"{rel} needs at least {nu} upper and {nl} lower parameters")
    try:
        return CONTIGUOUS[rel](h)
    except ZeroDivisionError as exc:
        raise InstanceNotEvaluable(f"{rel} coefficient undefined at {h}") from exc


def check_contiguous(rel: str, h: HypSeries) -> bool:
    """True iff both sides of relation ``rel`` agree exactly at instance ``h``."""
    terms = contiguous_expansion(rel, h)
    try:
        lhs = hyp_eval(h)
        rhs = sum((c * hyp_eval(s) for c, s in terms), Fraction(0))
    except (NonTerminating, DivisionByZeroInLowerParameter) as exc:
        raise InstanceNotEvaluable(str(exc)) from exc
    return lhs == rhs


__all__ = [
    "Rat",
    "SkewMatrix",
    "HypSeries",
    "OddDimension",
    "NonTerminating",
    "DivisionByZeroInLowerParameter",
    "InstanceNotEvaluable",
    "pochhammer",
    "macmahon",
    "pfaffian",
    "hyp_eval",
    "hyp_naive",
    "hyp",
    "check_chu_vandermonde",
    "check_pfaff_saalschutz",
    "check_contiguous",
    "contiguous_expansion",
    "CONTIGUOUS",
]
