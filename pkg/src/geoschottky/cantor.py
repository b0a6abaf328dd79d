"""Middle-thirds combinatorics on the base interval [1, 2].

Level n keeps 2^n closed intervals of length 1/3^n; the intervals are
indexed by doubling the binary digits of k into base 3 (``ternary_offset``).
Removed gaps are indexed separately because the half-circle families live
in them.
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction

BASE_LEFT = Fraction(1)
BASE_RIGHT = Fraction(2)


def ternary_offset(k: int) -> int:
    """Binary digits of k re-read in base 3 and doubled (0 -> 0, 1 -> 2)."""
    if k < 0:
        raise ValueError("index must be non-negative")
    out = 0
    power = 1
    while k:
        if k & 1:
            out += 2 * power
        power *= 3
        k >>= 1
    return out


@dataclass(frozen=True)
class LevelInterval:
    """k-th surviving closed interval [lo, hi] at level n."""

    n: int
    k: int
    lo: Fraction
    hi: Fraction


@dataclass(frozen=True)
class Gap:
    """j-th open interval (lo, hi) removed when passing to level n."""

    n: int
    j: int
    lo: Fraction
    hi: Fraction

    @property
    def midpoint(self) -> Fraction:
        return (self.lo + self.hi) / 2


def level_intervals(n: int) -> list[LevelInterval]:
    """All 2^n surviving intervals at level n, sorted left to right."""
    if n < 0:
        raise ValueError("level must be non-negative")
    scale = 3**n
    out = []
    for k in range(2**n):
        s = ternary_offset(k)
        out.append(
            LevelInterval(n, k, 1 + Fraction(s, scale), 1 + Fraction(s + 1, scale))
        )
    return out


def intervals_by_removal(n: int) -> list[LevelInterval]:
    """Oracle construction: repeatedly delete open middle thirds.

    Independent of ternary_offset on purpose; level_intervals is tested
    against it.
    """
    if n < 0:
        raise ValueError("level must be non-negative")
    spans = [(BASE_LEFT, BASE_RIGHT)]
    for _ in range(n):
        split = []
        for lo, hi in spans:
            third = (hi - lo) / 3
            split.append((lo, lo + third))
            split.append((hi - third, hi))
        spans = split
    return [LevelInterval(n, k, lo, hi) for k, (lo, hi) in enumerate(spans)]


def gaps(n: int) -> list[Gap]:
    """Open middle thirds removed from level n-1, sorted left to right."""
    if n < 1:
        raise ValueError("gaps exist from level 1 on")
    scale = 3**n
    out = []
    for j in range(2 ** (n - 1)):
        lo = 1 + Fraction(ternary_offset(2 * j) + 1, scale)
        hi = 1 + Fraction(ternary_offset(2 * j + 1), scale)
        out.append(Gap(n, j, lo, hi))
    return out


def gap_midpoint(n: int, j: int) -> Fraction:
    """Centre of the j-th level-n gap: 1 + (2*s_{2j} + 3) / (2*3^n)."""
    if n < 1:
        raise ValueError("gaps exist from level 1 on")
    if not 0 <= j < 2 ** (n - 1):
        raise IndexError(f"gap index {j} out of range at level {n}")
    return 1 + Fraction(2 * ternary_offset(2 * j) + 3, 2 * 3**n)


def address(x: Fraction, n: int) -> str | None:
    """n-bit descent address of x, or None once x leaves the construction.

    Bit i is 0/1 for the lower/upper child interval at level i+1.  Points
    in a removed gap (circle centres live there) and points outside [1, 2]
    get None rather than an error.
    """
    if n < 0:
        raise ValueError("level must be non-negative")
    lo, hi = BASE_LEFT, BASE_RIGHT
    if not lo <= x <= hi:
        return None
    bits = []
    for _ in range(n):
        third = (hi - lo) / 3
        if x <= lo + third:
            bits.append("0")
            hi = lo + third
        elif x >= hi - third:
            bits.append("1")
            lo = hi - third
        else:
            return None
    return "".join(bits)
