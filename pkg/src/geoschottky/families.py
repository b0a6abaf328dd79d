"""Generator families for the three uniformized surfaces.

Every generator comes out of one audited constructor, pair_from_circles,
which solves for the unique det-1 matrix with a prescribed isometric
circle pair.  Printed coefficient tables are test vectors, never source.

Families:
  * loch-ness   - unit circles at even integers, paired 8n -> 8n+4 and
                  8n+2 -> 8n+6 (one end, infinite genus);
  * cantor      - one mirror-symmetric pair per middle-thirds gap, radius
                  1/(4*3^n) (Cantor tree, planar ends);
  * blooming    - the cantor layout shrunk to radius 1/(12*3^n), plus four
                  satellite sequences per gap whose radii 1/(60*3^n*2^m)
                  converge to zero (Blooming Cantor tree, all ends of
                  infinite genus).
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction

from . import cantor
from .hyperbolic import HalfCircle, MobiusClass, MobiusMatrix

LOCH_NESS = "loch-ness"
CANTOR = "cantor"
BLOOMING = "blooming"
BLOOMING_CORE = "blooming-core"
BLOOMING_SATELLITE = "blooming-satellite"

FAMILY_KINDS = (LOCH_NESS, CANTOR, BLOOMING)

SATELLITE_BRANCHES = (1, 2, 3, 4)


@dataclass(frozen=True)
class GeneratorId:
    """Structured label for one generator (sign -1 marks the inverse).

    For loch-ness, j is the pair slot inside strip n: 0 for the circle at
    8n, 1 for the circle at 8n+2.  Satellite branches s in {1, 2} sit left
    of the core circle, {3, 4} right of it; m >= 1 is the depth.
    """

    family: str
    n: int
    j: int | None = None
    s: int | None = None
    m: int | None = None
    sign: int = 1


@dataclass(frozen=True)
class GeneratorSpec:
    """A det-1 hyperbolic matrix together with its circle pair."""

    id: GeneratorId
    transform: MobiusMatrix
    circle: HalfCircle
    partner_circle: HalfCircle


def pair_from_circles(
    center: Fraction, partner_center: Fraction, radius: Fraction
) -> MobiusMatrix:
    """Unique det-1 matrix whose isometric circle is (center, radius) and
    whose inverse's circle is (partner_center, radius).

    c = 1/r, d = -center/r, a = partner_center/r, b = (ad - 1)/c.
    """
    if radius <= 0:
        raise ValueError("radius must be positive")
    c = 1 / Fraction(radius)
    d = -Fraction(center) * c
    a = Fraction(partner_center) * c
    b = (a * d - 1) / c
    return MobiusMatrix(a, b, c, d)


def _spec(gid: GeneratorId, center, partner_center, radius) -> GeneratorSpec:
    m = pair_from_circles(center, partner_center, radius)
    if m.classify() is not MobiusClass.HYPERBOLIC:
        raise ValueError(f"generator {gid} is not hyperbolic")
    return GeneratorSpec(
        gid,
        m,
        HalfCircle(Fraction(center), Fraction(radius)),
        HalfCircle(Fraction(partner_center), Fraction(radius)),
    )


def loch_ness_pair(n: int) -> tuple[GeneratorSpec, GeneratorSpec]:
    """Strip n of the one-ended family: f_n pairs 8n -> 8n+4, g_n 8n+2 -> 8n+6."""
    one = Fraction(1)
    f = _spec(GeneratorId(LOCH_NESS, n, 0), Fraction(8 * n), Fraction(8 * n + 4), one)
    g = _spec(
        GeneratorId(LOCH_NESS, n, 1), Fraction(8 * n + 2), Fraction(8 * n + 6), one
    )
    return f, g


def cantor_radius(n: int) -> Fraction:
    return Fraction(1, 4 * 3**n)


def blooming_core_radius(n: int) -> Fraction:
    return Fraction(1, 12 * 3**n)


def satellite_radius(n: int, m: int) -> Fraction:
    return Fraction(1, 60 * 3**n * 2**m)


def cantor_pair(n: int, j: int) -> GeneratorSpec:
    """Mirror pair over the j-th level-n gap, radius 1/(4*3^n)."""
    mid = cantor.gap_midpoint(n, j)
    return _spec(GeneratorId(CANTOR, n, j), mid, -mid, cantor_radius(n))


def blooming_core_pair(n: int, j: int) -> GeneratorSpec:
    """Same centers as the cantor pair but radius 1/(12*3^n)."""
    mid = cantor.gap_midpoint(n, j)
    return _spec(GeneratorId(BLOOMING_CORE, n, j), mid, -mid, blooming_core_radius(n))


def _satellite_centers(n: int, j: int, s: int, m: int) -> tuple[Fraction, Fraction]:
    """Center and mirror-partner center of satellite (n, j, s, m).

    The gap is cut into six; branches 1,2 fill the second sixth L from the
    right, branches 3,4 fill the fifth sixth S from the left.  Depth m uses
    the dyadic cell of width u/2^m (u = sixth length), with circle centers
    at 7/10 and 3/10 of the cell and the pairing s=1 <-> mirror of s=2,
    s=3 <-> mirror of s=4.
    """
    gap = cantor.gaps(n)[j]
    u = Fraction(1, 6 * 3**n)
    w = u / 2**m
    if s in (1, 2):
        cell_left = gap.lo + u + w  # cell [L.lo + u/2^m, L.lo + u/2^(m-1)]
    else:
        cell_left = gap.hi - u - 2 * w  # cell [S.hi - u/2^(m-1), S.hi - u/2^m]
    far = cell_left + Fraction(7, 10) * w
    near = cell_left + Fraction(3, 10) * w
    if s in (1, 3):
        return far, -near
    return near, -far


def blooming_satellite(n: int, j: int, s: int, m: int) -> GeneratorSpec:
    """Satellite generator (n, j, s, m); radius 1/(60*3^n*2^m)."""
    if s not in SATELLITE_BRANCHES:
        raise ValueError(f"satellite branch {s} not in 1..4")
    if m < 1:
        raise ValueError("satellite depth starts at 1")
    center, partner = _satellite_centers(n, j, s, m)
    return _spec(
        GeneratorId(BLOOMING_SATELLITE, n, j, s, m), center, partner, satellite_radius(n, m)
    )


def truncate(kind: str, level: int, depth: int | None = None) -> list[GeneratorSpec]:
    """Finite truncation of a family, in canonical (n, j, s, m) order.

    loch-ness: strips |n| <= level; cantor: all gaps at levels 1..level;
    blooming: cores as cantor plus satellites with depth m in 1..depth.
    """
    if kind == LOCH_NESS:
        if depth is not None:
            raise ValueError("loch-ness truncation takes no depth")
        if level < 0:
            raise ValueError("level must be non-negative")
        out: list[GeneratorSpec] = []
        for n in range(-level, level + 1):
            out.extend(loch_ness_pair(n))
        return out
    if kind == CANTOR:
        if depth is not None:
            raise ValueError("cantor truncation takes no depth")
        if level < 1:
            raise ValueError("level must be at least 1")
        return [
            cantor_pair(n, j) for n in range(1, level + 1) for j in range(2 ** (n - 1))
        ]
    if kind == BLOOMING:
        if depth is None or depth < 0:
            raise ValueError("blooming truncation needs a satellite depth >= 0")
        if level < 1:
            raise ValueError("level must be at least 1")
        out = []
        for n in range(1, level + 1):
            for j in range(2 ** (n - 1)):
                out.append(blooming_core_pair(n, j))
                for s in SATELLITE_BRANCHES:
                    for m in range(1, depth + 1):
                        out.append(blooming_satellite(n, j, s, m))
        return out
    raise ValueError(f"unknown family kind {kind!r}")
