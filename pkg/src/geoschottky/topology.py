"""Topology of truncated quotients: boundary cycles, genus, ends coding.

The quotient of the standard fundamental domain by a finite description is
an open surface; its ends are recovered combinatorially.  The domain's
ideal boundary splits into the complementary arcs of the pairing intervals
on the extended real line (one arc wraps through infinity; tangencies give
zero-length arcs).  Each pairing map glues the arc-end at a circle endpoint
to the arc-end at the image endpoint on the partner circle, so the arcs
close up into cycles; each cycle is one boundary circle (funnel) of the
quotient.  From the cycle count b and the rank m, chi = 1 - m = 2 - 2g - b
pins the genus.
"""

from __future__ import annotations

import enum
from dataclasses import dataclass
from fractions import Fraction
from typing import Iterable, Iterator

from . import cantor, families
from .hyperbolic import UpperPoint
from .schottky import SchottkyDescription

EndCode = str


class ComponentMarker(enum.Enum):
    CORE = "core"  # point projects into the compact exhaustion piece
    UNRESOLVED = "unresolved"  # |Re| sits over a removed gap at this level


class GenusFlag(enum.Enum):
    PLANAR = "planar"
    INFINITE_GENUS = "infinite-genus"


@dataclass(frozen=True)
class EndpointFlag:
    """One of the two boundary endpoints of an indexed circle."""

    index: int
    side: str  # "left" | "right"


@dataclass(frozen=True)
class Arc:
    """Complementary arc of the pairing intervals on the ideal boundary.

    start/end name the circle endpoints bounding it; the arc through
    infinity has start at the rightmost endpoint and end at the leftmost.
    Tangency arcs have zero length but still two distinct flags.
    """

    start: EndpointFlag
    end: EndpointFlag
    through_infinity: bool = False


@dataclass(frozen=True)
class BoundaryCycles:
    count: int
    cycles: tuple[tuple[int, ...], ...]  # arc positions grouped per cycle
    arcs: tuple[Arc, ...]


@dataclass(frozen=True)
class SurfaceSignature:
    """(rank, boundary cycles, genus, Euler characteristic) of a truncation."""

    rank: int
    boundary_cycles: int
    genus: int
    euler: int


@dataclass(frozen=True)
class ExhaustionBox:
    """Compact box -(n+1) <= Re <= n+1, r(n) <= Im <= n cutting level n."""

    n: int
    re_min: Fraction
    re_max: Fraction
    im_min: Fraction
    im_max: Fraction

    @classmethod
    def level(cls, n: int, im_min: Fraction | None = None) -> "ExhaustionBox":
        if n < 1:
            raise ValueError("exhaustion starts at level 1")
        if im_min is None:
            im_min = families.cantor_radius(n)
        return cls(n, Fraction(-(n + 1)), Fraction(n + 1), im_min, Fraction(n))

    def contains(self, z: UpperPoint) -> bool:
        return (
            self.re_min <= z.re <= self.re_max and self.im_min <= z.im <= self.im_max
        )


def _sorted_circles(desc: SchottkyDescription):
    circles = desc.circles()
    circles.sort(key=lambda pair: (pair[1].left, pair[1].right))
    for (_, c1), (_, c2) in zip(circles, circles[1:]):
        if c2.left < c1.right:
            raise ValueError(
                f"circles overlap around {c1.center} and {c2.center}; "
                "boundary cycles need disjoint interiors"
            )
    return circles


def boundary_cycles(desc: SchottkyDescription) -> BoundaryCycles:
    """Glue ideal arcs along the pairings and count the resulting cycles.

    Accepts tangent circles (zero-length arcs become nodes: the tangency
    point is an ideal vertex); rejects overlapping interiors.
    """
    circles = _sorted_circles(desc)
    count = len(circles)

    arcs = []
    for pos in range(count - 1):
        arcs.append(
            Arc(
                EndpointFlag(circles[pos][0], "right"),
                EndpointFlag(circles[pos + 1][0], "left"),
            )
        )
    arcs.append(
        Arc(
            EndpointFlag(circles[-1][0], "right"),
            EndpointFlag(circles[0][0], "left"),
            through_infinity=True,
        )
    )

    arc_at: dict[EndpointFlag, int] = {}
    for pos, arc in enumerate(arcs):
        arc_at[arc.start] = pos
        arc_at[arc.end] = pos

    # Pairing involution on endpoint flags: f_k sends the endpoints of its
    # circle onto the endpoints of the partner circle, possibly swapping
    # left and right; exact boundary evaluation decides which.
    glue: dict[EndpointFlag, EndpointFlag] = {}
    for k, circle in circles:
        entry = desc.entry(k)
        partner = desc.entry(-k).circle()
        image_left = entry.transform.apply_boundary(circle.left)
        image_right = entry.transform.apply_boundary(circle.right)
        if image_left == partner.left and image_right == partner.right:
            mapping = (("left", "left"), ("right", "right"))
        elif image_left == partner.right and image_right == partner.left:
            mapping = (("left", "right"), ("right", "left"))
        else:
            raise ValueError(f"entry {k} does not pair its circle endpoints")
        for mine, theirs in mapping:
            glue[EndpointFlag(k, mine)] = EndpointFlag(-k, theirs)

    parent = list(range(len(arcs)))

    def find(i: int) -> int:
        while parent[i] != i:
            parent[i] = parent[parent[i]]
            i = parent[i]
        return i

    def union(i: int, j: int) -> None:
        parent[find(i)] = find(j)

    for flag, image in glue.items():
        union(arc_at[flag], arc_at[image])

    groups: dict[int, list[int]] = {}
    for pos in range(len(arcs)):
        groups.setdefault(find(pos), []).append(pos)
    cycles = tuple(tuple(group) for _, group in sorted(groups.items()))
    return BoundaryCycles(len(cycles), cycles, tuple(arcs))


def signature(desc: SchottkyDescription) -> SurfaceSignature:
    """Genus from b via chi(free group of rank m) = 1 - m = 2 - 2g - b.

    A non-integral or negative genus means the pairing orientation is
    broken somewhere; that is an error, not a value.
    """
    m = desc.pair_count
    b = boundary_cycles(desc).count
    euler = 1 - m
    twice_genus = 1 + m - b
    if twice_genus % 2 != 0 or twice_genus < 0:
        raise ValueError(
            f"inconsistent surface data: rank {m} with {b} boundary cycles"
        )
    return SurfaceSignature(m, b, twice_genus // 2, euler)


def component_code(
    z: UpperPoint, n: int, box: ExhaustionBox | None = None
) -> EndCode | ComponentMarker:
    """Which complementary component of the level-n exhaustion holds z.

    Points inside the box are CORE; otherwise the component is named by the
    descent address of |Re(z)| (the mirror symmetry folds the two half
    planes onto one binary tree).
    """
    if n < 1:
        raise ValueError("component coding starts at level 1")
    if box is None:
        box = ExhaustionBox.level(n)
    if box.contains(z):
        return ComponentMarker.CORE
    code = cantor.address(abs(z.re), n)
    if code is None:
        return ComponentMarker.UNRESOLVED
    return code


def end_path(bits: Iterable[int], depth: int) -> list[EndCode]:
    """Nested prefixes (x1), (x1,x2), ... realizing one end of the binary tree."""
    if depth < 1:
        raise ValueError("depth must be at least 1")
    prefix = []
    out = []
    it: Iterator[int] = iter(bits)
    for _ in range(depth):
        try:
            bit = next(it)
        except StopIteration:
            raise ValueError("bit stream shorter than requested depth") from None
        if bit not in (0, 1):
            raise ValueError(f"bit {bit!r} is not 0 or 1")
        prefix.append(str(bit))
        out.append("".join(prefix))
    return out


def end_genus_flags(kind: str, code: EndCode) -> GenusFlag:
    """Planarity of the end named by code in each uniformized family.

    The cantor family carries no genus anywhere; every end of the blooming
    family swallows satellite handle pairs at all levels; the loch-ness
    surface has a single end of infinite genus.
    """
    if code and set(code) - {"0", "1"}:
        raise ValueError(f"malformed end code {code!r}")
    if kind == families.CANTOR:
        return GenusFlag.PLANAR
    if kind in (families.BLOOMING, families.LOCH_NESS):
        return GenusFlag.INFINITE_GENUS
    raise ValueError(f"unknown family kind {kind!r}")
