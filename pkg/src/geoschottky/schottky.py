"""Schottky descriptions: verification, fundamental domain, reduction, tiles.

A description is a symmetric-indexed family of (interval, transformation)
entries; index -k carries the inverse of index k and the interval spans the
isometric circle.  Words are tuples of nonzero entry indices; a word labels
the tile word(F) of the tessellation, so apply_word(word, p) composes the
entries left to right (leftmost letter outermost) and reduce returns the
word of the tile its input sits in.
"""

from __future__ import annotations

from dataclasses import dataclass, field, replace
from fractions import Fraction
from typing import Iterator

from .families import GeneratorId, GeneratorSpec
from .hyperbolic import (
    HalfCircle,
    MobiusClass,
    MobiusMatrix,
    Separation,
    UpperPoint,
    circle_pairing_check,
    separation_epsilon,
)

Word = tuple[int, ...]


class StepLimitExceeded(Exception):
    """Reduction ran out of steps (expected near the limit set)."""

    def __init__(self, point: UpperPoint, partial_word: Word, steps: int):
        super().__init__(f"reduction did not terminate within {steps} steps")
        self.point = point
        self.partial_word = partial_word
        self.steps = steps


def is_reduced(word: Word) -> bool:
    """No adjacent letters k, -k."""
    return all(word[i] != -word[i + 1] for i in range(len(word) - 1))


@dataclass(frozen=True)
class Entry:
    """One indexed side: interval A_k on the real line plus its pairing map."""

    index: int
    transform: MobiusMatrix
    interval: tuple[Fraction, Fraction]
    meta: GeneratorId | None = None

    def circle(self) -> HalfCircle:
        """Half-circle spanned by the interval (cond3 checks it is isometric)."""
        lo, hi = self.interval
        return HalfCircle((lo + hi) / 2, (hi - lo) / 2)


@dataclass(frozen=True)
class SchottkyDescription:
    """Symmetric family of entries; entry order is the canonical order."""

    entries: tuple[Entry, ...]
    kind: tuple | None = None  # (family, level, depth) for generated truncations

    def __post_init__(self):
        seen = {}
        for e in self.entries:
            if e.index == 0:
                raise ValueError("index 0 is not allowed")
            if e.index in seen:
                raise ValueError(f"duplicate index {e.index}")
            seen[e.index] = e
        for k, e in seen.items():
            if -k not in seen:
                raise ValueError(f"index set not symmetric: {k} has no partner")
            if not seen[-k].transform.proj_eq(e.transform.inverse()):
                raise ValueError(f"entry {-k} is not the inverse of entry {k}")

    def __iter__(self) -> Iterator[Entry]:
        return iter(self.entries)

    def entry(self, index: int) -> Entry:
        for e in self.entries:
            if e.index == index:
                return e
        raise KeyError(index)

    @property
    def pair_count(self) -> int:
        return len(self.entries) // 2

    def positive_indices(self) -> list[int]:
        return [e.index for e in self.entries if e.index > 0]

    def circles(self) -> list[tuple[int, HalfCircle]]:
        return [(e.index, e.circle()) for e in self.entries]


def describe(generators: list[GeneratorSpec]) -> SchottkyDescription:
    """Index generators ordinally: t-th pair becomes entries +-(t+1).

    Ordinal indexing replaces the prime-power labelling, which collapses at
    exponent zero; the structured id survives as metadata.
    """
    entries = []
    for t, spec in enumerate(generators):
        k = t + 1
        entries.append(
            Entry(
                k,
                spec.transform,
                (spec.circle.left, spec.circle.right),
                spec.id,
            )
        )
        entries.append(
            Entry(
                -k,
                spec.transform.inverse(),
                (spec.partner_circle.left, spec.partner_circle.right),
                replace(spec.id, sign=-1),
            )
        )
    return SchottkyDescription(tuple(entries))


@dataclass(frozen=True)
class VerificationReport:
    """Outcome of the five Schottky-description conditions.

    Tangencies are listed apart from overlaps so Ford-style configurations
    (the loch-ness family) stay distinguishable from genuine errors.
    """

    cond1_disjoint_closures: bool
    cond1_witness: tuple[int, int] | None
    cond2_no_full_halfcircle: bool
    cond3_isometric_match: bool
    cond3_witness: int | None
    cond4_hyperbolic: bool
    cond4_witness: int | None
    cond5_epsilon: Fraction | None
    cond5_witness: tuple[int, int] | None
    tangent_pairs: tuple[tuple[int, int], ...] = ()
    overlap_pairs: tuple[tuple[int, int], ...] = ()

    @property
    def passed(self) -> bool:
        return (
            self.cond1_disjoint_closures
            and self.cond2_no_full_halfcircle
            and self.cond3_isometric_match
            and self.cond4_hyperbolic
            and self.cond5_epsilon is not None
        )

    @property
    def only_tangencies(self) -> bool:
        """Circles never overlap; failures (if any) are tangencies alone."""
        return not self.overlap_pairs

    def as_dict(self) -> dict:
        return {
            "overall": self.passed,
            "cond1_disjoint_closures": {
                "pass": self.cond1_disjoint_closures,
                "witness": list(self.cond1_witness) if self.cond1_witness else None,
            },
            "cond2_no_full_halfcircle": {"pass": self.cond2_no_full_halfcircle},
            "cond3_isometric_match": {
                "pass": self.cond3_isometric_match,
                "witness": self.cond3_witness,
            },
            "cond4_hyperbolic": {
                "pass": self.cond4_hyperbolic,
                "witness": self.cond4_witness,
            },
            "cond5_epsilon": {
                "pass": self.cond5_epsilon is not None,
                "epsilon": str(self.cond5_epsilon)
                if self.cond5_epsilon is not None
                else None,
                "witness": list(self.cond5_witness) if self.cond5_witness else None,
            },
            "tangent_pairs": [list(p) for p in self.tangent_pairs],
            "overlap_pairs": [list(p) for p in self.overlap_pairs],
        }


def verify(desc: SchottkyDescription) -> VerificationReport:
    """Exact check of all five description conditions; failures are values."""
    entries = desc.entries

    # cond1: closed intervals pairwise disjoint.  Sorting by left endpoint
    # makes adjacency checks sufficient on the real line.
    order = sorted(range(len(entries)), key=lambda i: entries[i].interval)
    tangent: list[tuple[int, int]] = []
    overlap: list[tuple[int, int]] = []
    for pos in range(len(order) - 1):
        e1 = entries[order[pos]]
        e2 = entries[order[pos + 1]]
        if e2.interval[0] < e1.interval[1]:
            overlap.append((e1.index, e2.index))
        elif e2.interval[0] == e1.interval[1]:
            tangent.append((e1.index, e2.index))
    cond1 = not tangent and not overlap
    cond1_witness = overlap[0] if overlap else (tangent[0] if tangent else None)

    # cond2: a bounded real interval cannot contain a closed half-circle;
    # recorded for fidelity with the disc-model phrasing.
    cond2 = True

    # cond3: interval spans the isometric circle and the circle pairs over.
    cond3, cond3_witness = True, None
    for e in entries:
        try:
            matches = e.transform.isometric_circle() == e.circle()
            matches = matches and circle_pairing_check(e.transform)
        except ValueError:
            matches = False
        if not matches:
            cond3, cond3_witness = False, e.index
            break

    # cond4: every pairing map is hyperbolic.
    cond4, cond4_witness = True, None
    for e in entries:
        if e.transform.classify() is not MobiusClass.HYPERBOLIC:
            cond4, cond4_witness = False, e.index
            break

    # cond5: uniform epsilon from pairwise strip disjointness.
    circles = [e.circle() for e in entries]
    sep: Separation = separation_epsilon(circles)
    cond5_witness = None
    if not sep.ok:
        i, j = sep.witness
        cond5_witness = (entries[i].index, entries[j].index)

    return VerificationReport(
        cond1_disjoint_closures=cond1,
        cond1_witness=cond1_witness,
        cond2_no_full_halfcircle=cond2,
        cond3_isometric_match=cond3,
        cond3_witness=cond3_witness,
        cond4_hyperbolic=cond4,
        cond4_witness=cond4_witness,
        cond5_epsilon=sep.epsilon,
        cond5_witness=cond5_witness,
        tangent_pairs=tuple(tangent),
        overlap_pairs=tuple(overlap),
    )


def in_fundamental_domain(desc: SchottkyDescription, z: UpperPoint) -> bool:
    """Closed standard fundamental domain: on or outside every circle."""
    return all(e.circle().outside(z, closed=True) for e in desc.entries)


def apply_word(desc: SchottkyDescription, word: Word, z: UpperPoint) -> UpperPoint:
    """Apply the tile word: entries composed left to right, leftmost outermost."""
    if not is_reduced(word):
        raise ValueError(f"word {word} is not freely reduced")
    m = MobiusMatrix.identity()
    for k in word:
        m = m.compose(desc.entry(k).transform)
    return m.apply(z)


def reduce(
    desc: SchottkyDescription, z: UpperPoint, max_steps: int = 64
) -> tuple[UpperPoint, Word]:
    """Drive z into the closed fundamental domain; return (point, tile word).

    While z sits strictly inside the circle of entry k, entry k's map pushes
    it out (inside C_k -> outside C_-k); recording -k per step yields the
    word w with apply_word(w, point) == original z.  Points landing exactly
    on a circle are already in the closed domain, so the loop stops there.
    """
    letters: list[int] = []
    current = z
    for _ in range(max_steps):
        hit = None
        for e in desc.entries:
            if e.circle().inside(current):
                hit = e
                break
        if hit is None:
            return current, tuple(letters)
        current = hit.transform.apply(current)
        letters.append(-hit.index)
    if all(e.circle().outside(current, closed=True) for e in desc.entries):
        return current, tuple(letters)
    raise StepLimitExceeded(current, tuple(letters), max_steps)


@dataclass(frozen=True)
class VerticalLine:
    """Geodesic Re(z) = x; image of a half-circle whose endpoint hits infinity."""

    x: Fraction


Geodesic = HalfCircle | VerticalLine


@dataclass(frozen=True)
class Tile:
    """Images of the domain's boundary circles under one reduced word."""

    word: Word
    sides: tuple[Geodesic, ...] = field(repr=False)


def _letter_order(desc: SchottkyDescription) -> list[int]:
    return sorted((e.index for e in desc.entries), key=lambda k: (abs(k), k < 0))


def reduced_words(desc: SchottkyDescription, max_len: int) -> Iterator[Word]:
    """All freely reduced words of length <= max_len, canonical order.

    Length-major; within a length, lexicographic in the letter order
    +1, -1, +2, -2, ...
    """
    alphabet = _letter_order(desc)

    def extend(prefix: Word, remaining: int) -> Iterator[Word]:
        yield prefix
        if remaining == 0:
            return
        for k in alphabet:
            if prefix and prefix[-1] == -k:
                continue
            yield from extend(prefix + (k,), remaining - 1)

    by_length: dict[int, list[Word]] = {}
    for word in extend((), max_len):
        by_length.setdefault(len(word), []).append(word)
    for length in sorted(by_length):
        yield from by_length[length]


def _image_geodesic(m: MobiusMatrix, circle: HalfCircle) -> Geodesic:
    x1 = m.apply_boundary(circle.left)
    x2 = m.apply_boundary(circle.right)
    if isinstance(x1, Fraction) and isinstance(x2, Fraction):
        lo, hi = min(x1, x2), max(x1, x2)
        return HalfCircle((lo + hi) / 2, (hi - lo) / 2)
    finite = x1 if isinstance(x1, Fraction) else x2
    return VerticalLine(finite)


def tessellation_tiles(desc: SchottkyDescription, max_len: int) -> list[Tile]:
    """One tile per reduced word of length <= max_len.

    A tile's sides are the images of every boundary circle under the word's
    transformation; Mobius images of half-circles are half-circles unless an
    endpoint maps to infinity, in which case a vertical line is recorded.
    """
    base = [e.circle() for e in desc.entries]
    tiles = []
    for word in reduced_words(desc, max_len):
        m = MobiusMatrix.identity()
        for k in word:
            m = m.compose(desc.entry(k).transform)
        tiles.append(Tile(word, tuple(_image_geodesic(m, c) for c in base)))
    return tiles
