"""Upper half-plane geometry with exact rational coefficients.

Mobius matrices are stored projectively (entries up to a common positive
rational factor) so that reflections and strip transports stay rational;
every predicate below uses a scale-invariant formula.  Determinants are
required to be positive.
"""

from __future__ import annotations

import enum
from dataclasses import dataclass
from fractions import Fraction

from .arith import sqrt_exact


class _Infinity:
    """Boundary point at infinity of the upper half-plane."""

    _instance = None

    def __new__(cls):
        if cls._instance is None:
            cls._instance = super().__new__(cls)
        return cls._instance

    def __repr__(self):
        return "INFINITY"


INFINITY = _Infinity()

BoundaryPoint = Fraction | _Infinity


class MobiusClass(enum.Enum):
    IDENTITY = "identity"
    ELLIPTIC = "elliptic"
    PARABOLIC = "parabolic"
    HYPERBOLIC = "hyperbolic"


@dataclass(frozen=True)
class UpperPoint:
    """Point re + im*i with im > 0."""

    re: Fraction
    im: Fraction

    def __post_init__(self):
        if self.im <= 0:
            raise ValueError("point is not in the open upper half-plane")

    def __repr__(self):
        return f"UpperPoint({self.re}, {self.im})"


@dataclass(frozen=True)
class Strip:
    """Open vertical strip left < Re(z) < right."""

    left: Fraction
    right: Fraction

    def __post_init__(self):
        if not self.left < self.right:
            raise ValueError("degenerate strip")


@dataclass(frozen=True)
class HalfCircle:
    """Geodesic half-circle with real center and positive radius."""

    center: Fraction
    radius: Fraction

    def __post_init__(self):
        if self.radius <= 0:
            raise ValueError("half-circle needs a positive radius")

    @property
    def left(self) -> Fraction:
        return self.center - self.radius

    @property
    def right(self) -> Fraction:
        return self.center + self.radius

    @property
    def apex(self) -> UpperPoint:
        return UpperPoint(self.center, self.radius)

    def inside(self, z: UpperPoint, closed: bool = False) -> bool:
        d2 = (z.re - self.center) ** 2 + z.im**2
        r2 = self.radius**2
        return d2 <= r2 if closed else d2 < r2

    def outside(self, z: UpperPoint, closed: bool = False) -> bool:
        d2 = (z.re - self.center) ** 2 + z.im**2
        r2 = self.radius**2
        return d2 >= r2 if closed else d2 > r2

    def strip(self) -> Strip:
        """Open strip of width 4r centred on the circle (Lemma-style padding)."""
        return Strip(self.center - 2 * self.radius, self.center + 2 * self.radius)


@dataclass(frozen=True)
class MobiusMatrix:
    """z -> (az + b) / (cz + d) with ad - bc > 0, entries up to positive scale."""

    a: Fraction
    b: Fraction
    c: Fraction
    d: Fraction

    def __post_init__(self):
        if self.det() <= 0:
            raise ValueError("Mobius matrix needs positive determinant")

    @classmethod
    def identity(cls) -> "MobiusMatrix":
        return cls(Fraction(1), Fraction(0), Fraction(0), Fraction(1))

    @classmethod
    def from_ints(cls, a, b, c, d) -> "MobiusMatrix":
        return cls(Fraction(a), Fraction(b), Fraction(c), Fraction(d))

    def det(self) -> Fraction:
        return self.a * self.d - self.b * self.c

    def trace(self) -> Fraction:
        return self.a + self.d

    def compose(self, other: "MobiusMatrix") -> "MobiusMatrix":
        """Matrix product; self applied after other."""
        return MobiusMatrix(
            self.a * other.a + self.b * other.c,
            self.a * other.b + self.b * other.d,
            self.c * other.a + self.d * other.c,
            self.c * other.b + self.d * other.d,
        )

    def inverse(self) -> "MobiusMatrix":
        """Adjugate; projectively the inverse, same determinant."""
        return MobiusMatrix(self.d, -self.b, -self.c, self.a)

    def proj_eq(self, other: "MobiusMatrix") -> bool:
        """Equality in PSL(2, Q): entries proportional by a nonzero rational.

        Negative scales are the same transformation (and keep det > 0), so
        an involution squaring to -r^2 * Id still counts as the identity.
        """
        for mine, theirs in (
            (self.a, other.a),
            (self.b, other.b),
            (self.c, other.c),
            (self.d, other.d),
        ):
            if mine != 0:
                if theirs == 0:
                    return False
                scale = theirs / mine
                return (
                    other.a == self.a * scale
                    and other.b == self.b * scale
                    and other.c == self.c * scale
                    and other.d == self.d * scale
                )
            if theirs != 0:
                return False
        return False  # unreachable: det > 0 forbids the zero matrix

    def apply(self, z: UpperPoint) -> UpperPoint:
        """Exact image of an interior point; Im scales by det/|cz+d|^2 > 0."""
        u = self.c * z.re + self.d
        denom = u**2 + (self.c * z.im) ** 2
        re = ((self.a * z.re + self.b) * u + self.a * self.c * z.im**2) / denom
        im = z.im * self.det() / denom
        return UpperPoint(re, im)

    def apply_boundary(self, x: BoundaryPoint) -> BoundaryPoint:
        """Action on the extended real boundary; -d/c -> INFINITY -> a/c."""
        if x is INFINITY:
            if self.c == 0:
                return INFINITY
            return self.a / self.c
        denom = self.c * x + self.d
        if denom == 0:
            return INFINITY
        return (self.a * x + self.b) / denom

    def classify(self) -> MobiusClass:
        """Fixed-point type from the scale-invariant sign of trace^2 - 4*det."""
        if self.b == 0 and self.c == 0 and self.a == self.d:
            return MobiusClass.IDENTITY
        lhs = self.trace() ** 2
        rhs = 4 * self.det()
        if lhs > rhs:
            return MobiusClass.HYPERBOLIC
        if lhs == rhs:
            return MobiusClass.PARABOLIC
        return MobiusClass.ELLIPTIC

    def isometric_circle(self) -> HalfCircle:
        """Circle on which the map is a Euclidean isometry: |cz + d| = sqrt(det).

        Demands c != 0 and a perfect-square determinant; refusing to
        approximate keeps every downstream comparison exact.
        """
        if self.c == 0:
            raise ValueError("affine transformation has no isometric circle")
        root = sqrt_exact(self.det())
        if root is None:
            raise ValueError(
                "isometric circle needs a perfect-square determinant "
                f"(got {self.det()})"
            )
        return HalfCircle(-self.d / self.c, root / abs(self.c))

    def __repr__(self):
        return f"MobiusMatrix({self.a}, {self.b}, {self.c}, {self.d})"


def reflection_in(circle: HalfCircle) -> MobiusMatrix:
    """Order-2 element fixing the apex and swapping inside with outside.

    This is the orientation-preserving half-turn about the apex (not an
    anti-holomorphic inversion); it exchanges the circle's endpoints.
    Stored cleared of the 1/r scale: [[a, -a^2 - r^2], [1, -a]], det r^2.
    """
    a, r = circle.center, circle.radius
    return MobiusMatrix(a, -(a**2) - r**2, Fraction(1), -a)


def circle_pairing_check(m: MobiusMatrix) -> bool:
    """True iff m carries its isometric circle onto the inverse's circle.

    Checked on boundary endpoints, as an unordered set, in exact arithmetic.
    """
    own = m.isometric_circle()
    partner = m.inverse().isometric_circle()
    images = {m.apply_boundary(own.left), m.apply_boundary(own.right)}
    return images == {partner.left, partner.right}


def strips_disjoint(c1: HalfCircle, c2: HalfCircle) -> bool:
    """Whether the open width-4r strips around two circles are disjoint.

    |a1 - a2| >= 2(r1 + r2); deliberately stronger than bare closure
    disjointness so the strip-transport separation argument applies.
    """
    return abs(c1.center - c2.center) >= 2 * (c1.radius + c2.radius)


@dataclass(frozen=True)
class Separation:
    """Either a uniform epsilon or the first strip-overlapping pair."""

    epsilon: Fraction | None
    witness: tuple[int, int] | None

    @property
    def ok(self) -> bool:
        return self.epsilon is not None


def separation_epsilon(circles: list[HalfCircle]) -> Separation:
    """Uniform neighbourhood radius (max radius / 2) once all strips are disjoint.

    Pairs are scanned in canonical (i, j) order and the first violation is
    returned as a witness instead of raising.
    """
    if not circles:
        raise ValueError("no circles given")
    for i in range(len(circles)):
        for j in range(i + 1, len(circles)):
            if not strips_disjoint(circles[i], circles[j]):
                return Separation(None, (i, j))
    return Separation(max(c.radius for c in circles) / 2, None)


def strip_transport(c1: HalfCircle, c2: HalfCircle) -> MobiusMatrix:
    """Affine map sending strip(c1) onto strip(c2) and apex to apex.

    Cleared of the 1/sqrt(r1*r2) scale: [[r2, r1*a2 - r2*a1], [0, r1]],
    det r1*r2 > 0.
    """
    return MobiusMatrix(
        c2.radius,
        c1.radius * c2.center - c2.radius * c1.center,
        Fraction(0),
        c1.radius,
    )
