"""SVG rendering of circle families, the fundamental domain, and tiles.

This is the only place rationals become floats.  Output is SVG 1.1 text:
vector arcs stay inspectable under zoom even when satellite radii are four
orders of magnitude below the core circles.
"""

from __future__ import annotations

from dataclasses import dataclass, field
from fractions import Fraction

from .schottky import HalfCircle, SchottkyDescription, Tile, VerticalLine

DEFAULT_PALETTE = (
    "#1f77b4",
    "#d62728",
    "#2ca02c",
    "#9467bd",
    "#ff7f0e",
    "#8c564b",
)


@dataclass(frozen=True)
class RenderSpec:
    """View window (real range and height above the axis) plus styling."""

    re_min: Fraction
    re_max: Fraction
    height: Fraction
    width_px: int = 1000
    stroke_classes: tuple[str, ...] = DEFAULT_PALETTE

    def __post_init__(self):
        if self.re_min >= self.re_max or self.height <= 0:
            raise ValueError("degenerate render window")
        if self.width_px <= 0:
            raise ValueError("output width must be positive")
        if not self.stroke_classes:
            raise ValueError("need at least one stroke class")


def auto_window(desc: SchottkyDescription, margin: Fraction = Fraction(1, 2)):
    """Window hugging all circles; unit square fallback for empty input."""
    circles = [e.circle() for e in desc.entries]
    if not circles:
        return RenderSpec(Fraction(-1), Fraction(1), Fraction(1))
    lo = min(c.left for c in circles) - margin
    hi = max(c.right for c in circles) + margin
    top = max(max(c.radius for c in circles) * 2, Fraction(1, 2))
    return RenderSpec(lo, hi, top)


class _Canvas:
    def __init__(self, spec: RenderSpec):
        self.spec = spec
        span = spec.re_max - spec.re_min
        self.w = spec.width_px
        self.h = max(1, round(spec.width_px * spec.height / span))
        self.scale = Fraction(spec.width_px) / span

    def x(self, value: Fraction) -> float:
        return float((value - self.spec.re_min) * self.scale)

    def y(self, value: Fraction) -> float:
        return self.h - float(value * self.scale)

    def r(self, value: Fraction) -> float:
        return float(value * self.scale)


def _num(v: float) -> str:
    # repr of a Python float is shortest-round-trip and deterministic
    return repr(round(v, 9))


def _arc_path(canvas: _Canvas, circle: HalfCircle) -> str:
    x1 = _num(canvas.x(circle.left))
    x2 = _num(canvas.x(circle.right))
    y0 = _num(canvas.y(Fraction(0)))
    rr = _num(canvas.r(circle.radius))
    # sweep=1 bows the arc upward (screen y grows downward)
    return f"M {x1} {y0} A {rr} {rr} 0 0 1 {x2} {y0}"


def _geodesic_element(canvas: _Canvas, geo, cls: str) -> str:
    if isinstance(geo, VerticalLine):
        x = _num(canvas.x(geo.x))
        return (
            f'<line x1="{x}" y1="{_num(canvas.y(Fraction(0)))}" x2="{x}" y2="0" '
            f'class="{cls}" />'
        )
    return f'<path d="{_arc_path(canvas, geo)}" class="{cls}" />'


def render_svg(
    desc: SchottkyDescription,
    tiles: list[Tile] | None = None,
    spec: RenderSpec | None = None,
) -> str:
    """SVG document: domain fill, boundary circles, optional tile arcs.

    The fundamental domain (everything outside the circles) is painted by
    layering: a full-window fill, then background-coloured half-disks for
    each circle inside.  Tiles are stroked arcs classed by word length.
    """
    if spec is None:
        spec = auto_window(desc)
    canvas = _Canvas(spec)
    palette = spec.stroke_classes
    out = []
    out.append(
        f'<svg xmlns="http://www.w3.org/2000/svg" width="{canvas.w}" '
        f'height="{canvas.h}" viewBox="0 0 {canvas.w} {canvas.h}" version="1.1">'
    )
    out.append("<style>")
    out.append(".domain { fill: #eef3fa; stroke: none; }")
    out.append(".hole { fill: #ffffff; stroke: none; }")
    out.append(
        ".circle { fill: none; stroke: #13304f; stroke-width: 1.2; }"
    )
    for length, color in enumerate(palette):
        out.append(
            f".tile-len-{length} {{ fill: none; stroke: {color}; "
            "stroke-width: 0.8; }"
        )
    out.append("</style>")
    out.append(f'<rect width="{canvas.w}" height="{canvas.h}" fill="#ffffff" />')

    circles = [e.circle() for e in desc.entries]
    visible = [
        c for c in circles if c.right > spec.re_min and c.left < spec.re_max
    ]
    if circles:
        out.append(
            f'<rect x="0" y="0" width="{canvas.w}" height="{canvas.h}" '
            'class="domain" />'
        )
        for c in visible:
            out.append(f'<path d="{_arc_path(canvas, c)} Z" class="hole" />')
        for c in visible:
            out.append(f'<path d="{_arc_path(canvas, c)}" class="circle" />')

    if tiles:
        out.append('<g id="tiles">')
        for tile in tiles:
            cls = f"tile-len-{min(len(tile.word), len(palette) - 1)}"
            for geo in tile.sides:
                if isinstance(geo, HalfCircle) and (
                    geo.right <= spec.re_min or geo.left >= spec.re_max
                ):
                    continue
                out.append(_geodesic_element(canvas, geo, cls))
        out.append("</g>")

    out.append("</svg>")
    return "\n".join(out) + "\n"
