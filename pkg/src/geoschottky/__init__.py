"""Exact-arithmetic geometric Schottky groups on the upper half-plane.

Constructs the explicit infinitely generated Fuchsian families that
uniformize the one-ended infinite-genus surface, the Cantor tree, and the
Blooming Cantor tree, and verifies every finitely checkable property of
their truncations: isometric circles, Schottky conditions, fundamental
domain reduction, and the genus/ends data of the quotients.
"""

from .arith import Rational, canonicalize, compare, format_rational, parse_rational, sqrt_exact
from .cantor import Gap, LevelInterval, address, gap_midpoint, gaps, level_intervals
from .document import DocumentError, load, save
from .families import (
    BLOOMING,
    CANTOR,
    LOCH_NESS,
    GeneratorId,
    GeneratorSpec,
    blooming_core_pair,
    blooming_satellite,
    cantor_pair,
    loch_ness_pair,
    pair_from_circles,
    truncate,
)
from .hyperbolic import (
    INFINITY,
    HalfCircle,
    MobiusClass,
    MobiusMatrix,
    Strip,
    UpperPoint,
    circle_pairing_check,
    reflection_in,
    separation_epsilon,
    strip_transport,
    strips_disjoint,
)
from .render import RenderSpec, render_svg
from .schottky import (
    SchottkyDescription,
    StepLimitExceeded,
    VerificationReport,
    apply_word,
    describe,
    in_fundamental_domain,
    reduce,
    tessellation_tiles,
    verify,
)
from .topology import (
    ComponentMarker,
    ExhaustionBox,
    GenusFlag,
    SurfaceSignature,
    boundary_cycles,
    component_code,
    end_genus_flags,
    end_path,
    signature,
)

__version__ = "0.1.0"
