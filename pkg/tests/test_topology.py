import random
from fractions import Fraction

import pytest

from geoschottky.families import cantor_pair, loch_ness_pair, truncate
from geoschottky.hyperbolic import UpperPoint
from geoschottky.schottky import SchottkyDescription, describe
from geoschottky.topology import (
    ComponentMarker,
    ExhaustionBox,
    GenusFlag,
    boundary_cycles,
    component_code,
    end_genus_flags,
    end_path,
    signature,
)
from geoschottky import cantor, families


def test_loch_ness_strip_is_punctured_torus():
    # hand-traced oracle: endpoints {-1,1,3,5,7} with f_0: -1 -> 5, 1 -> 3
    # close into a single boundary cycle
    desc = describe(truncate("loch-ness", 0))
    result = boundary_cycles(desc)
    assert result.count == 1
    sig = signature(desc)
    assert (sig.rank, sig.boundary_cycles, sig.genus, sig.euler) == (2, 1, 1, -1)


def test_cantor_level_one_is_cylinder():
    # hand-traced oracle: middle arc and outer arc each close onto themselves
    desc = describe(truncate("cantor", 1))
    assert boundary_cycles(desc).count == 2
    sig = signature(desc)
    assert (sig.rank, sig.boundary_cycles, sig.genus, sig.euler) == (1, 2, 0, 0)


def test_cantor_level_two_hand_traced():
    # oracle traced by hand: arcs {outer}, {middle}, {a1,a5}, {a2,a4} -> b = 4
    desc = describe(truncate("cantor", 2))
    assert boundary_cycles(desc).count == 4
    sig = signature(desc)
    assert (sig.rank, sig.boundary_cycles, sig.genus) == (3, 4, 0)


def test_zero_length_arcs_count_as_nodes():
    desc = describe(truncate("loch-ness", 1))
    result = boundary_cycles(desc)
    # 12 circles -> 11 tangency arcs + 1 outer arc
    assert len(result.arcs) == 12
    assert sum(1 for arc in result.arcs if arc.through_infinity) == 1
    assert result.count == 1


def test_boundary_cycles_rejects_overlap():
    from geoschottky.families import pair_from_circles
    from geoschottky.schottky import Entry

    m = pair_from_circles(Fraction(0), Fraction(1), Fraction(1))
    entries = (
        Entry(1, m, (Fraction(-1), Fraction(1))),
        Entry(-1, m.inverse(), (Fraction(0), Fraction(2))),
    )
    with pytest.raises(ValueError):
        boundary_cycles(SchottkyDescription(entries))


def test_boundary_cycles_invariant_under_permutation():
    rng = random.Random(13)
    for kind, level, depth in (("cantor", 3, None), ("blooming", 2, 1)):
        desc = describe(truncate(kind, level, depth))
        reference = boundary_cycles(desc).count
        entries = list(desc.entries)
        for _ in range(5):
            rng.shuffle(entries)
            shuffled = SchottkyDescription(tuple(entries))
            assert boundary_cycles(shuffled).count == reference


def test_euler_consistency_across_truncations():
    descs = [describe(truncate("cantor", n)) for n in range(1, 6)]
    descs += [describe(truncate("blooming", n, m)) for n in (1, 2) for m in (0, 1, 2)]
    descs += [describe(truncate("loch-ness", n)) for n in range(3)]
    for desc in descs:
        sig = signature(desc)
        assert 2 - 2 * sig.genus - sig.boundary_cycles == 1 - sig.rank
        assert sig.genus >= 0


def test_blooming_satellites_create_genus():
    sig = signature(describe(truncate("blooming", 1, 1)))
    assert sig.rank == 5
    assert sig.genus >= 1
    deeper = signature(describe(truncate("blooming", 1, 3)))
    assert deeper.genus >= sig.genus


def test_loch_ness_strips_pair_within_themselves():
    for n in range(-2, 3):
        desc = describe(list(loch_ness_pair(n)))
        sig = signature(desc)
        assert (sig.rank, sig.boundary_cycles, sig.genus) == (2, 1, 1)


def test_single_level_truncations_match_euler_forced_count():
    # one level alone is planar; Euler then forces b = 2^(n-1) + 1, which
    # disagrees with the advertised 2n punctures from n = 2 on
    for n in range(1, 5):
        pairs = [cantor_pair(n, j) for j in range(2 ** (n - 1))]
        sig = signature(describe(pairs))
        assert sig.genus == 0
        assert sig.boundary_cycles == 2 ** (n - 1) + 1
        advertised = 2 * n
        assert (sig.boundary_cycles == advertised) == (n == 1)


def test_component_code_examples():
    assert component_code(UpperPoint(Fraction(1), Fraction(1, 100)), 2) == "00"
    assert component_code(UpperPoint(Fraction(2), Fraction(1, 100)), 2) == "11"
    for n in (1, 2, 5):
        marker = component_code(UpperPoint(Fraction(0), Fraction(1)), n)
        assert marker is ComponentMarker.CORE


def test_component_code_mirrors_and_markers():
    z = UpperPoint(Fraction(-1), Fraction(1, 100))
    assert component_code(z, 2) == "00"
    over_gap = UpperPoint(Fraction(3, 2), Fraction(1, 1000))
    assert component_code(over_gap, 1) is ComponentMarker.UNRESOLVED
    far_out = UpperPoint(Fraction(50), Fraction(1, 100))
    assert component_code(far_out, 2) is ComponentMarker.UNRESOLVED


def test_component_count_matches_binary_tree():
    for n in range(1, 7):
        codes = set()
        for iv in cantor.level_intervals(n):
            x = (iv.lo + iv.hi) / 2
            low = families.cantor_radius(n) / 2
            for sign in (1, -1):
                code = component_code(UpperPoint(sign * x, low), n)
                assert isinstance(code, str)
                codes.add(code)
        assert len(codes) == 2**n


def test_exhaustion_boxes_nested():
    boxes = [ExhaustionBox.level(n) for n in range(1, 8)]
    for small, big in zip(boxes, boxes[1:]):
        assert big.re_min < small.re_min and small.re_max < big.re_max
        assert big.im_min < small.im_min and small.im_max < big.im_max
    assert boxes[0].im_min == Fraction(1, 12)
    assert ExhaustionBox.level(2, im_min=Fraction(1, 108)).im_min == Fraction(1, 108)


def test_end_path_examples():
    assert end_path(iter([0, 0, 0]), 3) == ["0", "00", "000"]
    assert end_path([0, 1, 0], 3) == ["0", "01", "010"]
    path = end_path((i % 2 for i in range(10)), 7)
    for shorter, longer in zip(path, path[1:]):
        assert longer.startswith(shorter)
    with pytest.raises(ValueError):
        end_path([0, 1], 3)
    with pytest.raises(ValueError):
        end_path([2, 0], 2)


def test_end_genus_flags():
    assert end_genus_flags("cantor", "0110") is GenusFlag.PLANAR
    assert end_genus_flags("blooming", "0110") is GenusFlag.INFINITE_GENUS
    assert end_genus_flags("loch-ness", "") is GenusFlag.INFINITE_GENUS
    with pytest.raises(ValueError):
        end_genus_flags("cantor", "012")
    with pytest.raises(ValueError):
        end_genus_flags("torus", "01")
