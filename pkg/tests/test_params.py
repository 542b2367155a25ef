"""Parameter derivations: classical parallels route and equal-error route."""

import math

import pytest
from mpmath import mp

from delisle.angles import RAD_PER_DEG, dms_format
from delisle.distortion import error_at
from delisle.params import (
    ConicParams,
    DegenerateConeError,
    DegenerateRegionError,
    RegionBounds,
    StandardParallels,
    apex_distance_from_parallels,
    apex_offset_from_bounds,
    apex_offset_from_parallels,
    cone_constant_from_bounds,
    cone_constant_from_parallels,
    equal_error_residual,
    refined_apex_offset,
)

mp.dps = 40


def mp_cos_deg(x):
    return mp.cos(mp.mpf(x) * mp.pi / 180)


def mp_apex_distance(p, q):
    return (mp.mpf(q) - p) * mp_cos_deg(p) / (mp_cos_deg(p) - mp_cos_deg(q))


RUSSIA = RegionBounds(40.0, 70.0)
PQ = StandardParallels(50.0, 60.0)


class TestApexDistance:
    def test_published_parallels(self):
        distance = apex_distance_from_parallels(PQ)
        assert distance == pytest.approx(45.017043922623722, abs=1e-12)
        assert dms_format(distance, "minutes") == "45°1′"

    def test_azimuthal_limit(self):
        assert apex_distance_from_parallels(StandardParallels(0.0, 90.0)) == (
            pytest.approx(90.0, abs=1e-9)
        )

    def test_bounding_parallels_against_high_precision(self):
        expected = float(mp_apex_distance(40, 70))
        got = apex_distance_from_parallels(StandardParallels(40.0, 70.0))
        assert got == pytest.approx(expected, abs=1e-12)

    def test_degenerate_pair(self):
        with pytest.raises(DegenerateConeError):
            apex_distance_from_parallels(StandardParallels(-30.0, 30.0))


class TestConeConstant:
    def test_published_parallels(self):
        omega = cone_constant_from_parallels(PQ)
        assert omega == pytest.approx(0.818112740180001, abs=1e-12)
        # Between 49'0" and 49'10" per degree of longitude.
        assert 49 / 60 <= omega <= 49 / 60 + 10 / 3600

    def test_azimuthal_limit(self):
        omega = cone_constant_from_parallels(StandardParallels(0.0, 90.0))
        assert omega == pytest.approx(2.0 / math.pi, abs=1e-14)

    def test_two_entry_points_agree_exactly(self):
        for south, north in [(40.0, 70.0), (10.0, 80.0), (55.5, 61.25)]:
            via_bounds = cone_constant_from_bounds(RegionBounds(south, north))
            via_parallels = cone_constant_from_parallels(
                StandardParallels(south, north)
            )
            assert via_bounds == via_parallels


class TestApexOffset:
    def test_published_parallels(self):
        offset = apex_offset_from_parallels(PQ)
        assert offset == pytest.approx(5.017043922623722, abs=1e-12)
        assert dms_format(offset, "minutes") == "5°1′"

    def test_azimuthal_limit(self):
        offset = apex_offset_from_parallels(StandardParallels(0.0, 90.0))
        assert offset == pytest.approx(0.0, abs=1e-9)

    def test_equals_distance_minus_pole_arc(self):
        parallels = StandardParallels(40.0, 70.0)
        assert apex_offset_from_parallels(parallels) == (
            apex_distance_from_parallels(parallels) - 50.0
        )


class TestBoundsRoute:
    def test_published_ratio(self):
        omega = cone_constant_from_bounds(RUSSIA)
        expected = float(
            (mp_cos_deg(40) - mp_cos_deg(70)) / (30 * mp.pi / 180)
        )
        assert omega == pytest.approx(expected, abs=1e-14)

    def test_midpoint_offset(self):
        assert apex_offset_from_bounds(RUSSIA) == pytest.approx(
            4.889532160881670, abs=1e-9
        )

    def test_midpoint_offset_full_quadrant(self):
        assert apex_offset_from_bounds(RegionBounds(0.0, 90.0)) == pytest.approx(
            9.319805153394639, abs=1e-9
        )

    def test_midpoint_offset_inner_band(self):
        assert apex_offset_from_bounds(RegionBounds(50.0, 60.0)) == pytest.approx(
            5.093473225998432, abs=1e-9
        )

    def test_refined_offset(self):
        lat, offset = refined_apex_offset(RUSSIA)
        assert lat == pytest.approx(54.079008818000302, abs=1e-9)
        assert offset == pytest.approx(4.892193473808626, abs=1e-9)

    def test_refined_offset_full_quadrant(self):
        lat, offset = refined_apex_offset(RegionBounds(0.0, 90.0))
        assert lat == pytest.approx(39.540223747810195, abs=1e-9)
        assert offset == pytest.approx(9.473114805885841, abs=1e-9)

    def test_straddling_region_rejected(self):
        with pytest.raises(DegenerateRegionError, match="straddle"):
            cone_constant_from_bounds(RegionBounds(-10.0, 40.0))
        with pytest.raises(DegenerateRegionError, match="straddle"):
            apex_offset_from_bounds(RegionBounds(-10.0, 40.0))


class TestEqualErrorResidual:
    def test_published_quadruple(self):
        residual = equal_error_residual(RUSSIA, PQ)
        assert residual == pytest.approx(0.043385292663087, abs=1e-12)
        # Both members nearly equal and of order 4.2..4.3.
        member = 30.0 * (math.cos(50 * RAD_PER_DEG) - math.cos(60 * RAD_PER_DEG))
        assert member == pytest.approx(4.2836, abs=1e-4)

    def test_identity_when_parallels_are_the_bounds(self):
        assert equal_error_residual(RUSSIA, StandardParallels(40.0, 70.0)) == 0.0

    def test_wide_case_against_high_precision(self):
        expected = float(
            90 * (mp_cos_deg(30) - mp_cos_deg(60)) - 30 * (mp_cos_deg(0) - mp_cos_deg(90))
        )
        got = equal_error_residual(
            RegionBounds(0.0, 90.0), StandardParallels(30.0, 60.0)
        )
        assert got == pytest.approx(expected, abs=1e-12)


class TestInvariants:
    def test_error_vanishes_at_standard_parallels(self):
        grid = [5.0 * k for k in range(18)]
        for i, p in enumerate(grid):
            for q in grid[i + 1 :]:
                params = ConicParams.from_parallels(StandardParallels(p, q))
                assert abs(error_at(p, params)) < 1e-12
                assert abs(error_at(q, params)) < 1e-12

    def test_apex_distance_decreases_with_latitude(self):
        previous = math.inf
        for p in range(0, 80, 2):
            distance = apex_distance_from_parallels(
                StandardParallels(float(p), float(p) + 10.0)
            )
            assert distance < previous
            previous = distance

    def test_azimuthal_limit_is_continuous(self):
        distances = [
            apex_distance_from_parallels(StandardParallels(0.0, q))
            for q in (85.0, 89.0, 89.9)
        ]
        offsets = [
            apex_offset_from_parallels(StandardParallels(0.0, q))
            for q in (85.0, 89.0, 89.9)
        ]
        assert distances[0] > distances[1] > distances[2] > 90.0
        assert offsets == [d - 90.0 for d in distances]
        assert offsets[2] < 0.06

    def test_midpoint_solver_nearly_equioscillates(self):
        params = ConicParams.from_bounds(RUSSIA, "midpoint")
        at_bounds = error_at(40.0, params)
        at_north = error_at(70.0, params)
        trough = -error_at(refined_apex_offset(RUSSIA)[0], params)
        assert abs(at_bounds - at_north) < 1e-3
        assert abs(at_bounds - trough) < 1e-3
        assert abs(at_north - trough) < 1e-3

    def test_refined_solver_equioscillates_exactly(self):
        lat, offset = refined_apex_offset(RUSSIA)
        params = ConicParams(cone_constant_from_bounds(RUSSIA), offset)
        assert abs(error_at(40.0, params) - error_at(70.0, params)) < 1e-12
        assert abs(error_at(40.0, params) + error_at(lat, params)) < 1e-12


class TestSouthernHemisphere:
    def test_bounds_reflect(self):
        south = RegionBounds(-70.0, -40.0)
        assert cone_constant_from_bounds(south) == cone_constant_from_bounds(RUSSIA)
        assert apex_offset_from_bounds(south) == apex_offset_from_bounds(RUSSIA)
        lat, offset = refined_apex_offset(south)
        lat_n, offset_n = refined_apex_offset(RUSSIA)
        assert lat == -lat_n
        assert offset == offset_n

    def test_parallels_reflect(self):
        mirrored = StandardParallels(-60.0, -50.0)
        assert cone_constant_from_parallels(mirrored) == cone_constant_from_parallels(PQ)
        assert apex_offset_from_parallels(mirrored) == apex_offset_from_parallels(PQ)
        params = ConicParams.from_parallels(mirrored)
        assert params.south_cone

    def test_south_heavy_straddling_pair(self):
        params = ConicParams.from_parallels(StandardParallels(-60.0, 50.0))
        assert params.south_cone
        assert params.cone_constant == cone_constant_from_parallels(
            StandardParallels(-50.0, 60.0)
        )


class TestValidation:
    def test_bounds_ordering(self):
        with pytest.raises(DegenerateRegionError):
            RegionBounds(70.0, 40.0)
        with pytest.raises(DegenerateRegionError):
            RegionBounds(40.0, 40.0)

    def test_parallel_ordering(self):
        with pytest.raises(DegenerateConeError):
            StandardParallels(60.0, 50.0)

    def test_conic_params_ranges(self):
        with pytest.raises(ValueError):
            ConicParams(1.5, 5.0)
        with pytest.raises(ValueError):
            ConicParams(0.0, 5.0)
        with pytest.raises(ValueError):
            ConicParams(0.8, 5.0, degree_length=0.0)

    def test_unknown_solver(self):
        with pytest.raises(ValueError, match="solver"):
            ConicParams.from_bounds(RUSSIA, "newton")
