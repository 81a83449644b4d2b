"""Slope-length floors, exceptional-slope filters, volume windows."""

from fractions import Fraction

import mpmath
import pytest
from hypothesis import given
from hypothesis import strategies as st

from cuspbounds import (
    CONSTANTS,
    Slope,
    exceptional_filter,
    montesinos_window,
    slope_length_lower,
    slope_product_floor,
    surgery_volume_window,
)
from cuspbounds.errors import (
    DegenerateDenominator,
    NonPositiveVolume,
    SlopeTooSmall,
    TooFewTwistRegions,
)

mpmath.mp.dps = 50

FIG8_VOLUME = 2.029883212819  # caller-supplied data, not computed here


class TestSlope:
    def test_rejects_meridian(self):
        with pytest.raises(ValueError):
            Slope(1, 0)

    def test_rejects_common_factor(self):
        with pytest.raises(ValueError):
            Slope(2, 14)

    def test_meridian_intersections(self):
        assert Slope(3, -7).meridian_intersections == 7


class TestConstants:
    def test_exclusion_factor_is_exact(self):
        assert CONSTANTS.exclusion_factor == Fraction(360, 67)
        assert Fraction(18) / CONSTANTS.cusp_area_floor == Fraction(360, 67)

    def test_octahedron_volume_matches_high_precision(self):
        v8 = 4 * mpmath.catalan
        assert abs(CONSTANTS.v8 - float(v8)) < 1e-12


class TestSlopeLengthLower:
    def test_formula_value(self):
        assert slope_length_lower(10, 1, Slope(1, 6)) == pytest.approx(6.7, abs=1e-12)

    def test_genus_one_slope_six_beats_two_pi(self):
        import math

        for c in (3, 10, 25, 100):
            assert slope_length_lower(c, 1, Slope(1, 6)) == pytest.approx(6.7, abs=1e-12)
        assert 6.7 > 2 * math.pi

    def test_degenerate_denominator(self):
        with pytest.raises(DegenerateDenominator):
            slope_length_lower(2, 0, Slope(1, 5))


class TestExceptionalFilter:
    def test_threshold_examples(self):
        assert exceptional_filter(0, Slope(1, 6)) == (True, False)
        assert exceptional_filter(0, Slope(1, 5)) == (False, False)
        assert exceptional_filter(Fraction(1, 2), Slope(1, 9)) == (True, False)

    def test_delta_zero_cutoff_is_six(self):
        for q in range(1, 30):
            non_exc, _ = exceptional_filter(0, Slope(1, q))
            assert non_exc == (q >= 6)

    @given(q=st.integers(1, 400), num=st.integers(-2, 40), den=st.integers(1, 20))
    def test_monotone_in_q(self, q, num, den):
        delta = Fraction(num, den)
        first, _ = exceptional_filter(delta, Slope(1, q))
        second, _ = exceptional_filter(delta, Slope(1, q + 1))
        assert second or not first

    @given(
        q=st.integers(1, 400),
        num1=st.integers(-2, 30),
        num2=st.integers(-2, 30),
        den=st.integers(1, 15),
    )
    def test_anti_monotone_in_delta(self, q, num1, num2, den):
        low, high = sorted((Fraction(num1, den), Fraction(num2, den)))
        permissive, _ = exceptional_filter(low, Slope(1, q))
        strict_result, _ = exceptional_filter(high, Slope(1, q))
        assert permissive or not strict_result


class TestVolumeWindow:
    def test_boundary_slope_gives_zero_lower(self):
        verdict = surgery_volume_window(0, Slope(1, 6), FIG8_VOLUME)
        assert verdict.volume_window == (0.0, FIG8_VOLUME)
        assert verdict.boundary_hit

    def test_q_twelve_factor(self):
        verdict = surgery_volume_window(0, Slope(1, 12), 2.02988)
        assert verdict.volume_window[0] == pytest.approx(2.02988 * 0.75**1.5, abs=1e-12)
        # frozen: 2.02988 * (3/4)^(3/2) evaluated at 50 digits
        assert verdict.volume_window[0] == pytest.approx(1.3184457349754672, abs=1e-12)

    def test_slope_too_small(self):
        with pytest.raises(SlopeTooSmall):
            surgery_volume_window(Fraction(1, 3), Slope(1, 7), 1.0)

    def test_non_positive_volume(self):
        with pytest.raises(NonPositiveVolume):
            surgery_volume_window(0, Slope(1, 8), 0.0)

    def test_lower_bound_monotone_and_limits(self):
        lowers = [
            surgery_volume_window(0, Slope(1, q), FIG8_VOLUME).volume_window[0]
            for q in range(6, 80)
        ]
        assert all(a <= b for a, b in zip(lowers, lowers[1:]))
        far = surgery_volume_window(0, Slope(1, 10**6), FIG8_VOLUME).volume_window[0]
        assert FIG8_VOLUME - far < 1e-6 * FIG8_VOLUME

    def test_two_pi_implies_window_applicable(self):
        for q in range(1, 40):
            for delta in (Fraction(0), Fraction(1, 3), Fraction(-1, 2)):
                _, two_pi = exceptional_filter(delta, Slope(1, q))
                if two_pi:
                    surgery_volume_window(delta, Slope(1, q), 1.0)  # must not raise


class TestMontesinosWindow:
    def test_reference_values_high_precision(self):
        verdict = montesinos_window(10, Slope(1, 7))
        v8 = 4 * mpmath.catalan
        upper = 2 * v8 * 10
        lower = (v8 / 4) * (10 - 9) * (mpmath.mpf(13) / 49) ** mpmath.mpf(1.5)
        assert abs(verdict.volume_window[1] - float(upper)) < 1e-9
        assert abs(verdict.volume_window[0] - float(lower)) < 1e-9

    def test_lower_clamped_at_nine_regions(self):
        verdict = montesinos_window(9, Slope(1, 100))
        assert verdict.volume_window[0] == 0.0
        assert verdict.volume_window[1] == pytest.approx(2 * CONSTANTS.v8 * 9, abs=1e-12)

    def test_slope_too_small(self):
        with pytest.raises(SlopeTooSmall):
            montesinos_window(10, Slope(1, 5))

    def test_too_few_regions(self):
        with pytest.raises(TooFewTwistRegions):
            montesinos_window(1, Slope(1, 7))


class TestSlopeProductFloor:
    def test_examples(self):
        assert slope_product_floor(3.35, 2.0, 2.0, 1)
        assert not slope_product_floor(3.35, 1.0, 1.0, 1)
        assert slope_product_floor(3.35, 1.0, 1.0, 0)

    def test_rejects_bad_inputs(self):
        with pytest.raises(ValueError):
            slope_product_floor(0.0, 1.0, 1.0, 1)
