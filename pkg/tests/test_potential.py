import math

import numpy as np
import pytest

from radial.errors import NoClassicalRegionError, SingularityError, UnsupportedModelError
from radial.models import (
    CenteredHarmonic,
    HarmonicPlusLinear3D,
    Morse,
    ShiftedHarmonic,
    TaylorSeries,
)
from radial.potential import (
    bracket_roots,
    effective_potential,
    evaluate,
    parabolic_fit,
    taylor_at_origin,
    turning_points,
    well_minimum,
)


# --- evaluate ---


class TestEvaluate:
    """Tests for evaluate."""

    def test_evaluate_shifted_harmonic_minimum(self):
        """Test V(r_m) = −V_m and the parabola away from it."""
        model = ShiftedHarmonic(m=2.0, omega=3.0, r_m=4.0, V_m=5.0)
        assert evaluate(model, 4.0) == -5.0
        assert evaluate(model, 5.0) == pytest.approx(0.5 * 2 * 9 * 1 - 5)

    def test_evaluate_morse_shape(self, deep_morse):
        """Test the Morse minimum and its approach to zero at large r.

        Args:
            deep_morse: Morse(V_m=8, a=1, r_m=3).
        """
        assert evaluate(deep_morse, 3.0) == pytest.approx(-8.0)
        assert abs(evaluate(deep_morse, 40.0)) < 1e-10
        assert evaluate(deep_morse, 0.0) > 0

    def test_evaluate_preserves_array_shape(self, centered_oscillator):
        """Test vectorized evaluation.

        Args:
            centered_oscillator: Unit spherical oscillator.
        """
        r = np.linspace(0.0, 2.0, 5)
        np.testing.assert_allclose(evaluate(centered_oscillator, r), 0.5 * r**2)

    def test_evaluate_harmonic_plus_linear(self):
        """Test ½mω²r² − Cr."""
        model = HarmonicPlusLinear3D(m=1.0, omega=2.0, C=3.0)
        assert evaluate(model, 1.5) == pytest.approx(0.5 * 4 * 2.25 - 4.5)

    def test_evaluate_taylor_horner(self):
        """Test the power series evaluation."""
        model = TaylorSeries(coefficients=[1.0, -2.0, 0.5, 0.25])
        assert evaluate(model, 2.0) == pytest.approx(1 - 4 + 2 + 2)


# --- effective_potential ---


class TestEffectivePotential:
    """Tests for effective_potential."""

    def test_effective_potential_s_wave_is_bare(self, unit_oscillator):
        """Test that ℓ = 0 adds nothing and allows r = 0.

        Args:
            unit_oscillator: Shifted oscillator at r_m = 6.
        """
        assert effective_potential(unit_oscillator, 0, 1.0, 0.0) == evaluate(
            unit_oscillator, 0.0
        )

    def test_effective_potential_adds_barrier(self, centered_oscillator):
        """Test the centrifugal term ℓ(ℓ+1)ħ²/(2mr²).

        Args:
            centered_oscillator: Unit spherical oscillator.
        """
        value = effective_potential(centered_oscillator, 2, 1.0, 0.5)
        assert value == pytest.approx(0.5 * 0.25 + 6 / (2 * 0.25))

    def test_effective_potential_singular_at_origin(self, centered_oscillator):
        """Test that r <= 0 with ℓ > 0 is rejected.

        Args:
            centered_oscillator: Unit spherical oscillator.
        """
        with pytest.raises(SingularityError):
            effective_potential(centered_oscillator, 1, 1.0, 0.0)
        with pytest.raises(SingularityError):
            effective_potential(centered_oscillator, 1, 1.0, np.array([0.1, -0.1]))


# --- parabolic_fit ---


class TestParabolicFit:
    """Tests for parabolic_fit."""

    def test_parabolic_fit_morse_curvature(self):
        """Test ω = a√(2V_m/m) at the Morse minimum."""
        model = Morse(m=2.0, V_m=8.0, a=0.25, r_m=3.0)
        fit = parabolic_fit(model)
        assert fit.omega == pytest.approx(0.25 * math.sqrt(8.0))
        assert (fit.m, fit.r_m, fit.V_m) == (2.0, 3.0, 8.0)

    def test_parabolic_fit_harmonic_plus_linear_is_exact(self):
        """Test that the completed square reproduces the potential."""
        model = HarmonicPlusLinear3D(m=1.5, omega=2.0, C=3.0)
        fit = parabolic_fit(model)
        assert fit.r_m == pytest.approx(3.0 / (1.5 * 4.0))
        r = np.linspace(0.0, 3.0, 7)
        np.testing.assert_allclose(evaluate(fit, r), evaluate(model, r), atol=1e-12)

    def test_parabolic_fit_quadratic_taylor(self):
        """Test that a quadratic series with a well becomes a shifted oscillator."""
        model = TaylorSeries(coefficients=[0.0, -2.0, 0.5])
        fit = parabolic_fit(model)
        assert fit.r_m == pytest.approx(2.0)
        assert fit.V_m == pytest.approx(2.0)
        assert fit.omega == pytest.approx(1.0)

    def test_parabolic_fit_rejects_cubic_series(self):
        """Test that higher-degree series have no located minimum."""
        with pytest.raises(UnsupportedModelError):
            parabolic_fit(TaylorSeries(coefficients=[0.0, 0.0, 1.0, 0.1]))

    def test_parabolic_fit_keeps_harmonic(self, unit_oscillator):
        """Test that a parabola is its own fit.

        Args:
            unit_oscillator: Shifted oscillator at r_m = 6.
        """
        assert parabolic_fit(unit_oscillator) is unit_oscillator


# --- taylor_at_origin ---


class TestTaylorAtOrigin:
    """Tests for taylor_at_origin."""

    def test_taylor_at_origin_shifted_harmonic(self, unit_oscillator):
        """Test the expanded parabola about r = 0.

        Args:
            unit_oscillator: Shifted oscillator at r_m = 6.
        """
        series = taylor_at_origin(unit_oscillator, 4)
        assert series.coefficients == pytest.approx([18.0, -6.0, 0.5, 0.0, 0.0])

    def test_taylor_at_origin_morse_converges(self, deep_morse):
        """Test that the Morse series resums to V(r) near the origin.

        Args:
            deep_morse: Morse(V_m=8, a=1, r_m=3).
        """
        series = taylor_at_origin(deep_morse, 40)
        for r in (0.0, 0.1, 0.4):
            assert evaluate(series, r) == pytest.approx(evaluate(deep_morse, r), rel=1e-10)

    def test_taylor_at_origin_negative_order_raises(self, deep_morse):
        """Test that the order must be nonnegative.

        Args:
            deep_morse: Morse(V_m=8, a=1, r_m=3).
        """
        with pytest.raises(UnsupportedModelError):
            taylor_at_origin(deep_morse, -1)


# --- turning_points / bracket_roots / well_minimum ---


class TestTurningPoints:
    """Tests for turning_points, bracket_roots and well_minimum."""

    def test_turning_points_harmonic(self, unit_oscillator):
        """Test r_m ± √(2E/(mω²)).

        Args:
            unit_oscillator: Shifted oscillator at r_m = 6.
        """
        inner, outer = turning_points(unit_oscillator, 0.5)
        assert inner == pytest.approx(5.0, abs=1e-12)
        assert outer == pytest.approx(7.0, abs=1e-12)

    def test_turning_points_clamped_at_origin(self):
        """Test that an inner root below 0 is clamped unless asked otherwise."""
        model = ShiftedHarmonic(m=1.0, omega=1.0, r_m=1.0)
        assert turning_points(model, 2.0)[0] == 0.0
        inner, _ = turning_points(model, 2.0, clamp=False)
        assert inner == pytest.approx(-1.0, abs=1e-12)

    def test_bracket_roots_below_minimum_raises(self, deep_morse):
        """Test that E below the well has no classical region.

        Args:
            deep_morse: Morse(V_m=8, a=1, r_m=3).
        """
        with pytest.raises(NoClassicalRegionError):
            turning_points(deep_morse, -9.0)

    def test_bracket_roots_respects_floor(self):
        """Test that the inward search stops above the floor."""
        inner, outer = bracket_roots(lambda r: 1.0 / r + r, 1.0, 2.5, clamp=False, floor=0.0)
        assert inner == pytest.approx(0.5, abs=1e-12)
        assert outer == pytest.approx(2.0, abs=1e-12)

    def test_well_minimum(self, deep_morse, centered_oscillator):
        """Test the located minimum of several wells.

        Args:
            deep_morse: Morse(V_m=8, a=1, r_m=3).
            centered_oscillator: Unit spherical oscillator.
        """
        assert well_minimum(deep_morse) == (3.0, -8.0)
        assert well_minimum(centered_oscillator) == (0.0, 0.0)
        r_min, v_min = well_minimum(HarmonicPlusLinear3D(m=1.0, omega=1.0, C=2.0))
        assert (r_min, v_min) == (pytest.approx(2.0), pytest.approx(-2.0))
