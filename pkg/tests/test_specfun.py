import math

import numpy as np
import pytest
from hypothesis import given
from hypothesis import strategies as st
from scipy import special

from radial.errors import DomainError
from radial.specfun import (
    hermite_eval,
    hermite_zeros,
    integrate_samples,
    laguerre_eval,
    log_gamma,
)


# --- hermite_eval ---


class TestHermiteEval:
    """Tests for hermite_eval."""

    def test_hermite_eval_low_degrees(self):
        """Test the first polynomials at x = 0.5."""
        assert hermite_eval(0, 0.5) == 1.0
        assert hermite_eval(1, 0.5) == pytest.approx(1.0)
        assert hermite_eval(2, 0.5) == pytest.approx(4 * 0.25 - 2)
        assert hermite_eval(3, 0.5) == pytest.approx(8 * 0.125 - 12 * 0.5)

    def test_hermite_eval_scalar_returns_float(self):
        """Test that a scalar argument gives a Python float."""
        assert isinstance(hermite_eval(4, 1.3), float)

    def test_hermite_eval_vectorized_matches_scipy(self):
        """Test agreement with scipy on an array of abscissae."""
        x = np.linspace(-4.0, 4.0, 41)
        for n in range(12):
            expected = special.eval_hermite(n, x)
            np.testing.assert_allclose(hermite_eval(n, x), expected, rtol=1e-12, atol=1e-9)

    def test_hermite_eval_negative_degree_raises(self):
        """Test that a negative degree is a domain error."""
        with pytest.raises(DomainError):
            hermite_eval(-1, 0.0)

    @given(
        n=st.integers(min_value=0, max_value=20),
        x=st.floats(min_value=-5.0, max_value=5.0),
    )
    def test_hermite_eval_parity(self, n, x):
        """Test H_n(−x) = (−1)^n H_n(x).

        Args:
            n: Degree.
            x: Abscissa.
        """
        assert hermite_eval(n, -x) == pytest.approx(
            (-1) ** n * hermite_eval(n, x), rel=1e-12, abs=1e-9
        )

    @given(st.integers(min_value=0, max_value=15))
    def test_hermite_odd_degrees_vanish_at_origin(self, n):
        """Test that H_{2p+1}(0) = 0 and H_{2p}(0) does not.

        Args:
            n: Degree.
        """
        value = hermite_eval(n, 0.0)
        if n % 2:
            assert value == 0.0
        else:
            assert value != 0.0


# --- hermite_zeros ---


class TestHermiteZeros:
    """Tests for hermite_zeros."""

    def test_hermite_zeros_degree_two(self):
        """Test the zeros ±1/√2 of H_2."""
        zeros = hermite_zeros(2)
        assert zeros == pytest.approx([-1 / math.sqrt(2), 1 / math.sqrt(2)], abs=1e-14)

    def test_hermite_zeros_match_scipy_roots(self):
        """Test agreement with scipy Gauss-Hermite nodes."""
        for n in (1, 3, 6, 11):
            nodes, _ = special.roots_hermite(n)
            assert hermite_zeros(n) == pytest.approx(sorted(nodes), abs=1e-12)

    def test_hermite_zeros_ascending(self):
        """Test that the zeros come back sorted from most negative up."""
        for n in (4, 5, 9):
            zeros = hermite_zeros(n)
            assert zeros == sorted(zeros)
            assert all(lo < hi for lo, hi in zip(zeros, zeros[1:]))

    def test_hermite_zeros_are_roots_and_symmetric(self):
        """Test that every zero is a root and the set is symmetric."""
        zeros = hermite_zeros(9)
        assert len(zeros) == 9
        assert zeros[4] == 0.0
        for z, mirror in zip(zeros, reversed(zeros)):
            assert z == -mirror
            scale = abs(hermite_eval(9, z + 1e-3)) + 1.0
            assert abs(hermite_eval(9, z)) / scale < 1e-9

    def test_hermite_zeros_degree_zero_raises(self):
        """Test that H_0 has no zeros to return."""
        with pytest.raises(DomainError):
            hermite_zeros(0)


# --- laguerre_eval ---


class TestLaguerreEval:
    """Tests for laguerre_eval."""

    def test_laguerre_eval_closed_forms(self):
        """Test L_0 = 1, L_1 = 1 + b − z, L_2 at a sample point."""
        b, z = 2.5, 0.7
        assert laguerre_eval(0, b, z) == 1.0
        assert laguerre_eval(1, b, z) == pytest.approx(1 + b - z)
        expected = 0.5 * (z * z - 2 * (b + 2) * z + (b + 1) * (b + 2))
        assert laguerre_eval(2, b, z) == pytest.approx(expected)

    def test_laguerre_eval_matches_scipy(self):
        """Test agreement with scipy for non-integer parameters."""
        z = np.linspace(0.0, 20.0, 51)
        for b in (0.0, 0.5, 3.7, 14.0):
            for n in range(8):
                expected = special.eval_genlaguerre(n, b, z)
                np.testing.assert_allclose(
                    laguerre_eval(n, b, z), expected, rtol=1e-11, atol=1e-9
                )

    def test_laguerre_eval_negative_degree_raises(self):
        """Test that a negative degree is a domain error."""
        with pytest.raises(DomainError):
            laguerre_eval(-2, 1.0, 0.5)


# --- log_gamma ---


class TestLogGamma:
    """Tests for log_gamma."""

    def test_log_gamma_factorials(self):
        """Test ln Γ(n+1) = ln n!."""
        for n in range(2, 20):
            assert log_gamma(n + 1.0) == pytest.approx(math.log(math.factorial(n)), rel=1e-13)

    def test_log_gamma_half(self):
        """Test Γ(½) = √π."""
        assert log_gamma(0.5) == pytest.approx(0.5 * math.log(math.pi), abs=1e-14)

    def test_log_gamma_matches_scipy(self):
        """Test agreement with scipy on small and large arguments."""
        for x in (1e-3, 0.2, 0.75, 1.5, 7.3, 42.0, 310.5):
            assert log_gamma(x) == pytest.approx(special.gammaln(x), rel=1e-13, abs=1e-13)

    def test_log_gamma_nonpositive_raises(self):
        """Test that x <= 0 is a domain error."""
        with pytest.raises(DomainError):
            log_gamma(0.0)
        with pytest.raises(DomainError):
            log_gamma(-1.5)


# --- integrate_samples ---


class TestIntegrateSamples:
    """Tests for integrate_samples."""

    def test_integrate_samples_odd_count_exact_for_cubic(self):
        """Test Simpson exactness for a cubic on an odd sample count."""
        x = np.linspace(0.0, 2.0, 11)
        assert integrate_samples(x, x**3 - x) == pytest.approx(2.0, abs=1e-13)

    def test_integrate_samples_even_count_exact_for_cubic(self):
        """Test that the 3/8 closure keeps an even count exact for cubics."""
        for count in (4, 6, 12):
            x = np.linspace(0.0, 2.0, count)
            assert integrate_samples(x, x**3 - x) == pytest.approx(2.0, abs=1e-13)

    def test_integrate_samples_gaussian(self):
        """Test the half-line Gaussian integral √π/2."""
        x = np.linspace(0.0, 12.0, 2001)
        assert integrate_samples(x, np.exp(-x * x)) == pytest.approx(
            math.sqrt(math.pi) / 2, rel=1e-12
        )

    def test_integrate_samples_fourth_order(self):
        """Test that halving h cuts the error by about 16."""
        errors = []
        for count in (21, 41):
            x = np.linspace(0.0, math.pi, count)
            errors.append(abs(integrate_samples(x, np.sin(x)) - 2.0))
        assert errors[0] / errors[1] == pytest.approx(16.0, rel=0.05)

    def test_integrate_samples_rejects_short_or_mismatched(self):
        """Test the input checks."""
        with pytest.raises(DomainError):
            integrate_samples([0.0, 1.0], [1.0, 1.0])
        with pytest.raises(DomainError):
            integrate_samples([0.0, 1.0, 2.0], [1.0, 1.0])
