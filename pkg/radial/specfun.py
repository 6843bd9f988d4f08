"""Orthogonal polynomials, log-gamma and uniform-grid quadrature."""

import math

import numpy as np
from numpy.typing import ArrayLike

from radial.errors import DomainError

# Lanczos approximation, g = 7, nine terms.
_LANCZOS_G = 7.0
_LANCZOS_COEFFS = (
    0.99999999999980993,
    676.5203681218851,
    -1259.1392167224028,
    771.32342877765313,
    -176.61502916214059,
    12.507343278686905,
    -0.13857109526572012,
    9.9843695780195716e-6,
    1.5056327351493116e-7,
)
_HALF_LOG_TWO_PI = 0.5 * math.log(2.0 * math.pi)


def _scalar_or_array(value: np.ndarray, like: ArrayLike):
    """Return a Python float when the input was a scalar.

    Args:
        value: Computed array.
        like: Original argument.

    Returns:
        ``float`` for scalar input, otherwise the array unchanged.
    """
    if np.ndim(like) == 0:
        return float(value)
    return value


def hermite_eval(n: int, x: ArrayLike):
    """Evaluate the physicists' Hermite polynomial H_n.

    Uses the upward recurrence ``H_{k+1} = 2x H_k − 2k H_{k−1}``.

    Args:
        n: Degree, nonnegative.
        x: Abscissa or array of abscissae.

    Returns:
        H_n(x) with the shape of ``x``.
    """
    if n < 0:
        raise DomainError(f"Hermite degree must be >= 0, got {n}")
    xs = np.asarray(x, dtype=float)
    previous = np.ones_like(xs)
    if n == 0:
        return _scalar_or_array(previous, x)
    current = 2.0 * xs
    for k in range(1, n):
        previous, current = current, 2.0 * xs * current - 2.0 * k * previous
    return _scalar_or_array(current, x)


def _bisect_sign_change(n: int, lo: float, hi: float) -> float:
    """Locate the single zero of H_n inside ``[lo, hi]``.

    Args:
        n: Hermite degree.
        lo: Left bracket end.
        hi: Right bracket end.

    Returns:
        The zero to full double precision.
    """
    f_lo = hermite_eval(n, lo)
    for _ in range(200):
        mid = 0.5 * (lo + hi)
        if mid in (lo, hi):
            break
        f_mid = hermite_eval(n, mid)
        if f_mid == 0.0:
            return mid
        if (f_mid > 0) == (f_lo > 0):
            lo, f_lo = mid, f_mid
        else:
            hi = mid
    return 0.5 * (lo + hi)


def hermite_zeros(n: int) -> list[float]:
    """Return the n real zeros of H_n in ascending order.

    Zeros of H_{k−1} interlace those of H_k, so each degree is bracketed by
    the previous one; the outermost brackets use the bound ``√(2n+1)``.

    Args:
        n: Degree, at least 1.

    Returns:
        Ascending list of zeros, symmetric about 0.
    """
    if n < 1:
        raise DomainError(f"Hermite zeros need degree >= 1, got {n}")
    zeros: list[float] = [0.0]
    for degree in range(2, n + 1):
        bound = math.sqrt(2.0 * degree + 1.0) + 1.0
        edges = [-bound, *zeros, bound]
        zeros = [
            _bisect_sign_change(degree, lo, hi) for lo, hi in zip(edges, edges[1:])
        ]
    half = [0.5 * (zeros[n - 1 - i] - zeros[i]) for i in reversed(range(n // 2))]
    middle = [0.0] if n % 2 else []
    return [-z for z in reversed(half)] + middle + half


def laguerre_eval(n: int, b: float, z: ArrayLike):
    """Evaluate the generalized Laguerre polynomial of degree n, parameter b.

    Uses ``(k+1)L_{k+1} = (2k+1+b−z)L_k − (k+b)L_{k−1}``.

    Args:
        n: Degree, nonnegative.
        b: Parameter.
        z: Abscissa or array of abscissae.

    Returns:
        L_n^(b)(z) with the shape of ``z``.
    """
    if n < 0:
        raise DomainError(f"Laguerre degree must be >= 0, got {n}")
    zs = np.asarray(z, dtype=float)
    previous = np.ones_like(zs)
    if n == 0:
        return _scalar_or_array(previous, z)
    current = 1.0 + b - zs
    for k in range(1, n):
        previous, current = (
            current,
            ((2 * k + 1 + b - zs) * current - (k + b) * previous) / (k + 1),
        )
    return _scalar_or_array(current, z)


def log_gamma(x: float) -> float:
    """Natural logarithm of Γ(x) for x > 0.

    Args:
        x: Positive argument.

    Returns:
        ln Γ(x).
    """
    if not x > 0:
        raise DomainError(f"log_gamma is defined for x > 0, got {x}")
    if x < 0.5:
        return math.log(math.pi / math.sin(math.pi * x)) - log_gamma(1.0 - x)
    z = x - 1.0
    series = _LANCZOS_COEFFS[0]
    for i, coeff in enumerate(_LANCZOS_COEFFS[1:], start=1):
        series += coeff / (z + i)
    t = z + _LANCZOS_G + 0.5
    return _HALF_LOG_TWO_PI + (z + 0.5) * math.log(t) - t + math.log(series)


def integrate_samples(grid: ArrayLike, values: ArrayLike) -> float:
    """Integrate samples on a uniform grid with composite Simpson's rule.

    An even sample count closes the last three intervals with Simpson's 3/8
    rule, so cubics stay exact whatever the parity.

    Args:
        grid: Uniformly spaced abscissae.
        values: Samples of the integrand on ``grid``.

    Returns:
        Estimate of the integral over the grid span.
    """
    xs = np.asarray(grid, dtype=float)
    ys = np.asarray(values, dtype=float)
    if xs.shape != ys.shape or xs.ndim != 1:
        raise DomainError("grid and values must be 1-D arrays of equal length")
    if xs.size < 3:
        raise DomainError(f"need at least 3 samples, got {xs.size}")
    h = (xs[-1] - xs[0]) / (xs.size - 1)
    if xs.size % 2 == 1:
        return float(_simpson(ys, h))
    if xs.size == 4:
        return float(_three_eighths(ys, h))
    return float(_simpson(ys[:-3], h) + _three_eighths(ys[-4:], h))


def _simpson(ys: np.ndarray, h: float) -> float:
    """Composite Simpson's rule over an odd number of samples.

    Args:
        ys: Samples, odd count.
        h: Grid spacing.

    Returns:
        Integral estimate.
    """
    return h / 3.0 * (ys[0] + ys[-1] + 4.0 * ys[1:-1:2].sum() + 2.0 * ys[2:-1:2].sum())


def _three_eighths(ys: np.ndarray, h: float) -> float:
    """Simpson's 3/8 rule over exactly four samples.

    Args:
        ys: Four samples.
        h: Grid spacing.

    Returns:
        Integral estimate.
    """
    return 3.0 * h / 8.0 * (ys[0] + 3.0 * ys[1] + 3.0 * ys[2] + ys[3])
