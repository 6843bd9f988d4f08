"""Frobenius series at the origin and the δ-expansion separating H from H_d."""

import logging
import math

import numpy as np
from numpy.typing import ArrayLike

from radial import potential
from radial.analytic import EigenPair
from radial.errors import DomainError, LogResonanceError, SingularityError
from radial.models import (
    DeltaExpansion,
    DeltaTerm,
    PotentialModel,
    SeriesSolution,
    ShootingResult,
    TaylorSeries,
)
from radial.specfun import log_gamma

logger = logging.getLogger(__name__)

RESONANCE_RTOL = 1e-12
TAIL_RTOL = 1e-12
_Y00 = 1.0 / math.sqrt(4.0 * math.pi)
_FD_STEP = 1e-3
_RESIDUAL_POINTS = 500


def indicial_roots(ell: int) -> tuple[int, int]:
    """Return the exponents ``(ℓ+1, −ℓ)`` of the series ``r^λ Σ a_k r^k``.

    Args:
        ell: Angular momentum quantum number.

    Returns:
        Regular root first, singular root second.
    """
    if ell < 0:
        raise DomainError(f"ell must be >= 0, got {ell}")
    return ell + 1, -ell


def _weights(taylor: TaylorSeries, m: float, hbar: float, energy: float) -> list[float]:
    """Taylor coefficients w_j of (2m/ħ²)(V(r) − E).

    Args:
        taylor: Series of V about the origin.
        m: Mass.
        hbar: Reduced Planck constant.
        energy: Energy E.

    Returns:
        Coefficients w_0..w_J.
    """
    scale = 2.0 * m / hbar**2
    w = [scale * v for v in taylor.coefficients]
    w[0] -= scale * energy
    return w


def _recursion_sum(w: list[float], a: list[float], k: int) -> tuple[float, float]:
    """Evaluate Σ_j w_j a_{k−2−j} and the largest term magnitude.

    Args:
        w: Potential weights.
        a: Coefficients known so far.
        k: Index being solved.

    Returns:
        ``(sum, scale)``.
    """
    total, scale = 0.0, 0.0
    for j in range(min(len(w), k - 1)):
        term = w[j] * a[k - 2 - j]
        total += term
        scale = max(scale, abs(term))
    return total, scale


def series_coefficients(
    taylor: TaylorSeries,
    m: float,
    hbar: float,
    ell: int,
    lam: int,
    energy: float,
    a0: float = 1.0,
    order: int = 24,
) -> SeriesSolution:
    """Solve the Frobenius recursion for a_1..a_K.

    On the λ = −ℓ branch the bracket vanishes at k = 2ℓ+1. For ℓ = 0 the free
    coefficient a_1 is set to 0. For ℓ > 0 the right side must vanish there,
    otherwise only a logarithmic solution exists.

    Args:
        taylor: Series of V about the origin.
        m: Mass.
        hbar: Reduced Planck constant.
        ell: Angular momentum quantum number.
        lam: Indicial root, ``ℓ+1`` or ``−ℓ``.
        energy: Energy E.
        a0: Leading coefficient, nonzero.
        order: Truncation order K.

    Returns:
        SeriesSolution with coefficients a_0..a_K.
    """
    if lam not in indicial_roots(ell):
        raise DomainError(f"lambda={lam} is not an indicial root for ell={ell}")
    if order < 0:
        raise DomainError(f"order must be >= 0, got {order}")
    w = _weights(taylor, m, hbar, energy)
    a = [a0]
    centrifugal = ell * (ell + 1)
    for k in range(1, order + 1):
        rhs, scale = _recursion_sum(w, a, k)
        bracket = (k + lam) * (k + lam - 1) - centrifugal
        if bracket != 0:
            a.append(rhs / bracket)
            continue
        if ell > 0 and abs(rhs) > RESONANCE_RTOL * max(scale, abs(a0)):
            raise LogResonanceError(ell, k, rhs)
        a.append(0.0)
    return SeriesSolution(ell=ell, lam=lam, energy=energy, coefficients=a)


def recursion_residuals(
    sol: SeriesSolution, taylor: TaylorSeries, m: float, hbar: float
) -> list[float]:
    """Residual of the recursion at every index 1..K.

    Args:
        sol: Series solution to check.
        taylor: Series of V used to build it.
        m: Mass.
        hbar: Reduced Planck constant.

    Returns:
        ``[(k+λ)(k+λ−1) − ℓ(ℓ+1)] a_k − Σ_j w_j a_{k−2−j}`` for k = 1..K.
    """
    w = _weights(taylor, m, hbar, sol.energy)
    a = sol.coefficients
    centrifugal = sol.ell * (sol.ell + 1)
    residuals = []
    for k in range(1, len(a)):
        rhs, _ = _recursion_sum(w, a, k)
        bracket = (k + sol.lam) * (k + sol.lam - 1) - centrifugal
        residuals.append(bracket * a[k] - rhs)
    return residuals


def evaluate_series(sol: SeriesSolution, r: ArrayLike):
    """Evaluate the partial sum ``r^λ Σ_{k≤K} a_k r^k``.

    Logs a warning when the last kept term exceeds ``1e-12·|a_0|``.

    Args:
        sol: Series solution.
        r: Radius or array of radii.

    Returns:
        Partial sum with the shape of ``r``.
    """
    rs = np.asarray(r, dtype=float)
    if sol.lam < 0 and np.any(rs <= 0):
        raise SingularityError(f"r^{sol.lam} is singular at r <= 0")
    total = np.zeros_like(rs)
    for coeff in reversed(sol.coefficients):
        total = total * rs + coeff
    r_far = float(np.max(np.abs(rs))) if rs.size else 0.0
    tail = abs(sol.coefficients[-1]) * r_far**sol.order
    if sol.order > 0 and tail > TAIL_RTOL * abs(sol.coefficients[0]):
        logger.warning(
            "series tail |a_%d| r^%d = %.3g exceeds %.0e |a_0| at r=%.6g",
            sol.order, sol.order, tail, TAIL_RTOL, r_far,
        )
    values = total * rs**sol.lam
    if np.ndim(r) == 0:
        return float(values)
    return values


def b_factor(ell: int, p: int) -> float:
    """Return ``B_{ℓ,p} = (1−2ℓ)/(4p+1)``.

    Args:
        ell: Angular momentum quantum number.
        p: Power of the Laplacian.

    Returns:
        The angular factor.
    """
    return (1.0 - 2.0 * ell) / (4.0 * p + 1.0)


def c_factor(p: int) -> float:
    """Return ``C_p = −(4p+1)π^{3/2} / (2^{2p−1} p! Γ(p+3/2))``.

    Args:
        p: Power of the Laplacian, nonnegative.

    Returns:
        The radial factor; ``C_0 = −4π``.
    """
    if p < 0:
        raise DomainError(f"p must be >= 0, got {p}")
    log_mag = (
        math.log(4.0 * p + 1.0)
        + 1.5 * math.log(math.pi)
        - (2 * p - 1) * math.log(2.0)
        - log_gamma(p + 1.0)
        - log_gamma(p + 1.5)
    )
    return -math.exp(log_mag)


def q_delta(sol: SeriesSolution) -> DeltaExpansion:
    """Collect the terms a_k B_{ℓ,p} C_p whose p = −(k+λ−ℓ)/2 is in ℕ.

    Args:
        sol: Series solution.

    Returns:
        DeltaExpansion with terms ascending in p; empty when λ = ℓ+1.
    """
    terms = []
    for k in range(max(0, -sol.lam) + 1):
        twice_p = -(k + sol.lam - sol.ell)
        if twice_p < 0 or twice_p % 2:
            continue
        p = twice_p // 2
        a_k = sol.coefficients[k] if k < len(sol.coefficients) else 0.0
        coeff = a_k * b_factor(sol.ell, p) * c_factor(p)
        if coeff != 0.0:
            terms.append(DeltaTerm(p=p, coeff=coeff))
    terms.sort(key=lambda term: term.p)
    return DeltaExpansion(ell=sol.ell, lam=sol.lam, terms=terms)


def is_H_eigenfunction(sol: SeriesSolution) -> bool:
    """True when the pseudofunction of ``sol`` carries no δ-correction.

    Args:
        sol: Series solution.

    Returns:
        Whether ``q_delta(sol)`` is empty.
    """
    return not q_delta(sol).terms


def h_action_residual(sol: SeriesSolution, hbar: float, m: float) -> DeltaExpansion:
    """Distributional residual ``−(ħ²/2m) Q`` of the H eigen-equation.

    Args:
        sol: Series solution.
        hbar: Reduced Planck constant.
        m: Mass.

    Returns:
        Scaled DeltaExpansion.
    """
    q = q_delta(sol)
    scale = -(hbar**2) / (2.0 * m)
    terms = [DeltaTerm(p=term.p, coeff=scale * term.coeff) for term in q.terms]
    return DeltaExpansion(ell=q.ell, lam=q.lam, terms=terms)


def s_wave_coefficient(expansion: DeltaExpansion) -> float:
    """Collapse an ℓ = 0 expansion to the coefficient of δ using Y_0^0 = 1/√(4π).

    Args:
        expansion: DeltaExpansion with ``ell == 0``.

    Returns:
        Coefficient of δ; 0 for an empty expansion.
    """
    if expansion.ell != 0:
        raise DomainError(f"s-wave collapse needs ell=0, got {expansion.ell}")
    return sum(term.coeff for term in expansion.terms if term.p == 0) * _Y00


def render_expansion(expansion: DeltaExpansion) -> str:
    """Canonical text form, e.g. ``Q = (-12.5663706144) * r^0 Y00 * delta``.

    Args:
        expansion: DeltaExpansion to render.

    Returns:
        One-line rendering; ``Q = 0`` when empty.
    """
    if not expansion.terms:
        return "Q = 0"
    ell = expansion.ell
    harmonic = "Y00" if ell == 0 else f"Y{ell}mu"
    parts = []
    for term in expansion.terms:
        laplacian = "delta" if term.p == 0 else f"Delta^{term.p} delta"
        parts.append(f"({term.coeff:.12g}) * r^{ell} {harmonic} * {laplacian}")
    return "Q = " + " + ".join(parts)


def _second_derivative(u, r: np.ndarray, step: float) -> np.ndarray:
    """Five-point central second derivative of a callable.

    Args:
        u: Vectorized function.
        r: Evaluation radii.
        step: Finite-difference step.

    Returns:
        u''(r).
    """
    stencil = (
        -u(r + 2 * step) + 16 * u(r + step) - 30 * u(r) + 16 * u(r - step) - u(r - 2 * step)
    )
    return stencil / (12.0 * step * step)


def _pair_samples(
    pair: EigenPair, model: PotentialModel
) -> tuple[np.ndarray, np.ndarray, np.ndarray]:
    """Radii, values and second derivatives of an analytic eigenpair.

    Args:
        pair: Analytic eigenpair.
        model: Potential the pair belongs to.

    Returns:
        ``(r, u, u'')`` on the residual grid.
    """
    inner, outer = potential.turning_points(model, pair.energy)
    r_end = outer + 2.0 * max(outer - inner, _FD_STEP)
    r = np.linspace(4.0 * _FD_STEP, r_end, _RESIDUAL_POINTS)
    return r, pair.u(r), _second_derivative(pair.u, r, _FD_STEP)


def _shooting_samples(result: ShootingResult) -> tuple[np.ndarray, np.ndarray, np.ndarray]:
    """Radii, values and second derivatives of a Numerov solution.

    Args:
        result: Solver output.

    Returns:
        ``(r, u, u'')`` at up to 500 interior grid points with r > 0.
    """
    r_all = result.grid.points()
    u_all = result.u
    h = result.grid.h
    interior = np.arange(2, r_all.size - 2)
    interior = interior[r_all[interior] > 2.0 * h]
    stride = max(1, interior.size // _RESIDUAL_POINTS)
    idx = interior[::stride]
    stencil = (
        -u_all[idx + 2] + 16 * u_all[idx + 1] - 30 * u_all[idx]
        + 16 * u_all[idx - 1] - u_all[idx - 2]
    )
    return r_all[idx], u_all[idx], stencil / (12.0 * h * h)


def hd_residual_numeric(
    pair: EigenPair | ShootingResult,
    model: PotentialModel,
    ell: int,
    hbar: float,
    energy: float | None = None,
) -> float:
    """Largest normalized residual of the radial equation on r > 0.

    Measures ``|−(ħ²/2m)u'' + (V_eff − E)u| / max|u|`` on a 500-point grid.

    Args:
        pair: Analytic eigenpair or Numerov result.
        model: Potential the state belongs to.
        ell: Angular momentum quantum number.
        hbar: Reduced Planck constant.
        energy: Energy to test; the state's own energy when omitted.

    Returns:
        Maximum normalized residual.
    """
    e = pair.energy if energy is None else energy
    if isinstance(pair, EigenPair):
        r, u, u2 = _pair_samples(pair, model)
    else:
        r, u, u2 = _shooting_samples(pair)
    v_eff = potential.effective_potential(model, ell, hbar, r)
    residual = -(hbar**2) / (2.0 * model.m) * u2 + (v_eff - e) * u
    return float(np.max(np.abs(residual)) / np.max(np.abs(u)))
