"""Closed-form levels and eigenfunctions of the parabolic and Morse wells."""

import logging
import math
from collections.abc import Callable
from dataclasses import dataclass
from functools import partial

import numpy as np

from radial import potential
from radial.config import Config
from radial.errors import NoBoundStateError, UnsupportedModelError
from radial.models import (
    CenteredHarmonic,
    HarmonicPlusLinear3D,
    Morse,
    PotentialModel,
    ShiftedHarmonic,
    TaylorSeries,
)
from radial.specfun import hermite_eval, integrate_samples, laguerre_eval, log_gamma

logger = logging.getLogger(__name__)

_SQRT_PI = math.sqrt(math.pi)


@dataclass(frozen=True)
class EigenPair:
    """Normalized bound state of an exactly solvable well.

    Attributes:
        n: Quantum number (node count on the full line).
        energy: Eigenvalue E_n.
        u: Vectorized sampler r -> u(r), normalized on [0, inf).
        u0: u(0).
        du0: u'(0).
        norm_constant: N_n normalizing u on the half-line.
        full_line_norm: N_n of the closed-form full-line normalization.
        m: Mass of the model.
        hbar: Reduced Planck constant used.
        r_outer: Outer classical turning point at ``energy``.
    """

    n: int
    energy: float
    u: Callable[[np.ndarray | float], np.ndarray | float]
    u0: float
    du0: float
    norm_constant: float
    full_line_norm: float
    m: float
    hbar: float
    r_outer: float


def _as_shifted(model: PotentialModel) -> ShiftedHarmonic:
    """Rewrite any parabolic well as a ShiftedHarmonic.

    Args:
        model: ShiftedHarmonic, CenteredHarmonic, HarmonicPlusLinear3D or a
            quadratic TaylorSeries.

    Returns:
        Equivalent ShiftedHarmonic.
    """
    match model:
        case ShiftedHarmonic():
            return model
        case CenteredHarmonic(m=m, omega=omega):
            return ShiftedHarmonic(m=m, omega=omega)
        case HarmonicPlusLinear3D() | TaylorSeries():
            return potential.parabolic_fit(model)
    raise UnsupportedModelError(f"{type(model).__name__} is not a parabolic well")


def shifted_harmonic_level(model: PotentialModel, hbar: float, n: int) -> float:
    """Return E_n = (n+½)ħω − V_m.

    Args:
        model: Parabolic well.
        hbar: Reduced Planck constant.
        n: Quantum number.

    Returns:
        Level energy.
    """
    if n < 0:
        raise NoBoundStateError(n, max_n=-1)
    well = _as_shifted(model)
    return (n + 0.5) * hbar * well.omega - well.V_m


def _half_line_norm(
    sampler: Callable[[np.ndarray], np.ndarray],
    r_end: float,
    points: int,
) -> float:
    """Normalization constant of ``sampler`` on [0, r_end].

    Args:
        sampler: Unnormalized radial function.
        r_end: Upper end of the quadrature grid.
        points: Number of quadrature samples.

    Returns:
        ``1 / sqrt(∫ sampler² dr)``.
    """
    grid = np.linspace(0.0, r_end, points)
    values = sampler(grid)
    return 1.0 / math.sqrt(integrate_samples(grid, values * values))


def _quadrature_end(
    model: PotentialModel, energy: float, hbar: float, pad: float
) -> float:
    """Outer end of the normalization grid, ``pad`` classical widths past r_outer.

    Args:
        model: Potential model.
        energy: Level energy.
        hbar: Reduced Planck constant.
        pad: Number of classical widths added.

    Returns:
        Upper radius of the grid.
    """
    inner, outer = potential.turning_points(model, energy, clamp=False)
    fit = potential.parabolic_fit(model)
    width = max(outer - inner, math.sqrt(hbar / (fit.m * fit.omega)))
    return outer + pad * width


def shifted_harmonic_eigenpair(
    model: PotentialModel, hbar: float, n: int, config: Config | None = None
) -> EigenPair:
    """Build ``u_n = N exp(−½β²(r−r_m)²) H_n(β(r−r_m))`` with β² = mω/ħ.

    Args:
        model: Parabolic well.
        hbar: Reduced Planck constant.
        n: Quantum number.
        config: Numerical defaults, ``Config()`` when omitted.

    Returns:
        EigenPair normalized on the half-line.
    """
    cfg = config or Config()
    well = _as_shifted(model)
    energy = shifted_harmonic_level(well, hbar, n)
    beta = math.sqrt(well.m * well.omega / hbar)

    def shape(r):
        """Unnormalized eigenfunction.

        Args:
            r: Radius or array of radii.

        Returns:
            Samples without the constant N.
        """
        x = beta * (np.asarray(r, dtype=float) - well.r_m)
        return np.exp(-0.5 * x * x) * hermite_eval(n, x)

    _, r_outer = potential.turning_points(well, energy)
    r_end = _quadrature_end(well, energy, hbar, cfg.width_pad)
    norm = _half_line_norm(shape, r_end, cfg.quadrature_points)
    full_norm = math.sqrt(beta / (_SQRT_PI * 2.0**n * math.factorial(n)))

    x0 = -beta * well.r_m
    envelope = math.exp(-0.5 * x0 * x0)
    u0 = norm * envelope * hermite_eval(n, x0)
    slope = -beta * x0 * hermite_eval(n, x0)
    if n > 0:
        slope += 2.0 * n * beta * hermite_eval(n - 1, x0)
    du0 = norm * envelope * slope

    def sampler(r):
        """Normalized eigenfunction.

        Args:
            r: Radius or array of radii.

        Returns:
            u(r) with the shape of r.
        """
        values = norm * shape(r)
        return float(values) if np.ndim(r) == 0 else values

    logger.debug(
        "harmonic n=%d E=%.12g N_half=%.12g N_full=%.12g", n, energy, norm, full_norm
    )
    return EigenPair(
        n=n,
        energy=energy,
        u=sampler,
        u0=float(u0),
        du0=float(du0),
        norm_constant=norm,
        full_line_norm=full_norm,
        m=well.m,
        hbar=hbar,
        r_outer=r_outer,
    )


def morse_parameters(model: Morse, hbar: float) -> tuple[float, int]:
    """Return ``d = √(2mV_m)/(aħ)`` and the largest bound n.

    Args:
        model: Morse well.
        hbar: Reduced Planck constant.

    Returns:
        ``(d, max_n)`` with ``max_n = -1`` when no level is bound.
    """
    d = math.sqrt(2.0 * model.m * model.V_m) / (model.a * hbar)
    return d, math.ceil(d - 0.5) - 1


def morse_level(model: Morse, hbar: float, n: int) -> float:
    """Return E_n = (n+½)ħω − (n+½)²ħ²ω²/(4V_m) − V_m.

    Args:
        model: Morse well.
        hbar: Reduced Planck constant.
        n: Quantum number, ``0 <= n < d − ½``.

    Returns:
        Level energy.
    """
    _, max_n = morse_parameters(model, hbar)
    if n < 0 or n > max_n:
        raise NoBoundStateError(n, max_n)
    omega = model.a * math.sqrt(2.0 * model.V_m / model.m)
    x = (n + 0.5) * hbar * omega
    return x - x * x / (4.0 * model.V_m) - model.V_m


def _morse_variable(r, d: float, a: float, r_m: float):
    """Morse variable z(r) = 2d exp(−a(r − r_m)).

    Args:
        r: Radius or array of radii.
        d: Well parameter √(2mV_m)/(aħ).
        a: Inverse range.
        r_m: Well position.

    Returns:
        z with the shape of r.
    """
    return 2.0 * d * np.exp(-a * (np.asarray(r, dtype=float) - r_m))


def _morse_log_envelope(z, b: float):
    """Logarithm of e^{−z/2} z^{b/2}.

    Args:
        z: Morse variable.
        b: Laguerre order 2d − 1 − 2n.

    Returns:
        Log of the envelope, −inf at z = 0.
    """
    with np.errstate(divide="ignore"):
        return -0.5 * z + 0.5 * b * np.log(z)


def _morse_origin(
    n: int, b: float, a: float, z0: float, envelope0: float
) -> tuple[float, float]:
    """Value and slope at r = 0 from the chain rule dz/dr = −az.

    Args:
        n: Quantum number.
        b: Laguerre order.
        a: Inverse range.
        z0: z(0).
        envelope0: Normalized envelope at z0.

    Returns:
        ``(u(0), u'(0))``.
    """
    lag0 = laguerre_eval(n, b, z0)
    inner = (0.5 * b - 0.5 * z0) * lag0
    if n > 0:
        inner -= z0 * laguerre_eval(n - 1, b + 1.0, z0)
    return envelope0 * lag0, -a * envelope0 * inner


def morse_eigenpair(
    model: Morse, hbar: float, n: int, config: Config | None = None
) -> EigenPair:
    """Build ``u_n = N e^{−z/2} z^{b/2} L_n^(b)(z)`` with ``z = 2d e^{−a(r−r_m)}``.

    Args:
        model: Morse well.
        hbar: Reduced Planck constant.
        n: Quantum number within the bound range.
        config: Numerical defaults, ``Config()`` when omitted.

    Returns:
        EigenPair normalized on the half-line.
    """
    cfg = config or Config()
    energy = morse_level(model, hbar, n)
    d, _ = morse_parameters(model, hbar)
    b = 2.0 * d - 1.0 - 2.0 * n
    a = model.a
    z_of = partial(_morse_variable, d=d, a=a, r_m=model.r_m)
    log_envelope = partial(_morse_log_envelope, b=b)

    r_end = _quadrature_end(model, energy, hbar, cfg.width_pad)
    grid = np.linspace(0.0, r_end, cfg.quadrature_points)
    shift = float(np.max(log_envelope(z_of(grid))))

    def shape(r):
        """Eigenfunction scaled by exp(-shift).

        Args:
            r: Radius or array of radii.

        Returns:
            Samples without the constant N.
        """
        z = z_of(r)
        return np.exp(log_envelope(z) - shift) * laguerre_eval(n, b, z)

    scaled = _half_line_norm(shape, r_end, cfg.quadrature_points)
    norm = scaled * math.exp(-shift)
    log_full = 0.5 * (math.log(a * b) + log_gamma(n + 1.0) - log_gamma(n + b + 1.0))

    z0 = float(z_of(0.0))
    envelope0 = scaled * math.exp(float(log_envelope(z0)) - shift)
    u0, du0 = _morse_origin(n, b, a, z0, envelope0)

    def sampler(r):
        """Normalized eigenfunction.

        Args:
            r: Radius or array of radii.

        Returns:
            u(r) with the shape of r.
        """
        values = scaled * shape(r)
        return float(values) if np.ndim(r) == 0 else values

    _, r_outer = potential.turning_points(model, energy)
    logger.debug("morse n=%d E=%.12g b=%.6g N_half=%.12g", n, energy, b, norm)
    return EigenPair(
        n=n,
        energy=energy,
        u=sampler,
        u0=float(u0),
        du0=float(du0),
        norm_constant=norm,
        full_line_norm=math.exp(log_full),
        m=model.m,
        hbar=hbar,
        r_outer=r_outer,
    )


def level(model: PotentialModel, hbar: float, n: int) -> float:
    """Closed-form level of any exactly solvable well.

    Args:
        model: Morse or parabolic well.
        hbar: Reduced Planck constant.
        n: Quantum number.

    Returns:
        Level energy.
    """
    if isinstance(model, Morse):
        return morse_level(model, hbar, n)
    return shifted_harmonic_level(model, hbar, n)


def eigenpair(
    model: PotentialModel, hbar: float, n: int, config: Config | None = None
) -> EigenPair:
    """Closed-form eigenpair of any exactly solvable well.

    Args:
        model: Morse or parabolic well.
        hbar: Reduced Planck constant.
        n: Quantum number.
        config: Numerical defaults.

    Returns:
        Normalized EigenPair.
    """
    if isinstance(model, Morse):
        return morse_eigenpair(model, hbar, n, config)
    return shifted_harmonic_eigenpair(model, hbar, n, config)


def origin_report(pair: EigenPair) -> tuple[float, float, float]:
    """Origin data and the δ strength ħ²√π/m · u(0) of the s-wave residual.

    Args:
        pair: Analytic eigenpair.

    Returns:
        ``(u0, du0, delta_strength)``.
    """
    return pair.u0, pair.du0, pair.hbar**2 * _SQRT_PI / pair.m * pair.u0


def sample_eigenpair(
    model: PotentialModel,
    pair: EigenPair,
    step: float | None = None,
    config: Config | None = None,
) -> tuple[np.ndarray, np.ndarray]:
    """Sample an eigenpair from the origin to the end of its quadrature grid.

    Args:
        model: Potential the pair belongs to.
        pair: Analytic eigenpair.
        step: Sample spacing; 1000 intervals when omitted.
        config: Numerical defaults.

    Returns:
        ``(r, u)`` arrays.
    """
    cfg = config or Config()
    r_end = _quadrature_end(model, pair.energy, pair.hbar, cfg.width_pad)
    if step is None:
        step = r_end / 1000.0
    count = max(math.ceil(r_end / step), 1) + 1
    r = step * np.arange(count)
    return r, pair.u(r)
