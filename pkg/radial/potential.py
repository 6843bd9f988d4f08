"""Central potentials: evaluation, centrifugal term, fits and expansions."""

import math
from collections.abc import Callable

import numpy as np
from numpy.typing import ArrayLike

from radial.errors import (
    NoClassicalRegionError,
    SingularityError,
    UnsupportedModelError,
)
from radial.models import (
    CenteredHarmonic,
    HarmonicPlusLinear3D,
    Morse,
    PotentialModel,
    ShiftedHarmonic,
    TaylorSeries,
)

_MAX_DOUBLINGS = 200
_BISECTION_STEPS = 200


def evaluate(model: PotentialModel, r: ArrayLike):
    """Evaluate V(r).

    Negative radii are accepted; the closed forms extend analytically and
    full-line grids use them.

    Args:
        model: Potential model.
        r: Radius or array of radii.

    Returns:
        V(r) with the shape of ``r``.
    """
    rs = np.asarray(r, dtype=float)
    match model:
        case ShiftedHarmonic(m=m, omega=omega, r_m=r_m, V_m=v_m):
            values = 0.5 * m * omega**2 * (rs - r_m) ** 2 - v_m
        case Morse(V_m=v_m, a=a, r_m=r_m):
            decay = np.exp(-a * (rs - r_m))
            values = v_m * (decay * decay - 2.0 * decay)
        case CenteredHarmonic(m=m, omega=omega):
            values = 0.5 * m * omega**2 * rs**2
        case HarmonicPlusLinear3D(m=m, omega=omega, C=c):
            values = 0.5 * m * omega**2 * rs**2 - c * rs
        case TaylorSeries(coefficients=coefficients):
            values = np.zeros_like(rs)
            for coeff in reversed(coefficients):
                values = values * rs + coeff
        case _:
            raise UnsupportedModelError(f"unknown potential {model!r}")
    if np.ndim(r) == 0:
        return float(values)
    return values


def effective_potential(model: PotentialModel, ell: int, hbar: float, r: ArrayLike):
    """Evaluate V(r) + ℓ(ℓ+1)ħ²/(2mr²).

    Args:
        model: Potential model.
        ell: Angular momentum quantum number.
        hbar: Reduced Planck constant.
        r: Radius or array of radii.

    Returns:
        Effective radial potential with the shape of ``r``.
    """
    if ell == 0:
        return evaluate(model, r)
    rs = np.asarray(r, dtype=float)
    if np.any(rs <= 0):
        raise SingularityError(f"centrifugal term is singular at r <= 0 for ell={ell}")
    barrier = ell * (ell + 1) * hbar**2 / (2.0 * model.m * rs**2)
    values = evaluate(model, rs) + barrier
    if np.ndim(r) == 0:
        return float(values)
    return values


def parabolic_fit(model: PotentialModel) -> ShiftedHarmonic | CenteredHarmonic:
    """Replace a well by the parabola osculating it at the minimum.

    Args:
        model: Potential with a located minimum.

    Returns:
        ShiftedHarmonic with the curvature of ``model`` at its minimum;
        a CenteredHarmonic is returned unchanged.
    """
    match model:
        case ShiftedHarmonic() | CenteredHarmonic():
            return model
        case Morse(m=m, V_m=v_m, a=a, r_m=r_m):
            omega = a * math.sqrt(2.0 * v_m / m)
            return ShiftedHarmonic(m=m, omega=omega, r_m=r_m, V_m=v_m)
        case HarmonicPlusLinear3D(m=m, omega=omega, C=c):
            return ShiftedHarmonic(
                m=m,
                omega=omega,
                r_m=c / (m * omega**2),
                V_m=c**2 / (2.0 * m * omega**2),
            )
        case TaylorSeries():
            return _quadratic_minimum(model)
    raise UnsupportedModelError(f"no parabolic fit for {model!r}")


def _quadratic_minimum(model: TaylorSeries) -> ShiftedHarmonic:
    """Fit a series of degree at most two with positive curvature.

    Args:
        model: Series potential.

    Returns:
        The same parabola written as a ShiftedHarmonic.
    """
    v = [*model.coefficients, 0.0, 0.0]
    if any(c != 0.0 for c in model.coefficients[3:]) or v[2] <= 0:
        raise UnsupportedModelError(
            "series potential has no located minimum (needs degree <= 2, v_2 > 0)"
        )
    r_m = -v[1] / (2.0 * v[2])
    v_min = v[0] - v[1] ** 2 / (4.0 * v[2])
    if r_m < 0 or v_min > 0:
        raise UnsupportedModelError(
            f"series minimum at r={r_m:.6g}, V={v_min:.6g} is not a well"
        )
    return ShiftedHarmonic(
        m=model.m, omega=math.sqrt(2.0 * v[2] / model.m), r_m=r_m, V_m=-v_min
    )


def taylor_at_origin(model: PotentialModel, order: int) -> TaylorSeries:
    """Expand V(r) = Σ v_j r^j about the origin.

    Args:
        model: Potential model, analytic at r = 0.
        order: Highest power kept.

    Returns:
        TaylorSeries with ``order + 1`` coefficients.
    """
    if order < 0:
        raise UnsupportedModelError(f"Taylor order must be >= 0, got {order}")
    match model:
        case ShiftedHarmonic(m=m, omega=omega, r_m=r_m, V_m=v_m):
            k = m * omega**2
            coeffs = [0.5 * k * r_m**2 - v_m, -k * r_m, 0.5 * k]
        case CenteredHarmonic(m=m, omega=omega):
            coeffs = [0.0, 0.0, 0.5 * m * omega**2]
        case HarmonicPlusLinear3D(m=m, omega=omega, C=c):
            coeffs = [0.0, -c, 0.5 * m * omega**2]
        case Morse():
            coeffs = _morse_series(model, order)
        case TaylorSeries(coefficients=coefficients):
            coeffs = list(coefficients)
        case _:
            raise UnsupportedModelError(f"unknown potential {model!r}")
    padded = (coeffs + [0.0] * (order + 1))[: order + 1]
    return TaylorSeries(m=model.m, coefficients=padded)


def _morse_series(model: Morse, order: int) -> list[float]:
    """Power series of the Morse potential from the exponential series.

    Args:
        model: Morse potential.
        order: Highest power kept.

    Returns:
        Coefficients v_0..v_order.
    """
    a, r_m, v_m = model.a, model.r_m, model.V_m
    outer = math.exp(2.0 * a * r_m)
    inner = -2.0 * math.exp(a * r_m)
    coeffs = []
    for j in range(order + 1):
        coeffs.append(v_m * (outer + inner))
        outer *= -2.0 * a / (j + 1)
        inner *= -a / (j + 1)
    return coeffs


def well_minimum(model: PotentialModel) -> tuple[float, float]:
    """Locate the bottom of the well.

    Args:
        model: Potential model.

    Returns:
        ``(r_min, V(r_min))``.
    """
    match model:
        case CenteredHarmonic():
            return 0.0, 0.0
        case ShiftedHarmonic(r_m=r_m, V_m=v_m) | Morse(r_m=r_m, V_m=v_m):
            return r_m, -v_m
    fit = parabolic_fit(model)
    return fit.r_m, -fit.V_m


def bracket_roots(
    func: Callable[[float], float],
    r_min: float,
    level: float,
    clamp: bool = True,
    floor: float | None = None,
) -> tuple[float, float]:
    """Find where ``func`` crosses ``level`` on either side of its minimum.

    Brackets grow geometrically from ``r_min`` until ``func`` rises above
    ``level``, then bisection refines each root.

    Args:
        func: Scalar function with a single well at ``r_min``.
        r_min: Location of the minimum.
        level: Value to cross.
        clamp: When True the inner root is clamped to 0 if it is negative.
        floor: Smallest admissible radius for the inner search, e.g. a
            singular point; ``None`` allows any radius.

    Returns:
        ``(inner, outer)`` roots.
    """
    if level < func(r_min):
        raise NoClassicalRegionError(
            f"energy {level:.6g} is below the well minimum {func(r_min):.6g}"
        )
    if level == func(r_min):
        return r_min, r_min
    outer = _grow_and_bisect(func, r_min, level, +1.0, None)
    if clamp and r_min <= 0.0:
        return 0.0, outer
    if clamp and func(0.0) <= level:
        return 0.0, outer
    inner_floor = 0.0 if clamp else floor
    return _grow_and_bisect(func, r_min, level, -1.0, inner_floor), outer


def _grow_and_bisect(
    func: Callable[[float], float],
    start: float,
    level: float,
    direction: float,
    floor: float | None,
) -> float:
    """Step away from ``start`` until ``func`` exceeds ``level``, then bisect.

    Args:
        func: Scalar function.
        start: Point where ``func <= level``.
        level: Value to cross.
        direction: +1 to search outward, -1 inward.
        floor: Inward search never steps below this radius.

    Returns:
        The crossing point.
    """
    near, step = start, 1.0
    far = start + direction * step
    for _ in range(_MAX_DOUBLINGS):
        if floor is not None and far <= floor:
            far = 0.5 * (near + floor) if floor != near else floor
        if func(far) > level:
            break
        near, step = far, 2.0 * step
        far = start + direction * step
    else:
        raise NoClassicalRegionError(
            f"no turning point found for energy {level:.6g}"
        )
    for _ in range(_BISECTION_STEPS):
        mid = 0.5 * (near + far)
        if mid in (near, far):
            break
        if func(mid) > level:
            far = mid
        else:
            near = mid
    return 0.5 * (near + far)


def turning_points(
    model: PotentialModel, energy: float, clamp: bool = True
) -> tuple[float, float]:
    """Classical turning points of V(r) = E around the well.

    Args:
        model: Potential model.
        energy: Energy above the well minimum.
        clamp: When True a negative inner root is reported as 0.

    Returns:
        ``(r_inner, r_outer)``.
    """
    r_min, _ = well_minimum(model)
    return bracket_roots(lambda r: evaluate(model, r), r_min, energy, clamp=clamp)
