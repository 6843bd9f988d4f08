"""Spectrum comparisons, level classification and the Hermite-zero construction."""

import logging
import math
from typing import NamedTuple

import numpy as np

from radial import analytic, numerov
from radial.config import Config
from radial.errors import DomainError, NoBoundStateError, RadialError
from radial.models import (
    BoundaryCondition,
    Classification,
    ClassificationRow,
    HarmonicPlusLinear3D,
    Morse,
    PotentialModel,
    ScenarioRow,
    ShiftedHarmonic,
    SourceConfig,
    SpectrumReport,
    SpectrumRow,
    SweepRow,
    TuningScenario,
    VibrationalSeries,
)
from radial.potential import parabolic_fit
from radial.specfun import hermite_zeros

logger = logging.getLogger(__name__)

_PEAK_POINTS = 4001


class LevelSample(NamedTuple):
    """One level of a source with its origin data, when known."""

    n: int
    energy: float
    u0: float | None
    u_max: float | None


def classify(u0: float, u_max: float, tol: float) -> Classification:
    """H-and-Hd when ``|u0| < tol · u_max``, Hd-only otherwise.

    Args:
        u0: Value at the origin.
        u_max: Peak of |u| on the half-line.
        tol: Relative tolerance.

    Returns:
        The classification.
    """
    if abs(u0) < tol * u_max:
        return Classification.h_and_hd
    return Classification.hd_only


def peak_amplitude(pair: analytic.EigenPair) -> float:
    """Peak of |u| on [0, r_outer], where the classical lobes live.

    Args:
        pair: Analytic eigenpair.

    Returns:
        max |u|.
    """
    r = np.linspace(0.0, pair.r_outer, _PEAK_POINTS)
    return float(np.max(np.abs(pair.u(r))))


def describe(source: SourceConfig) -> str:
    """Short label of a level source for report metadata.

    Args:
        source: Level source.

    Returns:
        Label such as ``morse analytic`` or ``shifted-harmonic numerov neumann``.
    """
    kind = source.potential.kind
    if isinstance(source.potential, VibrationalSeries):
        return kind
    if source.method == "numerov":
        return f"{kind} numerov {source.bc.value}"
    return f"{kind} analytic"


def criterion(source: SourceConfig) -> str:
    """Discreteness criterion behind the levels of ``source``.

    Closed forms are full-line eigenfunctions; Numerov levels carry the
    origin condition they were solved with.

    Args:
        source: Level source.

    Returns:
        ``dirichlet``, ``neumann``, ``full-line`` or ``empirical``.
    """
    if isinstance(source.potential, VibrationalSeries):
        return "empirical"
    if source.method == "numerov":
        return source.bc.value
    return BoundaryCondition.full_line.value


def _one_level(source: SourceConfig, n: int, cfg: Config) -> LevelSample:
    """Compute level n of a source.

    Args:
        source: Level source.
        n: Quantum number.
        cfg: Numerical defaults.

    Returns:
        LevelSample for level n.
    """
    model = source.potential
    if isinstance(model, VibrationalSeries):
        if model.n_levels is not None and n >= model.n_levels:
            raise NoBoundStateError(n, model.n_levels - 1)
        return LevelSample(n, model.level(source.hbar, n), None, None)
    if source.method == "numerov":
        res = numerov.find_level(
            model, source.ell, source.hbar, source.bc, n, source.h, cfg
        )
        return LevelSample(n, res.energy, res.u0, float(np.max(np.abs(res.u))))
    pair = analytic.eigenpair(model, source.hbar, n, cfg)
    return LevelSample(n, pair.energy, pair.u0, peak_amplitude(pair))


def source_levels(
    source: SourceConfig, n_levels: int, config: Config | None = None
) -> tuple[list[LevelSample], bool]:
    """Levels 0..n_levels−1 of a source, stopping at the last bound one.

    Args:
        source: Level source.
        n_levels: Number of levels wanted.
        config: Numerical defaults.

    Returns:
        ``(levels, truncated)``.
    """
    cfg = config or Config()
    levels = []
    for n in range(n_levels):
        try:
            levels.append(_one_level(source, n, cfg))
        except NoBoundStateError as exc:
            logger.warning(
                "%s has %d bound levels, %d requested",
                describe(source), exc.max_n + 1, n_levels,
            )
            return levels, True
    return levels, False


def compare_spectra(
    reference: SourceConfig,
    approx: SourceConfig,
    n_levels: int,
    config: Config | None = None,
) -> SpectrumReport:
    """Compare levels 0..n_levels−1 of two sources.

    Args:
        reference: Designated reference spectrum.
        approx: Approximate spectrum.
        n_levels: Number of levels N.
        config: Numerical defaults.

    Returns:
        SpectrumReport, flagged truncated when either side runs out of levels.
    """
    cfg = config or Config()
    ref, ref_short = source_levels(reference, n_levels, cfg)
    app, app_short = source_levels(approx, n_levels, cfg)
    rows = []
    for r, a in zip(ref, app):
        label = None
        if a.u0 is not None:
            label = classify(a.u0, a.u_max, cfg.classify_tol)
        rows.append(
            SpectrumRow(
                n=r.n,
                E_ref=r.energy,
                E_approx=a.energy,
                abs_dev=abs(r.energy - a.energy),
                u0_approx=a.u0,
                classification=label,
            )
        )
    return SpectrumReport(
        rows=rows,
        truncated=ref_short or app_short,
        criterion=criterion(approx),
        reference=describe(reference),
        approx=describe(approx),
    )


def classify_levels(
    model: PotentialModel,
    hbar: float,
    n_levels: int,
    tol: float | None = None,
    config: Config | None = None,
) -> list[ClassificationRow]:
    """Classify analytic levels by their value at the origin.

    Args:
        model: ShiftedHarmonic, CenteredHarmonic, HarmonicPlusLinear3D or Morse.
        hbar: Reduced Planck constant.
        n_levels: Number of levels N; Morse stops at its last bound level.
        tol: Relative tolerance, ``classify_tol`` when omitted.
        config: Numerical defaults.

    Returns:
        One row per level.
    """
    cfg = config or Config()
    tol = cfg.classify_tol if tol is None else tol
    if isinstance(model, Morse):
        _, max_n = analytic.morse_parameters(model, hbar)
        if n_levels > max_n + 1:
            logger.warning("morse well binds %d levels, %d requested", max_n + 1, n_levels)
            n_levels = max_n + 1
    rows = []
    for n in range(n_levels):
        pair = analytic.eigenpair(model, hbar, n, cfg)
        peak = peak_amplitude(pair)
        rows.append(
            ClassificationRow(
                n=n,
                energy=pair.energy,
                u0=pair.u0,
                u_max=peak,
                classification=classify(pair.u0, peak, tol),
            )
        )
    return rows


def hermite_zero_tuning(
    m: float, omega: float, hbar: float, N: int, zero_index: int = 0
) -> float:
    """Force C placing βr_m of the harmonic-plus-linear well on a zero of H_N.

    Zeros are taken among the nonnegative ones, largest first, so index 0 is
    the outermost zero and the last index of an odd N is 0.

    Args:
        m: Mass.
        omega: Angular frequency.
        hbar: Reduced Planck constant.
        N: Hermite degree.
        zero_index: Which nonnegative zero, counted from the largest.

    Returns:
        C = mω² · zero / β with β = √(mω/ħ).
    """
    candidates = sorted((z for z in hermite_zeros(N) if z >= 0.0), reverse=True)
    if not 0 <= zero_index < len(candidates):
        raise DomainError(
            f"H_{N} has {len(candidates)} nonnegative zeros, index {zero_index} requested"
        )
    beta = math.sqrt(m * omega / hbar)
    return m * omega**2 * candidates[zero_index] / beta


def bc_sensitivity_sweep(
    m: float,
    omega: float,
    hbar: float,
    n: int,
    r_m_values: list[float],
    V_m: float = 0.0,
    config: Config | None = None,
) -> list[SweepRow]:
    """Dirichlet against full-line level n of shifted wells at several r_m.

    A failing row records its error and the sweep continues.

    Args:
        m: Mass.
        omega: Angular frequency.
        hbar: Reduced Planck constant.
        n: Level.
        r_m_values: Nonnegative, strictly ascending well positions.
        V_m: Well depth.
        config: Numerical defaults.

    Returns:
        One row per r_m.
    """
    if any(r < 0 for r in r_m_values):
        raise DomainError("r_m values must be >= 0")
    if any(b <= a for a, b in zip(r_m_values, r_m_values[1:])):
        raise DomainError("r_m values must be strictly ascending")
    cfg = config or Config()
    beta = math.sqrt(m * omega / hbar)
    rows = []
    for r_m in r_m_values:
        model = ShiftedHarmonic(m=m, omega=omega, r_m=r_m, V_m=V_m)
        try:
            e_d = numerov.find_level(
                model, 0, hbar, BoundaryCondition.dirichlet, n, config=cfg
            )
            e_f = numerov.find_level(
                model, 0, hbar, BoundaryCondition.full_line, n, config=cfg
            )
            u0 = analytic.shifted_harmonic_eigenpair(model, hbar, n, cfg).u0
        except RadialError as exc:
            logger.warning("sweep row r_m=%g failed: %s", r_m, exc)
            rows.append(SweepRow(r_m=r_m, beta_rm=beta * r_m, error=str(exc)))
            continue
        rows.append(
            SweepRow(
                r_m=r_m,
                beta_rm=beta * r_m,
                e_dirichlet=e_d.energy,
                e_full_line=e_f.energy,
                gap=abs(e_d.energy - e_f.energy),
                u0_abs=abs(u0),
            )
        )
    return rows


def tuning_scenario(
    reference: SourceConfig,
    N: int,
    zero_index: int = 0,
    config: Config | None = None,
) -> TuningScenario:
    """Compare a Hermite-zero tuned well against a reference spectrum.

    The tuned well shares the mass and curvature of the reference's parabolic
    fit; its levels 0..N are set against reference levels 0..N.

    Args:
        reference: Reference level source with a potential well.
        N: Hermite degree; level N has u_N(0) = 0.
        zero_index: Which nonnegative zero of H_N, largest first.
        config: Numerical defaults.

    Returns:
        TuningScenario with the flag "levels below N lie closer than level N".
    """
    cfg = config or Config()
    model = reference.potential
    if isinstance(model, VibrationalSeries):
        m, omega = 1.0, model.omega
    else:
        fit = parabolic_fit(model)
        m, omega = fit.m, fit.omega
    c = hermite_zero_tuning(m, omega, reference.hbar, N, zero_index)
    tuned = HarmonicPlusLinear3D(m=m, omega=omega, C=c)
    ref, truncated = source_levels(reference, N + 1, cfg)
    if truncated:
        raise DomainError(f"reference has {len(ref)} levels, scenario needs {N + 1}")
    rows = []
    for level in ref:
        pair = analytic.shifted_harmonic_eigenpair(tuned, reference.hbar, level.n, cfg)
        rows.append(
            ScenarioRow(
                n=level.n,
                energy=pair.energy,
                E_ref=level.energy,
                abs_dev=abs(level.energy - pair.energy),
                u0=pair.u0,
                classification=classify(pair.u0, peak_amplitude(pair), cfg.classify_tol),
            )
        )
    closer = all(row.abs_dev < rows[N].abs_dev for row in rows[:N])
    return TuningScenario(N=N, C=c, rows=rows, lower_levels_closer=closer)
