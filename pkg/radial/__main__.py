"""CLI entry point: parse a run configuration, compute, display and write."""

import argparse
import logging
import math
from pathlib import Path

import numpy as np
from pydantic import ValidationError
from rich.logging import RichHandler

from radial import analytic, compare, frobenius, numerov
from radial.config import Config
from radial.config_loader import load_run_config
from radial.display import (
    display_classification,
    display_error,
    display_levels,
    display_qdelta,
    display_spectrum,
    display_sweep,
    display_wavefunction,
    display_written,
)
from radial.errors import (
    ConfigError,
    NoBoundStateError,
    RadialError,
    UnsupportedModelError,
)
from radial.models import (
    BoundaryCondition,
    ClassificationReport,
    LevelRow,
    LevelsReport,
    Morse,
    QDeltaReport,
    RunConfig,
    SeriesSolution,
    SourceConfig,
    SweepReport,
    VibrationalSeries,
    WavefunctionReport,
)
from radial.potential import parabolic_fit
from radial.report_io import render, scale_energies, write_atomic

logger = logging.getLogger("radial")

DEFAULT_N_MAX = 5


def _common_flags() -> argparse.ArgumentParser:
    """Flags shared by every subcommand.

    Returns:
        Parent parser without help.
    """
    parent = argparse.ArgumentParser(add_help=False)
    parent.add_argument("--config", type=Path, help="Flat YAML run configuration")
    parent.add_argument("--output", type=Path, help="Write the report to this file")
    parent.add_argument("--format", choices=["csv", "json"])
    parent.add_argument("--bc", choices=[bc.value for bc in BoundaryCondition])
    parent.add_argument("--ell", type=int)
    parent.add_argument("-v", "--verbose", action="store_true", help="Debug logging")
    return parent


def build_parser() -> argparse.ArgumentParser:
    """Build the command-line parser with one subcommand per report.

    Returns:
        Configured argument parser instance.
    """
    parser = argparse.ArgumentParser(prog="radial")
    subcommands = parser.add_subparsers(dest="command", required=True)
    common = _common_flags()
    methods = ["analytic", "numerov"]

    levels = subcommands.add_parser("levels", parents=[common])
    levels.add_argument("--n-max", type=int, help="Highest level, inclusive")
    levels.add_argument("--method", choices=methods)
    levels.add_argument("--grid-step", type=float, help="Numerov step h")

    wave = subcommands.add_parser("wavefunction", parents=[common])
    wave.add_argument("--n", type=int)
    wave.add_argument("--method", choices=methods)
    wave.add_argument("--grid-step", type=float, help="Numerov step or sample spacing")

    comp = subcommands.add_parser("compare", parents=[common])
    comp.add_argument("--reference", type=Path, required=True)
    comp.add_argument("--n-max", type=int)
    comp.add_argument("--method", choices=methods)
    comp.add_argument("--grid-step", type=float)

    classify = subcommands.add_parser("classify", parents=[common])
    classify.add_argument("--n-max", type=int)
    classify.add_argument("--tol", type=float, help="Relative |u(0)| threshold")

    qdelta = subcommands.add_parser("qdelta", parents=[common])
    qdelta.add_argument("--lambda", dest="lam", type=int, required=True)
    qdelta.add_argument("--coeffs", required=True, help="a0,a1,...")

    sweep = subcommands.add_parser("bc-sweep", parents=[common])
    sweep.add_argument("--rm-list", required=True, help="r_m values, e.g. 2,3,4,5")
    sweep.add_argument("--n", type=int)
    return parser


def _overrides(args: argparse.Namespace) -> dict:
    """Collect flag values keyed like the configuration file.

    Args:
        args: Parsed arguments.

    Returns:
        Mapping of keys to flag values, ``None`` where a flag was not given.
    """
    names = {
        "n_max": "n_max", "n": "n", "h": "grid_step", "tol": "tol", "ell": "ell",
        "bc": "bc", "method": "method", "output": "output", "format": "format",
        "lam": "lam", "coeffs": "coeffs", "rm_list": "rm_list",
    }
    return {key: getattr(args, attr, None) for key, attr in names.items()}


def _default_count(model, hbar: float) -> int:
    """Number of levels reported when ``n_max`` is not given.

    Args:
        model: Potential or level series.
        hbar: Reduced Planck constant.

    Returns:
        All bound levels of a Morse well or series, otherwise ``DEFAULT_N_MAX + 1``.
    """
    if isinstance(model, Morse):
        _, max_n = analytic.morse_parameters(model, hbar)
        return max_n + 1
    if isinstance(model, VibrationalSeries) and model.n_levels is not None:
        return model.n_levels
    return DEFAULT_N_MAX + 1


def _count(run: RunConfig) -> int:
    """Levels requested by a run.

    Args:
        run: Validated run.

    Returns:
        ``n_max + 1`` or the model default.
    """
    if run.n_max is not None:
        return run.n_max + 1
    count = _default_count(run.potential, run.hbar)
    if run.reference is not None:
        count = min(count, _default_count(run.reference.potential, run.reference.hbar))
    return count


def _require_s_wave(run: RunConfig) -> None:
    """Closed forms describe ℓ = 0 only.

    Args:
        run: Validated run.
    """
    if run.method == "analytic" and run.ell != 0:
        raise UnsupportedModelError(
            "closed-form eigenfunctions are s-wave only; "
            f"use method numerov for ell={run.ell}"
        )


def _level_row(run: RunConfig, n: int, settings: Config) -> LevelRow:
    """Compute one row of a levels report.

    Args:
        run: Validated run.
        n: Quantum number.
        settings: Numerical defaults.

    Returns:
        LevelRow with origin data and classification.
    """
    tol = run.tol or settings.classify_tol
    model = run.potential
    if run.method == "analytic":
        pair = analytic.eigenpair(model, run.hbar, n, settings)
        u0, du0, strength = analytic.origin_report(pair)
        peak = compare.peak_amplitude(pair)
        energy = pair.energy
    else:
        res = numerov.find_level(model, run.ell, run.hbar, run.bc, n, run.h, settings)
        u0, du0, energy = res.u0, res.du0, res.energy
        peak = float(np.max(np.abs(res.u)))
        strength = None
        if run.ell == 0:
            strength = run.hbar**2 * math.sqrt(math.pi) / model.m * u0
    return LevelRow(
        n=n,
        energy=energy,
        u0=u0,
        du0=du0,
        delta_strength=strength,
        classification=compare.classify(u0, peak, tol),
    )


def run_levels(run: RunConfig, settings: Config) -> LevelsReport:
    """Levels 0..n_max of the configured model.

    Args:
        run: Validated run.
        settings: Numerical defaults.

    Returns:
        LevelsReport, truncated at the last bound level.
    """
    _require_s_wave(run)
    rows = []
    truncated = False
    for n in range(_count(run)):
        try:
            rows.append(_level_row(run, n, settings))
        except NoBoundStateError as exc:
            logger.warning("stopping at n=%d: %s", n, exc)
            truncated = True
            break
    bc = run.bc if run.method == "numerov" else None
    return LevelsReport(rows=rows, method=run.method, bc=bc, truncated=truncated)


def run_wavefunction(run: RunConfig, settings: Config) -> WavefunctionReport:
    """Sample level n of the configured model.

    Args:
        run: Validated run.
        settings: Numerical defaults.

    Returns:
        WavefunctionReport with matching r and u columns.
    """
    _require_s_wave(run)
    if run.method == "numerov":
        res = numerov.find_level(
            run.potential, run.ell, run.hbar, run.bc, run.n, run.h, settings
        )
        r, u = res.grid.points(), res.u
        u0, du0, energy, bc = res.u0, res.du0, res.energy, run.bc
    else:
        pair = analytic.eigenpair(run.potential, run.hbar, run.n, settings)
        r, u = analytic.sample_eigenpair(run.potential, pair, run.h, settings)
        u0, du0, energy, bc = pair.u0, pair.du0, pair.energy, BoundaryCondition.full_line
    return WavefunctionReport(
        n=run.n,
        energy=energy,
        method=run.method,
        bc=bc,
        u0=u0,
        du0=du0,
        r=r.tolist(),
        u=u.tolist(),
    )


def run_compare(run: RunConfig, settings: Config):
    """Compare the configured source against the reference source.

    Args:
        run: Validated run with a reference.
        settings: Numerical defaults.

    Returns:
        SpectrumReport.
    """
    approx = SourceConfig(
        potential=run.potential,
        hbar=run.hbar,
        ell=run.ell,
        bc=run.bc,
        method=run.method,
        h=run.h,
    )
    return compare.compare_spectra(run.reference, approx, _count(run), settings)


def run_classify(run: RunConfig, settings: Config) -> ClassificationReport:
    """Classify the analytic levels of the configured model.

    Args:
        run: Validated run.
        settings: Numerical defaults.

    Returns:
        ClassificationReport.
    """
    count = _count(run)
    tol = run.tol or settings.classify_tol
    rows = compare.classify_levels(run.potential, run.hbar, count, tol, settings)
    return ClassificationReport(rows=rows, tol=tol, truncated=len(rows) < count)


def run_qdelta(run: RunConfig, settings: Config) -> QDeltaReport:
    """Delta expansion of the series given on the command line.

    Args:
        run: Validated run with ``lam`` and ``coeffs``.
        settings: Numerical defaults (unused).

    Returns:
        QDeltaReport.
    """
    try:
        sol = SeriesSolution(ell=run.ell, lam=run.lam, energy=0.0, coefficients=run.coeffs)
    except ValidationError as exc:
        raise ConfigError(exc.errors()[0]["msg"], field="lambda") from exc
    expansion = frobenius.q_delta(sol)
    s_wave = frobenius.s_wave_coefficient(expansion) if sol.ell == 0 else None
    return QDeltaReport(
        expansion=expansion,
        rendered=frobenius.render_expansion(expansion),
        h_eigenfunction=frobenius.is_H_eigenfunction(sol),
        s_wave_coefficient=s_wave,
    )


def run_sweep(run: RunConfig, settings: Config) -> SweepReport:
    """Dirichlet against full-line level n of the well moved to each r_m.

    Args:
        run: Validated run with ``n`` and ``rm_list``.
        settings: Numerical defaults.

    Returns:
        SweepReport.
    """
    fit = parabolic_fit(run.potential)
    v_m = getattr(fit, "V_m", 0.0)
    rows = compare.bc_sensitivity_sweep(
        fit.m, fit.omega, run.hbar, run.n, run.rm_list, v_m, settings
    )
    return SweepReport(n=run.n, rows=rows)


COMMANDS = {
    "levels": (run_levels, display_levels),
    "wavefunction": (run_wavefunction, display_wavefunction),
    "compare": (run_compare, display_spectrum),
    "classify": (run_classify, display_classification),
    "qdelta": (run_qdelta, display_qdelta),
    "bc-sweep": (run_sweep, display_sweep),
}


def _configure_logging(verbose: bool) -> None:
    """Route library logging through rich.

    Args:
        verbose: DEBUG when True, WARNING otherwise.
    """
    logging.basicConfig(
        level=logging.DEBUG if verbose else logging.WARNING,
        format="%(message)s",
        handlers=[RichHandler(show_path=False)],
        force=True,
    )


def _settings() -> Config:
    """Load environment defaults.

    Returns:
        Validated Config.
    """
    try:
        return Config()
    except ValidationError as exc:
        first = exc.errors()[0]
        field = "RADIAL_" + str(first["loc"][0]).upper() if first["loc"] else None
        raise ConfigError(first["msg"], field=field) from exc


def main(argv: list[str] | None = None) -> None:
    """Parse CLI args, compute the report and emit it.

    Every error prints one message and exits with the code of its error
    family; no output file is touched unless the whole report rendered.

    Args:
        argv: Optional argument vector for testing.
    """
    args = build_parser().parse_args(argv)
    _configure_logging(args.verbose)
    try:
        settings = _settings()
        run = load_run_config(
            args.command,
            config_path=args.config,
            overrides=_overrides(args),
            reference_path=getattr(args, "reference", None),
            settings=settings,
        )
        compute, show = COMMANDS[run.command]
        report = scale_energies(compute(run, settings), settings.energy_scale)
        text = render(report, run.format) if run.output is not None else None
    except RadialError as exc:
        display_error(str(exc))
        raise SystemExit(exc.exit_code) from exc

    show(report)
    if run.output is not None:
        try:
            write_atomic(run.output, text)
        except OSError as exc:
            display_error(f"cannot write {run.output}: {exc}")
            raise SystemExit(1) from exc
        display_written(run.output)


if __name__ == "__main__":
    main()
