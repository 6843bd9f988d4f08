"""Rich terminal display helpers for reports."""

from pathlib import Path

from rich.console import Console
from rich.markup import escape
from rich.panel import Panel
from rich.table import Table

from radial.models import (
    ClassificationReport,
    LevelsReport,
    QDeltaReport,
    SpectrumReport,
    SweepReport,
    WavefunctionReport,
)

_console = Console()


def _num(value: float | None, digits: int = 12) -> str:
    """Format an optional float for a table cell.

    Args:
        value: Number or None.
        digits: Significant digits.

    Returns:
        Formatted text, ``-`` for None.
    """
    return "-" if value is None else f"{value:.{digits}g}"


def _truncation_note(c: Console, truncated: bool) -> None:
    """Print the truncated-report warning when needed.

    Args:
        c: Target console.
        truncated: Whether the report stopped early.
    """
    if truncated:
        c.print("[yellow]Report truncated at the last bound level.[/yellow]")


def display_levels(report: LevelsReport, console: Console | None = None) -> None:
    """Print a levels table.

    Args:
        report: Levels of one model.
        console: Optional console override for tests.
    """
    c = console or _console
    title = f"Levels ({report.method}"
    title += f", {report.bc.value})" if report.bc is not None else ")"
    table = Table(title=title)
    for column in ("n", "E", "u(0)", "u'(0)", "delta strength", "class"):
        table.add_column(column)
    for row in report.rows:
        label = row.classification.value if row.classification else "-"
        table.add_row(
            str(row.n),
            _num(row.energy),
            _num(row.u0, 6),
            _num(row.du0, 6),
            _num(row.delta_strength, 6),
            label,
        )
    c.print(table)
    _truncation_note(c, report.truncated)


def display_spectrum(report: SpectrumReport, console: Console | None = None) -> None:
    """Print a spectrum comparison table.

    Args:
        report: Reference against approximate levels.
        console: Optional console override for tests.
    """
    c = console or _console
    table = Table(title=f"{report.reference} vs {report.approx} ({report.criterion})")
    for column in ("n", "E_ref", "E_approx", "|dev|", "u(0)", "class"):
        table.add_column(column)
    for row in report.rows:
        label = row.classification.value if row.classification else "-"
        table.add_row(
            str(row.n),
            _num(row.E_ref),
            _num(row.E_approx),
            _num(row.abs_dev, 6),
            _num(row.u0_approx, 6),
            label,
        )
    c.print(table)
    _truncation_note(c, report.truncated)


def display_classification(
    report: ClassificationReport, console: Console | None = None
) -> None:
    """Print the class column of each analytic level.

    Args:
        report: Classified levels.
        console: Optional console override for tests.
    """
    c = console or _console
    table = Table(title=f"Classification (tol={report.tol:g})")
    for column in ("n", "E", "u(0)", "max|u|", "class"):
        table.add_column(column)
    for row in report.rows:
        style = "green" if row.classification == "H-and-Hd" else "magenta"
        table.add_row(
            str(row.n),
            _num(row.energy),
            _num(row.u0, 6),
            _num(row.u_max, 6),
            f"[{style}]{row.classification.value}[/{style}]",
        )
    c.print(table)
    _truncation_note(c, report.truncated)


def display_sweep(report: SweepReport, console: Console | None = None) -> None:
    """Print the Dirichlet against full-line gap per well position.

    Args:
        report: Sweep rows.
        console: Optional console override for tests.
    """
    c = console or _console
    table = Table(title=f"Boundary-condition sweep, n={report.n}")
    for column in ("r_m", "beta r_m", "E dirichlet", "E full-line", "gap", "|u(0)|"):
        table.add_column(column)
    for row in report.rows:
        if row.error is not None:
            table.add_row(
                _num(row.r_m, 6),
                _num(row.beta_rm, 6),
                f"[red]{escape(row.error)}[/red]",
                "",
                "",
                "",
            )
            continue
        table.add_row(
            _num(row.r_m, 6),
            _num(row.beta_rm, 6),
            _num(row.e_dirichlet),
            _num(row.e_full_line),
            _num(row.gap, 3),
            _num(row.u0_abs, 3),
        )
    c.print(table)


def display_qdelta(report: QDeltaReport, console: Console | None = None) -> None:
    """Print a delta expansion and its s-wave collapse.

    Args:
        report: Expansion report.
        console: Optional console override for tests.
    """
    c = console or _console
    body = report.rendered
    if report.s_wave_coefficient is not None:
        body += f"\ncoefficient of delta after Y00: {report.s_wave_coefficient:.12g}"
    verdict = "yes" if report.h_eigenfunction else "no"
    body += f"\nH eigenfunction: {verdict}"
    title = f"Q (ell={report.expansion.ell}, lambda={report.expansion.lam})"
    c.print(Panel(body, title=title, border_style="cyan"))


def display_wavefunction(
    report: WavefunctionReport, console: Console | None = None
) -> None:
    """Print a one-line summary of a sampled eigenfunction.

    Args:
        report: Sampled level.
        console: Optional console override for tests.
    """
    c = console or _console
    c.print(
        f"[bold]n={report.n}[/bold] E={report.energy:.12g} "
        f"u(0)={report.u0:.6g} u'(0)={report.du0:.6g} "
        f"({report.method}, {report.bc.value}, {len(report.r)} samples)"
    )


def display_written(path: Path, console: Console | None = None) -> None:
    """Print where a report was written.

    Args:
        path: Output file.
        console: Optional console override for tests.
    """
    c = console or _console
    c.print(f"[green]Wrote {escape(str(path))}[/green]")


def display_error(message: str, console: Console | None = None) -> None:
    """Print an error message in red.

    Args:
        message: Error message to display.
        console: Optional console override for tests.
    """
    c = console or _console
    c.print(f"[red]Error: {escape(message)}[/red]")
