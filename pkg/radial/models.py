"""Pydantic v2 models for potentials, series data, solver results and reports."""

import math
from enum import Enum
from pathlib import Path
from typing import Annotated, Literal

import numpy as np
from pydantic import AliasChoices, BaseModel, ConfigDict, Field, model_validator


class _Value(BaseModel):
    """Immutable model that rejects unknown fields."""

    model_config = ConfigDict(frozen=True, extra="forbid")


class ShiftedHarmonic(_Value):
    """Parabolic well ``½mω²(r−r_m)² − V_m``."""

    kind: Literal["shifted-harmonic"] = "shifted-harmonic"
    m: float = Field(default=1.0, gt=0)
    omega: float = Field(gt=0)
    r_m: float = Field(default=0.0, ge=0)
    V_m: float = Field(default=0.0, ge=0)


class Morse(_Value):
    """Morse well ``V_m[exp(−2a(r−r_m)) − 2exp(−a(r−r_m))]``."""

    kind: Literal["morse"] = "morse"
    m: float = Field(default=1.0, gt=0)
    V_m: float = Field(gt=0)
    a: float = Field(gt=0)
    r_m: float = Field(default=0.0, ge=0)


class CenteredHarmonic(_Value):
    """Spherical oscillator ``½mω²r²``."""

    kind: Literal["centered-harmonic"] = "centered-harmonic"
    m: float = Field(default=1.0, gt=0)
    omega: float = Field(gt=0)


class HarmonicPlusLinear3D(_Value):
    """Spherical oscillator with a linear pull, ``½mω²r² − Cr``."""

    kind: Literal["harmonic-plus-linear"] = "harmonic-plus-linear"
    m: float = Field(default=1.0, gt=0)
    omega: float = Field(gt=0)
    C: float = Field(default=0.0, ge=0)


class TaylorSeries(_Value):
    """Potential given by its power series ``Σ v_j r^j`` about the origin."""

    kind: Literal["taylor"] = "taylor"
    m: float = Field(default=1.0, gt=0)
    coefficients: list[float] = Field(min_length=1)


PotentialModel = Annotated[
    ShiftedHarmonic | Morse | CenteredHarmonic | HarmonicPlusLinear3D | TaylorSeries,
    Field(discriminator="kind"),
]


class VibrationalSeries(_Value):
    """Empirical level formula ``−V_m + (n+½)ħω + c2(n+½)² + c3(n+½)³``."""

    kind: Literal["vibrational-series"] = "vibrational-series"
    omega: float = Field(gt=0)
    V_m: float = Field(default=0.0, ge=0)
    c2: float = 0.0
    c3: float = 0.0
    n_levels: int | None = Field(default=None, ge=0)

    @classmethod
    def from_morse(cls, model: Morse, hbar: float = 1.0) -> "VibrationalSeries":
        """Series with c2 = −ħ²ω²/(4V_m), c3 = 0, reproducing the Morse levels.

        Args:
            model: Morse well.
            hbar: Reduced Planck constant.

        Returns:
            VibrationalSeries limited to the bound levels of ``model``.
        """
        omega = model.a * math.sqrt(2.0 * model.V_m / model.m)
        d = math.sqrt(2.0 * model.m * model.V_m) / (model.a * hbar)
        return cls(
            omega=omega,
            V_m=model.V_m,
            c2=-(hbar**2) * omega**2 / (4.0 * model.V_m),
            n_levels=max(math.ceil(d - 0.5), 0),
        )

    def level(self, hbar: float, n: int) -> float:
        """Level n of the series.

        Args:
            hbar: Reduced Planck constant.
            n: Quantum number.

        Returns:
            Energy of level n.
        """
        x = n + 0.5
        return -self.V_m + x * hbar * self.omega + self.c2 * x**2 + self.c3 * x**3


LevelModel = Annotated[
    ShiftedHarmonic
    | Morse
    | CenteredHarmonic
    | HarmonicPlusLinear3D
    | TaylorSeries
    | VibrationalSeries,
    Field(discriminator="kind"),
]


class BoundaryCondition(str, Enum):
    """Origin condition selecting the operator whose spectrum is computed."""

    dirichlet = "dirichlet"
    neumann = "neumann"
    full_line = "full-line"


class Classification(str, Enum):
    """Whether a level belongs to H as well as H_d, or to H_d only."""

    h_and_hd = "H-and-Hd"
    hd_only = "Hd-only"


class SeriesSolution(_Value):
    """Frobenius solution ``r^λ Σ a_k r^k`` of the radial equation."""

    model_config = ConfigDict(frozen=True, extra="forbid", populate_by_name=True)

    ell: int = Field(ge=0)
    lam: int = Field(
        validation_alias=AliasChoices("lam", "lambda"), serialization_alias="lambda"
    )
    energy: float
    coefficients: list[float] = Field(min_length=1)

    @property
    def order(self) -> int:
        """Truncation order of the stored coefficients.

        Returns:
            K, the index of the last coefficient.
        """
        return len(self.coefficients) - 1

    @model_validator(mode="after")
    def check_root(self) -> "SeriesSolution":
        """Require an indicial root and a nonzero leading coefficient.

        Returns:
            The validated SeriesSolution.
        """
        if self.lam not in (self.ell + 1, -self.ell):
            raise ValueError(
                f"lambda={self.lam} is not an indicial root for ell={self.ell}"
            )
        if self.coefficients[0] == 0:
            raise ValueError("leading coefficient a_0 must be nonzero")
        return self


class DeltaTerm(_Value):
    """One term ``coeff · r^ℓ Y_ℓ^μ Δ^p δ`` of a delta expansion."""

    p: int = Field(ge=0)
    coeff: float


class DeltaExpansion(_Value):
    """Finite combination of iterated Laplacians of the Dirac mass."""

    model_config = ConfigDict(frozen=True, extra="forbid", populate_by_name=True)

    ell: int = Field(ge=0)
    lam: int = Field(
        validation_alias=AliasChoices("lam", "lambda"), serialization_alias="lambda"
    )
    terms: list[DeltaTerm] = Field(default_factory=list)

    @model_validator(mode="after")
    def check_order(self) -> "DeltaExpansion":
        """Require distinct ascending powers of the Laplacian.

        Returns:
            The validated DeltaExpansion.
        """
        powers = [term.p for term in self.terms]
        if any(b <= a for a, b in zip(powers, powers[1:])):
            raise ValueError(f"powers must be distinct and ascending, got {powers}")
        return self


class RadialGrid(_Value):
    """Uniform abscissae ``r_start + i·h`` for ``i < count``."""

    r_start: float
    r_end: float
    h: float = Field(gt=0)
    count: int = Field(ge=64)

    @model_validator(mode="after")
    def check_spacing(self) -> "RadialGrid":
        """Require the step and count to tile the interval.

        Returns:
            The validated RadialGrid.
        """
        expected = round((self.r_end - self.r_start) / self.h) + 1
        if expected != self.count:
            raise ValueError(
                f"count={self.count} does not tile [{self.r_start}, {self.r_end}] "
                f"with h={self.h}"
            )
        return self

    def points(self) -> np.ndarray:
        """Return the grid abscissae.

        Returns:
            Array of ``count`` uniformly spaced radii.
        """
        return self.r_start + self.h * np.arange(self.count)


class ShootingResult(_Value):
    """Normalized bound state produced by the Numerov solver."""

    model_config = ConfigDict(frozen=True, extra="forbid", populate_by_name=True)

    n: int = Field(ge=0)
    energy: float = Field(
        validation_alias=AliasChoices("energy", "E"), serialization_alias="E"
    )
    bc: BoundaryCondition
    ell: int = Field(default=0, ge=0)
    grid: RadialGrid
    samples: list[float] = Field(exclude=True)
    u0: float
    du0: float
    iterations: int = Field(ge=0)

    @property
    def u(self) -> np.ndarray:
        """Sampled radial function.

        Returns:
            Samples as a numpy array.
        """
        return np.asarray(self.samples)


class LevelRow(_Value):
    """One level of a ``levels`` report."""

    n: int = Field(ge=0)
    energy: float
    u0: float | None = None
    du0: float | None = None
    delta_strength: float | None = None
    classification: Classification | None = None


class LevelsReport(_Value):
    """Levels of one model under one method."""

    rows: list[LevelRow]
    method: Literal["analytic", "numerov"]
    bc: BoundaryCondition | None = None
    truncated: bool = False


class SpectrumRow(_Value):
    """Reference level against an approximate level of the same n."""

    n: int = Field(ge=0)
    E_ref: float
    E_approx: float
    abs_dev: float = Field(ge=0)
    u0_approx: float | None = None
    classification: Classification | None = None

    @model_validator(mode="after")
    def check_deviation(self) -> "SpectrumRow":
        """Require ``abs_dev == |E_ref − E_approx|``.

        Returns:
            The validated SpectrumRow.
        """
        if self.abs_dev != abs(self.E_ref - self.E_approx):
            raise ValueError("abs_dev must equal |E_ref - E_approx|")
        return self


class SpectrumReport(_Value):
    """Per-level comparison of two spectra."""

    rows: list[SpectrumRow]
    truncated: bool = False
    criterion: str
    reference: str
    approx: str

    @model_validator(mode="after")
    def check_sorted(self) -> "SpectrumReport":
        """Require rows sorted by n.

        Returns:
            The validated SpectrumReport.
        """
        ns = [row.n for row in self.rows]
        if ns != sorted(ns):
            raise ValueError("rows must be sorted by n")
        return self


class ClassificationRow(_Value):
    """Origin value of one analytic level and its operator class."""

    n: int = Field(ge=0)
    energy: float
    u0: float
    u_max: float = Field(ge=0)
    classification: Classification


class SweepRow(_Value):
    """Dirichlet against full-line energy of one level at one ``r_m``."""

    r_m: float = Field(ge=0)
    beta_rm: float = Field(ge=0)
    e_dirichlet: float | None = None
    e_full_line: float | None = None
    gap: float | None = None
    u0_abs: float | None = None
    error: str | None = None


class ScenarioRow(_Value):
    """Level of a Hermite-zero tuned potential against a reference level."""

    n: int = Field(ge=0)
    energy: float
    E_ref: float
    abs_dev: float = Field(ge=0)
    u0: float
    classification: Classification


class TuningScenario(_Value):
    """Outcome of comparing a tuned potential with a reference spectrum."""

    N: int = Field(ge=1)
    C: float = Field(ge=0)
    rows: list[ScenarioRow]
    lower_levels_closer: bool


class QDeltaReport(_Value):
    """Delta expansion of a series solution with its rendered form."""

    expansion: DeltaExpansion
    rendered: str
    h_eigenfunction: bool
    s_wave_coefficient: float | None = None


class SourceConfig(_Value):
    """Potential and solver choice describing one level source."""

    potential: LevelModel | None = None
    hbar: float = Field(default=1.0, gt=0)
    ell: int = Field(default=0, ge=0)
    bc: BoundaryCondition = BoundaryCondition.full_line
    method: Literal["analytic", "numerov"] = "analytic"
    h: float | None = Field(default=None, gt=0)


class RunConfig(SourceConfig):
    """Fully validated command-line run."""

    command: Literal["levels", "wavefunction", "compare", "classify", "qdelta", "bc-sweep"]
    n: int | None = Field(default=None, ge=0)
    n_max: int | None = Field(default=None, ge=0)
    tol: float | None = Field(default=None, gt=0)
    output: Path | None = None
    format: Literal["csv", "json"] = "csv"
    reference: SourceConfig | None = None
    rm_list: list[float] = Field(default_factory=list)
    lam: int | None = None
    coeffs: list[float] = Field(default_factory=list)

    @model_validator(mode="after")
    def check_command_inputs(self) -> "RunConfig":
        """Require the inputs each command needs.

        Returns:
            The validated RunConfig.
        """
        if self.command == "qdelta":
            if self.lam is None or not self.coeffs:
                raise ValueError("qdelta needs lambda and coeffs")
            return self
        if self.potential is None:
            raise ValueError(f"{self.command} needs a potential 'type'")
        if self.command != "compare" and isinstance(self.potential, VibrationalSeries):
            raise ValueError("vibrational-series is only usable as a compare reference")
        missing = {
            "compare": self.reference is None,
            "wavefunction": self.n is None,
            "bc-sweep": self.n is None or not self.rm_list,
        }
        if missing.get(self.command):
            needs = {"compare": "a reference", "wavefunction": "n", "bc-sweep": "n and rm_list"}
            raise ValueError(f"{self.command} needs {needs[self.command]}")
        return self


class ClassificationReport(_Value):
    """Classified analytic levels of one model."""

    rows: list[ClassificationRow]
    tol: float = Field(gt=0)
    truncated: bool = False


class SweepReport(_Value):
    """Boundary-condition sensitivity of one level across well positions."""

    n: int = Field(ge=0)
    rows: list[SweepRow]


class WavefunctionReport(_Value):
    """Sampled eigenfunction of one level."""

    model_config = ConfigDict(frozen=True, extra="forbid", populate_by_name=True)

    n: int = Field(ge=0)
    energy: float = Field(
        validation_alias=AliasChoices("energy", "E"), serialization_alias="E"
    )
    method: Literal["analytic", "numerov"]
    bc: BoundaryCondition
    u0: float
    du0: float
    r: list[float]
    u: list[float]

    @model_validator(mode="after")
    def check_lengths(self) -> "WavefunctionReport":
        """Require one value per abscissa.

        Returns:
            The validated WavefunctionReport.
        """
        if len(self.r) != len(self.u):
            raise ValueError(f"{len(self.r)} radii but {len(self.u)} values")
        return self
