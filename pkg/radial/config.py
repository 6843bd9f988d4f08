"""Environment-based solver defaults using pydantic-settings."""

from pydantic import Field
from pydantic_settings import BaseSettings, SettingsConfigDict


class Config(BaseSettings):
    """Numerical defaults loaded from ``RADIAL_*`` environment variables."""

    model_config = SettingsConfigDict(env_prefix="RADIAL_")

    hbar: float = Field(default=1.0, gt=0)
    energy_scale: float = Field(default=1.0, gt=0)
    classify_tol: float = Field(default=1e-9, gt=0)
    series_order: int = Field(default=24, ge=0)
    match_tol: float = Field(default=1e-10, gt=0)
    energy_tol: float = Field(default=1e-12, gt=0)
    steps_per_span: int = Field(default=4000, ge=63)
    max_phase_step: float = Field(default=0.025, gt=0)
    decay_target: float = Field(default=36.0, gt=0)
    width_pad: float = Field(default=8.0, gt=0)
    max_iterations: int = Field(default=200, ge=1)
    quadrature_points: int = Field(default=20001, ge=3)
