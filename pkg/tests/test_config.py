import pytest
from pydantic import ValidationError

from radial.config import Config


class TestConfig:
    """Tests for Config."""

    def test_config_defaults(self, monkeypatch):
        """Test that Config has the documented numerical defaults.

        Args:
            monkeypatch: Pytest monkeypatch fixture.
        """
        monkeypatch.delenv("RADIAL_HBAR", raising=False)
        config = Config(_env_file=None)
        assert config.hbar == 1.0
        assert config.energy_scale == 1.0
        assert config.classify_tol == 1e-9
        assert config.series_order == 24
        assert config.steps_per_span == 4000
        assert config.max_phase_step == 0.025
        assert config.decay_target == 36.0
        assert config.width_pad == 8.0
        assert config.max_iterations == 200

    def test_config_from_env(self, monkeypatch):
        """Test that Config reads RADIAL_* environment variables.

        Args:
            monkeypatch: Pytest monkeypatch fixture.
        """
        monkeypatch.setenv("RADIAL_HBAR", "0.5")
        monkeypatch.setenv("RADIAL_ENERGY_SCALE", "27.211386")
        monkeypatch.setenv("RADIAL_STEPS_PER_SPAN", "8000")
        config = Config()
        assert config.hbar == 0.5
        assert config.energy_scale == pytest.approx(27.211386)
        assert config.steps_per_span == 8000

    def test_config_rejects_invalid_env(self, monkeypatch):
        """Test that a nonpositive ħ from the environment fails validation.

        Args:
            monkeypatch: Pytest monkeypatch fixture.
        """
        monkeypatch.setenv("RADIAL_HBAR", "0")
        with pytest.raises(ValidationError):
            Config()

    def test_config_explicit_values_win(self, monkeypatch):
        """Test that constructor arguments override the environment.

        Args:
            monkeypatch: Pytest monkeypatch fixture.
        """
        monkeypatch.setenv("RADIAL_CLASSIFY_TOL", "1e-3")
        config = Config(classify_tol=1e-6)
        assert config.classify_tol == 1e-6

    def test_config_grid_floor(self):
        """Test that steps_per_span keeps grids above the 64-point minimum."""
        with pytest.raises(ValidationError):
            Config(steps_per_span=10)
