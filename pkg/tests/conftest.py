from pathlib import Path

import pytest

from radial.config import Config
from radial.models import CenteredHarmonic, Morse, ShiftedHarmonic


@pytest.fixture
def settings():
    """Provide default numerical settings independent of the environment.

    Returns:
        Config built from explicit defaults.
    """
    return Config(_env_file=None)


@pytest.fixture
def unit_oscillator():
    """Provide a shifted oscillator with m = ω = 1 well inside the half-line.

    Returns:
        ShiftedHarmonic at r_m = 6.
    """
    return ShiftedHarmonic(m=1.0, omega=1.0, r_m=6.0, V_m=0.0)


@pytest.fixture
def centered_oscillator():
    """Provide the unit spherical oscillator.

    Returns:
        CenteredHarmonic with m = ω = 1.
    """
    return CenteredHarmonic(m=1.0, omega=1.0)


@pytest.fixture
def deep_morse():
    """Provide a Morse well with four bound levels.

    Returns:
        Morse(V_m=8, a=1, r_m=3).
    """
    return Morse(m=1.0, V_m=8.0, a=1.0, r_m=3.0)


@pytest.fixture
def write_config(tmp_path):
    """Provide a helper that writes a YAML run file into tmp_path.

    Args:
        tmp_path: Pytest temporary directory.

    Returns:
        Callable taking file contents and an optional name.
    """

    def _write(text: str, name: str = "run.yaml") -> Path:
        """Write a configuration file.

        Args:
            text: YAML contents.
            name: File name inside tmp_path.

        Returns:
            Path of the written file.
        """
        path = tmp_path / name
        path.write_text(text)
        return path

    return _write
