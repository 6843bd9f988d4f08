import pytest

from radial.config import Config
from radial.config_loader import load_run_config, load_source
from radial.errors import ConfigError
from radial.models import BoundaryCondition, Morse, TaylorSeries, VibrationalSeries

MORSE_RUN = """\
type: morse
m: 1
V_m: 8
a: 1
r_m: 1
n_max: 3
format: json
"""


# --- load_run_config ---


class TestLoadRunConfig:
    """Tests for load_run_config."""

    def test_load_morse_run(self, write_config, settings):
        """Test that a flat file becomes a nested RunConfig.

        Args:
            write_config: Helper writing YAML files.
            settings: Default numerical settings.
        """
        run = load_run_config("levels", write_config(MORSE_RUN), settings=settings)
        assert run.potential == Morse(m=1.0, V_m=8.0, a=1.0, r_m=1.0)
        assert run.n_max == 3
        assert run.format == "json"
        assert run.method == "analytic"
        assert run.hbar == 1.0

    def test_flags_shadow_file_values(self, write_config, settings):
        """Test that overrides win and None overrides are ignored.

        Args:
            write_config: Helper writing YAML files.
            settings: Default numerical settings.
        """
        overrides = {"n_max": 2, "method": "numerov", "bc": "dirichlet", "format": None}
        run = load_run_config(
            "levels", write_config(MORSE_RUN), overrides, settings=settings
        )
        assert run.n_max == 2
        assert run.method == "numerov"
        assert run.bc is BoundaryCondition.dirichlet
        assert run.format == "json"

    def test_coefficients_accept_comma_string(self, write_config, settings):
        """Test that a comma-separated string parses into floats.

        Args:
            write_config: Helper writing YAML files.
            settings: Default numerical settings.
        """
        path = write_config('type: taylor\ncoefficients: "0, -2, 0.5"\n')
        run = load_run_config("levels", path, settings=settings)
        assert run.potential == TaylorSeries(coefficients=[0.0, -2.0, 0.5])

    def test_qdelta_from_flags_only(self, settings):
        """Test that qdelta needs no file.

        Args:
            settings: Default numerical settings.
        """
        overrides = {"ell": 0, "lam": 0, "coeffs": "1.0,0,-0.5"}
        run = load_run_config("qdelta", overrides=overrides, settings=settings)
        assert run.coeffs == [1.0, 0.0, -0.5]
        assert run.lam == 0

    def test_hbar_comes_from_settings(self, write_config):
        """Test that ħ defaults to the environment settings.

        Args:
            write_config: Helper writing YAML files.
        """
        run = load_run_config(
            "levels", write_config(MORSE_RUN), settings=Config(hbar=0.5)
        )
        assert run.hbar == 0.5

    def test_reference_inherits_run_hbar(self, write_config, settings):
        """Test that the compare reference uses the run's ħ unless it sets one.

        Args:
            write_config: Helper writing YAML files.
            settings: Default numerical settings.
        """
        run_path = write_config("type: morse\nV_m: 8\na: 0.25\nr_m: 3\nhbar: 0.5\n")
        ref_path = write_config("type: vibrational-series\nomega: 1\nV_m: 8\n", "ref.yaml")
        run = load_run_config("compare", run_path, reference_path=ref_path, settings=settings)
        assert isinstance(run.reference.potential, VibrationalSeries)
        assert run.reference.hbar == 0.5


# --- diagnostics ---


class TestConfigDiagnostics:
    """Tests for ConfigError line and field reporting."""

    def test_unknown_key_reports_line(self, write_config, settings):
        """Test that an unknown key names its line.

        Args:
            write_config: Helper writing YAML files.
            settings: Default numerical settings.
        """
        path = write_config("type: morse\nV_m: 8\nalpha: 1\n")
        with pytest.raises(ConfigError) as info:
            load_run_config("levels", path, settings=settings)
        assert info.value.line == 3
        assert info.value.field == "alpha"
        assert str(info.value).startswith("line 3: alpha: ")

    def test_duplicate_key(self, write_config, settings):
        """Test that a repeated key is rejected at its second line.

        Args:
            write_config: Helper writing YAML files.
            settings: Default numerical settings.
        """
        path = write_config("type: morse\nV_m: 8\nV_m: 9\na: 1\n")
        with pytest.raises(ConfigError) as info:
            load_run_config("levels", path, settings=settings)
        assert info.value.line == 3

    def test_invalid_value_names_field_and_line(self, write_config, settings):
        """Test that a pydantic failure is mapped back to its key.

        Args:
            write_config: Helper writing YAML files.
            settings: Default numerical settings.
        """
        path = write_config("type: morse\nV_m: -8\na: 1\n")
        with pytest.raises(ConfigError) as info:
            load_run_config("levels", path, settings=settings)
        assert info.value.field == "V_m"
        assert info.value.line == 2

    def test_unknown_type(self, write_config, settings):
        """Test that an unknown model name is reported against ``type``.

        Args:
            write_config: Helper writing YAML files.
            settings: Default numerical settings.
        """
        path = write_config("type: yukawa\nomega: 1\n")
        with pytest.raises(ConfigError) as info:
            load_run_config("levels", path, settings=settings)
        assert info.value.field == "type"

    def test_parameters_without_type(self, write_config, settings):
        """Test that potential parameters need a model name.

        Args:
            write_config: Helper writing YAML files.
            settings: Default numerical settings.
        """
        path = write_config("omega: 1\nn_max: 2\n")
        with pytest.raises(ConfigError) as info:
            load_run_config("levels", path, settings=settings)
        assert info.value.field == "omega"
        assert info.value.line == 1

    def test_malformed_yaml(self, write_config, settings):
        """Test that a YAML syntax error becomes a ConfigError.

        Args:
            write_config: Helper writing YAML files.
            settings: Default numerical settings.
        """
        path = write_config("type: morse\nV_m: [8\n")
        with pytest.raises(ConfigError):
            load_run_config("levels", path, settings=settings)

    def test_non_mapping_document(self, write_config, settings):
        """Test that a top-level list is rejected.

        Args:
            write_config: Helper writing YAML files.
            settings: Default numerical settings.
        """
        path = write_config("- type\n- morse\n")
        with pytest.raises(ConfigError, match="flat"):
            load_run_config("levels", path, settings=settings)

    def test_nested_mapping_rejected(self, write_config, settings):
        """Test that nested mappings are not part of the grammar.

        Args:
            write_config: Helper writing YAML files.
            settings: Default numerical settings.
        """
        path = write_config("type: morse\nV_m:\n  value: 8\n")
        with pytest.raises(ConfigError) as info:
            load_run_config("levels", path, settings=settings)
        assert info.value.field == "V_m"

    def test_missing_file(self, tmp_path, settings):
        """Test that a missing config file is a ConfigError.

        Args:
            tmp_path: Pytest temporary directory.
            settings: Default numerical settings.
        """
        with pytest.raises(ConfigError, match="not found"):
            load_run_config("levels", tmp_path / "absent.yaml", settings=settings)

    def test_output_directory_must_exist(self, write_config, tmp_path, settings):
        """Test that the output parent is checked before computing.

        Args:
            write_config: Helper writing YAML files.
            tmp_path: Pytest temporary directory.
            settings: Default numerical settings.
        """
        target = tmp_path / "missing" / "out.csv"
        with pytest.raises(ConfigError) as info:
            load_run_config(
                "levels", write_config(MORSE_RUN), {"output": target}, settings=settings
            )
        assert info.value.field == "output"

    def test_bad_list_value(self, settings):
        """Test that a non-numeric list entry is rejected.

        Args:
            settings: Default numerical settings.
        """
        with pytest.raises(ConfigError) as info:
            load_run_config(
                "qdelta", overrides={"lam": 0, "coeffs": "1,x"}, settings=settings
            )
        assert info.value.field == "coeffs"


# --- load_source ---


class TestLoadSource:
    """Tests for load_source."""

    def test_load_source_rejects_run_keys(self, write_config):
        """Test that a reference file may not carry run keys.

        Args:
            write_config: Helper writing YAML files.
        """
        path = write_config("type: morse\nV_m: 8\na: 1\nn_max: 3\n", "ref.yaml")
        with pytest.raises(ConfigError) as info:
            load_source(path)
        assert info.value.field == "n_max"

    def test_load_source_series_with_level_count(self, write_config):
        """Test a vibrational series limited to its bound levels.

        Args:
            write_config: Helper writing YAML files.
        """
        path = write_config(
            "type: vibrational-series\nomega: 1\nV_m: 8\nc2: -0.03125\nn_levels: 16\n",
            "ref.yaml",
        )
        source = load_source(path, hbar=1.0)
        assert source.potential == VibrationalSeries(
            omega=1.0, V_m=8.0, c2=-0.03125, n_levels=16
        )

    def test_load_source_keeps_own_hbar(self, write_config):
        """Test that a value in the file wins over the passed ħ.

        Args:
            write_config: Helper writing YAML files.
        """
        path = write_config("type: centered-harmonic\nomega: 2\nhbar: 0.25\n", "ref.yaml")
        assert load_source(path, hbar=1.0).hbar == 0.25
