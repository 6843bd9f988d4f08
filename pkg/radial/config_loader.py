"""Parse flat YAML run configurations into validated RunConfig models."""

from pathlib import Path
from typing import Any

import yaml
from pydantic import ValidationError

from radial.config import Config
from radial.errors import ConfigError
from radial.models import RunConfig, SourceConfig

POTENTIAL_KEYS = frozenset(
    {"m", "omega", "r_m", "V_m", "a", "C", "coefficients", "c2", "c3", "n_levels"}
)
SOURCE_KEYS = frozenset({"hbar", "ell", "bc", "method", "h"})
RUN_KEYS = frozenset({"n", "n_max", "tol", "output", "format"})
LIST_KEYS = frozenset({"coefficients", "coeffs", "rm_list"})

_FIELD_NAMES = {"kind": "type", "potential": "type", "lam": "lambda"}


def _read_mapping(path: Path, allowed: frozenset[str]) -> tuple[dict, dict[str, int]]:
    """Read a flat ``key: value`` YAML document.

    Args:
        path: Configuration file.
        allowed: Keys the document may contain.

    Returns:
        ``(values, lines)`` where ``lines`` maps each key to its 1-based line.
    """
    if not path.is_file():
        raise ConfigError(f"file not found: {path}")
    text = path.read_text()
    try:
        node = yaml.compose(text)
    except yaml.YAMLError as exc:
        mark = getattr(exc, "problem_mark", None)
        line = mark.line + 1 if mark is not None else None
        raise ConfigError(f"{path}: invalid YAML ({exc})", line=line) from exc
    if node is None:
        return {}, {}
    if not isinstance(node, yaml.MappingNode):
        raise ConfigError(
            f"{path}: expected a flat 'key: value' mapping", line=node.start_mark.line + 1
        )
    lines = {}
    for key_node, value_node in node.value:
        key, line = str(key_node.value), key_node.start_mark.line + 1
        if key not in allowed:
            raise ConfigError(f"unknown key in {path}", line=line, field=key)
        if key in lines:
            raise ConfigError(f"duplicate key in {path}", line=line, field=key)
        if isinstance(value_node, yaml.MappingNode):
            raise ConfigError("nested mappings are not allowed", line=line, field=key)
        lines[key] = line
    return yaml.safe_load(text), lines


def _split_list(value: Any, key: str, line: int | None) -> list[float]:
    """Accept a YAML list, a single number or a comma-separated string.

    Args:
        value: Raw value.
        key: Key name for diagnostics.
        line: Source line for diagnostics.

    Returns:
        List of floats.
    """
    if isinstance(value, str):
        items = [part.strip() for part in value.split(",") if part.strip()]
    elif isinstance(value, list):
        items = value
    else:
        items = [value]
    try:
        return [float(item) for item in items]
    except (TypeError, ValueError) as exc:
        raise ConfigError(f"expected numbers, got {value!r}", line=line, field=key) from exc


def _assemble(flat: dict, lines: dict[str, int]) -> dict:
    """Nest potential parameters under ``potential`` and parse list values.

    Args:
        flat: Flat key/value mapping.
        lines: Key lines for diagnostics.

    Returns:
        Mapping shaped like SourceConfig / RunConfig.
    """
    data = {}
    params = {}
    for key, value in flat.items():
        if key in LIST_KEYS:
            value = _split_list(value, key, lines.get(key))
        if key in POTENTIAL_KEYS:
            params[key] = value
        elif key != "type":
            data[key] = value
    if "type" in flat:
        data["potential"] = {"kind": flat["type"], **params}
    elif params:
        key = next(iter(params))
        raise ConfigError("potential parameter given without 'type'", lines.get(key), key)
    return data


def _raise_validation(exc: ValidationError, lines: dict[str, int], origin: str) -> None:
    """Convert the first pydantic error into a ConfigError naming line and field.

    Args:
        exc: Validation failure.
        lines: Key lines of the file the data came from.
        origin: File or ``flags`` label used in the message.
    """
    first = exc.errors()[0]
    names = [_FIELD_NAMES.get(str(part), str(part)) for part in first["loc"]]
    names = [name for name in names if name not in ("reference",)]
    field = next((name for name in reversed(names) if name in lines), None)
    if field is None and names:
        field = names[-1]
    raise ConfigError(
        f"{first['msg']} ({origin})", line=lines.get(field), field=field
    ) from exc


def load_source(path: Path, hbar: float | None = None) -> SourceConfig:
    """Load a level-source file such as the ``compare`` reference.

    Args:
        path: YAML file with ``type``, potential parameters and solver keys.
        hbar: Value of ħ used when the file does not set one.

    Returns:
        Validated SourceConfig.
    """
    flat, lines = _read_mapping(path, POTENTIAL_KEYS | SOURCE_KEYS | {"type"})
    data = _assemble(flat, lines)
    if hbar is not None:
        data.setdefault("hbar", hbar)
    try:
        return SourceConfig.model_validate(data)
    except ValidationError as exc:
        _raise_validation(exc, lines, str(path))


def load_run_config(
    command: str,
    config_path: Path | None = None,
    overrides: dict | None = None,
    reference_path: Path | None = None,
    settings: Config | None = None,
) -> RunConfig:
    """Merge a run file with command-line overrides and validate it.

    Flags shadow file values. Nothing is computed until this returns.

    Args:
        command: Subcommand name.
        config_path: Optional YAML run file.
        overrides: Flag values keyed like the file; ``None`` values are ignored.
        reference_path: Optional reference-source file for ``compare``.
        settings: Environment defaults supplying ħ.

    Returns:
        Validated RunConfig.
    """
    settings = settings or Config()
    flat, lines = {}, {}
    if config_path is not None:
        allowed = POTENTIAL_KEYS | SOURCE_KEYS | RUN_KEYS | {"type"}
        flat, lines = _read_mapping(config_path, allowed)
    for key, value in (overrides or {}).items():
        if value is not None:
            flat[key] = value
            lines.pop(key, None)
    data = _assemble(flat, lines)
    data["command"] = command
    data.setdefault("hbar", settings.hbar)
    if reference_path is not None:
        data["reference"] = load_source(reference_path, data["hbar"])
    output = data.get("output")
    if output is not None and not Path(output).parent.is_dir():
        raise ConfigError(
            f"directory of {output} does not exist", lines.get("output"), "output"
        )
    try:
        return RunConfig.model_validate(data)
    except ValidationError as exc:
        _raise_validation(exc, lines, str(config_path or "flags"))
