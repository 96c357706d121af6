"""Configuration loading and validation for alm_morph runs."""

import json
import yaml
from pathlib import Path
from typing import Any, Dict, Optional
from dataclasses import dataclass, field

from .alm import OctetPair, default_octet_pair
from .exceptions import ConfigurationError, FormatError
from .formats.text import read_octet_pair

DIFFUSION_MODES = ('ids', 'thicken')
EXTRACTION_MODES = ('cog', 'thin')
OUTPUT_MODES = ('quiet', 'monitor', 'debug')

DEFAULTS: Dict[str, Any] = {
    'nx': 64,
    'ny': 64,
    'radius': 1,
    'radius_units': None,
    'height': 1,
    'diffusion': 'ids',
    'extraction': 'cog',
    'tau': 1,
    'thicken_passes': 1,
    'gap_threshold': None,
    'max_passes': None,
    'seed': 0,
    'octet_file': None,
    'output_dir': 'output',
    'mode': 'quiet',
}


@dataclass
class RunConfig:
    """Complete pipeline run configuration."""
    nx: int = 64
    ny: int = 64
    radius: int = 1  # spread radius in cells
    radius_units: Optional[float] = None  # spread radius in input units, overrides radius
    height: int = 1
    diffusion: str = 'ids'  # 'ids' or 'thicken'
    extraction: str = 'cog'  # 'cog' or 'thin'
    tau: int = 1  # binarization threshold
    thicken_passes: int = 1
    gap_threshold: Optional[int] = None  # defaults to the structuring element radius
    max_passes: Optional[int] = None  # defaults to width + height
    seed: int = 0  # recorded in results and summary.json; fitting draws no random numbers
    octet_file: Optional[str] = None
    output_dir: str = 'output'
    mode: str = 'quiet'  # Output mode: 'quiet', 'monitor', or 'debug'
    raw_config: Dict[str, Any] = field(default_factory=dict)

    def octet_pair(self) -> OctetPair:
        """
        Thinning and thickening octets: from octet_file, or the defaults.

        Raises:
            ConfigurationError: If the octet file cannot be used
        """
        if self.octet_file is None:
            return default_octet_pair()
        try:
            return OctetPair(*read_octet_pair(self.octet_file))
        except FormatError as e:
            raise ConfigurationError(f"Invalid octet_file: {e}") from e


def _parse_key_value(text: str) -> Dict[str, Any]:
    """key=value lines; '#' comments and blank lines are skipped, values typed by YAML."""
    raw = {}
    for number, line in enumerate(text.splitlines(), start=1):
        line = line.split('#', 1)[0].strip()
        if not line:
            continue
        if '=' not in line:
            raise ConfigurationError(f"Line {number}: expected key=value, got '{line}'")
        key, value = (part.strip() for part in line.split('=', 1))
        raw[key] = yaml.safe_load(value) if value else None
    return raw


def load_config(config_path: str) -> RunConfig:
    """
    Load and validate configuration from a YAML, JSON or key=value file.

    Args:
        config_path: Path to configuration file

    Returns:
        Validated RunConfig object

    Raises:
        ConfigurationError: If file doesn't exist or configuration is invalid
    """
    path = Path(config_path)

    if not path.exists():
        raise ConfigurationError(f"Configuration file not found: {config_path}")

    try:
        text = path.read_text()
        suffix = path.suffix.lower()
        if suffix == '.json':
            raw_config = json.loads(text)
        elif suffix in ('.yaml', '.yml'):
            raw_config = yaml.safe_load(text)
        else:
            raw_config = _parse_key_value(text)
    except (json.JSONDecodeError, yaml.YAMLError) as e:
        raise ConfigurationError(f"Failed to parse configuration file: {e}") from e
    except ConfigurationError as e:
        raise ConfigurationError(f"Failed to parse configuration file {config_path}: {e}") from e
    except Exception as e:
        raise ConfigurationError(f"Failed to read configuration file: {e}") from e

    if raw_config is None:
        raw_config = {}
    if not isinstance(raw_config, dict):
        raise ConfigurationError("Configuration file must contain a mapping of settings")

    validate_config(raw_config)
    normalize_config(raw_config)
    return build_config(raw_config)


def _is_int(value) -> bool:
    return isinstance(value, int) and not isinstance(value, bool)


def _check_int(config: Dict[str, Any], key: str, minimum: int) -> None:
    value = config.get(key)
    if value is None:
        return
    if not _is_int(value) or value < minimum:
        raise ConfigurationError(f"{key} must be an integer >= {minimum}, got {value!r}")


def validate_config(config: Dict[str, Any]) -> None:
    """
    Validate configuration keys and values.

    Absent keys are allowed; they take their defaults in normalize_config.

    Args:
        config: Raw configuration dictionary

    Raises:
        ConfigurationError: If validation fails
    """
    unknown = sorted(set(config) - set(DEFAULTS))
    if unknown:
        raise ConfigurationError(f"Unknown configuration field(s): {', '.join(unknown)}")

    _check_int(config, 'nx', 2)
    _check_int(config, 'ny', 2)
    _check_int(config, 'radius', 0)
    _check_int(config, 'height', 1)
    _check_int(config, 'tau', 1)
    _check_int(config, 'thicken_passes', 0)
    _check_int(config, 'gap_threshold', 1)
    _check_int(config, 'max_passes', 1)

    seed = config.get('seed')
    if seed is not None and not _is_int(seed):
        raise ConfigurationError("seed must be an integer")

    radius_units = config.get('radius_units')
    if radius_units is not None:
        if isinstance(radius_units, bool) or not isinstance(radius_units, (int, float)) or radius_units < 0:
            raise ConfigurationError("radius_units must be a non-negative number")

    for key, allowed in (('diffusion', DIFFUSION_MODES), ('extraction', EXTRACTION_MODES),
                         ('mode', OUTPUT_MODES)):
        value = config.get(key)
        if value is not None and value not in allowed:
            choices = ", ".join(f"'{a}'" for a in allowed)
            raise ConfigurationError(f"{key} must be one of {choices}, got '{value}'")

    for key in ('octet_file', 'output_dir'):
        value = config.get(key)
        if value is not None and not isinstance(value, str):
            raise ConfigurationError(f"{key} must be a path string")

    octet_file = config.get('octet_file')
    if octet_file is not None and not Path(octet_file).exists():
        raise ConfigurationError(f"octet_file not found: {octet_file}")


def normalize_config(config: Dict[str, Any]) -> None:
    """
    Fill defaults in place.

    Args:
        config: Validated raw configuration dictionary (modified in place)
    """
    for key, default in DEFAULTS.items():
        if config.get(key) is None:
            config[key] = default
    if config['radius_units'] is not None:
        config['radius_units'] = float(config['radius_units'])


def build_config(raw_config: Dict[str, Any]) -> RunConfig:
    """
    Build RunConfig from a validated, normalized raw configuration.

    Args:
        raw_config: Validated and normalized configuration dictionary

    Returns:
        RunConfig object
    """
    values = {key: raw_config[key] for key in DEFAULTS}
    return RunConfig(**values, raw_config=dict(raw_config))


def default_config() -> RunConfig:
    """RunConfig with every field at its default."""
    raw: Dict[str, Any] = {}
    normalize_config(raw)
    return build_config(raw)


def merge_overrides(config: RunConfig, **flags: Any) -> RunConfig:
    """
    Apply command-line values over a loaded configuration.

    Flags set to None are treated as not given.

    Raises:
        ConfigurationError: If an override is invalid
    """
    raw = {key: getattr(config, key) for key in DEFAULTS}
    raw.update({key: value for key, value in flags.items() if value is not None})
    validate_config(raw)
    normalize_config(raw)
    return build_config(raw)
