"""
Module Name: solver_config

Skorofile handling.

A Skorofile is the YAML form of `SkoroConfig`: solver tolerances and the
refinement schedule, artifact settings, logging and optional metadata. Missing
sections take their defaults. A `.env` file next to the working directory is
read through python-dotenv; SKORO_CONFIG picks the Skorofile and
SKORO_OUTPUT_DIR replaces the artifact directory.

Example:
    >>> from src.config.solver_config import ConfigManager, resolve_config_path
    >>> manager = ConfigManager(config_path=resolve_config_path())
    >>> solver = manager.solver_settings(tolerance=1e-4)

Dependencies:
    - yaml
    - pydantic
    - python-dotenv
"""

import logging
import os
from typing import Optional

import yaml
from dotenv import load_dotenv
from pydantic import ValidationError

from src.models.config import SkoroConfig, SolverConfig

OUTPUT_DIR_ENV = "SKORO_OUTPUT_DIR"
CONFIG_PATH_ENV = "SKORO_CONFIG"
DEFAULT_CONFIG_FILE = "Skorofile"


def resolve_config_path(explicit: Optional[str] = None) -> Optional[str]:
    """
    Chooses the Skorofile: an explicit path, then $SKORO_CONFIG, then ./Skorofile if present.

    Returns:
        Optional[str]: The path to load, or None for the built-in defaults.
    """
    load_dotenv()
    if explicit:
        return explicit
    from_env = os.getenv(CONFIG_PATH_ENV)
    if from_env:
        return from_env
    return DEFAULT_CONFIG_FILE if os.path.isfile(DEFAULT_CONFIG_FILE) else None


def read_skorofile(path: str) -> SkoroConfig:
    """
    Parses and validates a Skorofile.

    Args:
        path (str): The Skorofile.

    Returns:
        SkoroConfig: The validated configuration.

    Raises:
        FileNotFoundError: If the file does not exist.
        yaml.YAMLError: If the file is not YAML.
        ValidationError: If a setting is out of range, e.g. a grid that does not divide [0,1].
    """
    with open(path, "r", encoding="utf-8") as f:
        raw = yaml.safe_load(f) or {}
    return SkoroConfig.model_validate(raw)


class ConfigManager:
    """
    Holds the configuration of one run.

    The configuration comes from, in order of preference, an explicit
    `SkoroConfig`, a Skorofile, or the defaults. Environment overrides are
    applied afterwards in every case.
    """

    def __init__(self, config_path: Optional[str] = None, config: Optional[SkoroConfig] = None):
        """
        Args:
            config_path (Optional[str]): Skorofile to read when `config` is not given.
            config (Optional[SkoroConfig]): A ready configuration.

        Raises:
            FileNotFoundError: If `config_path` does not exist.
            yaml.YAMLError: If the Skorofile is not YAML.
            ValidationError: If the Skorofile holds invalid settings.
        """
        self.logger = logging.getLogger(__name__)
        self._config_path = config_path
        if config is not None:
            self._config = config
            source = "caller"
        elif config_path:
            try:
                self._config = read_skorofile(config_path)
            except FileNotFoundError:
                self.logger.error("Skorofile not found: %s", config_path)
                raise
            except ValidationError as e:
                self.logger.error("Skorofile %s rejected: %d invalid setting(s)", config_path, e.error_count())
                raise
            source = config_path
        else:
            self._config = SkoroConfig()
            source = "defaults"
        self._apply_environment()
        self.logger.info(
            "Configuration from %s: tolerance %g, initial grid %g, %d levels",
            source,
            self._config.solver.tolerance,
            self._config.solver.initial_grid,
            self._config.solver.max_levels,
        )

    def _apply_environment(self) -> None:
        load_dotenv()
        output_dir = os.getenv(OUTPUT_DIR_ENV)
        if output_dir:
            self.logger.info("%s overrides the artifact directory: %s", OUTPUT_DIR_ENV, output_dir)
            self._config.output.directory = output_dir

    def get_config(self) -> SkoroConfig:
        return self._config

    def update_config(self, new_config: SkoroConfig) -> None:
        self._config = new_config

    def solver_settings(self, **overrides) -> SolverConfig:
        """
        Solver settings with per-call overrides, e.g. a `tolerance` from the command line.

        Unset (None) overrides are ignored. The result is validated like a Skorofile section.

        Raises:
            ValidationError: If an override is out of range.
        """
        changes = {key: value for key, value in overrides.items() if value is not None}
        if not changes:
            return self._config.solver
        return SolverConfig(**{**self._config.solver.model_dump(), **changes})

    def save_config(self, path: Optional[str] = None) -> None:
        """
        Writes the configuration as a Skorofile.

        Args:
            path (Optional[str]): Target; defaults to the Skorofile it was read from.

        Raises:
            ValueError: If there is neither a path nor an original Skorofile.
            IOError: If the file cannot be written.
        """
        save_path = path or self._config_path
        if not save_path:
            raise ValueError("No path specified for saving configuration")
        try:
            with open(save_path, "w", encoding="utf-8") as f:
                yaml.safe_dump(self._config.model_dump(mode="json", exclude_none=True), f, sort_keys=False)
        except IOError as e:
            self.logger.error("Cannot write Skorofile %s: %s", save_path, e)
            raise IOError(f"Error saving configuration to {save_path}: {e}") from e
        self.logger.info("Skorofile written to %s", save_path)

    def close(self) -> None:
        self.logger.debug("ConfigManager closed")
