"""
Module: skorokhod_service

The service layer of the Skorokhod completion toolkit.

This module provides the SkorokhodService class which handles:
- Configuration management
- Logging setup
- Dispatching the distance, visualization, equivalence and demo commands

Example:
    >>> from src.services.skorokhod_service import SkorokhodService
    >>> service = SkorokhodService().initialize()
    >>> result = service.rho("f.yaml", "g.yaml", tol=1e-4)
    >>> print("\\n".join(result.lines))
    >>> service.shutdown()

Dependencies:
    - src.cli
    - src.config.solver_config
    - src.utils.setup_logging
"""

import logging
from pathlib import Path
from typing import Optional, Sequence

import yaml
from pydantic import ValidationError

from src.cli.commands import cmd_canonical, cmd_equiv, cmd_instantons, cmd_rho, cmd_rho_plus, cmd_visualize
from src.cli.demo import DEFAULT_THETAS, cmd_demo_triangle
from src.config.solver_config import ConfigManager, resolve_config_path
from src.errors.core import ApplicationError, DocumentError, OutputError
from src.models import SkoroConfig
from src.models.report import CommandResult
from src.utils.setup_logging import setup_logging


class SkorokhodService:
    """
    Entry point for applications using the toolkit.

    Owns the configuration and the logging setup and runs the commands with it.
    """

    def __init__(self, config_path: Optional[str] = None):
        """
        Args:
            config_path (Optional[str]): Skorofile to load; when omitted SKORO_CONFIG or a
                Skorofile in the working directory is used, else the defaults.
        """
        self.config_path = resolve_config_path(config_path)
        self.config_manager: Optional[ConfigManager] = None
        self.config: Optional[SkoroConfig] = None
        self.logger = logging.getLogger(__name__)

    def initialize(self, log_level: Optional[str] = None) -> "SkorokhodService":
        """
        Loads the configuration and sets up logging.

        Args:
            log_level (Optional[str]): Overrides the configured log level.

        Returns:
            SkorokhodService: Self reference for method chaining.

        Raises:
            DocumentError: If the configuration file is malformed or invalid.
            OutputError: If the configuration file cannot be read.
            LoggingSetupError: If the log level is invalid or the log directory cannot be created.
        """
        try:
            self.config_manager = ConfigManager(config_path=self.config_path)
        except OSError as e:
            raise OutputError(f"Cannot read configuration {self.config_path}: {e}") from e
        except (yaml.YAMLError, ValidationError) as e:
            raise DocumentError(f"Invalid configuration {self.config_path}: {e}") from e
        self.config = self.config_manager.get_config()
        setup_logging(
            log_level=log_level or self.config.logging.level,
            project_root=Path().absolute(),
            solver_level=self.config.logging.solver_level,
            directory=self.config.logging.directory,
        )
        self.logger.info("SkorokhodService initialized (config: %s)", self.config_path or "defaults")
        return self

    def _run(self, name: str, command, *args) -> CommandResult:
        if self.config is None:
            raise RuntimeError("SkorokhodService.initialize() must be called first")
        self.logger.info("Running %s %s", name, args)
        try:
            result = command(*args, self.config)
        except ApplicationError as e:
            self.logger.error("%s failed: %s", name, e)
            raise
        self.logger.info("%s finished with exit code %d", name, result.exit_code)
        return result

    def rho(self, file_f: str, file_g: str, tol: Optional[float] = None, exact: bool = False) -> CommandResult:
        return self._run("rho", cmd_rho, file_f, file_g, tol, exact)

    def rho_plus(self, file_x: str, file_y: str, tol: Optional[float] = None) -> CommandResult:
        return self._run("rho-plus", cmd_rho_plus, file_x, file_y, tol)

    def visualize(self, file_x: str, svg: Optional[str] = None, csv: Optional[str] = None) -> CommandResult:
        return self._run("visualize", cmd_visualize, file_x, svg, csv)

    def instantons(self, file_x: str) -> CommandResult:
        return self._run("instantons", cmd_instantons, file_x)

    def canonical(self, file_x: str, out: Optional[str] = None) -> CommandResult:
        return self._run("canonical", cmd_canonical, file_x, out)

    def equiv(self, file_x: str, file_y: str) -> CommandResult:
        return self._run("equiv", cmd_equiv, file_x, file_y)

    def demo_triangle(
        self,
        thetas: Sequence[float] = DEFAULT_THETAS,
        tol: Optional[float] = None,
        outdir: Optional[str] = None,
    ) -> CommandResult:
        """
        Runs the triangle demonstration.

        Args:
            thetas (Sequence[float]): Increasing θ values above 2.
            tol (Optional[float]): Defaults to the configured solver tolerance.
            outdir (Optional[str]): Defaults to the configured output directory.
        """
        tol = self.config_manager.solver_settings().tolerance if tol is None else tol
        outdir = outdir or self.config.output.directory
        return self._run("demo-triangle", cmd_demo_triangle, list(thetas), tol, outdir)

    def shutdown(self) -> None:
        """Releases the configuration manager."""
        if self.config_manager is not None:
            self.config_manager.close()
            self.config_manager = None
        self.logger.info("SkorokhodService shut down")

    def close(self) -> None:
        """Alias for shutdown()."""
        self.shutdown()
