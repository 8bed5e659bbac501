"""
Module: config

Defines the configuration models for the Skorokhod completion toolkit.

This module provides Pydantic models to structure, validate, and manage
configuration data loaded from a Skorofile (YAML). The configuration
includes solver tolerances and refinement schedule, output settings,
logging, and metadata.

Example:
    >>> from src.models.config import SkoroConfig
    >>> config = SkoroConfig.model_validate(yaml.safe_load(open("Skorofile")))
    >>> print(config.solver.tolerance)

Dependencies:
    - pydantic
    - typing
    - datetime
"""

from datetime import datetime
from typing import Literal, Optional, Tuple

from pydantic import BaseModel, Field, validator


class SolverConfig(BaseModel):
    """
    Settings of the distance solvers.

    Attributes:
        tolerance (float): Default gap (upper - lower) at which refinement stops.
        initial_grid (float): Grid resolution of the first refinement level.
        max_levels (int): Maximum number of grid-halving levels.
        node_tolerance (float): Node times or values closer than this are merged.
        numeric_slack (float): Absolute slack added to budgets inside the free-space engine.
        ladder_size (int): Number of value-budget intervals probed on the first level.
        probes_per_level (int): Cap on the value-budget probes that refine the frontier on one level.
        lower_bound_max_samples (int): Cap on samples per axis of the sampled-sup relaxation.
        decision_grid (float): Grid used by the decision engine inside the bound search.
        min_decision_grid (float): Finest uniform grid rho_plus_decision adds to the node cells.
        equivalence_threshold (float): Lower bound above which two turbofunctions are inequivalent.
    """
    tolerance: float = Field(1e-6, gt=0.0)
    initial_grid: float = Field(1.0 / 16.0, gt=0.0, le=1.0)
    max_levels: int = Field(12, ge=1, le=24)
    node_tolerance: float = Field(1e-9, gt=0.0, lt=1e-3)
    numeric_slack: float = Field(1e-12, ge=0.0, lt=1e-6)
    ladder_size: int = Field(16, ge=2)
    probes_per_level: int = Field(64, ge=1)
    lower_bound_max_samples: int = Field(512, ge=8)
    decision_grid: float = Field(1.0, gt=0.0, le=1.0)
    min_decision_grid: float = Field(1.0 / 256.0, gt=0.0, le=1.0)
    equivalence_threshold: float = Field(1e-7, gt=0.0)

    @validator('initial_grid', 'decision_grid', 'min_decision_grid')
    def validate_dyadic_grid(cls, v):
        """
        Validates that a grid step divides the unit interval.

        Args:
            v (float): The grid step to validate

        Returns:
            float: The validated grid step

        Raises:
            ValueError: If 1/v is not (close to) an integer
        """
        cells = 1.0 / v
        if abs(cells - round(cells)) > 1e-9:
            raise ValueError("Grid step must divide [0,1] into an integer number of cells")
        return v

    class Config:
        """Pydantic configuration for SolverConfig"""
        from_attributes = True
        validate_assignment = True
        frozen = True


class OutputConfig(BaseModel):
    """
    Settings for artifacts written by the command line.

    Attributes:
        directory (str): Default directory for demo artifacts.
        csv_samples (int): Uniform sampling grid of CSV exports (nodes are always added).
        figure_size (Tuple[float, float]): SVG figure size in inches.
    """
    directory: str = "artifacts"
    csv_samples: int = Field(1024, ge=2)
    figure_size: Tuple[float, float] = (8.0, 4.5)

    @validator('directory')
    def validate_non_empty_string(cls, v):
        """
        Validates that the directory is not empty or whitespace.

        Args:
            v (str): The string value to validate

        Returns:
            str: The validated string

        Raises:
            ValueError: If the string is empty or only whitespace
        """
        if not v or not v.strip():
            raise ValueError("Output directory cannot be empty or whitespace")
        return v

    class Config:
        """Pydantic configuration for OutputConfig"""
        from_attributes = True
        validate_assignment = True


class LoggingConfig(BaseModel):
    """
    Logging settings.

    Attributes:
        level (Literal): Root logging level.
        solver_level (Optional[Literal]): Level of the solver packages; the root level when unset.
        directory (str): Log directory, relative to the working directory unless absolute.
    """
    level: Literal["DEBUG", "INFO", "WARNING", "ERROR", "CRITICAL"] = "INFO"
    solver_level: Optional[Literal["DEBUG", "INFO", "WARNING", "ERROR", "CRITICAL"]] = None
    directory: str = "logs"

    class Config:
        """Pydantic configuration for LoggingConfig"""
        from_attributes = True
        validate_assignment = True


class MetaConfig(BaseModel):
    """
    Metadata for configuration creation and versioning.

    Attributes:
        created_by (str): Author of the configuration.
        created_at (str): ISO date of creation.
        last_updated (str): ISO date of last update.
    """
    created_by: str
    created_at: str
    last_updated: str

    @validator('created_by')
    def validate_non_empty_string(cls, v):
        """
        Validates that string fields are not empty or whitespace.

        Args:
            v (str): The string value to validate

        Returns:
            str: The validated string

        Raises:
            ValueError: If the string is empty or only whitespace
        """
        if not v or not v.strip():
            raise ValueError("Author name cannot be empty or whitespace")
        return v

    @validator('created_at', 'last_updated')
    def validate_date_format(cls, v):
        """
        Validates date strings are in YYYY-MM-DD format.

        Args:
            v (str): The date string to validate

        Returns:
            str: The validated date string

        Raises:
            ValueError: If the date string is improperly formatted
        """
        if not v or not v.strip():
            raise ValueError("Date cannot be empty or whitespace")

        try:
            datetime.strptime(v, "%Y-%m-%d")
        except ValueError:
            raise ValueError("Date must be in YYYY-MM-DD format")
        return v

    class Config:
        """Pydantic configuration for MetaConfig"""
        from_attributes = True
        validate_assignment = True


class SkoroConfig(BaseModel):
    """
    Root configuration model.

    Attributes:
        solver (SolverConfig): Tolerances and refinement schedule.
        output (OutputConfig): Artifact settings.
        logging (LoggingConfig): Logging settings.
        meta (Optional[MetaConfig]): Metadata about the config file.
    """
    solver: SolverConfig = Field(default_factory=SolverConfig)
    output: OutputConfig = Field(default_factory=OutputConfig)
    logging: LoggingConfig = Field(default_factory=LoggingConfig)
    meta: Optional[MetaConfig] = None

    class Config:
        """Pydantic configuration for SkoroConfig"""
        from_attributes = True
        validate_assignment = True


DEFAULT_SOLVER = SolverConfig()
