"""
Module Name: setup_logging

Logging for the Skorokhod toolkit.

Everything goes to a rotating file under the log directory. Warnings and
errors are also echoed on stderr, which leaves stdout to the command results.
The solver packages (src.metric, src.completion) log every refinement level at
DEBUG, so they get their own level: a run can trace the bound search without
turning the whole application to DEBUG.

Example:
    >>> from src.utils.setup_logging import setup_logging
    >>> setup_logging("INFO", solver_level="DEBUG")
    >>> logging.getLogger("src.metric.bounds").debug("Level %d", 3)
"""

import logging.config
import sys
import time

from pathlib import Path
from typing import Dict, Final, Optional

from src.errors.core import LoggingSetupError

LOG_DIR_NAME: Final[str] = "logs"
LOG_FILE_NAME: Final[str] = "application.log"
LOG_FORMAT: Final[str] = "%(asctime)s.%(msecs)03d [%(levelname)-8s] %(name)s:%(lineno)d - %(message)s"
LOG_DATE_FORMAT: Final[str] = "%Y-%m-%dT%H:%M:%S%z"
LOG_MAX_BYTES: Final[int] = 10 * 1024 * 1024
LOG_BACKUP_COUNT: Final[int] = 5
LOG_LEVELS: Final[tuple] = ("DEBUG", "INFO", "WARNING", "ERROR", "CRITICAL")
SOLVER_LOGGERS: Final[tuple] = ("src.metric", "src.completion")


def get_log_dir(project_root: Optional[Path] = None, directory: str = LOG_DIR_NAME) -> Path:
    """
    Creates the log directory if needed.

    Args:
        project_root (Path, optional): Base for a relative `directory`. Defaults to the working directory.
        directory (str): Log directory, relative to project_root unless absolute.

    Returns:
        Path: The log directory.

    Raises:
        LoggingSetupError: If the directory cannot be created.
    """
    log_dir = Path(directory)
    if not log_dir.is_absolute():
        log_dir = (project_root or Path.cwd()) / log_dir
    try:
        log_dir.mkdir(parents=True, exist_ok=True)
    except OSError as e:
        raise LoggingSetupError(f"Failed to create log directory {log_dir}: {e}") from e
    return log_dir


def _check_level(name: str, level: Optional[str]) -> None:
    if level is not None and level not in LOG_LEVELS:
        raise LoggingSetupError(f"Invalid {name}: {level!r} (expected one of {', '.join(LOG_LEVELS)})")


def get_logging_config(log_file_path: Path, log_level: str, solver_level: Optional[str] = None) -> Dict:
    """
    dictConfig for the toolkit.

    Args:
        log_file_path (Path): The rotating log file.
        log_level (str): Root level.
        solver_level (Optional[str]): Level of the solver loggers; the root level when None.

    Returns:
        Dict: Configuration for `logging.config.dictConfig`.
    """
    loggers = {
        "": {"handlers": ["rotating_file", "stderr"], "level": log_level},
        # matplotlib's font manager floods DEBUG
        "matplotlib": {"level": "WARNING"},
    }
    for name in SOLVER_LOGGERS:
        loggers[name] = {"level": solver_level or log_level}
    return {
        "version": 1,
        "disable_existing_loggers": False,
        "formatters": {
            "standard": {"format": LOG_FORMAT, "datefmt": LOG_DATE_FORMAT},
        },
        "handlers": {
            "rotating_file": {
                "class": "logging.handlers.RotatingFileHandler",
                "level": "DEBUG",
                "formatter": "standard",
                "filename": str(log_file_path),
                "encoding": "utf-8",
                "maxBytes": LOG_MAX_BYTES,
                "backupCount": LOG_BACKUP_COUNT,
                "delay": True,
            },
            "stderr": {
                "class": "logging.StreamHandler",
                "level": "WARNING",
                "formatter": "standard",
                "stream": sys.stderr,
            },
        },
        "loggers": loggers,
    }


def setup_logging(
    log_level: str,
    project_root: Optional[Path] = None,
    solver_level: Optional[str] = None,
    directory: str = LOG_DIR_NAME,
) -> Path:
    """
    Configures logging for a run.

    Args:
        log_level (str): Root level, one of LOG_LEVELS.
        project_root (Path, optional): Base of a relative log directory.
        solver_level (Optional[str]): Separate level for the solver packages.
        directory (str): Log directory.

    Returns:
        Path: The log file in use.

    Raises:
        LoggingSetupError: If a level is invalid or the configuration cannot be applied.
    """
    _check_level("log level", log_level)
    _check_level("solver log level", solver_level)
    log_file = get_log_dir(project_root, directory) / LOG_FILE_NAME
    try:
        logging.config.dictConfig(get_logging_config(log_file, log_level, solver_level))
    except (ValueError, TypeError, AttributeError, ImportError) as e:
        raise LoggingSetupError(f"Error setting up logging system: {e}") from e
    logging.Formatter.converter = time.localtime
    logging.getLogger(__name__).info(
        "Logging to %s (level %s, solver level %s)", log_file, log_level, solver_level or log_level
    )
    return log_file
