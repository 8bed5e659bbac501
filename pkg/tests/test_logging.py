"""Tests for the logging setup."""

import logging

import pytest

from src.errors.core import LoggingSetupError
from src.utils.setup_logging import LOG_FILE_NAME, SOLVER_LOGGERS, get_logging_config, setup_logging


@pytest.fixture(autouse=True)
def restore_logging():
    root = logging.getLogger()
    handlers, level = root.handlers[:], root.level
    yield
    for handler in root.handlers:
        if handler not in handlers:
            handler.close()
    root.handlers[:] = handlers
    root.setLevel(level)
    for name in SOLVER_LOGGERS:
        logging.getLogger(name).setLevel(logging.NOTSET)


def test_solver_loggers_follow_root_level_by_default(tmp_path):
    config = get_logging_config(tmp_path / LOG_FILE_NAME, "WARNING")
    for name in SOLVER_LOGGERS:
        assert config["loggers"][name]["level"] == "WARNING"
    assert config["loggers"][""]["level"] == "WARNING"


def test_separate_solver_level(tmp_path):
    config = get_logging_config(tmp_path / LOG_FILE_NAME, "INFO", solver_level="DEBUG")
    assert config["loggers"]["src.metric"]["level"] == "DEBUG"
    assert config["loggers"]["src.completion"]["level"] == "DEBUG"
    assert config["loggers"][""]["level"] == "INFO"
    assert config["handlers"]["stderr"]["level"] == "WARNING"


def test_setup_writes_into_the_configured_directory(tmp_path):
    log_file = setup_logging("INFO", project_root=tmp_path, solver_level="DEBUG", directory="runs")
    assert log_file == tmp_path / "runs" / LOG_FILE_NAME
    assert log_file.exists()
    assert logging.getLogger("src.metric.bounds").isEnabledFor(logging.DEBUG)
    assert not logging.getLogger("src.cli.commands").isEnabledFor(logging.DEBUG)


def test_absolute_directory_ignores_project_root(tmp_path):
    target = tmp_path / "absolute"
    log_file = setup_logging("WARNING", project_root=tmp_path / "elsewhere", directory=str(target))
    assert log_file.parent == target


@pytest.mark.parametrize("levels", [{"log_level": "LOUD"}, {"log_level": "INFO", "solver_level": "trace"}])
def test_invalid_levels(tmp_path, levels):
    with pytest.raises(LoggingSetupError):
        setup_logging(project_root=tmp_path, **levels)


def test_unusable_directory(tmp_path):
    blocker = tmp_path / "file"
    blocker.write_text("x", encoding="utf-8")
    with pytest.raises(LoggingSetupError):
        setup_logging("INFO", project_root=tmp_path, directory="file/logs")
