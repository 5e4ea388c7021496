"""
Unit tests for logging utilities.

Tests verify:
- Logging setup and configuration
- Function call decorator behavior
- Run context propagation into JSON records
"""

import json
import logging

from src.utils.logging import (
    JSONFormatter,
    clear_run_context,
    get_logger,
    get_run_context,
    log_function_call,
    set_run_context,
    setup_logging,
)


def test_setup_logging_configures_root_logger() -> None:
    """Test that setup_logging properly configures the root logger."""
    setup_logging(level="DEBUG")
    root_logger = logging.getLogger()
    assert root_logger.level == logging.DEBUG
    setup_logging(level="WARNING")


def test_setup_logging_json_format() -> None:
    """Test that json_format installs the JSON formatter."""
    setup_logging(level="INFO", json_format=True)
    root_logger = logging.getLogger()
    assert any(isinstance(h.formatter, JSONFormatter) for h in root_logger.handlers)
    setup_logging(level="WARNING", json_format=False)


def test_get_logger_returns_logger_instance() -> None:
    """Test that get_logger returns a valid logger instance."""
    logger = get_logger("test_module")
    assert isinstance(logger, logging.Logger)
    assert logger.name == "test_module"


def test_log_function_call_decorator_logs_entry_and_exit() -> None:
    """Test that log_function_call decorator logs function entry and exit."""

    @log_function_call
    def sample_function(x: int, y: int) -> int:
        """Sample function for testing decorator."""
        return x + y

    result = sample_function(2, 3)
    assert result == 5
    assert sample_function.__name__ == "sample_function"


def test_log_function_call_decorator_handles_exceptions() -> None:
    """Test that log_function_call decorator properly logs exceptions."""

    @log_function_call
    def failing_function() -> None:
        """Function that raises an exception."""
        raise ValueError("Test exception")

    try:
        failing_function()
        assert False, "Exception should have been raised"
    except ValueError as e:
        assert str(e) == "Test exception"


def test_run_context_set_and_clear() -> None:
    """Test run context round trip."""
    set_run_context("eosa/F34/run-3")
    assert get_run_context() == "eosa/F34/run-3"
    clear_run_context()
    assert get_run_context() is None


def test_json_formatter_includes_run_context() -> None:
    """Test that JSON records carry the active run context."""
    record = logging.LogRecord(
        name="src.eosa.optimizer",
        level=logging.INFO,
        pathname=__file__,
        lineno=1,
        msg="epoch done",
        args=(),
        exc_info=None,
    )
    set_run_context("pso/F1/run-0")
    try:
        payload = json.loads(JSONFormatter().format(record))
    finally:
        clear_run_context()

    assert payload["message"] == "epoch done"
    assert payload["run_context"] == "pso/F1/run-0"
