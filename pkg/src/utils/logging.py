"""
Logging utilities for the EOSA toolkit.

Provides structured logging with entry/exit decorators, JSON formatting,
run-context tracking, and consistent formatting across optimizers, the
experiment harness and the command line.

Features:
    - Structured JSON logging (LOG_FORMAT=json) for batch experiment logs
    - Run context (algorithm/function/run index) attached to every record
    - Entry/exit decorators with timing
    - Colorized console output through coloredlogs when installed

Example usage:
    >>> from src.utils.logging import get_logger, log_function_call, set_run_context
    >>>
    >>> logger = get_logger(__name__)
    >>> set_run_context("eosa/F34/run-003")
    >>>
    >>> @log_function_call
    >>> def run_once(seed: int) -> float:
    >>>     logger.info("Running", extra={"seed": seed})
    >>>     return 0.0
"""

import functools
import json
import logging
import os
import time
from contextvars import ContextVar
from datetime import datetime, timezone
from typing import Any, Callable, Dict, Optional, TypeVar, cast

try:
    import coloredlogs

    HAS_COLOREDLOGS = True
except ImportError:
    HAS_COLOREDLOGS = False

F = TypeVar("F", bound=Callable[..., Any])

# Label of the optimization run currently executing in this context
_run_context: ContextVar[Optional[str]] = ContextVar("run_context", default=None)

LOG_FORMAT = "%(asctime)s - %(name)s - %(levelname)s - %(message)s"
LOG_DATE_FORMAT = "%Y-%m-%d %H:%M:%S"

# Attributes every LogRecord carries; anything else came in through `extra`
_STANDARD_RECORD_FIELDS = frozenset(
    [
        "name",
        "msg",
        "args",
        "created",
        "filename",
        "funcName",
        "levelname",
        "levelno",
        "lineno",
        "module",
        "msecs",
        "pathname",
        "process",
        "processName",
        "relativeCreated",
        "thread",
        "threadName",
        "exc_info",
        "exc_text",
        "stack_info",
        "taskName",
        "message",
        "asctime",
    ]
)

# Keep repr() of large arguments (bound vectors, populations) out of the logs
_MAX_ARG_REPR = 120


# ============================================================================
# Run Context Management
# ============================================================================


def get_run_context() -> Optional[str]:
    """Return the label of the run executing in the current context, if any."""
    return _run_context.get()


def set_run_context(label: str) -> None:
    """
    Set the run label for the current context.

    Args:
        label: Run label, conventionally "<algorithm>/<function>/run-<index>"

    Example:
        >>> set_run_context("pso/F27/run-000")
        >>> # All subsequent JSON records carry run_context="pso/F27/run-000"
    """
    _run_context.set(label)


def clear_run_context() -> None:
    """Clear the run label for the current context."""
    _run_context.set(None)


# ============================================================================
# JSON Formatter
# ============================================================================


class JSONFormatter(logging.Formatter):
    """
    JSON log formatter for structured logging.

    Example output:
        {
            "timestamp": "2026-01-04T10:30:15.123456Z",
            "level": "INFO",
            "logger": "src.harness.experiment",
            "message": "Run finished",
            "run_context": "eosa/F34/run-003",
            "extra": {"final_fitness": 1.2e-05, "evaluations": 48211}
        }
    """

    def format(self, record: logging.LogRecord) -> str:
        """
        Format log record as JSON string.

        Args:
            record: Log record to format

        Returns:
            JSON-formatted log string
        """
        log_data: Dict[str, Any] = {
            "timestamp": datetime.now(timezone.utc).isoformat().replace("+00:00", "Z"),
            "level": record.levelname,
            "logger": record.name,
            "message": record.getMessage(),
            "run_context": get_run_context(),
        }

        log_data["source"] = {
            "file": record.pathname,
            "line": record.lineno,
            "function": record.funcName,
        }

        extra_fields = {
            key: value
            for key, value in record.__dict__.items()
            if key not in _STANDARD_RECORD_FIELDS
        }
        if extra_fields:
            log_data["extra"] = extra_fields

        if record.exc_info:
            log_data["exception"] = {
                "type": record.exc_info[0].__name__ if record.exc_info[0] else None,
                "message": str(record.exc_info[1]),
                "traceback": self.formatException(record.exc_info),
            }

        log_data["process"] = {"pid": record.process, "name": record.processName}

        return json.dumps(log_data, default=str)


def setup_logging(
    level: str = "WARNING",
    enable_colors: bool = True,
    json_format: Optional[bool] = None,
) -> None:
    """
    Configure global logging settings.

    Sets up structured JSON logging or colorized text. The format defaults to
    the LOG_FORMAT environment variable ("json" or "text").

    Args:
        level: Logging level (DEBUG, INFO, WARNING, ERROR, CRITICAL)
        enable_colors: Whether to enable colorized console output (default: True)
        json_format: Force JSON (True) or text (False); None reads LOG_FORMAT

    Example:
        >>> setup_logging(level="INFO")
        >>> setup_logging(level="DEBUG", json_format=True)
    """
    log_level = getattr(logging, level.upper(), logging.WARNING)
    if json_format is None:
        json_format = os.getenv("LOG_FORMAT", "text").lower() == "json"

    root_logger = logging.getLogger()
    root_logger.setLevel(log_level)

    # Remove existing handlers to avoid duplicates
    root_logger.handlers.clear()

    console_handler = logging.StreamHandler()
    console_handler.setLevel(log_level)

    if json_format:
        console_handler.setFormatter(JSONFormatter())
        root_logger.addHandler(console_handler)
    elif enable_colors and HAS_COLOREDLOGS:
        coloredlogs.install(
            level=log_level, fmt=LOG_FORMAT, datefmt=LOG_DATE_FORMAT, logger=root_logger
        )
    else:
        console_handler.setFormatter(logging.Formatter(LOG_FORMAT, datefmt=LOG_DATE_FORMAT))
        root_logger.addHandler(console_handler)


def get_logger(name: str) -> logging.Logger:
    """
    Get a logger instance with the specified name.

    Args:
        name: Logger name (typically __name__ of the calling module)

    Returns:
        Configured logger instance
    """
    return logging.getLogger(name)


def _short_repr(value: Any) -> str:
    text = repr(value)
    if len(text) > _MAX_ARG_REPR:
        return text[: _MAX_ARG_REPR - 3] + "..."
    return text


def log_function_call(func: F) -> F:
    """
    Decorator that logs function entry and exit with parameters and return values.

    - Logs function entry with (truncated) parameter values
    - Logs function exit with return value and execution time
    - Logs exceptions with full traceback
    - Includes the current run context in every record

    Args:
        func: Function to be decorated

    Returns:
        Wrapped function with logging

    Example:
        >>> @log_function_call
        >>> def run_experiment(config: ExperimentConfig) -> ExperimentArchive:
        >>>     ...
        >>>
        >>> # 2026-01-04 10:30:15 - module - INFO - ENTER run_experiment(...)
        >>> # 2026-01-04 10:31:02 - module - INFO - EXIT run_experiment -> ... (47.12s)
    """
    logger = get_logger(func.__module__)

    @functools.wraps(func)
    def wrapper(*args: Any, **kwargs: Any) -> Any:
        run_context = get_run_context()

        arg_names = func.__code__.co_varnames[: func.__code__.co_argcount]
        args_repr = [f"{name}={_short_repr(value)}" for name, value in zip(arg_names, args)]
        kwargs_repr = [f"{key}={_short_repr(value)}" for key, value in kwargs.items()]
        all_args = ", ".join(args_repr + kwargs_repr)

        logger.info(
            f"ENTER {func.__name__}({all_args})",
            extra={
                "function": func.__name__,
                "arguments": all_args,
                "run_context": run_context,
                "event": "function_entry",
            },
        )

        start_time = time.perf_counter()

        try:
            result = func(*args, **kwargs)

            execution_time = time.perf_counter() - start_time
            logger.info(
                f"EXIT {func.__name__} -> {_short_repr(result)} ({execution_time:.2f}s)",
                extra={
                    "function": func.__name__,
                    "duration_seconds": execution_time,
                    "run_context": run_context,
                    "event": "function_exit",
                    "status": "success",
                },
            )

            return result

        except Exception as error:
            execution_time = time.perf_counter() - start_time
            logger.error(
                f"ERROR {func.__name__} raised {type(error).__name__}: {error}",
                extra={
                    "function": func.__name__,
                    "duration_seconds": execution_time,
                    "run_context": run_context,
                    "event": "function_error",
                    "status": "error",
                    "error_type": type(error).__name__,
                    "error_message": str(error),
                },
                exc_info=True,
            )
            raise

    return cast(F, wrapper)
