"""
Shared utilities for the EOSA toolkit.

- logging: Structured logging with entry/exit decorators and run context
- config: Environment settings (output directory, jobs, log level, metrics)
- config_loader: YAML workflow configuration loading and validation
- metrics: Optional Prometheus collectors for experiment runs
"""

from src.utils.logging import get_logger, log_function_call

__all__ = ["get_logger", "log_function_call"]
