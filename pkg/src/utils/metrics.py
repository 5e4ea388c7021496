"""
Prometheus metrics for long-running experiments.

Tracks optimization run counts, durations and objective evaluation budgets
while the experiment harness dispatches runs, so that a multi-hour batch can
be watched from a Prometheus scrape.

Metrics Provided:
    - optimization_runs_total: Counter of finished runs by algorithm and status
    - optimization_run_duration_seconds: Histogram of per-run wall time
    - objective_evaluations_total: Counter of objective evaluations by algorithm
    - infected_population: Gauge of the infected count in the last EOSA census

Usage:
    from src.utils.metrics import get_metrics

    metrics = get_metrics()
    metrics.record_run("eosa", duration_seconds=1.8, evaluations=48211)

    # Expose metrics while an experiment runs:
    python scripts/eosa.py experiment config.yaml --metrics-port 9090
"""

import os
from typing import Any, Optional

from src.utils.logging import get_logger

logger = get_logger(__name__)

try:
    from prometheus_client import (
        CollectorRegistry,
        Counter,
        Gauge,
        Histogram,
        start_http_server,
    )

    PROMETHEUS_AVAILABLE = True
except ImportError:
    PROMETHEUS_AVAILABLE = False
    logger.debug("prometheus_client not installed - metrics collection disabled")


class ToolkitMetrics:
    """
    Collectors for optimization runs.

    Each instance owns its registry so test suites and worker processes can
    create instances without name clashes in the global default registry.

    Example:
        >>> metrics = ToolkitMetrics(enabled=True)
        >>> metrics.record_run("pso", duration_seconds=0.4, evaluations=20000)
    """

    def __init__(self, enabled: bool = True, registry: Optional[Any] = None) -> None:
        """
        Initialize metrics collectors.

        Args:
            enabled: Whether metrics collection is enabled
            registry: Prometheus registry (a private CollectorRegistry if None)

        Note:
            If prometheus_client is not installed, all recording becomes a no-op
        """
        self.enabled = enabled and PROMETHEUS_AVAILABLE

        if not self.enabled:
            self.registry = None
            logger.debug("Metrics collection disabled")
            return

        self.registry = registry if registry is not None else CollectorRegistry()

        self.runs = Counter(
            name="optimization_runs_total",
            documentation="Total number of optimization runs",
            labelnames=["algorithm", "status"],  # status: success, failure
            registry=self.registry,
        )

        self.run_duration = Histogram(
            name="optimization_run_duration_seconds",
            documentation="Wall time of a single optimization run",
            labelnames=["algorithm"],
            buckets=[0.1, 0.5, 1.0, 2.5, 5.0, 10.0, 30.0, 60.0, 120.0, 300.0],
            registry=self.registry,
        )

        self.evaluations = Counter(
            name="objective_evaluations_total",
            documentation="Total objective function evaluations",
            labelnames=["algorithm"],
            registry=self.registry,
        )

        self.infected = Gauge(
            name="infected_population",
            documentation="Infected individuals in the most recent EOSA census",
            registry=self.registry,
        )

        logger.info("ToolkitMetrics initialized")

    def record_run(self, algorithm: str, duration_seconds: float, evaluations: int) -> None:
        """
        Record a successful optimization run.

        Args:
            algorithm: Algorithm label (eosa, pso, de, ga or a configured label)
            duration_seconds: Wall time of the optimize call
            evaluations: Objective evaluations the run performed
        """
        if not self.enabled:
            return

        self.runs.labels(algorithm=algorithm, status="success").inc()
        self.run_duration.labels(algorithm=algorithm).observe(duration_seconds)
        self.evaluations.labels(algorithm=algorithm).inc(evaluations)

    def record_failure(self, algorithm: str) -> None:
        """Record a failed optimization run."""
        if not self.enabled:
            return

        self.runs.labels(algorithm=algorithm, status="failure").inc()

    def record_infected(self, infected: int) -> None:
        """Record the infected count of the latest census."""
        if not self.enabled:
            return

        self.infected.set(infected)


_metrics_instance: Optional[ToolkitMetrics] = None


def get_metrics() -> ToolkitMetrics:
    """
    Get global metrics instance (singleton).

    Metrics are enabled by METRICS_ENABLED=true.

    Example:
        >>> from src.utils.metrics import get_metrics
        >>> get_metrics().record_failure("ga")
    """
    global _metrics_instance

    if _metrics_instance is None:
        enabled = os.getenv("METRICS_ENABLED", "false").lower() == "true"
        _metrics_instance = ToolkitMetrics(enabled=enabled)

    return _metrics_instance


def start_metrics_server(port: int = 9090, addr: str = "0.0.0.0") -> bool:
    """
    Start the Prometheus HTTP endpoint in a background thread.

    Enables the global metrics instance if it was created disabled.

    Args:
        port: Port to listen on (default: 9090)
        addr: Address to bind to (default: all interfaces)

    Returns:
        True if the server started, False if prometheus_client is missing
    """
    global _metrics_instance

    if not PROMETHEUS_AVAILABLE:
        logger.error("Cannot start metrics server - prometheus_client not installed")
        return False

    if _metrics_instance is None or not _metrics_instance.enabled:
        _metrics_instance = ToolkitMetrics(enabled=True)

    start_http_server(port=port, addr=addr, registry=_metrics_instance.registry)
    logger.info(f"Metrics server running at http://{addr}:{port}/metrics")
    return True
