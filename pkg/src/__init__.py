"""
EOSA toolkit

Global optimization with the Ebola Optimization Search Algorithm: the
epidemic compartment model that drives it, benchmark objective functions,
PSO/DE/GA baselines, a reproducible multi-run experiment harness and
nonparametric statistics for comparing the algorithms.

Sub-packages:
- epidemic: compartment rates, rate-of-change equations, transition draws
- eosa: the EOSA optimizer and the shared OptimizationResult
- objectives: benchmark registry, transforms, hybrid/composition builders
- baselines: PSO, DE and GA
- harness: experiments, summaries, convergence and timing tables, simulation
- stats: Friedman and Wilcoxon signed-rank tests
- utils: logging, configuration and metrics

See README.md for usage.
"""

import os

__version__ = "0.1.0"

# Package-level imports
from src.utils.logging import setup_logging

# Library use stays quiet unless EOSA_LOG_LEVEL says otherwise
setup_logging(level=os.getenv("EOSA_LOG_LEVEL", "WARNING"))
