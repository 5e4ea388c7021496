#!/usr/bin/env python3
"""
Command-line interface for the EOSA toolkit.

Subcommands:
    optimize        one optimization run, writes the run CSV
    experiment      algorithms × functions × runs from a config file
    simulate        outbreak census trace of the EOSA population dynamics
    stats           Friedman mean ranks and Wilcoxon tests over a summary CSV
    list-functions  the benchmark registry

Exit status: 0 when every requested output was written, 2 for invalid
input, 1 for runtime failures, 130 when interrupted.

Usage:
    python -m src.cli optimize --function F34 --algo eosa --dim 30 --seed 7
    python -m src.cli experiment config/examples/experiment.yaml --jobs 4
    python -m src.cli simulate --psize 200 --epochs 50 --rate xi_quarantine=0
    python -m src.cli stats results/experiment/summary.csv --reference eosa
    python -m src.cli list-functions --suite cec
"""

import argparse
import sys
from pathlib import Path
from typing import Any, Dict, List, Mapping, Optional, Sequence

import pandas as pd

from src import __version__
from src.baselines import BASELINE_ALGORITHMS, BaselineConfig, baseline_optimize
from src.eosa import MOVEMENT_MODES, EosaConfig, optimize
from src.epidemic import EpidemicRates
from src.harness import (
    DEFAULT_SIMULATION_EPOCHS,
    ExperimentConfig,
    run_experiment,
    simulate_propagation,
    write_census,
)
from src.objectives import SUITES, dump_registry_csv, get_objective, registry_frame
from src.stats import (
    METRICS,
    friedman,
    friedman_rank_table,
    friedman_test_table,
    load_summary,
    rank_matrix_from_summary,
    wilcoxon_against,
)
from src.utils.config import get_settings
from src.utils.config_loader import ConfigError, load_config, validate_config
from src.utils.logging import get_logger, log_function_call, setup_logging
from src.utils.metrics import start_metrics_server

logger = get_logger(__name__)

EXIT_OK = 0
EXIT_FAILURE = 1
EXIT_INVALID = 2
EXIT_INTERRUPTED = 130

ALGORITHM_CHOICES = ("eosa",) + BASELINE_ALGORITHMS


class CliInputError(Exception):
    """Invalid flags, ids, config or input files (exit status 2)."""


def _fmt(value: float) -> str:
    return "{:.17g}".format(value)


def parse_rate_overrides(items: Optional[Sequence[str]]) -> Dict[str, float]:
    """
    Parse repeated NAME=VALUE flags.

    Raises:
        CliInputError: Missing '=' or a non-numeric value
    """
    overrides: Dict[str, float] = {}
    for item in items or []:
        name, sep, raw = item.partition("=")
        if not sep or not name.strip():
            raise CliInputError(f"--rate expects NAME=VALUE (got '{item}')")
        try:
            overrides[name.strip()] = float(raw)
        except ValueError:
            raise CliInputError(f"--rate {name.strip()}: '{raw}' is not a number") from None
    return overrides


def _load_workflow(path: Optional[str], workflow: str) -> Dict[str, Any]:
    """Load and schema-check a config file for one workflow; {} when no path."""
    if not path:
        return {}
    try:
        config = load_config(path)
    except (FileNotFoundError, ValueError) as e:
        raise CliInputError(str(e)) from e

    errors = validate_config(config)
    if config.get("workflow") != workflow:
        errors.append(ConfigError("workflow", f"Must be '{workflow}'", config.get("workflow")))
    if errors:
        raise CliInputError(
            f"Invalid configuration {path}:\n" + "\n".join(f"  - {e}" for e in errors)
        )
    return config


def _pick(flag: Any, section: Mapping[str, Any], key: str, default: Any) -> Any:
    """Flag beats config file beats default."""
    if flag is not None:
        return flag
    if key in section and section[key] is not None:
        return section[key]
    return default


def _rates(config: Mapping[str, Any], flags: Optional[Sequence[str]]) -> EpidemicRates:
    try:
        values = dict(config.get("rates") or {})
        values.update(parse_rate_overrides(flags))
        return EpidemicRates.from_mapping(values).check(strict_ranges=False)
    except ValueError as e:
        raise CliInputError(str(e)) from e


# ---------------------------------------------------------------------------
# optimize
# ---------------------------------------------------------------------------


@log_function_call
def cmd_optimize(args: argparse.Namespace) -> int:
    """One run; prints the final gbest fitness and writes the run CSV."""
    config = _load_workflow(args.config, "optimize")
    section = dict(config.get("optimize") or {})

    function_id = _pick(args.function, section, "function", None)
    if not function_id:
        raise CliInputError("--function is required (or optimize.function in --config)")
    algorithm = _pick(args.algo, section, "algorithm", "eosa")
    if algorithm not in ALGORITHM_CHOICES:
        raise CliInputError(f"Unknown algorithm '{algorithm}' (valid: {ALGORITHM_CHOICES})")
    dim = _pick(args.dim, section, "dim", None)
    epochs = _pick(args.epochs, section, "epochs", 500)
    psize = _pick(args.psize, section, "population_size", 100)
    seed = _pick(args.seed, section, "seed", 0)
    history_out = _pick(args.history_out, section, "history_out", None)

    try:
        objective = get_objective(str(function_id), dim)
        run_config: Any
        if algorithm == "eosa":
            values = dict(config.get("eosa") or {})
            if args.movement_mode:
                values["movement_mode"] = args.movement_mode
            values.update({"population_size": psize, "epochs": epochs, "seed": seed})
            if history_out:
                values["record_search_history"] = True
            run_config = EosaConfig.from_mapping(values, rates=_rates(config, args.rate)).check()
        else:
            if args.rate or args.movement_mode:
                raise CliInputError("--rate and --movement-mode apply to --algo eosa only")
            run_config = BaselineConfig.from_mapping(
                algorithm,
                section.get("params"),
                population_size=psize,
                epochs=epochs,
                seed=seed,
                record_search_history=bool(history_out),
            ).check()
    except KeyError as e:
        raise CliInputError(str(e)) from e
    except ValueError as e:
        raise CliInputError(str(e)) from e

    out = _pick(args.out, section, "out", None)
    if out:
        target = Path(out)
    else:
        name = f"{algorithm}_{objective.id}_seed{seed}.csv"
        target = get_settings().output_dir / "optimize" / name

    if algorithm == "eosa":
        result = optimize(objective, run_config)
    else:
        result = baseline_optimize(objective, run_config)
    result.to_csv(target)
    if history_out:
        result.search_history_to_csv(history_out)

    print(_fmt(result.gbest_fitness))
    print(f"✅ {algorithm} on {objective.id} (dim {objective.dim}): wrote {target}")
    if history_out:
        print(f"✅ Search history ({result.evaluations} points): wrote {history_out}")
    return EXIT_OK


# ---------------------------------------------------------------------------
# experiment
# ---------------------------------------------------------------------------


@log_function_call
def cmd_experiment(args: argparse.Namespace) -> int:
    """Run a full experiment from a config file and write its archive."""
    config = _load_workflow(args.config, "experiment")
    section = dict(config.get("experiment") or {})
    if "output_dir" not in section:
        section["output_dir"] = str(get_settings().output_dir / "experiment")
        config = dict(config, experiment=section)

    try:
        experiment = ExperimentConfig.from_mapping(config)
    except ValueError as e:
        raise CliInputError(str(e)) from e

    jobs = args.jobs if args.jobs is not None else section.get("jobs", get_settings().jobs)
    if jobs < 1:
        raise CliInputError(f"--jobs must be >= 1 (got {jobs})")

    if args.metrics_port is not None and not start_metrics_server(args.metrics_port):
        logger.warning("Metrics server not started; continuing without metrics")

    output_dir = Path(args.out) if args.out else Path(experiment.output_dir)
    archive = run_experiment(experiment, output_dir=output_dir, jobs=jobs)

    print(
        f"✅ Experiment complete: {len(archive.records)} runs "
        f"({len(experiment.algorithms)} algorithms × {len(experiment.functions)} functions "
        f"× {experiment.runs} runs)"
    )
    print(f"   Archive: {output_dir}")
    print(f"   Summary: {output_dir / 'summary.csv'}")
    return EXIT_OK


# ---------------------------------------------------------------------------
# simulate
# ---------------------------------------------------------------------------


@log_function_call
def cmd_simulate(args: argparse.Namespace) -> int:
    """Write the census trace of an outbreak simulation."""
    config = _load_workflow(args.config, "simulate")
    section = dict(config.get("simulate") or {})

    psize = _pick(args.psize, section, "population_size", 100)
    epochs = _pick(args.epochs, section, "epochs", DEFAULT_SIMULATION_EPOCHS)
    seed = _pick(args.seed, section, "seed", 0)
    evdincub = _pick(args.evdincub, section, "evdincub", 0.5)
    rates = _rates(config, args.rate)

    overrides = dict(config.get("eosa") or {})
    if args.movement_mode:
        overrides["movement_mode"] = args.movement_mode

    try:
        census = simulate_propagation(
            rates,
            population_size=psize,
            epochs=epochs,
            seed=seed,
            evdincub=evdincub,
            eosa_overrides=overrides,
        )
    except ValueError as e:
        raise CliInputError(str(e)) from e

    out = _pick(args.out, section, "out", None)
    if out:
        target = Path(out)
    else:
        target = get_settings().output_dir / "simulate" / f"census_seed{seed}.csv"
    write_census(census, target)

    peak = int(census["I"].max()) if len(census) else 0
    print(f"✅ Simulated {len(census)} epochs (psize {psize}, peak infected {peak})")
    print(f"   Census: {target}")
    return EXIT_OK


# ---------------------------------------------------------------------------
# stats
# ---------------------------------------------------------------------------


@log_function_call
def cmd_stats(args: argparse.Namespace) -> int:
    """Friedman mean ranks and reference-vs-each Wilcoxon tests over a summary CSV."""
    try:
        summary = load_summary(args.summary)
        matrix = rank_matrix_from_summary(summary, metric=args.metric)
    except (FileNotFoundError, ValueError) as e:
        raise CliInputError(str(e)) from e

    reference = args.reference
    if reference is None:
        reference = "eosa" if "eosa" in matrix.algorithms else matrix.algorithms[0]
    if reference not in matrix.algorithms:
        raise CliInputError(
            f"Reference algorithm '{reference}' not in summary (have: {matrix.algorithms})"
        )

    result = friedman(matrix)
    ranks = friedman_rank_table(result)
    test = friedman_test_table(result)
    pairs = wilcoxon_against(matrix, reference, continuity_correction=args.continuity_correction)

    out_dir = Path(args.out) if args.out else get_settings().output_dir / "stats"
    out_dir.mkdir(parents=True, exist_ok=True)
    ranks.to_csv(out_dir / "friedman.csv", index=False, float_format="%.17g")
    test.to_csv(out_dir / "friedman_test.csv", index=False, float_format="%.17g")
    pairs.to_csv(out_dir / "wilcoxon.csv", index=False, float_format="%.17g")

    print(
        f"Friedman over {result.n_problems} functions × {len(result.algorithms)} algorithms "
        f"({args.metric}): chi_square={_fmt(result.chi_square)} df={result.df} "
        f"p={_fmt(result.p_value)}"
    )
    for row in ranks.sort_values(["rank", "mean_rank"]).itertuples(index=False):
        print(f"  {row.rank:>3}  {row.algorithm:<16} {_fmt(row.mean_rank)}")
    print(f"✅ Wrote friedman.csv, friedman_test.csv, wilcoxon.csv to {out_dir}")
    return EXIT_OK


# ---------------------------------------------------------------------------
# list-functions
# ---------------------------------------------------------------------------


@log_function_call
def cmd_list_functions(args: argparse.Namespace) -> int:
    """Print the registry table, or write it as CSV with --out."""
    if args.out:
        target = dump_registry_csv(args.out, suite=args.suite)
        print(f"✅ Wrote registry ({args.suite}) to {target}")
        return EXIT_OK

    frame = registry_frame(args.suite)
    for row in frame.itertuples(index=False):
        known = "" if pd.isna(row.known_min) else _fmt(row.known_min)
        print(
            f"{row.id:<7} {row.name:<44} dim={row.dim:<3} "
            f"[{_fmt(row.lower)}, {_fmt(row.upper)}] min={known} {row.tags}"
        )
    print(f"{len(frame)} functions")
    return EXIT_OK


# ---------------------------------------------------------------------------
# argument parsing
# ---------------------------------------------------------------------------


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="eosa",
        description="Ebola Optimization Search Algorithm toolkit",
        formatter_class=argparse.RawDescriptionHelpFormatter,
        epilog="""
Examples:
  # Single EOSA run on Sphere, 30 dimensions
  %(prog)s optimize --function F34 --algo eosa --dim 30 --epochs 500 --psize 100 --seed 7

  # Full experiment, 8 worker processes
  %(prog)s experiment config/examples/experiment.yaml --jobs 8

  # Outbreak simulation without quarantine
  %(prog)s simulate --psize 200 --epochs 50 --rate xi_quarantine=0

  # Friedman and Wilcoxon tests on an experiment summary
  %(prog)s stats results/experiment/summary.csv --metric mean --reference eosa

  # Registry of the CEC-based suite as CSV
  %(prog)s list-functions --suite cec --out registry.csv

Environment:
  EOSA_OUTPUT_DIR   default output directory (default: results)
  EOSA_JOBS         default worker processes for experiment
  LOG_FORMAT        text or json
        """,
    )
    parser.add_argument("--version", action="version", version=f"%(prog)s {__version__}")
    parser.add_argument(
        "-v",
        "--verbose",
        action="count",
        default=0,
        help="Increase log verbosity (-v info, -vv debug)",
    )
    parser.add_argument(
        "--log-format",
        choices=["text", "json"],
        default=None,
        help="Log output format (default: LOG_FORMAT or text)",
    )

    sub = parser.add_subparsers(dest="command", metavar="COMMAND")
    sub.required = True

    opt = sub.add_parser("optimize", help="Run one optimization")
    opt.add_argument("--config", help="YAML config with workflow: optimize")
    opt.add_argument("-f", "--function", help="Function id (e.g. F34, CEC05, C17)")
    opt.add_argument("-a", "--algo", choices=ALGORITHM_CHOICES, help="Algorithm (default: eosa)")
    opt.add_argument("--dim", type=int, help="Dimension (default: registry default)")
    opt.add_argument("--epochs", type=int, help="Epochs (default: 500)")
    opt.add_argument("--psize", type=int, help="Population size (default: 100)")
    opt.add_argument("--seed", type=int, help="Random seed (default: 0)")
    opt.add_argument("-o", "--out", help="Run CSV path (default: $EOSA_OUTPUT_DIR/optimize/...)")
    opt.add_argument(
        "--history-out",
        help="Also write every evaluated point (epoch,individual,fitness,x0..) here",
    )
    opt.add_argument(
        "--rate",
        action="append",
        metavar="NAME=VALUE",
        help="Epidemic rate override, repeatable (eosa only)",
    )
    opt.add_argument(
        "--movement-mode",
        choices=MOVEMENT_MODES,
        help="EOSA movement operator (default: literal, which barely improves even on "
        "Sphere; differential converges on unimodal functions)",
    )
    opt.set_defaults(handler=cmd_optimize)

    exp = sub.add_parser("experiment", help="Run an experiment from a config file")
    exp.add_argument("config", help="YAML config with workflow: experiment")
    exp.add_argument("-o", "--out", help="Archive directory (overrides experiment.output_dir)")
    exp.add_argument("-j", "--jobs", type=int, help="Worker processes (default: config or 1)")
    exp.add_argument("--metrics-port", type=int, help="Expose Prometheus metrics on this port")
    exp.set_defaults(handler=cmd_experiment)

    sim = sub.add_parser("simulate", help="Simulate outbreak propagation")
    sim.add_argument("--config", help="YAML config with workflow: simulate")
    sim.add_argument("--psize", type=int, help="Population size (default: 100)")
    sim.add_argument("--epochs", type=int, help="Epochs (default: 50)")
    sim.add_argument("--seed", type=int, help="Random seed (default: 0)")
    sim.add_argument("--evdincub", type=float, help="Incubation gate in [0, 1] (default: 0.5)")
    sim.add_argument("--rate", action="append", metavar="NAME=VALUE", help="Rate override")
    sim.add_argument("--movement-mode", choices=MOVEMENT_MODES, help="EOSA movement operator")
    sim.add_argument("-o", "--out", help="Census CSV path")
    sim.set_defaults(handler=cmd_simulate)

    st = sub.add_parser("stats", help="Friedman and Wilcoxon tests over a summary CSV")
    st.add_argument("summary", help="Summary CSV (algorithm,function,best,worst,mean,...)")
    st.add_argument("--metric", choices=METRICS, default="mean", help="Statistic to rank")
    st.add_argument("--reference", help="Reference algorithm (default: eosa if present)")
    st.add_argument(
        "--continuity-correction",
        action="store_true",
        help="Apply the continuity correction to the Wilcoxon z",
    )
    st.add_argument("-o", "--out", help="Output directory (default: $EOSA_OUTPUT_DIR/stats)")
    st.set_defaults(handler=cmd_stats)

    ls = sub.add_parser("list-functions", help="List the benchmark registry")
    ls.add_argument("--suite", choices=SUITES, default="all", help="Suite (default: all)")
    ls.add_argument("-o", "--out", help="Write the registry CSV here instead of printing")
    ls.set_defaults(handler=cmd_list_functions)

    return parser


def _configure_logging(args: argparse.Namespace) -> None:
    if args.verbose >= 2:
        level = "DEBUG"
    elif args.verbose == 1:
        level = "INFO"
    else:
        level = get_settings().log_level
    json_format = None if args.log_format is None else args.log_format == "json"
    setup_logging(level=level, json_format=json_format)


def main(argv: Optional[List[str]] = None) -> int:
    """Entry point; returns the process exit status."""
    parser = build_parser()
    args = parser.parse_args(argv)

    try:
        _configure_logging(args)
        return int(args.handler(args))
    except CliInputError as e:
        print(f"❌ Error: {e}", file=sys.stderr)
        return EXIT_INVALID
    except KeyboardInterrupt:
        print("\n⚠️  Interrupted by user", file=sys.stderr)
        return EXIT_INTERRUPTED
    except Exception as e:
        logger.error(f"{args.command} failed: {e}", exc_info=True)
        print(f"❌ Error: {e}", file=sys.stderr)
        return EXIT_FAILURE


if __name__ == "__main__":
    sys.exit(main())
