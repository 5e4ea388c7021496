"""
Experiment archive: run records plus the files written for them.

Layout under the output directory:

    runs/<algorithm>/<function>/run_<NNN>.csv     epoch,gbest_fitness
    census/<algorithm>/<function>/run_<NNN>.csv   epoch,S,I,H,R,V,D,Q (EOSA)
    summary.csv                                   one row per (algorithm, function)
    convergence.csv                               median gbest at each checkpoint
    timing.csv                                    mean wall time per algorithm
    manifest.yaml                                 config, seeds, version, file list

The manifest is written last and holds no timing values, so two archives of
the same config differ only in summary.csv's mean_time_s and timing.csv.
"""

import math
from dataclasses import dataclass, field
from pathlib import Path
from typing import Any, Dict, List, Optional, Union

import numpy as np
import pandas as pd
import yaml

from src import __version__
from src.eosa.result import CENSUS_COLUMNS, FLOAT_FORMAT, OptimizationResult
from src.epidemic import CompartmentCensus
from src.harness.config import AlgorithmSpec, ExperimentConfig, FunctionSpec
from src.harness.reporting import convergence_table, summary_table, timing_report
from src.utils.logging import get_logger

logger = get_logger(__name__)

MANIFEST_NAME = "manifest.yaml"


@dataclass
class RunRecord:
    """One optimization run of an experiment."""

    label: str
    algorithm: str
    function: str
    run_index: int
    seed: int
    result: OptimizationResult

    @property
    def run_file(self) -> str:
        return f"runs/{self.label}/{self.function}/run_{self.run_index:03d}.csv"

    @property
    def census_file(self) -> Optional[str]:
        if self.algorithm != "eosa":
            return None
        return f"census/{self.label}/{self.function}/run_{self.run_index:03d}.csv"


@dataclass
class ExperimentArchive:
    config: ExperimentConfig
    records: List[RunRecord]
    output_dir: Optional[Path] = None
    files: List[str] = field(default_factory=list)

    def group(self, label: str, function: str) -> List[RunRecord]:
        """Records of one (algorithm, function) pair in run order."""
        return sorted(
            (r for r in self.records if r.label == label and r.function == function),
            key=lambda r: r.run_index,
        )

    def final_values(self, label: str, function: str) -> List[float]:
        return [r.result.gbest_fitness for r in self.group(label, function)]


def _write_frame(frame: pd.DataFrame, target: Path) -> None:
    target.parent.mkdir(parents=True, exist_ok=True)
    frame.to_csv(target, index=False, float_format=FLOAT_FORMAT)


def write_archive(archive: ExperimentArchive, output_dir: Union[str, Path]) -> List[str]:
    """
    Write every archive file in deterministic order, manifest last.

    Returns:
        Relative paths of the files written, manifest included

    Raises:
        OSError: The output directory is not writable
    """
    root = Path(output_dir)
    root.mkdir(parents=True, exist_ok=True)
    written: List[str] = []

    for record in sorted(
        archive.records, key=lambda r: (r.label, r.function, r.run_index)
    ):
        record.result.to_csv(root / record.run_file)
        written.append(record.run_file)
        if record.census_file is not None:
            record.result.census_to_csv(root / record.census_file)
            written.append(record.census_file)

    _write_frame(summary_table(archive), root / "summary.csv")
    _write_frame(convergence_table(archive), root / "convergence.csv")
    _write_frame(timing_report(archive), root / "timing.csv")
    written.extend(["summary.csv", "convergence.csv", "timing.csv"])

    manifest = {
        "tool": "eosa-toolkit",
        "version": __version__,
        "config": archive.config.to_mapping(),
        "runs": [
            {
                "algorithm": r.label,
                "name": r.algorithm,
                "function": r.function,
                "run": r.run_index,
                "seed": r.seed,
                "initial_fitness": float(r.result.initial_fitness),
                "final_fitness": float(r.result.gbest_fitness),
                "evaluations": int(r.result.evaluations),
                "deviation_events": list(r.result.deviation_events),
                "file": r.run_file,
                "census_file": r.census_file,
            }
            for r in archive.records
        ],
        "files": sorted(written),
    }
    with open(root / MANIFEST_NAME, "w") as f:
        yaml.safe_dump(manifest, f, sort_keys=False, default_flow_style=False)
    written.append(MANIFEST_NAME)

    archive.output_dir = root
    archive.files = written
    logger.info(f"✓ Archive written: {root} ({len(written)} files)")
    return written


def _read_history(path: Path) -> List[Any]:
    frame = pd.read_csv(path, float_precision="round_trip")
    if list(frame.columns) != ["epoch", "gbest_fitness"]:
        raise ValueError(f"{path}: expected header epoch,gbest_fitness")
    return [(int(e), float(v)) for e, v in zip(frame["epoch"], frame["gbest_fitness"])]


def _read_census(path: Path) -> List[CompartmentCensus]:
    frame = pd.read_csv(path)
    if list(frame.columns) != CENSUS_COLUMNS:
        raise ValueError(f"{path}: expected header {','.join(CENSUS_COLUMNS)}")
    return [
        CompartmentCensus(
            s_count=int(row.S),
            i_count=int(row.I),
            h_count=int(row.H),
            r_count=int(row.R),
            v_count=int(row.V),
            d_count=int(row.D),
            q_count=int(row.Q),
        )
        for row in frame.itertuples(index=False)
    ]


def load_archive(output_dir: Union[str, Path]) -> ExperimentArchive:
    """
    Read an archive back from disk.

    Positions and wall times are not archived; loaded results carry an
    empty position and NaN wall time.

    Raises:
        FileNotFoundError: No manifest or a listed run file is missing
        ValueError: Manifest or CSV content is malformed
    """
    root = Path(output_dir)
    manifest_path = root / MANIFEST_NAME
    if not manifest_path.is_file():
        raise FileNotFoundError(f"No {MANIFEST_NAME} in {root}")

    with open(manifest_path, "r") as f:
        manifest: Dict[str, Any] = yaml.safe_load(f) or {}
    if not isinstance(manifest.get("config"), dict) or not isinstance(manifest.get("runs"), list):
        raise ValueError(f"{manifest_path}: missing config or runs")

    raw = manifest["config"]
    config = ExperimentConfig(
        algorithms=[AlgorithmSpec.parse(a) for a in raw["algorithms"]],
        functions=[FunctionSpec.parse(fn) for fn in raw["functions"]],
        runs=raw["runs"],
        epochs=raw["epochs"],
        population_size=raw["population_size"],
        master_seed=raw["master_seed"],
        checkpoints=raw["checkpoints"],
        output_dir=str(root),
        eosa=raw.get("eosa") or {},
        rates=raw.get("rates") or {},
    )

    records: List[RunRecord] = []
    for entry in manifest["runs"]:
        history = _read_history(root / entry["file"])
        census = _read_census(root / entry["census_file"]) if entry.get("census_file") else []
        result = OptimizationResult(
            gbest_position=np.empty(0),
            gbest_fitness=float(entry["final_fitness"]),
            history=history,
            evaluations=int(entry["evaluations"]),
            wall_time=math.nan,
            initial_fitness=float(entry["initial_fitness"]),
            algorithm=entry["name"],
            seed=int(entry["seed"]),
            census_trace=census,
            deviation_events=list(entry.get("deviation_events") or []),
        )
        records.append(
            RunRecord(
                label=entry["algorithm"],
                algorithm=entry["name"],
                function=entry["function"],
                run_index=int(entry["run"]),
                seed=int(entry["seed"]),
                result=result,
            )
        )

    logger.info(f"Loaded archive {root}: {len(records)} runs")
    return ExperimentArchive(
        config=config, records=records, output_dir=root, files=list(manifest.get("files", []))
    )
