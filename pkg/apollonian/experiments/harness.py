"""
Replicate pool and result files.

Each replicate is a pure function of (config, replicate index): it seeds its
own stream with replicate_rng(master_seed, r) and returns its rows. The pool
joins in replicate order, so parallel and serial runs emit identical files.
"""
import json
import logging
import math
from concurrent.futures import ProcessPoolExecutor
from functools import partial
from pathlib import Path
from typing import Any, Callable, Union

import pandas as pd

from apollonian.errors import ExportError
from apollonian.experiments.config import ExperimentConfig, ExperimentResult

logger = logging.getLogger(__name__)

RESULTS_FILE = "results.csv"
SUMMARY_FILE = "summary.json"

ReplicateFn = Callable[[ExperimentConfig, int], list[dict]]


def run_replicates(worker: ReplicateFn, config: ExperimentConfig) -> list[dict]:
    task = partial(worker, config)
    indices = range(config.replicates)
    if config.workers == 1 or config.replicates == 1:
        chunks = [task(r) for r in indices]
    else:
        with ProcessPoolExecutor(max_workers=config.workers) as pool:
            chunks = list(pool.map(task, indices))
    logger.debug(f"{config.kind.value}: {config.replicates} replicates joined")
    return [row for chunk in chunks for row in chunk]


def _json_safe(value: Any) -> Any:
    if isinstance(value, float) and not math.isfinite(value):
        return None
    if isinstance(value, dict):
        return {k: _json_safe(v) for k, v in value.items()}
    if isinstance(value, (list, tuple)):
        return [_json_safe(v) for v in value]
    return value


def summary_json(result: ExperimentResult) -> str:
    return json.dumps(_json_safe(result.summary_dict()), indent=2) + "\n"


def write_outputs(result: ExperimentResult, directory: Union[str, Path]) -> tuple[Path, Path]:
    directory = Path(directory)
    results_path = directory / RESULTS_FILE
    summary_path = directory / SUMMARY_FILE
    try:
        directory.mkdir(parents=True, exist_ok=True)
        frame = pd.DataFrame(result.rows, columns=result.columns)
        frame.to_csv(results_path, index=False, lineterminator="\n")
        summary_path.write_text(summary_json(result))
    except OSError as exc:
        raise ExportError(exc.filename or directory, exc.strerror) from exc
    logger.info(f"Wrote {len(result.rows)} rows to {results_path}")
    return results_path, summary_path
