"""
Experiment parameters and results.
"""
from pathlib import Path
from typing import Any, Dict, List, Literal, Optional

from pydantic import BaseModel, Field, model_validator

from apollonian.generator.schedule import QSchedule
from apollonian.metrics.distances import DIAMETER_GUARD
from apollonian.models import ExperimentKind

EAN_KINDS = {ExperimentKind.ean_hop, ExperimentKind.ean_degree}
BFS_KINDS = {ExperimentKind.dist_oracle, ExperimentKind.diameter}

ENVELOPE_NOTE = (
    "Monte Carlo tolerances are engineering envelopes; "
    "no finite-n error rates are known for these limit theorems"
)


class ExperimentConfig(BaseModel):
    kind:            ExperimentKind
    n:               int = Field(..., ge=1)
    d:               int = Field(2, ge=2)
    replicates:      int = Field(1, ge=1)
    master_seed:     int = Field(0, ge=0, lt=2**63)
    schedule:        Optional[QSchedule] = None
    output:          Optional[Path] = None
    workers:         int = Field(1, ge=1)
    pairs:           Optional[int] = Field(None, ge=1)    # dist_oracle: sampled pairs per replicate; None = all
    pairs_per_graph: int = Field(1, ge=1)                 # > 1 reuses each graph (fast mode)
    distance:        Literal["blocks", "prefix"] = "blocks"
    exact_check:     bool = True                          # dist_oracle: also check prefix_distance

    @model_validator(mode="after")
    def _check_kind(self) -> "ExperimentConfig":
        if self.kind in EAN_KINDS:
            if self.schedule is None:
                self.schedule = QSchedule(kind="harmonic", c=0.5)
        elif self.schedule is not None:
            raise ValueError(f"a schedule only applies to {sorted(k.value for k in EAN_KINDS)}")
        if self.kind in BFS_KINDS and self.n + self.d + 2 > DIAMETER_GUARD:
            raise ValueError(f"{self.kind.value} runs exact BFS and is limited to {DIAMETER_GUARD} vertices")
        return self

    @property
    def is_ean(self) -> bool:
        return self.kind in EAN_KINDS

    @property
    def fast_mode(self) -> bool:
        return self.pairs_per_graph > 1


class ExperimentResult(BaseModel):
    config:   ExperimentConfig
    columns:  List[str]
    rows:     List[Dict[str, Any]]
    stats:    Dict[str, Any]
    failures: List[str] = []
    metadata: Dict[str, Any] = {}

    @property
    def passed(self) -> bool:
        return not self.failures

    def summary_dict(self) -> dict:
        stats = dict(self.stats)
        stats["failures"] = list(self.failures)
        stats["metadata"] = dict(self.metadata)
        return {
            "kind":        self.config.kind.value,
            "d":           self.config.d,
            "n":           self.config.n,
            "replicates":  self.config.replicates,
            "master_seed": self.config.master_seed,
            "stats":       stats,
        }
