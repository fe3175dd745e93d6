"""
Shared enums and the SQLAlchemy ORM table for the experiment run ledger.
"""
import enum
from datetime import datetime, timezone

from sqlalchemy import Boolean, Column, DateTime, Enum, Integer, String, Text
from sqlalchemy.orm import DeclarativeBase


class Base(DeclarativeBase):
    pass


def _utcnow() -> datetime:
    return datetime.now(timezone.utc)


# ---------------------------------------------------------------------------
# Enums
# ---------------------------------------------------------------------------

class GrowthModel(str, enum.Enum):
    ran = "ran"    # one uniform active clique per step
    ean = "ean"    # every active clique independently with probability q_n


class EdgeType(str, enum.Enum):
    initial = "initial"
    forward = "forward"
    shortcut = "shortcut"


class ExperimentKind(str, enum.Enum):
    hopclt = "hopclt"
    degree = "degree"
    depth = "depth"
    clustering = "clustering"
    ean_hop = "ean_hop"
    ean_degree = "ean_degree"
    dist_oracle = "dist_oracle"
    diameter = "diameter"


# ---------------------------------------------------------------------------
# Run ledger
# ---------------------------------------------------------------------------

class ExperimentRun(Base):
    """One completed experiment run, recorded when a ledger is requested."""
    __tablename__ = "experiment_runs"

    id = Column(Integer, primary_key=True)
    kind = Column(Enum(ExperimentKind), nullable=False, index=True)
    d = Column(Integer, nullable=False)
    n = Column(Integer, nullable=False)
    replicates = Column(Integer, nullable=False)
    master_seed = Column(Integer, nullable=False)
    schedule = Column(String)                # e.g. "harmonic:0.5"; empty for RAN kinds
    passed = Column(Boolean, default=True)
    summary = Column(Text)                   # summary.json payload
    results_path = Column(String)
    created_at = Column(DateTime, default=_utcnow)
