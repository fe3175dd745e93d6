"""
Run ledger: engine and session management.
"""
import logging
from contextlib import contextmanager
from pathlib import Path
from typing import Iterator, Optional

from sqlalchemy import create_engine
from sqlalchemy.engine import Engine
from sqlalchemy.exc import ArgumentError, OperationalError
from sqlalchemy.orm import Session, sessionmaker

from apollonian.errors import ExportError, InvalidArgument
from apollonian.experiments.config import ExperimentResult
from apollonian.experiments.harness import summary_json
from apollonian.models import Base, ExperimentKind, ExperimentRun

logger = logging.getLogger(__name__)

DATA_DIR = Path(__file__).parent.parent / "data"

DEFAULT_LEDGER_URL = f"sqlite:///{DATA_DIR}/apollonian_runs.db"


def ledger_url(value: Optional[str]) -> str:
    """A bare path becomes a SQLite URL; None selects the default ledger."""
    if value is None:
        DATA_DIR.mkdir(exist_ok=True)
        return DEFAULT_LEDGER_URL
    if "://" in value:
        return value
    path = Path(value).expanduser()
    path.parent.mkdir(parents=True, exist_ok=True)
    return f"sqlite:///{path}"


def make_engine(url: str) -> Engine:
    try:
        return create_engine(url, echo=False)
    except (ArgumentError, ImportError) as exc:
        raise InvalidArgument(f"invalid ledger URL {url!r}: {exc}") from exc


def init_db(engine: Engine) -> None:
    """Create the ledger table if it doesn't exist."""
    try:
        Base.metadata.create_all(bind=engine)
    except OperationalError as exc:
        raise ExportError(engine.url, str(exc.orig)) from exc


@contextmanager
def ledger_session(engine: Engine) -> Iterator[Session]:
    session = sessionmaker(autocommit=False, autoflush=False, bind=engine)()
    try:
        yield session
        session.commit()
    except Exception:
        session.rollback()
        raise
    finally:
        session.close()


def record_run(result: ExperimentResult, url: Optional[str] = None, results_path: Optional[Path] = None) -> int:
    engine = make_engine(ledger_url(url))
    init_db(engine)
    config = result.config
    run = ExperimentRun(
        kind         = config.kind,
        d            = config.d,
        n            = config.n,
        replicates   = config.replicates,
        master_seed  = config.master_seed,
        schedule     = config.schedule.label if config.schedule is not None else None,
        passed       = result.passed,
        summary      = summary_json(result),
        results_path = str(results_path) if results_path is not None else None,
    )
    with ledger_session(engine) as session:
        session.add(run)
        session.flush()
        run_id = run.id
    engine.dispose()
    logger.info(f"Recorded {config.kind.value} run #{run_id} in the ledger")
    return run_id


def list_runs(url: Optional[str] = None, kind: Optional[ExperimentKind] = None) -> list[dict]:
    engine = make_engine(ledger_url(url))
    init_db(engine)
    with ledger_session(engine) as session:
        query = session.query(ExperimentRun)
        if kind is not None:
            query = query.filter(ExperimentRun.kind == kind)
        runs = [_run_dict(r) for r in query.order_by(ExperimentRun.id).all()]
    engine.dispose()
    return runs


def _run_dict(run: ExperimentRun) -> dict:
    return {
        "id":           run.id,
        "kind":         run.kind.value if run.kind else None,
        "d":            run.d,
        "n":            run.n,
        "replicates":   run.replicates,
        "master_seed":  run.master_seed,
        "schedule":     run.schedule,
        "passed":       run.passed,
        "results_path": run.results_path,
        "created_at":   run.created_at.isoformat() if run.created_at else None,
    }
