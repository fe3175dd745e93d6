"""
Random (RAN) and Evolving (EAN) Apollonian network growth.

The graph starts from a d-simplex (corners 1..d+1) with the root vertex O in
its interior; the d+1 simplices around O are the initial active cliques,
coded by single symbols. Filling an active clique with code u inserts a vertex
with code u joined to the clique's d+1 members and replaces the clique by the
d+1 cliques u1, ..., u(d+1).

Vertex ids: root 0, corner i is id i, then new vertices in birth order.
"""
import logging
import math
from dataclasses import dataclass, field
from typing import Optional

import numpy as np

from apollonian.coding.codes import Code, Corner, Label, upward_labels
from apollonian.errors import InvalidArgument, InvariantViolation
from apollonian.generator.schedule import QSchedule
from apollonian.models import GrowthModel

logger = logging.getLogger(__name__)

ROOT_ID = 0


def clique_count(d: int, degree: int) -> int:
    """A_k = 2 + (k-d)(d-1): active cliques containing a non-initial vertex of degree k."""
    return 2 + (degree - d) * (d - 1)


# ---------------------------------------------------------------------------
# Data types
# ---------------------------------------------------------------------------

@dataclass(slots=True)
class VertexRecord:
    id: int
    code: Optional[Code]        # None for corners
    generation: int
    degree: int
    birth_step: int
    corner: Optional[int] = None

    @property
    def is_initial(self) -> bool:
        return self.birth_step == 0

    @property
    def label(self) -> str:
        return f"#{self.corner}" if self.corner is not None else str(self.code)


@dataclass(slots=True)
class ActiveClique:
    code: Code
    members: tuple[int, ...]    # members[i-1] is the vertex T_i(code)


@dataclass
class GraphState:
    d: int
    model: GrowthModel
    step: int = 0
    vertices: list[VertexRecord] = field(default_factory=list)
    active: list[ActiveClique] = field(default_factory=list)
    adjacency: list[set[int]] = field(default_factory=list)
    added_nodes: int = 0
    qhat_history: list[float] = field(default_factory=list)
    by_code: dict[tuple[int, ...], int] = field(default_factory=dict)
    edge_count: int = 0
    check_births: bool = False

    @property
    def n_vertices(self) -> int:
        return len(self.vertices)

    @property
    def n_active(self) -> int:
        return len(self.active)

    def vertex_for(self, label: Label) -> int:
        """Vertex id of a code or corner label."""
        if isinstance(label, Corner):
            return label.index
        try:
            return self.by_code[label.symbols]
        except KeyError:
            raise InvalidArgument(f"no vertex with code {str(label)!r}") from None


# ---------------------------------------------------------------------------
# Construction
# ---------------------------------------------------------------------------

def new_graph(d: int, model: GrowthModel = GrowthModel.ran, check_births: bool = False) -> GraphState:
    """The initial K_{d+2} with its d+1 active cliques."""
    if d < 2:
        raise InvalidArgument(f"dimension must be >= 2, got {d}")
    model = GrowthModel(model)
    state = GraphState(d=d, model=model, check_births=check_births)
    root = Code.root(d)
    state.vertices.append(VertexRecord(id=ROOT_ID, code=root, generation=0, degree=d + 1, birth_step=0))
    state.by_code[root.symbols] = ROOT_ID
    for i in range(1, d + 2):
        state.vertices.append(
            VertexRecord(id=i, code=None, generation=0, degree=d + 1, birth_step=0, corner=i)
        )
    ids = range(d + 2)
    state.adjacency = [set(ids) - {v} for v in ids]
    state.edge_count = (d + 1) * (d + 2) // 2
    for i in range(1, d + 2):
        # Clique i omits corner i; T_i("i") is the root.
        members = tuple(ROOT_ID if k == i else k for k in range(1, d + 2))
        state.active.append(ActiveClique(code=Code((i,), d), members=members))
    return state


def _fill(state: GraphState, index: int) -> int:
    clique = state.active[index]
    d = state.d
    vid = len(state.vertices)
    code = clique.code
    state.vertices.append(
        VertexRecord(id=vid, code=code, generation=len(code), degree=d + 1, birth_step=state.step)
    )
    state.by_code[code.symbols] = vid
    neighbours = set(clique.members)
    state.adjacency.append(neighbours)
    for member in clique.members:
        state.adjacency[member].add(vid)
        state.vertices[member].degree += 1
    state.edge_count += d + 1
    if state.check_births:
        expected = {state.vertex_for(label) for label in upward_labels(code)}
        if expected != neighbours:
            raise InvariantViolation(f"vertex {code} born with neighbours {sorted(neighbours)}, expected {sorted(expected)}")

    # Child j replaces T_j by the new vertex; child 1 takes over the slot.
    children = []
    for j in range(1, d + 2):
        members = list(clique.members)
        members[j - 1] = vid
        children.append(ActiveClique(code=code.child(j), members=tuple(members)))
    state.active[index] = children[0]
    state.active.extend(children[1:])
    return vid


def fill_clique(state: GraphState, code: Code) -> int:
    """Fill the active clique with the given code as one growth step; returns the new vertex id."""
    for index, clique in enumerate(state.active):
        if clique.code == code:
            state.step += 1
            state.added_nodes += 1
            return _fill(state, index)
    raise InvalidArgument(f"no active clique with code {str(code)!r}")


# ---------------------------------------------------------------------------
# Growth steps
# ---------------------------------------------------------------------------

def step_ran(state: GraphState, rng: np.random.Generator) -> GraphState:
    if state.model is not GrowthModel.ran:
        raise InvalidArgument("step_ran needs a RAN state")
    state.step += 1
    _fill(state, int(rng.integers(len(state.active))))
    state.added_nodes += 1
    return state


def step_ean(state: GraphState, q: float, rng: np.random.Generator) -> GraphState:
    """Fill every clique active at step entry independently with probability q."""
    if state.model is not GrowthModel.ean:
        raise InvalidArgument("step_ean needs an EAN state")
    if not 0.0 <= q <= 1.0:
        raise InvalidArgument(f"occupation parameter must lie in [0, 1], got {q}")
    state.step += 1
    entry = len(state.active)
    chosen = np.flatnonzero(rng.random(entry) < q)
    # Cliques appended during the step sit at indices >= entry and are never chosen.
    for index in chosen:
        _fill(state, int(index))
    state.added_nodes += len(chosen)
    state.qhat_history.append(len(chosen) / entry)
    return state


def grow(
    state: GraphState,
    steps: int,
    schedule: Optional[QSchedule],
    rng: np.random.Generator,
) -> GraphState:
    if steps < 0:
        raise InvalidArgument(f"step count must be >= 0, got {steps}")
    if state.model is GrowthModel.ran:
        for _ in range(steps):
            step_ran(state, rng)
    else:
        if schedule is None:
            raise InvalidArgument("EAN growth needs an occupation schedule")
        for _ in range(steps):
            step_ean(state, schedule.q_at(state.step + 1), rng)
    logger.info(
        f"Grew {state.model.value.upper()} d={state.d} to step {state.step}: "
        f"{state.n_vertices} vertices, {state.n_active} active cliques"
    )
    return state


def ean_growth_ratio(state: GraphState, schedule: QSchedule) -> float:
    """(N(n) + (d+1)/d) / prod_{i<=n} (1 + d q_i), a mean-preserving martingale in n."""
    q = schedule.values_through(state.step)
    log_growth = float(np.sum(np.log1p(state.d * q)))
    offset = (state.d + 1) / state.d
    return (state.added_nodes + offset) * math.exp(-log_growth)


# ---------------------------------------------------------------------------
# Sampling
# ---------------------------------------------------------------------------

def sample_uniform_active(state: GraphState, rng: np.random.Generator) -> ActiveClique:
    if not state.active:
        raise InvalidArgument("no active cliques to sample from")
    return state.active[int(rng.integers(len(state.active)))]


def sample_size_biased_vertex(state: GraphState, rng: np.random.Generator) -> int:
    """A uniform member of a uniform active clique."""
    clique = sample_uniform_active(state, rng)
    return clique.members[int(rng.integers(state.d + 1))]


# ---------------------------------------------------------------------------
# Invariants
# ---------------------------------------------------------------------------

def clique_memberships(state: GraphState) -> np.ndarray:
    """Number of active cliques containing each vertex."""
    counts = np.zeros(state.n_vertices, dtype=np.int64)
    for clique in state.active:
        for member in clique.members:
            counts[member] += 1
    return counts


def check_invariants(state: GraphState) -> None:
    """Raise InvariantViolation unless the state is a consistent grown network."""
    d = state.d
    n_active = len(state.active)
    if n_active != d * state.added_nodes + d + 1:
        raise InvariantViolation(f"{n_active} active cliques after {state.added_nodes} insertions")
    if state.n_vertices != state.added_nodes + d + 2:
        raise InvariantViolation(f"{state.n_vertices} vertices after {state.added_nodes} insertions")
    if state.model is GrowthModel.ran and state.added_nodes != state.step:
        raise InvariantViolation(f"RAN inserted {state.added_nodes} vertices in {state.step} steps")
    expected_edges = (d + 1) * (d + 2) // 2 + state.added_nodes * (d + 1)
    degree_sum = sum(len(nbrs) for nbrs in state.adjacency)
    if state.edge_count != expected_edges or degree_sum != 2 * expected_edges:
        raise InvariantViolation(f"edge count {state.edge_count}, expected {expected_edges}")
    for record in state.vertices:
        if record.degree != len(state.adjacency[record.id]):
            raise InvariantViolation(f"vertex {record.id} degree {record.degree} disagrees with adjacency")

    # Corners sit in one clique fewer than A_deg.
    memberships = clique_memberships(state)
    for record in state.vertices:
        expected = clique_count(d, record.degree) - (1 if record.corner is not None else 0)
        if memberships[record.id] != expected:
            raise InvariantViolation(
                f"vertex {record.label} of degree {record.degree} is in "
                f"{memberships[record.id]} active cliques, expected {expected}"
            )
    weight = sum(clique_count(d, r.degree) for r in state.vertices) - (d + 1)
    if weight != (d + 1) * n_active:
        raise InvariantViolation(f"sum of A_deg minus corners is {weight}, expected {(d + 1) * n_active}")

    for clique in state.active:
        members = tuple(state.vertex_for(label) for label in upward_labels(clique.code))
        if members != clique.members:
            raise InvariantViolation(f"clique {clique.code} members {clique.members}, code gives {members}")
        for i, a in enumerate(members):
            for b in members[i + 1:]:
                if b not in state.adjacency[a]:
                    raise InvariantViolation(f"clique {clique.code} members {a} and {b} are not adjacent")
