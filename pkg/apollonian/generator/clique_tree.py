"""
Code-only growth of the clique tree.

Experiments that only need codes of active cliques and vertex generations
(hopcount, depth) do not need adjacency. CliqueTree keeps one parent pointer,
one symbol and one code length per clique ever created, in flat numpy
buffers, so a RAN with 10^6 steps stays small. Draw conventions match
GraphState: the filled slot is taken over by child 1 and children 2..d+1 are
appended.
"""
import logging

import numpy as np

from apollonian.coding.codes import Code
from apollonian.errors import InvalidArgument
from apollonian.generator.schedule import QSchedule

logger = logging.getLogger(__name__)


class CliqueTree:
    def __init__(self, d: int, capacity: int = 1024):
        if d < 2:
            raise InvalidArgument(f"dimension must be >= 2, got {d}")
        self.d = d
        alphabet = d + 1
        capacity = max(capacity, 2 * alphabet)
        self.parent = np.full(capacity, -1, dtype=np.int64)
        self.symbol = np.zeros(capacity, dtype=np.int8 if alphabet < 128 else np.int64)
        self.generation = np.zeros(capacity, dtype=np.int32)   # code length of the clique
        self.active = np.zeros(capacity, dtype=np.int64)
        self.symbol[:alphabet] = np.arange(1, alphabet + 1)
        self.generation[:alphabet] = 1
        self.active[:alphabet] = np.arange(alphabet)
        self.n_cliques = alphabet
        self.n_active = alphabet
        self.step = 0
        self.added_nodes = 0
        self.max_vertex_generation = 0

    def _reserve(self, extra: int) -> None:
        needed = self.n_cliques + extra
        if needed <= len(self.parent):
            return
        capacity = max(needed, 2 * len(self.parent))
        for name in ("parent", "symbol", "generation", "active"):
            old = getattr(self, name)
            grown = np.zeros(capacity, dtype=old.dtype)
            grown[: len(old)] = old
            setattr(self, name, grown)

    def _fill(self, slot: int) -> None:
        alphabet = self.d + 1
        self._reserve(alphabet)
        cid = int(self.active[slot])
        generation = int(self.generation[cid])
        if generation > self.max_vertex_generation:
            self.max_vertex_generation = generation
        first = self.n_cliques
        stop = first + alphabet
        self.parent[first:stop] = cid
        self.symbol[first:stop] = np.arange(1, alphabet + 1)
        self.generation[first:stop] = generation + 1
        self.active[slot] = first
        self.active[self.n_active:self.n_active + self.d] = np.arange(first + 1, stop)
        self.n_cliques = stop
        self.n_active += self.d
        self.added_nodes += 1

    def grow_ran(self, steps: int, rng: np.random.Generator) -> "CliqueTree":
        if steps < 0:
            raise InvalidArgument(f"step count must be >= 0, got {steps}")
        self._reserve(steps * (self.d + 1))
        for u in rng.random(steps):
            self.step += 1
            size = self.n_active
            self._fill(min(int(u * size), size - 1))
        return self

    def step_ean(self, q: float, rng: np.random.Generator) -> int:
        """One EAN step over the cliques active at entry; returns the number filled."""
        if not 0.0 <= q <= 1.0:
            raise InvalidArgument(f"occupation parameter must lie in [0, 1], got {q}")
        self.step += 1
        chosen = np.flatnonzero(rng.random(self.n_active) < q)
        for slot in chosen:
            self._fill(int(slot))
        return len(chosen)

    def grow_ean(self, steps: int, schedule: QSchedule, rng: np.random.Generator) -> "CliqueTree":
        if steps < 0:
            raise InvalidArgument(f"step count must be >= 0, got {steps}")
        for _ in range(steps):
            self.step_ean(schedule.q_at(self.step + 1), rng)
        logger.debug(f"EAN clique tree d={self.d} at step {self.step}: {self.added_nodes} vertices inserted")
        return self

    def active_ids(self) -> np.ndarray:
        return self.active[: self.n_active]

    def sample_active(self, rng: np.random.Generator) -> int:
        if self.n_active == 0:
            raise InvalidArgument("no active cliques to sample from")
        return int(self.active[int(rng.integers(self.n_active))])

    def code(self, cid: int) -> Code:
        symbols = []
        while cid >= 0:
            symbols.append(int(self.symbol[cid]))
            cid = int(self.parent[cid])
        symbols.reverse()
        return Code._trusted(tuple(symbols), self.d)
