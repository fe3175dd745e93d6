"""
Exact-law samplers for the quantities the limit theorems describe.

G_m, the generation of the m-th splitting vertex, is a sum of independent
Bernoulli((d+1)/(d i + 1)), i = 1..m; in an EAN the i-th indicator has
probability q_i instead. H_k counts complete coupon-collector blocks of a
length-k uniform code.
"""
import math
from typing import Optional, Union

import numpy as np

from apollonian.errors import InvalidArgument
from apollonian.generator.schedule import QSchedule
from apollonian.theory.coupon import mu_exact

# Bernoulli draws materialized per chunk when sampling many G_m at once.
_CHUNK_CELLS = 2_000_000


def gm_probabilities(d: int, m: int) -> np.ndarray:
    i = np.arange(1, m + 1, dtype=float)
    return (d + 1) / (d * i + 1)


def gm_moments(d: int, m: int) -> tuple[float, float]:
    """(E[G_m], Var[G_m])."""
    p = gm_probabilities(d, m)
    return math.fsum(p), math.fsum(p * (1.0 - p))


def _bernoulli_sums(p: np.ndarray, rng: np.random.Generator, size: Optional[int]) -> Union[int, np.ndarray]:
    if size is None:
        return int(np.count_nonzero(rng.random(p.size) < p))
    out = np.empty(size, dtype=np.int64)
    rows = max(1, _CHUNK_CELLS // max(p.size, 1))
    for start in range(0, size, rows):
        stop = min(start + rows, size)
        out[start:stop] = np.count_nonzero(rng.random((stop - start, p.size)) < p, axis=1)
    return out


def sample_gm(d: int, m: int, rng: np.random.Generator, size: Optional[int] = None):
    if m < 1:
        raise InvalidArgument(f"m must be >= 1, got {m}")
    return _bernoulli_sums(gm_probabilities(d, m), rng, size)


def sample_gm_ean(schedule: QSchedule, n: int, rng: np.random.Generator, size: Optional[int] = None):
    if n < 1:
        raise InvalidArgument(f"n must be >= 1, got {n}")
    return _bernoulli_sums(schedule.values_through(n), rng, size)


def sample_yd(d: int, rng: np.random.Generator, size: Optional[int] = None):
    """Y_d as a sum of geometrics with success probabilities i/(d+1)."""
    p = np.arange(1, d + 2) / (d + 1)
    if size is None:
        return int(sum(int(rng.geometric(pi)) for pi in p))
    total = np.zeros(size, dtype=np.int64)
    for pi in p:
        total += rng.geometric(pi, size=size)
    return total


def _renewal_once(d: int, k: int, rng: np.random.Generator, batch: int, include_leftover: bool) -> int:
    count = 0
    used = 0
    while True:
        lengths = sample_yd(d, rng, size=batch)
        ends = used + np.cumsum(lengths)
        fitting = int(np.searchsorted(ends, k, side="right"))
        count += fitting
        if fitting < batch:
            if fitting:
                used = int(ends[fitting - 1])
            break
        used = int(ends[-1])
    if include_leftover and used < k:
        count += 1
    return count


def renewal_hk(
    d: int,
    k: int,
    rng: np.random.Generator,
    size: Optional[int] = None,
    include_leftover: bool = False,
):
    """
    H_k = max{h : Y^(1) + ... + Y^(h) <= k} for i.i.d. copies of Y_d.

    With include_leftover, one more is added when the complete blocks do not
    reach k exactly; that count has the law of block_count of a uniform
    length-k code.
    """
    if k < 0:
        raise InvalidArgument(f"k must be >= 0, got {k}")
    batch = int(k / float(mu_exact(d)) * 1.25) + 16
    if size is None:
        return _renewal_once(d, k, rng, batch, include_leftover)
    return np.array([_renewal_once(d, k, rng, batch, include_leftover) for _ in range(size)], dtype=np.int64)
