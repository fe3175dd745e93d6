"""
Degree distribution: empirical histograms and the limiting law p_k.

With a = 2/(d-1), tau = (2d-1)/(d-1) and b = 3d/(d-1),

    p_k = d/(2d+1) * Gamma(b)/Gamma(1+a) * Gamma(k-d+a)/Gamma(k-d+a+tau),   k >= d+1,

the stationary solution of p_k (d + A_k) = p_{k-1} A_{k-1} + d 1{k = d+1}.
For d = 2 this is 24/(k(k+1)(k+2)).
"""
import math
from collections import Counter
from dataclasses import dataclass
from typing import Optional

import numpy as np
import pandas as pd
from scipy.special import gammaln

from apollonian.errors import InvalidArgument
from apollonian.generator.network import GraphState, clique_count

DEGREE_COLUMNS = ["k", "empirical", "theoretical", "abs_diff"]

# Below this argument the gammaln difference is accurate enough; above it the
# two log-gammas are large and nearly equal, so use the Stirling difference.
_STIRLING_FROM = 30.0


@dataclass(frozen=True)
class DegreeHistogram:
    counts: dict[int, int]
    total: int
    d: int

    def proportion(self, k: int) -> float:
        return self.counts.get(k, 0) / self.total if self.total else 0.0

    @property
    def max_degree(self) -> int:
        return max(self.counts) if self.counts else 0


def degree_histogram(state: GraphState) -> DegreeHistogram:
    counts = Counter(r.degree for r in state.vertices)
    return DegreeHistogram(counts=dict(sorted(counts.items())), total=state.n_vertices, d=state.d)


# ---------------------------------------------------------------------------
# Limiting law
# ---------------------------------------------------------------------------

def _stirling_remainder(z: np.ndarray) -> np.ndarray:
    z2 = z * z
    return (1 / 12 - (1 / 360 - (1 / 1260 - (1 / 1680) / z2) / z2) / z2) / z


def log_gamma_ratio(x: np.ndarray, m: float) -> np.ndarray:
    """log Gamma(x+m) - log Gamma(x) for x > 0, accurate to ~1e-15 relative for large x."""
    x = np.asarray(x, dtype=float)
    out = np.empty_like(x)
    small = x < _STIRLING_FROM
    if np.any(small):
        xs = x[small]
        out[small] = gammaln(xs + m) - gammaln(xs)
    if np.any(~small):
        xl = x[~small]
        out[~small] = (
            (xl - 0.5) * np.log1p(m / xl)
            + m * np.log(xl + m)
            - m
            + _stirling_remainder(xl + m)
            - _stirling_remainder(xl)
        )
    return out


def _check_dimension(d: int) -> None:
    if d < 2:
        raise InvalidArgument(f"dimension must be >= 2, got {d}")


def _law_parameters(d: int) -> tuple[float, float, float]:
    a = 2.0 / (d - 1)
    tau = (2.0 * d - 1.0) / (d - 1)
    log_const = math.log(d / (2 * d + 1)) + float(gammaln(3.0 * d / (d - 1)) - gammaln(1.0 + a))
    return a, tau, log_const


def theoretical_pk_array(d: int, ks) -> np.ndarray:
    """p_k for every k in `ks` (all k >= d+1)."""
    _check_dimension(d)
    ks = np.asarray(ks, dtype=float)
    if ks.size and ks.min() <= d:
        raise InvalidArgument(f"p_k is defined for k >= {d + 1}")
    a, tau, log_const = _law_parameters(d)
    return np.exp(log_const - log_gamma_ratio(ks - d + a, tau))


def theoretical_pk(d: int, k: int) -> float:
    if k <= d:
        raise InvalidArgument(f"p_k is defined for k >= {d + 1}, got k={k}")
    return float(theoretical_pk_array(d, [k])[0])


def tail_mass(d: int, k: int) -> float:
    """sum_{j>k} p_j, which telescopes to p_k A_k / d."""
    return theoretical_pk(d, k) * clique_count(d, k) / d


def power_law_exponent(d: int) -> float:
    return (2 * d - 1) / (d - 1)


# ---------------------------------------------------------------------------
# Empirical vs. limit
# ---------------------------------------------------------------------------

def _comparison_range(hist: DegreeHistogram, d: int) -> np.ndarray:
    # Beyond the largest observed degree the deviation is p_k, which decreases.
    return np.arange(d + 1, max(hist.max_degree, d + 1) + 2)


def sup_deviation(hist: DegreeHistogram, d: Optional[int] = None) -> float:
    """max_k |empirical p_k - p_k|."""
    d = hist.d if d is None else d
    ks = _comparison_range(hist, d)
    empirical = np.array([hist.proportion(int(k)) for k in ks])
    deviation = float(np.max(np.abs(empirical - theoretical_pk_array(d, ks))))
    # Degrees <= d have no limiting mass (never occurs in a grown network).
    for k, count in hist.counts.items():
        if k <= d:
            deviation = max(deviation, count / hist.total)
    return deviation


def degree_table(hist: DegreeHistogram) -> pd.DataFrame:
    ks = _comparison_range(hist, hist.d)
    empirical = np.array([hist.proportion(int(k)) for k in ks])
    theoretical = theoretical_pk_array(hist.d, ks)
    return pd.DataFrame(
        {
            "k":           ks,
            "empirical":   empirical,
            "theoretical": theoretical,
            "abs_diff":    np.abs(empirical - theoretical),
        },
        columns=DEGREE_COLUMNS,
    )
