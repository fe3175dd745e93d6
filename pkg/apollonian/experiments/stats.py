"""
Statistical post-processing for the Monte Carlo runs.

normal_cdf is scipy's ndtr (erfc-based, accurate to double precision), well
inside the 1e-7 needed by the KS statistics below.
"""
import math
from typing import Iterable

import numpy as np
from scipy import special, stats

from apollonian.errors import InvalidArgument


def normal_cdf(x):
    value = special.ndtr(x)
    return float(value) if np.ndim(value) == 0 else value


def ks_statistic(sample: Iterable[float]) -> float:
    """One-sample Kolmogorov-Smirnov distance to the standard normal; NaNs are dropped."""
    values = np.asarray(list(sample), dtype=float)
    values = values[np.isfinite(values)]
    if values.size == 0:
        raise InvalidArgument("KS statistic needs a non-empty sample")
    return float(stats.kstest(values, special.ndtr).statistic)


def standardize(value: float, center: float, variance: float) -> float:
    if variance <= 0.0 or not math.isfinite(variance):
        return math.nan
    return (value - center) / math.sqrt(variance)


def summarize(values: Iterable[float]) -> dict:
    """Order-insensitive summary: values are sorted before any accumulation."""
    data = np.sort(np.asarray(list(values), dtype=float))
    data = data[np.isfinite(data)]
    if data.size == 0:
        return {"count": 0, "mean": None, "variance": None, "median": None, "min": None, "max": None}
    mean = math.fsum(data) / data.size
    variance = math.fsum((data - mean) ** 2) / (data.size - 1) if data.size > 1 else 0.0
    return {
        "count":    int(data.size),
        "mean":     mean,
        "variance": variance,
        "median":   float(np.median(data)),
        "min":      float(data[0]),
        "max":      float(data[-1]),
    }
