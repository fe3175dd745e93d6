"""
Closed-form constants: mu_d, sigma_d^2, the depth constant c~_d and the
hopcount CLT coefficients for RAN and EAN.
"""
import math
from fractions import Fraction

import numpy as np
from scipy.optimize import brentq

from apollonian.errors import InvalidArgument
from apollonian.generator.schedule import QSchedule
from apollonian.theory.coupon import mu_exact, sigma2_exact

C_TILDE_UPPER = 20.0


def _check_dimension(d: int) -> None:
    if d < 2:
        raise InvalidArgument(f"dimension must be >= 2, got {d}")


def mu(d: int) -> float:
    return float(mu_exact(d))


def sigma2(d: int) -> float:
    return float(sigma2_exact(d))


def f_d(d: int, c: float) -> float:
    """Tail exponent of the generation law: c - (d+1)/d - c log(d c/(d+1))."""
    if c <= 0:
        raise InvalidArgument(f"c must be positive, got {c}")
    return c - (d + 1) / d - c * math.log(d * c / (d + 1))


def f_d_derivative(d: int, c: float) -> float:
    if c <= 0:
        raise InvalidArgument(f"c must be positive, got {c}")
    return -math.log(d * c / (d + 1))


def c_tilde(d: int) -> float:
    """The root of f_d(c) = -1 above (d+1)/d."""
    _check_dimension(d)
    lower = (d + 1) / d + 1e-9
    return brentq(lambda c: f_d(d, c) + 1.0, lower, C_TILDE_UPPER, xtol=1e-13, maxiter=200)


def hop_clt_constants(d: int) -> tuple[float, float]:
    """
    (mean_coeff, var_coeff): Hop_d(n) is approximately normal with mean
    mean_coeff * log n and variance var_coeff * log n.
    """
    _check_dimension(d)
    m = mu_exact(d)
    s2 = sigma2_exact(d)
    ratio = Fraction(d + 1, d)
    mean_coeff = 2 * ratio / m
    var_coeff = 2 * (s2 + m) / m**3 * ratio
    return float(mean_coeff), float(var_coeff)


def ean_hop_clt(schedule: QSchedule, n: int, d: int) -> tuple[float, float]:
    """(center, variance) of the EAN hopcount after n steps."""
    _check_dimension(d)
    if n < 0:
        raise InvalidArgument(f"step count must be >= 0, got {n}")
    q_sum, q_var_sum = schedule.partial_sums(n)
    m = mu(d)
    s2 = sigma2(d)
    center = 2.0 / m * q_sum
    variance = 2.0 * (s2 + m) / m**3 * q_var_sum
    return center, variance


def ean_lineage_rates(schedule: QSchedule, n: int, d: int) -> np.ndarray:
    """
    Per-step probability (d+1) q_i / (1 + d q_i) that the ancestral line of a
    uniform active clique gains a generation at step i.

    After step i a fraction of about (d+1) q_i / (1 + d q_i) of the active
    cliques are newborn children, so a uniform clique's ancestor is newborn
    with that probability rather than with probability q_i.
    """
    _check_dimension(d)
    q = schedule.values_through(n)
    return (d + 1) * q / (1.0 + d * q)


def ean_lineage_center(schedule: QSchedule, n: int, d: int) -> float:
    """(2/mu) sum of ean_lineage_rates: the hopcount drift of the simulated EAN."""
    return 2.0 / mu(d) * math.fsum(ean_lineage_rates(schedule, n, d))
