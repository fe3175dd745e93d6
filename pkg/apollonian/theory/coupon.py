"""
The coupon-collector time Y_d.

Y_d is the number of uniform draws from d+1 symbols until every symbol has
been seen: a sum of independent geometrics with success probabilities
i/(d+1), i = 1..d+1. Reading a uniform code from the right, Y_d is the length
of a full block.
"""
import math
from dataclasses import dataclass
from fractions import Fraction

import numpy as np

from apollonian.errors import InvalidArgument


def harmonic(n: int) -> Fraction:
    return sum((Fraction(1, i) for i in range(1, n + 1)), Fraction(0))


def mu_exact(d: int) -> Fraction:
    """E[Y_d] = (d+1) H(d+1)."""
    return (d + 1) * harmonic(d + 1)


def sigma2_exact(d: int) -> Fraction:
    """Var[Y_d] = sum_i (1 - p_i)/p_i^2 with p_i = i/(d+1)."""
    total = Fraction(0)
    for i in range(1, d + 2):
        p = Fraction(i, d + 1)
        total += (1 - p) / (p * p)
    return total


def exact_tail(d: int, t: int) -> float:
    """P(Y_d > t) by inclusion-exclusion over the symbols still missing after t draws."""
    alphabet = d + 1
    return math.fsum(
        (-1) ** (j + 1) * math.comb(alphabet, j) * (1 - j / alphabet) ** t
        for j in range(1, alphabet + 1)
    )


def tail_bound(d: int, t: int) -> float:
    """Union bound (d+1)(d/(d+1))^t on P(Y_d > t)."""
    return (d + 1) * (d / (d + 1)) ** t


@dataclass(frozen=True)
class CouponLaw:
    d: int
    pmf: np.ndarray      # pmf[t] = P(Y_d = t), t = 0..t_max
    mu: float
    sigma2: float

    @property
    def t_max(self) -> int:
        return len(self.pmf) - 1

    @property
    def mass(self) -> float:
        return math.fsum(self.pmf)

    def tail_bound(self) -> float:
        return tail_bound(self.d, self.t_max)

    def exact_tail(self) -> float:
        return exact_tail(self.d, self.t_max)

    def probability(self, t: int) -> float:
        return float(self.pmf[t]) if 0 <= t <= self.t_max else 0.0


def coupon_pmf(d: int, t_max: int) -> CouponLaw:
    """
    Exact pmf of Y_d up to t_max by dynamic programming on the number of
    distinct symbols seen; state j advances with probability (d+1-j)/(d+1).
    """
    if d < 1:
        raise InvalidArgument(f"dimension must be >= 1, got {d}")
    if t_max < d + 1:
        raise InvalidArgument(f"t_max must be >= d+1 = {d + 1}, got {t_max}")
    alphabet = d + 1
    advance = (alphabet - np.arange(alphabet)) / alphabet
    seen = np.zeros(alphabet)      # probability of having seen j symbols, not yet all
    seen[0] = 1.0
    pmf = np.zeros(t_max + 1)
    for t in range(1, t_max + 1):
        moved = seen * advance
        pmf[t] = moved[-1]
        seen = seen - moved
        seen[1:] += moved[:-1]
    return CouponLaw(d=d, pmf=pmf, mu=float(mu_exact(d)), sigma2=float(sigma2_exact(d)))


def yd_pmf(d: int, k: int) -> np.ndarray:
    """Law of min(Y_d, k): entries 0..k, the last one holding P(Y_d >= k)."""
    if k < 1:
        raise InvalidArgument(f"truncation k must be >= 1, got {k}")
    law = np.zeros(k + 1)
    if k > d + 1:
        law[:k] = coupon_pmf(d, k - 1).pmf
    law[k] = exact_tail(d, k - 1)
    return law
