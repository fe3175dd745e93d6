"""
Large deviations of the coupon-collector time.

    Lambda(l) = log E[exp(l Y_d)]
              = log d! - d log(d+1) + (d+1) l - sum_{i=1}^{d} log(1 - (i/(d+1)) e^l),

finite for l < log((d+1)/d). The rate function is the Legendre transform
I(x) = sup_l (l x - Lambda(l)), attained at l*(x) solving Lambda'(l) = x, and
I'(x) = l*(x).
"""
import math

from scipy.optimize import brentq

from apollonian.errors import DomainError, InvalidArgument

_LOWEST_LAMBDA = -700.0


def _check_dimension(d: int) -> None:
    if d < 1:
        raise InvalidArgument(f"dimension must be >= 1, got {d}")


def lambda_boundary(d: int) -> float:
    return math.log((d + 1) / d)


def _ratios(d: int, lam: float) -> list[float]:
    e = math.exp(lam)
    return [(i / (d + 1)) * e for i in range(1, d + 1)]


def log_mgf(d: int, lam: float) -> float:
    _check_dimension(d)
    if lam >= lambda_boundary(d):
        raise DomainError(f"log-MGF of Y_{d} is infinite for lambda >= log((d+1)/d), got {lam}")
    total = math.lgamma(d + 1) - d * math.log(d + 1) + (d + 1) * lam
    for i in range(1, d + 1):
        # 1 - (i/(d+1)) e^lam, via expm1 near the boundary where it vanishes
        one_minus = -math.expm1(lam + math.log(i / (d + 1)))
        total -= math.log(one_minus)
    return total


def mgf_mean(d: int, lam: float) -> float:
    """Lambda'(lam): the mean of Y_d under exponential tilting by lam."""
    _check_dimension(d)
    if lam >= lambda_boundary(d):
        raise DomainError(f"lambda must be below log((d+1)/d), got {lam}")
    total = float(d + 1)
    for r in _ratios(d, lam):
        total += r / (1.0 - r)
    return total


def mgf_variance(d: int, lam: float) -> float:
    """Lambda''(lam)."""
    if lam >= lambda_boundary(d):
        raise DomainError(f"lambda must be below log((d+1)/d), got {lam}")
    return sum(r / (1.0 - r) ** 2 for r in _ratios(d, lam))


def rate_derivative(d: int, x: float) -> float:
    """lambda*(x), the unique root of Lambda'(lambda) = x; -inf at x = d+1."""
    _check_dimension(d)
    if x < d + 1:
        raise DomainError(f"x must be >= d+1 = {d + 1}, got {x}")
    if x == d + 1:
        return -math.inf
    if not math.isfinite(x):
        raise DomainError(f"x must be finite, got {x}")
    boundary = lambda_boundary(d)

    def residual(lam: float) -> float:
        return mgf_mean(d, lam) - x

    if residual(0.0) <= 0.0:
        lo, hi = 0.0, boundary
        gap = boundary
        while residual(boundary - gap) < 0.0:
            lo = boundary - gap
            gap /= 2.0
        hi = boundary - gap
    else:
        lo, hi = -1.0, 0.0
        while residual(lo) > 0.0:
            if lo <= _LOWEST_LAMBDA:
                return lo
            hi, lo = lo, max(2.0 * lo, _LOWEST_LAMBDA)
    if residual(lo) == 0.0:
        return lo
    return brentq(residual, lo, hi, xtol=1e-15, maxiter=200)


def rate_function(d: int, x: float) -> float:
    """I_d(x) = lambda* x - Lambda(lambda*)."""
    if x == d + 1:
        return (d + 1) * math.log(d + 1) - math.lgamma(d + 2)
    lam = rate_derivative(d, x)
    return lam * x - log_mgf(d, lam)
