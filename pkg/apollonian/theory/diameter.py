"""
Diameter and flooding constants.

The diameter of a RAN grows like 2 (alpha beta c~ / mu) log n where (alpha, beta)
maximizes alpha*beta on the curve

    g(alpha, beta) = 1 + f_d(alpha c~) - alpha beta (c~/mu) I_d(mu/beta) = 0,
    alpha in ((d+1)/(d c~), 1],  beta in [1, mu/(d+1)].

g decreases in both arguments, so for each beta there is at most one alpha on
the branch where f_d decreases. solve_diameter maximizes alpha(beta)*beta on a
grid, polishes the maximizer on the stationarity condition

    alpha = ((d+1)/(d c~)) exp(-I_d'(mu/beta)),   I_d' = lambda*,

and then verifies both Lagrange identities: the slope condition

    f_d'(alpha c~) = I_d'(mu/beta)

and the balance of the two terms of g.
"""
import logging
import math
from functools import lru_cache
from typing import Optional

import numpy as np
from pydantic import BaseModel
from scipy.optimize import brentq, minimize_scalar

from apollonian.errors import SolverError
from apollonian.theory.constants import (
    c_tilde,
    f_d,
    f_d_derivative,
    hop_clt_constants,
    mu,
    sigma2,
)
from apollonian.theory.rates import rate_derivative, rate_function

logger = logging.getLogger(__name__)

GRID_POINTS = 400
STATIONARITY_TOLERANCE = 1e-6
CONSTANT_KEYS = [
    "d", "mu", "sigma2", "c_tilde", "alpha", "beta",
    "diam_const", "flood_const", "hop_mean_coeff", "hop_var_coeff",
]


class TheoryBundle(BaseModel):
    d:              int
    mu:             float
    sigma2:         float
    c_tilde:        float
    alpha_tilde:    float
    beta_tilde:     float
    diam_const:     float
    flood_const:    float
    hop_mean_coeff: float
    hop_var_coeff:  float
    interior:       bool = True

    def constants_json(self) -> dict:
        """The `constants` CLI payload, numbers rounded to 12 significant digits."""
        values = {
            "mu":             self.mu,
            "sigma2":         self.sigma2,
            "c_tilde":        self.c_tilde,
            "alpha":          self.alpha_tilde,
            "beta":           self.beta_tilde,
            "diam_const":     self.diam_const,
            "flood_const":    self.flood_const,
            "hop_mean_coeff": self.hop_mean_coeff,
            "hop_var_coeff":  self.hop_var_coeff,
        }
        payload = {"d": self.d}
        payload.update({key: float(f"{value:.12g}") for key, value in values.items()})
        return payload


def constraint(d: int, alpha: float, beta: float, c: Optional[float] = None) -> float:
    """g(alpha, beta)."""
    c = c_tilde(d) if c is None else c
    m = mu(d)
    return 1.0 + f_d(d, alpha * c) - alpha * beta * (c / m) * rate_function(d, m / beta)


def alpha_on_constraint(d: int, beta: float, c: Optional[float] = None) -> Optional[float]:
    """alpha with g(alpha, beta) = 0 on the decreasing branch, or None if there is none."""
    c = c_tilde(d) if c is None else c
    m = mu(d)
    weight = beta * (c / m) * rate_function(d, m / beta)
    alpha_min = (d + 1) / (d * c)

    def g(alpha: float) -> float:
        return 1.0 + f_d(d, alpha * c) - alpha * weight

    if g(1.0) >= 0.0:
        return 1.0
    if g(alpha_min) < 0.0:
        return None
    return brentq(g, alpha_min, 1.0, xtol=1e-14, maxiter=200)


def _lagrange_alpha(d: int, beta: float, c: float) -> float:
    return (d + 1) / (d * c) * math.exp(-rate_derivative(d, mu(d) / beta))


@lru_cache(maxsize=16)
def solve_diameter(d: int, grid_points: int = GRID_POINTS) -> TheoryBundle:
    c = c_tilde(d)
    m = mu(d)
    beta_max = m / (d + 1)

    betas = np.linspace(1.0, beta_max, grid_points + 1)
    alphas = [alpha_on_constraint(d, float(b), c) for b in betas]
    if all(a is None for a in alphas):
        raise SolverError(f"constraint has no feasible point for d={d}")
    products = np.array([a * b if a is not None else -np.inf for a, b in zip(alphas, betas)])
    best = int(np.argmax(products))
    lo = float(betas[max(best - 1, 0)])
    hi = float(betas[min(best + 1, grid_points)])
    # Stay off beta_max, where lambda* diverges.
    hi = min(hi, beta_max - 1e-9 * beta_max)

    def stationarity(beta: float) -> float:
        return alpha_on_constraint(d, beta, c) - _lagrange_alpha(d, beta, c)

    if stationarity(lo) * stationarity(hi) < 0.0:
        beta_star = brentq(stationarity, lo, hi, xtol=1e-13, maxiter=200)
    else:
        logger.warning(f"d={d}: stationarity root not bracketed on [{lo:.6f}, {hi:.6f}], using bounded search")
        result = minimize_scalar(
            lambda b: -alpha_on_constraint(d, b, c) * b,
            bounds=(lo, hi),
            method="bounded",
            options={"xatol": 1e-12},
        )
        beta_star = float(result.x)
    alpha_star = alpha_on_constraint(d, beta_star, c)

    interior = 1.0 + 1e-9 < beta_star < beta_max - 1e-9 and alpha_star < 1.0 - 1e-12
    # f_d'(alpha c~) = lambda*(mu/beta) at an interior optimum.
    residual_alpha = abs(f_d_derivative(d, alpha_star * c) - rate_derivative(d, m / beta_star))
    lhs = beta_star / m * rate_function(d, m / beta_star)
    rhs = (1.0 + f_d(d, alpha_star * c)) / (alpha_star * c)
    residual_balance = abs(lhs - rhs)
    if interior and max(residual_alpha, residual_balance) > STATIONARITY_TOLERANCE:
        raise SolverError(
            f"d={d}: optimum (alpha={alpha_star:.8f}, beta={beta_star:.8f}) fails stationarity "
            f"(residuals {residual_alpha:.2e}, {residual_balance:.2e})"
        )
    if not interior:
        logger.warning(f"d={d}: diameter optimum on the boundary at beta={beta_star:.8f}")

    mean_coeff, var_coeff = hop_clt_constants(d)
    product = alpha_star * beta_star * c
    bundle = TheoryBundle(
        d              = d,
        mu             = m,
        sigma2         = sigma2(d),
        c_tilde        = c,
        alpha_tilde    = alpha_star,
        beta_tilde     = beta_star,
        diam_const     = 2.0 * product / m,
        flood_const    = ((d + 1) / d + product) / m,
        hop_mean_coeff = mean_coeff,
        hop_var_coeff  = var_coeff,
        interior       = interior,
    )
    logger.info(
        f"d={d}: alpha={bundle.alpha_tilde:.6f} beta={bundle.beta_tilde:.6f} "
        f"diam={bundle.diam_const:.6f} flood={bundle.flood_const:.6f}"
    )
    return bundle
