"""Covert power levels for a total-variation budget delta.

The closed forms invert the Hellinger-based sandwich: p_nec inverts the
squared-Hellinger lower bound (spending more power than this certainly
violates the budget), p_suf inverts the sharper Hellinger upper bound
(spending no more than this certainly meets it), and p_exact solves
tvd_exact(theta) = delta by bisection bracketed between the two.

With lambda = sqrt(1 - 4y) the closed-form snr is
(1 - 2y + sqrt(1 - 4y))/(2y) - 1 = 2 lambda / (1 - lambda), which is the
form used here (exact algebraic rewrite, stable as delta -> 0).
"""

from __future__ import annotations

import math
from dataclasses import dataclass

from .errors import ConsistencyError, DomainError
from .tvd import tvd_exact
from .types import ChannelPoint


@dataclass(frozen=True)
class CovertBudget:
    """TVD budget delta with its derived intermediates.

    y  = (1/4)(1 - delta)^(4/n)        lambda  = sqrt(1 - 4 y)
    y0 = (1/4)(1 - delta^2)^(2/n)      lambda1 = sqrt(1 - 4 y0)
    """

    delta: float
    n: int
    y: float
    y0: float
    lam: float
    lam1: float

    @classmethod
    def from_delta(cls, n: int, delta: float) -> "CovertBudget":
        if not isinstance(n, int) or isinstance(n, bool) or n < 1:
            raise DomainError(f"blocklength must be a positive integer, got {n!r}")
        if not (math.isfinite(delta) and 0.0 < delta < 1.0):
            raise DomainError(f"TVD budget must lie in (0, 1), got {delta!r}")
        log_y4 = (4.0 / n) * math.log1p(-delta)            # ln (1-delta)^(4/n)
        log_y04 = (2.0 / n) * math.log1p(-delta * delta)   # ln (1-delta^2)^(2/n)
        return cls(
            delta=delta,
            n=n,
            y=0.25 * math.exp(log_y4),
            y0=0.25 * math.exp(log_y04),
            lam=math.sqrt(-math.expm1(log_y4)),
            lam1=math.sqrt(-math.expm1(log_y04)),
        )


@dataclass(frozen=True)
class PowerInterval:
    """Sufficient / exact / necessary power triple; p_suf <= p_exact <= p_nec."""

    p_suf: float
    p_exact: float
    p_nec: float


def eta_from_lambda(lam: float) -> float:
    """(1 - 2y + sqrt(1 - 4y)) / (2y) rewritten as (1 + lam)/(1 - lam)."""
    return (1.0 + lam) / (1.0 - lam)


def p_nec(n: int, delta: float, sigma2: float = 1.0) -> float:
    """Necessary power level: above it the budget is certainly violated.

    Equivalently the unique theta >= 0 with hellinger_sq(theta) = delta,
    scaled by sigma2.
    """
    _check_sigma2(sigma2)
    budget = CovertBudget.from_delta(n, delta)
    return 2.0 * budget.lam / (1.0 - budget.lam) * sigma2


def p_suf(n: int, delta: float, sigma2: float = 1.0) -> float:
    """Sufficient power level: at or below it the budget certainly holds.

    Equivalently the unique theta with the Hellinger upper bound
    sqrt(1 - (1 - H^2)^2) equal to delta, scaled by sigma2.
    """
    _check_sigma2(sigma2)
    budget = CovertBudget.from_delta(n, delta)
    return 2.0 * budget.lam1 / (1.0 - budget.lam1) * sigma2


def p_exact(n: int, delta: float, sigma2: float = 1.0, rel_tol: float = 1e-10) -> PowerInterval:
    """Power at which the exact TVD equals delta, by bracketed bisection.

    The root is bisected on the snr interval [p_suf, p_nec]/sigma2, which
    must bracket it since the exact distance is sandwiched by the bounds
    the endpoints invert; a non-bracketing interval raises
    ConsistencyError because it can only mean an implementation bug.
    """
    _check_sigma2(sigma2)
    # bracket in snr units (sigma2 = 1), scale the result at the end
    lo = p_suf(n, delta)
    hi = p_nec(n, delta)
    f_lo = tvd_exact(ChannelPoint(n=n, theta=lo)).value - delta
    f_hi = tvd_exact(ChannelPoint(n=n, theta=hi)).value - delta
    if f_lo > 0.0 or f_hi < 0.0:
        raise ConsistencyError(
            f"exact TVD not bracketed by [p_suf, p_nec] at n={n}, delta={delta}: "
            f"endpoints deviate by ({f_lo:+.3e}, {f_hi:+.3e})"
        )
    while hi - lo > rel_tol * hi:
        mid = 0.5 * (lo + hi)
        if tvd_exact(ChannelPoint(n=n, theta=mid)).value < delta:
            lo = mid
        else:
            hi = mid
    theta = 0.5 * (lo + hi)
    return PowerInterval(
        p_suf=p_suf(n, delta, sigma2),
        p_exact=theta * sigma2,
        p_nec=p_nec(n, delta, sigma2),
    )


def _check_sigma2(sigma2: float) -> None:
    if not (math.isfinite(sigma2) and sigma2 > 0.0):
        raise DomainError(f"noise variance must be finite and positive, got {sigma2!r}")
