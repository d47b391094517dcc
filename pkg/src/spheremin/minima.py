"""Expected minima of iid nonnegative variables.

Two routes everywhere: exact survival-power quadrature and the
large-n asymptotic 1/(f(0)(n+1)).  The half-normal specializations give
the mean smallest coordinate magnitude on the sphere via the gamma
half-ratio prefactor.
"""

from __future__ import annotations

import math
import warnings
from dataclasses import dataclass
from typing import Optional

from .distributions import Distribution, half_normal
from .errors import HypothesisViolatedError, HypothesisWarning
from .quadrature import survival_power_integral
from .special import SQRT_PI, gamma_ratio

DEFAULT_TOL = 1e-10


@dataclass(frozen=True)
class MinResult:
    n: int
    value: float
    method: str  # "quadrature" or "asymptotic"
    error_bound: Optional[float]  # None = unknown (asymptotic route)


def expected_min(dist: Distribution, n: int, tol: float = DEFAULT_TOL) -> MinResult:
    """E[min of n iid draws] = int_0^inf survival(y)^n dy."""
    res = survival_power_integral(dist, n, tol)
    return MinResult(n=n, value=res.value, method="quadrature", error_bound=res.abs_error_bound)


def nmin(n: int, tol: float = DEFAULT_TOL) -> MinResult:
    """Expected minimum of |Z_1|, ..., |Z_n| for iid normals with variance 1/2."""
    return expected_min(half_normal(), n, tol)


def emin(n: int, tol: float = DEFAULT_TOL) -> MinResult:
    """Mean of min_i |x_i| over the unit sphere S^(n-1).

    Equals Gamma(n/2)/Gamma((n+1)/2) times the half-normal expected
    minimum; min|x_i| is 1-homogeneous, so the transfer factor is exact.
    """
    base = nmin(n, tol)
    factor = gamma_ratio(n, 1)
    bound = factor * base.error_bound if base.error_bound is not None else None
    return MinResult(n=n, value=factor * base.value, method="quadrature", error_bound=bound)


def asymptotic_min(dist: Distribution, n: int) -> MinResult:
    """Large-n law E[min] ~ 1/(f(0)(n+1)).

    Requires a positive finite density at 0 and some known integrable
    survival power; no error bound is available, only the leading term.
    """
    if not isinstance(n, int) or isinstance(n, bool) or n < 1:
        raise ValueError(f"n must be an integer >= 1, got {n!r}")
    f0 = dist.density_at_zero
    if f0 is None or not math.isfinite(f0) or f0 <= 0.0:
        raise HypothesisViolatedError(
            "density",
            f"{dist.name}: asymptotic minimum needs a finite nonvanishing "
            f"density at 0, but f(0+) is {'undefined' if f0 is None else f0}",
        )
    if dist.tail_lp_exponent is None:
        warnings.warn(
            f"{dist.name}: no integrable survival power is known; the "
            "asymptotic law is not guaranteed to apply",
            HypothesisWarning,
            stacklevel=2,
        )
    return MinResult(n=n, value=1.0 / (f0 * (n + 1)), method="asymptotic", error_bound=None)


def emin_asymptotic(n: int) -> MinResult:
    """Closed-form large-n approximation to the spherical minimum mean.

    Gamma(n/2)/Gamma((n+1)/2) * sqrt(pi)/(2(n+1)), which behaves like
    sqrt(pi/2) * n^(-3/2) for large n.
    """
    if not isinstance(n, int) or isinstance(n, bool) or n < 1:
        raise ValueError(f"n must be an integer >= 1, got {n!r}")
    value = gamma_ratio(n, 1) * SQRT_PI / (2.0 * (n + 1))
    return MinResult(n=n, value=value, method="asymptotic", error_bound=None)
