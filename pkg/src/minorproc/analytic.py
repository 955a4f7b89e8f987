"""Closed-form predictions for the constrained process at linear edge densities.

Everything here is a function of the survival probability of a Poisson(c)
branching process, the unique positive root of 1 - x = exp(-c*x).  From it we
get the limiting accepted-edge density, its derivative and inverse, and the
predicted rejected/forbidden/giant-component curves.
"""

from __future__ import annotations

import math
from dataclasses import dataclass

from .errors import ConvergenceError, DomainError

# Below this the root is numerically indistinguishable from 0.
_MIN_C = 1.0 + 1e-9
_EPS = 1e-15


@dataclass(frozen=True)
class SolverConfig:
    """Bisection control: absolute tolerance on the root and iteration cap."""

    tolerance: float = 1e-12
    max_iterations: int = 200

    def __post_init__(self) -> None:
        if self.tolerance <= 0:
            raise DomainError(f"tolerance must be positive, got {self.tolerance}")
        if self.max_iterations < 1:
            raise DomainError(f"max_iterations must be >= 1, got {self.max_iterations}")


DEFAULT_SOLVER = SolverConfig()


def survival_prob(c: float, cfg: SolverConfig = DEFAULT_SOLVER) -> float:
    """Survival probability of a Poisson(c) branching process, c > 1.

    Bisection on g(x) = 1 - x - exp(-c*x) over (eps, 1-eps): g is positive
    left of the root and negative right of it, so plain sign bisection
    converges unconditionally; no derivative near c -> 1 to worry about.
    """
    if not c > _MIN_C:
        raise DomainError(f"survival probability needs c > 1 (got c={c})")
    lo, hi = _EPS, 1.0 - _EPS
    # For very large c the root sits within exp(-c) of 1, possibly past hi;
    # hi is then already inside tolerance of the defining equation.
    if 1.0 - hi - math.exp(-c * hi) >= 0.0:
        return hi
    for _ in range(cfg.max_iterations):
        mid = 0.5 * (lo + hi)
        if 1.0 - mid - math.exp(-c * mid) > 0.0:
            lo = mid
        else:
            hi = mid
        if hi - lo <= cfg.tolerance:
            return 0.5 * (lo + hi)
    raise ConvergenceError(
        f"bisection for c={c} did not reach tolerance {cfg.tolerance} "
        f"in {cfg.max_iterations} iterations"
    )


def accepted_density(c: float, cfg: SolverConfig = DEFAULT_SOLVER) -> float:
    """Limiting accepted edges per n/2 at query density c > 1; lies in (1, 2)."""
    b = survival_prob(c, cfg)
    return 2.0 * b + c * (1.0 - b) ** 2


def accepted_density_slope(c: float, cfg: SolverConfig = DEFAULT_SOLVER) -> float:
    """Derivative of the accepted density, equal to 1 - survival_prob(c)**2."""
    b = survival_prob(c, cfg)
    return 1.0 - b * b


def inverse_accepted_density(y: float, cfg: SolverConfig = DEFAULT_SOLVER) -> float:
    """The query density c > 1 with accepted_density(c) == y, for y in (1, 2).

    The density is strictly increasing, so a bracketed bisection works; the
    upper bracket starts at 2 and doubles until the density exceeds y (the
    density approaches 2 only in the limit, so a bracket always exists).
    """
    if not (1.0 < y < 2.0):
        raise DomainError(f"inverse needs a value strictly inside (1, 2), got {y}")
    if y >= 2.0 - 1e-12:
        # 2 - f(c) ~ 2e^-c underflows double precision long before here
        raise DomainError(f"{y} is numerically indistinguishable from the limit 2")
    lo = _MIN_C
    hi = 2.0
    while accepted_density(hi, cfg) < y:
        hi *= 2.0
        if hi > 1e9:  # y < 2 guarantees this is unreachable
            raise ConvergenceError(f"no upper bracket found for y={y}")
    for _ in range(cfg.max_iterations):
        mid = 0.5 * (lo + hi)
        if accepted_density(mid, cfg) < y:
            lo = mid
        else:
            hi = mid
        if hi - lo <= cfg.tolerance:
            return 0.5 * (lo + hi)
    raise ConvergenceError(
        f"inverse bisection for y={y} did not reach tolerance {cfg.tolerance}"
    )


@dataclass(frozen=True)
class CurvePoint:
    """All predictions at query density c, i.e. at step t = c*n/2.

    rejected_per_vertex   rejected edges per vertex, (c - f(c))/2
    rejected_fraction     rejected share of queries, 1 - f(c)/c
    forbidden_density     forbidden non-edges per n^2/2, beta(c)^2
    giant_fraction_process  largest-component share of the process graph, beta(c)
    uniform_giant_fraction  same for the uniform random graph at density c: c - 1,
                            clamped to [0, 1]; meaningful for the accepted-edge
                            parameterization (see AcceptedCurvePoint)
    """

    c: float
    beta: float
    f: float
    f_prime: float
    rejected_per_vertex: float
    rejected_fraction: float
    forbidden_density: float
    giant_fraction_process: float
    uniform_giant_fraction: float


def predictions(c: float, cfg: SolverConfig = DEFAULT_SOLVER) -> CurvePoint:
    """Predictions parameterized by query step t = c*n/2, for c > 1."""
    b = survival_prob(c, cfg)
    f = 2.0 * b + c * (1.0 - b) ** 2
    return CurvePoint(
        c=c,
        beta=b,
        f=f,
        f_prime=1.0 - b * b,
        rejected_per_vertex=(c - f) / 2.0,
        rejected_fraction=1.0 - f / c,
        forbidden_density=b * b,
        giant_fraction_process=b,
        uniform_giant_fraction=min(max(c - 1.0, 0.0), 1.0),
    )


@dataclass(frozen=True)
class AcceptedCurvePoint:
    """Predictions parameterized by accepted edges m0 = c*n/2, for 1 < c < 2.

    query_density         limiting 2*S/n where S is the number of queries
                          needed for m0 acceptances (the inverse density)
    giant_fraction        largest-component share of the graph after exactly
                          m0 acceptances: beta(inverse(c))
    uniform_giant_fraction  largest-component share of the uniform random
                          graph with m0 edges: c - 1, clamped to [0, 1]
    """

    c: float
    query_density: float
    giant_fraction: float
    uniform_giant_fraction: float


def predictions_by_accepted(
    c: float, cfg: SolverConfig = DEFAULT_SOLVER
) -> AcceptedCurvePoint:
    """Predictions parameterized by accepted-edge density, valid on (1, 2)."""
    if not (1.0 < c < 2.0):
        raise DomainError(
            f"accepted-edge parameterization needs 1 < c < 2, got {c}"
        )
    q = inverse_accepted_density(c, cfg)
    return AcceptedCurvePoint(
        c=c,
        query_density=q,
        giant_fraction=survival_prob(q, cfg),
        uniform_giant_fraction=min(max(c - 1.0, 0.0), 1.0),
    )
