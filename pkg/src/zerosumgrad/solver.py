"""Outer iteration driving both players, with duality-gap diagnostics.

Each step evaluates both gradients at the same (x, y) pair, solves both
inner subproblems, moves each player a fraction alpha toward its target,
and maintains running means whose payoff and vertex bounds form the
recorded Reward / Upperbound / Lowerbound curves.
"""

from __future__ import annotations

import enum
from dataclasses import dataclass

import numpy as np

from .errors import ConfigError, DimensionError, NumericError
from .game import PlayerSense, RewardMatrix, SimplexVector, grad_x, grad_y, payoff
from .subproblems import SubproblemResult, cg_vertex, euclidean_prox, kl_prox


class Method(enum.Enum):
    """Subproblem family used for both players."""

    CONDITIONAL_GRADIENT = "cg"
    EUCLIDEAN_PENALIZED = "euclid"
    KL_PENALIZED = "kl"

    @property
    def needs_beta(self) -> bool:
        return self is not Method.CONDITIONAL_GRADIENT


@dataclass(frozen=True)
class SolverConfig:
    """Method selection plus step size, penalty, horizon and initialization.

    init_x / init_y of None mean the uniform distribution.  record_every
    thins the trace; the initial state and the final step are always kept.
    """

    method: Method
    alpha: float
    beta: float | None = None
    iterations: int = 1000
    init_x: SimplexVector | None = None
    init_y: SimplexVector | None = None
    record_every: int = 1

    def __post_init__(self):
        if not isinstance(self.method, Method):
            raise ConfigError(f"unknown method {self.method!r}")
        if not 0.0 <= self.alpha <= 1.0:
            raise ConfigError(f"alpha must lie in [0, 1], got {self.alpha!r}")
        if self.iterations < 0:
            raise ConfigError(f"iterations must be nonnegative, got {self.iterations}")
        if self.record_every < 1:
            raise ConfigError(f"record_every must be positive, got {self.record_every}")
        if self.method.needs_beta:
            if self.beta is None:
                raise ConfigError(f"beta is required for method {self.method.value}")
            if not self.beta > 0.0:
                raise ConfigError(f"beta must be positive, got {self.beta!r}")
        elif self.beta is not None:
            raise ConfigError(f"beta is not a parameter of method {self.method.value}")


@dataclass(frozen=True)
class IterationRecord:
    """State of one recorded iteration: iterates, means, and gap diagnostics."""

    k: int
    x: SimplexVector
    y: SimplexVector
    x_hat: SimplexVector
    y_hat: SimplexVector
    reward: float
    upper: float
    lower: float
    gap: float


@dataclass(frozen=True)
class RunResult:
    records: tuple[IterationRecord, ...]
    final_x_hat: SimplexVector
    final_y_hat: SimplexVector
    config: SolverConfig


def step(v_k: SimplexVector, v_bar: SimplexVector, alpha: float) -> SimplexVector:
    """Move from v_k a fraction alpha toward v_bar, staying on the simplex.

    Returns the convex combination (1 - alpha) * v_k + alpha * v_bar.
    """
    if not 0.0 <= alpha <= 1.0:
        raise ConfigError(f"alpha must lie in [0, 1], got {alpha!r}")
    if v_k.n != v_bar.n:
        raise DimensionError(f"dimension mismatch: {v_k.n} vs {v_bar.n}")
    if alpha == 0.0:
        return v_k
    if alpha == 1.0:
        return v_bar
    # v + alpha*(v_bar - v) keeps fixed points exact: v_bar == v returns v bit for bit.
    return SimplexVector(v_k.coords + alpha * (v_bar.coords - v_k.coords))


def running_mean(prev_mean: SimplexVector, v_new: SimplexVector, count: int) -> SimplexVector:
    """Arithmetic mean of all iterates seen, updated incrementally.

    count is the number of iterates including v_new; count == 1 returns
    v_new regardless of prev_mean.
    """
    if count < 1:
        raise ConfigError(f"count must be at least 1, got {count}")
    if prev_mean.n != v_new.n:
        raise DimensionError(f"dimension mismatch: {prev_mean.n} vs {v_new.n}")
    if count == 1:
        return v_new
    return SimplexVector(prev_mean.coords + (v_new.coords - prev_mean.coords) / count)


def bounds(A: RewardMatrix, x_hat: SimplexVector, y_hat: SimplexVector) -> tuple[float, float]:
    """Best-response payoff bounds around the averaged strategies.

    The linear max/min over the simplex is attained at a vertex, so
    upper = max_i (A y_hat)_i and lower = min_j (A^T x_hat)_j.
    """
    upper = float(grad_x(A, y_hat).max())
    lower = float(grad_y(A, x_hat).min())
    return upper, lower


def _solve_subproblem(
    config: SolverConfig, g: np.ndarray, v: SimplexVector, sense: PlayerSense
) -> SubproblemResult:
    if config.method is Method.CONDITIONAL_GRADIENT:
        return cg_vertex(g, sense)
    if config.method is Method.EUCLIDEAN_PENALIZED:
        return euclidean_prox(g, v, config.beta, sense)
    return kl_prox(g, v, config.beta, sense)


def _record(A: RewardMatrix, k: int, x, y, x_hat, y_hat) -> IterationRecord:
    reward = payoff(A, x_hat, y_hat)
    upper, lower = bounds(A, x_hat, y_hat)
    gap = upper - lower
    if not all(np.isfinite(val) for val in (reward, upper, lower, gap)):
        raise NumericError(f"non-finite diagnostics at iteration {k}")
    return IterationRecord(
        k=k, x=x, y=y, x_hat=x_hat, y_hat=y_hat,
        reward=reward, upper=upper, lower=lower, gap=gap,
    )


def run(A: RewardMatrix, config: SolverConfig) -> RunResult:
    """Execute the configured number of outer steps and collect the trace.

    Both gradients are evaluated at the same (x^k, y^k) pair before either
    player moves (simultaneous update).  Means include the initial iterate.
    Deterministic: identical inputs produce identical results.
    """
    n = A.n
    x = config.init_x if config.init_x is not None else SimplexVector.uniform(n)
    y = config.init_y if config.init_y is not None else SimplexVector.uniform(n)
    if x.n != n:
        raise DimensionError(f"init_x has length {x.n}, matrix is {n}x{n}")
    if y.n != n:
        raise DimensionError(f"init_y has length {y.n}, matrix is {n}x{n}")

    x_hat, y_hat = x, y
    records = [_record(A, 0, x, y, x_hat, y_hat)]
    for k in range(1, config.iterations + 1):
        try:
            gx = grad_x(A, y)
            gy = grad_y(A, x)
            if not (np.all(np.isfinite(gx)) and np.all(np.isfinite(gy))):
                raise NumericError("non-finite gradient")
            x_bar = _solve_subproblem(config, gx, x, PlayerSense.MAXIMIZER).solution
            y_bar = _solve_subproblem(config, gy, y, PlayerSense.MINIMIZER).solution
            x = step(x, x_bar, config.alpha)
            y = step(y, y_bar, config.alpha)
            x_hat = running_mean(x_hat, x, k + 1)
            y_hat = running_mean(y_hat, y, k + 1)
        except NumericError as exc:
            raise NumericError(f"iteration {k}: {exc}") from exc
        if k % config.record_every == 0 or k == config.iterations:
            records.append(_record(A, k, x, y, x_hat, y_hat))

    return RunResult(
        records=tuple(records),
        final_x_hat=x_hat,
        final_y_hat=y_hat,
        config=config,
    )
