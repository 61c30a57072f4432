"""The three inner minimizations that produce each outer step's target point.

All three solve "minimize s^T (v - v_k) + penalty(v, v_k) over the simplex"
where s is the signed payoff gradient for the given player (see
PlayerSense.sign): a linear penalty-free version solved at a vertex, a
squared-Euclidean penalty solved by active-set elimination, and a KL
penalty solved in closed form.
"""

from __future__ import annotations

from dataclasses import dataclass

import numpy as np

from .errors import ConfigError, DimensionError, InvalidInputError, NumericError
from .game import PlayerSense, SimplexVector


@dataclass(frozen=True)
class SubproblemResult:
    """Solution of one inner minimization.

    active_set lists the coordinates allowed to be nonzero (meaningful for
    the Euclidean solve, all indices otherwise); every index outside it has
    solution coordinate exactly 0.  lam is the equalized partial-derivative
    value of the subproblem objective on the active coordinates, for
    diagnostics (absent for the vertex solve).
    """

    solution: SimplexVector
    active_set: tuple[int, ...]
    lam: float | None = None


def _signed_gradient(g: np.ndarray, sense: PlayerSense) -> np.ndarray:
    arr = np.asarray(g, dtype=float).reshape(-1)
    if arr.size < 1:
        raise DimensionError("gradient must have at least one entry")
    if not np.all(np.isfinite(arr)):
        raise NumericError("gradient has non-finite entries")
    return sense.sign * arr


def cg_vertex(g: np.ndarray, sense: PlayerSense) -> SubproblemResult:
    """Vertex solution of the linearized subproblem.

    Minimizing s^T (v - v_k) over the simplex commits all mass to one
    coordinate with minimal signed gradient, i.e. maximal payoff gradient
    for the maximizer and minimal for the minimizer.  Ties break to the
    lowest index so runs are reproducible.
    """
    s = _signed_gradient(g, sense)
    j = int(np.argmin(s))
    return SubproblemResult(
        solution=SimplexVector.vertex(s.size, j),
        active_set=tuple(range(s.size)),
    )


def euclidean_prox(
    g: np.ndarray,
    v_k: SimplexVector,
    beta: float,
    sense: PlayerSense,
) -> SubproblemResult:
    """Exact minimizer of s^T (v - v_k) + beta * ||v - v_k||^2 over the simplex.

    Solved by active-set elimination: on the active set the partial
    derivatives s_i + 2*beta*(v_i - v_k_i) are equalized to a common lambda
    chosen so the active coordinates sum to one; whenever that solve turns a
    coordinate negative, the active coordinate with the largest
    d_i = s_i - 2*beta*v_k_i (equivalently, the most negative solve value)
    is fixed to zero and the remainder re-solved.  At most n - 1 rounds.

    Args:
        g: payoff gradient for the given player.
        v_k: current iterate.
        beta: penalty strength, must be positive.
        sense: which player's objective the subproblem descends.

    Returns:
        SubproblemResult with the minimizer, its final active set, and lambda.
    """
    if not beta > 0.0:
        raise ConfigError("beta must be positive")
    s = _signed_gradient(g, sense)
    if s.size != v_k.n:
        raise DimensionError(f"gradient length {s.size} vs iterate length {v_k.n}")

    # Unconstrained-in-v target: the solution is the simplex projection of q.
    q = v_k.coords - s / (2.0 * beta)
    d = s - 2.0 * beta * v_k.coords  # elimination priority, d = -2*beta*q
    n = s.size

    active = np.ones(n, dtype=bool)
    v = np.zeros(n)
    shift = 0.0
    while True:
        m = int(active.sum())
        shift = (1.0 - q[active].sum()) / m
        v.fill(0.0)
        v[active] = q[active] + shift
        if not np.any(v[active] < 0.0):
            break
        act_idx = np.flatnonzero(active)
        drop = act_idx[np.argmax(d[act_idx])]
        active[drop] = False

    v /= v.sum()  # pin the sum to one; inactive coordinates stay exactly 0
    return SubproblemResult(
        solution=SimplexVector(v),
        active_set=tuple(int(i) for i in np.flatnonzero(active)),
        lam=2.0 * beta * shift,
    )


def kl_prox(
    g: np.ndarray,
    v_k: SimplexVector,
    beta: float,
    sense: PlayerSense,
) -> SubproblemResult:
    """Closed-form minimizer of s^T (v - v_k) + beta * KL(v || v_k) over the simplex.

    The solution is the normalized multiplicative update
    v_i = v_k_i * exp(-s_i / beta) / Z.  Computed in the log domain with
    max-subtraction so large |s| / beta cannot overflow; coordinates where
    v_k is zero stay exactly zero (multiplicative updates cannot resurrect
    zero mass).
    """
    if not beta > 0.0:
        raise ConfigError("beta must be positive")
    s = _signed_gradient(g, sense)
    if s.size != v_k.n:
        raise DimensionError(f"gradient length {s.size} vs iterate length {v_k.n}")
    support = v_k.coords > 0.0
    if not support.any():
        raise InvalidInputError("all coordinates of the base point are zero")

    t = -s[support] / beta + np.log(v_k.coords[support])
    t_max = t.max()
    w = np.exp(t - t_max)
    z = w.sum()
    v = np.zeros(s.size)
    v[support] = w / z
    # Equalized partial on the support: s_i + beta*(1 + log(v_i / v_k_i)).
    lam = beta * (1.0 - (t_max + np.log(z)))
    return SubproblemResult(
        solution=SimplexVector(v),
        active_set=tuple(range(s.size)),
        lam=float(lam),
    )
