"""Bilinear zero-sum game primitives on the probability simplex.

The row player (maximizer) picks a mixed strategy x, the column player
(minimizer) picks y, and the row player receives x^T A y.
"""

from __future__ import annotations

import enum
from dataclasses import dataclass

import numpy as np

from .errors import ConfigError, DimensionError, InvalidInputError, NumericError

# Membership tolerances for simplex vectors: coordinates down to -NEG_TOL are
# treated as roundoff and clamped to zero; the coordinate sum must stay within
# SUM_TOL of one.  Drift beyond these bounds indicates a bug, not roundoff.
SIMPLEX_SUM_TOL = 1e-9
SIMPLEX_NEG_TOL = 1e-12


@dataclass(frozen=True, eq=False)
class SimplexVector:
    """A probability vector: nonnegative coordinates summing to one."""

    coords: np.ndarray

    def __post_init__(self):
        arr = np.array(self.coords, dtype=float, copy=True).reshape(-1)
        if arr.size < 1:
            raise DimensionError("simplex vector needs at least one coordinate")
        if not np.all(np.isfinite(arr)):
            raise NumericError("simplex vector has non-finite coordinates")
        if arr.min() < -SIMPLEX_NEG_TOL:
            raise InvalidInputError(f"negative coordinate {arr.min():g} below tolerance")
        np.maximum(arr, 0.0, out=arr)
        total = arr.sum()
        if abs(total - 1.0) > SIMPLEX_SUM_TOL:
            raise InvalidInputError(f"coordinates sum to {total!r}, not 1")
        arr.setflags(write=False)
        object.__setattr__(self, "coords", arr)

    @property
    def n(self) -> int:
        return self.coords.size

    @classmethod
    def uniform(cls, n: int) -> "SimplexVector":
        """The barycenter (1/n, ..., 1/n)."""
        if n < 1:
            raise DimensionError("dimension must be at least 1")
        return cls(np.full(n, 1.0 / n))

    @classmethod
    def vertex(cls, n: int, index: int) -> "SimplexVector":
        """The pure strategy e_index (0-based)."""
        if n < 1:
            raise DimensionError("dimension must be at least 1")
        if not 0 <= index < n:
            raise DimensionError(f"vertex index {index} out of range for n={n}")
        coords = np.zeros(n)
        coords[index] = 1.0
        return cls(coords)

    def __repr__(self) -> str:
        return f"SimplexVector({self.coords.tolist()!r})"


@dataclass(frozen=True, eq=False)
class RewardMatrix:
    """The square payoff matrix of the game, in reward units for the row player."""

    entries: np.ndarray

    def __post_init__(self):
        arr = np.array(self.entries, dtype=float, copy=True)
        if arr.ndim != 2 or arr.shape[0] != arr.shape[1] or arr.shape[0] < 1:
            raise DimensionError(f"reward matrix must be square, got shape {arr.shape}")
        if not np.all(np.isfinite(arr)):
            raise NumericError("reward matrix has non-finite entries")
        arr.setflags(write=False)
        object.__setattr__(self, "entries", arr)

    @property
    def n(self) -> int:
        return self.entries.shape[0]


class PlayerSense(enum.Enum):
    """Which side of the max-min problem a subproblem solves."""

    MAXIMIZER = "maximizer"
    MINIMIZER = "minimizer"

    @property
    def sign(self) -> float:
        """Multiplier turning the payoff gradient into the subproblem's descent direction.

        The maximizer's inner objective linearizes as -g^T(v - v_k), the
        minimizer's as +g^T(v - v_k); both become "minimize s^T(v - v_k) + penalty"
        with s = sign * g.
        """
        return -1.0 if self is PlayerSense.MAXIMIZER else 1.0


def rps_matrix() -> RewardMatrix:
    """Rock-paper-scissors payoff matrix.

    Strategy order is (rock, paper, scissors) for both players; entry [i, j]
    is +1 when row strategy i beats column strategy j, -1 when it loses,
    0 on a draw.  Fixing this encoding makes traces reproducible bit for bit.
    """
    return RewardMatrix(np.array([
        [0.0, -1.0, 1.0],
        [1.0, 0.0, -1.0],
        [-1.0, 1.0, 0.0],
    ]))


def _check_same_n(n: int, *others: int) -> None:
    for m in others:
        if m != n:
            raise DimensionError(f"dimension mismatch: {m} vs {n}")


def payoff(A: RewardMatrix, x: SimplexVector, y: SimplexVector) -> float:
    """The bilinear reward x^T A y for the row player."""
    _check_same_n(A.n, x.n, y.n)
    return float(x.coords @ A.entries @ y.coords)


def grad_x(A: RewardMatrix, y: SimplexVector) -> np.ndarray:
    """Gradient of the payoff in x, the vector A y."""
    _check_same_n(A.n, y.n)
    return A.entries @ y.coords


def grad_y(A: RewardMatrix, x: SimplexVector) -> np.ndarray:
    """Gradient of the payoff in y, the vector A^T x."""
    _check_same_n(A.n, x.n)
    return A.entries.T @ x.coords


def kkt_satisfied(grad_G: np.ndarray, v: SimplexVector, tol: float) -> bool:
    """Check the simplex optimality condition for a constrained minimum.

    At a minimum of G over the simplex, every coordinate carrying mass must
    have a partial derivative equal to the smallest partial derivative; a
    nonzero coordinate with a larger partial could be traded against a
    smaller-partial one for a better objective.

    Returns True iff grad_G[i] <= min(grad_G) + tol for every i with
    v[i] > tol.
    """
    if not tol > 0.0:
        raise ConfigError("tol must be positive")
    grad = np.asarray(grad_G, dtype=float).reshape(-1)
    _check_same_n(v.n, grad.size)
    loaded = grad[v.coords > tol]
    if loaded.size == 0:
        return True
    return bool(loaded.max() <= grad.min() + tol)
