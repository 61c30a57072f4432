"""Adversarial gradient solvers for two-player zero-sum matrix games.

Three schemes for the max-min problem over probability simplices: conditional
gradient steps toward a best vertex, and Euclidean or KL penalized steps that
solve a regularized linear subproblem in closed form.  Averaged iterates give
certified upper and lower bounds on the game value at every iteration.
"""

from .errors import (
    ConfigError,
    DimensionError,
    FormatError,
    InvalidInputError,
    NumericError,
    SolverError,
)
from .game import (
    PlayerSense,
    RewardMatrix,
    SimplexVector,
    grad_x,
    grad_y,
    kkt_satisfied,
    payoff,
    rps_matrix,
)
from .subproblems import SubproblemResult, cg_vertex, euclidean_prox, kl_prox
from .solver import (
    IterationRecord,
    Method,
    RunResult,
    SolverConfig,
    bounds,
    run,
    running_mean,
    step,
)
from .cli_io import (
    GameSpec,
    TraceData,
    load_matrix,
    parse_trace,
    run_command,
    write_trace,
)

__version__ = "0.1.0"

__all__ = [
    "ConfigError",
    "DimensionError",
    "FormatError",
    "GameSpec",
    "InvalidInputError",
    "IterationRecord",
    "Method",
    "NumericError",
    "PlayerSense",
    "RewardMatrix",
    "RunResult",
    "SimplexVector",
    "SolverConfig",
    "SolverError",
    "SubproblemResult",
    "TraceData",
    "bounds",
    "cg_vertex",
    "euclidean_prox",
    "grad_x",
    "grad_y",
    "kkt_satisfied",
    "kl_prox",
    "load_matrix",
    "parse_trace",
    "payoff",
    "rps_matrix",
    "run",
    "run_command",
    "running_mean",
    "step",
    "write_trace",
    "__version__",
]
