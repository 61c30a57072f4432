"""Figure scripts for zero-sum solver traces.

Reads the solver's CSV trace files and reproduces the two figure families:
Reward/Upperbound/Lowerbound convergence curves, and both players' paths
through the 3-strategy probability simplex as a ternary projection (x in
green, y in red).
"""

from .errors import ConfigError, DimensionError, FiguresError, FormatError
from .tracefile import Trace, expected_header, read_trace
from .ternary import CORNERS, H, project, project_path
from .plots import (
    PlotRequest,
    build_convergence_figure,
    build_simplex_figure,
    render,
)
from .cli import run_command

__version__ = "0.1.0"

__all__ = [
    "CORNERS",
    "ConfigError",
    "DimensionError",
    "FiguresError",
    "FormatError",
    "H",
    "PlotRequest",
    "Trace",
    "build_convergence_figure",
    "build_simplex_figure",
    "expected_header",
    "project",
    "project_path",
    "read_trace",
    "render",
    "run_command",
    "__version__",
]
