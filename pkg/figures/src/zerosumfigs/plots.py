"""Render the two figure families from a solver trace.

plot kind "convergence" draws Reward / Upperbound / Lowerbound against the
iteration index; kind "simplex_path" draws both players' paths through the
3-strategy simplex as a ternary projection, x in green and y in red.
"""

from __future__ import annotations

import os
from dataclasses import dataclass
from pathlib import Path

import matplotlib

matplotlib.use("Agg")

import matplotlib.pyplot as plt

from .errors import ConfigError, DimensionError
from .ternary import CORNERS, project_path
from .tracefile import Trace, read_trace

KINDS = ("convergence", "simplex_path")
IMAGE_SUFFIXES = (".svg", ".png")


@dataclass(frozen=True)
class PlotRequest:
    """One plotting job: which trace, which figure family, where to save."""

    trace_path: str | os.PathLike
    kind: str
    out_path: str | os.PathLike

    def __post_init__(self):
        if self.kind not in KINDS:
            raise ConfigError(f"unknown plot kind {self.kind!r} (choose from {', '.join(KINDS)})")
        suffix = Path(self.out_path).suffix.lower()
        if suffix not in IMAGE_SUFFIXES:
            raise ConfigError(f"output must end in .svg or .png, got {self.out_path!r}")


def build_convergence_figure(trace: Trace):
    """Three labeled series against the iteration index."""
    fig, ax = plt.subplots(figsize=(7.0, 4.5))
    ax.plot(trace.iters, trace.upper, label="Upperbound", color="tab:orange", linewidth=1.0)
    ax.plot(trace.iters, trace.reward, label="Reward", color="tab:blue", linewidth=1.0)
    ax.plot(trace.iters, trace.lower, label="Lowerbound", color="tab:green", linewidth=1.0)
    ax.set_xlabel("iteration")
    ax.set_ylabel("payoff")
    ax.legend()
    fig.tight_layout()
    return fig


def build_simplex_figure(trace: Trace):
    """Both players' simplex paths under the ternary projection."""
    if trace.n != 3:
        raise DimensionError(
            f"simplex path requires a 3-strategy trace (n = 3), got n = {trace.n}"
        )
    fig, ax = plt.subplots(figsize=(5.5, 5.5))
    boundary = list(CORNERS) + [CORNERS[0]]
    ax.plot([c[0] for c in boundary], [c[1] for c in boundary],
            color="black", linewidth=1.0)
    for coords, color, label in ((trace.x, "green", "x"), (trace.y, "red", "y")):
        px, py = project_path(coords)
        ax.plot(px, py, color=color, linewidth=0.6, alpha=0.7, label=label)
    ax.set_aspect("equal")
    ax.set_axis_off()
    ax.legend(loc="upper right")
    fig.tight_layout()
    return fig


def render(req: PlotRequest) -> None:
    """Parse the trace, build the requested figure, write the image file."""
    trace = read_trace(req.trace_path)
    if req.kind == "convergence":
        fig = build_convergence_figure(trace)
    else:
        fig = build_simplex_figure(trace)
    try:
        fig.savefig(req.out_path)
    finally:
        plt.close(fig)
