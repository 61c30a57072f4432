"""Reader for solver trace files.

A trace is a comma-delimited table: a header row

    iter,reward,upper,lower,gap,x_1..x_n,y_1..y_n,xhat_1..xhat_n,yhat_1..yhat_n

followed by one row per recorded iteration, numbers rendered as
round-trippable doubles.  This module only reads traces; it never
modifies them.
"""

from __future__ import annotations

import os
from dataclasses import dataclass
from pathlib import Path

import numpy as np

from .errors import FormatError


@dataclass(frozen=True)
class Trace:
    """Columnar view of one trace file."""

    n: int
    iters: np.ndarray
    reward: np.ndarray
    upper: np.ndarray
    lower: np.ndarray
    gap: np.ndarray
    x: np.ndarray
    y: np.ndarray
    x_hat: np.ndarray
    y_hat: np.ndarray

    @property
    def records(self) -> int:
        return self.iters.size


def expected_header(n: int) -> list[str]:
    names = ["iter", "reward", "upper", "lower", "gap"]
    for prefix in ("x", "y", "xhat", "yhat"):
        names.extend(f"{prefix}_{i}" for i in range(1, n + 1))
    return names


def read_trace(path: str | os.PathLike) -> Trace:
    try:
        text = Path(path).read_text()
    except OSError as exc:
        raise FormatError(f"cannot read trace file {path}: {exc}") from exc

    lines = [line for line in text.splitlines() if line]
    if not lines:
        raise FormatError(f"trace file {path} is empty")
    header = lines[0].split(",")
    if len(header) < 9 or (len(header) - 5) % 4 != 0:
        raise FormatError(f"trace has {len(header)} columns, expected 5 + 4n")
    n = (len(header) - 5) // 4
    if header != expected_header(n):
        raise FormatError("trace header does not match the expected column names")
    if len(lines) < 2:
        raise FormatError(f"trace file {path} has no records")

    count = len(lines) - 1
    iters = np.zeros(count, dtype=int)
    floats = np.zeros((count, len(header) - 1))
    for i, line in enumerate(lines[1:], start=2):
        parts = line.split(",")
        if len(parts) != len(header):
            raise FormatError(f"row has {len(parts)} fields, expected {len(header)}", line=i)
        try:
            iters[i - 2] = int(parts[0])
            floats[i - 2] = [float(p) for p in parts[1:]]
        except ValueError:
            raise FormatError("unparseable numeric field", line=i) from None

    blocks = [floats[:, 4 + j * n : 4 + (j + 1) * n] for j in range(4)]
    return Trace(
        n=n,
        iters=iters,
        reward=floats[:, 0],
        upper=floats[:, 1],
        lower=floats[:, 2],
        gap=floats[:, 3],
        x=blocks[0],
        y=blocks[1],
        x_hat=blocks[2],
        y_hat=blocks[3],
    )
