"""Command-line front end and flat-file formats for matrices and run traces."""

from __future__ import annotations

import argparse
import math
import os
import sys
from concurrent.futures import ThreadPoolExecutor
from dataclasses import dataclass
from pathlib import Path

import numpy as np

from .errors import ConfigError, FormatError, NumericError, SolverError
from .game import RewardMatrix, SimplexVector, rps_matrix
from .solver import Method, RunResult, SolverConfig, run

BUILTIN_GAMES = {"rps": rps_matrix}


@dataclass(frozen=True)
class GameSpec:
    """Where the payoff matrix comes from: a named builtin or a matrix file."""

    source: str  # "builtin" or "file"
    ref: str

    def resolve(self) -> RewardMatrix:
        if self.source == "builtin":
            try:
                return BUILTIN_GAMES[self.ref]()
            except KeyError:
                known = ", ".join(sorted(BUILTIN_GAMES))
                raise ConfigError(f"unknown builtin game {self.ref!r} (available: {known})") from None
        return load_matrix(self.ref)


def load_matrix(path: str | os.PathLike) -> RewardMatrix:
    """Parse a plain-text square matrix: one row per line, comma or whitespace
    separated real numbers.  Lines starting with '#' and blank lines are ignored.
    """
    try:
        text = Path(path).read_text()
    except OSError as exc:
        raise FormatError(f"cannot read matrix file {path}: {exc}") from exc

    rows: list[list[float]] = []
    for lineno, raw in enumerate(text.splitlines(), start=1):
        line = raw.strip()
        if not line or line.startswith("#"):
            continue
        values = []
        for col, token in enumerate(line.replace(",", " ").split(), start=1):
            try:
                value = float(token)
            except ValueError:
                raise FormatError(f"unparseable token {token!r}", line=lineno, column=col) from None
            if not math.isfinite(value):
                raise FormatError(f"non-finite value {token!r}", line=lineno, column=col)
            values.append(value)
        if rows and len(values) != len(rows[0]):
            raise FormatError(
                f"row has {len(values)} values, expected {len(rows[0])}", line=lineno
            )
        rows.append(values)
    if not rows:
        raise FormatError(f"no matrix rows found in {path}")
    if len(rows) != len(rows[0]):
        raise FormatError(f"matrix is {len(rows)}x{len(rows[0])}, must be square")
    return RewardMatrix(np.array(rows))


def _fmt(value: float) -> str:
    # 17 significant digits: parses back to the identical double.
    return format(value, ".17g")


def trace_header(n: int) -> list[str]:
    names = ["iter", "reward", "upper", "lower", "gap"]
    for prefix in ("x", "y", "xhat", "yhat"):
        names.extend(f"{prefix}_{i}" for i in range(1, n + 1))
    return names


def write_trace(path: str | os.PathLike, result: RunResult) -> None:
    """Write one CSV row per IterationRecord, doubles rendered round-trippably."""
    n = result.final_x_hat.n
    lines = [",".join(trace_header(n))]
    for rec in result.records:
        fields = [str(rec.k), _fmt(rec.reward), _fmt(rec.upper), _fmt(rec.lower), _fmt(rec.gap)]
        for vec in (rec.x, rec.y, rec.x_hat, rec.y_hat):
            fields.extend(_fmt(c) for c in vec.coords)
        lines.append(",".join(fields))
    Path(path).write_text("\n".join(lines) + "\n")


@dataclass(frozen=True)
class TraceData:
    """Columnar view of a parsed trace file."""

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


def parse_trace(path: str | os.PathLike) -> TraceData:
    """Read back a trace file written by write_trace, exactly."""
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
    if header != trace_header(n):
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
    return TraceData(
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


def _float_list(text: str) -> list[float]:
    try:
        return [float(tok) for tok in text.split(",")]
    except ValueError:
        raise argparse.ArgumentTypeError(f"expected comma-separated floats, got {text!r}") from None


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="zerosumgrad",
        description="Solve a two-player zero-sum matrix game over the probability "
        "simplex and write the per-iteration trace to a CSV file.",
    )
    source = parser.add_mutually_exclusive_group(required=True)
    source.add_argument("--game", metavar="NAME", help="builtin game name (available: rps)")
    source.add_argument("--matrix", metavar="PATH", help="plain-text payoff matrix file")
    parser.add_argument("--method", required=True, choices=[m.value for m in Method],
                        help="subproblem family: cg, euclid, or kl")
    parser.add_argument("--alpha", required=True, type=_float_list, metavar="FLOAT",
                        help="step size in [0, 1]; a comma list with --sweep")
    parser.add_argument("--beta", type=_float_list, metavar="FLOAT",
                        help="penalty strength for euclid/kl; a comma list with --sweep")
    parser.add_argument("--iters", type=int, default=1000, metavar="N",
                        help="number of outer iterations (default 1000)")
    parser.add_argument("--init-x", dest="init_x", metavar="CSV",
                        help="initial x as comma-separated floats (default uniform)")
    parser.add_argument("--init-y", dest="init_y", metavar="CSV",
                        help="initial y as comma-separated floats (default uniform)")
    parser.add_argument("--record-every", dest="record_every", type=int, default=1, metavar="N",
                        help="record every N-th iteration (default 1)")
    parser.add_argument("--out", required=True, metavar="PATH",
                        help="trace output path (a directory with --sweep)")
    parser.add_argument("--sweep", action="store_true",
                        help="run the cartesian product of --alpha and --beta values in "
                        "parallel, one trace file per combination under --out")
    return parser


def _parse_init(text: str | None, n: int, flag: str) -> SimplexVector | None:
    if text is None:
        return None
    try:
        values = [float(tok) for tok in text.split(",")]
    except ValueError:
        raise ConfigError(f"{flag} must be comma-separated floats, got {text!r}") from None
    try:
        vec = SimplexVector(np.array(values))
    except SolverError as exc:
        raise ConfigError(f"{flag}: {exc}") from exc
    if vec.n != n:
        raise ConfigError(f"{flag} has {vec.n} coordinates, the matrix needs {n}")
    return vec


def _single(values: list[float] | None, flag: str) -> float | None:
    if values is None:
        return None
    if len(values) != 1:
        raise ConfigError(f"{flag} takes one value unless --sweep is given")
    return values[0]


def _summary(config: SolverConfig, result: RunResult) -> str:
    last = result.records[-1]
    return (f"method={config.method.value} iters={config.iterations} "
            f"reward={_fmt(last.reward)} gap={_fmt(last.gap)}")


def _execute(A: RewardMatrix, config: SolverConfig, out: str | os.PathLike) -> str:
    result = run(A, config)
    write_trace(out, result)
    return _summary(config, result)


def _run_sweep(A, ns, method, init_x, init_y) -> int:
    alphas = ns.alpha
    betas = ns.beta if ns.beta is not None else [None]
    outdir = Path(ns.out)
    outdir.mkdir(parents=True, exist_ok=True)

    jobs = []
    for alpha in alphas:
        for beta in betas:
            config = SolverConfig(
                method=method, alpha=alpha, beta=beta, iterations=ns.iters,
                init_x=init_x, init_y=init_y, record_every=ns.record_every,
            )
            name = f"trace_{method.value}_alpha{alpha:g}"
            if beta is not None:
                name += f"_beta{beta:g}"
            jobs.append((config, outdir / f"{name}.csv"))

    # Independent runs; results are immutable, so threads can share A freely.
    with ThreadPoolExecutor(max_workers=min(len(jobs), os.cpu_count() or 1)) as pool:
        summaries = list(pool.map(lambda job: _execute(A, *job), jobs))
    for summary, (_, path) in zip(summaries, jobs):
        print(f"{summary} out={path}")
    return 0


def run_command(argv: list[str]) -> int:
    """Parse argv, execute the run(s), and return the process exit status."""
    parser = build_parser()
    try:
        ns = parser.parse_args(argv)
    except SystemExit as exc:
        return exc.code if isinstance(exc.code, int) else 2

    try:
        if ns.iters < 0:
            raise ConfigError(f"--iters must be nonnegative, got {ns.iters}")
        spec = (GameSpec("builtin", ns.game) if ns.game is not None
                else GameSpec("file", ns.matrix))
        A = spec.resolve()
        method = Method(ns.method)
        init_x = _parse_init(ns.init_x, A.n, "--init-x")
        init_y = _parse_init(ns.init_y, A.n, "--init-y")
        if ns.sweep:
            return _run_sweep(A, ns, method, init_x, init_y)
        config = SolverConfig(
            method=method,
            alpha=_single(ns.alpha, "--alpha"),
            beta=_single(ns.beta, "--beta"),
            iterations=ns.iters,
            init_x=init_x,
            init_y=init_y,
            record_every=ns.record_every,
        )
        print(_execute(A, config, ns.out))
        return 0
    except NumericError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 3
    except (SolverError, OSError) as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 1


def main() -> None:
    sys.exit(run_command(sys.argv[1:]))
