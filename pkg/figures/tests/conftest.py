"""Shared helpers: synthesize small trace files for the unit tests."""

from zerosumfigs import expected_header


def fmt(value: float) -> str:
    return format(value, ".17g")


def write_rows(path, rows):
    """Write a trace file from (k, reward, upper, lower, gap, x, y, xh, yh) rows."""
    n = len(rows[0][5])
    lines = [",".join(expected_header(n))]
    for k, reward, upper, lower, gap, x, y, xh, yh in rows:
        fields = [str(k), fmt(reward), fmt(upper), fmt(lower), fmt(gap)]
        for vec in (x, y, xh, yh):
            fields.extend(fmt(c) for c in vec)
        lines.append(",".join(fields))
    path.write_text("\n".join(lines) + "\n")
    return path


def uniform_rows(count, n=3):
    u = [1.0 / n] * n
    return [(k, 0.0, 0.0, 0.0, 0.0, u, u, u, u) for k in range(count)]
