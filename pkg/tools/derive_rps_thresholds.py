"""Reference runs that pin the rock-paper-scissors acceptance thresholds.

Standalone on purpose: this script imports nothing from the package.  Each
method is a direct transcription of its update formulas; the Euclidean
subproblem in particular is solved by dense grid search with local
refinement over the 3-simplex instead of any active-set reasoning.

For each canonical run it reports the final L-infinity distance of the
averaged strategies from uniform and the final duality gap; doubling those
observations gives the (delta, gamma) thresholds frozen into the acceptance
suite.
"""

import numpy as np

A = np.array([
    [0.0, -1.0, 1.0],
    [1.0, 0.0, -1.0],
    [-1.0, 1.0, 0.0],
])

ALPHA = 0.01
ITERS = 1000
BETA_EUCLID = 0.5
BETA_KL = 0.25


def grid_points(center_a, center_b, radius, steps=20):
    """(a, b) grid clipped to a >= 0, b >= 0, a + b <= 1."""
    a = np.linspace(center_a - radius, center_a + radius, 2 * steps + 1)
    b = np.linspace(center_b - radius, center_b + radius, 2 * steps + 1)
    aa, bb = np.meshgrid(a, b)
    aa, bb = aa.ravel(), bb.ravel()
    keep = (aa >= 0.0) & (bb >= 0.0) & (aa + bb <= 1.0)
    return aa[keep], bb[keep]


def euclid_argmin(lin, v_k, beta):
    """Minimize lin . (v - v_k) + beta * ||v - v_k||^2 over the 3-simplex
    by a coarse grid followed by shrinking local refinement."""

    def objective(aa, bb):
        cc = 1.0 - aa - bb
        d0, d1, d2 = aa - v_k[0], bb - v_k[1], cc - v_k[2]
        return (lin[0] * d0 + lin[1] * d1 + lin[2] * d2
                + beta * (d0 * d0 + d1 * d1 + d2 * d2))

    coarse = np.linspace(0.0, 1.0, 101)
    aa, bb = np.meshgrid(coarse, coarse)
    aa, bb = aa.ravel(), bb.ravel()
    keep = aa + bb <= 1.0
    aa, bb = aa[keep], bb[keep]
    best = np.argmin(objective(aa, bb))
    ca, cb, radius = aa[best], bb[best], 0.01

    for _ in range(18):
        aa, bb = grid_points(ca, cb, radius)
        best = np.argmin(objective(aa, bb))
        ca, cb = aa[best], bb[best]
        radius /= 5.0
    return np.array([ca, cb, 1.0 - ca - cb])


def run_reference(method):
    x = np.full(3, 1.0 / 3.0)
    y = np.full(3, 1.0 / 3.0)
    x_hat, y_hat = x.copy(), y.copy()

    for k in range(1, ITERS + 1):
        gx = A @ y
        gy = A.T @ x

        if method == "cg":
            x_bar = np.zeros(3)
            x_bar[np.argmax(gx)] = 1.0
            y_bar = np.zeros(3)
            y_bar[np.argmin(gy)] = 1.0
        elif method == "euclid":
            # maximizer descends -gx, minimizer descends +gy
            x_bar = euclid_argmin(-gx, x, BETA_EUCLID)
            y_bar = euclid_argmin(gy, y, BETA_EUCLID)
        else:
            wx = x * np.exp(gx / BETA_KL)
            x_bar = wx / wx.sum()
            wy = y * np.exp(-gy / BETA_KL)
            y_bar = wy / wy.sum()

        x = x + ALPHA * (x_bar - x)
        y = y + ALPHA * (y_bar - y)
        x_hat = x_hat + (x - x_hat) / (k + 1)
        y_hat = y_hat + (y - y_hat) / (k + 1)

    uniform = np.full(3, 1.0 / 3.0)
    dist = max(np.abs(x_hat - uniform).max(), np.abs(y_hat - uniform).max())
    gap = (A @ y_hat).max() - (A.T @ x_hat).min()
    return dist, gap


def main():
    print(f"reference runs: {ITERS} iterations, alpha={ALPHA}, "
          f"beta euclid={BETA_EUCLID} kl={BETA_KL}")
    for method in ("cg", "euclid", "kl"):
        dist, gap = run_reference(method)
        print(f"{method:7s} observed: dist={dist:.17g} gap={gap:.17g}")
        print(f"{method:7s} frozen:   delta={2 * dist:.17g} gamma={2 * gap:.17g}")


if __name__ == "__main__":
    main()
