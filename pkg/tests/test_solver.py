"""Outer loop: stepping, averaging, bounds, and full runs."""

import numpy as np
import pytest

from zerosumgrad import (
    ConfigError,
    DimensionError,
    Method,
    NumericError,
    PlayerSense,
    RewardMatrix,
    SimplexVector,
    SolverConfig,
    bounds,
    grad_y,
    kl_prox,
    payoff,
    rps_matrix,
    run,
    running_mean,
    step,
)

SANDWICH_SLACK = 1e-9
MEAN_TOL = 1e-9


def cfg(**kwargs):
    defaults = dict(method=Method.CONDITIONAL_GRADIENT, alpha=0.01)
    defaults.update(kwargs)
    return SolverConfig(**defaults)


# ---------------------------------------------------------------- SolverConfig

def test_config_rejects_alpha_out_of_range():
    for alpha in (-0.1, 1.1):
        with pytest.raises(ConfigError):
            cfg(alpha=alpha)


def test_config_accepts_alpha_endpoints():
    assert cfg(alpha=0.0).alpha == 0.0
    assert cfg(alpha=1.0).alpha == 1.0


def test_config_rejects_negative_iterations():
    with pytest.raises(ConfigError):
        cfg(iterations=-1)


def test_config_rejects_bad_record_every():
    with pytest.raises(ConfigError):
        cfg(record_every=0)


def test_config_requires_beta_for_penalized_methods():
    for method in (Method.EUCLIDEAN_PENALIZED, Method.KL_PENALIZED):
        with pytest.raises(ConfigError):
            cfg(method=method)
        with pytest.raises(ConfigError):
            cfg(method=method, beta=0.0)
        assert cfg(method=method, beta=0.5).beta == 0.5


def test_config_rejects_beta_for_cg():
    with pytest.raises(ConfigError, match="beta is not a parameter of method cg"):
        cfg(beta=0.5)


def test_config_rejects_non_method():
    with pytest.raises(ConfigError):
        SolverConfig(method="cg", alpha=0.1)


# ------------------------------------------------------------------------ step

def test_step_alpha_zero_keeps_point():
    v = SimplexVector(np.array([0.7, 0.3]))
    w = SimplexVector.vertex(2, 1)
    assert step(v, w, 0.0) is v


def test_step_alpha_one_jumps_to_target():
    v = SimplexVector(np.array([0.7, 0.3]))
    w = SimplexVector.vertex(2, 1)
    assert step(v, w, 1.0) is w


def test_step_convex_combination():
    v = SimplexVector.vertex(2, 0)
    w = SimplexVector.vertex(2, 1)
    assert np.allclose(step(v, w, 0.25).coords, [0.75, 0.25], atol=1e-15)


def test_step_fixed_point_is_bit_exact():
    v = SimplexVector(np.array([0.2, 0.3, 0.5]))
    same = SimplexVector(np.array([0.2, 0.3, 0.5]))
    assert np.array_equal(step(v, same, 0.37).coords, v.coords)


def test_step_rejects_bad_alpha():
    v = SimplexVector.uniform(2)
    with pytest.raises(ConfigError):
        step(v, v, 1.5)


def test_step_dimension_mismatch():
    with pytest.raises(DimensionError):
        step(SimplexVector.uniform(2), SimplexVector.uniform(3), 0.5)


# ---------------------------------------------------------------- running_mean

def test_running_mean_first_element():
    v = SimplexVector(np.array([0.2, 0.8]))
    assert running_mean(SimplexVector.uniform(2), v, 1) is v


def test_running_mean_pair():
    m = running_mean(SimplexVector.vertex(2, 0), SimplexVector.vertex(2, 1), 2)
    assert np.allclose(m.coords, [0.5, 0.5], atol=1e-15)


def test_running_mean_three_vertices():
    m = SimplexVector.vertex(3, 0)
    m = running_mean(m, SimplexVector.vertex(3, 1), 2)
    m = running_mean(m, SimplexVector.vertex(3, 2), 3)
    assert np.allclose(m.coords, 1.0 / 3.0, atol=1e-15)


def test_running_mean_rejects_bad_count():
    with pytest.raises(ConfigError):
        running_mean(SimplexVector.uniform(2), SimplexVector.uniform(2), 0)


# ---------------------------------------------------------------------- bounds

def test_bounds_at_uniform_rps():
    u = SimplexVector.uniform(3)
    assert bounds(rps_matrix(), u, u) == (0.0, 0.0)


def test_bounds_rps_vertex_opponent():
    upper, _ = bounds(rps_matrix(), SimplexVector.uniform(3), SimplexVector.vertex(3, 0))
    assert upper == 1.0


def test_bounds_bracket_payoff():
    rng = np.random.default_rng(5)
    for _ in range(100):
        n = int(rng.integers(1, 7))
        A = RewardMatrix(rng.uniform(-3.0, 3.0, (n, n)))
        x = SimplexVector(rng.dirichlet(np.ones(n)))
        y = SimplexVector(rng.dirichlet(np.ones(n)))
        upper, lower = bounds(A, x, y)
        value = payoff(A, x, y)
        assert lower - SANDWICH_SLACK <= value <= upper + SANDWICH_SLACK


# ------------------------------------------------------------------------- run

def test_run_zero_iterations():
    init = SimplexVector(np.array([0.6, 0.4, 0.0]))
    result = run(rps_matrix(), cfg(iterations=0, init_x=init))
    assert len(result.records) == 1
    assert result.records[0].k == 0
    assert np.array_equal(result.final_x_hat.coords, init.coords)


def test_run_single_point_game():
    A = RewardMatrix(np.array([[4.5]]))
    for method, beta in ((Method.CONDITIONAL_GRADIENT, None),
                         (Method.EUCLIDEAN_PENALIZED, 0.5),
                         (Method.KL_PENALIZED, 0.5)):
        result = run(A, cfg(method=method, beta=beta, iterations=5))
        for rec in result.records:
            assert rec.reward == 4.5
            assert rec.gap == 0.0


def test_run_record_cadence():
    result = run(rps_matrix(), cfg(iterations=7, record_every=5))
    assert [rec.k for rec in result.records] == [0, 5, 7]


def test_run_records_strictly_increasing():
    result = run(rps_matrix(), cfg(iterations=10, record_every=3))
    ks = [rec.k for rec in result.records]
    assert ks == sorted(set(ks))
    assert ks[0] == 0 and ks[-1] == 10


def test_run_is_deterministic():
    a = run(rps_matrix(), cfg(iterations=200))
    b = run(rps_matrix(), cfg(iterations=200))
    for ra, rb in zip(a.records, b.records):
        assert ra.reward == rb.reward and ra.gap == rb.gap
        assert np.array_equal(ra.x.coords, rb.x.coords)
        assert np.array_equal(ra.y_hat.coords, rb.y_hat.coords)


def test_run_sandwich_and_feasibility():
    rng = np.random.default_rng(17)
    for method, beta in ((Method.CONDITIONAL_GRADIENT, None),
                         (Method.EUCLIDEAN_PENALIZED, 0.5),
                         (Method.KL_PENALIZED, 0.25)):
        n = int(rng.integers(2, 5))
        A = RewardMatrix(rng.uniform(-2.0, 2.0, (n, n)))
        init_x = SimplexVector(rng.dirichlet(np.ones(n)))
        init_y = SimplexVector(rng.dirichlet(np.ones(n)))
        result = run(A, cfg(method=method, beta=beta, alpha=0.05, iterations=100,
                            init_x=init_x, init_y=init_y))
        for rec in result.records:
            assert rec.lower - SANDWICH_SLACK <= rec.reward <= rec.upper + SANDWICH_SLACK
            assert rec.gap >= -SANDWICH_SLACK
            for vec in (rec.x, rec.y, rec.x_hat, rec.y_hat):
                assert vec.coords.min() >= 0.0
                assert abs(vec.coords.sum() - 1.0) <= 1e-9


def test_run_antisymmetric_bounds_bracket_zero():
    # the value of a symmetric zero-sum game is 0
    result = run(rps_matrix(), cfg(iterations=100,
                                   init_x=SimplexVector(np.array([0.5, 0.25, 0.25]))))
    for rec in result.records:
        assert rec.upper >= -SANDWICH_SLACK
        assert rec.lower <= SANDWICH_SLACK


def test_run_mean_matches_recorded_iterates():
    init_y = SimplexVector(np.array([0.1, 0.2, 0.7]))
    result = run(rps_matrix(), cfg(iterations=50, init_y=init_y))
    xs = np.array([rec.x.coords for rec in result.records])
    ys = np.array([rec.y.coords for rec in result.records])
    for i, rec in enumerate(result.records):
        assert np.abs(xs[: i + 1].mean(axis=0) - rec.x_hat.coords).max() <= MEAN_TOL
        assert np.abs(ys[: i + 1].mean(axis=0) - rec.y_hat.coords).max() <= MEAN_TOL


def test_run_simultaneous_update():
    # y's first subproblem must see the gradient at x^0, not at x^1
    A = rps_matrix()
    x0 = SimplexVector(np.array([0.5, 0.5, 0.0]))
    y0 = SimplexVector(np.array([0.2, 0.3, 0.5]))
    beta, alpha = 1.0, 0.25
    result = run(A, cfg(method=Method.KL_PENALIZED, beta=beta, alpha=alpha,
                        iterations=1, init_x=x0, init_y=y0))
    y_bar = kl_prox(grad_y(A, x0), y0, beta, PlayerSense.MINIMIZER).solution
    expected = y0.coords + alpha * (y_bar.coords - y0.coords)
    assert np.abs(result.records[1].y.coords - expected).max() <= 1e-15


def test_run_rejects_mismatched_init():
    with pytest.raises(DimensionError):
        run(rps_matrix(), cfg(init_x=SimplexVector.uniform(2)))


@pytest.mark.filterwarnings("ignore::RuntimeWarning")
def test_run_names_iteration_on_numeric_failure():
    # subnormal beta drives the KL exponent to inf on the first step
    config = cfg(method=Method.KL_PENALIZED, beta=5e-324, iterations=3,
                 init_y=SimplexVector.vertex(3, 0))
    with pytest.raises(NumericError, match="iteration 1"):
        run(rps_matrix(), config)
