import math

import numpy as np
import pytest

from oavqe import optimize
from oavqe.optimize import OptProblem


def quadratic(center):
    def cost(x):
        return float(np.sum((x - center) ** 2))
    return cost


def test_minimize_quadratic_bowl():
    problem = OptProblem(dimension=3, lower=-np.ones(3), upper=np.ones(3),
                         initial=np.full(3, 0.9),
                         cost=quadratic(np.array([0.2, -0.3, 0.5])),
                         tolerance=1e-10)
    result = optimize.minimize(problem)
    assert result.fun < 1e-8
    np.testing.assert_allclose(result.x, [0.2, -0.3, 0.5], atol=1e-3)
    assert result.n_evals == len(result.trace)
    assert result.n_evals >= 4


def test_minimum_on_boundary_is_clipped_inside():
    seen = []

    def cost(x):
        seen.append(x.copy())
        return float(np.sum((x - 2.0) ** 2))

    problem = OptProblem(dimension=2, lower=np.zeros(2), upper=np.ones(2),
                         initial=np.full(2, 0.5), cost=cost)
    result = optimize.minimize(problem)
    assert np.all(np.asarray(seen) >= 0.0) and np.all(np.asarray(seen) <= 1.0)
    np.testing.assert_allclose(result.x, [1.0, 1.0], atol=1e-4)


def test_best_seen_point_is_returned():
    # an oscillating cost where the final simplex point is not the best
    calls = {"n": 0}

    def cost(x):
        calls["n"] += 1
        return float(np.cos(7 * x[0]) + 0.05 * x[0])

    problem = OptProblem(dimension=1, lower=np.zeros(1),
                         upper=np.full(1, 3.0), initial=np.full(1, 1.5),
                         cost=cost, max_evals=60)
    result = optimize.minimize(problem)
    assert result.fun == min(v for _, v in result.trace)


def test_zero_dimensional_problem():
    problem = OptProblem(dimension=0, lower=np.zeros(0), upper=np.zeros(0),
                         initial=np.zeros(0), cost=lambda x: 42.0)
    result = optimize.minimize(problem)
    assert result.fun == 42.0 and result.n_evals == 1


def test_non_finite_cost_raises():
    problem = OptProblem(dimension=1, lower=np.zeros(1), upper=np.ones(1),
                         initial=np.full(1, 0.5),
                         cost=lambda x: math.nan)
    with pytest.raises(optimize.CostEvaluationError):
        optimize.minimize(problem)


def test_problem_validation():
    with pytest.raises(ValueError):
        OptProblem(dimension=2, lower=np.zeros(1), upper=np.ones(2),
                   initial=np.zeros(2), cost=lambda x: 0.0)
    with pytest.raises(ValueError):
        OptProblem(dimension=1, lower=np.ones(1), upper=np.zeros(1),
                   initial=np.zeros(1), cost=lambda x: 0.0)
    with pytest.raises(ValueError):
        OptProblem(dimension=1, lower=np.zeros(1), upper=np.ones(1),
                   initial=np.full(1, 2.0), cost=lambda x: 0.0)
    with pytest.raises(ValueError):
        OptProblem(dimension=1, lower=np.full(1, -np.inf), upper=np.ones(1),
                   initial=np.zeros(1), cost=lambda x: 0.0)


def test_determinism():
    def make():
        return OptProblem(dimension=2, lower=-np.ones(2), upper=np.ones(2),
                          initial=np.zeros(2),
                          cost=quadratic(np.array([0.3, 0.4])))
    a = optimize.minimize(make())
    b = optimize.minimize(make())
    assert a.trace == b.trace
    np.testing.assert_array_equal(a.x, b.x)
