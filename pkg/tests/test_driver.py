import math

import numpy as np
import pytest

from oavqe import ansatz, driver, pauli
from oavqe.driver import OptimizerSettings, SolverConfig


def random_hermitian_sum(rng, n_qubits=2, scale=0.5):
    words = [a + b for a in "IXYZ" for b in "IXYZ"]
    return pauli.PauliSum(n_qubits,
                          {w: scale * rng.normal() for w in words})


def test_line_minimum_matches_brute_force(rng):
    for m in (1, 2):
        for period in (1.0, 4.0, 2 * math.pi):
            coeffs = (rng.normal(size=m + 1)
                      + 1j * rng.normal(size=m + 1))
            coeffs[0] = coeffs[0].real

            def g(d):
                hs = np.arange(1, m + 1)
                w = 2 * math.pi / period
                return coeffs[0].real + 2 * np.real(
                    np.exp(1j * np.outer(np.atleast_1d(d), hs * w))
                    @ coeffs[1:])

            d_star = driver._line_minimum(coeffs, period)
            grid = np.linspace(0, period, 20001)
            assert g(d_star)[0] <= g(grid).min() + 1e-9


def test_coordinate_sweep_solves_separable_trig_cost():
    target = np.array([0.7, 2.1])

    def cost(x):
        return float(np.sum(1 - np.cos(2 * math.pi / 4 * (x - target))))

    def fold(x):
        return np.asarray(x) % 4.0

    x, f = driver._coordinate_sweep(cost, np.zeros(2), None,
                                    periods=np.array([4.0, 4.0]),
                                    harmonics=np.array([1, 1]),
                                    fold=fold, rounds=10, ftol=1e-14)
    assert f < 1e-12
    np.testing.assert_allclose(x, target, atol=1e-6)


def test_exact_spectrum_is_active_block_eigenvalues(rng):
    h = random_hermitian_sum(rng)
    space = ansatz.ActiveSpace(2, (0, 2, 3), "compact")
    block = pauli.to_dense(h)[np.ix_([0, 2, 3], [0, 2, 3])]
    np.testing.assert_allclose(driver.exact_spectrum(h, space),
                               np.linalg.eigvalsh(block), atol=1e-12)


def test_solver_config_validation(rng):
    h = random_hermitian_sum(rng)
    space = ansatz.compact_space(2)
    with pytest.raises(ValueError):
        SolverConfig(h, space, "compact", 5)
    with pytest.raises(ValueError):
        SolverConfig(h, space, "compact", 0)
    with pytest.raises(ValueError):
        SolverConfig(random_hermitian_sum(rng, 2), ansatz.h2_fock_space(),
                     "jordan-wigner-fock", 2)
    with pytest.raises(ValueError):
        driver.ExpectationEvaluator(pauli.PauliSum(2, {"XY": 1j}))


def test_solve_dense_compact_matches_diagonalization(rng):
    h = random_hermitian_sum(rng)
    space = ansatz.compact_space(2)
    result = driver.solve(SolverConfig(h, space, "compact", 4, seed=3))
    exact = driver.exact_spectrum(h, space)
    np.testing.assert_allclose(result.energies, exact, atol=1e-6)
    assert np.abs(result.overlaps - np.eye(4)).max() < 1e-10
    assert len(result.states) == 4
    assert all(n >= 1 for n in result.n_evaluations)


def test_recorded_energy_matches_rebuilt_state(rng):
    # regression: folding the final point must not desynchronize the
    # recorded energy from the stored parameters (Trotterized operators
    # depend on the actual coefficient values, not just the ray)
    h = random_hermitian_sum(rng)
    space = ansatz.compact_space(2)
    evaluator = driver.ExpectationEvaluator(h)
    for trotter_r in ("dense", 1):
        result = driver.solve(SolverConfig(
            h, space, "compact", 4, trotter_r, seed=1,
            optimizer=OptimizerSettings(restarts=2, alternations=2)))
        for level, state in enumerate(result.states):
            assert result.energies[level] == pytest.approx(
                evaluator(state), abs=1e-12)


def test_solve_trotter_keeps_orthogonality(rng):
    h = random_hermitian_sum(rng)
    space = ansatz.compact_space(2)
    result = driver.solve(SolverConfig(
        h, space, "compact", 4, 1, seed=0,
        optimizer=OptimizerSettings(restarts=2, alternations=2)))
    gram = driver.verify_orthogonality(result)
    assert np.abs(gram - np.eye(4)).max() < 1e-10


def test_result_json_dict_is_serializable(rng):
    import json
    h = random_hermitian_sum(rng)
    result = driver.solve(SolverConfig(h, ansatz.compact_space(2),
                                       "compact", 2, seed=0))
    blob = json.dumps(result.to_json_dict())
    assert "energies" in blob


def test_solve_is_deterministic(rng):
    h = random_hermitian_sum(rng)
    space = ansatz.compact_space(2)
    a = driver.solve(SolverConfig(h, space, "compact", 3, seed=7))
    b = driver.solve(SolverConfig(h, space, "compact", 3, seed=7))
    assert a.energies == b.energies
    for xa, xb in zip(a.parameters, b.parameters):
        np.testing.assert_array_equal(xa, xb)
