"""Derivative-free bounded minimization of ansatz-parameter cost functions.

Thin wrapper around scipy's COBYLA (the routine the benchmarks were designed
around): box bounds are enforced by clipping every evaluation point, the full
evaluation trace is recorded, and the best-seen point is returned even if the
underlying routine terminates elsewhere.
"""
from __future__ import annotations

import math
from dataclasses import dataclass, field
from collections.abc import Callable, Sequence

import numpy as np
from scipy.optimize import minimize as _scipy_minimize


class CostEvaluationError(RuntimeError):
    """Cost function returned a non-finite value."""

    def __init__(self, point: np.ndarray, value: float):
        self.point = np.asarray(point, dtype=float)
        self.value = value
        super().__init__(
            f"cost returned non-finite value {value!r} at {self.point}")


@dataclass
class OptProblem:
    dimension: int
    lower: np.ndarray
    upper: np.ndarray
    initial: np.ndarray
    cost: Callable[[np.ndarray], float]
    max_evals: int | None = None
    tolerance: float = 1e-8

    def __post_init__(self):
        self.lower = np.asarray(self.lower, dtype=float)
        self.upper = np.asarray(self.upper, dtype=float)
        self.initial = np.asarray(self.initial, dtype=float)
        for name, arr in (("lower", self.lower), ("upper", self.upper),
                          ("initial", self.initial)):
            if arr.shape != (self.dimension,):
                raise ValueError(f"{name} must have shape "
                                 f"({self.dimension},), got {arr.shape}")
        if not (np.all(np.isfinite(self.lower))
                and np.all(np.isfinite(self.upper))):
            raise ValueError("bounds must be finite")
        if np.any(self.lower > self.upper):
            raise ValueError("lower bound exceeds upper bound")
        if np.any(self.initial < self.lower) or np.any(
                self.initial > self.upper):
            raise ValueError("initial point outside bounds")
        if self.max_evals is None:
            self.max_evals = 500 * max(self.dimension, 1)


@dataclass
class OptResult:
    x: np.ndarray
    fun: float
    n_evals: int
    converged: bool
    trace: list[tuple[int, float]] = field(default_factory=list)


def minimize(problem: OptProblem) -> OptResult:
    """Best-found point of a bounded derivative-free minimization.

    Deterministic for a fixed problem (COBYLA has no internal randomness);
    every cost evaluation happens at a point inside the box.
    """
    trace: list[tuple[int, float]] = []
    best_x = problem.initial.copy()
    best_f = math.inf

    def wrapped(x: np.ndarray) -> float:
        nonlocal best_x, best_f
        point = np.clip(np.asarray(x, dtype=float),
                        problem.lower, problem.upper)
        value = float(problem.cost(point))
        if not math.isfinite(value):
            raise CostEvaluationError(point, value)
        trace.append((len(trace), value))
        if value < best_f:
            best_f = value
            best_x = point.copy()
        return value

    if problem.dimension == 0:
        value = wrapped(np.zeros(0))
        return OptResult(np.zeros(0), value, 1, True, trace)

    res = _scipy_minimize(
        wrapped, problem.initial, method="COBYLA",
        bounds=list(zip(problem.lower, problem.upper)),
        tol=problem.tolerance,
        options={"maxiter": problem.max_evals})
    return OptResult(best_x, best_f, len(trace), bool(res.success), trace)
