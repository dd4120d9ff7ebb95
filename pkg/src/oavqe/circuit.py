"""Gates, circuits, and the product-formula compiler.

``compile_pauli_rotation`` emits the CNOT-ladder circuit implementing
exp(i theta P / 2) for a single Pauli word; ``trotterize`` composes those
factors into the symmetrized (second-order) product formula for
exp(i angle H) with H a Hermitian PauliSum.
"""
from __future__ import annotations

import math
from dataclasses import dataclass, field

import numpy as np

from . import pauli
from .pauli import PauliSum
from .statevector import (DENSE_MATRIX_QUBIT_CAP, QubitCountError,
                          Statevector, apply_matrix, apply_unitary)

_SQ2 = 1 / math.sqrt(2)
_FIXED_MATRICES = {
    "X": np.array([[0, 1], [1, 0]], dtype=complex),
    "H": np.array([[1, 1], [1, -1]], dtype=complex) * _SQ2,
    "S": np.array([[1, 0], [0, 1j]], dtype=complex),
    "SDAG": np.array([[1, 0], [0, -1j]], dtype=complex),
    "CNOT": np.array([[1, 0, 0, 0],
                      [0, 1, 0, 0],
                      [0, 0, 0, 1],
                      [0, 0, 1, 0]], dtype=complex),
}


def rz_matrix(theta: float) -> np.ndarray:
    return np.array([[np.exp(-0.5j * theta), 0],
                     [0, np.exp(0.5j * theta)]], dtype=complex)


def a_gate_matrix(theta: float, phi: float) -> np.ndarray:
    """Two-qubit particle-conserving gate on the {|01>, |10>} block.

    A|01> = cos(theta)|01> + e^{-i phi} sin(theta)|10>
    A|10> = e^{i phi} sin(theta)|01> - cos(theta)|10>
    """
    c, s = math.cos(theta), math.sin(theta)
    return np.array([[1, 0, 0, 0],
                     [0, c, np.exp(1j * phi) * s, 0],
                     [0, np.exp(-1j * phi) * s, -c, 0],
                     [0, 0, 0, 1]], dtype=complex)


@dataclass(frozen=True)
class Gate:
    """One gate: fixed named gates, Rz, AGate, or an explicit unitary."""

    kind: str
    targets: tuple[int, ...]
    params: tuple[float, ...] = ()
    matrix_override: np.ndarray | None = None

    def __post_init__(self):
        object.__setattr__(self, "targets", tuple(self.targets))
        object.__setattr__(self, "params", tuple(self.params))
        if len(set(self.targets)) != len(self.targets):
            raise ValueError(f"duplicate targets {self.targets}")
        expected = {"X": 1, "H": 1, "S": 1, "SDAG": 1, "RZ": 1,
                    "CNOT": 2, "AGATE": 2}
        if self.kind in expected:
            if len(self.targets) != expected[self.kind]:
                raise ValueError(f"{self.kind} needs {expected[self.kind]} "
                                 f"targets, got {self.targets}")
        elif self.kind != "UNITARY":
            raise ValueError(f"unknown gate kind {self.kind!r}")
        if self.kind == "UNITARY" and self.matrix_override is None:
            raise ValueError("UNITARY gate needs an explicit matrix")

    def matrix(self) -> np.ndarray:
        if self.kind in _FIXED_MATRICES:
            return _FIXED_MATRICES[self.kind]
        if self.kind == "RZ":
            return rz_matrix(self.params[0])
        if self.kind == "AGATE":
            return a_gate_matrix(self.params[0], self.params[1])
        return np.asarray(self.matrix_override, dtype=complex)


@dataclass
class Circuit:
    """Ordered gate list plus a tracked global phase (radians).

    The global phase collects identity terms from Trotterization; it is
    physically irrelevant but kept so dense comparisons are exact.
    """

    n_qubits: int
    gates: list[Gate] = field(default_factory=list)
    global_phase: float = 0.0

    def add(self, kind: str, targets, params=(), matrix=None) -> "Circuit":
        gate = Gate(kind, tuple(targets), tuple(params), matrix)
        if any(t < 0 or t >= self.n_qubits for t in gate.targets):
            raise ValueError(f"targets {gate.targets} out of range "
                             f"for {self.n_qubits} qubits")
        self.gates.append(gate)
        return self

    def extend(self, other: "Circuit") -> "Circuit":
        if other.n_qubits != self.n_qubits:
            raise ValueError("qubit count mismatch")
        self.gates.extend(other.gates)
        self.global_phase += other.global_phase
        return self

    def to_text(self) -> str:
        """Line-oriented export: 'GATE targets params'."""
        lines = [f"# qubits {self.n_qubits}"]
        if self.global_phase:
            lines.append(f"# global_phase {self.global_phase:.17g}")
        for g in self.gates:
            tks = ",".join(str(t) for t in g.targets)
            pks = ",".join(f"{p:.17g}" for p in g.params)
            lines.append(f"{g.kind} {tks} {pks}".rstrip())
        return "\n".join(lines) + "\n"


def unitary(c: Circuit) -> np.ndarray:
    """Dense unitary of the circuit, global phase included."""
    if c.n_qubits > DENSE_MATRIX_QUBIT_CAP:
        raise QubitCountError(
            f"{c.n_qubits} qubits exceeds the dense matrix cap")
    u = np.eye(2**c.n_qubits, dtype=complex)
    for g in c.gates:
        u = apply_matrix(u, g.matrix(), g.targets, c.n_qubits)
    return np.exp(1j * c.global_phase) * u


def run(c: Circuit, state: Statevector) -> Statevector:
    """Sequential gate application, norm preserved."""
    if state.n_qubits != c.n_qubits:
        raise ValueError(f"state has {state.n_qubits} qubits, "
                         f"circuit has {c.n_qubits}")
    for g in c.gates:
        state = apply_unitary(state, g.matrix(), g.targets)
    if c.global_phase:
        state = Statevector(
            c.n_qubits, np.exp(1j * c.global_phase) * state.amplitudes)
    return state


def compile_pauli_rotation(word: str, theta: float) -> Circuit:
    """Circuit for exp(i theta P / 2) on a single Pauli word P.

    Basis rotations bring X/Y qubits to the Z basis, a CNOT ladder over the
    non-identity qubits accumulates parity, Rz(-theta) on the last such qubit
    applies the phase, and the mirror undoes the rest.  Identity qubits are
    untouched.
    """
    n = len(word)
    support = [j for j, ch in enumerate(word) if ch != "I"]
    if not support:
        raise ValueError("all-identity word is a pure global phase; "
                         "handle it in the caller")
    c = Circuit(n)
    for j in support:
        if word[j] == "X":
            c.add("H", (j,))
        elif word[j] == "Y":
            c.add("SDAG", (j,))
            c.add("H", (j,))
    for a, b in zip(support, support[1:]):
        c.add("CNOT", (a, b))
    # Rz(t) = diag(e^{-it/2}, e^{+it/2}); exp(i theta Z.../2) needs Rz(-theta).
    c.add("RZ", (support[-1],), (-theta,))
    for a, b in reversed(list(zip(support, support[1:]))):
        c.add("CNOT", (a, b))
    for j in reversed(support):
        if word[j] == "X":
            c.add("H", (j,))
        elif word[j] == "Y":
            c.add("H", (j,))
            c.add("S", (j,))
    return c


@dataclass(frozen=True)
class TrotterPlan:
    """Inputs to the product-formula compiler."""

    hamiltonian: PauliSum
    global_angle: float = math.pi
    order_r: int = 1
    #: optional explicit term order; contiguous runs of mutually commuting
    #: words make the per-word sweep equal an operator-level product
    #: formula, which cuts the error sharply (e.g. particle-number sectors)
    term_order: tuple[str, ...] | None = None

    def __post_init__(self):
        if self.order_r < 1:
            raise ValueError(f"order_r must be >= 1, got {self.order_r}")
        if self.term_order is not None:
            object.__setattr__(self, "term_order", tuple(self.term_order))


def _hermitian_real_terms(h: PauliSum, order: tuple[str, ...] | None = None,
                          ) -> tuple[list[tuple[str, float]], float]:
    """(non-identity (word, real coeff), identity coeff).

    Terms follow ``order`` when given (words absent from h are skipped,
    words not listed come last in canonical order); otherwise the
    PauliSum's canonical lexicographic order.
    """
    if not h.is_hermitian():
        raise ValueError("trotterize requires a Hermitian PauliSum")
    ident = pauli.identity_word(h.n_qubits)
    coeffs = {}
    id_coeff = 0.0
    for word, coeff in h.items():  # already lexicographically sorted
        if word == ident:
            id_coeff = coeff.real
        else:
            coeffs[word] = coeff.real
    if order is None:
        return list(coeffs.items()), id_coeff
    terms = [(w, coeffs.pop(w)) for w in order if w in coeffs]
    terms.extend(sorted(coeffs.items()))
    return terms, id_coeff


def trotterize(plan: TrotterPlan) -> Circuit:
    """Symmetrized product formula for exp(i global_angle H).

    Each repetition sweeps all terms forward then backward with half-step
    factors exp(i angle c_k P_k / (2 r)); identity terms accumulate into the
    circuit's global phase.
    """
    h = plan.hamiltonian
    terms, id_coeff = _hermitian_real_terms(h, plan.term_order)
    c = Circuit(h.n_qubits)
    c.global_phase = plan.global_angle * id_coeff
    r = plan.order_r
    for _ in range(r):
        sweep = [(w, plan.global_angle * coeff / r) for w, coeff in terms]
        for word, theta in sweep + sweep[::-1]:
            c.extend(compile_pauli_rotation(word, theta))
    return c


class RotationSequence:
    """Fast applier for a sequence of Pauli-rotation factors.

    Numerically identical (to ~1e-15) to running the compiled circuit: each
    factor exp(i theta P / 2) acts as cos(theta/2) I + i sin(theta/2) P,
    with P applied via its permutation/phase form.  Used in optimizer inner
    loops where per-gate simulation would dominate the runtime.
    """

    def __init__(self, n_qubits: int,
                 factors: list[tuple[np.ndarray, np.ndarray, float]],
                 global_phase: float = 0.0):
        self.n_qubits = n_qubits
        self.factors = factors
        self.global_phase = global_phase

    @classmethod
    def from_plan(cls, plan: TrotterPlan,
                  action_cache: dict[str, tuple[np.ndarray, np.ndarray]] | None = None,
                  ) -> "RotationSequence":
        terms, id_coeff = _hermitian_real_terms(plan.hamiltonian,
                                                 plan.term_order)
        cache = action_cache if action_cache is not None else {}
        r = plan.order_r
        sweep = []
        for word, coeff in terms:
            if word not in cache:
                cache[word] = pauli.word_action(word)
            perm, coef = cache[word]
            sweep.append((perm, coef, plan.global_angle * coeff / r))
        factors = (sweep + sweep[::-1]) * r
        return cls(plan.hamiltonian.n_qubits, factors,
                   plan.global_angle * id_coeff)

    def apply_array(self, amps: np.ndarray) -> np.ndarray:
        out = amps
        for perm, coef, theta in self.factors:
            half = 0.5 * theta
            out = math.cos(half) * out + (1j * math.sin(half)) * (
                coef * out[perm])
        if self.global_phase:
            out = np.exp(1j * self.global_phase) * out
        return out

    def apply(self, state: Statevector) -> Statevector:
        return Statevector(self.n_qubits, self.apply_array(state.amplitudes))
