"""Dense complex statevector over a small register of qubits.

Conventions used throughout the package:

- Qubit 0 is the *leftmost* label in ket notation, so the ket |1100> on four
  qubits has qubits 0 and 1 set.
- The integer basis index is the ket string read as a binary number, i.e.
  qubit j occupies bit (n - 1 - j) of the index.  |1100> <-> index 12.
- Reshaping an amplitude array to ``[2] * n`` puts qubit j on axis j.
"""
from __future__ import annotations

from dataclasses import dataclass, field
from collections.abc import Sequence

import numpy as np

# Dense statevectors are intended for desk-scale problems (2-4 qubits); the
# cap documents the regime rather than a hard physical limit.
DENSE_QUBIT_CAP = 16
# Separate, smaller cap for 2^n x 2^n dense matrices (oracles, to_dense).
DENSE_MATRIX_QUBIT_CAP = 10

NORM_TOL = 1e-10
UNITARY_TOL = 1e-10


class QubitCountError(ValueError):
    """Register size outside the supported dense regime."""


def index_of_bits(bits: str) -> int:
    """Basis index of a ket string such as '1100' (qubit 0 leftmost)."""
    return int(bits, 2)


def bit_of(index: int, qubit: int, n_qubits: int) -> int:
    """State of ``qubit`` in basis state ``index``."""
    return (index >> (n_qubits - 1 - qubit)) & 1


def _check_qubit_count(n_qubits: int, cap: int = DENSE_QUBIT_CAP) -> None:
    if n_qubits < 1:
        raise QubitCountError(f"need at least one qubit, got {n_qubits}")
    if n_qubits > cap:
        raise QubitCountError(
            f"{n_qubits} qubits exceeds the dense cap of {cap}")


@dataclass(frozen=True)
class Statevector:
    """Immutable dense state of ``n_qubits`` qubits."""

    n_qubits: int
    amplitudes: np.ndarray = field(repr=False)

    def __post_init__(self):
        _check_qubit_count(self.n_qubits)
        amps = np.asarray(self.amplitudes, dtype=complex)
        if amps.shape != (2**self.n_qubits,):
            raise ValueError(
                f"expected {2**self.n_qubits} amplitudes, got {amps.shape}")
        amps = amps.copy()
        amps.flags.writeable = False
        object.__setattr__(self, "amplitudes", amps)

    @property
    def dim(self) -> int:
        return 2**self.n_qubits

    def norm(self) -> float:
        return float(np.linalg.norm(self.amplitudes))


def from_basis(n_qubits: int, z: int) -> Statevector:
    """Computational basis state |z> on ``n_qubits`` qubits."""
    _check_qubit_count(n_qubits)
    if not 0 <= z < 2**n_qubits:
        raise IndexError(f"basis index {z} out of range for {n_qubits} qubits")
    amps = np.zeros(2**n_qubits, dtype=complex)
    amps[z] = 1.0
    return Statevector(n_qubits, amps)


def inner_product(a: Statevector, b: Statevector) -> complex:
    """<a|b> with ``a`` conjugated."""
    if a.n_qubits != b.n_qubits:
        raise ValueError(
            f"qubit count mismatch: {a.n_qubits} vs {b.n_qubits}")
    return complex(np.vdot(a.amplitudes, b.amplitudes))


def _check_unitary(u: np.ndarray, tol: float = UNITARY_TOL) -> None:
    d = u.shape[0]
    if u.ndim != 2 or u.shape != (d, d) or d & (d - 1):
        raise ValueError(f"matrix shape {u.shape} is not a square power of 2")
    dev = np.max(np.abs(u.conj().T @ u - np.eye(d)))
    if dev > tol:
        raise ValueError(f"matrix is not unitary (deviation {dev:.2e})")


def apply_matrix(amps: np.ndarray, u: np.ndarray,
                 targets: Sequence[int], n_qubits: int) -> np.ndarray:
    """Apply a 2^k x 2^k matrix to the target qubits of a raw array.

    ``amps`` may carry trailing axes (used to build full unitaries by acting
    on identity columns); the qubit axes must come first.
    """
    k = len(targets)
    trailing = amps.shape[1:] if amps.ndim > 1 else ()
    psi = amps.reshape([2] * n_qubits + list(trailing))
    psi = np.moveaxis(psi, list(targets), list(range(k)))
    tail = psi.shape[k:]
    psi = psi.reshape(2**k, -1)
    psi = u @ psi
    psi = psi.reshape([2] * k + list(tail))
    psi = np.moveaxis(psi, list(range(k)), list(targets))
    return psi.reshape((2**n_qubits,) + tuple(trailing))


def apply_unitary(state: Statevector, u: np.ndarray,
                  targets: Sequence[int]) -> Statevector:
    """New state with ``u`` applied to ``targets``, identity elsewhere."""
    targets = list(targets)
    if len(set(targets)) != len(targets):
        raise ValueError(f"duplicate targets {targets}")
    if any(t < 0 or t >= state.n_qubits for t in targets):
        raise ValueError(f"targets {targets} out of range")
    u = np.asarray(u, dtype=complex)
    if u.shape != (2**len(targets), 2**len(targets)):
        raise ValueError(
            f"matrix shape {u.shape} does not match {len(targets)} targets")
    _check_unitary(u)
    out = apply_matrix(state.amplitudes, u, targets, state.n_qubits)
    return Statevector(state.n_qubits, out)
