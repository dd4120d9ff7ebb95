"""Pauli-word algebra: products, expectation values, projector and
Jordan-Wigner decompositions, dense oracles, and a line-oriented text format.

A Pauli word is stored as a plain string over {I, X, Y, Z}; character j acts
on qubit j (qubit 0 leftmost, matching the statevector convention).
"""
from __future__ import annotations

from dataclasses import dataclass, field

import numpy as np

from .statevector import (DENSE_MATRIX_QUBIT_CAP, QubitCountError, Statevector,
                          bit_of)

PRUNE_THRESHOLD = 1e-12
HERMITIAN_TOL = 1e-12
EXPECTATION_IMAG_TOL = 1e-10

PAULI_MATRICES = {
    "I": np.eye(2, dtype=complex),
    "X": np.array([[0, 1], [1, 0]], dtype=complex),
    "Y": np.array([[0, -1j], [1j, 0]], dtype=complex),
    "Z": np.array([[1, 0], [0, -1]], dtype=complex),
}

# (a, b) -> (a*b letter, phase)
_PRODUCT = {
    ("I", "I"): ("I", 1), ("I", "X"): ("X", 1), ("I", "Y"): ("Y", 1), ("I", "Z"): ("Z", 1),
    ("X", "I"): ("X", 1), ("X", "X"): ("I", 1), ("X", "Y"): ("Z", 1j), ("X", "Z"): ("Y", -1j),
    ("Y", "I"): ("Y", 1), ("Y", "X"): ("Z", -1j), ("Y", "Y"): ("I", 1), ("Y", "Z"): ("X", 1j),
    ("Z", "I"): ("Z", 1), ("Z", "X"): ("Y", 1j), ("Z", "Y"): ("X", -1j), ("Z", "Z"): ("I", 1),
}


def identity_word(n_qubits: int) -> str:
    return "I" * n_qubits


def _validate_word(word: str, n_qubits: int | None = None) -> None:
    if n_qubits is not None and len(word) != n_qubits:
        raise ValueError(f"word {word!r} has length {len(word)}, "
                         f"expected {n_qubits}")
    bad = set(word) - set("IXYZ")
    if bad:
        raise ValueError(f"invalid Pauli letters {bad} in {word!r}")


def multiply_words(a: str, b: str) -> tuple[str, complex]:
    """Product of two Pauli words: (word, phase)."""
    if len(a) != len(b):
        raise ValueError(f"word length mismatch: {a!r} vs {b!r}")
    phase: complex = 1
    out = []
    for ca, cb in zip(a, b):
        letter, ph = _PRODUCT[(ca, cb)]
        out.append(letter)
        phase *= ph
    return "".join(out), phase


def word_to_dense(word: str) -> np.ndarray:
    if len(word) > DENSE_MATRIX_QUBIT_CAP:
        raise QubitCountError(
            f"{len(word)} qubits exceeds the dense matrix cap")
    m = PAULI_MATRICES[word[0]]
    for c in word[1:]:
        m = np.kron(m, PAULI_MATRICES[c])
    return m


def word_action(word: str) -> tuple[np.ndarray, np.ndarray]:
    """Permutation/phase form of a Pauli word on basis indices.

    Returns (flip-partner index array ``perm``, coefficient array ``coef``)
    such that (P psi)[j] = coef[j] * psi[perm[j]].
    """
    n = len(word)
    dim = 2**n
    flip = 0
    for j, c in enumerate(word):
        if c in "XY":
            flip |= 1 << (n - 1 - j)
    idx = np.arange(dim)
    perm = idx ^ flip
    coef = np.ones(dim, dtype=complex)
    for j, c in enumerate(word):
        if c == "I" or c == "X":
            continue
        src_bit = (perm >> (n - 1 - j)) & 1
        if c == "Z":
            coef *= 1 - 2 * src_bit  # (-1)^bit
        else:  # Y|0> = i|1>, Y|1> = -i|0>
            coef *= 1j * (1 - 2 * src_bit)
    return perm, coef


class PauliSum:
    """Linear combination of Pauli words with complex coefficients.

    Immutable after construction; terms below PRUNE_THRESHOLD in magnitude
    are dropped, and iteration order is lexicographic on the word string.
    """

    __slots__ = ("n_qubits", "_terms")

    def __init__(self, n_qubits: int, terms: dict[str, complex] | None = None):
        if n_qubits < 1:
            raise ValueError("need at least one qubit")
        self.n_qubits = n_qubits
        clean: dict[str, complex] = {}
        for word, coeff in (terms or {}).items():
            _validate_word(word, n_qubits)
            c = complex(coeff)
            if abs(c) > PRUNE_THRESHOLD:
                clean[word] = c
        self._terms = dict(sorted(clean.items()))

    @classmethod
    def from_word(cls, word: str, coeff: complex = 1.0) -> "PauliSum":
        return cls(len(word), {word: coeff})

    @classmethod
    def identity(cls, n_qubits: int, coeff: complex = 1.0) -> "PauliSum":
        return cls(n_qubits, {identity_word(n_qubits): coeff})

    @classmethod
    def zero(cls, n_qubits: int) -> "PauliSum":
        return cls(n_qubits, {})

    def items(self):
        return self._terms.items()

    def words(self):
        return self._terms.keys()

    def coefficient(self, word: str) -> complex:
        return self._terms.get(word, 0.0)

    def __len__(self) -> int:
        return len(self._terms)

    def __eq__(self, other) -> bool:
        return (isinstance(other, PauliSum)
                and self.n_qubits == other.n_qubits
                and self._terms == other._terms)

    def __repr__(self) -> str:
        inner = " + ".join(f"({c:.6g})*{w}" for w, c in self._terms.items())
        return f"PauliSum({inner or '0'})"

    def _require_same_size(self, other: "PauliSum") -> None:
        if self.n_qubits != other.n_qubits:
            raise ValueError(f"qubit count mismatch: "
                             f"{self.n_qubits} vs {other.n_qubits}")

    def __add__(self, other: "PauliSum") -> "PauliSum":
        self._require_same_size(other)
        terms = dict(self._terms)
        for w, c in other.items():
            terms[w] = terms.get(w, 0.0) + c
        return PauliSum(self.n_qubits, terms)

    def __sub__(self, other: "PauliSum") -> "PauliSum":
        return self + (other * -1)

    def __mul__(self, other):
        if isinstance(other, PauliSum):
            return multiply(self, other)
        scale = complex(other)
        return PauliSum(self.n_qubits,
                        {w: c * scale for w, c in self._terms.items()})

    __rmul__ = __mul__

    def adjoint(self) -> "PauliSum":
        # Pauli words are Hermitian, so only coefficients conjugate.
        return PauliSum(self.n_qubits,
                        {w: c.conjugate() for w, c in self._terms.items()})

    def is_hermitian(self, tol: float = HERMITIAN_TOL) -> bool:
        return all(abs(c.imag) <= tol for c in self._terms.values())

    def real_coefficients(self) -> "PauliSum":
        """Hermitian part (T + T^dagger)/2."""
        return PauliSum(self.n_qubits,
                        {w: c.real for w, c in self._terms.items()})


def multiply(a: PauliSum, b: PauliSum) -> PauliSum:
    """Operator product with Pauli phases, like terms merged and pruned."""
    a._require_same_size(b)
    terms: dict[str, complex] = {}
    for wa, ca in a.items():
        for wb, cb in b.items():
            word, phase = multiply_words(wa, wb)
            terms[word] = terms.get(word, 0.0) + ca * cb * phase
    return PauliSum(a.n_qubits, terms)


def to_dense(op: PauliSum) -> np.ndarray:
    """Sum of coefficient-weighted word matrices, 2^n x 2^n."""
    if op.n_qubits > DENSE_MATRIX_QUBIT_CAP:
        raise QubitCountError(
            f"{op.n_qubits} qubits exceeds the dense matrix cap")
    dim = 2**op.n_qubits
    out = np.zeros((dim, dim), dtype=complex)
    for word, coeff in op.items():
        out += coeff * word_to_dense(word)
    return out


def apply_to_state(op: PauliSum, state: Statevector) -> np.ndarray:
    """Raw amplitude array of op|state> (not normalized)."""
    if op.n_qubits != state.n_qubits:
        raise ValueError(f"qubit count mismatch: "
                         f"{op.n_qubits} vs {state.n_qubits}")
    out = np.zeros(state.dim, dtype=complex)
    for word, coeff in op.items():
        perm, coef = word_action(word)
        out += coeff * coef * state.amplitudes[perm]
    return out


def expectation(h: PauliSum, state: Statevector) -> float:
    """<state|h|state> for Hermitian h; returns the real value."""
    if not h.is_hermitian():
        raise ValueError("expectation requires a Hermitian PauliSum")
    val = complex(np.vdot(state.amplitudes, apply_to_state(h, state)))
    if abs(val.imag) > EXPECTATION_IMAG_TOL:
        raise AssertionError(
            f"imaginary residue {val.imag:.2e} above tolerance")
    return val.real


_SINGLE_PROJECTORS = {
    # |b><b'| on one qubit as {word: coeff}
    (0, 0): {"I": 0.5, "Z": 0.5},
    (1, 1): {"I": 0.5, "Z": -0.5},
    (0, 1): {"X": 0.5, "Y": 0.5j},
    (1, 0): {"X": 0.5, "Y": -0.5j},
}


def projector_to_pauli(z: int, z_prime: int, n_qubits: int) -> PauliSum:
    """Exact Pauli expansion of |z><z'| via the single-qubit dictionary."""
    dim = 2**n_qubits
    if not (0 <= z < dim and 0 <= z_prime < dim):
        raise IndexError(f"basis index out of range for {n_qubits} qubits")
    terms: dict[str, complex] = {"": 1.0}
    for j in range(n_qubits):
        factor = _SINGLE_PROJECTORS[(bit_of(z, j, n_qubits),
                                     bit_of(z_prime, j, n_qubits))]
        terms = {w + fw: c * fc
                 for w, c in terms.items()
                 for fw, fc in factor.items()}
    return PauliSum(n_qubits, terms)


@dataclass(frozen=True)
class FermionOperatorString:
    """Ordered product of creation/annihilation operators times a scalar.

    ``factors`` lists (mode index, is_creation) left to right; as usual the
    rightmost factor acts first on a ket.
    """

    factors: tuple[tuple[int, bool], ...]
    coefficient: complex = 1.0

    def __post_init__(self):
        object.__setattr__(self, "factors",
                           tuple((int(p), bool(c)) for p, c in self.factors))
        object.__setattr__(self, "coefficient", complex(self.coefficient))


def _jw_ladder(p: int, creation: bool, n_qubits: int) -> PauliSum:
    if not 0 <= p < n_qubits:
        raise IndexError(f"mode {p} out of range for {n_qubits} qubits")
    zs = "Z" * p
    tail = "I" * (n_qubits - p - 1)
    x_word = zs + "X" + tail
    y_word = zs + "Y" + tail
    sign = -1j if creation else 1j  # a = Z..Z (X + iY)/2, a^dag its adjoint
    return PauliSum(n_qubits, {x_word: 0.5, y_word: 0.5 * sign})


def jordan_wigner(op: FermionOperatorString, n_qubits: int) -> PauliSum:
    """Jordan-Wigner image of a fermionic operator string.

    Mode p maps to qubit p with the Z parity string on qubits q < p.
    """
    result = PauliSum.identity(n_qubits, op.coefficient)
    for p, creation in op.factors:
        result = multiply(result, _jw_ladder(p, creation, n_qubits))
    return result


def format_pauli_sum(op: PauliSum) -> str:
    """One term per line: '<re> <im> <letters>'."""
    lines = [f"{c.real:.17g} {c.imag:.17g} {w}" for w, c in op.items()]
    return "\n".join(lines) + ("\n" if lines else "")


def parse_pauli_sum(text: str) -> PauliSum:
    """Inverse of :func:`format_pauli_sum`."""
    terms: dict[str, complex] = {}
    n_qubits = None
    for lineno, raw in enumerate(text.splitlines(), start=1):
        line = raw.strip()
        if not line or line.startswith("#"):
            continue
        parts = line.split()
        if len(parts) != 3:
            raise ValueError(f"line {lineno}: expected "
                             f"'<re> <im> <letters>', got {raw!r}")
        re_s, im_s, word = parts
        _validate_word(word)
        if n_qubits is None:
            n_qubits = len(word)
        elif len(word) != n_qubits:
            raise ValueError(f"line {lineno}: inconsistent word length")
        terms[word] = terms.get(word, 0.0) + complex(float(re_s), float(im_s))
    if n_qubits is None:
        raise ValueError("no Pauli terms found")
    return PauliSum(n_qubits, terms)
