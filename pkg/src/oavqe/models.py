"""Benchmark Hamiltonians: simple-cubic sp3 tight binding and minimal-basis H2.

The tight-binding model is a four-orbital (s, px, py, pz) nearest-neighbor
Slater-Koster Bloch Hamiltonian on a simple cubic lattice.  The molecular
side ingests precomputed spin-orbital integrals from a JSON fixture and
assembles the second-quantized Hamiltonian through the Jordan-Wigner map.
"""
from __future__ import annotations

import json
import math
from dataclasses import dataclass, field
from pathlib import Path

import numpy as np

from .pauli import (FermionOperatorString, PauliSum, jordan_wigner,
                    projector_to_pauli)

# ---------------------------------------------------------------------------
# Tight binding


@dataclass(frozen=True)
class TightBindingParams:
    """Slater-Koster parameters (eV) and lattice constant (Angstrom)."""

    eps_s: float = -14.0
    eps_p: float = 0.0
    V_ss_sigma: float = -1.0
    V_sp_sigma: float = 1.0
    V_pp_sigma: float = 2.0
    V_pp_pi: float = -0.5
    lattice_constant: float = 1.0

    def __post_init__(self):
        values = (self.eps_s, self.eps_p, self.V_ss_sigma, self.V_sp_sigma,
                  self.V_pp_sigma, self.V_pp_pi, self.lattice_constant)
        if not all(math.isfinite(v) for v in values):
            raise ValueError("tight-binding parameters must be finite")
        if self.lattice_constant <= 0:
            raise ValueError("lattice constant must be positive")


#: High-symmetry points of the simple cubic Brillouin zone, units of pi/a.
HIGH_SYMMETRY_POINTS = {
    "G": (0.0, 0.0, 0.0),
    "X": (1.0, 0.0, 0.0),
    "M": (1.0, 1.0, 0.0),
    "R": (1.0, 1.0, 1.0),
}

DEFAULT_PATH = ("G", "X", "M", "G", "R")


def k_path(waypoints: tuple[str, ...] = DEFAULT_PATH,
           samples_per_segment: int = 10) -> tuple[np.ndarray, list[str]]:
    """Linearly interpolated k-points (units of pi/a) along named waypoints.

    Returns the point array and a per-point label list (waypoint name at
    the waypoints, empty string between).
    """
    if samples_per_segment < 1:
        raise ValueError("samples_per_segment must be >= 1")
    for name in waypoints:
        if name not in HIGH_SYMMETRY_POINTS:
            raise ValueError(f"unknown high-symmetry point {name!r}")
    if len(waypoints) < 2:
        raise ValueError("a path needs at least two waypoints")
    points = [np.array(HIGH_SYMMETRY_POINTS[waypoints[0]])]
    labels = [waypoints[0]]
    for a, b in zip(waypoints, waypoints[1:]):
        start = np.array(HIGH_SYMMETRY_POINTS[a])
        stop = np.array(HIGH_SYMMETRY_POINTS[b])
        for s in range(1, samples_per_segment + 1):
            points.append(start + (stop - start) * s / samples_per_segment)
            labels.append(b if s == samples_per_segment else "")
    return np.array(points), labels


def bloch_hamiltonian(params: TightBindingParams,
                      k: np.ndarray) -> np.ndarray:
    """4x4 Bloch matrix at k (units of pi/a); orbital order (s, px, py, pz)."""
    k = np.asarray(k, dtype=float)
    if k.shape != (3,):
        raise ValueError("k must be a 3-vector")
    ka = k * math.pi  # k * a in radians, with k given in units of pi/a
    cos, sin = np.cos(ka), np.sin(ka)
    h = np.zeros((4, 4), dtype=complex)
    h[0, 0] = params.eps_s + 2.0 * params.V_ss_sigma * cos.sum()
    for i in range(3):
        h[0, i + 1] = 2j * params.V_sp_sigma * sin[i]
        h[i + 1, 0] = np.conj(h[0, i + 1])
        h[i + 1, i + 1] = (params.eps_p
                           + 2.0 * params.V_pp_sigma * cos[i]
                           + 2.0 * params.V_pp_pi * (cos.sum() - cos[i]))
    return h


def encode_band_hamiltonian(h: np.ndarray, encoding: str) -> PauliSum:
    """Qubit encoding of an n x n Hermitian single-particle matrix.

    reciprocal-orbital: one qubit per orbital; h_pq becomes hopping strings
    (XX + YY)/2 and (YX - XY)/2 on the pair, diagonal entries the number
    operator (I - Z)/2.  compact: h_zz' scales the basis-transfer projector
    |z><z'| decomposed into Pauli words on ceil(log2 n) qubits.
    """
    h = np.asarray(h, dtype=complex)
    n = h.shape[0]
    if h.shape != (n, n):
        raise ValueError("matrix must be square")
    if np.abs(h - h.conj().T).max() > 1e-10:
        raise ValueError("matrix must be Hermitian")
    if encoding == "reciprocal-orbital":
        out = PauliSum.zero(n)
        for p in range(n):
            number_op = PauliSum(n, {"I" * n: 0.5,
                                     _single(n, p, "Z"): -0.5})
            out = out + complex(h[p, p].real) * number_op
        for p in range(n):
            for q in range(p + 1, n):
                xx = _pair(n, p, q, "X", "X")
                yy = _pair(n, p, q, "Y", "Y")
                yx = _pair(n, p, q, "Y", "X")
                xy = _pair(n, p, q, "X", "Y")
                re, im = h[p, q].real, h[p, q].imag
                out = out + PauliSum(n, {xx: 0.5 * re, yy: 0.5 * re,
                                         yx: 0.5 * im, xy: -0.5 * im})
        return out
    if encoding == "compact":
        n_qubits = max(1, (n - 1).bit_length())
        out = PauliSum.zero(n_qubits)
        for z in range(n):
            for zp in range(n):
                if h[z, zp] != 0:
                    out = out + complex(h[z, zp]) * projector_to_pauli(
                        z, zp, n_qubits)
        return out
    raise ValueError(f"unknown encoding {encoding!r}")


def _single(n: int, p: int, letter: str) -> str:
    word = ["I"] * n
    word[p] = letter
    return "".join(word)


def _pair(n: int, p: int, q: int, lp: str, lq: str) -> str:
    word = ["I"] * n
    word[p], word[q] = lp, lq
    return "".join(word)


# ---------------------------------------------------------------------------
# Molecular Hamiltonian ingestion


@dataclass(frozen=True)
class MolecularIntegrals:
    """Spin-orbital integrals for one geometry, Hartree units.

    two_body[p][q][r][s] is the physicist-convention matrix element
    <pq|rs> = integral of conj(phi_p(1)) conj(phi_q(2)) r12^-1
    phi_r(1) phi_s(2); the Hamiltonian assembled from it is
    E_nuc + sum_pq h_pq a+_p a_q + (1/2) sum_pqrs <pq|rs> a+_p a+_q a_s a_r.
    """

    bond_length: float
    nuclear_repulsion: float
    one_body: np.ndarray
    two_body: np.ndarray
    n_spin_orbitals: int = 4
    n_electrons: int = 2

    def __post_init__(self):
        one = np.asarray(self.one_body, dtype=float)
        two = np.asarray(self.two_body, dtype=float)
        object.__setattr__(self, "one_body", one)
        object.__setattr__(self, "two_body", two)
        n = self.n_spin_orbitals
        if self.bond_length <= 0:
            raise ValueError("bond length must be positive")
        if one.shape != (n, n):
            raise ValueError(f"one_body must be {n}x{n}")
        if two.shape != (n, n, n, n):
            raise ValueError(f"two_body must be {n}^4")
        if np.abs(one - one.T).max() > 1e-10:
            raise ValueError("one_body must be symmetric")
        _check_two_body_symmetries(two)


def _check_two_body_symmetries(two: np.ndarray) -> None:
    """Real-orbital index symmetries of <pq|rs>: exchange and Hermiticity."""
    checks = {
        "<pq|rs> != <qp|sr>": two.transpose(1, 0, 3, 2),
        "<pq|rs> != <rs|pq>": two.transpose(2, 3, 0, 1),
    }
    for message, permuted in checks.items():
        delta = np.abs(two - permuted)
        if delta.max() > 1e-10:
            index = np.unravel_index(np.argmax(delta), delta.shape)
            raise ValueError(f"{message} at index {tuple(int(i) for i in index)}")


def build_molecular_hamiltonian(m: MolecularIntegrals) -> PauliSum:
    """Second-quantized Hamiltonian as a simplified PauliSum."""
    n = m.n_spin_orbitals
    out = float(m.nuclear_repulsion) * PauliSum.identity(n)
    for p in range(n):
        for q in range(n):
            if m.one_body[p, q] != 0:
                term = FermionOperatorString(((p, True), (q, False)))
                out = out + float(m.one_body[p, q]) * jordan_wigner(term, n)
    for p in range(n):
        for q in range(n):
            for r in range(n):
                for s in range(n):
                    g = m.two_body[p, q, r, s]
                    if g != 0:
                        term = FermionOperatorString(
                            ((p, True), (q, True), (s, False), (r, False)))
                        out = out + 0.5 * float(g) * jordan_wigner(term, n)
    if not out.is_hermitian():
        raise ValueError("assembled Hamiltonian is not Hermitian")
    return out


def load_integrals(path: str | Path) -> list[MolecularIntegrals]:
    """Validated per-geometry integrals from a JSON fixture, by bond length."""
    with open(path) as f:
        data = json.load(f)
    geometries = data.get("geometries", [])
    if not geometries:
        raise ValueError(f"no geometries found in {path}")
    out = []
    for g in geometries:
        out.append(MolecularIntegrals(
            bond_length=float(g["bond_length"]),
            nuclear_repulsion=float(g["nuclear_repulsion"]),
            one_body=np.array(g["one_body"], dtype=float),
            two_body=np.array(g["two_body"], dtype=float),
            n_spin_orbitals=int(data.get("n_spin_orbitals", 4)),
            n_electrons=int(data.get("n_electrons", 2)),
        ))
    return sorted(out, key=lambda m: m.bond_length)


def default_integrals_path() -> Path:
    return Path(__file__).parent / "data" / "h2_sto3g.json"
