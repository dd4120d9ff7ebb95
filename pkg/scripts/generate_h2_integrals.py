#!/usr/bin/env python3
"""Generate the minimal-basis H2 spin-orbital integral fixture.

Everything is computed from closed-form expressions for s-type Gaussian
primitives (overlap, kinetic, nuclear attraction, and two-electron
repulsion integrals; the Boys function F0 reduces to erf), so the fixture
is reproducible from this script alone with no chemistry package.

Basis: STO-3G for hydrogen — three primitives contracted to one 1s
function per atom, exponents pre-scaled for H (zeta = 1.24).  Molecular
orbitals are fixed by symmetry: the gerade/ungerade combinations of the
two atomic functions, which diagonalize every one-particle operator of
the homonuclear dimer, so no self-consistent field loop is needed.

Spin-orbital order: (g up, u up, g down, u down).  Two-body integrals are
stored in physicist convention <pq|rs>.  Energies in Hartree, bond
lengths in Angstrom.

Run:  python3 scripts/generate_h2_integrals.py [output.json]
"""
import json
import math
import sys
from pathlib import Path

import numpy as np
from scipy.special import erf

ANGSTROM_TO_BOHR = 1.8897259886

# STO-3G hydrogen 1s: exponents (already scaled by zeta^2, zeta = 1.24)
# and contraction coefficients of the three primitives.
EXPONENTS = np.array([3.42525091, 0.62391373, 0.16885540])
COEFFS = np.array([0.15432897, 0.53532814, 0.44463454])

BOND_LENGTHS_ANGSTROM = [0.3, 0.4, 0.5, 0.6, 0.7, 0.74,
                         0.8, 1.0, 1.25, 1.5, 2.0, 2.5]


def boys_f0(t: float) -> float:
    if t < 1e-12:
        return 1.0 - t / 3.0
    return 0.5 * math.sqrt(math.pi / t) * erf(math.sqrt(t))


def primitive_norm(alpha: float) -> float:
    return (2.0 * alpha / math.pi) ** 0.75


def s_overlap(a, b, ra, rb):
    """<a|b> for unit-coefficient normalized s primitives at ra, rb."""
    p = a + b
    r2 = float(np.dot(ra - rb, ra - rb))
    pref = (math.pi / p) ** 1.5 * math.exp(-a * b / p * r2)
    return pref * primitive_norm(a) * primitive_norm(b)


def s_kinetic(a, b, ra, rb):
    p = a + b
    r2 = float(np.dot(ra - rb, ra - rb))
    mu = a * b / p
    return mu * (3.0 - 2.0 * mu * r2) * s_overlap(a, b, ra, rb)


def s_nuclear(a, b, ra, rb, rc):
    """<a| -1/|r - rc| |b> for a unit-charge nucleus at rc."""
    p = a + b
    r2 = float(np.dot(ra - rb, ra - rb))
    rp = (a * ra + b * rb) / p
    pc2 = float(np.dot(rp - rc, rp - rc))
    pref = -2.0 * math.pi / p * math.exp(-a * b / p * r2)
    return (pref * boys_f0(p * pc2)
            * primitive_norm(a) * primitive_norm(b))


def s_eri(a, b, c, d, ra, rb, rc, rd):
    """(ab|cd) in chemist notation for s primitives."""
    p, q = a + b, c + d
    rp = (a * ra + b * rb) / p
    rq = (c * rc + d * rd) / q
    rab2 = float(np.dot(ra - rb, ra - rb))
    rcd2 = float(np.dot(rc - rd, rc - rd))
    rpq2 = float(np.dot(rp - rq, rp - rq))
    pref = (2.0 * math.pi ** 2.5 / (p * q * math.sqrt(p + q))
            * math.exp(-a * b / p * rab2 - c * d / q * rcd2))
    norm = (primitive_norm(a) * primitive_norm(b)
            * primitive_norm(c) * primitive_norm(d))
    return pref * boys_f0(p * q / (p + q) * rpq2) * norm


def contracted(fn, centers):
    """Contract a primitive integral over all primitive combinations."""
    n = len(centers)
    rank = fn.__code__.co_argcount // 2
    out = np.zeros((n,) * rank)
    for idx in np.ndindex(*(n,) * rank):
        total = 0.0
        for prims in np.ndindex(*(3,) * rank):
            coeff = math.prod(COEFFS[list(prims)])
            alphas = [EXPONENTS[p] for p in prims]
            rs = [centers[i] for i in idx]
            total += coeff * fn(*alphas, *rs)
        out[idx] = total
    return out


def ao_integrals(r_bohr: float):
    centers = [np.zeros(3), np.array([0.0, 0.0, r_bohr])]
    s = contracted(s_overlap, centers)
    t = contracted(s_kinetic, centers)
    v = np.zeros((2, 2))
    for rc in centers:
        v += contracted(lambda a, b, ra, rb, _rc=rc:
                        s_nuclear(a, b, ra, rb, _rc), centers)
    eri = contracted(s_eri, centers)
    return s, t + v, eri


def mo_integrals(r_bohr: float):
    """Core Hamiltonian and chemist-notation ERIs in the (g, u) MO basis."""
    s, hcore, eri = ao_integrals(r_bohr)
    s12 = s[0, 1]
    c = np.array([[1.0 / math.sqrt(2.0 * (1.0 + s12)),
                   1.0 / math.sqrt(2.0 * (1.0 - s12))],
                  [1.0 / math.sqrt(2.0 * (1.0 + s12)),
                   -1.0 / math.sqrt(2.0 * (1.0 - s12))]])
    h_mo = c.T @ hcore @ c
    eri_mo = np.einsum("mi,nj,mnls,lk,sq->ijkq",
                       c, c, eri, c, c, optimize=True)
    return h_mo, eri_mo


def spin_orbital_integrals(h_mo: np.ndarray, eri_mo: np.ndarray):
    """Expand spatial (g, u) integrals to (g up, g down, u up, u down).

    Returns one_body[p][q] and physicist-convention two_body <pq|rs> =
    (pr|qs) with spin conservation p~r and q~s.  Spin-orbitals are blocked
    by spatial orbital so that occupation |1100> is the Hartree-Fock
    determinant (both electrons in the bonding orbital).
    """
    spatial = [0, 0, 1, 1]
    spin = [0, 1, 0, 1]
    one = np.zeros((4, 4))
    two = np.zeros((4, 4, 4, 4))
    for p in range(4):
        for q in range(4):
            if spin[p] == spin[q]:
                one[p, q] = h_mo[spatial[p], spatial[q]]
    for p in range(4):
        for q in range(4):
            for r in range(4):
                for s in range(4):
                    if spin[p] == spin[r] and spin[q] == spin[s]:
                        two[p, q, r, s] = eri_mo[spatial[p], spatial[r],
                                                 spatial[q], spatial[s]]
    return one, two


def main():
    out_path = Path(sys.argv[1]) if len(sys.argv) > 1 else (
        Path(__file__).resolve().parent.parent
        / "src" / "oavqe" / "data" / "h2_sto3g.json")
    geometries = []
    for r_angstrom in BOND_LENGTHS_ANGSTROM:
        r_bohr = r_angstrom * ANGSTROM_TO_BOHR
        h_mo, eri_mo = mo_integrals(r_bohr)
        one, two = spin_orbital_integrals(h_mo, eri_mo)
        geometries.append({
            "bond_length": r_angstrom,
            "nuclear_repulsion": 1.0 / r_bohr,
            "one_body": one.tolist(),
            "two_body": two.tolist(),
        })
    payload = {
        "description": "H2/STO-3G spin-orbital integrals, computed "
                       "analytically by scripts/generate_h2_integrals.py "
                       "(closed-form s-type Gaussian integrals, no external "
                       "chemistry package)",
        "units": {"energy": "Hartree", "bond_length": "Angstrom"},
        "two_body_convention": "physicist <pq|rs>",
        "spin_orbital_order": ["g up", "g down", "u up", "u down"],
        "n_spin_orbitals": 4,
        "n_electrons": 2,
        "geometries": geometries,
    }
    out_path.parent.mkdir(parents=True, exist_ok=True)
    with open(out_path, "w") as f:
        json.dump(payload, f, indent=1)
    print(f"wrote {out_path} ({len(geometries)} geometries)")


if __name__ == "__main__":
    main()
