import numpy as np
import pytest

from oavqe import ansatz, driver, models, pauli


def test_k_path_shape_and_labels():
    pts, labels = models.k_path(models.DEFAULT_PATH, 10)
    assert pts.shape == (41, 3)
    assert labels[0] == "G" and labels[10] == "X" and labels[-1] == "R"
    assert labels.count("") == 36
    np.testing.assert_allclose(pts[0], [0, 0, 0])
    np.testing.assert_allclose(pts[5], [0.5, 0, 0])


def test_k_path_validation():
    with pytest.raises(ValueError):
        models.k_path(("G", "Q"), 5)
    with pytest.raises(ValueError):
        models.k_path(("G",), 5)
    with pytest.raises(ValueError):
        models.k_path(models.DEFAULT_PATH, 0)


def test_tight_binding_validation():
    with pytest.raises(ValueError):
        models.TightBindingParams(lattice_constant=0.0)
    with pytest.raises(ValueError):
        models.TightBindingParams(eps_s=float("nan"))


def test_bloch_hamiltonian_gamma_point_values():
    # [DERIVED] at the zone center all sines vanish and cosines are 1
    p = models.TightBindingParams()
    h = models.bloch_hamiltonian(p, np.zeros(3))
    np.testing.assert_allclose(h, h.conj().T, atol=1e-12)
    assert h[0, 0] == pytest.approx(p.eps_s + 6 * p.V_ss_sigma)  # -20
    for i in range(1, 4):
        assert h[i, i] == pytest.approx(
            p.eps_p + 2 * p.V_pp_sigma + 4 * p.V_pp_pi)  # +2
    assert np.abs(h - np.diag(np.diag(h))).max() < 1e-12


def test_bloch_hamiltonian_hermitian_on_path(rng):
    p = models.TightBindingParams()
    for k in rng.uniform(-1, 1, size=(10, 3)):
        h = models.bloch_hamiltonian(p, k)
        np.testing.assert_allclose(h, h.conj().T, atol=1e-12)


@pytest.mark.parametrize("encoding", ["reciprocal-orbital", "compact"])
def test_encode_band_hamiltonian_reproduces_matrix(encoding, rng):
    # [DERIVED] oracle: read the encoded operator back as a dense block
    p = models.TightBindingParams()
    k = rng.uniform(-1, 1, 3)
    h = models.bloch_hamiltonian(p, k)
    op = models.encode_band_hamiltonian(h, encoding)
    dense = pauli.to_dense(op)
    if encoding == "reciprocal-orbital":
        basis = ansatz.reciprocal_orbital_space(4).basis
    else:
        basis = ansatz.compact_space(2).basis
    block = dense[np.ix_(basis, basis)]
    np.testing.assert_allclose(block, h, atol=1e-10)


def test_encode_band_hamiltonian_validation():
    with pytest.raises(ValueError):
        models.encode_band_hamiltonian(np.array([[0, 1], [0, 0]]), "compact")
    with pytest.raises(ValueError):
        models.encode_band_hamiltonian(np.eye(2), "bogus")


def test_integrals_fixture_loads_sorted():
    data = models.load_integrals(models.default_integrals_path())
    lengths = [m.bond_length for m in data]
    assert lengths == sorted(lengths)
    assert 0.74 in lengths
    assert all(m.n_spin_orbitals == 4 and m.n_electrons == 2 for m in data)


def test_molecular_integrals_validation():
    good = models.load_integrals(models.default_integrals_path())[0]
    bad_one = good.one_body.copy()
    bad_one[0, 1] += 1.0
    with pytest.raises(ValueError, match="symmetric"):
        models.MolecularIntegrals(good.bond_length, good.nuclear_repulsion,
                                  bad_one, good.two_body)
    bad_two = good.two_body.copy()
    bad_two[0, 1, 2, 3] += 1.0
    with pytest.raises(ValueError):
        models.MolecularIntegrals(good.bond_length, good.nuclear_repulsion,
                                  good.one_body, bad_two)
    with pytest.raises(ValueError):
        models.MolecularIntegrals(-1.0, good.nuclear_repulsion,
                                  good.one_body, good.two_body)


def test_equilibrium_fci_energy():
    # [REFERENCE] minimal-basis full-CI ground energy of H2 near its
    # equilibrium separation is approximately -1.137 Hartree
    data = models.load_integrals(models.default_integrals_path())
    rec = next(m for m in data if m.bond_length == 0.74)
    h = models.build_molecular_hamiltonian(rec)
    e0 = driver.exact_spectrum(h, ansatz.h2_fock_space())[0]
    assert e0 == pytest.approx(-1.137284, abs=2e-5)


def test_molecular_hamiltonian_structure():
    data = models.load_integrals(models.default_integrals_path())
    h = models.build_molecular_hamiltonian(data[0])
    assert h.is_hermitian()
    dense = pauli.to_dense(h)
    # conserves particle number: commutes with the total number operator
    n_op = sum((pauli.to_dense(pauli.jordan_wigner(
        pauli.FermionOperatorString(((p, True), (p, False))), 4))
        for p in range(4)), start=np.zeros((16, 16), dtype=complex))
    np.testing.assert_allclose(dense @ n_op - n_op @ dense,
                               np.zeros((16, 16)), atol=1e-10)
    # the two-electron block spectrum is a subset of the full spectrum
    full = np.linalg.eigvalsh(dense)
    block = driver.exact_spectrum(h, ansatz.h2_fock_space())
    for e in block:
        assert np.min(np.abs(full - e)) < 1e-9


def test_load_integrals_errors(tmp_path):
    empty = tmp_path / "empty.json"
    empty.write_text('{"geometries": []}')
    with pytest.raises(ValueError):
        models.load_integrals(empty)
    with pytest.raises(OSError):
        models.load_integrals(tmp_path / "missing.json")
