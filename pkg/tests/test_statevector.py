import numpy as np
import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from oavqe import statevector as sv

from conftest import random_unitary


def test_bit_conventions():
    # [TRIVIAL] qubit 0 is the leftmost ket label
    assert sv.index_of_bits("1100") == 12
    assert sv.bit_of(12, 0, 4) == 1
    assert sv.bit_of(12, 1, 4) == 1
    assert sv.bit_of(12, 2, 4) == 0
    assert sv.bit_of(12, 3, 4) == 0


def test_from_basis_and_norm():
    s = sv.from_basis(3, 5)
    assert s.dim == 8
    assert s.amplitudes[5] == 1.0
    assert np.count_nonzero(s.amplitudes) == 1
    assert s.norm() == pytest.approx(1.0)


def test_from_basis_range_checks():
    with pytest.raises(IndexError):
        sv.from_basis(2, 4)
    with pytest.raises(sv.QubitCountError):
        sv.from_basis(0, 0)
    with pytest.raises(sv.QubitCountError):
        sv.from_basis(sv.DENSE_QUBIT_CAP + 1, 0)


def test_statevector_is_immutable():
    s = sv.from_basis(2, 0)
    with pytest.raises(ValueError):
        s.amplitudes[0] = 0.0


def test_inner_product_conjugates_left():
    a = sv.Statevector(1, np.array([1j, 0.0]) )
    b = sv.Statevector(1, np.array([1.0, 0.0]))
    assert sv.inner_product(a, b) == pytest.approx(-1j)
    with pytest.raises(ValueError):
        sv.inner_product(a, sv.from_basis(2, 0))


@settings(max_examples=25, deadline=None)
@given(seed=st.integers(0, 2**31), target=st.integers(0, 2))
def test_apply_unitary_single_qubit_matches_kron(seed, target):
    # [DERIVED] oracle: explicit kron with identities
    rng = np.random.default_rng(seed)
    u = random_unitary(rng, 2)
    psi = rng.normal(size=8) + 1j * rng.normal(size=8)
    psi /= np.linalg.norm(psi)
    mats = [np.eye(2)] * 3
    mats[target] = u
    full = np.kron(np.kron(mats[0], mats[1]), mats[2])
    got = sv.apply_unitary(sv.Statevector(3, psi), u, (target,))
    np.testing.assert_allclose(got.amplitudes, full @ psi, atol=1e-12)


@settings(max_examples=25, deadline=None)
@given(seed=st.integers(0, 2**31))
def test_apply_unitary_two_qubit_any_order(seed):
    # acting on (2, 0) must equal the SWAP-conjugated kron oracle
    rng = np.random.default_rng(seed)
    u = random_unitary(rng, 4)
    psi = rng.normal(size=8) + 1j * rng.normal(size=8)
    psi /= np.linalg.norm(psi)
    got = sv.apply_unitary(sv.Statevector(3, psi), u, (2, 0))
    # oracle: permute axes so qubit 2 is first, qubit 0 second
    ref = psi.reshape(2, 2, 2).transpose(2, 0, 1).reshape(4, 2)
    ref = (u @ ref).reshape(2, 2, 2).transpose(1, 2, 0).reshape(8)
    np.testing.assert_allclose(got.amplitudes, ref, atol=1e-12)


def test_apply_unitary_validation(rng):
    s = sv.from_basis(2, 0)
    with pytest.raises(ValueError):
        sv.apply_unitary(s, np.eye(2), (0, 0))
    with pytest.raises(ValueError):
        sv.apply_unitary(s, np.eye(2), (2,))
    with pytest.raises(ValueError):
        sv.apply_unitary(s, np.eye(4), (0,))
    with pytest.raises(ValueError):
        sv.apply_unitary(s, 2.0 * np.eye(2), (0,))


def test_apply_matrix_builds_unitaries_columnwise():
    # trailing axes let identity columns pass through in one call
    h = np.array([[1, 1], [1, -1]]) / np.sqrt(2)
    eye = np.eye(4, dtype=complex)
    out = sv.apply_matrix(eye, h, (1,), 2)
    np.testing.assert_allclose(out, np.kron(np.eye(2), h), atol=1e-12)
