import math

import numpy as np
import pytest
from hypothesis import given, settings
from hypothesis import strategies as st
from scipy.linalg import expm

from oavqe import circuit, pauli
from oavqe.statevector import from_basis


def test_a_gate_block_structure():
    # [TRIVIAL] acts only on the {|01>, |10>} block, conserves weight
    m = circuit.a_gate_matrix(0.3, 0.7)
    np.testing.assert_allclose(m @ m.conj().T, np.eye(4), atol=1e-12)
    assert m[0, 0] == 1 and m[3, 3] == 1
    assert np.all(m[0, 1:] == 0) and np.all(m[3, :3] == 0)
    c, s = math.cos(0.3), math.sin(0.3)
    assert m[1, 1] == pytest.approx(c)
    assert m[1, 2] == pytest.approx(np.exp(0.7j) * s)
    assert m[2, 2] == pytest.approx(-c)


def test_gate_validation():
    with pytest.raises(ValueError):
        circuit.Gate("CNOT", (0,))
    with pytest.raises(ValueError):
        circuit.Gate("NOPE", (0,))
    with pytest.raises(ValueError):
        circuit.Gate("UNITARY", (0,))
    with pytest.raises(ValueError):
        circuit.Circuit(2).add("X", (2,))


def test_circuit_run_matches_unitary(rng):
    c = circuit.Circuit(2)
    c.add("H", (0,)).add("CNOT", (0, 1)).add("RZ", (1,), (0.4,))
    c.global_phase = 0.123
    u = circuit.unitary(c)
    np.testing.assert_allclose(u @ u.conj().T, np.eye(4), atol=1e-12)
    state = circuit.run(c, from_basis(2, 0))
    np.testing.assert_allclose(state.amplitudes, u[:, 0], atol=1e-12)


words_nonid = st.text(alphabet="IXYZ", min_size=3, max_size=3).filter(
    lambda w: set(w) != {"I"})


@settings(max_examples=40, deadline=None)
@given(word=words_nonid, theta=st.floats(-6.0, 6.0))
def test_compile_pauli_rotation_matches_expm(word, theta):
    # [DERIVED] oracle: scipy matrix exponential of i*theta*P/2
    got = circuit.unitary(circuit.compile_pauli_rotation(word, theta))
    ref = expm(0.5j * theta * pauli.word_to_dense(word))
    np.testing.assert_allclose(got, ref, atol=1e-12)


def test_compile_rejects_identity_word():
    with pytest.raises(ValueError):
        circuit.compile_pauli_rotation("III", 0.2)


def test_trotterize_converges_to_exact(rng):
    h = pauli.PauliSum(2, {"XI": 0.4, "ZZ": -0.8, "IY": 0.6, "II": 0.25})
    target = expm(1j * math.pi * pauli.to_dense(h))
    errs = []
    for r in (1, 4, 16):
        u = circuit.unitary(circuit.trotterize(
            circuit.TrotterPlan(h, math.pi, r)))
        errs.append(np.abs(u - target).max())
    assert errs[0] > errs[1] > errs[2]
    assert errs[2] < 1e-2
    # second-order formula: 4x the steps cuts the error ~16x
    assert errs[1] / errs[2] > 8


def test_trotterize_identity_term_becomes_global_phase():
    h = pauli.PauliSum(1, {"I": 0.5})
    c = circuit.trotterize(circuit.TrotterPlan(h, math.pi, 1))
    assert not c.gates
    np.testing.assert_allclose(circuit.unitary(c), 1j * np.eye(2),
                               atol=1e-12)


def test_trotter_term_order_is_respected():
    h = pauli.PauliSum(2, {"XI": 0.4, "IZ": 0.3, "ZZ": 0.2})
    plan = circuit.TrotterPlan(h, math.pi, 1, term_order=("ZZ", "XI"))
    terms, _ = circuit._hermitian_real_terms(h, plan.term_order)
    assert [w for w, _ in terms] == ["ZZ", "XI", "IZ"]
    with pytest.raises(ValueError):
        circuit.TrotterPlan(h, math.pi, 0)


def test_rotation_sequence_agrees_with_compiled_circuit(rng):
    h = pauli.PauliSum(3, {"XYZ": 0.3, "ZII": -0.7, "IYX": 0.4, "III": 0.1})
    plan = circuit.TrotterPlan(h, math.pi, 2)
    seq = circuit.RotationSequence.from_plan(plan)
    psi = rng.normal(size=8) + 1j * rng.normal(size=8)
    psi /= np.linalg.norm(psi)
    via_seq = seq.apply_array(psi.copy())
    via_circ = circuit.unitary(circuit.trotterize(plan)) @ psi
    np.testing.assert_allclose(via_seq, via_circ, atol=1e-12)


def test_circuit_text_export():
    c = circuit.Circuit(2)
    c.add("RZ", (1,), (0.5,))
    text = c.to_text()
    assert text.startswith("# qubits 2")
    assert "RZ 1 0.5" in text
