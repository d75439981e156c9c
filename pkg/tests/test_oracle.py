import numpy as np
import pytest

from qfesim.circuit_io import parse
from qfesim.oracle import (
    GATE_MATRICES,
    DenseState,
    OracleError,
    compare,
    co_simulate,
    dense_apply,
    dense_measure_forced,
)
from qfesim.gates import apply_h, apply_s
from qfesim.qfe_core import new_basis_state

R2 = np.sqrt(0.5)


@pytest.mark.parametrize("name", sorted(GATE_MATRICES))
def test_gate_matrices_unitary(name):
    u = GATE_MATRICES[name]
    assert np.allclose(u @ u.conj().T, np.eye(len(u)), atol=1e-12)


class TestApply:
    def test_x(self):
        st = DenseState(1)
        dense_apply(st, "X", 0)
        assert st.amplitudes.tolist() == [0, 1]

    def test_h(self):
        st = DenseState(1)
        dense_apply(st, "H", 0)
        assert np.allclose(st.amplitudes, [R2, R2])

    def test_s_on_one(self):
        st = DenseState.from_bits([1])
        dense_apply(st, "S", 0)
        assert np.allclose(st.amplitudes, [0, 1j])

    def test_cx_control_is_first_argument(self):
        st = DenseState.from_bits([1, 0])
        dense_apply(st, "CX", 0, 1)
        assert st.amplitudes[0b11] == 1

    def test_qubit_zero_is_least_significant(self):
        st = DenseState(3)
        dense_apply(st, "X", 2)
        assert st.amplitudes[4] == 1

    def test_norm_kept(self):
        st = DenseState(3)
        for name, qs in [("H", (0,)), ("CX", (0, 2)), ("S", (2,)), ("CY", (2, 1)), ("H", (1,))]:
            dense_apply(st, name, *qs)
            assert abs(st.norm() - 1) <= 1e-12

    def test_cap(self):
        with pytest.raises(OracleError):
            DenseState(15)


class TestMeasureForced:
    def test_z_on_plus(self):
        st = DenseState(1)
        dense_apply(st, "H", 0)
        assert dense_measure_forced(st, 0, "Z", 1) == 0.5
        assert np.allclose(st.amplitudes, [0, 1])

    def test_x_on_plus(self):
        st = DenseState(1)
        dense_apply(st, "H", 0)
        before = st.amplitudes.copy()
        assert dense_measure_forced(st, 0, "X", 0) == 1.0
        assert np.array_equal(st.amplitudes, before)

    def test_impossible_outcome(self):
        st = DenseState(1)
        dense_apply(st, "H", 0)
        dense_apply(st, "S", 0)
        before = st.amplitudes.copy()
        with pytest.raises(OracleError):
            dense_measure_forced(st, 0, "Y", 1)
        assert np.array_equal(st.amplitudes, before)


class TestCompare:
    def test_fresh(self):
        assert compare(DenseState(3), new_basis_state([0, 0, 0])) == 0

    def test_psi1(self):
        s = new_basis_state([0, 0])
        st = DenseState(2)
        for j in (0, 1):
            apply_h(s, j)
            dense_apply(st, "H", j)
        apply_s(s, 1)
        dense_apply(st, "S", 1)
        assert compare(st, s) <= 1e-12

    def test_global_phase_counts(self):
        s = new_basis_state([0])
        s.g = 4
        assert compare(DenseState(1), s) == pytest.approx(2.0)


def test_co_simulate_flags_corruption():
    c = parse("QUBITS 2\nH 0\nCX 0 1\nMZ 0\nMZ 1\n")
    assert co_simulate(c, 1, 0) <= 1e-12
    assert co_simulate(c, 1, 0, corrupt=True) > 1e-9
