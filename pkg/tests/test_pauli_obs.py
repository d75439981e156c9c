import random

import pytest

from qfesim.gates import apply_cx, apply_h, apply_x
from qfesim.measure import ForcedBits, RngStream, measure_z
from qfesim.oracle import (
    DenseState,
    dense_measure_forced,
    dense_pauli_expectation,
    dense_pauli_measure_forced,
)
from qfesim.pauli_obs import PauliString, is_deterministic_pauli, measure_pauli
from qfesim.qfe_core import dump_state, new_basis_state, validate

from conftest import TOL, assert_matches, random_pair


def bell_with_ancilla():
    s = new_basis_state([0, 0, 0])
    apply_h(s, 0)
    apply_cx(s, 0, 1)
    return s


def random_pauli(rnd, qubits):
    k = rnd.randint(1, len(qubits))
    return PauliString((q, rnd.choice("XYZ")) for q in rnd.sample(qubits, k))


class TestPauliString:
    def test_parse(self):
        p = PauliString.parse("X0 y1 Z2 X3")
        assert p.terms == ((0, "X"), (1, "Y"), (2, "Z"), (3, "X"))
        assert str(p) == "X0 Y1 Z2 X3"
        assert len(p) == 4 and p.support == (0, 1, 2, 3)

    @pytest.mark.parametrize("text", ["", "X0 Z0", "W1", "X"])
    def test_rejects(self, text):
        with pytest.raises(ValueError):
            PauliString.parse(text)


class TestExamples:
    def test_zz_on_bell(self):
        s = bell_with_ancilla()
        s.counter.reset()
        rng = RngStream(0)
        assert measure_pauli(s, PauliString.parse("Z0 Z1"), 2, rng) == 0
        assert rng.drawn == 0

    @pytest.mark.parametrize("beta", [0, 1])
    def test_x_on_zero(self, beta):
        s = new_basis_state([0, 0])
        st = DenseState(2)
        assert measure_pauli(s, PauliString.parse("X0"), 1, ForcedBits([beta])) == beta
        dense_pauli_measure_forced(st, [(0, "X")], beta)
        assert_matches(st, s)

    def test_zz_on_01(self):
        s = new_basis_state([0, 1, 0])
        st = DenseState.from_bits([0, 1, 0])
        assert measure_pauli(s, PauliString.parse("Z0 Z1"), 2, RngStream(0)) == 1
        assert_matches(st, s)

    def test_deterministic_queries(self):
        assert is_deterministic_pauli(bell_with_ancilla(), PauliString.parse("Z0 Z1"), 2) == 0
        assert is_deterministic_pauli(new_basis_state([0, 0, 0]), PauliString.parse("X0 X1"), 2) is None
        ghz = new_basis_state([0] * 4)
        apply_h(ghz, 0)
        apply_cx(ghz, 0, 1)
        apply_cx(ghz, 1, 2)
        assert is_deterministic_pauli(ghz, PauliString.parse("X0 X1 X2"), 3) == 0

    def test_query_leaves_state(self):
        s = bell_with_ancilla()
        before = dump_state(s)
        is_deterministic_pauli(s, PauliString.parse("X0 Z1"), 2)
        assert dump_state(s) == before

    def test_ancilla_prior_one_restored(self):
        s = bell_with_ancilla()
        apply_x(s, 2)
        measure_pauli(s, PauliString.parse("X0 X1"), 2, RngStream(0))
        assert s.A.row_count(2) == 0 and s.b[2] == 1


class TestRejection:
    @pytest.mark.parametrize("pauli,ancilla", [("Z0 Z2", 2), ("Z0", 1), ("Z0", 5)])
    def test_rejected_before_mutation(self, pauli, ancilla):
        s = bell_with_ancilla()
        before = dump_state(s)
        with pytest.raises((ValueError, IndexError)):
            measure_pauli(s, PauliString.parse(pauli), ancilla, RngStream(0))
        assert dump_state(s) == before


@pytest.mark.parametrize("seed", range(120))
def test_matches_oracle(seed):
    rnd = random.Random(seed)
    n = 2 + seed % 6
    s, st = random_pair(seed, n, 40)
    ancilla = rnd.randrange(n)
    rng = RngStream(seed, 4)
    # collapse the ancilla to a basis state on both sides
    bit = measure_z(s, ancilla, rng)
    dense_measure_forced(st, ancilla, "Z", bit)
    pauli = random_pauli(rnd, [q for q in range(n) if q != ancilla])
    expect = dense_pauli_expectation(st, pauli.terms)
    beta = measure_pauli(s, pauli, ancilla, rng)
    if abs(abs(expect) - 1) <= TOL:
        assert beta == (0 if expect > 0 else 1)
    dense_pauli_measure_forced(st, pauli.terms, beta)
    assert validate(s) is None
    assert_matches(st, s)
    assert measure_pauli(s, pauli, ancilla, rng) == beta
    assert_matches(st, s)
