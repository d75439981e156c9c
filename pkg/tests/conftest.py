import random

import numpy as np
import pytest

from qfesim.gates import GATES
from qfesim.measure import RngStream, measure
from qfesim.oracle import DenseState, compare, dense_apply, dense_measure_forced
from qfesim.qfe_core import new_basis_state

ONE_QUBIT = ["X", "Y", "Z", "H", "S"]
TWO_QUBIT = ["CZ", "CX", "CY"]
MEASURES = ["MZ", "MX", "MY"]
ALL_OPS = ONE_QUBIT + TWO_QUBIT + MEASURES

TOL = 1e-9


def random_op(rnd, n, ops=ALL_OPS):
    choices = [op for op in ops if n > 1 or op not in TWO_QUBIT]
    op = rnd.choice(choices)
    if op in TWO_QUBIT:
        return op, tuple(rnd.sample(range(n), 2))
    return op, (rnd.randrange(n),)


def apply_both(s, st, op, qubits, rng):
    """Apply ``op`` to the expansion and replay it on the dense state."""
    if op in MEASURES:
        beta = measure(s, qubits[0], op[1], rng)
        dense_measure_forced(st, qubits[0], op[1], beta)
        return beta
    GATES[op](s, *qubits)
    dense_apply(st, op, *qubits)
    return None


def random_pair(seed, n, depth, ops=ALL_OPS):
    """A random reachable state together with its dense twin."""
    rnd = random.Random(seed)
    rng = RngStream(seed, 99)
    s = new_basis_state([0] * n)
    st = DenseState(n)
    for _ in range(depth):
        op, qs = random_op(rnd, n, ops)
        apply_both(s, st, op, qs, rng)
    return s, st


@pytest.fixture
def pair_factory():
    return random_pair


def assert_matches(st, s, tol=TOL):
    dev = compare(st, s)
    assert dev <= tol, f"deviation {dev:g}"


def amplitudes_close(a, b, tol=TOL):
    return float(np.max(np.abs(np.asarray(a) - np.asarray(b)))) <= tol


# acceptance criteria report, printed at the end of the session
CRITERIA = {}


def report_criterion(number, ok, detail):
    CRITERIA[number] = (bool(ok), detail)
    return ok


def pytest_terminal_summary(terminalreporter):
    if not CRITERIA:
        return
    terminalreporter.section("acceptance criteria")
    for number in sorted(CRITERIA):
        ok, detail = CRITERIA[number]
        terminalreporter.write_line(f"{'PASS' if ok else 'FAIL'} criterion {number}: {detail}")
