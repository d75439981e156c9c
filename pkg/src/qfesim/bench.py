"""Touch-count and timing workloads.

Each suite yields rows ``(suite, size, op_class, touches, nanos)`` where
``touches`` counts sparse-structure node visits charged to the state.
"""

from __future__ import annotations

import random
import time
from typing import Iterator, List, Sequence, Tuple

from .gates import GATES, apply_cx, apply_h, apply_s, apply_x
from .measure import RngStream, measure, measure_x, measure_z
from .pauli_obs import PauliString, measure_pauli, phase_kick
from .qfe_core import QfeState, new_basis_state

__all__ = ["SUITES", "run_suite", "ghz_state", "pipeline_state", "syndrome_rounds", "OBSERVABLE", "Row"]

Row = Tuple[str, int, str, int, int]

OBSERVABLE = PauliString([(0, "X"), (1, "Y"), (2, "Z"), (3, "X")])


class _Meter:
    """Accumulates touches and wall time per operation class."""

    def __init__(self, s: QfeState) -> None:
        self.s = s
        self.totals: dict = {}

    def __call__(self, op_class: str, fn, *args):
        c0 = self.s.counter.touches
        t0 = time.perf_counter_ns()
        out = fn(*args)
        dt = time.perf_counter_ns() - t0
        tot = self.totals.setdefault(op_class, [0, 0])
        tot[0] += self.s.counter.touches - c0
        tot[1] += dt
        return out

    def rows(self, suite: str, size: int) -> List[Row]:
        return [(suite, size, k, v[0], v[1]) for k, v in self.totals.items()]


def ghz_state(n: int) -> QfeState:
    """(|0...0> + |1...1>)/sqrt(2) built by H and a CX chain."""
    s = new_basis_state([0] * n)
    apply_h(s, 0)
    for j in range(n - 1):
        apply_cx(s, j, j + 1)
    return s


def pipeline_state(n: int) -> QfeState:
    """n data qubits in a dressed GHZ state plus a clean ancilla at index n.

    The data qubits hold a GHZ state followed by S on every third qubit and
    H on every fifth, so rows of A differ in shape across the register.
    """
    if n < 4:
        raise ValueError("the pipeline needs at least 4 data qubits")
    s = new_basis_state([0] * (n + 1))
    apply_h(s, 0)
    for j in range(n - 1):
        apply_cx(s, j, j + 1)
    for j in range(1, n, 3):
        apply_s(s, j)
    for j in range(2, n, 5):
        apply_h(s, j)
    return s


def syndrome_rounds(s: QfeState, ancilla: int, rng, pauli: PauliString = OBSERVABLE):
    """Measure ``pauli`` twice through ``ancilla``; return touch counts.

    The first round projects onto an eigenspace, the second repeats it on an
    eigenstate. Returns (outcomes, round1, round2, round2 ancilla readout).
    """
    c = s.counter
    t0 = c.touches
    first = measure_pauli(s, pauli, ancilla, rng)
    t1 = c.touches
    prior = phase_kick(s, pauli, ancilla)
    t2 = c.touches
    second = measure_x(s, ancilla, rng)
    t3 = c.touches
    apply_h(s, ancilla)
    if second != prior:
        apply_x(s, ancilla)
    t4 = c.touches
    return (first, second), t1 - t0, t4 - t1, t3 - t2


def _ghz_rows(size: int, seed: int) -> List[Row]:
    s = new_basis_state([0] * size)
    m = _Meter(s)
    m("H", apply_h, s, 0)
    for j in range(size - 1):
        m("CX", apply_cx, s, j, j + 1)
    rng = RngStream(seed)
    m("MZ", measure_z, s, 0, rng)
    for j in range(1, size):
        m("MZ_deterministic", measure_z, s, j, rng)
    return m.rows("ghz", size)


def _syndrome_rows(size: int, seed: int) -> List[Row]:
    s = pipeline_state(size)
    rng = RngStream(seed)
    t0 = time.perf_counter_ns()
    _, round1, round2, readout = syndrome_rounds(s, size, rng)
    dt = time.perf_counter_ns() - t0
    return [
        ("syndrome", size, "MPP_round1", round1, dt),
        ("syndrome", size, "MPP_round2", round2, 0),
        ("syndrome", size, "ancilla_MX_round2", readout, 0),
    ]


def _random_rows(size: int, seed: int) -> List[Row]:
    rnd = random.Random(seed)
    s = new_basis_state([0] * size)
    m = _Meter(s)
    rng = RngStream(seed)
    one = ["X", "Y", "Z", "H", "S"]
    two = ["CZ", "CX", "CY"] if size > 1 else []
    meas = ["MZ", "MX", "MY"]
    for _ in range(10 * size):
        op = rnd.choice(one + two + meas)
        if op in two:
            a, b = rnd.sample(range(size), 2)
            m(op, GATES[op], s, a, b)
        elif op in meas:
            m(op, measure, s, rnd.randrange(size), op[1], rng)
        else:
            m(op, GATES[op], s, rnd.randrange(size))
    return m.rows("random", size)


SUITES = {
    "ghz": _ghz_rows,
    "syndrome": _syndrome_rows,
    "random": _random_rows,
}


def run_suite(name: str, sizes: Sequence[int], seed: int = 0) -> Iterator[Row]:
    if name not in SUITES:
        raise KeyError(f"unknown suite {name!r}; choose from {', '.join(SUITES)}")
    for size in sizes:
        yield from SUITES[name](size, seed)
