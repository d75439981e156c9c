"""Dense state-vector reference simulator.

Basis index bit ``j`` is qubit ``j`` (qubit 0 least significant). Gates are
multiplied in as their literal matrices; nothing here shares code with the
quadratic form expansion.
"""

from __future__ import annotations

from typing import Sequence

import numpy as np

from .circuit_io import Circuit, execute
from .measure import RngStream
from .qfe_core import QfeState, expand_amplitudes, new_basis_state

__all__ = [
    "DenseState",
    "OracleError",
    "GATE_MATRICES",
    "ORACLE_CAP",
    "dense_apply",
    "dense_measure_forced",
    "dense_prob_z",
    "dense_pauli_measure_forced",
    "dense_pauli_expectation",
    "compare",
    "co_simulate",
]

ORACLE_CAP = 14
_R2 = np.sqrt(0.5)

I2 = np.eye(2, dtype=complex)
X = np.array([[0, 1], [1, 0]], dtype=complex)
Y = np.array([[0, -1j], [1j, 0]], dtype=complex)
Z = np.array([[1, 0], [0, -1]], dtype=complex)
H = _R2 * np.array([[1, 1], [1, -1]], dtype=complex)
S = np.array([[1, 0], [0, 1j]], dtype=complex)
SDG = S.conj().T


def _controlled(u: np.ndarray) -> np.ndarray:
    # two-qubit matrix on (control, target), index = 2*control + target
    m = np.eye(4, dtype=complex)
    m[2:, 2:] = u
    return m


GATE_MATRICES = {
    "I": I2,
    "X": X,
    "Y": Y,
    "Z": Z,
    "H": H,
    "S": S,
    "SDG": SDG,
    "CZ": _controlled(Z),
    "CX": _controlled(X),
    "CY": _controlled(Y),
}

PAULI = {"X": X, "Y": Y, "Z": Z}

# basis eigenvectors |v_beta> with eigenvalue (-1)**beta
EIGENVECTORS = {
    "Z": (np.array([1, 0], dtype=complex), np.array([0, 1], dtype=complex)),
    "X": (_R2 * np.array([1, 1], dtype=complex), _R2 * np.array([1, -1], dtype=complex)),
    "Y": (_R2 * np.array([1, 1j], dtype=complex), _R2 * np.array([1, -1j], dtype=complex)),
}


class OracleError(RuntimeError):
    pass


class DenseState:
    """State vector of ``n`` qubits, initialised to |0...0>."""

    def __init__(self, n: int, cap: int = ORACLE_CAP) -> None:
        if not 1 <= n <= cap:
            raise OracleError(f"oracle supports 1..{cap} qubits, got {n}")
        self.n = n
        self.amplitudes = np.zeros(1 << n, dtype=complex)
        self.amplitudes[0] = 1.0

    @classmethod
    def from_bits(cls, bits: Sequence[int]) -> "DenseState":
        st = cls(len(bits))
        st.amplitudes[0] = 0.0
        st.amplitudes[sum(int(v) << j for j, v in enumerate(bits))] = 1.0
        return st

    def copy(self) -> "DenseState":
        st = DenseState.__new__(DenseState)
        st.n = self.n
        st.amplitudes = self.amplitudes.copy()
        return st

    def tensor(self) -> np.ndarray:
        # axis a holds qubit n-1-a
        return self.amplitudes.reshape((2,) * self.n)

    def norm(self) -> float:
        return float(np.vdot(self.amplitudes, self.amplitudes).real)


def _axis(st: DenseState, j: int) -> int:
    if not 0 <= j < st.n:
        raise IndexError(f"qubit {j} out of range for n={st.n}")
    return st.n - 1 - j


def _apply_1q(st: DenseState, u: np.ndarray, j: int) -> None:
    t = np.moveaxis(st.tensor(), _axis(st, j), 0)
    t = np.tensordot(u, t, axes=([1], [0]))
    st.amplitudes = np.moveaxis(t, 0, _axis(st, j)).reshape(-1).copy()


def _apply_2q(st: DenseState, u: np.ndarray, a: int, b: int) -> None:
    if a == b:
        raise ValueError("identical control and target")
    ax = (_axis(st, a), _axis(st, b))
    t = np.moveaxis(st.tensor(), ax, (0, 1))
    shape = t.shape
    t = (u @ t.reshape(4, -1)).reshape(shape)
    st.amplitudes = np.moveaxis(t, (0, 1), ax).reshape(-1).copy()


def dense_apply(st: DenseState, name: str, *qubits: int) -> None:
    """Multiply the state by gate ``name`` on ``qubits``."""
    u = GATE_MATRICES[name.upper()]
    if u.shape == (2, 2):
        (j,) = qubits
        _apply_1q(st, u, j)
    else:
        a, b = qubits
        _apply_2q(st, u, a, b)


def _classify(p: float, tol: float) -> float:
    for ref in (0.0, 0.5, 1.0):
        if abs(p - ref) <= tol:
            return ref
    raise OracleError(f"outcome probability {p:.12g} is not 0, 1/2 or 1")


def dense_measure_forced(st: DenseState, j: int, basis: str, beta: int,
                         tol: float = 1e-9) -> float:
    """Project qubit j onto eigenvalue (-1)**beta of ``basis``.

    Returns the outcome probability. For probability 1/2 the projected state
    is scaled by sqrt(2); for probability 1 the state is left alone; a
    probability-0 outcome raises ``OracleError`` and leaves the state alone.
    """
    v = EIGENVECTORS[basis.upper()][beta]
    proj = np.outer(v, v.conj())
    trial = st.copy()
    _apply_1q(trial, proj, j)
    p = _classify(trial.norm(), tol)
    if p == 0.0:
        raise OracleError(f"outcome {beta} of {basis} on qubit {j} has probability 0")
    if p == 0.5:
        st.amplitudes = trial.amplitudes * np.sqrt(2.0)
    return p


def _pauli_matrix_apply(st: DenseState, pauli) -> np.ndarray:
    t = st.copy()
    for q, letter in pauli:
        _apply_1q(t, PAULI[letter.upper()], q)
    return t.amplitudes


def dense_pauli_expectation(st: DenseState, pauli) -> float:
    """<psi| P |psi> for a list of (qubit, letter)."""
    return float(np.vdot(st.amplitudes, _pauli_matrix_apply(st, pauli)).real)


def dense_pauli_measure_forced(st: DenseState, pauli, beta: int,
                               tol: float = 1e-9) -> float:
    """Project onto the (-1)**beta eigenspace of a Pauli product."""
    pv = _pauli_matrix_apply(st, pauli)
    sign = -1.0 if beta else 1.0
    projected = 0.5 * (st.amplitudes + sign * pv)
    p = _classify(float(np.vdot(projected, projected).real), tol)
    if p == 0.0:
        raise OracleError("Pauli outcome has probability 0")
    if p == 0.5:
        st.amplitudes = projected * np.sqrt(2.0)
    return p


def dense_prob_z(st: DenseState, qubits: Sequence[int], bits: Sequence[int]) -> float:
    """Probability that Z measurements of ``qubits`` give ``bits``."""
    idx = np.arange(1 << st.n)
    mask = np.ones(len(idx), dtype=bool)
    for q, v in zip(qubits, bits):
        mask &= ((idx >> q) & 1) == v
    return float(np.sum(np.abs(st.amplitudes[mask]) ** 2))


def compare(st: DenseState, s: QfeState, tol: float = 1e-9) -> float:
    """Largest absolute amplitude difference, global phase included.

    ``tol`` is accepted for interface symmetry; callers decide pass/fail.
    """
    if st.n != s.n:
        raise ValueError(f"qubit counts differ: {st.n} vs {s.n}")
    return float(np.max(np.abs(st.amplitudes - expand_amplitudes(s))))


def co_simulate(circuit: Circuit, seed: int = 0, shot: int = 0, corrupt: bool = False) -> float:
    """Run one shot of ``circuit`` on both simulators; return max deviation.

    The expansion side draws the random outcomes and the dense side is forced
    to follow them. Amplitudes are compared after every instruction.
    ``corrupt`` perturbs the expansion's global phase once, to prove that the
    harness notices.
    """
    s = new_basis_state([0] * circuit.n)
    st = DenseState(circuit.n)
    worst = [compare(st, s)]

    def step(i, op, outcome):
        if op.name == "MPP":
            dense_pauli_measure_forced(st, op.pauli.terms, outcome)
        elif op.name in ("MZ", "MX", "MY"):
            dense_measure_forced(st, op.qubits[0], op.name[1], outcome)
        else:
            dense_apply(st, op.name, *op.qubits)
        if corrupt and i == 0:
            s.g = (s.g + 1) % 8
        worst[0] = max(worst[0], compare(st, s))

    execute(circuit, s, RngStream(seed, shot), step)
    return worst[0]
