"""Multi-qubit Pauli measurements through an ancilla phase kick.

The ancilla is prepared in |+>, controls each Pauli factor, and is then read
out in the X basis: outcome 0 means eigenvalue +1. Afterwards the ancilla is
returned to the basis state it held before.
"""

from __future__ import annotations

import re
from dataclasses import dataclass
from typing import Iterable, Optional, Tuple

from .gates import apply_cx, apply_cy, apply_cz, apply_h, apply_x
from .measure import ForcedBits, measure_x
from .qfe_core import QfeState, clone_state

__all__ = ["PauliString", "measure_pauli", "is_deterministic_pauli", "phase_kick"]

_TERM = re.compile(r"^([XYZ])(\d+)$")


@dataclass(frozen=True)
class PauliString:
    """Tensor product of X/Y/Z factors on distinct qubits."""

    terms: Tuple[Tuple[int, str], ...]

    def __init__(self, terms: Iterable[Tuple[int, str]]) -> None:
        terms = tuple((int(q), str(p).upper()) for q, p in terms)
        if not terms:
            raise ValueError("a Pauli string needs at least one factor")
        qubits = [q for q, _ in terms]
        if len(set(qubits)) != len(qubits):
            raise ValueError("Pauli factors must act on distinct qubits")
        for q, p in terms:
            if p not in ("X", "Y", "Z"):
                raise ValueError(f"unknown Pauli letter {p!r}")
            if q < 0:
                raise ValueError(f"negative qubit index {q}")
        object.__setattr__(self, "terms", terms)

    @classmethod
    def parse(cls, text: str) -> "PauliString":
        """Parse ``"X0 Y1 Z2"``."""
        terms = []
        for tok in text.split():
            m = _TERM.match(tok.upper())
            if not m:
                raise ValueError(f"bad Pauli factor {tok!r}")
            terms.append((int(m.group(2)), m.group(1)))
        return cls(terms)

    @property
    def support(self) -> Tuple[int, ...]:
        return tuple(q for q, _ in self.terms)

    def __len__(self) -> int:
        return len(self.terms)

    def __str__(self) -> str:
        return " ".join(f"{p}{q}" for q, p in self.terms)


_CONTROLLED = {"X": apply_cx, "Y": apply_cy, "Z": apply_cz}


def _check(s: QfeState, pauli: PauliString, ancilla: int) -> None:
    if not 0 <= ancilla < s.n:
        raise IndexError(f"ancilla {ancilla} out of range for n={s.n}")
    for q in pauli.support:
        if q >= s.n:
            raise IndexError(f"qubit {q} out of range for n={s.n}")
    if ancilla in pauli.support:
        raise ValueError(f"ancilla {ancilla} lies in the Pauli support")
    if s.A.row_count(ancilla) != 0:
        raise ValueError(f"ancilla {ancilla} is not in a basis state")


def phase_kick(s: QfeState, pauli: PauliString, ancilla: int) -> int:
    """Prepare the ancilla in |+> and apply the controlled factors.

    Returns the basis value the ancilla held beforehand.
    """
    prior = s.b[ancilla]
    if prior:
        apply_x(s, ancilla)
    apply_h(s, ancilla)
    for q, p in pauli.terms:
        _CONTROLLED[p](s, ancilla, q)
    return prior


def measure_pauli(s: QfeState, pauli: PauliString, ancilla: int, rng) -> int:
    """Measure ``pauli`` using ``ancilla``; returns 0 for eigenvalue +1."""
    _check(s, pauli, ancilla)
    prior = phase_kick(s, pauli, ancilla)
    beta = measure_x(s, ancilla, rng)
    # the ancilla is now |+> or |->; map it back to |prior>
    apply_h(s, ancilla)
    if beta != prior:
        apply_x(s, ancilla)
    return beta


def is_deterministic_pauli(s: QfeState, pauli: PauliString, ancilla: int) -> Optional[int]:
    """Forced outcome of ``measure_pauli``, or None; ``s`` is not modified."""
    _check(s, pauli, ancilla)
    outcomes = [measure_pauli(clone_state(s), pauli, ancilla, ForcedBits([bit]))
                for bit in (0, 1)]
    return outcomes[0] if outcomes[0] == outcomes[1] else None
