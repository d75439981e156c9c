"""Terminal Z-basis measurements of many qubits at once.

Strong queries solve ``A' x = beta + b'`` over GF(2) for the rows ``A'`` of
the measured qubits: an outcome string has probability 0 when the system is
inconsistent and ``2**-rank(A')`` otherwise, since distinct x give distinct
basis states.
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from typing import Dict, List, Sequence

from .measure import measure_z
from .qfe_core import QfeState
from .transforms import fix_final_bit, reindex_swap_columns

__all__ = [
    "DyadicProbability",
    "strong_prob_z",
    "strong_prob_all_but",
    "weak_measure_all_but",
]


@dataclass(frozen=True)
class DyadicProbability:
    """Exact probability ``mantissa / 2**exponent`` with mantissa 0 or 1."""

    mantissa: int
    exponent: int

    @property
    def value(self) -> float:
        return self.mantissa / float(1 << self.exponent)

    def __float__(self) -> float:
        return self.value

    def as_fraction(self) -> Fraction:
        return Fraction(self.mantissa, 1 << self.exponent)

    def __str__(self) -> str:
        if self.mantissa == 0:
            return "0"
        if self.exponent == 0:
            return "1"
        return f"1/{1 << self.exponent}"


def _check_indices(s: QfeState, qubits: Sequence[int]) -> None:
    if len(set(qubits)) != len(qubits):
        raise ValueError("duplicate qubit indices")
    for q in qubits:
        if not 0 <= q < s.n:
            raise IndexError(f"qubit {q} out of range for n={s.n}")


def strong_prob_z(s: QfeState, qubits: Sequence[int], beta: Sequence[int]) -> DyadicProbability:
    """Probability that measuring ``qubits`` in Z gives ``beta``; read-only."""
    qubits = [int(q) for q in qubits]
    beta = [int(v) for v in beta]
    if len(qubits) != len(beta):
        raise ValueError("qubits and beta differ in length")
    _check_indices(s, qubits)
    A = s.A
    # principal rows are unit vectors and pivot at once
    unit: Dict[int, int] = {}
    rest: List[List[int]] = []
    for q, v in zip(qubits, beta):
        rhs = v ^ s.b[q]
        c = s.owner[q]
        if c >= 0:
            unit[c] = rhs
            s.counter.touches += 1
            continue
        mask = 0
        for k in A.row_cols(q):
            mask |= 1 << k
        rest.append([mask, rhs])
    rank = len(unit)
    for item in rest:
        mask = item[0]
        while mask:
            low = mask & -mask
            c = low.bit_length() - 1
            if c in unit:
                item[0] ^= low
                item[1] ^= unit[c]
            mask ^= low
            s.counter.touches += 1
    # remaining rows: fewest nonzeros first as pivots
    rest.sort(key=lambda it: (bin(it[0]).count("1"), it[0]))
    pivots: List[List[int]] = []
    for item in rest:
        mask, rhs = item
        for pm, prhs, plow in pivots:
            if mask & plow:
                mask ^= pm
                rhs ^= prhs
            s.counter.touches += 1
        if mask == 0:
            if rhs:
                return DyadicProbability(0, 0)
            continue
        low = mask & -mask
        # keep pivots fully reduced so the single-pass test above is exact
        for pv in pivots:
            if pv[0] & low:
                pv[0] ^= mask
                pv[1] ^= rhs
        pivots.append([mask, rhs, low])
        rank += 1
    return DyadicProbability(1, rank)


def strong_prob_all_but(s: QfeState, unmeasured: Sequence[int],
                        beta: Sequence[int]) -> DyadicProbability:
    """``strong_prob_z`` on every qubit outside ``unmeasured`` (ascending)."""
    skip = set(int(q) for q in unmeasured)
    _check_indices(s, list(unmeasured))
    measured = [q for q in range(s.n) if q not in skip]
    return strong_prob_z(s, measured, beta)


def weak_measure_all_but(s: QfeState, unmeasured: Sequence[int], rng) -> List[int]:
    """Measure every qubit outside ``unmeasured`` in Z, collapsing ``s``.

    Outcomes are returned in ascending qubit order.
    """
    _check_indices(s, list(unmeasured))
    skip = set(int(q) for q in unmeasured)
    measured = [q for q in range(s.n) if q not in skip]
    out: Dict[int, int] = {}
    for q in measured:
        c = s.owner[q]
        if c < 0:
            continue
        beta = rng.bit()
        reindex_swap_columns(s, c, s.r - 1)
        fix_final_bit(s, beta ^ s.b[q])
        out[q] = beta
    for q in measured:
        if q not in out:
            out[q] = measure_z(s, q, rng)
    return [out[q] for q in measured]
