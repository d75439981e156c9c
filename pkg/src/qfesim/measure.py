"""Single-qubit Pauli measurements.

A random outcome leaves the state normalised, i.e. the post-state is
sqrt(2) times the projection of the pre-state. Deterministic outcomes are
detected in O(1) and leave the state untouched.
"""

from __future__ import annotations

import random
from typing import Optional

import numpy as np

from .qfe_core import QfeState
from .transforms import (
    fix_final_bit,
    make_principal,
    reduce_gram_row_col,
    reindex_swap_columns,
    reselect_principal_row,
    zero_column_elim,
)

__all__ = [
    "RngStream",
    "ForcedBits",
    "measure_z",
    "measure_x",
    "measure_y",
    "measure",
    "peek_deterministic",
]


class RngStream:
    """Reproducible bit source seeded with a 64-bit integer.

    ``RngStream(seed, stream)`` derives an independent stream, e.g. one per
    shot, from a master seed.
    """

    def __init__(self, seed: int = 0, stream: Optional[int] = None) -> None:
        if stream is None:
            key = int(seed) & 0xFFFFFFFFFFFFFFFF
        else:
            ss = np.random.SeedSequence(int(seed) & 0xFFFFFFFFFFFFFFFF,
                                        spawn_key=(int(stream),))
            key = int(ss.generate_state(1, dtype=np.uint64)[0])
        self.seed = key
        self._rand = random.Random(key)
        self.drawn = 0

    def bit(self) -> int:
        self.drawn += 1
        return self._rand.getrandbits(1)


class ForcedBits:
    """Bit source replaying a fixed sequence; for tests and forks."""

    def __init__(self, bits) -> None:
        self._bits = list(bits)
        self.drawn = 0

    def bit(self) -> int:
        v = self._bits[self.drawn % len(self._bits)]
        self.drawn += 1
        return v


def _check_qubit(s: QfeState, j: int) -> None:
    if not 0 <= j < s.n:
        raise IndexError(f"qubit {j} out of range for n={s.n}")


def measure_z(s: QfeState, j: int, rng) -> int:
    _check_qubit(s, j)
    A = s.A
    s.counter.touches += 1
    if A.row_count(j) == 0:
        return s.b[j]
    beta = rng.bit()
    best, best_count = -1, 0
    for k in A.row_cols(j):
        cnt = A.col_count(k)
        if best < 0 or cnt < best_count:
            best, best_count = k, cnt
    last = s.r - 1
    reindex_swap_columns(s, best, last)
    make_principal(s, last, j)
    fix_final_bit(s, beta ^ s.b[j])
    return beta


def _lone_column(s: QfeState, j: int) -> int:
    """Principal column of row j after reselection, or -1."""
    c = s.owner[j]
    if c >= 0:
        reselect_principal_row(s, j, c)
        if s.p[c] != j:
            return -1
    return c


def _open_new_column(s: QfeState, j: int):
    """Replace row j of A by a fresh variable; return (new column, old row)."""
    A = s.A
    row = A.clear_row(j)
    new = A.append_col()
    A.set(j, new, 1)
    s.p.append(j)
    s.owner[j] = new
    s.Q.append_dim()
    return new, row


def measure_x(s: QfeState, j: int, rng) -> int:
    _check_qubit(s, j)
    Q = s.Q
    s.counter.touches += 1
    c = _lone_column(s, j)
    if c >= 0 and Q.offdiag_count(c) == 0:
        q = Q.diag[c]
        if q % 2 == 0:
            return q // 2
        beta = rng.bit()
        s.g = (s.g + 2 - (q + 2 * beta) % 4) % 8
        Q.diag[c] = 2 * beta
        return beta
    beta = rng.bit()
    s.g = (s.g + 4 * beta * s.b[j]) % 8
    new, row = _open_new_column(s, j)
    if beta:
        for h in row:
            Q.diag[h] = (Q.diag[h] + 2) % 4
        Q.diag[new] = 2
    s.b[j] = 0
    if c >= 0:
        zero_column_elim(s, c)
    return beta


def measure_y(s: QfeState, j: int, rng) -> int:
    _check_qubit(s, j)
    Q = s.Q
    s.counter.touches += 1
    c = _lone_column(s, j)
    if c >= 0 and Q.offdiag_count(c) == 0:
        q = Q.diag[c]
        bj = s.b[j]
        if q % 2 == 1:
            return (q // 2) ^ bj
        beta = rng.bit()
        if bj:
            s.g = (s.g - 4 * beta - (q + 1 + 2 * beta) % 4) % 8
        else:
            s.g = (s.g + 2 - (q - 1 - 2 * beta) % 4) % 8
        s.b[j] = 0
        Q.diag[c] = 2 * beta + 1
        return beta
    beta = rng.bit()
    bj = s.b[j]
    s.g = (s.g - (4 * beta + 2) * bj) % 8
    new, row = _open_new_column(s, j)
    coef = 2 * bj + 2 * beta - 1
    hints = {}
    for i, h in enumerate(row):
        Q.diag[h] += coef
        hh = None
        for k in row[i + 1:]:
            hh, hints[k] = Q.add_sym(h, k, coef, hh, hints.get(k))
    Q.diag[new] = 2 * beta + 1
    for h in row:
        reduce_gram_row_col(s, h)
    reduce_gram_row_col(s, new)
    s.b[j] = 0
    if c >= 0:
        zero_column_elim(s, c)
    return beta


def measure(s: QfeState, j: int, basis: str, rng) -> int:
    basis = basis.upper()
    if basis == "Z":
        return measure_z(s, j, rng)
    if basis == "X":
        return measure_x(s, j, rng)
    if basis == "Y":
        return measure_y(s, j, rng)
    raise ValueError(f"unknown basis {basis!r}")


def peek_deterministic(s: QfeState, j: int, basis: str) -> Optional[int]:
    """Forced outcome of measuring qubit j in ``basis``, or None if random."""
    _check_qubit(s, j)
    basis = basis.upper()
    s.counter.touches += 1
    if basis == "Z":
        return s.b[j] if s.A.row_count(j) == 0 else None
    if basis not in ("X", "Y"):
        raise ValueError(f"unknown basis {basis!r}")
    c = s.owner[j]
    if c < 0 or s.A.col_count(c) != 1 or s.Q.offdiag_count(c) != 0:
        return None
    q = s.Q.diag[c]
    if basis == "X":
        return q // 2 if q % 2 == 0 else None
    return (q // 2) ^ s.b[j] if q % 2 == 1 else None
