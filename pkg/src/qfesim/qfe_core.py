"""Quadratic form expansion of a stabiliser state.

A state on ``n`` qubits is stored as

    tau**g / sqrt(2**r) * sum_{x in {0,1}^r} i**(x^T Q x) |A x + b>

with ``tau = exp(i pi / 4)``, ``A`` an n-by-r GF(2) matrix, ``Q`` a symmetric
r-by-r integer matrix (diagonal mod 4, off-diagonal mod 2) and ``b`` a bit
vector. ``A`` is kept in principal row form: each column ``c`` owns a row
``p[c]`` of ``A`` that equals the unit row vector ``e_c``.
"""

from __future__ import annotations

from dataclasses import dataclass
from typing import List, Optional, Sequence

import numpy as np

from .sparse_gf2 import SparseBinaryMatrix, SparseGramMatrix, TouchCounter

__all__ = [
    "QfeState",
    "TouchCounter",
    "Violation",
    "InvariantError",
    "ExpansionCapError",
    "new_basis_state",
    "state_from_dense",
    "validate",
    "check_state",
    "expand_amplitudes",
    "clone_state",
    "dump_state",
    "TAU",
    "EXPANSION_CAP",
]

TAU = complex(1.0, 1.0) / np.sqrt(2.0)
EXPANSION_CAP = 22


class QfeState:
    """Mutable stabiliser state in quadratic form expansion.

    ``p[c]`` is the principal row of column ``c``; ``owner[j]`` is the column
    whose principal row is ``j`` or -1. Between public operations ``owner`` is
    the exact inverse of ``p``.
    """

    __slots__ = ("n", "g", "A", "Q", "b", "p", "owner", "counter")

    def __init__(self, n: int, counter: Optional[TouchCounter] = None) -> None:
        if n < 1:
            raise ValueError("a state needs at least one qubit")
        self.n = n
        self.g = 0
        self.counter = counter if counter is not None else TouchCounter()
        self.A = SparseBinaryMatrix(n, 0, self.counter)
        self.Q = SparseGramMatrix(0, self.counter)
        self.b: List[int] = [0] * n
        self.p: List[int] = []
        self.owner: List[int] = [-1] * n

    @property
    def r(self) -> int:
        return self.A.n_cols

    @property
    def touches(self) -> int:
        return self.counter.touches

    def principal_col(self, j: int) -> Optional[int]:
        c = self.owner[j]
        return None if c < 0 else c

    def __repr__(self) -> str:
        return f"QfeState(n={self.n}, r={self.r}, g={self.g})"


@dataclass(frozen=True)
class Violation:
    """First invariant violation found by ``validate``."""

    kind: str
    detail: str

    def __str__(self) -> str:
        return f"{self.kind}: {self.detail}"


class InvariantError(AssertionError):
    pass


class ExpansionCapError(ValueError):
    pass


def new_basis_state(bits: Sequence[int], counter: Optional[TouchCounter] = None) -> QfeState:
    """The computational basis state |bits>, bit ``j`` on qubit ``j``."""
    bits = [int(v) for v in bits]
    if not bits:
        raise ValueError("a state needs at least one qubit")
    if any(v not in (0, 1) for v in bits):
        raise ValueError("basis bits must be 0 or 1")
    s = QfeState(len(bits), counter)
    s.b = bits
    return s


def state_from_dense(A, Q, b, g: int = 0, p: Optional[Sequence[int]] = None,
                     counter: Optional[TouchCounter] = None) -> QfeState:
    """Build a state from dense parts; ``p`` is inferred when omitted.

    No validation happens here, so malformed states can be built on purpose.
    """
    A = np.asarray(A, dtype=np.int64).reshape(len(b), -1) % 2
    s = QfeState(len(b), counter)
    s.A = SparseBinaryMatrix.from_dense(A, s.counter)
    s.Q = SparseGramMatrix.from_dense(np.asarray(Q, dtype=np.int64).reshape(A.shape[1], A.shape[1]),
                                      s.counter)
    s.b = [int(v) % 2 for v in b]
    s.g = int(g) % 8
    if p is None:
        p = []
        for c in range(A.shape[1]):
            rows = [j for j in range(A.shape[0]) if A[j, c] and A[j].sum() == 1]
            p.append(rows[0] if rows else 0)
    s.p = [int(v) for v in p]
    for c, j in enumerate(s.p):
        s.owner[j] = c
    return s


def _gf2_rank(rows: List[int]) -> int:
    rank = 0
    rows = [r for r in rows if r]
    while rows:
        pivot = rows.pop()
        low = pivot & -pivot
        rank += 1
        rows = [r ^ pivot if r & low else r for r in rows]
        rows = [r for r in rows if r]
    return rank


def validate(s: QfeState) -> Optional[Violation]:
    """Return the first broken invariant of ``s``, or None when all hold."""
    n, r = s.n, s.r
    if s.A.n_rows != n:
        return Violation("shape", f"A has {s.A.n_rows} rows, expected {n}")
    if s.Q.dim != r:
        return Violation("shape", f"Q has dim {s.Q.dim}, A has {r} columns")
    if len(s.p) != r:
        return Violation("principal map", f"p has length {len(s.p)}, expected {r}")
    if len(s.b) != n or any(v not in (0, 1) for v in s.b):
        return Violation("b", "b must be a bit vector of length n")
    if not (isinstance(s.g, int) and 0 <= s.g < 8):
        return Violation("phase", f"g={s.g} outside 0..7")
    msg = s.A.check_chains()
    if msg:
        return Violation("A chains", msg)
    msg = s.Q.check_chains()
    if msg:
        return Violation("Q chains", msg)
    seen = set()
    for c, j in enumerate(s.p):
        if not 0 <= j < n:
            return Violation("principal map", f"p[{c}]={j} out of range")
        if j in seen:
            return Violation("principal map", f"row {j} is principal twice")
        seen.add(j)
        if s.A.row_count(j) != 1 or s.A.row_head(j) != c:
            return Violation("principal row not unit", f"row {j} (column {c})")
    for j in range(n):
        c = s.owner[j]
        if c >= 0 and (c >= r or s.p[c] != j):
            return Violation("principal map", f"owner[{j}]={c} disagrees with p")
        if c < 0 and j in seen:
            return Violation("principal map", f"owner[{j}] missing")
    for c in range(r):
        if s.A.col_count(c) == 0:
            return Violation("zero column", f"column {c}")
    rows = []
    for j in range(n):
        m = 0
        for k in s.A.row_cols(j):
            m |= 1 << k
        rows.append(m)
    if _gf2_rank(rows) != r:
        return Violation("rank", f"rank(A) != r={r}")
    for j in range(r):
        if not 0 <= s.Q.diag[j] < 4:
            return Violation("Q range", f"diagonal ({j},{j})={s.Q.diag[j]}")
    for j, k, v in s.Q.nonzeros():
        if j != k and v != 1:
            return Violation("Q range", f"off-diagonal ({j},{k})={v}")
    return None


def check_state(s: QfeState, norm: bool = False) -> None:
    """Raise ``InvariantError`` if ``s`` violates an invariant."""
    v = validate(s)
    if v is not None:
        raise InvariantError(str(v))
    if norm:
        amp = expand_amplitudes(s)
        err = abs(np.vdot(amp, amp).real - 1.0)
        if err > 1e-12:
            raise InvariantError(f"norm deviates from 1 by {err:g}")


_X_TABLES: dict = {}


def _assignments(r: int) -> np.ndarray:
    tab = _X_TABLES.get(r)
    if tab is None:
        idx = np.arange(1 << r, dtype=np.int64)
        tab = ((idx[:, None] >> np.arange(r)) & 1).astype(np.int64)
        _X_TABLES[r] = tab
    return tab


def expand_amplitudes(s: QfeState, cap: int = EXPANSION_CAP) -> np.ndarray:
    """Dense amplitude vector; basis index bit ``j`` is qubit ``j``."""
    r = s.r
    if r > cap:
        raise ExpansionCapError(f"expansion needs r={r}, cap is {cap}")
    if s.n > 62:
        raise ExpansionCapError(f"n={s.n} too large for a dense vector")
    base = 0
    for j, v in enumerate(s.b):
        base |= v << j
    amp = np.zeros(1 << s.n, dtype=complex)
    scale = TAU ** s.g / np.sqrt(2.0 ** r)
    if r == 0:
        amp[base] = scale
        return amp
    x = _assignments(r)
    col_masks = np.zeros(r, dtype=np.int64)
    for j, k in s.A.nonzeros():
        col_masks[k] |= 1 << j
    idx = np.zeros(len(x), dtype=np.int64)
    for k in range(r):
        idx ^= x[:, k] * col_masks[k]
    idx ^= base
    Q = s.Q.to_dense()
    expo = np.einsum("ij,jk,ik->i", x, Q, x) % 4
    np.add.at(amp, idx, scale * (1j ** expo))
    return amp


def clone_state(s: QfeState, counter: Optional[TouchCounter] = None) -> QfeState:
    """Independent deep copy; the copy gets its own counter by default."""
    t = QfeState.__new__(QfeState)
    t.n = s.n
    t.g = s.g
    t.counter = counter if counter is not None else TouchCounter()
    t.A = s.A.copy(t.counter)
    t.Q = s.Q.copy(t.counter)
    t.b = list(s.b)
    t.p = list(s.p)
    t.owner = list(s.owner)
    return t


def dump_state(s: QfeState) -> str:
    """Line-oriented text listing used for golden comparisons."""
    lines = [
        f"n {s.n}",
        f"r {s.r}",
        f"g {s.g}",
        "b " + "".join(str(v) for v in s.b),
        "A " + " ".join(f"({j},{k})" for j, k in s.A.nonzeros()),
        "Q " + " ".join(f"({j},{k},{v})" for j, k, v in s.Q.nonzeros()),
        "p " + " ".join(str(j) for j in s.p),
    ]
    return "\n".join(line.rstrip() for line in lines) + "\n"
