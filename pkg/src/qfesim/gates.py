"""Clifford gates acting in place on a QfeState."""

from __future__ import annotations

from typing import List

from .qfe_core import QfeState
from .transforms import (
    reduce_gram_row_col,
    reselect_principal_row,
    zero_column_elim,
)

__all__ = [
    "apply_x",
    "apply_y",
    "apply_z",
    "apply_s",
    "apply_sdg",
    "apply_h",
    "apply_cz",
    "apply_cx",
    "apply_cy",
    "apply_gate",
    "GATES",
]


def _check_qubit(s: QfeState, j: int) -> None:
    if not 0 <= j < s.n:
        raise IndexError(f"qubit {j} out of range for n={s.n}")


def _check_pair(s: QfeState, h: int, j: int) -> None:
    _check_qubit(s, h)
    _check_qubit(s, j)
    if h == j:
        raise ValueError("identical control and target")


def apply_x(s: QfeState, j: int) -> None:
    _check_qubit(s, j)
    s.b[j] ^= 1
    s.counter.touches += 1


def apply_z(s: QfeState, j: int) -> None:
    _check_qubit(s, j)
    s.g = (s.g + 4 * s.b[j]) % 8
    diag = s.Q.diag
    for k in s.A.row_cols(j):
        diag[k] = (diag[k] + 2) % 4
    s.counter.touches += 1


def apply_y(s: QfeState, j: int) -> None:
    s.g = (s.g + 2) % 8
    apply_z(s, j)
    apply_x(s, j)


def _add_outer(s: QfeState, left: List[int], right: List[int], coef: int) -> None:
    """Q += coef * (u v^T + v u^T) for 0/1 vectors with supports left/right."""
    Q = s.Q
    right_set = set(right)
    for h in left:
        if h in right_set:
            Q.diag[h] += 2 * coef
    pairs = {}
    for h in left:
        for k in right:
            if h != k:
                key = (h, k) if h < k else (k, h)
                pairs[key] = pairs.get(key, 0) + coef
    hints = {}
    for (h, k), v in sorted(pairs.items()):
        if v:
            hints[h], hints[k] = Q.add_sym(h, k, v, hints.get(h), hints.get(k))


def apply_s(s: QfeState, j: int) -> None:
    _check_qubit(s, j)
    a = s.A.row_cols(j)
    coef = 1 - 2 * s.b[j]
    Q = s.Q
    hints = {}
    for i, h in enumerate(a):
        Q.diag[h] += coef
        hh = None
        for k in a[i + 1:]:
            hh, hints[k] = Q.add_sym(h, k, coef, hh, hints.get(k))
    for h in a:
        reduce_gram_row_col(s, h)
    s.g = (s.g + 2 * s.b[j]) % 8
    s.counter.touches += 1


def apply_sdg(s: QfeState, j: int) -> None:
    for _ in range(3):
        apply_s(s, j)


def apply_cz(s: QfeState, j: int, k: int) -> None:
    _check_pair(s, j, k)
    aj = s.A.row_cols(j)
    ak = s.A.row_cols(k)
    _add_outer(s, aj, ak, 1)
    diag = s.Q.diag
    if s.b[k]:
        for h in aj:
            diag[h] += 2
    if s.b[j]:
        for h in ak:
            diag[h] += 2
    for h in sorted(set(aj) | set(ak)):
        reduce_gram_row_col(s, h)
    s.g = (s.g + 4 * s.b[j] * s.b[k]) % 8
    s.counter.touches += 1


def apply_cx(s: QfeState, h: int, j: int) -> None:
    _check_pair(s, h, j)
    c = s.owner[j]
    s.A.xor_row_into(h, j)
    s.b[j] ^= s.b[h]
    s.counter.touches += 1
    if c >= 0:
        reselect_principal_row(s, None, c)


def apply_h(s: QfeState, j: int) -> None:
    _check_qubit(s, j)
    A, Q = s.A, s.Q
    c = s.owner[j]
    if c >= 0:
        reselect_principal_row(s, j, c)
        if s.p[c] != j:
            c = -1
    row = A.clear_row(j)
    new = A.append_col()
    A.set(j, new, 1)
    s.p.append(j)
    s.owner[j] = new
    Q.append_dim()
    hint = None
    for h in row:
        hint, _ = Q.add_sym(new, h, 1, hint)
    Q.diag[new] = 2 * s.b[j]
    s.b[j] = 0
    s.counter.touches += 1
    if c >= 0:
        zero_column_elim(s, c)


def apply_cy(s: QfeState, h: int, j: int) -> None:
    _check_pair(s, h, j)
    apply_cz(s, h, j)
    apply_cx(s, h, j)
    apply_s(s, h)


GATES = {
    "X": apply_x,
    "Y": apply_y,
    "Z": apply_z,
    "H": apply_h,
    "S": apply_s,
    "SDG": apply_sdg,
    "CZ": apply_cz,
    "CX": apply_cx,
    "CY": apply_cy,
}


def apply_gate(s: QfeState, name: str, *qubits: int) -> None:
    GATES[name.upper()](s, *qubits)
