"""Maintenance moves on a QfeState.

Each move is either a change of summation variables (amplitudes unchanged),
a reduction of Q by an even matrix (amplitudes unchanged), or fixing the last
summation variable to a constant (``fix_final_bit``). They keep A in principal
row form given the stated preconditions. Column indices are 0-based.
"""

from __future__ import annotations

from typing import Optional

from .qfe_core import QfeState

__all__ = [
    "NonNormalisedError",
    "reduce_gram_row_col",
    "reindex_subt_column",
    "reindex_swap_columns",
    "make_principal",
    "reselect_principal_row",
    "fix_final_bit",
    "zero_column_elim",
    "set_principal",
    "drop_last_column",
]


class NonNormalisedError(ValueError):
    """Raised when column elimination meets a sum that is not normalised."""


def set_principal(s: QfeState, c: int, j: int) -> None:
    old = s.p[c]
    if s.owner[old] == c:
        s.owner[old] = -1
    s.p[c] = j
    s.owner[j] = c


def drop_last_column(s: QfeState) -> None:
    """Remove the last column of A and the last row/column of Q."""
    last = s.r - 1
    j = s.p.pop()
    if s.owner[j] == last:
        s.owner[j] = -1
    s.A.remove_col(last)
    s.Q.remove_dim(last)


def reduce_gram_row_col(s: QfeState, c: int) -> None:
    """Reduce Q[c,c] mod 4 and the off-diagonals of row/column c mod 2."""
    s.Q.reduce_line(c)


def reindex_subt_column(s: QfeState, k: int, c: int) -> None:
    """Substitute x_c -> x_c - x_k: column c of A is added into column k."""
    if k == c:
        return
    Q = s.Q
    s.A.xor_col_into(c, k)
    # congruence by E = I - e_c e_k^T, column update first then row update
    dc = Q.diag[c]
    vkc = 0
    hk = None
    for cell in Q.offdiag_cells(c):
        h = cell.col
        if h == k:
            vkc = cell.val
            continue
        hk, _ = Q.add_sym(k, h, -cell.val, hk, cell.twin)
    if dc:
        Q.add_sym(k, c, -dc)
    Q.diag[k] += dc - 2 * vkc
    reduce_gram_row_col(s, k)


def reindex_swap_columns(s: QfeState, k: int, c: int) -> None:
    """Exchange summation variables x_k and x_c."""
    if k == c:
        return
    s.A.swap_cols(c, k)
    s.Q.swap_dims(c, k)
    pc, pk = s.p[c], s.p[k]
    own_c = s.owner[pc] == c
    own_k = s.owner[pk] == k
    s.p[c], s.p[k] = pk, pc
    if own_c:
        s.owner[pc] = k
    if own_k:
        s.owner[pk] = c
    s.counter.touches += 1


def make_principal(s: QfeState, c: int, j: int) -> None:
    """Clear row j outside column c by column moves, then set p[c] = j."""
    if s.A.get(j, c) == 0:
        return
    for k in s.A.row_cols(j):
        if k != c:
            reindex_subt_column(s, k, c)
    set_principal(s, c, j)


def reselect_principal_row(s: QfeState, j: Optional[int], c: int) -> None:
    """Move the principal row of column c to the sparsest other row.

    ``j`` is the row to exclude, or None to consider every row. Ties go to
    the smallest row index.
    """
    best = -1
    best_count = 0
    A = s.A
    for h in A.col_rows(c):
        if h == j:
            continue
        cnt = A.row_count(h)
        if best < 0 or cnt < best_count:
            best, best_count = h, cnt
    if best >= 0:
        make_principal(s, c, best)


def fix_final_bit(s: QfeState, z: int) -> None:
    """Set the last summation variable to z and drop it.

    The result is the normalised post-selected state; the factor 1/sqrt(2)
    lost by halving the sum is left to the caller.
    """
    r = s.r
    if r == 0:
        raise ValueError("fix_final_bit needs r >= 1")
    last = r - 1
    a = s.A.col_rows(last)
    q = s.Q.offdiag(last)
    u = s.Q.diag[last]
    drop_last_column(s)
    if z:
        for j in a:
            s.b[j] ^= 1
        for h, v in q:
            s.Q.diag[h] = (s.Q.diag[h] + 2 * v) % 4
        s.g = (s.g + 2 * u) % 8
    s.counter.touches += 1


def zero_column_elim(s: QfeState, c: int) -> None:
    """Remove the all-zero column c of A, restoring principal row form.

    Raises ``NonNormalisedError`` without touching the state when the
    variable of column c has even diagonal and no off-diagonal coupling.
    """
    Q = s.Q
    if Q.diag[c] % 2 == 0 and not any(v % 2 for _, v in Q.offdiag(c)):
        raise NonNormalisedError(
            f"column {c} is zero and uncoupled with even diagonal; "
            "the sum is not a normalised state")
    last = s.r - 1
    reindex_swap_columns(s, c, last)
    q = [h for h, v in Q.offdiag(last) if v % 2]
    u = Q.diag[last] % 4
    drop_last_column(s)
    if u % 2:
        coef = u - 2
        hints = {}
        for i, h in enumerate(q):
            hh = None
            for h2 in q[i + 1:]:
                hh, hints[h2] = Q.add_sym(h, h2, coef, hh, hints.get(h2))
            Q.diag[h] += coef
        for h in q:
            reduce_gram_row_col(s, h)
        s.g = (s.g - u + 2) % 8
        return
    ell = q[0]
    for k in q[1:]:
        reindex_subt_column(s, k, ell)
    reindex_swap_columns(s, s.r - 1, ell)
    fix_final_bit(s, u // 2)
