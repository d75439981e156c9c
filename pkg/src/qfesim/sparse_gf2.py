"""Sparse matrices stored as ordered, doubly linked orthogonal chains.

Two containers live here:

* ``SparseBinaryMatrix``: a GF(2) matrix where every stored cell holds 1 and
  belongs to both a row chain and a column chain.
* ``SparseGramMatrix``: a symmetric integer matrix with a dense diagonal and
  sparse off-diagonal row chains. Each off-diagonal cell is linked to its
  mirror cell so that symmetric updates cost O(1) once a cell is located.

Chains are kept sorted by index. Locating an insertion point walks the chain,
starting from a caller supplied hint cell where one is known. Every cell
visited is charged to a shared ``TouchCounter``.
"""

from __future__ import annotations

from typing import Iterator, List, Optional, Tuple


class TouchCounter:
    """Monotone count of chain nodes visited and arithmetic updates."""

    __slots__ = ("touches",)

    def __init__(self) -> None:
        self.touches = 0

    def add(self, k: int = 1) -> None:
        self.touches += k

    def reset(self) -> None:
        self.touches = 0

    def __repr__(self) -> str:
        return f"TouchCounter({self.touches})"


class _Cell:
    __slots__ = ("row", "col", "left", "right", "up", "down")

    def __init__(self, row: int, col: int) -> None:
        self.row = row
        self.col = col
        self.left: Optional[_Cell] = None
        self.right: Optional[_Cell] = None
        self.up: Optional[_Cell] = None
        self.down: Optional[_Cell] = None


class SparseBinaryMatrix:
    """Sparse GF(2) matrix with ordered row and column chains."""

    def __init__(self, n_rows: int, n_cols: int = 0,
                 counter: Optional[TouchCounter] = None) -> None:
        self.n_rows = n_rows
        self.n_cols = n_cols
        self.counter = counter if counter is not None else TouchCounter()
        self._rh: List[Optional[_Cell]] = [None] * n_rows
        self._rt: List[Optional[_Cell]] = [None] * n_rows
        self._rc: List[int] = [0] * n_rows
        self._ch: List[Optional[_Cell]] = [None] * n_cols
        self._ct: List[Optional[_Cell]] = [None] * n_cols
        self._cc: List[int] = [0] * n_cols

    @classmethod
    def from_dense(cls, rows, counter: Optional[TouchCounter] = None) -> "SparseBinaryMatrix":
        rows = [list(r) for r in rows]
        n_cols = len(rows[0]) if rows else 0
        m = cls(len(rows), n_cols, counter)
        for j, r in enumerate(rows):
            for k, v in enumerate(r):
                if v % 2:
                    m._link(j, k, m._rt[j], m._ct[k])
        return m

    # -- chain primitives -------------------------------------------------

    def _link(self, j: int, k: int, rp: Optional[_Cell], cp: Optional[_Cell]) -> _Cell:
        cell = _Cell(j, k)
        cell.left = rp
        if rp is None:
            cell.right = self._rh[j]
            self._rh[j] = cell
        else:
            cell.right = rp.right
            rp.right = cell
        if cell.right is None:
            self._rt[j] = cell
        else:
            cell.right.left = cell
        cell.up = cp
        if cp is None:
            cell.down = self._ch[k]
            self._ch[k] = cell
        else:
            cell.down = cp.down
            cp.down = cell
        if cell.down is None:
            self._ct[k] = cell
        else:
            cell.down.up = cell
        self._rc[j] += 1
        self._cc[k] += 1
        return cell

    def _unlink(self, cell: _Cell) -> None:
        j, k = cell.row, cell.col
        if cell.left is None:
            self._rh[j] = cell.right
        else:
            cell.left.right = cell.right
        if cell.right is None:
            self._rt[j] = cell.left
        else:
            cell.right.left = cell.left
        if cell.up is None:
            self._ch[k] = cell.down
        else:
            cell.up.down = cell.down
        if cell.down is None:
            self._ct[k] = cell.up
        else:
            cell.down.up = cell.up
        self._rc[j] -= 1
        self._cc[k] -= 1

    def _seek_row(self, j: int, k: int, hint: Optional[_Cell] = None
                  ) -> Tuple[Optional[_Cell], Optional[_Cell]]:
        """Return (predecessor, match) for column ``k`` in row ``j``.

        ``hint`` must be a live cell of row ``j``; the walk starts there.
        """
        tail = self._rt[j]
        if tail is None or tail.col < k:
            return tail, None
        node = hint if hint is not None else self._rh[j]
        steps = 1
        if node.col > k:
            while node is not None and node.col > k:
                node = node.left
                steps += 1
        else:
            nxt = node.right
            while nxt is not None and nxt.col <= k:
                node = nxt
                nxt = nxt.right
                steps += 1
        self.counter.touches += steps
        if node is not None and node.col == k:
            return node.left, node
        return node, None

    def _seek_col(self, k: int, j: int, hint: Optional[_Cell] = None
                  ) -> Tuple[Optional[_Cell], Optional[_Cell]]:
        """Return (predecessor, match) for row ``j`` in column ``k``."""
        tail = self._ct[k]
        if tail is None or tail.row < j:
            return tail, None
        node = hint if hint is not None else self._ch[k]
        steps = 1
        if node.row > j:
            while node is not None and node.row > j:
                node = node.up
                steps += 1
        else:
            nxt = node.down
            while nxt is not None and nxt.row <= j:
                node = nxt
                nxt = nxt.down
                steps += 1
        self.counter.touches += steps
        if node is not None and node.row == j:
            return node.up, node
        return node, None

    def _find(self, j: int, k: int) -> Optional[_Cell]:
        if self._rc[j] <= self._cc[k]:
            return self._seek_row(j, k)[1]
        return self._seek_col(k, j)[1]

    # -- public element access --------------------------------------------

    def get(self, j: int, k: int) -> int:
        assert 0 <= j < self.n_rows and 0 <= k < self.n_cols, (j, k)
        return 1 if self._find(j, k) is not None else 0

    def set(self, j: int, k: int, v: int) -> None:
        assert 0 <= j < self.n_rows and 0 <= k < self.n_cols, (j, k)
        rp, cell = self._seek_row(j, k)
        if v % 2:
            if cell is None:
                cp, _ = self._seek_col(k, j)
                self._link(j, k, rp, cp)
        elif cell is not None:
            self._unlink(cell)

    def toggle(self, j: int, k: int) -> int:
        """Flip entry (j, k) and return its new value."""
        rp, cell = self._seek_row(j, k)
        if cell is not None:
            self._unlink(cell)
            return 0
        cp, _ = self._seek_col(k, j)
        self._link(j, k, rp, cp)
        return 1

    def iter_row(self, j: int) -> Iterator[Tuple[int, int]]:
        node = self._rh[j]
        while node is not None:
            self.counter.touches += 1
            yield node.col, 1
            node = node.right

    def iter_col(self, k: int) -> Iterator[Tuple[int, int]]:
        node = self._ch[k]
        while node is not None:
            self.counter.touches += 1
            yield node.row, 1
            node = node.down

    def row_cols(self, j: int) -> List[int]:
        """Ascending column indices of the nonzeros of row ``j``."""
        out = []
        node = self._rh[j]
        while node is not None:
            out.append(node.col)
            node = node.right
        self.counter.touches += len(out)
        return out

    def col_rows(self, k: int) -> List[int]:
        """Ascending row indices of the nonzeros of column ``k``."""
        out = []
        node = self._ch[k]
        while node is not None:
            out.append(node.row)
            node = node.down
        self.counter.touches += len(out)
        return out

    def row_count(self, j: int) -> int:
        return self._rc[j]

    def col_count(self, k: int) -> int:
        return self._cc[k]

    def row_head(self, j: int) -> Optional[int]:
        node = self._rh[j]
        return None if node is None else node.col

    def col_head(self, k: int) -> Optional[int]:
        node = self._ch[k]
        return None if node is None else node.row

    def nnz(self) -> int:
        return sum(self._rc)

    def nonzeros(self) -> List[Tuple[int, int]]:
        """All (row, col) positions in row-major order (not charged)."""
        out = []
        for j in range(self.n_rows):
            node = self._rh[j]
            while node is not None:
                out.append((j, node.col))
                node = node.right
        return out

    def nonzeros_by_col(self) -> List[Tuple[int, int]]:
        out = []
        for k in range(self.n_cols):
            node = self._ch[k]
            while node is not None:
                out.append((node.row, k))
                node = node.down
        return out

    def to_dense(self):
        import numpy as np

        out = np.zeros((self.n_rows, self.n_cols), dtype=np.uint8)
        for j, k in self.nonzeros():
            out[j, k] = 1
        return out

    def copy(self, counter: Optional[TouchCounter] = None) -> "SparseBinaryMatrix":
        m = SparseBinaryMatrix(self.n_rows, self.n_cols,
                               counter if counter is not None else self.counter)
        for j, k in self.nonzeros():
            m._link(j, k, m._rt[j], m._ct[k])
        return m

    # -- shape changes ----------------------------------------------------

    def append_col(self) -> int:
        self._ch.append(None)
        self._ct.append(None)
        self._cc.append(0)
        self.n_cols += 1
        return self.n_cols - 1

    def append_row(self) -> int:
        self._rh.append(None)
        self._rt.append(None)
        self._rc.append(0)
        self.n_rows += 1
        return self.n_rows - 1

    def remove_col(self, c: int) -> None:
        """Delete column ``c``; later columns shift down by one."""
        assert 0 <= c < self.n_cols
        node = self._ch[c]
        while node is not None:
            nxt = node.down
            self._unlink(node)
            self.counter.touches += 1
            node = nxt
        for k in range(c + 1, self.n_cols):
            node = self._ch[k]
            while node is not None:
                node.col = k - 1
                node = node.down
        del self._ch[c], self._ct[c], self._cc[c]
        self.n_cols -= 1

    def remove_row(self, j: int) -> None:
        """Delete row ``j``; later rows shift down by one."""
        assert 0 <= j < self.n_rows
        node = self._rh[j]
        while node is not None:
            nxt = node.right
            self._unlink(node)
            self.counter.touches += 1
            node = nxt
        for i in range(j + 1, self.n_rows):
            node = self._rh[i]
            while node is not None:
                node.row = i - 1
                node = node.right
        del self._rh[j], self._rt[j], self._rc[j]
        self.n_rows -= 1

    # -- line operations used by the state transforms --------------------

    def clear_row(self, j: int) -> List[int]:
        """Zero row ``j`` and return the columns that held a 1."""
        out = []
        node = self._rh[j]
        while node is not None:
            nxt = node.right
            out.append(node.col)
            self._unlink(node)
            node = nxt
        self.counter.touches += len(out)
        return out

    def xor_col_into(self, src: int, dst: int) -> None:
        """Column ``dst`` ^= column ``src`` (src != dst)."""
        assert src != dst
        a = self._ch[src]
        d = self._ch[dst]
        prev: Optional[_Cell] = None
        steps = 0
        while a is not None:
            j = a.row
            while d is not None and d.row < j:
                prev = d
                d = d.down
                steps += 1
            steps += 1
            if d is not None and d.row == j:
                nxt = d.down
                self._unlink(d)
                d = nxt
            else:
                rp, _ = self._seek_row(j, dst, a)
                prev = self._link(j, dst, rp, prev)
            a = a.down
        self.counter.touches += steps

    def xor_row_into(self, src: int, dst: int) -> None:
        """Row ``dst`` ^= row ``src`` (src != dst)."""
        assert src != dst
        a = self._rh[src]
        d = self._rh[dst]
        prev: Optional[_Cell] = None
        steps = 0
        while a is not None:
            k = a.col
            while d is not None and d.col < k:
                prev = d
                d = d.right
                steps += 1
            steps += 1
            if d is not None and d.col == k:
                nxt = d.right
                self._unlink(d)
                d = nxt
            else:
                cp, _ = self._seek_col(k, dst, a)
                prev = self._link(dst, k, prev, cp)
            a = a.right
        self.counter.touches += steps

    def swap_cols(self, c: int, k: int) -> None:
        """Exchange columns ``c`` and ``k``."""
        if c == k:
            return
        rows_c = self._ch[c]
        rows_k = self._ch[k]
        # rows holding exactly one of the two entries move across
        move_c: List[_Cell] = []
        move_k: List[_Cell] = []
        x, y = rows_c, rows_k
        steps = 0
        while x is not None or y is not None:
            steps += 1
            if y is None or (x is not None and x.row < y.row):
                move_c.append(x)
                x = x.down
            elif x is None or y.row < x.row:
                move_k.append(y)
                y = y.down
            else:
                x = x.down
                y = y.down
        self.counter.touches += steps
        hints = []
        for cell in move_c + move_k:
            hints.append(cell.left if cell.left is not None else cell.right)
            self._unlink(cell)
        prev: Optional[_Cell] = None
        for cell, hint in zip(move_c, hints[:len(move_c)]):
            rp, _ = self._seek_row(cell.row, k, hint)
            cp, _ = self._seek_col(k, cell.row, prev)
            prev = self._link(cell.row, k, rp, cp)
        prev = None
        for cell, hint in zip(move_k, hints[len(move_c):]):
            rp, _ = self._seek_row(cell.row, c, hint)
            cp, _ = self._seek_col(c, cell.row, prev)
            prev = self._link(cell.row, c, rp, cp)

    def check_chains(self) -> Optional[str]:
        """Cross-check row chains, column chains and counts."""
        by_row = set()
        for j in range(self.n_rows):
            node, last, n = self._rh[j], -1, 0
            prev = None
            while node is not None:
                if node.row != j or node.col <= last or node.left is not prev:
                    return f"row chain {j} out of order"
                if not 0 <= node.col < self.n_cols:
                    return f"row chain {j} holds column {node.col} out of range"
                by_row.add((j, node.col))
                last, prev, node, n = node.col, node, node.right, n + 1
            if prev is not self._rt[j] or n != self._rc[j]:
                return f"row {j} tail/count mismatch"
        by_col = set()
        for k in range(self.n_cols):
            node, last, n = self._ch[k], -1, 0
            prev = None
            while node is not None:
                if node.col != k or node.row <= last or node.up is not prev:
                    return f"column chain {k} out of order"
                by_col.add((node.row, k))
                last, prev, node, n = node.row, node, node.down, n + 1
            if prev is not self._ct[k] or n != self._cc[k]:
                return f"column {k} tail/count mismatch"
        if by_row != by_col:
            return "row and column chains disagree"
        return None

    def __repr__(self) -> str:
        return f"SparseBinaryMatrix({self.n_rows}x{self.n_cols}, nnz={self.nnz()})"


class _GCell:
    __slots__ = ("row", "col", "val", "left", "right", "twin")

    def __init__(self, row: int, col: int, val: int) -> None:
        self.row = row
        self.col = col
        self.val = val
        self.left: Optional[_GCell] = None
        self.right: Optional[_GCell] = None
        self.twin: Optional[_GCell] = None


class SparseGramMatrix:
    """Symmetric integer matrix: dense diagonal, sparse off-diagonal chains.

    Off-diagonal values are stored as plain integers so that intermediate,
    unreduced sums can be held between an update and its reduction; a zero
    sum deletes the pair of cells.
    """

    def __init__(self, dim: int = 0, counter: Optional[TouchCounter] = None) -> None:
        self.dim = dim
        self.counter = counter if counter is not None else TouchCounter()
        self.diag: List[int] = [0] * dim
        self._h: List[Optional[_GCell]] = [None] * dim
        self._t: List[Optional[_GCell]] = [None] * dim
        self._n: List[int] = [0] * dim

    @classmethod
    def from_dense(cls, mat, counter: Optional[TouchCounter] = None) -> "SparseGramMatrix":
        mat = [list(r) for r in mat]
        m = cls(len(mat), counter)
        for j in range(len(mat)):
            m.diag[j] = int(mat[j][j])
            for k in range(j + 1, len(mat)):
                v = int(mat[j][k])
                if v != int(mat[k][j]):
                    raise ValueError(f"matrix not symmetric at ({j},{k})")
                if v:
                    m._pair(j, k, v, m._t[j], m._t[k])
        return m

    # -- chain primitives -------------------------------------------------

    def _link(self, j: int, k: int, v: int, pred: Optional[_GCell]) -> _GCell:
        cell = _GCell(j, k, v)
        cell.left = pred
        if pred is None:
            cell.right = self._h[j]
            self._h[j] = cell
        else:
            cell.right = pred.right
            pred.right = cell
        if cell.right is None:
            self._t[j] = cell
        else:
            cell.right.left = cell
        self._n[j] += 1
        return cell

    def _unlink(self, cell: _GCell) -> None:
        j = cell.row
        if cell.left is None:
            self._h[j] = cell.right
        else:
            cell.left.right = cell.right
        if cell.right is None:
            self._t[j] = cell.left
        else:
            cell.right.left = cell.left
        self._n[j] -= 1

    def _pair(self, j: int, k: int, v: int, pj, pk) -> Tuple[_GCell, _GCell]:
        a = self._link(j, k, v, pj)
        b = self._link(k, j, v, pk)
        a.twin, b.twin = b, a
        return a, b

    def _drop(self, cell: _GCell) -> None:
        self._unlink(cell)
        self._unlink(cell.twin)

    def _seek(self, j: int, k: int, hint: Optional[_GCell] = None
              ) -> Tuple[Optional[_GCell], Optional[_GCell]]:
        """Return (predecessor, match) for column ``k`` in row ``j``."""
        tail = self._t[j]
        if tail is None or tail.col < k:
            return tail, None
        node = hint if hint is not None else self._h[j]
        steps = 1
        if node.col > k:
            while node is not None and node.col > k:
                node = node.left
                steps += 1
        else:
            nxt = node.right
            while nxt is not None and nxt.col <= k:
                node = nxt
                nxt = nxt.right
                steps += 1
        self.counter.touches += steps
        if node is not None and node.col == k:
            return node.left, node
        return node, None

    # -- public element access --------------------------------------------

    def get(self, j: int, k: int) -> int:
        assert 0 <= j < self.dim and 0 <= k < self.dim, (j, k)
        if j == k:
            return self.diag[j]
        if self._n[k] < self._n[j]:
            j, k = k, j
        cell = self._seek(j, k)[1]
        return 0 if cell is None else cell.val

    def set_sym(self, j: int, k: int, v: int) -> None:
        """Set entries (j, k) and (k, j) to ``v``."""
        assert 0 <= j < self.dim and 0 <= k < self.dim, (j, k)
        if j == k:
            self.diag[j] = v
            return
        pj, cell = self._seek(j, k)
        if cell is not None:
            if v:
                cell.val = cell.twin.val = v
            else:
                self._drop(cell)
        elif v:
            pk, _ = self._seek(k, j)
            self._pair(j, k, v, pj, pk)

    set = set_sym

    def add_sym(self, j: int, k: int, v: int, hj: Optional[_GCell] = None,
                hk: Optional[_GCell] = None) -> Tuple[Optional[_GCell], Optional[_GCell]]:
        """Add ``v`` to (j, k) and (k, j) for j != k.

        Returns cells usable as hints for later updates of rows j and k.
        """
        pj, cell = self._seek(j, k, hj)
        self.counter.touches += 1
        if cell is not None:
            nv = cell.val + v
            twin = cell.twin
            if nv == 0:
                pk = twin.left
                self._drop(cell)
                return pj, pk
            cell.val = twin.val = nv
            return cell, twin
        if v == 0:
            return pj, hk
        pk, _ = self._seek(k, j, hk)
        return self._pair(j, k, v, pj, pk)

    def offdiag(self, j: int) -> List[Tuple[int, int]]:
        """Ascending (col, value) off-diagonal nonzeros of row ``j``."""
        out = []
        node = self._h[j]
        while node is not None:
            out.append((node.col, node.val))
            node = node.right
        self.counter.touches += len(out)
        return out

    def offdiag_cells(self, j: int) -> List[_GCell]:
        out = []
        node = self._h[j]
        while node is not None:
            out.append(node)
            node = node.right
        self.counter.touches += len(out)
        return out

    def offdiag_count(self, j: int) -> int:
        return self._n[j]

    def iter_row(self, j: int) -> Iterator[Tuple[int, int]]:
        node = self._h[j]
        d = self.diag[j]
        while node is not None and node.col < j:
            self.counter.touches += 1
            yield node.col, node.val
            node = node.right
        if d:
            yield j, d
        while node is not None:
            self.counter.touches += 1
            yield node.col, node.val
            node = node.right

    iter_col = iter_row

    def row_count(self, j: int) -> int:
        return self._n[j] + (1 if self.diag[j] else 0)

    col_count = row_count

    def reduce_line(self, c: int) -> None:
        """Diagonal mod 4, off-diagonals of row/column ``c`` mod 2."""
        self.diag[c] %= 4
        node = self._h[c]
        steps = 0
        while node is not None:
            nxt = node.right
            v = node.val % 2
            if v:
                node.val = node.twin.val = v
            else:
                self._drop(node)
            node = nxt
            steps += 1
        self.counter.touches += steps + 1

    def nonzeros(self) -> List[Tuple[int, int, int]]:
        """All (row, col, value) nonzeros in row-major order (not charged)."""
        out = []
        for j in range(self.dim):
            node = self._h[j]
            placed = False
            while node is not None:
                if not placed and node.col > j:
                    if self.diag[j]:
                        out.append((j, j, self.diag[j]))
                    placed = True
                out.append((j, node.col, node.val))
                node = node.right
            if not placed and self.diag[j]:
                out.append((j, j, self.diag[j]))
        return out

    def to_dense(self):
        import numpy as np

        out = np.zeros((self.dim, self.dim), dtype=np.int64)
        for j, k, v in self.nonzeros():
            out[j, k] = v
        return out

    def copy(self, counter: Optional[TouchCounter] = None) -> "SparseGramMatrix":
        m = SparseGramMatrix(self.dim, counter if counter is not None else self.counter)
        m.diag = list(self.diag)
        for j in range(self.dim):
            node = self._h[j]
            while node is not None:
                if node.col > j:
                    m._pair(j, node.col, node.val, m._t[j], m._t[node.col])
                node = node.right
        return m

    # -- shape changes ----------------------------------------------------

    def append_dim(self) -> int:
        self.diag.append(0)
        self._h.append(None)
        self._t.append(None)
        self._n.append(0)
        self.dim += 1
        return self.dim - 1

    def remove_dim(self, c: int) -> None:
        """Delete row and column ``c``; later indices shift down by one."""
        assert 0 <= c < self.dim
        node = self._h[c]
        steps = 0
        while node is not None:
            nxt = node.right
            self._drop(node)
            node = nxt
            steps += 1
        self.counter.touches += steps
        if c != self.dim - 1:
            for j in range(self.dim):
                node = self._h[j]
                while node is not None:
                    if node.col > c:
                        node.col -= 1
                    if node.row > c:
                        node.row -= 1
                    node = node.right
        del self.diag[c], self._h[c], self._t[c], self._n[c]
        self.dim -= 1

    def swap_dims(self, c: int, k: int) -> None:
        """Exchange rows and columns ``c`` and ``k``."""
        if c == k:
            return
        cells_c = self.offdiag_cells(c)
        cells_k = self.offdiag_cells(k)
        v_ck = 0
        moved_c = []
        moved_k = []
        for cell in cells_c:
            if cell.col == k:
                v_ck = cell.val
                self._drop(cell)
            else:
                moved_c.append((cell.col, cell.val))
        for cell in cells_k:
            if cell.col != c:
                moved_k.append((cell.col, cell.val))
        # remember a surviving neighbour in each partner row as a seek hint
        hints = {}
        for cell in cells_c + cells_k:
            if cell.col in (c, k):
                continue
            t = cell.twin
            self._unlink(t)
            self._unlink(cell)
            hints[t.row] = t.left if t.left is not None else t.right
        self.diag[c], self.diag[k] = self.diag[k], self.diag[c]
        # rows c and k are empty; partner indices arrive in ascending order
        for j, items in ((k, moved_c), (c, moved_k)):
            for h, v in items:
                hint = hints.get(h)
                if hint is not None and not self._live(hint):
                    hint = None
                ph, _ = self._seek(h, j, hint)
                a, b = self._pair(j, h, v, self._t[j], ph)
                hints[h] = b
        if v_ck:
            self.add_sym(c, k, v_ck)

    def _live(self, cell: _GCell) -> bool:
        if cell.left is None:
            return self._h[cell.row] is cell
        return cell.left.right is cell

    def check_chains(self) -> Optional[str]:
        """Cross-check chain order, counts, twin links and symmetry."""
        for j in range(self.dim):
            node, last, n, prev = self._h[j], -1, 0, None
            while node is not None:
                if node.row != j or node.col <= last or node.left is not prev:
                    return f"Gram row chain {j} out of order"
                if node.col == j:
                    return f"Gram row chain {j} stores its diagonal"
                if not 0 <= node.col < self.dim:
                    return f"Gram row chain {j} holds index {node.col} out of range"
                t = node.twin
                if t is None or t.twin is not node or t.row != node.col or t.col != j:
                    return f"Gram twin link broken at ({j},{node.col})"
                if t.val != node.val:
                    return f"Gram asymmetric at ({j},{node.col})"
                if node.val == 0:
                    return f"Gram stores zero at ({j},{node.col})"
                last, prev, node, n = node.col, node, node.right, n + 1
            if prev is not self._t[j] or n != self._n[j]:
                return f"Gram row {j} tail/count mismatch"
        return None

    def __repr__(self) -> str:
        return f"SparseGramMatrix(dim={self.dim}, nnz={sum(self._n)})"
