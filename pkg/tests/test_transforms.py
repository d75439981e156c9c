import itertools
import random

import numpy as np
import pytest

from qfesim.gates import apply_cx, apply_h, apply_s
from qfesim.oracle import DenseState, dense_apply
from qfesim.qfe_core import (
    TAU,
    clone_state,
    dump_state,
    expand_amplitudes,
    new_basis_state,
    state_from_dense,
    validate,
)
from qfesim.transforms import (
    NonNormalisedError,
    fix_final_bit,
    make_principal,
    reduce_gram_row_col,
    reindex_subt_column,
    reindex_swap_columns,
    reselect_principal_row,
    zero_column_elim,
)

from conftest import amplitudes_close, assert_matches, random_pair

# touch-count constant for the per-move bounds
C = 8
ELIM_OPS = ["H", "S", "CZ", "CX", "CY", "MZ", "X", "H", "H"]


def states_with_rank(count, min_rank=2, base_seed=0):
    found = []
    seed = base_seed
    while len(found) < count:
        rnd = random.Random(seed)
        n = rnd.randint(2, 9)
        s, st = random_pair(seed, n, rnd.randint(5, 60), ELIM_OPS)
        if s.r >= min_rank:
            found.append((seed, s, st))
        seed += 1
    return found


RANDOM_STATES = states_with_rank(100)


def sample(case):
    """A private copy of the case-th random state."""
    seed, s, _ = RANDOM_STATES[case]
    return seed, clone_state(s)


def restricted_sum(s, z):
    """Brute-force amplitudes of the sum with the last variable pinned to z."""
    A = s.A.to_dense()
    Q = s.Q.to_dense()
    r = s.r
    out = np.zeros(1 << s.n, dtype=complex)
    for head in itertools.product((0, 1), repeat=r - 1):
        x = np.array(head + (z,), dtype=np.int64)
        y = (A @ x + np.array(s.b)) % 2
        idx = int(sum(int(v) << j for j, v in enumerate(y)))
        out[idx] += TAU ** s.g * 1j ** (int(x @ Q @ x) % 4)
    return out * 2 ** (-r / 2)


class TestReduce:
    def test_single_diagonal(self):
        s = state_from_dense([[1]], [[5]], [0])
        reduce_gram_row_col(s, 0)
        assert s.Q.to_dense().tolist() == [[1]]

    def test_even_offdiagonal_vanishes(self):
        s = state_from_dense(np.eye(2), [[0, 2], [2, 0]], [0, 0])
        reduce_gram_row_col(s, 0)
        assert s.Q.to_dense().tolist() == [[0, 0], [0, 0]]

    def test_mixed(self):
        s = state_from_dense(np.eye(2), [[0, 3], [3, 2]], [0, 0])
        reduce_gram_row_col(s, 1)
        assert s.Q.to_dense().tolist() == [[0, 1], [1, 2]]

    def test_amplitudes_kept(self):
        s = state_from_dense(np.eye(2), [[6, 3], [3, 2]], [0, 0])
        before = expand_amplitudes(s)
        reduce_gram_row_col(s, 0)
        reduce_gram_row_col(s, 1)
        assert amplitudes_close(before, expand_amplitudes(s), 1e-12)


class TestSubtColumn:
    def test_single_row(self):
        s = state_from_dense([[1, 1]], [[0, 0], [0, 0]], [0], p=[0, 0])
        reindex_subt_column(s, 1, 0)
        assert s.A.to_dense().tolist() == [[1, 0]]

    def test_same_index_noop(self):
        _, s = sample(0)
        before = dump_state(s)
        reindex_subt_column(s, 1, 1)
        assert dump_state(s) == before

    @pytest.mark.parametrize("case", range(100))
    def test_amplitude_invariance(self, case):
        seed, s = sample(case)
        rnd = random.Random(seed)
        k, c = rnd.sample(range(s.r), 2)
        before = expand_amplitudes(s)
        p_before = list(s.p)
        reindex_subt_column(s, k, c)
        assert amplitudes_close(before, expand_amplitudes(s), 1e-12)
        assert s.p == p_before


class TestSwapColumns:
    def test_identity(self):
        _, s = sample(1)
        before = dump_state(s)
        reindex_swap_columns(s, 0, 0)
        assert dump_state(s) == before

    def test_psi1(self):
        s = state_from_dense(np.eye(2), [[0, 0], [0, 1]], [0, 0])
        reindex_swap_columns(s, 0, 1)
        assert s.Q.to_dense().tolist() == [[1, 0], [0, 0]]
        assert s.p == [1, 0]
        assert validate(s) is None

    @pytest.mark.parametrize("case", range(100))
    def test_amplitude_invariance(self, case):
        seed, s = sample(case)
        rnd = random.Random(seed + 1)
        k, c = rnd.sample(range(s.r), 2)
        before = expand_amplitudes(s)
        reindex_swap_columns(s, k, c)
        assert amplitudes_close(before, expand_amplitudes(s), 1e-12)
        assert validate(s) is None


class TestMakePrincipal:
    def test_already_unit_row(self):
        s = state_from_dense([[1, 0], [0, 1], [1, 0]], np.zeros((2, 2)), [0, 0, 0], p=[0, 1])
        make_principal(s, 0, 2)
        assert s.p == [2, 1]
        assert s.A.to_dense().tolist() == [[1, 0], [0, 1], [1, 0]]
        assert validate(s) is None

    def test_guard(self):
        s = state_from_dense([[1, 0], [0, 1], [1, 0]], np.zeros((2, 2)), [0, 0, 0], p=[0, 1])
        before = dump_state(s)
        make_principal(s, 1, 0)
        assert dump_state(s) == before

    def test_clears_row(self):
        s = state_from_dense([[1, 0], [0, 1], [1, 1]], [[1, 1], [1, 2]], [0, 1, 0], p=[0, 1])
        before = expand_amplitudes(s)
        make_principal(s, 0, 2)
        assert [v for _, v in s.A.iter_row(2)] == [1]
        assert s.A.get(2, 0) == 1
        assert s.p[0] == 2
        assert validate(s) is None
        assert amplitudes_close(before, expand_amplitudes(s), 1e-12)


class TestReselect:
    def _state(self, last_row):
        rows = [[1, 0, 0], [0, 1, 0], [0, 0, 1], [1, 1, 1], last_row]
        return state_from_dense(rows, np.zeros((3, 3)), [0] * 5, p=[0, 1, 2])

    def test_only_row_unchanged(self):
        s = state_from_dense(np.eye(2), [[0, 1], [1, 0]], [0, 0])
        before = dump_state(s)
        s.counter.reset()
        reselect_principal_row(s, 0, 0)
        assert dump_state(s) == before
        assert s.counter.touches <= 2

    def test_prefers_sparsest(self):
        s = self._state([1, 0, 0])
        reselect_principal_row(s, 0, 0)
        assert s.p[0] == 4
        assert validate(s) is None

    def test_tie_goes_to_smallest_row(self):
        s = self._state([1, 0, 0])
        reselect_principal_row(s, None, 0)
        assert s.p[0] == 0

    @pytest.mark.parametrize("case", range(0, 100, 4))
    def test_random_states(self, case):
        seed, s = sample(case)
        rnd = random.Random(seed + 2)
        c = rnd.randrange(s.r)
        before = expand_amplitudes(s)
        reselect_principal_row(s, s.p[c], c)
        assert validate(s) is None
        assert amplitudes_close(before, expand_amplitudes(s), 1e-12)


class TestFixFinalBit:
    def test_plus_to_one(self):
        s = state_from_dense([[1]], [[0]], [0])
        fix_final_bit(s, 1)
        assert (s.r, s.b, s.g) == (0, [1], 0)

    def test_bell_to_11(self):
        s = new_basis_state([0, 0])
        st = DenseState(2)
        apply_h(s, 0)
        apply_cx(s, 0, 1)
        fix_final_bit(s, 1)
        dense_apply(st, "X", 0)
        dense_apply(st, "X", 1)
        assert_matches(st, s)

    def test_u_two_adds_four(self):
        s = state_from_dense([[1]], [[2]], [0])
        fix_final_bit(s, 1)
        assert s.g == 4

    def test_rank_zero_rejected(self):
        with pytest.raises(ValueError):
            fix_final_bit(new_basis_state([0]), 0)

    @pytest.mark.parametrize("case", range(0, 100, 2))
    def test_matches_projection(self, case):
        seed, s = sample(case)
        z = seed % 2
        want = restricted_sum(s, z) * np.sqrt(2)
        fix_final_bit(s, z)
        assert amplitudes_close(want, expand_amplitudes(s))
        assert validate(s) is None


def with_zero_column(s, rnd, odd):
    """Append an all-zero column coupled into Q; returns its index."""
    c = s.r
    s.A.append_col()
    s.Q.append_dim()
    s.p.append(0)
    coupled = [h for h in range(c) if rnd.random() < 0.5]
    if not odd and not coupled and c:
        coupled = [rnd.randrange(c)]
    for h in coupled:
        s.Q.set_sym(h, c, 1)
    s.Q.set_sym(c, c, rnd.choice([1, 3]) if odd else rnd.choice([0, 2]))
    return c


class TestZeroColumnElim:
    def test_hh_round_trip(self):
        s = new_basis_state([0])
        apply_h(s, 0)
        apply_h(s, 0)
        assert (s.r, s.g, s.b) == (0, 0, [0])

    def test_odd_branch_hssh(self):
        s = new_basis_state([0])
        st = DenseState(1)
        for name in ("H", "S", "S", "H"):
            {"H": apply_h, "S": apply_s}[name](s, 0)
            dense_apply(st, name, 0)
        assert_matches(st, s)
        assert s.r == 0 and s.b == [1]

    def test_non_normalised_rejected_untouched(self):
        s = state_from_dense([[1, 0]], np.zeros((2, 2)), [0], p=[0, 0])
        before = dump_state(s)
        with pytest.raises(NonNormalisedError):
            zero_column_elim(s, 1)
        assert dump_state(s) == before

    @pytest.mark.parametrize("case", range(60))
    def test_raw_sum_preserved(self, case):
        seed, s = sample(case)
        rnd = random.Random(seed + 3)
        odd = case % 2 == 0
        c = with_zero_column(s, rnd, odd)
        if c > 0:
            reindex_swap_columns(s, c, rnd.randrange(c + 1))
            c = [s.A.col_count(k) for k in range(s.A.n_cols)].index(0)
        before = expand_amplitudes(s)
        r_before = s.r
        zero_column_elim(s, c)
        assert validate(s) is None
        assert amplitudes_close(before, expand_amplitudes(s))
        assert s.r == r_before - (1 if odd else 2)


class TestTouchBounds:
    def _t(self, s, c):
        return s.A.col_count(c)

    def _w(self, s, c):
        return s.Q.offdiag_count(c) + 1

    @pytest.mark.parametrize("case", range(100))
    def test_bounds(self, case):
        seed, s = sample(case)
        rnd = random.Random(seed + 4)
        c, k = rnd.sample(range(s.r), 2)
        last = s.r - 1
        moves = [
            (lambda x: reduce_gram_row_col(x, c), self._w(s, c)),
            (lambda x: reindex_subt_column(x, k, c), self._t(s, c) + self._w(s, c)),
            (lambda x: reindex_swap_columns(x, k, c),
             self._t(s, c) + self._t(s, k) + self._w(s, c) + self._w(s, k)),
            (lambda x: fix_final_bit(x, 1), self._t(s, last) + self._w(s, last)),
        ]
        for fn, bound in moves:
            x = clone_state(s)
            x.counter.reset()
            fn(x)
            assert x.counter.touches <= C * bound
