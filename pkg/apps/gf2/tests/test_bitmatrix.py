# apps/gf2/tests/test_bitmatrix.py
import itertools

import numpy as np
import pytest
from hypothesis import given, settings
from hypothesis import strategies as st
from hypothesis.extra.numpy import arrays

from apps.common.exceptions import DimensionMismatch, InsufficientRank, Singular
from apps.gf2.bitmatrix import (
    BitMatrix,
    column_reduce,
    hstack,
    independent_rows,
    invert,
    multiply,
    nullspace,
    rank,
    vstack,
)

from .factories import BitMatrixFactory, InvertibleMatrixFactory, random_bits


def bit_arrays(max_rows=10, max_cols=10):
    shapes = st.tuples(st.integers(0, max_rows), st.integers(0, max_cols))
    return shapes.flatmap(lambda s: arrays(np.uint8, s, elements=st.integers(0, 1)))


def brute_force_rank(array: np.ndarray) -> int:
    """log2 of the number of distinct row combinations."""
    rows = [tuple(r) for r in array]
    span = set()
    for mask in itertools.product((0, 1), repeat=len(rows)):
        acc = np.zeros(array.shape[1], dtype=np.uint8)
        for take, row in zip(mask, rows):
            if take:
                acc ^= np.array(row, dtype=np.uint8)
        span.add(acc.tobytes())
    return len(span).bit_length() - 1


class TestEntryLevelInterface:
    def test_get_and_with_entry(self):
        m = BitMatrix.zeros(3, 10).with_entry(2, 9, 1)
        assert m.get(2, 9) == 1
        assert m.get(0, 0) == 0
        assert m.shape == (3, 10)

    def test_out_of_range_entry(self):
        with pytest.raises(IndexError):
            BitMatrix.identity(2).get(2, 0)

    def test_padding_bits_do_not_affect_equality(self):
        dirty = np.array([[0xFF]], dtype=np.uint8)
        assert BitMatrix(1, 3, dirty) == BitMatrix.from_rows([[1, 1, 1]])

    def test_words_are_read_only(self):
        m = BitMatrix.identity(4)
        with pytest.raises(ValueError):
            m.words[0, 0] = 0

    def test_transpose_and_stacking(self):
        m = BitMatrix.from_rows([[1, 0, 1], [0, 1, 1]])
        assert m.T.to_array().tolist() == [[1, 0], [0, 1], [1, 1]]
        assert vstack([m, m]).shape == (4, 3)
        assert hstack([m, m]).shape == (2, 6)
        with pytest.raises(DimensionMismatch):
            vstack([m, m.T])

    @given(bit_arrays())
    def test_array_round_trip(self, array):
        assert np.array_equal(BitMatrix.from_array(array).to_array(), array)


class TestMultiply:
    def test_identity_is_neutral(self):
        m = BitMatrixFactory(rows=2, cols=5, seed=1)
        assert multiply(BitMatrix.identity(2), m) == m

    def test_unit_upper_is_self_inverse(self, unit_upper):
        assert unit_upper @ unit_upper == BitMatrix.identity(2)

    def test_matches_naive_triple_loop(self, rng):
        a_bits = random_bits(rng, 8, 8)
        b_bits = random_bits(rng, 8, 8)
        expected = np.zeros((8, 8), dtype=np.uint8)
        for i in range(8):
            for j in range(8):
                expected[i, j] = sum(int(a_bits[i, k]) * int(b_bits[k, j]) for k in range(8)) % 2
        product = multiply(BitMatrix.from_array(a_bits), BitMatrix.from_array(b_bits))
        assert np.array_equal(product.to_array(), expected)

    def test_dimension_mismatch(self):
        with pytest.raises(DimensionMismatch):
            multiply(BitMatrix.zeros(2, 3), BitMatrix.zeros(2, 3))


class TestRank:
    def test_zero_matrix(self):
        assert rank(BitMatrix.zeros(4, 7)) == 0

    def test_identity(self):
        assert rank(BitMatrix.identity(9)) == 9

    def test_all_ones(self, all_ones):
        assert rank(all_ones) == 1

    def test_empty(self):
        assert rank(BitMatrix.zeros(0, 5)) == 0

    @settings(max_examples=200, deadline=None)
    @given(bit_arrays(max_rows=10, max_cols=10))
    def test_matches_brute_force_span(self, array):
        assert rank(BitMatrix.from_array(array)) == brute_force_rank(array)


class TestInvert:
    def test_identity(self):
        assert invert(BitMatrix.identity(3)) == BitMatrix.identity(3)

    def test_unit_upper(self, unit_upper):
        assert invert(unit_upper) == unit_upper

    def test_singular(self, all_ones):
        with pytest.raises(Singular):
            invert(all_ones)

    def test_non_square(self):
        with pytest.raises(DimensionMismatch):
            invert(BitMatrix.zeros(2, 3))

    def test_thousand_random_inverses(self, rng):
        for k in range(1000):
            n = int(rng.integers(1, 65))
            m = InvertibleMatrixFactory(size=n, seed=k)
            inv = invert(m)
            assert m @ inv == BitMatrix.identity(n)
            assert inv @ m == BitMatrix.identity(n)


class TestColumnReduce:
    def test_echelon_input_is_unchanged(self):
        m = BitMatrix.from_rows([[1, 0], [0, 1], [1, 1]])
        reduced, r = column_reduce(m)
        assert reduced == m
        assert r == BitMatrix.identity(2)

    def test_all_ones_has_one_nonzero_column(self, all_ones):
        reduced, r = column_reduce(all_ones)
        assert reduced.to_array().tolist() == [[1, 0], [1, 0]]
        assert all_ones @ r == reduced
        assert rank(r) == 2

    @settings(max_examples=150, deadline=None)
    @given(bit_arrays(max_rows=12, max_cols=12))
    def test_reduction_properties(self, array):
        m = BitMatrix.from_array(array)
        reduced, r = column_reduce(m)
        assert m @ r == reduced
        assert rank(r) == r.rows
        k = rank(m)
        assert rank(reduced) == k
        dense = reduced.to_array()
        assert not dense[:, k:].any()
        assert all(dense[:, j].any() for j in range(k))


class TestIndependentRows:
    def test_identity(self):
        assert independent_rows(BitMatrix.identity(3), 3) == [0, 1, 2]

    def test_smallest_index_tie_break(self):
        assert independent_rows(BitMatrix.from_rows([[1], [1]]), 1) == [0]

    def test_greedy_scan(self):
        m = BitMatrix.from_rows([[0, 1], [1, 0], [1, 1]])
        assert independent_rows(m, 2) == [0, 1]

    def test_skips_dependent_rows(self):
        m = BitMatrix.from_rows([[1, 1, 0], [1, 1, 0], [0, 0, 0], [0, 1, 1]])
        assert independent_rows(m, 2) == [0, 3]

    def test_insufficient_rank(self, all_ones):
        with pytest.raises(InsufficientRank):
            independent_rows(all_ones, 2)

    @settings(max_examples=100, deadline=None)
    @given(bit_arrays(max_rows=12, max_cols=12))
    def test_selection_has_full_rank(self, array):
        m = BitMatrix.from_array(array)
        k = rank(m)
        chosen = independent_rows(m, k)
        assert len(chosen) == k
        assert rank(m.take_rows(chosen)) == k


class TestNullspace:
    @settings(max_examples=100, deadline=None)
    @given(bit_arrays(max_rows=10, max_cols=12))
    def test_basis_is_annihilated_and_complete(self, array):
        m = BitMatrix.from_array(array)
        basis = nullspace(m)
        assert basis.shape == (m.cols, m.cols - rank(m))
        assert (m @ basis).is_zero()
        assert rank(basis) == basis.cols
