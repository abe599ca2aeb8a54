from __future__ import annotations

import math
from functools import lru_cache

import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from schern.partitions import (
    PartitionError,
    conjugate,
    partition,
    schur_dimension,
    ssyt_count,
    ssyt_stream,
    ssyt_substreams,
)


def interlacings(row):
    """All weakly decreasing rows mu with row[i+1] <= mu[i] <= row[i]."""
    m = len(row) - 1
    out = []

    def rec(i, acc):
        if i == m:
            out.append(tuple(acc))
            return
        hi = row[i] if i == 0 else min(row[i], acc[-1])
        for v in range(row[i + 1], hi + 1):
            rec(i + 1, acc + [v])

    if m == 0:
        return [()]
    rec(0, [])
    return out


@lru_cache(maxsize=None)
def branching_dimension(n, lam):
    """Weyl module dimension via the GL(n) -> GL(n-1) branching rule.

    Counts Gelfand-Tsetlin patterns directly; shares nothing with the hook
    content formula or the column-wise tableau enumerator, so it serves as an
    independent oracle for both.
    """
    if len(lam) > n:
        return 0
    row = tuple(lam) + (0,) * (n - len(lam))
    if n == 1:
        return 1
    return sum(branching_dimension(n - 1, mu) for mu in interlacings(row))


partitions_small = st.lists(st.integers(1, 4), min_size=0, max_size=5).map(
    lambda xs: tuple(sorted(xs, reverse=True))
)


class TestPartitionBasics:
    def test_canonicalization_strips_trailing_zeros(self):
        assert partition((3, 1, 0, 0)) == (3, 1)
        assert partition(()) == ()
        assert partition((0,)) == ()

    def test_rejects_increasing_parts(self):
        with pytest.raises(PartitionError):
            partition((1, 2))

    def test_rejects_negative_parts(self):
        with pytest.raises(PartitionError):
            partition((2, -1))

    def test_conjugate_examples(self):
        assert conjugate((2, 2, 2)) == (3, 3)
        assert conjugate((3, 1)) == (2, 1, 1)
        assert conjugate(()) == ()

    @given(partitions_small)
    def test_conjugate_is_an_involution(self, lam):
        assert conjugate(conjugate(lam)) == lam

    @given(partitions_small)
    def test_conjugate_preserves_size(self, lam):
        assert sum(conjugate(lam)) == sum(lam)


class TestSchurDimension:
    def test_defining_representation(self):
        assert schur_dimension(8, (1,)) == 8

    def test_example_values(self):
        # frozen after checking against the branching-rule oracle below
        assert schur_dimension(8, (2, 2, 2)) == 1176
        assert schur_dimension(9, (3, 3, 3, 3, 3)) == 116424
        assert schur_dimension(6, (2, 1)) == 70

    def test_too_many_rows_gives_zero(self):
        assert schur_dimension(2, (1, 1, 1)) == 0

    def test_empty_partition(self):
        assert schur_dimension(5, ()) == 1

    def test_oracle_agrees_on_large_shape(self):
        assert branching_dimension(8, (2, 2, 2)) == 1176
        assert branching_dimension(9, (3, 3, 3, 3, 3)) == 116424

    @given(st.integers(1, 6), partitions_small)
    @settings(max_examples=60, deadline=None)
    def test_matches_branching_oracle(self, n, lam):
        assert schur_dimension(n, lam) == branching_dimension(n, lam)

    def test_exterior_power_dimensions(self):
        for n in range(2, 9):
            for k in range(1, n + 1):
                assert schur_dimension(n, (1,) * k) == math.comb(n, k)


class TestSsytStream:
    def test_single_box(self):
        assert list(ssyt_stream(2, (1,))) == [(1, 0), (0, 1)]

    def test_vertical_strip(self):
        contents = list(ssyt_stream(4, (1, 1)))
        assert len(contents) == 6
        for c in contents:
            assert sorted(c) == [0, 0, 1, 1]

    def test_empty_shape_yields_zero_vector(self):
        assert list(ssyt_stream(8, ())) == [(0,) * 8]

    def test_too_many_rows_is_empty(self):
        assert list(ssyt_stream(2, (1, 1, 1))) == []

    def test_counts(self):
        assert ssyt_count(8, (1, 1)) == 28
        assert ssyt_count(6, (2, 1)) == 70

    def test_count_matches_dimension_on_big_shape(self):
        assert ssyt_count(8, (2, 2, 2)) == schur_dimension(8, (2, 2, 2))

    @given(st.integers(1, 5), partitions_small)
    @settings(max_examples=40, deadline=None)
    def test_count_matches_dimension(self, n, lam):
        assert ssyt_count(n, lam) == schur_dimension(n, lam)

    @given(st.integers(1, 5), partitions_small)
    @settings(max_examples=30, deadline=None)
    def test_contents_sum_to_partition_size(self, n, lam):
        for c in ssyt_stream(n, lam):
            assert sum(c) == sum(lam)
            assert len(c) == n

    def test_stream_is_deterministic(self):
        a = list(ssyt_stream(5, (2, 2, 1)))
        b = list(ssyt_stream(5, (2, 2, 1)))
        assert a == b

    @given(st.integers(2, 5), partitions_small, st.integers(1, 3))
    @settings(max_examples=30, deadline=None)
    def test_substreams_partition_the_stream(self, n, lam, k):
        whole = sorted(ssyt_stream(n, lam))
        split = sorted(c for _, sub in ssyt_substreams(n, lam, k) for c in sub)
        assert split == whole
