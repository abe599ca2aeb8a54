from __future__ import annotations

import math
from fractions import Fraction

import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from schern.chern import (
    CrossCheckError,
    EnumerationCeilingError,
    TruncatedQuadratic,
    c2,
    c2_closed_form,
    c2_enumeration,
    casimir,
    dual_partition,
    reduce_full_columns,
)
from schern.weights import dual_weight, partition_of

partitions_small = st.lists(st.integers(1, 3), min_size=0, max_size=5).map(
    lambda xs: tuple(sorted(xs, reverse=True))
)


class TestCasimir:
    def test_examples(self):
        assert casimir(8, (2,)) == Fraction(35, 2)
        assert casimir(5, ()) == 0
        assert casimir(9, (3, 3, 3, 3, 3)) == 80 == 9 * 9 - 1

    def test_defining_representation(self):
        for n in range(2, 10):
            assert casimir(n, (1,)) == Fraction(n * n - 1, n)

    def test_rejects_too_many_rows(self):
        with pytest.raises(ValueError):
            casimir(2, (1, 1, 1))


class TestClosedForm:
    def test_reference_values(self):
        assert c2_closed_form(6, (2, 1)).n_lambda == 33
        assert c2_closed_form(9, (3, 3)).n_lambda == 3465
        assert c2_closed_form(8, (1, 1)).n_lambda == 6
        assert c2_closed_form(8, (2, 1, 1, 1, 1, 1, 1)).n_lambda == 16

    def test_casimir_equal_to_adjoint_forces_index_equal_to_dimension(self):
        res = c2_closed_form(9, (3, 3, 3, 3, 3))
        assert res.dim == 116424
        assert res.n_lambda == 116424

    def test_determinant_powers_are_trivial(self):
        res = c2_closed_form(8, (2, 2, 2, 2, 2, 2, 2, 2))
        assert res.n_lambda == 0
        assert res.dim == 1

    def test_n_equal_one(self):
        assert c2_closed_form(1, (5,)).n_lambda == 0

    def test_result_metadata(self):
        res = c2_closed_form(6, (2, 1))
        assert res.method == "closed-form"
        assert not res.cross_checked
        assert res.dim == 70


class TestEnumeration:
    def test_reference_values(self):
        assert c2_enumeration(8, (1, 1)).n_lambda == 6
        assert c2_enumeration(2, (1,)).n_lambda == 1
        assert c2_enumeration(4, (1, 1)).n_lambda == 2
        assert c2_enumeration(8, (2, 2, 2)).n_lambda == 700

    def test_flagged_row_computes_as_its_dual(self):
        # the symmetric square of the defining representation of SL(8)
        assert c2_enumeration(8, (2,)).n_lambda == 10
        assert c2_enumeration(8, (2, 2, 2, 2, 2, 2, 2)).n_lambda == 10

    def test_ceiling(self):
        with pytest.raises(EnumerationCeilingError):
            c2_enumeration(9, (3, 3, 3, 3), ceiling=100_000)

    def test_rejects_too_many_rows(self):
        with pytest.raises(ValueError):
            c2_enumeration(3, (1, 1, 1, 1))

    def test_polynomial_route_on_example(self):
        assert c2_enumeration(8, (2, 2, 2), route="polynomial").n_lambda == 700

    @given(st.integers(2, 5), partitions_small)
    @settings(max_examples=40, deadline=None)
    def test_polynomial_route_matches_streaming(self, n, lam):
        if len(lam) > n:
            return
        a = c2_enumeration(n, lam, route="streaming").n_lambda
        b = c2_enumeration(n, lam, route="polynomial").n_lambda
        assert a == b

    @given(st.integers(2, 6), partitions_small)
    @settings(max_examples=60, deadline=None)
    def test_matches_closed_form(self, n, lam):
        if len(lam) > n:
            return
        assert c2_enumeration(n, lam).n_lambda == c2_closed_form(n, lam).n_lambda


class TestTruncatedQuadratic:
    def test_truncation(self):
        q = TruncatedQuadratic(3)
        q = q.times_one_plus_linear((1, 2, 0))
        q = q.times_one_plus_linear((0, 1, 1))
        # (1 + x + 2y)(1 + y + z) = 1 + x + 3y + z + xy + xz + 2y^2 + 2yz + ...
        assert q.const == 1
        assert q.lin == [1, 3, 1]
        assert q.coefficient(0, 1) == 1
        assert q.coefficient(0, 2) == 1
        assert q.coefficient(1, 1) == 2
        assert q.coefficient(1, 2) == 2
        assert q.coefficient(0, 0) == 0


class TestFrontDoor:
    def test_both_examples(self):
        res = c2(8, (1, 1, 1, 1), method="both")
        assert res.n_lambda == 20
        assert res.method == "both"
        assert res.cross_checked
        assert c2(9, (2, 1, 1, 1, 1, 1, 1, 1), method="both").n_lambda == 18

    def test_auto_cross_checks_small_dimensions(self):
        res = c2(8, (2, 2, 2))
        assert res.method == "both"
        assert res.cross_checked
        assert res.n_lambda == 700

    def test_auto_skips_cross_check_above_ceiling(self):
        res = c2(9, (3, 3, 3, 3))
        assert res.method == "closed-form"
        assert not res.cross_checked
        assert res.n_lambda == 116424

    def test_explicit_both_respects_ceiling(self):
        with pytest.raises(EnumerationCeilingError):
            c2(9, (3, 3, 3, 3), method="both")

    def test_unknown_method(self):
        with pytest.raises(ValueError):
            c2(8, (1, 1), method="bogus")

    def test_exterior_power_identity(self):
        for n in range(2, 11):
            for k in range(1, n):
                assert c2(n, (1,) * k).n_lambda == math.comb(n - 2, k - 1)

    def test_adjoint_identity(self):
        for n in range(4, 10):
            assert c2(n, (2,) + (1,) * (n - 2)).n_lambda == 2 * n

    @given(st.integers(2, 6), partitions_small, st.integers(0, 2))
    @settings(max_examples=40, deadline=None)
    def test_determinant_reduction_invariance(self, n, lam, k):
        if len(lam) > n:
            return
        padded = tuple(p + k for p in lam) + (k,) * (n - len(lam))
        assert c2(n, padded).n_lambda == c2(n, lam).n_lambda

    @given(st.integers(2, 7), partitions_small)
    @settings(max_examples=60, deadline=None)
    def test_duality_invariance(self, n, lam):
        if len(lam) > n:
            return
        dual = dual_partition(n, lam)
        assert c2_closed_form(n, dual).n_lambda == c2_closed_form(n, lam).n_lambda


class TestDualPartition:
    def test_examples(self):
        assert dual_partition(8, (2,)) == (2, 2, 2, 2, 2, 2, 2)
        assert dual_partition(9, (3, 3, 1, 1, 1)) == (3, 3, 3, 3, 2, 2, 2)
        assert dual_partition(5, ()) == ()

    def test_involution_after_reduction(self):
        lam = (3, 1, 1)
        assert dual_partition(6, dual_partition(6, lam)) == lam

    @given(st.lists(st.integers(0, 3), min_size=1, max_size=7).map(tuple))
    def test_agrees_with_reversed_weight(self, w):
        n = len(w) + 1
        lam = partition_of(w)
        assert dual_partition(n, lam) == partition_of(dual_weight(w))


class TestReduction:
    def test_reduce_full_columns(self):
        assert reduce_full_columns(4, (3, 2, 2, 2)) == (1,)
        assert reduce_full_columns(4, (2, 1)) == (2, 1)
        assert reduce_full_columns(3, (2, 2, 2)) == ()

    def test_rejects_too_many_rows(self):
        with pytest.raises(ValueError):
            reduce_full_columns(2, (1, 1, 1))
