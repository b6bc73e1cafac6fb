from fractions import Fraction

import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from vermalab.exactla import (
    RatFunc,
    SparseMat,
    generalized_kernel,
    normalize_integer_vector,
    nullspace,
    rank,
    solve,
)


def mat(rows):
    return SparseMat.from_rows(rows)


class TestNullspace:
    def test_rank_one_matrix(self):
        assert nullspace(mat([[1, 2], [2, 4]])) == [{0: -2, 1: 1}]

    def test_identity_is_injective(self):
        assert nullspace(SparseMat.identity(3)) == []

    def test_weight_zero_e_matrix(self):
        # e on the weight-0 slice of L4 (x) V0, basis v0w2, v1w1, v2w0:
        # rows index v0w1 and v1w0 in the weight-2 slice
        m = mat([[-2, 4, 0], [0, 0, 3]])
        ker = nullspace(m)
        assert ker == [{0: 2, 1: 1}]
        # spans the closed-form direction (16, 8, 0)
        assert ker[0][0] * 8 == ker[0][1] * 16

    def test_zero_matrix_full_kernel(self):
        ker = nullspace(SparseMat(2, 3))
        assert ker == [{0: 1}, {1: 1}, {2: 1}]

    def test_empty_dimensions(self):
        assert nullspace(SparseMat(0, 0)) == []
        assert nullspace(SparseMat(0, 2)) == [{0: 1}, {1: 1}]
        assert nullspace(SparseMat(2, 0)) == []

    def test_normalization_gcd_one(self):
        ker = nullspace(mat([[2, 4]]))
        assert ker == [{0: -2, 1: 1}]

    def test_fractional_entries(self):
        ker = nullspace(mat([[Fraction(1, 2), Fraction(1, 3)]]))
        assert ker == [{0: -2, 1: 3}]


@st.composite
def small_matrix(draw):
    rows = draw(st.integers(1, 4))
    cols = draw(st.integers(1, 4))
    data = draw(st.lists(
        st.lists(st.integers(-5, 5), min_size=cols, max_size=cols),
        min_size=rows, max_size=rows))
    return mat(data)


@given(small_matrix())
@settings(max_examples=150, deadline=None)
def test_nullspace_vectors_are_killed(m):
    ker = nullspace(m)
    for v in ker:
        assert m.apply(v) == {}
    assert len(ker) + rank(m) == m.cols


@given(small_matrix())
@settings(max_examples=100, deadline=None)
def test_solve_roundtrip(m):
    ker = nullspace(m)
    # image membership: m @ x = m @ e_0 has the solution structure
    b = m.apply({0: Fraction(1)}) if m.cols else {}
    x = solve(m, b)
    assert x is not None
    assert m.apply(x) == b
    del ker


class TestSolve:
    def test_identity(self):
        b = {0: Fraction(1), 1: Fraction(2)}
        assert solve(SparseMat.identity(2), b) == b

    def test_consistent_dependent_system(self):
        m = mat([[1, 2], [2, 4]])
        x = solve(m, {0: Fraction(1), 1: Fraction(2)})
        assert x is not None and m.apply(x) == {0: Fraction(1), 1: Fraction(2)}

    def test_inconsistent_system(self):
        assert solve(mat([[1, 2], [2, 4]]), {0: Fraction(1), 1: Fraction(1)}) is None

    def test_dimension_mismatch(self):
        with pytest.raises(ValueError):
            solve(mat([[1]]), {5: Fraction(1)})


class TestGeneralizedKernel:
    def test_jordan_block(self):
        kernel, excess = generalized_kernel(mat([[0, 1], [0, 0]]), 2)
        assert kernel == [{0: 1}] and excess == [{1: 1}]

    def test_diagonal_no_excess(self):
        kernel, excess = generalized_kernel(mat([[0, 0], [0, 5]]), 2)
        assert kernel == [{0: 1}] and excess == []

    def test_casimir_weight_slice(self):
        # (Casimir - 0) on weight -2 of L2 (x) V0: columns as derived
        m = mat([[-8, 8, 0], [-8, 8, 4], [0, 0, 8]])
        kernel, excess = generalized_kernel(m, 2)
        assert kernel == [{0: 1, 1: 1}]
        assert len(excess) == 1
        v = excess[0]
        assert m.apply(v) != {}
        assert (m**2).apply(v) == {}

    def test_non_square_rejected(self):
        with pytest.raises(ValueError):
            generalized_kernel(SparseMat(2, 3), 2)


class TestRatFunc:
    def test_reduction_idempotent(self):
        q = RatFunc.q()
        x = (q + 1) * (q - 1) / (q * q - 1)
        assert x == 1

    def test_mul_inverse(self):
        q = RatFunc.q()
        x = (q**3 - 2) / (q + 5)
        assert x * (1 / x) == 1

    def test_monic_denominator(self):
        x = RatFunc((1,), (2, 4))  # 1 / (2 + 4q)
        assert x.den[-1] == 1

    def test_evaluation(self):
        q = RatFunc.q()
        x = (q * q - 1) / (q - 1)  # reduces to q + 1
        assert x.at(1) == 2

    def test_pole_detection(self):
        q = RatFunc.q()
        with pytest.raises(ZeroDivisionError):
            (RatFunc.const(1) / (q - 1)).at(1)

    def test_negative_powers(self):
        q = RatFunc.q()
        assert RatFunc.q(-2) * q * q == 1


@given(st.integers(-9, 9), st.integers(-9, 9), st.integers(-9, 9), st.integers(-9, 9))
@settings(max_examples=100, deadline=None)
def test_ratfunc_field_laws(a, b, c, d):
    q = RatFunc.q()
    x = a + b * q
    y = c + d * q
    assert x * y == y * x
    assert (x + y) * q == x * q + y * q
    if y != 0 and x != 0:
        assert (x / y) * (y / x) == 1


def test_normalize_integer_vector():
    v = normalize_integer_vector({0: Fraction(-2, 3), 2: Fraction(4, 3)})
    assert v == {0: -1, 2: 2}
    assert normalize_integer_vector({}) == {}
