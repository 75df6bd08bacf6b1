"""Exact linear algebra: the solver and kernel oracles."""

from fractions import Fraction

import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from ainfsimp.linalg import (DimensionError, Matrix, inverse, kernel_basis,
                             rank, solve_linear)
from ainfsimp.scalars import FieldError, FpElement, PrimeField, Rationals

QQ = Rationals()


def mat(rows):
    return Matrix.from_rows(QQ, rows)


def fr(*values):
    return [Fraction(v) for v in values]


def test_solve_identity():
    assert solve_linear(Matrix.identity(QQ, 3), fr(1, 2, 3)) == fr(1, 2, 3)


def test_solve_free_variable_zeroed():
    # leftmost pivot, free variables forced to zero
    assert solve_linear(mat([[1, 1]]), fr(5)) == fr(5, 0)


def test_solve_inconsistent():
    assert solve_linear(mat([[1], [1]]), fr(1, 2)) is None


def test_solve_shape_mismatch():
    with pytest.raises(DimensionError):
        solve_linear(mat([[1, 1]]), fr(1, 2))


def test_kernel_injective():
    assert kernel_basis(Matrix.identity(QQ, 2)) == []


def test_kernel_zero_matrix():
    basis = kernel_basis(Matrix.zeros(QQ, 2, 2))
    assert len(basis) == 2


def test_kernel_single_relation():
    (v,) = kernel_basis(mat([[1, 1]]))
    a = mat([[1, 1]])
    assert a.apply(v) == fr(0)


def test_inverse_round_trip():
    a = mat([[1, 2], [3, 5]])
    b = inverse(a)
    assert a @ b == Matrix.identity(QQ, 2)
    assert inverse(mat([[1, 2], [2, 4]])) is None


small_entries = st.integers(min_value=-4, max_value=4)


@st.composite
def random_system(draw):
    nrows = draw(st.integers(1, 4))
    ncols = draw(st.integers(1, 4))
    rows = draw(st.lists(st.lists(small_entries, min_size=ncols, max_size=ncols),
                         min_size=nrows, max_size=nrows))
    rhs = draw(st.lists(small_entries, min_size=nrows, max_size=nrows))
    return rows, rhs


@given(random_system())
@settings(max_examples=150, deadline=None)
def test_solutions_substitute_back_exactly(data):
    rows, rhs = data
    a = mat(rows)
    b = fr(*rhs)
    x = solve_linear(a, b)
    if x is not None:
        assert a.apply(x) == b


@given(random_system())
@settings(max_examples=150, deadline=None)
def test_rank_nullity(data):
    rows, _ = data
    a = mat(rows)
    basis = kernel_basis(a)
    assert rank(a) + len(basis) == a.ncols
    for v in basis:
        assert all(s == Fraction(0) for s in a.apply(v))


def test_prime_field_arithmetic():
    f5 = PrimeField(5)
    a = f5.from_int(3)
    assert a + a == f5.from_int(1)
    assert a * a == f5.from_int(4)
    assert a / a == f5.one()
    assert -a == f5.from_int(2)
    assert f5.parse(f5.format(a)) == a


def test_characteristic_two_rejected():
    with pytest.raises(FieldError):
        PrimeField(2)
    with pytest.raises(FieldError):
        PrimeField(9)


def test_prime_field_solver():
    f7 = PrimeField(7)
    a = Matrix.from_rows(f7, [[2, 1], [1, 1]])
    x = solve_linear(a, [f7.from_int(1), f7.from_int(0)])
    assert a.apply(x) == [f7.from_int(1), f7.from_int(0)]


def test_mixed_moduli_rejected():
    with pytest.raises(FieldError):
        FpElement(1, 5) + FpElement(1, 7)


def test_rational_serialization_lowest_terms():
    assert QQ.format(Fraction(2, 4)) == "1/2"
    assert QQ.parse("-3/6") == Fraction(-1, 2)
