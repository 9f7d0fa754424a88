from fractions import Fraction

import pytest
from hypothesis import assume, given, settings, strategies as st

from bezoutmin.linalg import (
    BothZero,
    FractionalMember,
    Independent,
    Matrix,
    Member,
    NotInModule,
    NotUnimodular,
    ShapeMismatch,
    determinant,
    gauss2,
    invert_unimodular,
    is_stair,
    membership,
    pivot_columns,
    rank_over_fractions,
    solve_stair,
    triang,
)
from bezoutmin.scalars import FRACPOLY, INT, POLY, RAT

from conftest import fraction_rank, int_matrices, leibniz_det, small_ints


def M(rows, ring=INT, cols=None):
    return Matrix.from_rows(ring, rows, cols)


def apply2(step, a, b):
    return step.alpha * a + step.beta * b, step.gamma * a + step.delta * b


# -- gauss2 ---------------------------------------------------------------

def test_gauss2_swap_when_first_is_zero():
    step = gauss2(INT, 0, 7)
    assert step.matrix(INT) == M([[0, 1], [1, 0]])
    assert apply2(step, 0, 7) == (7, 0)


def test_gauss2_second_zero():
    step = gauss2(INT, -5, 0)
    assert apply2(step, -5, 0) == (5, 0)
    assert INT.is_unit(determinant(step.matrix(INT)))


def test_gauss2_general():
    step = gauss2(INT, 12, 8)
    assert apply2(step, 12, 8) == (4, 0)
    assert leibniz_det(step.matrix(INT).to_lists()) == 1


def test_gauss2_both_zero():
    with pytest.raises(BothZero):
        gauss2(INT, 0, 0)


@given(small_ints, small_ints)
def test_gauss2_property(a, b):
    assume(a or b)
    step = gauss2(INT, a, b)
    top, bottom = apply2(step, a, b)
    assert bottom == 0 and abs(top) == INT.gcd(a, b)
    assert leibniz_det(step.matrix(INT).to_lists()) in (1, -1)


# -- triang ---------------------------------------------------------------

def check_triang(A):
    res = triang(A)
    zeros = Matrix.zeros(A.ring, res.zero_rows, A.cols)
    assert res.G @ A == res.T.vstack(zeros)
    assert A.ring.is_unit(determinant(res.G))
    assert is_stair(res.T)
    assert res.T.rows == rank_over_fractions(A)
    return res


def test_triang_identity():
    res = check_triang(Matrix.identity(INT, 2))
    assert res.G == Matrix.identity(INT, 2) and res.T == Matrix.identity(INT, 2) and res.zero_rows == 0


def test_triang_swap_case():
    res = check_triang(M([[0], [-6]]))
    assert res.T == M([[6]]) and res.zero_rows == 1


def test_triang_example():
    A = M([[4, 2], [2, 4]])
    res = check_triang(A)
    assert [res.T[0, 0], res.T[1, 1]] == [2, 6]
    assert leibniz_det(res.G.to_lists()) in (1, -1)


def test_triang_empty_and_zero():
    res = check_triang(Matrix.zeros(INT, 0, 3))
    assert res.T.shape == (0, 3)
    res = check_triang(Matrix.zeros(INT, 2, 3))
    assert res.T.shape == (0, 3) and res.zero_rows == 2


@settings(max_examples=300)
@given(int_matrices())
def test_triang_property(A):
    res = check_triang(A)
    assert leibniz_det(res.G.to_lists()) in (1, -1)
    assert res.T.rows == fraction_rank(A.to_lists())


def test_triang_over_polynomials():
    p = POLY.parse
    A = M([[p("X^2-1"), p("X")], [p("X-1"), p("1")], [p("X+1"), p("X^2")]], ring=POLY)
    res = check_triang(A)
    assert res.T.rows == 2
    f = FRACPOLY.parse
    B = M([[f("X"), f("1")], [f("X^(1/2)"), f("X^(1/3)")]], ring=FRACPOLY)
    check_triang(B)


# -- membership -----------------------------------------------------------

BASIS = M([[1, 1], [2, 0]])


def test_membership_member():
    assert membership(BASIS, [4, 0]) == Member((0, 2))


def test_membership_fractional():
    assert membership(BASIS, [1, 0]) == FractionalMember(2, (0, 1))


def test_membership_zero_and_shape():
    assert membership(BASIS, [0, 0]) == Member((0, 0))
    with pytest.raises(ShapeMismatch):
        membership(BASIS, [0, 0, 0])


def test_membership_independent():
    assert membership(M([[1, 1]]), [1, 0]) == Independent()
    assert membership(Matrix.zeros(INT, 0, 2), [1, 0]) == Independent()
    assert membership(Matrix.zeros(INT, 0, 2), [0, 0]) == Member(())


def test_membership_over_rationals_is_never_fractional():
    B = M([[1, 1], [2, 0]], ring=RAT)
    out = membership(B, [Fraction(1), Fraction(0)])
    assert out == Member((0, Fraction(1, 2)))


@settings(max_examples=200)
@given(int_matrices(max_rows=3, max_cols=4, elements=st.integers(-4, 4)), st.data())
def test_membership_consistent_with_rank(A, data):
    basis = triang(A).T
    v = data.draw(st.lists(st.integers(-6, 6), min_size=A.cols, max_size=A.cols))
    out = membership(basis, v)
    r = fraction_rank(basis.to_lists())
    grown = fraction_rank(basis.to_lists() + [v])
    assert isinstance(out, Independent) == (grown == r + 1)
    if isinstance(out, Member):
        recon = Matrix(INT, 1, basis.rows, [list(out.coefficients)]) @ basis if basis.rows else Matrix.zeros(INT, 1, A.cols)
        assert list(recon.row(0)) == v
    if isinstance(out, FractionalMember):
        recon = Matrix(INT, 1, basis.rows, [list(out.coefficients)]) @ basis
        assert list(recon.row(0)) == [out.alpha * x for x in v]
        assert out.alpha != 0 and not INT.is_unit(out.alpha)
        assert any(c % out.alpha for c in out.coefficients)


# -- solve_stair ----------------------------------------------------------

def test_solve_stair_examples():
    assert solve_stair(Matrix.identity(INT, 3), [5, -1, 2]) == [5, -1, 2]
    D = M([[2, 0], [0, 2]])
    assert solve_stair(D, [4, 6]) == [2, 3]
    with pytest.raises(NotInModule):
        solve_stair(D, [1, 0])
    with pytest.raises(NotInModule):
        solve_stair(M([[1, 0, 0]]), [1, 1, 0])


@given(int_matrices(), st.data())
def test_solve_stair_recovers_coefficients(A, data):
    T = triang(A).T
    c = data.draw(st.lists(small_ints, min_size=T.rows, max_size=T.rows))
    w = (Matrix(INT, 1, T.rows, [c]) @ T).row(0) if T.rows else [0] * T.cols
    assert solve_stair(T, w) == c


# -- inverses, rank, determinant -------------------------------------------

def test_invert_unimodular_examples():
    assert invert_unimodular(Matrix.identity(INT, 3)) == Matrix.identity(INT, 3)
    P = M([[0, 1], [1, 0]])
    assert invert_unimodular(P) == P
    with pytest.raises(NotUnimodular):
        invert_unimodular(M([[2, 0], [0, 1]]))


@given(int_matrices())
def test_invert_unimodular_property(A):
    G = triang(A).G
    Gi = invert_unimodular(G)
    I = Matrix.identity(INT, G.rows)
    assert G @ Gi == I and Gi @ G == I


def test_rank_examples():
    assert rank_over_fractions(Matrix.zeros(INT, 2, 2)) == 0
    assert rank_over_fractions(Matrix.identity(INT, 3)) == 3
    assert rank_over_fractions(M([[1, 1], [2, 2]])) == 1


@given(int_matrices(max_rows=4, max_cols=4))
def test_determinant_matches_leibniz(A):
    if A.rows == A.cols:
        assert determinant(A) == leibniz_det(A.to_lists())
    assert rank_over_fractions(A) == fraction_rank(A.to_lists())


def test_pivot_columns():
    assert pivot_columns(M([[0, 3, 1], [0, 0, 2]])) == [1, 2]
    assert not is_stair(M([[1, 0], [1, 0]]))
