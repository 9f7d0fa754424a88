from fractions import Fraction

import pytest
from hypothesis import given, settings

from bezoutmin.automata import (
    EPSILON,
    LinearRepresentation,
    behavior,
    conjugate,
    direct_sum,
    hankel_rank,
    transpose,
    words_up_to,
)
from bezoutmin.corpus import paper_a1, paper_a2
from bezoutmin.linalg import FractionalMember, Matrix, Member, membership, rank_over_fractions
from bezoutmin.minimization import (
    BudgetExceeded,
    DimensionMismatch,
    NotMinimal,
    PrefixState,
    StepBudget,
    conjugator,
    distinguishing_word,
    equivalent,
    k_isomorphic,
    left_reduction,
    minimize,
    prefix,
    process_candidate,
    right_reduction,
)
from bezoutmin.scalars import FRACPOLY, INT, RAT

from conftest import representations

A, B = (0,), (1,)


def same_behavior(r1, r2, length=4):
    return all(behavior(r1, w) == behavior(r2, w) for w in words_up_to(r1.alphabet, length))


def padded_a1():
    """A1(2) with a third state that is neither reachable nor useful."""
    return LinearRepresentation.build(
        INT, "a", [1, 0, 0], [[[0, 2, 0], [0, 0, 0], [1, 1, 3]]], [0, 1, 5]
    )


def coreachless_a1():
    """A1(2) with a third state that is reachable but never reaches gamma."""
    return LinearRepresentation.build(
        INT, "a", [1, 0, 0], [[[0, 2, 1], [0, 0, 0], [0, 0, 2]]], [0, 1, 0]
    )


# -- generator step ---------------------------------------------------------

def test_process_candidate_independent(two_letter):
    s = process_candidate(two_letter, EPSILON, PrefixState.initial(two_letter))
    assert s.X == (EPSILON,) and s.Y == {A, B} and s.Z == set()


def test_process_candidate_fractional_branch(two_letter):
    s = PrefixState.initial(two_letter)
    s = process_candidate(two_letter, EPSILON, s)
    s = process_candidate(two_letter, A, s)
    assert membership(s.basis, two_letter.forward("b")).__class__ is FractionalMember
    s = process_candidate(two_letter, B, s)
    assert s.X == (EPSILON, A, B) and s.Z == {B}
    assert {(1, 0), (1, 1)} <= s.Y


def test_process_candidate_zero_vector_dropped():
    rep = LinearRepresentation.build(INT, "a", [0, 0], [[[1, 0], [0, 1]]], [1, 1])
    s = process_candidate(rep, EPSILON, PrefixState.initial(rep))
    assert s.X == () and s.Y == set()


# -- prefix -----------------------------------------------------------------

def test_prefix_a1(a1):
    pr = prefix(a1)
    assert pr.X == (EPSILON, A) and pr.Z == set()


def test_prefix_two_letter(two_letter):
    pr = prefix(two_letter)
    assert pr.X == (EPSILON, A, B) and pr.Z == {B}
    assert pr.stair_basis == Matrix.identity(INT, 2)
    assert pr.free_words == (EPSILON, A)
    assert pr.prefix_code(2) == ((0, 0), (0, 1), (1, 0), (1, 1))


def test_prefix_zero_lambda():
    rep = LinearRepresentation.build(INT, "ab", [0, 0], [[[1, 2], [3, 4]]] * 2, [1, 1])
    pr = prefix(rep)
    assert pr.X == () and pr.Z == set()


def test_prefix_budget():
    rep = LinearRepresentation.build(INT, "ab", [1, 0, 0], [[[0, 1, 0], [0, 0, 1], [1, 0, 0]]] * 2, [1, 1, 1])
    with pytest.raises(BudgetExceeded):
        prefix(rep, StepBudget(2))
    assert prefix(rep, StepBudget(100)).steps <= 100
    with pytest.raises(ValueError):
        StepBudget(0)


@settings(max_examples=80, deadline=None)
@given(representations(max_dim=4))
def test_prefix_propositions(r):
    pr = prefix(r)
    xs = set(pr.X)
    assert all(x[:k] in xs for x in pr.X for k in range(len(x)))
    assert pr.Z <= xs
    free = [list(pr.vectors[x]) for x in pr.free_words]
    assert rank_over_fractions(Matrix(INT, len(free), r.dim, free)) == len(free)
    assert pr.stair_basis.rows == len(free)
    for w in words_up_to(r.alphabet, 4):
        assert isinstance(membership(pr.stair_basis, r.forward(w)), Member)


# -- reductions ---------------------------------------------------------------

def test_left_reduction_a1(a1):
    red = left_reduction(a1)
    assert red.dim == 2 and behavior(red, "a") == 2


def test_left_reduction_drops_unreachable_state():
    rep = padded_a1()
    red = left_reduction(rep)
    assert red.dim == 2 and same_behavior(red, rep)


def test_left_reduction_zero_series():
    rep = LinearRepresentation.build(INT, "a", [0, 0], [[[1, 1], [0, 1]]], [3, 4])
    red = left_reduction(rep)
    assert red.dim == 0 and same_behavior(red, rep)


def test_right_reduction_examples(a2):
    red = right_reduction(a2)
    assert red.dim == 2 and behavior(red, "a") == 2
    sym = direct_sum(paper_a1(1), transpose(paper_a1(1)))
    assert right_reduction(sym).dim == left_reduction(sym).dim
    rep = coreachless_a1()
    assert left_reduction(rep).dim == 3
    red = right_reduction(rep)
    assert red.dim == 2 and same_behavior(red, rep)


def test_minimize_examples(a1):
    doubled = direct_sum(paper_a1(2), paper_a1(2))
    m = minimize(doubled)
    assert doubled.dim == 4 and m.dim == 2 and same_behavior(m, doubled)
    empty = LinearRepresentation.build(INT, "a", [], [[]], [])
    assert minimize(empty).dim == 0
    assert minimize(a1).dim == 2


def test_minimize_in_fractional_power_ring():
    x = FRACPOLY.parse("X^(1/2)")
    for rep in (paper_a1(x, FRACPOLY), paper_a2(x, FRACPOLY), direct_sum(paper_a1(x, FRACPOLY), paper_a2(x, FRACPOLY))):
        m = minimize(rep)
        assert m.dim == 2 and same_behavior(m, rep, 3)


@settings(max_examples=60, deadline=None)
@given(representations(max_dim=4))
def test_minimize_properties(r):
    m = minimize(r)
    assert m.dim == hankel_rank(r)
    assert same_behavior(m, r)
    mm = minimize(m)
    assert mm.dim == m.dim


@settings(max_examples=40, deadline=None)
@given(representations(ring=RAT, max_dim=3))
def test_field_idempotence_up_to_isomorphism(r):
    assert prefix(r).Z == set()
    m = minimize(r)
    assert k_isomorphic(m, minimize(m))


# -- equivalence and isomorphism ----------------------------------------------

def test_equivalent_examples(a1, a2):
    assert equivalent(a1, a2)
    assert not equivalent(paper_a1(2), paper_a1(3))
    assert distinguishing_word(paper_a1(2), paper_a1(3)) == A
    assert equivalent(a1, a1)


@settings(max_examples=60, deadline=None)
@given(representations(max_dim=2, max_letters=1), representations(max_dim=2, max_letters=1))
def test_distinguishing_word_is_shortest(r1, r2):
    w = distinguishing_word(r1, r2)
    # oracle: all words of length < dim1 + dim2 (plus one for the empty case)
    diffs = [u for u in words_up_to(r1.alphabet, r1.dim + r2.dim) if behavior(r1, u) != behavior(r2, u)]
    if w is None:
        assert not diffs
    else:
        assert behavior(r1, w) != behavior(r2, w)
        assert len(w) == len(diffs[0])


def test_conjugator_examples(a1, a2):
    assert conjugator(a1, a1) == Matrix.identity(RAT.fraction_field(), 2)
    S = conjugator(a1, a2)
    assert S.to_lists() == [[2, 0], [0, 1]]
    assert conjugator(paper_a1(2), paper_a1(3)) is None


def test_conjugator_preconditions(a1):
    with pytest.raises(DimensionMismatch):
        conjugator(a1, minimize(LinearRepresentation.build(INT, "a", [1], [[[1]]], [1])))
    with pytest.raises(NotMinimal):
        conjugator(direct_sum(a1, a1), direct_sum(a1, a1))


def test_k_isomorphic_examples(a1, a2):
    assert not k_isomorphic(a1, a2)
    assert k_isomorphic(a1, a1)
    P = Matrix.from_rows(INT, [[0, 1], [1, 0]])
    swapped = conjugate(a1, P, P)
    assert swapped != a1
    assert k_isomorphic(a1, swapped)
    assert conjugator(a1, swapped) == Matrix.from_rows(RAT.fraction_field(), [[Fraction(0), Fraction(1)], [Fraction(1), Fraction(0)]])


def test_k_isomorphic_unimodular_non_permutation(a1):
    U = Matrix.from_rows(INT, [[1, 1], [0, 1]])
    Ui = Matrix.from_rows(INT, [[1, -1], [0, 1]])
    assert k_isomorphic(a1, conjugate(a1, U, Ui))
    # over the rationals A1 and A2 are isomorphic: 2 is a unit there
    assert k_isomorphic(paper_a1(2, RAT), paper_a2(2, RAT))
