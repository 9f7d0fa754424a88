"""Prefix-set computation, left/right reduction and minimization of K-automata.

Over a Bezout domain K the reachable row module ``lambda mu(K<A>)`` is free;
:func:`prefix` finds a prefix-closed word set whose vectors generate it and
:func:`left_reduction` rewrites the automaton in a stair basis of that
module.  Over a field this is classical minimization; over a ring the
resulting minimal automata need not be isomorphic (see :func:`k_isomorphic`).
"""
from __future__ import annotations

import heapq
from dataclasses import dataclass, field
from typing import Sequence

from .automata import (
    EPSILON,
    AlphabetMismatch,
    LinearRepresentation,
    RingMismatch,
    Word,
    direct_sum,
    dot,
    hankel_rank,
    scale,
    step_forward,
    transpose,
    word_key,
)
from .linalg import (
    FractionalMember,
    Matrix,
    Member,
    NotInModule,
    determinant,
    invert_over_field,
    invert_unimodular,
    membership,
    solve_linear_system,
    solve_stair,
    to_field,
    triang,
)


class BudgetExceeded(RuntimeError):
    pass


class DimensionMismatch(ValueError):
    pass


class NotMinimal(ValueError):
    """A representation is not minimal over the fraction field."""


@dataclass(frozen=True)
class StepBudget:
    max_words_processed: int = 10_000

    def __post_init__(self):
        if self.max_words_processed <= 0:
            raise ValueError("step budget must be positive")


DEFAULT_BUDGET = StepBudget()


# --------------------------------------------------------------------------
# prefix / generator


@dataclass(frozen=True)
class PrefixState:
    """Working triple (X, Y, Z) plus the data needed to classify candidates.

    ``basis`` is a stair basis of the K-module spanned by the vectors of X.
    """

    X: tuple[Word, ...]
    Y: frozenset[Word]
    Z: frozenset[Word]
    basis: Matrix
    vectors: dict = field(compare=False)

    @classmethod
    def initial(cls, rep: LinearRepresentation) -> "PrefixState":
        return cls((), frozenset([EPSILON]), frozenset(), Matrix.zeros(rep.ring, 0, rep.dim), {})


def candidate_vector(rep: LinearRepresentation, y: Word, vectors: dict) -> tuple:
    if not y:
        return tuple(rep.lam.row(0))
    parent = vectors.get(y[:-1])
    if parent is None:
        return rep.forward(y)
    return step_forward(parent, rep.mu[y[-1]], rep.ring.zero)


def process_candidate(rep: LinearRepresentation, y: Word, state: PrefixState) -> PrefixState:
    """One call of the generator step on candidate ``y``.

    Independent candidates and those only reachable with a non-unit
    multiplier are adopted (the latter also go to Z); K-members are dropped.
    """
    if y not in state.Y:
        raise ValueError(f"{y} is not a pending candidate")
    v = candidate_vector(rep, y, state.vectors)
    outcome = membership(state.basis, v)
    Y = state.Y - {y}
    if isinstance(outcome, Member):
        return PrefixState(state.X, Y, state.Z, state.basis, state.vectors)
    children = {y + (a,) for a in range(len(rep.alphabet))}
    Z = state.Z | {y} if isinstance(outcome, FractionalMember) else state.Z
    basis = triang(state.basis.vstack(Matrix(rep.ring, 1, rep.dim, [v]))).T
    vectors = dict(state.vectors)
    vectors[y] = v
    return PrefixState(state.X + (y,), Y | children, Z, basis, vectors)


@dataclass(frozen=True)
class PrefixResult:
    X: tuple[Word, ...]
    Z: frozenset[Word]
    stair_basis: Matrix
    vectors: dict = field(compare=False)
    steps: int = 0

    @property
    def free_words(self) -> tuple[Word, ...]:
        """X minus Z, in processing order."""
        return tuple(x for x in self.X if x not in self.Z)

    def prefix_code(self, alphabet_size: int) -> tuple[Word, ...]:
        """The code C = (X.A + {eps}) - X induced by the prefix-closed set X."""
        xs = set(self.X)
        cands = {EPSILON} | {x + (a,) for x in self.X for a in range(alphabet_size)}
        return tuple(sorted(cands - xs, key=word_key))


def prefix(rep: LinearRepresentation, budget: StepBudget = DEFAULT_BUDGET) -> PrefixResult:
    """Run the generator step on candidates of minimal length until none remain.

    Ties among equal-length candidates go to the lexicographically smaller
    word in alphabet order.
    """
    state = PrefixState.initial(rep)
    heap = [word_key(EPSILON)]
    steps = 0
    while heap:
        _, y = heapq.heappop(heap)
        steps += 1
        if steps > budget.max_words_processed:
            raise BudgetExceeded(f"more than {budget.max_words_processed} candidate words processed")
        before = state.Y
        state = process_candidate(rep, y, state)
        for w in state.Y - before:
            heapq.heappush(heap, word_key(w))
    return PrefixResult(state.X, state.Z, state.basis, state.vectors, steps)


# --------------------------------------------------------------------------
# reductions


def _absorb(I: Matrix, T: Matrix, v: Sequence | None) -> tuple[Matrix, Matrix]:
    """Stack ``v`` under ``T``, triangularize, and keep ``lambda == I @ T``.

    With ``G @ [T; v] == [T'; 0]`` we have ``[T; v] == G^-1 [T'; 0]``, so
    ``I @ T == (I|0) @ G^-1 @ [T'; 0]`` and only the first ``rank`` columns
    of ``(I|0) @ G^-1`` survive.
    """
    ring = T.ring
    stacked = T if v is None else T.vstack(Matrix(ring, 1, T.cols, [list(v)]))
    res = triang(stacked)
    padded = I if v is None else I.hstack(Matrix.zeros(ring, 1, 1))
    full = padded @ invert_unimodular(res.G)
    return full.submatrix([0], range(res.rank)), res.T


def left_reduction(rep: LinearRepresentation, budget: StepBudget = DEFAULT_BUDGET) -> LinearRepresentation:
    """Left reduced representation with dimension ``|X - Z|`` and the same behavior."""
    ring = rep.ring
    pr = prefix(rep, budget)
    lam = rep.lam
    I, T = Matrix.identity(ring, 1), lam
    for x in sorted(pr.X, key=word_key):
        I, T = _absorb(I, T, pr.vectors[x])
        assert I @ T == lam, "lambda = I T violated"
    if not pr.X:
        I, T = _absorb(I, T, None)
    assert T.rows == len(pr.X) - len(pr.Z), "stair basis size differs from |X - Z|"

    # cross-check: lambda is in the row module of T with coefficients I
    assert solve_stair(T, lam.row(0)) == list(I.row(0)), "I disagrees with direct solve"

    mu_r = []
    for m in rep.mu:
        TM = T @ m
        try:
            rows = [solve_stair(T, TM.row(i)) for i in range(T.rows)]
        except NotInModule as exc:
            raise AssertionError("reachable module is not stable under mu") from exc
        mu_r.append(Matrix(ring, T.rows, T.rows, rows))
    return LinearRepresentation(ring, rep.alphabet, I, tuple(mu_r), T @ rep.gamma)


def right_reduction(rep: LinearRepresentation, budget: StepBudget = DEFAULT_BUDGET) -> LinearRepresentation:
    return transpose(left_reduction(transpose(rep), budget))


def minimize(rep: LinearRepresentation, budget: StepBudget = DEFAULT_BUDGET) -> LinearRepresentation:
    """One left reduction followed by one right reduction."""
    return right_reduction(left_reduction(rep, budget), budget)


# --------------------------------------------------------------------------
# equivalence and isomorphism (over the fraction field)


def _check_pair(r1: LinearRepresentation, r2: LinearRepresentation) -> None:
    if r1.alphabet != r2.alphabet:
        raise AlphabetMismatch(f"{r1.alphabet.symbols} vs {r2.alphabet.symbols}")
    if r1.ring != r2.ring:
        raise RingMismatch(f"{r1.ring.name} vs {r2.ring.name}")


def distinguishing_word(r1: LinearRepresentation, r2: LinearRepresentation) -> Word | None:
    """A shortest word on which the two behaviors differ, or None.

    Breadth-first search on the difference automaton, pruning words whose
    forward vector is F-dependent on earlier ones.  Any word's vector lies
    in the span of kept words no longer than it, so the first kept word with
    a nonzero coefficient has minimal length.
    """
    _check_pair(r1, r2)
    diff = direct_sum(r1, scale(r2, -r1.ring.one))
    fld = diff.ring.fraction_field()
    F = to_field(diff.lam, fld)
    mus = [to_field(m, fld) for m in diff.mu]
    g = [fld.embed(x) for x in diff.gamma.column(0)]
    basis: list[tuple[int, list]] = []  # (pivot column, normalized row)

    def reduce(v):
        v = list(v)
        for p, row in basis:
            if v[p]:
                c = v[p]
                v = [x - c * y for x, y in zip(v, row)]
        return v

    queue = [(EPSILON, tuple(F.row(0)))]
    head = 0
    while head < len(queue):
        w, v = queue[head]
        head += 1
        if dot(v, g, fld.zero):
            return w
        red = reduce(v)
        p = next((j for j, x in enumerate(red) if x), None)
        if p is None:
            continue
        inv = fld.one / red[p]
        row = [inv * x for x in red]
        basis[:] = [(q, [x - r[p] * y for x, y in zip(r, row)]) for q, r in basis]
        basis.append((p, row))
        for a, m in enumerate(mus):
            queue.append((w + (a,), step_forward(v, m, fld.zero)))
    return None


def equivalent(r1: LinearRepresentation, r2: LinearRepresentation) -> bool:
    return distinguishing_word(r1, r2) is None


def is_minimal(rep: LinearRepresentation) -> bool:
    """Minimal over the fraction field: dimension equals the Hankel rank."""
    return hankel_rank(rep, rep.dim) == rep.dim


def conjugator(r1: LinearRepresentation, r2: LinearRepresentation) -> Matrix | None:
    """The unique S over F with lam2 = lam1 S, S mu2 = mu1 S, S gamma2 = gamma1.

    Both inputs must be minimal over F.  Returns None when the system has no
    invertible solution, i.e. the behaviors differ.
    """
    _check_pair(r1, r2)
    n = r1.dim
    if r2.dim != n:
        raise DimensionMismatch(f"dimensions {r1.dim} and {r2.dim}")
    for r in (r1, r2):
        if not is_minimal(r):
            raise NotMinimal(f"{r} is not minimal over the fraction field")
    ring = r1.ring
    zero = ring.zero

    def var(i, j):
        return i * n + j

    rows, rhs = [], []

    def equation(coeffs: dict, value):
        row = [zero] * (n * n)
        for k, c in coeffs.items():
            row[k] = row[k] + c
        rows.append(row)
        rhs.append(value)

    lam1, lam2 = r1.lam.row(0), r2.lam.row(0)
    for j in range(n):
        equation({var(i, j): lam1[i] for i in range(n)}, lam2[j])
    g1, g2 = r1.gamma.column(0), r2.gamma.column(0)
    for i in range(n):
        equation({var(i, k): g2[k] for k in range(n)}, g1[i])
    for m1, m2 in zip(r1.mu, r2.mu):
        for i in range(n):
            for j in range(n):
                coeffs: dict = {}
                for k in range(n):
                    coeffs[var(i, k)] = coeffs.get(var(i, k), zero) + m2[k, j]
                    coeffs[var(k, j)] = coeffs.get(var(k, j), zero) - m1[i, k]
                equation(coeffs, zero)
    if n == 0:
        return Matrix.identity(ring.fraction_field(), 0)
    sol = solve_linear_system(Matrix(ring, len(rows), n * n, rows), rhs)
    if sol is None:
        return None
    x, nullity = sol
    assert nullity == 0, "conjugator of minimal representations must be unique"
    fld = ring.fraction_field()
    S = Matrix(fld, n, n, [x[i * n:(i + 1) * n] for i in range(n)])
    if invert_over_field(S) is None:
        return None
    return S


def k_isomorphic(r1: LinearRepresentation, r2: LinearRepresentation) -> bool:
    """Whether the F-conjugator exists and is invertible over K itself."""
    S = conjugator(r1, r2)
    if S is None:
        return False
    fld = S.ring
    if not all(fld.in_base(x) for row in S.data for x in row):
        return False
    SK = S.map(fld.to_base, ring=r1.ring)
    return r1.ring.is_unit(determinant(SK))
