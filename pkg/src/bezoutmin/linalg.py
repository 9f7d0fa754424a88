"""Exact matrix algebra over a Bezout ring and its fraction field.

Row-vector convention throughout: a vector is a 1 x n matrix (or a plain
sequence where noted) and a matrix acts on the right of row vectors.
"""
from __future__ import annotations

from dataclasses import dataclass
from typing import Any, Sequence

from .scalars import BezoutRing, Field, InexactDivision


class ShapeMismatch(ValueError):
    pass


class BothZero(ValueError):
    pass


class NotInModule(ArithmeticError):
    """A vector that was expected in the row module of a stair matrix is not."""


class NotUnimodular(ArithmeticError):
    pass


class Matrix:
    """Immutable dense matrix whose entries all come from ``ring``.

    ``ring`` is a :class:`BezoutRing` or a :class:`Field`; it supplies the
    zero/one needed for identities and for empty products.
    """

    __slots__ = ("ring", "rows", "cols", "data")

    def __init__(self, ring, rows: int, cols: int, data: Sequence[Sequence[Any]]):
        data = tuple(tuple(r) for r in data)
        if len(data) != rows or any(len(r) != cols for r in data):
            raise ShapeMismatch(f"entries do not form a {rows}x{cols} matrix")
        object.__setattr__(self, "ring", ring)
        object.__setattr__(self, "rows", rows)
        object.__setattr__(self, "cols", cols)
        object.__setattr__(self, "data", data)

    def __setattr__(self, key, value):
        raise AttributeError("Matrix is immutable")

    @classmethod
    def from_rows(cls, ring, rows: Sequence[Sequence[Any]], cols: int | None = None) -> "Matrix":
        rows = [list(r) for r in rows]
        if cols is None:
            if not rows:
                raise ShapeMismatch("column count required for an empty matrix")
            cols = len(rows[0])
        return cls(ring, len(rows), cols, rows)

    @classmethod
    def zeros(cls, ring, rows: int, cols: int) -> "Matrix":
        return cls(ring, rows, cols, [[ring.zero] * cols for _ in range(rows)])

    @classmethod
    def identity(cls, ring, n: int) -> "Matrix":
        return cls(ring, n, n, [[ring.one if i == j else ring.zero for j in range(n)] for i in range(n)])

    @classmethod
    def row_vector(cls, ring, entries: Sequence[Any]) -> "Matrix":
        return cls(ring, 1, len(entries), [list(entries)])

    @classmethod
    def column_vector(cls, ring, entries: Sequence[Any]) -> "Matrix":
        return cls(ring, len(entries), 1, [[e] for e in entries])

    @property
    def shape(self) -> tuple[int, int]:
        return self.rows, self.cols

    def __getitem__(self, ij):
        i, j = ij
        return self.data[i][j]

    def row(self, i: int) -> tuple:
        return self.data[i]

    def column(self, j: int) -> tuple:
        return tuple(r[j] for r in self.data)

    def to_lists(self) -> list[list]:
        return [list(r) for r in self.data]

    @property
    def T(self) -> "Matrix":
        if not self.rows:
            return Matrix(self.ring, self.cols, 0, [[] for _ in range(self.cols)])
        return Matrix(self.ring, self.cols, self.rows, [list(c) for c in zip(*self.data)])

    def map(self, fn, ring=None) -> "Matrix":
        return Matrix(ring if ring is not None else self.ring, self.rows, self.cols, [[fn(x) for x in r] for r in self.data])

    def __matmul__(self, other: "Matrix") -> "Matrix":
        if self.cols != other.rows:
            raise ShapeMismatch(f"cannot multiply {self.shape} by {other.shape}")
        zero = self.ring.zero
        cols = other.column_tuples()
        out = []
        for r in self.data:
            row = []
            for c in cols:
                acc = zero
                for x, y in zip(r, c):
                    if x and y:
                        acc = acc + x * y
                row.append(acc)
            out.append(row)
        return Matrix(self.ring, self.rows, other.cols, out)

    def column_tuples(self) -> list[tuple]:
        return [self.column(j) for j in range(self.cols)]

    def __add__(self, other: "Matrix") -> "Matrix":
        if self.shape != other.shape:
            raise ShapeMismatch(f"cannot add {self.shape} and {other.shape}")
        return Matrix(self.ring, self.rows, self.cols, [[x + y for x, y in zip(a, b)] for a, b in zip(self.data, other.data)])

    def __neg__(self) -> "Matrix":
        return self.map(lambda x: -x)

    def __sub__(self, other: "Matrix") -> "Matrix":
        return self + (-other)

    def scale(self, c) -> "Matrix":
        return self.map(lambda x: c * x)

    def __eq__(self, other):
        if not isinstance(other, Matrix):
            return NotImplemented
        return self.shape == other.shape and self.data == other.data

    def __hash__(self):
        return hash((self.shape, self.data))

    def is_zero(self) -> bool:
        return all(not x for r in self.data for x in r)

    def vstack(self, other: "Matrix") -> "Matrix":
        if self.cols != other.cols:
            raise ShapeMismatch(f"cannot stack {self.shape} over {other.shape}")
        return Matrix(self.ring, self.rows + other.rows, self.cols, self.data + other.data)

    def hstack(self, other: "Matrix") -> "Matrix":
        if self.rows != other.rows:
            raise ShapeMismatch(f"cannot join {self.shape} beside {other.shape}")
        return Matrix(self.ring, self.rows, self.cols + other.cols, [a + b for a, b in zip(self.data, other.data)])

    def submatrix(self, rows: Sequence[int], cols: Sequence[int]) -> "Matrix":
        return Matrix(self.ring, len(rows), len(cols), [[self.data[i][j] for j in cols] for i in rows])

    def kron(self, other: "Matrix") -> "Matrix":
        """Kronecker product; row pair ``(i, k)`` maps to ``i * other.rows + k`` (same for columns)."""
        data = [
            [self.data[i][j] * other.data[k][l] for j in range(self.cols) for l in range(other.cols)]
            for i in range(self.rows)
            for k in range(other.rows)
        ]
        return Matrix(self.ring, self.rows * other.rows, self.cols * other.cols, data)

    def direct_sum(self, other: "Matrix") -> "Matrix":
        zero = self.ring.zero
        top = [list(r) + [zero] * other.cols for r in self.data]
        bottom = [[zero] * self.cols + list(r) for r in other.data]
        return Matrix(self.ring, self.rows + other.rows, self.cols + other.cols, top + bottom)

    def __repr__(self):
        body = "; ".join(", ".join(str(x) for x in r) for r in self.data)
        return f"Matrix({self.rows}x{self.cols}: [{body}])"


def to_field(M: Matrix, field: Field | None = None) -> Matrix:
    field = field or M.ring.fraction_field()
    return M.map(field.embed, ring=field)


# --------------------------------------------------------------------------
# determinants and rank (fraction-free, valid in any integral domain)


def _bareiss(rows: list[list], ring) -> tuple[int, Any, list[int]]:
    """Fraction-free elimination in place.

    Returns ``(rank, signed last pivot, pivot columns)``; for a square
    full-rank matrix the second value is the determinant.
    """
    m = len(rows)
    n = len(rows[0]) if rows else 0
    prev = ring.one
    sign = 1
    r = 0
    pivots = []
    for c in range(n):
        if r == m:
            break
        p = next((i for i in range(r, m) if rows[i][c]), None)
        if p is None:
            continue
        if p != r:
            rows[r], rows[p] = rows[p], rows[r]
            sign = -sign
        piv = rows[r][c]
        for i in range(r + 1, m):
            a = rows[i][c]
            rows[i] = [
                ring.exact_divide(piv * rows[i][j] - a * rows[r][j], prev) if j > c else ring.zero
                for j in range(n)
            ]
        prev = piv
        pivots.append(c)
        r += 1
    det = prev if sign > 0 else -prev
    return r, det, pivots


def determinant(M: Matrix):
    if M.rows != M.cols:
        raise ShapeMismatch("determinant of a non-square matrix")
    ring = M.ring
    if M.rows == 0:
        return ring.one
    rank, det, _ = _bareiss(M.to_lists(), ring)
    return det if rank == M.rows else ring.zero


def rank_over_fractions(M: Matrix) -> int:
    """Rank of ``M`` with entries read in the fraction field."""
    if M.rows == 0 or M.cols == 0:
        return 0
    ring = M.ring
    if isinstance(ring, Field):
        return len(_field_echelon(M.to_lists(), ring)[1])
    return _bareiss(M.to_lists(), ring)[0]


# --------------------------------------------------------------------------
# the 2x2 Gauss step and triangularization


@dataclass(frozen=True)
class ExtendedGcdStep:
    """Unimodular ``G = [[alpha, beta], [gamma, delta]]`` with ``G (a, b)^t = (d, 0)^t``."""

    alpha: Any
    beta: Any
    gamma: Any
    delta: Any
    d: Any

    def matrix(self, ring) -> Matrix:
        return Matrix(ring, 2, 2, [[self.alpha, self.beta], [self.gamma, self.delta]])


def gauss2(ring: BezoutRing, a, b) -> ExtendedGcdStep:
    if ring.is_zero(a) and ring.is_zero(b):
        raise BothZero("gauss2 needs a nonzero entry")
    if ring.is_zero(a):
        return ExtendedGcdStep(ring.zero, ring.one, ring.one, ring.zero, b)
    if ring.is_zero(b):
        u = ring.canonical_unit(a)
        return ExtendedGcdStep(u, ring.zero, ring.zero, ring.one, u * a)
    d, alpha, beta = ring.extended_gcd(a, b)
    return ExtendedGcdStep(
        alpha, beta, -ring.exact_divide(b, d), ring.exact_divide(a, d), d
    )


@dataclass(frozen=True)
class TriangResult:
    G: Matrix
    T: Matrix
    zero_rows: int

    @property
    def rank(self) -> int:
        return self.T.rows


def _combine(rows: list[list], p: int, q: int, step: ExtendedGcdStep) -> None:
    rp, rq = rows[p], rows[q]
    rows[p] = [step.alpha * x + step.beta * y for x, y in zip(rp, rq)]
    rows[q] = [step.gamma * x + step.delta * y for x, y in zip(rp, rq)]


def triang(M: Matrix) -> TriangResult:
    """Stair form ``T`` and unimodular ``G`` with ``G @ M == T`` over zero rows.

    Columns are swept left to right; below the current pivot row every lower
    row is folded in with a :func:`gauss2` step, in index order.  Pivots are
    made canonical but entries above pivots are left alone.
    """
    ring = M.ring
    m, n = M.shape
    W = M.to_lists()
    G = Matrix.identity(ring, m).to_lists()
    p = 0
    for j in range(n):
        if p == m:
            break
        for q in range(p + 1, m):
            a, b = W[p][j], W[q][j]
            if ring.is_zero(b):
                continue
            step = gauss2(ring, a, b)
            _combine(W, p, q, step)
            _combine(G, p, q, step)
        if ring.is_zero(W[p][j]):
            continue
        u = ring.canonical_unit(W[p][j])
        if u != ring.one:
            W[p] = [u * x for x in W[p]]
            G[p] = [u * x for x in G[p]]
        p += 1
    return TriangResult(
        G=Matrix(ring, m, m, G),
        T=Matrix(ring, p, n, W[:p]),
        zero_rows=m - p,
    )


def pivot_columns(T: Matrix) -> list[int]:
    """Leftmost nonzero column of each row; raises if a row is zero."""
    out = []
    for r in T.data:
        j = next((j for j, x in enumerate(r) if x), None)
        if j is None:
            raise ValueError("stair matrix has a zero row")
        out.append(j)
    return out


def is_stair(T: Matrix) -> bool:
    try:
        piv = pivot_columns(T)
    except ValueError:
        return False
    return all(a < b for a, b in zip(piv, piv[1:]))


# --------------------------------------------------------------------------
# solving


def solve_stair(T: Matrix, w: Sequence[Any]) -> list:
    """Coefficients ``c`` in K with ``c @ T == w``, by forward substitution."""
    ring = T.ring
    w = list(w)
    if len(w) != T.cols:
        raise ShapeMismatch(f"vector of length {len(w)} against {T.cols} columns")
    residue = w
    coeffs = []
    for row, j in zip(T.data, pivot_columns(T)):
        try:
            c = ring.exact_divide(residue[j], row[j])
        except InexactDivision as exc:
            raise NotInModule(str(exc)) from exc
        coeffs.append(c)
        if c:
            residue = [x - c * y for x, y in zip(residue, row)]
    if any(residue):
        raise NotInModule("nonzero residue after forward substitution")
    return coeffs


def _field_echelon(rows: list[list], field) -> tuple[list[list], list[int]]:
    """Reduced row echelon form over a field (in place on ``rows``)."""
    m = len(rows)
    n = len(rows[0]) if rows else 0
    r = 0
    pivots = []
    for c in range(n):
        if r == m:
            break
        p = next((i for i in range(r, m) if rows[i][c]), None)
        if p is None:
            continue
        rows[r], rows[p] = rows[p], rows[r]
        inv = field.one / rows[r][c]
        rows[r] = [inv * x for x in rows[r]]
        for i in range(m):
            if i != r and rows[i][c]:
                f = rows[i][c]
                rows[i] = [x - f * y for x, y in zip(rows[i], rows[r])]
        pivots.append(c)
        r += 1
    return rows[:r], pivots


def solve_left(A: Matrix, b: Sequence[Any]) -> list | None:
    """Some ``x`` over the fraction field with ``x @ A == b``, or None.

    ``A`` may be over the ring or over its fraction field; the answer is a
    list of fraction-field elements.
    """
    sols = solve_linear_system(A.T, list(b))
    return None if sols is None else sols[0]


def solve_linear_system(A: Matrix, b: Sequence[Any]) -> tuple[list, int] | None:
    """Solve ``A @ x == b`` over the fraction field.

    Returns ``(particular solution, nullity)`` or None when inconsistent.
    """
    if isinstance(A.ring, Field):
        field, emb = A.ring, (lambda x: x)
    else:
        field = A.ring.fraction_field()
        emb = field.embed
    if len(b) != A.rows:
        raise ShapeMismatch(f"right-hand side of length {len(b)} against {A.rows} rows")
    aug = [[emb(x) for x in r] + [emb(y)] for r, y in zip(A.data, b)]
    if not aug:
        return [field.zero] * A.cols, A.cols
    ech, pivots = _field_echelon(aug, field)
    if pivots and pivots[-1] == A.cols:
        return None
    x = [field.zero] * A.cols
    for row, c in zip(ech, pivots):
        x[c] = row[-1]
    return x, A.cols - len(pivots)


@dataclass(frozen=True)
class Independent:
    pass


@dataclass(frozen=True)
class Member:
    coefficients: tuple


@dataclass(frozen=True)
class FractionalMember:
    alpha: Any
    coefficients: tuple


MembershipOutcome = Independent | Member | FractionalMember


def membership(basis: Matrix, v: Sequence[Any]) -> MembershipOutcome:
    """Classify ``v`` against the rows of ``basis`` (assumed F-independent).

    ``Member(c)`` means ``v == c @ basis`` over K.  ``FractionalMember(a, c)``
    means ``a * v == c @ basis`` where ``a`` is the least common denominator
    of the fraction-field solution and is not a unit.
    """
    ring = basis.ring
    v = list(v)
    if len(v) != basis.cols:
        raise ShapeMismatch(f"vector of length {len(v)} against basis width {basis.cols}")
    if basis.rows == 0:
        return Member(()) if not any(v) else Independent()
    field = ring.fraction_field()
    x = solve_left(basis, v)
    if x is None:
        return Independent()
    alpha = ring.one
    for c in x:
        alpha = ring.lcm(alpha, field.parts(c)[1])
    coeffs = tuple(field.to_base(c * field.embed(alpha)) for c in x)
    if ring.is_unit(alpha):
        return Member(coeffs)
    return FractionalMember(alpha, coeffs)


# --------------------------------------------------------------------------
# inverses


def adjugate(M: Matrix) -> Matrix:
    ring = M.ring
    n = M.rows
    if n == 1:
        return Matrix.identity(ring, 1)
    out = [[ring.zero] * n for _ in range(n)]
    for i in range(n):
        for j in range(n):
            minor = M.submatrix([r for r in range(n) if r != i], [c for c in range(n) if c != j])
            cof = determinant(minor)
            out[j][i] = cof if (i + j) % 2 == 0 else -cof
    return Matrix(ring, n, n, out)


def invert_unimodular(G: Matrix) -> Matrix:
    """Exact inverse over K via adjugate / determinant."""
    if G.rows != G.cols:
        raise ShapeMismatch("only square matrices are invertible")
    ring = G.ring
    det = determinant(G)
    if not ring.is_unit(det):
        raise NotUnimodular(f"determinant {det} is not a unit")
    inv = ring.inverse(det)
    return adjugate(G).map(lambda x: inv * x) if G.rows else G


def invert_over_field(M: Matrix) -> Matrix | None:
    """Inverse over the fraction field, or None if singular."""
    n = M.rows
    if n != M.cols:
        raise ShapeMismatch("only square matrices are invertible")
    field = M.ring if isinstance(M.ring, Field) else M.ring.fraction_field()
    A = M if isinstance(M.ring, Field) else to_field(M, field)
    aug = [list(r) + [field.one if i == j else field.zero for j in range(n)] for i, r in enumerate(A.data)]
    ech, pivots = _field_echelon(aug, field)
    if pivots != list(range(n)):
        return None
    return Matrix(field, n, n, [r[n:] for r in ech])
