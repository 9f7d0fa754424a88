"""Linear representations (lambda, mu, gamma) of K-automata and their algebra."""
from __future__ import annotations

from dataclasses import dataclass
from itertools import product
from typing import Iterator, Mapping, Sequence

from .linalg import Matrix, ShapeMismatch, rank_over_fractions
from .scalars import BezoutRing

Word = tuple[int, ...]
EPSILON: Word = ()


class UnknownSymbol(KeyError):
    pass


class AlphabetMismatch(ValueError):
    pass


class RingMismatch(ValueError):
    pass


@dataclass(frozen=True)
class Alphabet:
    """Ordered, nonempty list of distinct symbol names.

    The order is the tie-break for word enumeration.
    """

    symbols: tuple[str, ...]

    def __post_init__(self):
        object.__setattr__(self, "symbols", tuple(self.symbols))
        if not self.symbols:
            raise ValueError("alphabet must be nonempty")
        if len(set(self.symbols)) != len(self.symbols):
            raise ValueError(f"duplicate symbols in {self.symbols}")
        if any(not s for s in self.symbols):
            raise ValueError("symbol names must be nonempty")

    def __len__(self):
        return len(self.symbols)

    def index(self, symbol: str) -> int:
        try:
            return self.symbols.index(symbol)
        except ValueError:
            raise UnknownSymbol(symbol) from None

    @property
    def single_char(self) -> bool:
        return all(len(s) == 1 for s in self.symbols)

    def parse_word(self, text: str) -> Word:
        """Concatenated letters for single-character alphabets, else comma-separated names."""
        if text == "":
            return EPSILON
        parts = list(text) if self.single_char else text.split(",")
        return tuple(self.index(p) for p in parts)

    def format_word(self, word: Word, empty: str = "") -> str:
        if not word:
            return empty
        sep = "" if self.single_char else ","
        return sep.join(self.symbols[i] for i in word)

    def coerce_word(self, word) -> Word:
        if isinstance(word, str):
            return self.parse_word(word)
        word = tuple(word)
        for i in word:
            if isinstance(i, str):
                return tuple(self.index(s) for s in word)
            if not 0 <= i < len(self.symbols):
                raise UnknownSymbol(i)
        return word


def word_key(word: Word) -> tuple[int, Word]:
    """Sort key: by length, then lexicographic in alphabet order."""
    return len(word), word


def words_up_to(alphabet: Alphabet, length: int) -> Iterator[Word]:
    for n in range(length + 1):
        yield from product(range(len(alphabet)), repeat=n)


@dataclass(frozen=True)
class LinearRepresentation:
    """The triple (lambda, mu, gamma): 1 x n, one n x n per symbol, n x 1."""

    ring: BezoutRing
    alphabet: Alphabet
    lam: Matrix
    mu: tuple[Matrix, ...]
    gamma: Matrix

    def __post_init__(self):
        n = self.lam.cols
        object.__setattr__(self, "mu", tuple(self.mu))
        if self.lam.rows != 1:
            raise ShapeMismatch(f"lambda must be a row vector, got {self.lam.shape}")
        if self.gamma.shape != (n, 1):
            raise ShapeMismatch(f"gamma must be {n}x1, got {self.gamma.shape}")
        if len(self.mu) != len(self.alphabet):
            raise ShapeMismatch("need exactly one mu matrix per symbol")
        for m in self.mu:
            if m.shape != (n, n):
                raise ShapeMismatch(f"mu matrices must be {n}x{n}, got {m.shape}")

    @classmethod
    def build(cls, ring: BezoutRing, alphabet, lam: Sequence, mu: Mapping[str, Sequence[Sequence]] | Sequence, gamma: Sequence):
        """Convenience constructor from nested lists; scalars are coerced into ``ring``."""
        if not isinstance(alphabet, Alphabet):
            alphabet = Alphabet(tuple(alphabet))
        n = len(lam)
        c = ring.coerce
        if isinstance(mu, Mapping):
            mu = [mu[s] for s in alphabet.symbols]
        mats = tuple(Matrix(ring, n, n, [[c(x) for x in row] for row in m]) for m in mu)
        return cls(
            ring,
            alphabet,
            Matrix(ring, 1, n, [[c(x) for x in lam]]),
            mats,
            Matrix(ring, n, 1, [[c(x)] for x in gamma]),
        )

    @property
    def dim(self) -> int:
        return self.lam.cols

    def mu_of(self, symbol: str) -> Matrix:
        return self.mu[self.alphabet.index(symbol)]

    def forward(self, word, start: Sequence | None = None) -> tuple:
        """Row vector ``lambda mu(word)`` (or ``start mu(word)``)."""
        word = self.alphabet.coerce_word(word)
        v = tuple(self.lam.row(0)) if start is None else tuple(start)
        for a in word:
            v = step_forward(v, self.mu[a], self.ring.zero)
        return v

    def __repr__(self):
        return f"LinearRepresentation(ring={self.ring.name}, alphabet={list(self.alphabet.symbols)}, dim={self.dim})"


def step_forward(v: Sequence, m: Matrix, zero) -> tuple:
    """``v @ m`` for a plain row tuple ``v``."""
    out = [zero] * m.cols
    for x, row in zip(v, m.data):
        if x:
            for j, y in enumerate(row):
                if y:
                    out[j] = out[j] + x * y
    return tuple(out)


def dot(u: Sequence, v: Sequence, zero):
    acc = zero
    for x, y in zip(u, v):
        if x and y:
            acc = acc + x * y
    return acc


def behavior(rep: LinearRepresentation, word) -> object:
    """The coefficient ``lambda mu(w) gamma`` of ``w`` in the recognized series."""
    return dot(rep.forward(word), rep.gamma.column(0), rep.ring.zero)


def _check_compatible(r1: LinearRepresentation, r2: LinearRepresentation) -> None:
    if r1.ring != r2.ring:
        raise RingMismatch(f"{r1.ring.name} vs {r2.ring.name}")
    if r1.alphabet != r2.alphabet:
        raise AlphabetMismatch(f"{r1.alphabet.symbols} vs {r2.alphabet.symbols}")


def hadamard(r1: LinearRepresentation, r2: LinearRepresentation) -> LinearRepresentation:
    """Kronecker construction whose behavior is the pointwise product."""
    _check_compatible(r1, r2)
    return LinearRepresentation(
        r1.ring,
        r1.alphabet,
        r1.lam.kron(r2.lam),
        tuple(a.kron(b) for a, b in zip(r1.mu, r2.mu)),
        r1.gamma.kron(r2.gamma),
    )


def direct_sum(r1: LinearRepresentation, r2: LinearRepresentation) -> LinearRepresentation:
    _check_compatible(r1, r2)
    return LinearRepresentation(
        r1.ring,
        r1.alphabet,
        r1.lam.hstack(r2.lam),
        tuple(a.direct_sum(b) for a, b in zip(r1.mu, r2.mu)),
        r1.gamma.vstack(r2.gamma),
    )


def scale(rep: LinearRepresentation, c) -> LinearRepresentation:
    """Representation of ``c`` times the series (scales lambda)."""
    return LinearRepresentation(rep.ring, rep.alphabet, rep.lam.scale(c), rep.mu, rep.gamma)


def transpose(rep: LinearRepresentation) -> LinearRepresentation:
    """(gamma^t, mu^t, lambda^t): recognizes the mirror series."""
    return LinearRepresentation(
        rep.ring, rep.alphabet, rep.gamma.T, tuple(m.T for m in rep.mu), rep.lam.T
    )


def conjugate(rep: LinearRepresentation, S: Matrix, S_inv: Matrix) -> LinearRepresentation:
    """(lambda S, S^-1 mu S, S^-1 gamma): an isomorphic copy of ``rep``."""
    return LinearRepresentation(
        rep.ring,
        rep.alphabet,
        rep.lam @ S,
        tuple(S_inv @ m @ S for m in rep.mu),
        S_inv @ rep.gamma,
    )


@dataclass(frozen=True)
class HankelBlock:
    rows: tuple[Word, ...]
    cols: tuple[Word, ...]
    entries: Matrix


def hankel_block(rep: LinearRepresentation, length: int) -> HankelBlock:
    """Hankel block ``H[u, v] = behavior(uv)`` on all words of length <= ``length``."""
    words = tuple(words_up_to(rep.alphabet, length))
    # forward vectors of every concatenation, built by extending prefixes
    fwd: dict[Word, tuple] = {EPSILON: tuple(rep.lam.row(0))}
    for w in words_up_to(rep.alphabet, 2 * length):
        if w:
            fwd[w] = step_forward(fwd[w[:-1]], rep.mu[w[-1]], rep.ring.zero)
    g = rep.gamma.column(0)
    zero = rep.ring.zero
    data = [[dot(fwd[u + v], g, zero) for v in words] for u in words]
    return HankelBlock(words, words, Matrix(rep.ring, len(words), len(words), data))


def hankel_rank(rep: LinearRepresentation, length: int | None = None) -> int:
    """Fraction-field rank of the Hankel block; defaults to ``length = rep.dim``."""
    if length is None:
        length = rep.dim
    return rank_over_fractions(hankel_block(rep, length).entries)
