"""Reference automata and seeded random corpora for experiments and tests."""
from __future__ import annotations

import random
from dataclasses import dataclass

from .automata import Alphabet, LinearRepresentation
from .scalars import INT, BezoutRing


def paper_a1(x, ring: BezoutRing = INT) -> LinearRepresentation:
    """((1 0), [[0 x], [0 0]], (0 1)^t): recognizes x.a"""
    return LinearRepresentation.build(ring, "a", [1, 0], [[[0, x], [0, 0]]], [0, 1])


def paper_a2(x, ring: BezoutRing = INT) -> LinearRepresentation:
    """((x 0), [[0 1], [0 0]], (0 1)^t): same series as :func:`paper_a1`."""
    return LinearRepresentation.build(ring, "a", [x, 0], [[[0, 1], [0, 0]]], [0, 1])


def unit_series(ring: BezoutRing = INT, alphabet="a") -> LinearRepresentation:
    """One state, every word has coefficient 1."""
    alphabet = Alphabet(tuple(alphabet))
    return LinearRepresentation.build(ring, alphabet, [1], [[[1]]] * len(alphabet), [1])


@dataclass(frozen=True)
class CorpusConfig:
    size: int = 200
    max_dim: int = 4
    max_letters: int = 2
    low: int = -3
    high: int = 3
    # chance that an entry is forced to zero; sparse automata are more often non-minimal
    sparsity: float = 0.4
    seed: int = 20240607


def random_representation(rng: random.Random, cfg: CorpusConfig, ring: BezoutRing = INT) -> LinearRepresentation:
    n = rng.randint(1, cfg.max_dim)
    k = rng.randint(1, cfg.max_letters)
    alphabet = Alphabet(tuple("ab"[:k] if k <= 2 else (f"s{i}" for i in range(k))))

    def entry():
        if rng.random() < cfg.sparsity:
            return 0
        return rng.randint(cfg.low, cfg.high)

    lam = [entry() for _ in range(n)]
    mu = [[[entry() for _ in range(n)] for _ in range(n)] for _ in range(k)]
    gamma = [entry() for _ in range(n)]
    return LinearRepresentation.build(ring, alphabet, lam, mu, gamma)


def random_corpus(cfg: CorpusConfig = CorpusConfig(), ring: BezoutRing = INT) -> list[LinearRepresentation]:
    """``cfg.size`` integer-entry automata; same seed gives the same list in any ring."""
    rng = random.Random(cfg.seed)
    return [random_representation(rng, cfg, ring) for _ in range(cfg.size)]
