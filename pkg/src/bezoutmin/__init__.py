"""Exact minimization of weighted automata over integral Bezout domains."""
from .automata import (
    Alphabet,
    LinearRepresentation,
    behavior,
    direct_sum,
    hadamard,
    hankel_rank,
    transpose,
)
from .linalg import Matrix, membership, rank_over_fractions, solve_stair, triang
from .minimization import (
    StepBudget,
    conjugator,
    equivalent,
    k_isomorphic,
    left_reduction,
    minimize,
    prefix,
    right_reduction,
)
from .scalars import FRACPOLY, INT, POLY, RAT, ring_by_name

__all__ = [
    "Alphabet", "LinearRepresentation", "behavior", "direct_sum", "hadamard",
    "hankel_rank", "transpose", "Matrix", "membership", "rank_over_fractions",
    "solve_stair", "triang", "StepBudget", "conjugator", "equivalent",
    "k_isomorphic", "left_reduction", "minimize", "prefix", "right_reduction",
    "FRACPOLY", "INT", "POLY", "RAT", "ring_by_name",
]
