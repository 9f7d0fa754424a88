"""Two minimal automata with the same series that are not isomorphic over the ring.

    python scripts/counterexample.py 2 3 5
"""
import argparse

from bezoutmin.automata import behavior
from bezoutmin.corpus import paper_a1, paper_a2
from bezoutmin.linalg import invert_over_field
from bezoutmin.minimization import conjugator, equivalent, k_isomorphic, minimize
from bezoutmin.scalars import FRACPOLY, INT, RAT


def report(x, ring):
    a1, a2 = paper_a1(x, ring), paper_a2(x, ring)
    S = conjugator(a1, a2)
    Si = invert_over_field(S)
    fmt = S.ring.format
    print(f"ring={ring.name} x={ring.format(x)}")
    print(f"  behavior(a): {ring.format(behavior(a1, 'a'))} / {ring.format(behavior(a2, 'a'))}")
    print(f"  equivalent: {equivalent(a1, a2)}")
    print(f"  minimized dims: {minimize(a1).dim}, {minimize(a2).dim}")
    print(f"  conjugator S: {[[fmt(v) for v in r] for r in S.data]}")
    print(f"  S^-1:         {[[fmt(v) for v in r] for r in Si.data]}")
    print(f"  isomorphic over the ring: {k_isomorphic(a1, a2)}")


def main():
    ap = argparse.ArgumentParser(description=__doc__.splitlines()[0])
    ap.add_argument("xs", nargs="*", type=int, default=[2, 3, 5])
    args = ap.parse_args()
    for x in args.xs:
        report(x, INT)
    report(2, RAT)
    report(FRACPOLY.parse("X^(1/2)"), FRACPOLY)


if __name__ == "__main__":
    main()
