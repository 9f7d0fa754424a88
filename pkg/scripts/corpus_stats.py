"""Minimize a seeded random corpus over Z and Q and summarize what happened.

    python scripts/corpus_stats.py --size 500 --max-dim 5
"""
import argparse
import time
from collections import Counter
from dataclasses import fields

from bezoutmin.automata import behavior, hankel_rank, words_up_to
from bezoutmin.corpus import CorpusConfig, random_corpus
from bezoutmin.minimization import prefix, minimize
from bezoutmin.scalars import INT, RAT


def run(cfg: CorpusConfig, ring, check_length: int):
    t0 = time.perf_counter()
    shrink = Counter()
    with_z = 0
    failures = 0
    for r in random_corpus(cfg, ring):
        pr = prefix(r)
        m = minimize(r)
        with_z += bool(pr.Z)
        shrink[r.dim - m.dim] += 1
        ok = m.dim == hankel_rank(r) and all(
            behavior(m, w) == behavior(r, w) for w in words_up_to(r.alphabet, check_length)
        )
        failures += not ok
    elapsed = time.perf_counter() - t0
    print(f"[{ring.name}] {cfg.size} automata in {elapsed:.2f}s; "
          f"nonempty Z: {with_z}; failures: {failures}")
    print(f"[{ring.name}] states removed -> count: {dict(sorted(shrink.items()))}")


def main():
    ap = argparse.ArgumentParser(description=__doc__.splitlines()[0])
    defaults = CorpusConfig()
    for f in fields(CorpusConfig):
        ap.add_argument("--" + f.name.replace("_", "-"), type=type(getattr(defaults, f.name)),
                        default=getattr(defaults, f.name))
    ap.add_argument("--check-length", type=int, default=4)
    args = ap.parse_args()
    cfg = CorpusConfig(**{f.name: getattr(args, f.name) for f in fields(CorpusConfig)})
    for ring in (INT, RAT):
        run(cfg, ring, args.check_length)


if __name__ == "__main__":
    main()
