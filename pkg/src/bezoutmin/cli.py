"""Command-line front end.

Exit codes: 0 success / equivalent / isomorphic, 1 negative verdict,
2 parse error, 3 unknown symbol, 4 step budget exceeded, 5 precondition
violation.  Results go to stdout, diagnostics to stderr.
"""
from __future__ import annotations

import argparse
import sys

from . import document as docio
from .automata import AlphabetMismatch, RingMismatch, UnknownSymbol, behavior, hadamard
from .linalg import Matrix
from .minimization import (
    BudgetExceeded,
    DimensionMismatch,
    NotMinimal,
    StepBudget,
    conjugator,
    distinguishing_word,
    is_minimal,
    k_isomorphic,
    left_reduction,
    minimize,
    prefix,
    right_reduction,
)

EXIT_OK, EXIT_NEGATIVE, EXIT_PARSE, EXIT_SYMBOL, EXIT_BUDGET, EXIT_PRECONDITION = range(6)

EPSILON_DISPLAY = "ε"


class PreconditionError(Exception):
    pass


def _load(path, args):
    doc = docio.load(path)
    if args.ring_check:
        docio.check_canonical(doc)
    return docio.to_representation(doc)


def _write(rep, args, out):
    doc = docio.from_representation(rep)
    if args.ring_check:
        docio.check_canonical(doc)
        docio.loads(docio.dumps(doc))
    if args.out:
        docio.dump(doc, args.out)
    else:
        out.write(docio.dumps(doc))


def _budget(args) -> StepBudget:
    try:
        return StepBudget(args.max_steps)
    except ValueError as exc:
        raise PreconditionError(str(exc)) from exc


def _show_word(rep, w) -> str:
    return rep.alphabet.format_word(w, empty=EPSILON_DISPLAY)


def _show_set(rep, words) -> str:
    if not words:
        return "∅"
    return "{" + ", ".join(_show_word(rep, w) for w in words) + "}"


def _show_matrix(M: Matrix, fmt) -> list[str]:
    return [" ".join(fmt(x) for x in row) for row in M.data]


def _same_kind(r1, r2):
    if r1.ring != r2.ring:
        raise PreconditionError(f"rings differ: {r1.ring.name} vs {r2.ring.name}")
    if r1.alphabet != r2.alphabet:
        raise PreconditionError(
            f"alphabets differ: {list(r1.alphabet.symbols)} vs {list(r2.alphabet.symbols)}"
        )


def cmd_eval(args, out) -> int:
    rep = _load(args.file, args)
    word = rep.alphabet.parse_word(args.word)
    out.write(rep.ring.format(behavior(rep, word)) + "\n")
    return EXIT_OK


def cmd_minimize(args, out) -> int:
    rep = _load(args.file, args)
    reduce = {"left": left_reduction, "right": right_reduction, "full": minimize}[args.mode]
    small = reduce(rep, _budget(args))
    out.write(f"{rep.dim} -> {small.dim}\n")
    _write(small, args, out)
    return EXIT_OK


def cmd_equiv(args, out) -> int:
    r1, r2 = _load(args.file_a, args), _load(args.file_b, args)
    _same_kind(r1, r2)
    w = distinguishing_word(r1, r2)
    if w is None:
        out.write("equivalent\n")
        return EXIT_OK
    out.write("different\n")
    out.write(f"witness: {_show_word(r1, w)}\n")
    return EXIT_NEGATIVE


def cmd_iso(args, out) -> int:
    r1, r2 = _load(args.file_a, args), _load(args.file_b, args)
    _same_kind(r1, r2)
    for path, r in ((args.file_a, r1), (args.file_b, r2)):
        if not is_minimal(r):
            raise PreconditionError(f"{path} is not minimal over the fraction field")
    try:
        S = conjugator(r1, r2)
    except DimensionMismatch:
        S = None
    if S is None:
        out.write("not isomorphic over K (behaviors differ)\n")
        return EXIT_NEGATIVE
    iso = k_isomorphic(r1, r2)
    if iso:
        out.write("isomorphic over K\n")
    else:
        out.write("not isomorphic over K (conjugator requires fractions)\n")
    out.write("conjugator:\n")
    for line in _show_matrix(S, S.ring.format):
        out.write(line + "\n")
    return EXIT_OK if iso else EXIT_NEGATIVE


def cmd_hadamard(args, out) -> int:
    r1, r2 = _load(args.file_a, args), _load(args.file_b, args)
    _same_kind(r1, r2)
    _write(hadamard(r1, r2), args, out)
    return EXIT_OK


def cmd_info(args, out) -> int:
    rep = _load(args.file, args)
    pr = prefix(rep, _budget(args))
    out.write(f"ring: {rep.ring.name}\n")
    out.write(f"alphabet: {' '.join(rep.alphabet.symbols)}\n")
    out.write(f"dim: {rep.dim}\n")
    out.write(f"|X| = {len(pr.X)}, |Z| = {len(pr.Z)}\n")
    if rep.dim <= 6:
        out.write(f"X = {_show_set(rep, pr.X)}\n")
        out.write(f"Z = {_show_set(rep, [x for x in pr.X if x in pr.Z])}\n")
    return EXIT_OK


def build_parser() -> argparse.ArgumentParser:
    # global flags are accepted before or after the subcommand
    common = argparse.ArgumentParser(add_help=False)
    common.add_argument("--max-steps", type=int, default=argparse.SUPPRESS,
                        help="candidate-word budget for prefix computation (default 10000)")
    common.add_argument("--ring-check", action="store_true", default=argparse.SUPPRESS,
                        help="insist on canonical scalar spelling in every document")

    parser = argparse.ArgumentParser(
        prog="bezoutmin",
        description="Minimize and compare weighted automata over Bezout domains.",
        parents=[common],
    )
    sub = parser.add_subparsers(dest="command", required=True)

    p = sub.add_parser("eval", parents=[common], help="coefficient of a word")
    p.add_argument("file")
    p.add_argument("word", help='letters, comma-separated names, or "" for the empty word')
    p.set_defaults(func=cmd_eval)

    p = sub.add_parser("minimize", parents=[common], help="left, right or full reduction")
    p.add_argument("file")
    p.add_argument("--out", help="write the reduced document here instead of stdout")
    p.add_argument("--mode", choices=["left", "right", "full"], default="full")
    p.set_defaults(func=cmd_minimize)

    p = sub.add_parser("equiv", parents=[common], help="compare behaviors")
    p.add_argument("file_a")
    p.add_argument("file_b")
    p.set_defaults(func=cmd_equiv)

    p = sub.add_parser("iso", parents=[common], help="isomorphism over the coefficient ring")
    p.add_argument("file_a")
    p.add_argument("file_b")
    p.set_defaults(func=cmd_iso)

    p = sub.add_parser("hadamard", parents=[common], help="pointwise product automaton")
    p.add_argument("file_a")
    p.add_argument("file_b")
    p.add_argument("--out")
    p.set_defaults(func=cmd_hadamard)

    p = sub.add_parser("info", parents=[common], help="dimension and prefix-set summary")
    p.add_argument("file")
    p.set_defaults(func=cmd_info)
    return parser


def main(argv=None, out=None) -> int:
    out = out if out is not None else sys.stdout
    args = build_parser().parse_args(argv)
    # parent actions are shared with the subparsers, so defaults are applied here
    for key, default in (("max_steps", 10_000), ("ring_check", False)):
        if not hasattr(args, key):
            setattr(args, key, default)
    try:
        return args.func(args, out)
    except docio.DocumentError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_PARSE
    except UnknownSymbol as exc:
        print(f"error: unknown symbol {exc.args[0]!r}", file=sys.stderr)
        return EXIT_SYMBOL
    except BudgetExceeded as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_BUDGET
    except (PreconditionError, NotMinimal, AlphabetMismatch, RingMismatch) as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_PRECONDITION


if __name__ == "__main__":
    sys.exit(main())
