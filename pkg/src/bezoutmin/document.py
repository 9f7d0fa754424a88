"""JSON document format for automata.

Scalars are stored as strings in the ring's own syntax so that arbitrary
precision survives the round trip::

    {
      "ring": "int",
      "alphabet": ["a"],
      "dim": 2,
      "lambda": ["1", "0"],
      "mu": {"a": [["0", "2"], ["0", "0"]]},
      "gamma": ["0", "1"]
    }
"""
from __future__ import annotations

import json
from dataclasses import dataclass
from pathlib import Path

from .automata import Alphabet, LinearRepresentation
from .linalg import Matrix
from .scalars import RINGS, ScalarParseError, ring_by_name


class DocumentError(ValueError):
    pass


@dataclass(frozen=True)
class AutomatonDocument:
    ring: str
    alphabet: tuple[str, ...]
    dim: int
    lam: tuple[str, ...]
    mu: tuple[tuple[str, tuple[tuple[str, ...], ...]], ...]
    gamma: tuple[str, ...]

    def mu_dict(self) -> dict:
        return {s: [list(r) for r in m] for s, m in self.mu}


def _strings(value, what: str) -> tuple[str, ...]:
    if not isinstance(value, list) or not all(isinstance(x, str) for x in value):
        raise DocumentError(f"{what} must be a list of scalar strings")
    return tuple(value)


def document_from_dict(obj) -> AutomatonDocument:
    if not isinstance(obj, dict):
        raise DocumentError("document must be a JSON object")
    required = {"ring", "alphabet", "dim", "lambda", "mu", "gamma"}
    missing = required - obj.keys()
    if missing:
        raise DocumentError(f"missing keys: {sorted(missing)}")
    extra = obj.keys() - required
    if extra:
        raise DocumentError(f"unexpected keys: {sorted(extra)}")
    ring = obj["ring"]
    if ring not in RINGS:
        raise DocumentError(f"unknown ring {ring!r}")
    alphabet = _strings(obj["alphabet"], "alphabet")
    if not alphabet or len(set(alphabet)) != len(alphabet) or "" in alphabet:
        raise DocumentError("alphabet must be a nonempty list of distinct nonempty symbols")
    if any("," in s for s in alphabet):
        raise DocumentError("symbol names may not contain ','")
    dim = obj["dim"]
    if not isinstance(dim, int) or isinstance(dim, bool) or dim < 0:
        raise DocumentError("dim must be a non-negative integer")
    lam = _strings(obj["lambda"], "lambda")
    gamma = _strings(obj["gamma"], "gamma")
    if len(lam) != dim or len(gamma) != dim:
        raise DocumentError(f"lambda and gamma must have length {dim}")
    mu = obj["mu"]
    if not isinstance(mu, dict) or set(mu) != set(alphabet):
        raise DocumentError("mu must map every alphabet symbol (and nothing else) to a matrix")
    mats = []
    for s in alphabet:
        m = mu[s]
        if not isinstance(m, list) or len(m) != dim:
            raise DocumentError(f"mu[{s!r}] must have {dim} rows")
        rows = tuple(_strings(r, f"mu[{s!r}] row") for r in m)
        if any(len(r) != dim for r in rows):
            raise DocumentError(f"mu[{s!r}] must be {dim}x{dim}")
        mats.append((s, rows))
    doc = AutomatonDocument(ring, alphabet, dim, lam, tuple(mats), gamma)
    _parse_scalars(doc)
    return doc


def document_to_dict(doc: AutomatonDocument) -> dict:
    return {
        "ring": doc.ring,
        "alphabet": list(doc.alphabet),
        "dim": doc.dim,
        "lambda": list(doc.lam),
        "mu": doc.mu_dict(),
        "gamma": list(doc.gamma),
    }


def loads(text: str) -> AutomatonDocument:
    try:
        obj = json.loads(text)
    except json.JSONDecodeError as exc:
        raise DocumentError(f"invalid JSON: {exc}") from exc
    return document_from_dict(obj)


def dumps(doc: AutomatonDocument) -> str:
    """JSON with one matrix row per line; the output is still plain JSON."""
    enc = lambda v: json.dumps(v, ensure_ascii=False)  # noqa: E731
    mats = []
    for s, m in doc.mu:
        if m:
            rows = ",\n".join(f"      {enc(list(r))}" for r in m)
            mats.append(f"    {enc(s)}: [\n{rows}\n    ]")
        else:
            mats.append(f"    {enc(s)}: []")
    return (
        "{\n"
        f'  "ring": {enc(doc.ring)},\n'
        f'  "alphabet": {enc(list(doc.alphabet))},\n'
        f'  "dim": {doc.dim},\n'
        f'  "lambda": {enc(list(doc.lam))},\n'
        '  "mu": {\n' + ",\n".join(mats) + "\n  },\n"
        f'  "gamma": {enc(list(doc.gamma))}\n'
        "}\n"
    )


def load(path) -> AutomatonDocument:
    try:
        text = Path(path).read_text(encoding="utf-8")
    except OSError as exc:
        raise DocumentError(f"cannot read {path}: {exc.strerror}") from exc
    return loads(text)


def dump(doc: AutomatonDocument, path) -> None:
    Path(path).write_text(dumps(doc), encoding="utf-8")


def _parse_scalars(doc: AutomatonDocument):
    ring = ring_by_name(doc.ring)
    try:
        lam = [ring.parse(x) for x in doc.lam]
        gamma = [ring.parse(x) for x in doc.gamma]
        mu = [[[ring.parse(x) for x in row] for row in m] for _, m in doc.mu]
    except ScalarParseError as exc:
        raise DocumentError(f"bad scalar for ring {doc.ring}: {exc}") from exc
    return ring, lam, mu, gamma


def to_representation(doc: AutomatonDocument) -> LinearRepresentation:
    ring, lam, mu, gamma = _parse_scalars(doc)
    n = doc.dim
    return LinearRepresentation(
        ring,
        Alphabet(doc.alphabet),
        Matrix(ring, 1, n, [lam]),
        tuple(Matrix(ring, n, n, m) for m in mu),
        Matrix(ring, n, 1, [[g] for g in gamma]),
    )


def from_representation(rep: LinearRepresentation) -> AutomatonDocument:
    fmt = rep.ring.format
    return AutomatonDocument(
        ring=rep.ring.name,
        alphabet=rep.alphabet.symbols,
        dim=rep.dim,
        lam=tuple(fmt(x) for x in rep.lam.row(0)),
        mu=tuple(
            (s, tuple(tuple(fmt(x) for x in row) for row in m.data))
            for s, m in zip(rep.alphabet.symbols, rep.mu)
        ),
        gamma=tuple(fmt(x) for x in rep.gamma.column(0)),
    )


def check_canonical(doc: AutomatonDocument) -> None:
    """Every scalar string must be the ring's canonical spelling of its value."""
    ring = ring_by_name(doc.ring)
    cells = list(doc.lam) + list(doc.gamma) + [x for _, m in doc.mu for r in m for x in r]
    for s in cells:
        canon = ring.format(ring.parse(s))
        if canon != s:
            raise DocumentError(f"scalar {s!r} is not canonical (expected {canon!r})")
