import itertools
from fractions import Fraction

import pytest
from hypothesis import strategies as st

from bezoutmin.automata import LinearRepresentation
from bezoutmin.corpus import paper_a1, paper_a2
from bezoutmin.linalg import Matrix
from bezoutmin.scalars import INT

small_ints = st.integers(-9, 9)


@st.composite
def int_matrices(draw, max_rows=5, max_cols=5, elements=small_ints):
    m = draw(st.integers(0, max_rows))
    n = draw(st.integers(1, max_cols))
    rows = draw(st.lists(st.lists(elements, min_size=n, max_size=n), min_size=m, max_size=m))
    return Matrix(INT, m, n, rows)


@st.composite
def representations(draw, ring=INT, max_dim=3, max_letters=2, elements=st.integers(-3, 3)):
    n = draw(st.integers(0, max_dim))
    k = draw(st.integers(1, max_letters))
    vec = st.lists(elements, min_size=n, max_size=n)
    lam = draw(vec)
    mu = [draw(st.lists(vec, min_size=n, max_size=n)) for _ in range(k)]
    gamma = draw(vec)
    return LinearRepresentation.build(ring, "ab"[:k], lam, mu, gamma)


def leibniz_det(rows):
    """Determinant by the permutation expansion (oracle, independent of Bareiss)."""
    n = len(rows)
    total = 0
    for perm in itertools.permutations(range(n)):
        inversions = sum(1 for i in range(n) for j in range(i + 1, n) if perm[i] > perm[j])
        term = -1 if inversions % 2 else 1
        for i, p in enumerate(perm):
            term *= rows[i][p]
        total += term
    return total


def fraction_rank(rows):
    """Rank by textbook Gaussian elimination over Fraction (oracle)."""
    rows = [[Fraction(x) for x in r] for r in rows]
    rank = 0
    ncols = len(rows[0]) if rows else 0
    for c in range(ncols):
        piv = next((i for i in range(rank, len(rows)) if rows[i][c] != 0), None)
        if piv is None:
            continue
        rows[rank], rows[piv] = rows[piv], rows[rank]
        for i in range(len(rows)):
            if i != rank and rows[i][c] != 0:
                f = rows[i][c] / rows[rank][c]
                rows[i] = [a - f * b for a, b in zip(rows[i], rows[rank])]
        rank += 1
    return rank


@pytest.fixture
def a1():
    return paper_a1(2)


@pytest.fixture
def a2():
    return paper_a2(2)


@pytest.fixture
def two_letter():
    return LinearRepresentation.build(
        INT, "ab", [1, 1], {"a": [[2, 0], [0, 0]], "b": [[1, 0], [0, 0]]}, [1, 1]
    )


# -- acceptance reporting -----------------------------------------------------

_acceptance_results: list[tuple[str, str]] = []


def pytest_configure(config):
    config.addinivalue_line("markers", "criterion(label): acceptance criterion reported in the summary")


@pytest.hookimpl(hookwrapper=True)
def pytest_runtest_makereport(item, call):
    outcome = yield
    report = outcome.get_result()
    marker = item.get_closest_marker("criterion")
    if marker is None:
        return
    label = marker.args[0]
    if hasattr(item, "callspec"):
        label += f" [{item.callspec.id}]"
    if report.when == "call" or (report.when == "setup" and report.failed):
        _acceptance_results.append((label, "PASS" if report.passed else "FAIL"))


def pytest_terminal_summary(terminalreporter):
    if not _acceptance_results:
        return
    terminalreporter.section("acceptance criteria")
    for label, verdict in _acceptance_results:
        terminalreporter.write_line(f"{verdict}  {label}")
