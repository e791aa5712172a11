from itertools import permutations

import pytest
from hypothesis import strategies as st

from morphstd import Morphism, Relabeling, parse_morphism, permuted_version

FIB = parse_morphism("1->12, 2->1")
THUE_MORSE = parse_morphism("1->12, 2->21")
TERNARY_TM = parse_morphism("1->123, 2->13, 3->2")
PERIOD_DOUBLING = parse_morphism("1->12, 2->11")
ZETA = parse_morphism("1->23, 2->14, 3->21, 4->56, 5->63, 6->54")
PHI2 = parse_morphism("1->12, 2->3, 3->12")
PHI3 = parse_morphism("1->12, 2->3, 3->14, 4->3")
ETA = parse_morphism("1->123, 2->12, 3->123")
THETA = parse_morphism("1->312, 2->12, 3->312")


# --- brute-force oracles ------------------------------------------------------

def brute_standard_morphism(m):
    """Minimum of (concatenation, length vector) over all r! permuted versions."""
    cands = [permuted_version(m, Relabeling(p)) for p in permutations(range(1, m.r + 1))]
    return min(cands, key=lambda c: (c.concatenation(), c.lengths()))


def brute_standard_sequence(w):
    r = max(w)
    return min(tuple(p[a - 1] for a in w) for p in permutations(range(1, r + 1)))


# --- strategies ---------------------------------------------------------------

@st.composite
def morphisms(draw, max_r=5, max_len=4):
    r = draw(st.integers(1, max_r))
    word = st.lists(st.integers(1, r), min_size=1, max_size=max_len).map(tuple)
    return Morphism(tuple(draw(word) for _ in range(r)))


@st.composite
def relabelings(draw, r):
    return Relabeling(tuple(draw(st.permutations(range(1, r + 1)))))


@st.composite
def complete_sequences(draw, max_r=5, max_len=64):
    """Sequences over 1..r in which every letter occurs."""
    r = draw(st.integers(1, max_r))
    body = draw(st.lists(st.integers(1, r), min_size=0, max_size=max_len - r))
    w = body + list(range(1, r + 1))
    return tuple(draw(st.permutations(w)))


# --- acceptance summary -------------------------------------------------------

_criteria: dict[str, str] = {}


def pytest_runtest_logreport(report):
    if "test_acceptance.py::test_criterion_" in report.nodeid and report.when in ("setup", "call"):
        name = report.nodeid.split("::", 1)[1]
        if report.when == "call" or report.outcome != "passed":
            _criteria[name] = report.outcome


def pytest_terminal_summary(terminalreporter):
    if not _criteria:
        return
    terminalreporter.section("acceptance criteria")
    for name in sorted(_criteria, key=lambda s: (int(s.split("_")[2]), s)):
        status = "PASS" if _criteria[name] == "passed" else "FAIL"
        terminalreporter.write_line(f"{status}  {name}")


@pytest.fixture
def fib():
    return FIB
