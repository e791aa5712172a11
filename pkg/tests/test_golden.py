import random
from bisect import bisect_right
from math import isqrt

import pytest
from hypothesis import given, strategies as st

from conftest import THETA
from morphstd import MorphicSequence, parse_morphism
from morphstd.golden import (ONE, PHI, GoldenNumber, beatty_a, e_seq, floor_q_phi, g_seq, gn_floor,
                             gn_frac, gn_mul, griffiths, increment_a, verify_identities)

G_LISTED = [1, 1, 3, 4, 4, 6, 6, 8, 9, 9, 11, 12, 12, 14, 14, 16, 17, 17, 19, 19, 21, 22, 22]
A_LISTED = [0, 1, 0, 2, 1, 0, 2, 0, 2, 1, 0, 2, 1, 0]

# --- oracles that do not use the isqrt formula ------------------------------

FIBS = [1, 2]
while FIBS[-1] < 10 ** 40:
    FIBS.append(FIBS[-1] + FIBS[-2])


def zeckendorf_floor_phi(q):
    """floor(q*phi) for q > 0 from the Zeckendorf digits of q.

    With q = sum F_k (non-adjacent, F_2 = 1, F_3 = 2, ...), q*phi = sum F_{k+1} - sum psi^k
    where psi = -1/phi; the error lies in (-1, 1) and has the sign of its lowest term.
    """
    total, lowest = 0, None
    while q:
        i = bisect_right(FIBS, q) - 1       # FIBS[i] = F_{i+2}
        q -= FIBS[i]
        total += FIBS[i + 1]
        lowest = i + 2
    return total - 1 if lowest % 2 == 0 else total


def le_sqrt5(a, b):
    """a <= b*sqrt(5) for integers a, b."""
    if b >= 0:
        return a <= 0 or a * a <= 5 * b * b
    return a <= 0 and a * a >= 5 * b * b


def floor_by_inequalities(x: GoldenNumber, k: int) -> bool:
    """k <= p + q*phi < k + 1, i.e. 2(k - p) - q <= q sqrt5 < 2(k + 1 - p) - q."""
    p, q = x.p, x.q
    return le_sqrt5(2 * (k - p) - q, q) and not le_sqrt5(2 * (k + 1 - p) - q, q)


golden_numbers = st.builds(GoldenNumber, st.integers(-10 ** 30, 10 ** 30), st.integers(-10 ** 30, 10 ** 30))


def test_zeckendorf_oracle_on_random_big_q():
    rng = random.Random(20151101)
    for _ in range(100_000):
        q = rng.randint(1, 10 ** 18)
        assert floor_q_phi(q) == zeckendorf_floor_phi(q)


@given(golden_numbers)
def test_floor_brackets(x):
    k = gn_floor(x)
    assert floor_by_inequalities(x, k)
    f = gn_frac(x)
    assert f >= 0 and f < 1
    assert f + k == x


@given(st.integers(0, 10 ** 60))
def test_isqrt(m):
    s = isqrt(m)
    assert s * s <= m < (s + 1) * (s + 1)


# --- ring arithmetic ----------------------------------------------------------

def test_phi_squared():
    assert PHI * PHI == GoldenNumber(1, 1)
    assert (1 - PHI) * PHI == GoldenNumber(-1, 0)
    assert gn_mul(GoldenNumber(1, -1), PHI) == -ONE
    x = GoldenNumber(7, -3)
    assert x + 0 == x and x * 1 == x


@given(golden_numbers, golden_numbers, golden_numbers)
def test_ring_axioms(a, b, c):
    assert a + b == b + a
    assert a * b == b * a
    assert (a + b) + c == a + (b + c)
    assert (a * b) * c == a * (b * c)
    assert a * (b + c) == a * b + a * c
    assert a - a == GoldenNumber()


@given(golden_numbers, golden_numbers)
def test_order_is_consistent(a, b):
    assert (a < b) + (a == b) + (a > b) == 1
    assert (a < b) == ((a - b).sign() < 0)


def test_floor_and_frac_examples():
    assert gn_floor(PHI) == 1
    assert gn_floor(GoldenNumber(0, 4)) == 6
    assert gn_frac(PHI) == GoldenNumber(-1, 1)
    assert gn_floor(GoldenNumber(0, -1)) == -2
    assert gn_floor(GoldenNumber(5, 0)) == 5


# --- sequences ----------------------------------------------------------------

def test_beatty():
    assert beatty_a(1) == 1
    assert beatty_a(4) == 6
    assert [beatty_a(n) for n in range(1, 11)] == [1, 3, 4, 6, 8, 9, 11, 12, 14, 16]
    with pytest.raises(ValueError):
        beatty_a(0)


def test_g_values():
    assert g_seq(0) == 0
    assert g_seq(1) == 0
    assert [g_seq(k) for k in range(2, 25)] == G_LISTED


def test_griffiths_form_agrees():
    assert [griffiths(n) for n in range(1, 24)] == G_LISTED
    assert all(griffiths(n) == g_seq(n + 1) for n in range(0, 23))


def test_increments():
    assert [increment_a(n) for n in range(1, 15)] == A_LISTED
    assert {increment_a(n) for n in range(1, 2000)} == {0, 1, 2}


def test_increment_tail_is_morphic():
    n = 10_000
    tail = [increment_a(k) for k in range(2, n + 2)]
    # 0->102, 1->102, 2->02 shifted onto 1..3
    shifted = parse_morphism("1->213, 2->213, 3->13")
    assert [a - 1 for a in MorphicSequence(shifted, 2).prefix(n)] == tail
    # recoded by 0->1, 1->3, 2->2 it is the fixed point of 1->312, 2->12, 3->312
    recode = {0: 1, 1: 3, 2: 2}
    assert [recode[a] for a in tail] == list(MorphicSequence(THETA, 3).prefix(n))


def test_e_seq():
    assert e_seq(0) == 0
    assert [e_seq(n) for n in range(10)] == [0, 1, 1, 2, 3, 3, 4, 4, 5, 6]
    assert all(e_seq(n) == beatty_a(n + 1) - (n + 1) for n in range(1_000_001))


# --- identity report ------------------------------------------------------------

def test_small_cases_by_hand():
    # n = 1: floor(floor(phi)*phi) = 1 = 1 + 1 - 1
    assert gn_floor(GoldenNumber(0, beatty_a(1))) == 1
    # n = 4: a(a(4)-4) = a(2) = 3, while a(a(4)-1) - a(4) - 1 = a(5) - 7 = 1
    assert beatty_a(beatty_a(4) - 4) == 3
    assert beatty_a(beatty_a(4) - 1) - beatty_a(4) - 1 == 1
    assert beatty_a(beatty_a(4) - 1) - beatty_a(4) + 1 == 3


def test_report_structure():
    report = verify_identities(2000)
    assert [r.name for r in report.results] == [
        "floor-swap", "frac-threshold", "beatty-recursion", "frac-linear", "floor-of-floor"]
    assert report.all_passed
    lines = report.lines()
    assert len(lines) == 5
    assert "as printed: a(a(n)-n) = a(a(n)-1)-a(n)-1 fails first at n=1" in lines[2]
    assert "derived Hofstadter-Conway form: a(n) = a(a(n)-1)-a(a(n)-n)+1 holds" in lines[2]


def test_parallel_report_matches_serial():
    a = verify_identities(3001, jobs=1)
    b = verify_identities(3001, jobs=3)
    assert a.lines() == b.lines()
