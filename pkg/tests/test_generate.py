from concurrent.futures import ThreadPoolExecutor

import pytest
from hypothesis import given, settings, strategies as st

from conftest import ETA, FIB, PHI2, PHI3, THETA, THUE_MORSE, ZETA
from morphstd import (CapacityError, Morphism, MorphicSequence, NotProlongableError, apply_morphism,
                      complexity, factors, fixed_point_seeds, iterate, parse_morphism, prefix)

CONSTANT = parse_morphism("1->11")


@st.composite
def prolongable(draw, max_r=4, max_len=4):
    r = draw(st.integers(1, max_r))
    word = st.lists(st.integers(1, r), min_size=1, max_size=max_len).map(tuple)
    images = [draw(word) for _ in range(r)]
    images[0] = (1,) + draw(st.lists(st.integers(1, r), min_size=1, max_size=max_len - 1).map(tuple))
    return Morphism(tuple(images))


def window_count(w, n):
    return len({tuple(w[i:i + n]) for i in range(len(w) - n + 1)})


def test_fixed_point_seeds():
    assert fixed_point_seeds(PHI2) == [1]
    assert fixed_point_seeds(THUE_MORSE) == [1, 2]
    assert fixed_point_seeds(parse_morphism("1->21, 2->12")) == []
    assert fixed_point_seeds(parse_morphism("1->1, 2->21")) == [2]


def test_prefixes():
    assert prefix(MorphicSequence(PHI2, 1), 21) == (
        1, 2, 3, 1, 2, 1, 2, 3, 1, 2, 3, 1, 2, 1, 2, 3, 1, 2, 1, 2, 3)
    assert prefix(MorphicSequence(PHI3, 1), 16) == (1, 2, 3, 1, 4, 1, 2, 3, 1, 2, 3, 1, 4, 1, 2, 3)
    assert prefix(MorphicSequence(ZETA * ZETA, 1), 16) == (
        1, 4, 2, 1, 6, 3, 5, 4, 2, 3, 5, 6, 1, 4, 2, 1)
    assert prefix(MorphicSequence(FIB, 1), 0) == ()


def test_coding_applied_on_output():
    s = MorphicSequence(PHI2, 1, coding=(0, 1, 2))
    assert s.prefix(8) == (0, 1, 2, 0, 1, 0, 1, 2)
    assert s.raw_prefix(3) == (1, 2, 3)


def test_not_prolongable():
    with pytest.raises(NotProlongableError):
        MorphicSequence(parse_morphism("1->21, 2->12"), 1)
    with pytest.raises(NotProlongableError):
        MorphicSequence(parse_morphism("1->1, 2->21"), 1)


def test_iterate():
    assert iterate(ETA, (1,), 2) == (1, 2, 3, 1, 2, 1, 2, 3)
    assert iterate(ZETA, (1,), 2) == (1, 4, 2, 1)
    assert iterate(ZETA, (3, 5), 0) == (3, 5)


def test_fibonacci_factors():
    s = MorphicSequence(FIB, 1)
    # 01, 10, 00 in the 0/1 alphabet
    assert factors(s, 2) == [(1, 2), (2, 1), (1, 1)]
    # 010, 100, 001, 101
    assert factors(s, 3) == [(1, 2, 1), (2, 1, 1), (1, 1, 2), (2, 1, 2)]


def test_constant_factors():
    s = MorphicSequence(CONSTANT, 1)
    for n in (1, 4, 9):
        assert factors(s, n) == [(1,) * n]


def test_complexity():
    assert complexity(MorphicSequence(FIB, 1), 10) == list(range(2, 12))
    assert complexity(MorphicSequence(THUE_MORSE, 1), 3) == [2, 4, 6]
    assert complexity(MorphicSequence(CONSTANT, 1), 5) == [1] * 5


@pytest.mark.parametrize("m, seed", [(FIB, 1), (THUE_MORSE, 1), (THUE_MORSE, 2), (PHI3, 1),
                                     (ZETA * ZETA, 1), (parse_morphism("1->123, 2->13, 3->2"), 1)])
def test_complexity_against_long_prefix(m, seed):
    s = MorphicSequence(m, seed)
    w = s.prefix(20000)
    assert complexity(s, 12) == [window_count(w, n) for n in range(1, 13)]


def test_closure_cap():
    with pytest.raises(CapacityError):
        factors(MorphicSequence(FIB, 1), 40, cap=3)


def test_shifted_fixed_points():
    # the fixed point of eta is the left shift of the fixed point of theta
    x = MorphicSequence(ETA, 1).prefix(10_000)
    y = MorphicSequence(THETA, 3).prefix(10_001)
    assert x == y[1:]
    assert x[:11] == (1, 2, 3, 1, 2, 1, 2, 3, 1, 2, 3)
    assert y[:11] == (3, 1, 2, 3, 1, 2, 1, 2, 3, 1, 2)


@settings(max_examples=150)
@given(prolongable(), st.integers(0, 300), st.integers(0, 300))
def test_prefix_properties(m, n, k):
    s = MorphicSequence(m, 1)
    w = s.prefix(n)
    assert len(w) == n
    assert apply_morphism(m, w)[:n] == w
    assert s.prefix(min(n, k)) == s.prefix(max(n, k))[:min(n, k)]


@settings(max_examples=60, deadline=None)
@given(prolongable(max_r=3, max_len=3))
def test_complexity_monotone(m):
    p = complexity(MorphicSequence(m, 1), 6)
    assert all(a <= b for a, b in zip(p, p[1:]))
    assert all(b <= a * m.r for a, b in zip(p, p[1:]))


def test_concurrent_readers_agree():
    s = MorphicSequence(FIB, 1)
    expected = MorphicSequence(FIB, 1).prefix(5000)
    lengths = [5000 - 37 * i for i in range(64)]
    with ThreadPoolExecutor(8) as pool:
        results = list(pool.map(s.prefix, lengths))
    assert all(r == expected[:n] for r, n in zip(results, lengths))
