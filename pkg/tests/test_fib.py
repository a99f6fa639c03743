from fractions import Fraction

import pytest
from hypothesis import given, strategies as st

from conftest import naive_fib
from markoff_fib.fib import binet_envelope, fib, fib_index, fib_list, is_fibonacci, vajda_sides


@pytest.mark.parametrize("n, v", [(0, 0), (1, 1), (2, 1), (10, 55), (12, 144), (11, 89)])
def test_fib_small_values(n, v):
    assert fib(n) == v


def test_fib_matches_recurrence_to_700(F):
    assert [fib(n) for n in range(701)] == F
    assert fib_list(700) == F


def test_fib_recurrence_identity():
    for n in range(301):
        assert fib(n + 2) == fib(n + 1) + fib(n)


def test_fib_500_digit_count():
    assert len(str(fib(500))) == 105


@pytest.mark.parametrize("bad", [-1, -10])
def test_fib_rejects_negative(bad):
    with pytest.raises(ValueError):
        fib(bad)


def test_fib_rejects_non_integer():
    with pytest.raises(TypeError):
        fib(2.0)


@pytest.mark.parametrize("v, n", [(55, 10), (1, 2), (0, 0), (2, 3), (144, 12), (4, None), (6, None)])
def test_fib_index(v, n):
    assert fib_index(v) == n


def test_fib_index_inverts_fib(F):
    for n in range(2, 400):
        assert fib_index(F[n]) == n
    assert fib_index(F[300] + 1) is None
    with pytest.raises(ValueError):
        fib_index(-3)


def test_is_fibonacci_against_set(F):
    fibs = set(F[:30])
    for v in range(0, 1000):
        assert is_fibonacci(v) == (v in fibs)


def test_sqrt2_growth():
    for n in range(2, 201):
        assert 2 * fib(n) ** 2 < fib(n + 1) ** 2


def test_sum_of_squares_identity():
    for b in range(1, 101):
        assert sum(fib(k) ** 2 for k in range(1, b + 2)) == fib(b + 1) * fib(b + 2)


@pytest.mark.parametrize("n, i, j, value", [(1, 3, 2, -2), (2, 1, 1, 1)])
def test_vajda_examples(n, i, j, value):
    assert vajda_sides(n, i, j) == (value, value)


def test_vajda_exhaustive_to_50():
    for n in range(1, 51):
        for i in range(1, 51):
            for j in range(1, 51):
                left, right = vajda_sides(n, i, j)
                assert left == right


@given(st.integers(2, 200), st.integers(2, 200))
def test_vajda_gives_addition_law(a, b):
    # F(a+b) = F(a+1)F(b) + F(a)F(b-1), from n=1, i=a, j=b-1
    left, right = vajda_sides(1, a, b - 1)
    assert left == right
    assert fib(a + b) == fib(a + 1) * fib(b) + fib(a) * fib(b - 1)


def test_vajda_rejects_zero():
    with pytest.raises(ValueError):
        vajda_sides(0, 1, 1)


def test_binet_envelope_brackets_fib():
    for n in range(1, 150):
        lo, hi = binet_envelope(n)
        assert lo <= fib(n) <= hi
    lo, hi = binet_envelope(2)
    assert lo < 1 < hi
    lo, _ = binet_envelope(1)
    assert lo <= 1


def test_binet_envelope_width_is_2_over_sqrt5():
    lo, hi = binet_envelope(30)
    assert (hi - lo) ** 2 == Fraction(4, 5)
    with pytest.raises(ValueError):
        binet_envelope(0)
