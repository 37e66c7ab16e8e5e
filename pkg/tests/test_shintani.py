from fractions import Fraction

import pytest

from siegeldim.dimension import i_factor
from siegeldim.errors import OutOfRange
from siegeldim.rational_core import bernoulli
from siegeldim.shintani import level_scale, shintani_special


@pytest.mark.parametrize("n", range(1, 10))
def test_rank_zero_is_one(n):
    assert shintani_special(0, n) == 1


def test_examples():
    assert shintani_special(2, 2) == Fraction(1, 96)
    assert shintani_special(2, 2) * 96 == 1
    # -(-1)^3 B_4 / (2^6 * 2) with B_4 = -1/30
    assert shintani_special(2, 3) == Fraction(-1, 3840)
    assert shintani_special(1, 1) == Fraction(-1, 4)


@pytest.mark.parametrize("n", range(3, 60, 2))
def test_rank_one_trivial_zeros(n):
    assert shintani_special(1, n) == 0


def test_rank_one_even_degree_nonzero():
    for n in range(2, 30, 2):
        assert shintani_special(1, n) == -bernoulli(n) / (2 * n) != 0


def test_vanishing_cases():
    for n in range(3, 16):
        for r in range(3, n + 1):
            if r % 2:
                R = (r - 1) // 2
                vanishes = (n - R) % 2 == 1 and n - R > 1
            else:
                R = r // 2
                vanishes = R % 2 == 1 and R > 1
            value = shintani_special(r, n)
            assert (value == 0) == vanishes, (r, n)
            assert (i_factor(n, r) == 0) == vanishes, (r, n)


def test_out_of_range():
    with pytest.raises(OutOfRange):
        shintani_special(3, 2)
    with pytest.raises(OutOfRange):
        shintani_special(0, 0)


@pytest.mark.parametrize(
    "r, n, N, expected",
    [(0, 3, 7, 1), (1, 1, 3, Fraction(2, 3)), (2, 2, 4, Fraction(1, 16))],
)
def test_level_scale(r, n, N, expected):
    assert level_scale(r, n, N) == expected
