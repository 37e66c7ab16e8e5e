"""Special values of Shintani zeta functions of half-integral symmetric matrices.

``shintani_special(r, n)`` is the value at ``s = r - n`` of the zeta function
summing ``1 / (2 * eps(x) * det(x)^s)`` over ``SL(r, Z)``-classes of positive
definite half-integral symmetric matrices of size ``r``.  Only the closed
forms at these points are implemented, in terms of Bernoulli numbers; no
analytic continuation is attempted.
"""

from __future__ import annotations

from fractions import Fraction
from math import factorial, prod

from .errors import OutOfRange
from .rational_core import bernoulli

__all__ = ["shintani_special", "level_scale"]


def _check(r: int, n: int) -> None:
    if n < 1 or not 0 <= r <= n:
        raise OutOfRange(f"need n >= 1 and 0 <= r <= n, got r={r}, n={n}")


def _abs_even_bernoulli_product(upto: int) -> Fraction:
    return prod((abs(bernoulli(2 * j)) for j in range(1, upto + 1)), start=Fraction(1))


def shintani_special(r: int, n: int) -> Fraction:
    _check(r, n)
    if r == 0:
        return Fraction(1)
    if r == 1:
        return -bernoulli(n) / (2 * n)
    if r == 2:
        if n == 2:
            return Fraction(1, 96)
        return -(-1) ** n * bernoulli(2 * n - 2) / (2 ** (2 * n) * (n - 1))

    tail = prod((bernoulli(2 * n - 2 * r + 2 * l) for l in range(1, r // 2 + 1)), start=Fraction(1))
    if r % 2:
        R = (r - 1) // 2
        sign = (-1) ** (R + 1)
        value = (
            Fraction(1, 2 ** (R * (2 * n - 2 * r + 1) + r))
            * _abs_even_bernoulli_product(R)
            * bernoulli(n - R)
            * tail
            / factorial(R)
        )
        den = prod(n - r + t for t in range(1, R + 2))
    else:
        R = r // 2
        sign = (-1) ** (R // 2 + R * (n - r + 1))
        value = (
            Fraction(1, 2 ** (r * (n - r + 1) + R))
            * abs(bernoulli(R))
            * _abs_even_bernoulli_product(R - 1)
            * tail
            / factorial(R)
        )
        den = prod(n - r + t for t in range(1, R + 1))
    return sign * value / den


def level_scale(r: int, n: int, N: int) -> Fraction:
    """Factor ``2^{r - r^2 + rn} N^{r(r-1)/2 - rn}`` relating level ``N`` to level 1."""
    _check(r, n)
    if N < 1:
        raise OutOfRange(f"level must be positive, got {N}")
    return Fraction(2) ** (r - r * r + r * n) * Fraction(N) ** (r * (r - 1) // 2 - r * n)
