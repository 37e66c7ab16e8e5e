"""Exact rational building blocks: Bernoulli numbers, zeta at negative odd
integers and Gamma quotients at half-integers.

Rationals are plain :class:`fractions.Fraction` values throughout the
package; nothing here ever touches a float.
"""

from __future__ import annotations

import threading
from dataclasses import dataclass
from fractions import Fraction
from math import comb

from .errors import PoleOrZero

__all__ = [
    "HalfInteger",
    "bernoulli",
    "zeta_negative_odd",
    "gamma_ratio",
]

# B_0, B_1, ... with B_1 = +1/2; grows monotonically, writes serialized.
_BERNOULLI: list[Fraction] = [Fraction(1)]
_BERNOULLI_LOCK = threading.Lock()


def bernoulli(m: int) -> Fraction:
    r"""Return the Bernoulli number ``B_m`` defined by

    .. math:: \frac{t e^t}{e^t - 1} = \sum_{m \ge 0} B_m \frac{t^m}{m!},

    so that ``B_1 = +1/2``.  Values are computed from the recurrence
    ``sum_{j=0}^{m} C(m+1, j) B_j = m + 1`` and cached.
    """
    if m < 0:
        raise ValueError(f"Bernoulli index must be nonnegative, got {m}")
    table = _BERNOULLI
    if m < len(table):
        return table[m]
    with _BERNOULLI_LOCK:
        while len(table) <= m:
            i = len(table)
            if i >= 3 and i % 2:
                table.append(Fraction(0))
                continue
            s = sum((comb(i + 1, j) * table[j] for j in range(i)), Fraction(0))
            table.append((i + 1 - s) / (i + 1))
    return table[m]


def zeta_negative_odd(j: int) -> Fraction:
    """Riemann zeta at ``1 - 2j`` for ``j >= 1``, i.e. ``-B_{2j} / (2j)``."""
    if j < 1:
        raise ValueError(f"j must be positive, got {j}")
    return -bernoulli(2 * j) / (2 * j)


@dataclass(frozen=True, order=True)
class HalfInteger:
    """An element of ``Z`` or ``Z + 1/2``, stored as twice its value."""

    twice_value: int

    @classmethod
    def of(cls, value) -> "HalfInteger":
        """Build from an int, a Fraction with denominator 1 or 2, or a HalfInteger."""
        if isinstance(value, HalfInteger):
            return value
        q = Fraction(value)
        if q.denominator not in (1, 2):
            raise ValueError(f"{value} is not a half-integer")
        return cls(int(2 * q))

    @property
    def value(self) -> Fraction:
        return Fraction(self.twice_value, 2)

    def __add__(self, other):
        return HalfInteger(self.twice_value + HalfInteger.of(other).twice_value)

    def __sub__(self, other):
        return HalfInteger(self.twice_value - HalfInteger.of(other).twice_value)

    def __str__(self) -> str:
        return str(self.value)


def gamma_ratio(a, b) -> Fraction:
    """Return ``Gamma(a) / Gamma(b)`` for half-integers with ``a - b`` integral.

    The quotient is telescoped into a finite rational product; Gamma itself
    is never evaluated.  Raises :class:`PoleOrZero` if a factor of that
    product is zero.
    """
    a2 = HalfInteger.of(a).twice_value
    b2 = HalfInteger.of(b).twice_value
    gap2 = a2 - b2
    if gap2 % 2:
        raise ValueError(f"Gamma arguments {a} and {b} differ by a non-integer")
    gap = gap2 // 2
    lo = Fraction(min(a2, b2), 2)
    prod = Fraction(1)
    for t in range(abs(gap)):
        factor = lo + t
        if factor == 0:
            raise PoleOrZero(f"Gamma({a})/Gamma({b}) hits a pole at 0")
        prod *= factor
    return prod if gap >= 0 else 1 / prod
