"""Dimensions of spaces of Siegel cusp forms for principal congruence subgroups.

Three independent routes evaluate the scalar-valued dimension
``dim S_k(Gamma_n(N))``:

* ``dim_scalar``: the packaged Bernoulli-product formula (path ``"t115"``),
* ``dim_scalar_via_shintani``: Shintani zeta values times the level factor
  and archimedean constants (path ``"c12"``),
* ``closed_form``: the printed polynomials in ``k`` and ``1/N`` for
  ``n <= 6`` (path ``"closed"``).

``dim_vector`` handles weights ``rho = (k_1 >= ... >= k_n)`` through
Gelfand-Tsetlin branching and Schur-to-zonal transition coefficients
(path ``"vector"``).  All values are exact :class:`~fractions.Fraction`.
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from functools import lru_cache
from math import factorial, prod
from typing import Sequence

from .errors import NonIntegerResult, OutOfProvenRange, OutOfRange
from .partitions import WeightVector, branching_support, padded, weyl_dim
from .rational_core import HalfInteger, bernoulli, gamma_ratio, zeta_negative_odd
from .shintani import level_scale, shintani_special
from .symfunc import schur_to_spherical

__all__ = [
    "DimensionReport",
    "AsymptoticReport",
    "prime_factors",
    "index_principal",
    "c_scalar",
    "c_vector",
    "i_factor",
    "dim_scalar",
    "dim_scalar_via_shintani",
    "dim_vector",
    "closed_form",
    "closed_form_low_degree",
    "closed_form_vector_n3",
    "dim_closed_form",
    "asymptotics",
]

PATHS = ("t115", "c12", "closed", "vector")


@dataclass(frozen=True)
class DimensionReport:
    degree: int
    weights: tuple[int, ...]
    level: int
    path: str
    terms: tuple[tuple[int, Fraction], ...]
    total: Fraction
    proven_range: bool

    def __post_init__(self):
        if sum((v for _, v in self.terms), Fraction(0)) != self.total:
            raise ValueError("report total does not match its terms")

    @property
    def value(self) -> int | Fraction:
        return int(self.total) if self.total.denominator == 1 else self.total

    def to_dict(self) -> dict:
        return {
            "degree": self.degree,
            "weights": list(self.weights),
            "level": self.level,
            "path": self.path,
            "terms": [{"r": r, "value": _rational_json(v)} for r, v in self.terms],
            "total": _rational_json(self.total),
            "proven_range": self.proven_range,
        }


def _rational_json(q: Fraction) -> dict:
    return {"num": str(q.numerator), "den": str(q.denominator)}


@dataclass(frozen=True)
class AsymptoticReport:
    main_term: Fraction
    remainder: Fraction
    predicted_remainder_exponents: tuple[int, int]
    report: DimensionReport

    @property
    def total(self) -> Fraction:
        return self.main_term + self.remainder


def prime_factors(N: int) -> list[int]:
    """Distinct primes dividing ``N`` (trial division)."""
    if N < 1:
        raise ValueError(f"expected a positive integer, got {N}")
    out = []
    p = 2
    while p * p <= N:
        if N % p == 0:
            out.append(p)
            while N % p == 0:
                N //= p
        p += 1 if p == 2 else 2
    if N > 1:
        out.append(N)
    return out


def index_principal(n: int, N: int) -> int:
    """Index ``[Gamma_n(1) : Gamma_n(N)]`` of the principal congruence subgroup."""
    if n < 1 or N < 1:
        raise OutOfRange(f"need n >= 1 and N >= 1, got n={n}, N={N}")
    idx = Fraction(N) ** (n * (2 * n + 1))
    for p in prime_factors(N):
        for l in range(1, n + 1):
            idx *= 1 - Fraction(1, p ** (2 * l))
    assert idx.denominator == 1
    return int(idx)


def _check_rank(n: int, r: int) -> None:
    if n < 1 or not 0 <= r <= n:
        raise OutOfRange(f"need n >= 1 and 0 <= r <= n, got n={n}, r={r}")


def _weight_product(k: int, n: int, r: int) -> int:
    return prod(2 * k - t - u for t in range(1, n - r + 1) for u in range(t + r, n + 1))


def c_scalar(k: int, n: int, r: int) -> Fraction:
    """Archimedean constant for the scalar weight ``det^k``."""
    _check_rank(n, r)
    return Fraction(2) ** (r - 2 * n) * _weight_product(k, n, r)


def _zeta_product(m: int) -> Fraction:
    """``prod_{j=1}^{m} (-1)^j (j-1)! / (2j-1)! * zeta(1-2j)``."""
    return prod(
        (
            Fraction((-1) ** j * factorial(j - 1), factorial(2 * j - 1)) * zeta_negative_odd(j)
            for j in range(1, m + 1)
        ),
        start=Fraction(1),
    )


def _bernoulli_product(m: int) -> Fraction:
    """``prod_{j=1}^{m} (j-1)! |B_2j| / ((2j-1)! j)``."""
    return prod(
        (
            Fraction(factorial(j - 1), factorial(2 * j - 1) * j) * abs(bernoulli(2 * j))
            for j in range(1, m + 1)
        ),
        start=Fraction(1),
    )


def i_factor(n: int, r: int) -> Fraction:
    """Rank-``r`` Bernoulli coefficient of the packaged scalar formula."""
    _check_rank(n, r)
    if r % 2:
        R = (r - 1) // 2
        sign = (-1) ** ((n + 1) // 2)
        value = (
            Fraction(2) ** (-2 * n + R + 1)
            * prod((abs(bernoulli(2 * j)) for j in range(1, R + 1)), start=Fraction(1))
            * abs(bernoulli(n - R))
            * prod((abs(bernoulli(2 * n - 2 * r + 2 * l)) for l in range(1, R + 1)), start=Fraction(1))
            / factorial(R)
            / prod(n - r + m for m in range(1, R + 2))
        )
    else:
        R = r // 2
        sign = (-1) ** (R * (2 if n == r else 1))
        value = (
            Fraction(2) ** (-3 * n + 3 * R)
            * abs(bernoulli(R))
            * prod((abs(bernoulli(2 * j)) for j in range(1, R)), start=Fraction(1))
            * prod((abs(bernoulli(2 * n - 2 * r + 2 * l)) for l in range(1, R + 1)), start=Fraction(1))
            / factorial(R)
            / prod(n - r + m for m in range(1, R + 1))
        )
    return sign * value


def _as_weight(k) -> WeightVector:
    return k if isinstance(k, WeightVector) else WeightVector(tuple(k))


def _gate(n: int, k_min: int, N: int, force: bool) -> bool:
    if N < 1:
        raise OutOfRange(f"level must be positive, got N={N}")
    if n < 1:
        raise OutOfRange(f"degree must be positive, got n={n}")
    proven = k_min > n + 1 and N > 2
    if not proven and not force:
        raise OutOfProvenRange(
            f"formula is proven only for k > n+1 = {n + 1} and N > 2 "
            f"(got k={k_min}, n={n}, N={N}); use force to evaluate anyway"
        )
    return proven


def _report(n, weights, N, path, terms, proven) -> DimensionReport:
    terms = tuple((r, Fraction(v)) for r, v in terms)
    total = sum((v for _, v in terms), Fraction(0))
    if proven and (total.denominator != 1 or total < 0):
        raise NonIntegerResult(
            f"{path} gave {total} for n={n}, weights={weights}, N={N}; expected a nonnegative integer"
        )
    return DimensionReport(n, tuple(weights), N, path, terms, total, proven)


def dim_scalar(n: int, k: int, N: int, *, force: bool = False) -> DimensionReport:
    """``dim S_k(Gamma_n(N))`` from the Bernoulli-product formula."""
    proven = _gate(n, k, N, force)
    idx = index_principal(n, N)
    terms = []
    for r in range(n + 1):
        term = (
            idx
            * Fraction(N) ** (r * (r - 1) // 2 - r * n)
            * _weight_product(k, n, r)
            * _bernoulli_product(n - r)
            * i_factor(n, r)
        )
        terms.append((r, term))
    return _report(n, (k,) * n, N, "t115", terms, proven)


def dim_scalar_via_shintani(n: int, k: int, N: int, *, force: bool = False) -> DimensionReport:
    """``dim S_k(Gamma_n(N))`` assembled from Shintani zeta special values."""
    proven = _gate(n, k, N, force)
    idx = index_principal(n, N)
    terms = [
        (
            r,
            idx
            * shintani_special(r, n)
            * level_scale(r, n, N)
            * _zeta_product(n - r)
            * c_scalar(k, n, r),
        )
        for r in range(n + 1)
    ]
    return _report(n, (k,) * n, N, "c12", terms, proven)


def _zonal_gamma_quotient(m: Sequence[int], n: int, r: int) -> Fraction:
    """``Gamma_Omega(m + (r-1)/2 - n) / Gamma_Omega(m)`` with pi powers cancelled.

    Numerator and denominator Gamma factors are paired so that each pair
    differs by an integer.
    """
    m = padded(m, r)
    out = Fraction(1)
    for j in range(1, r + 1):
        top = HalfInteger(2 * (m[r - j] - n) + (j - 1))
        bottom = HalfInteger(2 * m[j - 1] - (j - 1))
        out *= gamma_ratio(top, bottom)
    return out


@lru_cache(maxsize=None)
def _c_vector(weights: tuple[int, ...], r: int) -> Fraction:
    n = len(weights)
    formal = prod(
        weights[t - 1] + weights[u - 1] - t - u
        for t in range(1, n + 1)
        for u in range(t, n + 1)
    )
    if r == 0:
        return Fraction(weyl_dim(weights) * formal, 2 ** (2 * n))
    inner = Fraction(0)
    for b, mult in branching_support(weights, r, weights[-1]):
        row = schur_to_spherical(b, r)
        inner += mult * sum(
            (coef * _zonal_gamma_quotient(m, n, r) for m, coef in row.items()),
            Fraction(0),
        )
    return Fraction(2) ** (-2 * n - n * r + r * (r + 1) // 2) * formal * inner


def c_vector(k, r: int, *, force: bool = False) -> Fraction:
    """Archimedean constant for a polynomial weight ``k = (k_1 >= ... >= k_n)``.

    Outside ``k_n > n + 1`` the value is the continuation of the same rational
    expression in ``k_n`` and requires ``force=True`` (and still ``k_n > 0``).
    """
    k = _as_weight(k)
    n = k.degree
    _check_rank(n, r)
    if not k.proven_range:
        if not force:
            raise OutOfProvenRange(f"need k_n > n+1 = {n + 1}, got k = {k.weights}")
        if k.weights[-1] <= 0:
            raise ValueError(f"need a polynomial weight with k_n > 0, got {k.weights}")
    return _c_vector(k.weights, r)


def dim_vector(k, N: int, *, force: bool = False) -> DimensionReport:
    """``dim S_rho(Gamma_n(N))`` for the weight ``rho`` with highest weight ``k``."""
    k = _as_weight(k)
    n = k.degree
    proven = _gate(n, k.weights[-1], N, force)
    if k.weights[-1] <= 0:
        raise ValueError(f"need a polynomial weight with k_n > 0, got {k.weights}")
    idx = index_principal(n, N)
    terms = [
        (
            r,
            idx
            * shintani_special(r, n)
            * level_scale(r, n, N)
            * _c_vector(k.weights, r)
            * _zeta_product(n - r),
        )
        for r in range(n + 1)
    ]
    return _report(n, k.weights, N, "vector", terms, proven)


# Printed closed forms.  Each entry: (rank r, coefficient, {a: e}) standing for
# coefficient * prod (2k - a)^e * N^{r(r-1)/2 - rn}, all multiplied by the index.
def _c(num, *den):
    return Fraction(num, prod(den))


_CLOSED_FORMS = {
    1: [
        (0, _c(1, 2**4, 3), {2: 1}),
        (1, _c(-1, 2**2), {}),
    ],
    2: [
        (0, _c(1, 2**10, 3**3, 5), {2: 1, 3: 1, 4: 1}),
        (1, _c(-1, 2**6, 3**2), {3: 1}),
        (2, _c(1, 2**5, 3), {}),
    ],
    3: [
        (0, _c(1, 2**16, 3**6, 5**2, 7), {2: 1, 3: 1, 4: 2, 5: 1, 6: 1}),
        (2, _c(-1, 2**10, 3**2, 5), {4: 1}),
        (3, _c(1, 2**8, 3**3), {}),
    ],
    4: [
        (0, _c(1, 2**25, 3**8, 5**4, 7**2), {2: 1, 3: 1, 4: 2, 5: 2, 6: 2, 7: 1, 8: 1}),
        (1, _c(1, 2**17, 3**7, 5**3, 7), {3: 1, 4: 1, 5: 2, 6: 1, 7: 1}),
        (2, _c(-1, 2**15, 3**5, 5, 7), {4: 1, 5: 1, 6: 1}),
        (4, _c(1, 2**12, 3**4, 5), {}),
    ],
    5: [
        (
            0,
            _c(1, 2**33, 3**12, 5**5, 7**3, 11),
            {2: 1, 3: 1, 4: 2, 5: 2, 6: 3, 7: 2, 8: 2, 9: 1, 10: 1},
        ),
        (2, _c(-1, 2**23, 3**7, 5**3, 7), {4: 1, 5: 1, 6: 2, 7: 1, 8: 1}),
        (3, _c(-1, 2**17, 3**7, 5**2, 7), {5: 1, 6: 1, 7: 1}),
        (4, _c(1, 2**16, 3**6, 5, 7), {6: 1}),
    ],
    6: [
        (
            0,
            _c(691, 2**43, 3**13, 5**7, 7**5, 11**2, 13),
            {2: 1, 3: 1, 4: 2, 5: 2, 6: 3, 7: 3, 8: 3, 9: 2, 10: 2, 11: 1, 12: 1},
        ),
        (
            1,
            _c(-1, 2**31, 3**14, 5**5, 7**4, 11),
            {3: 1, 4: 1, 5: 2, 6: 2, 7: 3, 8: 2, 9: 2, 10: 1, 11: 1},
        ),
        (2, _c(-1, 2**30, 3**9, 5**4, 7**2, 11), {4: 1, 5: 1, 6: 2, 7: 2, 8: 2, 9: 1, 10: 1}),
        (4, _c(1, 2**23, 3**8, 5**2, 7), {6: 1, 7: 1, 8: 1}),
        (5, _c(-1, 2**19, 3**7, 5**3, 7), {7: 1}),
    ],
}

# Weight (k+1, k, k) in degree 3.  The factor 6k - 10 is not a product of
# the shifted weights, so it is kept as a literal "6k-10" entry.
_CLOSED_FORM_VECTOR_N3 = [
    (0, _c(3, 2**16, 3**6, 5**2, 7), {0: 1, 2: 1, 3: 1, 4: 1, 5: 1, 6: 1}),
    (2, _c(-1, 2**10, 3**2, 5), "6k-10"),
    (3, _c(3, 2**8, 3**3), {}),
]


def _closed_terms(table, n: int, k: int, N: int) -> list[tuple[int, Fraction]]:
    idx = index_principal(n, N)
    out = []
    for r, coef, factors in table:
        if factors == "6k-10":
            poly = 6 * k - 10
        else:
            poly = prod((2 * k - a) ** e for a, e in factors.items())
        out.append((r, idx * coef * poly * Fraction(N) ** (r * (r - 1) // 2 - r * n)))
    return out


def closed_form(n: int, k: int, N: int, *, force: bool = False) -> Fraction:
    """Evaluate the printed closed-form dimension polynomial for ``1 <= n <= 6``."""
    return dim_closed_form(n, k, N, force=force).total


def closed_form_low_degree(n: int, k: int, N: int, *, force: bool = False) -> Fraction:
    """Classical closed forms, restricted to ``n in {1, 2, 3}``."""
    if n not in (1, 2, 3):
        raise OutOfRange(f"classical closed forms exist for n <= 3, got n={n}")
    return closed_form(n, k, N, force=force)


def closed_form_vector_n3(k: int, N: int, *, force: bool = False) -> DimensionReport:
    """Printed closed form for degree 3 and the weight ``(k+1, k, k)``."""
    proven = _gate(3, k, N, force)
    terms = _closed_terms(_CLOSED_FORM_VECTOR_N3, 3, k, N)
    return _report(3, (k + 1, k, k), N, "closed", terms, proven)


def dim_closed_form(n: int, k: int, N: int, *, force: bool = False) -> DimensionReport:
    if n not in _CLOSED_FORMS:
        raise OutOfRange(f"no printed closed form for n={n}")
    proven = _gate(n, k, N, force)
    return _report(n, (k,) * n, N, "closed", _closed_terms(_CLOSED_FORMS[n], n, k, N), proven)


def asymptotics(n: int, k: int, N: int, *, force: bool = False) -> AsymptoticReport:
    """Split the dimension into the volume term (rank 0) and the remainder.

    The attached exponent pair ``(a, b)`` is the predicted order
    ``O(N^a k^b)`` of the remainder, which depends on the parity of ``n``.
    """
    report = dim_scalar(n, k, N, force=force)
    main = dict(report.terms)[0]
    if n % 2 == 0:
        exponents = (2 * n * n, n * (n - 1) // 2)
    else:
        exponents = (2 * n * n - n + 1, (n - 1) * (n - 2) // 2)
    return AsymptoticReport(main, report.total - main, exponents, report)
