"""Schur and zonal symmetric polynomials in a fixed number of variables.

Everything is stored in the monomial-symmetric basis ``m_lambda`` with exact
rational coefficients.  Zonal polynomials are Jack polynomials at
``alpha = 2``; they are obtained as the triangular eigenvectors of
Stanley's operator

    D = (alpha/2) * sum_i x_i^2 d_i^2 + sum_{i != j} x_i^2 / (x_i - x_j) d_i

acting on symmetric polynomials in ``r`` variables.
"""

from __future__ import annotations

from collections import Counter, defaultdict
from dataclasses import dataclass, field
from fractions import Fraction
from functools import lru_cache
from math import factorial, prod
from typing import Mapping, Sequence

from .errors import SingularElimination, TooManyRows
from .partitions import Partition, as_partition, padded, partitions_dominated_by

__all__ = [
    "SymmetricPolynomial",
    "TransitionRow",
    "orbit_size",
    "schur",
    "kostka",
    "jack_p",
    "spherical",
    "c_factor",
    "schur_to_spherical",
]


def orbit_size(lam: Sequence[int], r: int) -> int:
    """Number of monomials in ``m_lam`` with ``r`` variables."""
    counts = Counter(padded(lam, r))
    return factorial(r) // prod(factorial(c) for c in counts.values())


@dataclass(frozen=True)
class SymmetricPolynomial:
    """A symmetric polynomial in ``num_vars`` variables, monomial basis."""

    num_vars: int
    coeffs: Mapping[Partition, Fraction] = field(default_factory=dict)

    def __post_init__(self):
        clean = {}
        for lam, c in self.coeffs.items():
            lam = as_partition(lam)
            if len(lam) > self.num_vars:
                raise TooManyRows(f"{lam} has more than {self.num_vars} rows")
            c = Fraction(c)
            if c:
                clean[lam] = clean.get(lam, Fraction(0)) + c
        object.__setattr__(self, "coeffs", {k: v for k, v in clean.items() if v})

    def __getitem__(self, lam) -> Fraction:
        return self.coeffs.get(as_partition(lam), Fraction(0))

    def __eq__(self, other):
        if not isinstance(other, SymmetricPolynomial):
            return NotImplemented
        return self.num_vars == other.num_vars and self.coeffs == other.coeffs

    def __add__(self, other: "SymmetricPolynomial") -> "SymmetricPolynomial":
        self._check_compatible(other)
        out = dict(self.coeffs)
        for lam, c in other.coeffs.items():
            out[lam] = out.get(lam, Fraction(0)) + c
        return SymmetricPolynomial(self.num_vars, out)

    def __sub__(self, other: "SymmetricPolynomial") -> "SymmetricPolynomial":
        return self + other.scale(-1)

    def scale(self, c) -> "SymmetricPolynomial":
        c = Fraction(c)
        return SymmetricPolynomial(self.num_vars, {k: v * c for k, v in self.coeffs.items()})

    def _check_compatible(self, other):
        if self.num_vars != other.num_vars:
            raise ValueError("polynomials live in different numbers of variables")

    @property
    def support(self) -> list[Partition]:
        return sorted(self.coeffs, key=lambda lam: padded(lam, self.num_vars), reverse=True)

    @property
    def degree(self) -> int | None:
        degrees = {sum(lam) for lam in self.coeffs}
        if len(degrees) > 1:
            raise ValueError("polynomial is not homogeneous")
        return degrees.pop() if degrees else None

    def at_ones(self) -> Fraction:
        """Value at the point ``(1, ..., 1)``."""
        return sum(
            (c * orbit_size(lam, self.num_vars) for lam, c in self.coeffs.items()),
            Fraction(0),
        )

    def expand(self) -> dict[tuple[int, ...], Fraction]:
        """Dense dictionary ``exponent vector -> coefficient``."""
        out: dict[tuple[int, ...], Fraction] = {}
        for lam, c in self.coeffs.items():
            for e in _distinct_permutations(padded(lam, self.num_vars)):
                out[e] = c
        return out

    def evaluate(self, point: Sequence) -> Fraction:
        if len(point) != self.num_vars:
            raise ValueError(f"expected {self.num_vars} coordinates")
        point = [Fraction(x) for x in point]
        total = Fraction(0)
        for e, c in self.expand().items():
            total += c * prod(x**k for x, k in zip(point, e))
        return total


@dataclass(frozen=True)
class TransitionRow:
    """Coefficients ``n_{b,m,r}`` with ``s_b = sum_m n_{b,m,r} * spherical(m, r)``."""

    source: Partition
    num_vars: int
    entries: Mapping[Partition, Fraction]

    def total(self) -> Fraction:
        return sum(self.entries.values(), Fraction(0))

    def items(self):
        return sorted(
            self.entries.items(), key=lambda kv: padded(kv[0], self.num_vars), reverse=True
        )


def _distinct_permutations(seq: Sequence[int]):
    counts = Counter(seq)
    values = sorted(counts, reverse=True)
    n = len(seq)
    out: list[int] = []

    def rec():
        if len(out) == n:
            yield tuple(out)
            return
        for v in values:
            if counts[v]:
                counts[v] -= 1
                out.append(v)
                yield from rec()
                out.pop()
                counts[v] += 1

    yield from rec()


def _check_rows(lam: Partition, r: int) -> None:
    if r < 1:
        raise ValueError(f"number of variables must be positive, got {r}")
    if len(lam) > r:
        raise TooManyRows(f"partition {lam} has more than {r} rows")


def _split_det(lam: Partition, r: int) -> tuple[Partition, int]:
    """Write ``lam = reduced + (c^r)``; symmetric functions pick up ``det^c``."""
    if len(lam) < r:
        return lam, 0
    c = lam[-1]
    return as_partition(x - c for x in lam), c


def _shift(coeffs: Mapping[Partition, Fraction], c: int, r: int) -> dict[Partition, Fraction]:
    if not c:
        return dict(coeffs)
    return {tuple(x + c for x in padded(lam, r)): v for lam, v in coeffs.items()}


# -- Schur ------------------------------------------------------------------


def _horizontal_strips(lam: tuple[int, ...], size: int):
    """Partitions ``nu`` with ``lam / nu`` a horizontal strip of ``size`` cells."""
    n = len(lam)

    def rec(i: int, prefix: tuple[int, ...], removed: int):
        if i == n:
            if removed == size:
                yield as_partition(prefix)
            return
        lower = lam[i + 1] if i + 1 < n else 0
        for x in range(lam[i], lower - 1, -1):
            if removed + lam[i] - x > size:
                break
            yield from rec(i + 1, prefix + (x,), removed + lam[i] - x)

    yield from rec(0, (), 0)


@lru_cache(maxsize=None)
def kostka(lam: Partition, mu: tuple[int, ...]) -> int:
    """Number of semistandard tableaux of shape ``lam`` and content ``mu``.

    Entries equal to ``len(mu)`` form a horizontal strip on the rim; peel it
    off and recurse.
    """
    lam = as_partition(lam)
    mu = tuple(mu)
    if not mu:
        return 1 if not lam else 0
    if sum(lam) != sum(mu) or len(lam) > len(mu):
        return 0
    *rest, last = mu
    return sum(kostka(nu, tuple(rest)) for nu in _horizontal_strips(lam, last))


@lru_cache(maxsize=None)
def _schur_coeffs(lam: Partition, r: int) -> dict[Partition, Fraction]:
    reduced, c = _split_det(lam, r)
    coeffs = {}
    for mu in partitions_dominated_by(reduced, r):
        k = kostka(reduced, mu)
        if k:
            coeffs[mu] = Fraction(k)
    return _shift(coeffs, c, r)


def schur(b: Sequence[int], r: int) -> SymmetricPolynomial:
    """Schur polynomial ``s_b(x_1, ..., x_r)`` expanded with Kostka numbers."""
    b = as_partition(b)
    _check_rows(b, r)
    return SymmetricPolynomial(r, _schur_coeffs(b, r))


# -- Jack / zonal -----------------------------------------------------------


@lru_cache(maxsize=None)
def _stanley_action(mu: Partition, r: int, alpha: Fraction) -> dict[Partition, Fraction]:
    """Monomial-basis expansion of ``D m_mu`` in ``r`` variables."""
    out: dict[tuple[int, ...], Fraction] = defaultdict(Fraction)
    half_alpha = alpha / 2

    def record(e: list[int], c) -> None:
        # only sorted exponent vectors index the monomial basis
        if all(e[i] >= e[i + 1] for i in range(r - 1)):
            out[tuple(e)] += c

    for e in _distinct_permutations(padded(mu, r)):
        e = list(e)
        diag = half_alpha * sum(x * (x - 1) for x in e)
        for i in range(r):
            for j in range(i + 1, r):
                a, b = e[i], e[j]
                if a == b:
                    diag += a
                elif a > b:
                    # (a x^{a+1} y^b - b x^a y^{b+1} + [i<->j]) / (x - y), d = a - b
                    d = a - b
                    f = e.copy()
                    for s in range(d + 1):
                        f[i], f[j] = b + d - s, b + s
                        record(f, a)
                    for s in range(d - 1):
                        f[i], f[j] = b + d - 1 - s, b + s + 1
                        record(f, -b)
        record(e, diag)
    return {as_partition(e): c for e, c in out.items() if c}


@lru_cache(maxsize=None)
def _jack_coeffs(lam: Partition, r: int, alpha: Fraction) -> dict[Partition, Fraction]:
    reduced, shift = _split_det(lam, r)
    order = partitions_dominated_by(reduced, r)
    actions = {mu: _stanley_action(mu, r, alpha) for mu in order}
    top = actions[reduced].get(reduced, Fraction(0))
    coeffs: dict[Partition, Fraction] = {reduced: Fraction(1)}
    for idx, nu in enumerate(order[1:], start=1):
        gap = top - actions[nu].get(nu, Fraction(0))
        if gap == 0:
            raise SingularElimination(f"degenerate eigenvalue for {nu} below {reduced}")
        acc = sum(
            (coeffs[mu] * actions[mu].get(nu, 0) for mu in order[:idx] if mu in coeffs),
            Fraction(0),
        )
        if acc:
            coeffs[nu] = acc / gap
    return _shift(coeffs, shift, r)


def jack_p(lam: Sequence[int], r: int, alpha=2) -> SymmetricPolynomial:
    """Jack polynomial ``P_lam^(alpha)`` in ``r`` variables (coefficient of ``m_lam`` is 1)."""
    lam = as_partition(lam)
    _check_rows(lam, r)
    return SymmetricPolynomial(r, _jack_coeffs(lam, r, Fraction(alpha)))


@lru_cache(maxsize=None)
def _spherical(m: Partition, r: int) -> SymmetricPolynomial:
    p = jack_p(m, r, 2)
    return p.scale(1 / p.at_ones())


def spherical(m: Sequence[int], r: int) -> SymmetricPolynomial:
    """Zonal polynomial indexed by ``m`` in ``r`` variables, scaled to equal 1 at ``(1, ..., 1)``."""
    m = as_partition(m)
    _check_rows(m, r)
    return _spherical(m, r)


def c_factor(m: Sequence[int], r: int) -> int:
    """``prod_{(i, j) in m} (r - i + 2j - 1)``: the value of the zonal polynomial at ones."""
    m = as_partition(m)
    return prod(r - i + 2 * j - 1 for i, row in enumerate(m, 1) for j in range(1, row + 1))


@lru_cache(maxsize=None)
def _transition(b: Partition, r: int) -> TransitionRow:
    reduced, shift = _split_det(b, r)
    remainder = dict(_schur_coeffs(reduced, r))
    entries: dict[Partition, Fraction] = {}
    for mu in partitions_dominated_by(reduced, r):
        c = remainder.get(mu)
        if not c:
            continue
        sph = _spherical(mu, r)
        pivot = sph[mu]
        if pivot == 0:
            raise SingularElimination(f"spherical({mu}, {r}) has zero leading coefficient")
        coef = c / pivot
        entries[mu] = coef
        for nu, v in sph.coeffs.items():
            remainder[nu] = remainder.get(nu, Fraction(0)) - coef * v
    if any(remainder.values()):
        raise SingularElimination(f"elimination of s_{reduced} left a nonzero remainder")
    return TransitionRow(b, r, _shift(entries, shift, r))


def schur_to_spherical(b: Sequence[int], r: int) -> TransitionRow:
    """Expand ``s_b`` in ``r`` variables over spherical polynomials.

    Coefficients come from triangular elimination in dominance order, so the
    support consists of partitions dominated by ``b``.
    """
    b = as_partition(b)
    _check_rows(b, r)
    return _transition(b, r)
