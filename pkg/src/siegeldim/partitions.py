"""Partitions, weights of GL(n) and Gelfand-Tsetlin branching.

Partitions are plain tuples of nonnegative ints in weakly decreasing order
with trailing zeros stripped.  Weights of GL(n) keep their full length n
(zeros and negative entries allowed) and live in :class:`WeightVector`.
"""

from __future__ import annotations

from collections import defaultdict
from dataclasses import dataclass
from functools import lru_cache
from math import prod
from typing import Iterable, Iterator, Sequence

from .errors import InvalidRank

Partition = tuple

__all__ = [
    "Partition",
    "WeightVector",
    "as_partition",
    "conjugate",
    "dominates",
    "partitions_dominated_by",
    "weyl_dim",
    "interlacing_children",
    "branching_mult",
    "branching_support",
]


def as_partition(parts: Iterable[int]) -> Partition:
    """Normalize ``parts`` into a partition tuple, stripping trailing zeros."""
    p = list(parts)
    if any(x < 0 for x in p):
        raise ValueError(f"partition parts must be nonnegative: {p}")
    if any(p[i] < p[i + 1] for i in range(len(p) - 1)):
        raise ValueError(f"partition parts must be weakly decreasing: {p}")
    while p and p[-1] == 0:
        p.pop()
    return tuple(p)


def conjugate(lam: Sequence[int]) -> Partition:
    lam = as_partition(lam)
    if not lam:
        return ()
    return tuple(sum(1 for part in lam if part >= j) for j in range(1, lam[0] + 1))


def padded(lam: Sequence[int], length: int) -> tuple[int, ...]:
    lam = tuple(lam)
    if len(lam) > length:
        if any(lam[length:]):
            raise ValueError(f"{lam} has more than {length} nonzero parts")
        return lam[:length]
    return lam + (0,) * (length - len(lam))


def dominates(lam: Sequence[int], mu: Sequence[int]) -> bool:
    """True iff ``mu <= lam`` in dominance order (equal weights required)."""
    if sum(lam) != sum(mu):
        return False
    length = max(len(lam), len(mu))
    a = b = 0
    for x, y in zip(padded(lam, length), padded(mu, length)):
        a += x
        b += y
        if b > a:
            return False
    return True


def partitions_dominated_by(lam: Sequence[int], max_len: int) -> list[Partition]:
    """All partitions ``mu <= lam`` with at most ``max_len`` parts.

    The list is sorted lexicographically decreasing, which is a linear
    extension of dominance (``lam`` first).
    """
    lam = as_partition(lam)
    total = sum(lam)
    if len(lam) > max_len:
        return []
    bounds = [sum(lam[: i + 1]) for i in range(max_len)]
    bounds = [b if i < len(lam) else total for i, b in enumerate(bounds)]
    out: list[Partition] = []

    def rec(prefix: list[int], acc: int, cap: int) -> None:
        i = len(prefix)
        left = total - acc
        if i == max_len:
            if left == 0:
                out.append(as_partition(prefix))
            return
        slots = max_len - i
        # remaining parts are at most ``cap`` each and must absorb ``left``
        hi = min(cap, left, bounds[i] - acc)
        lo = -(-left // slots)
        for part in range(hi, lo - 1, -1):
            prefix.append(part)
            rec(prefix, acc + part, part)
            prefix.pop()

    rec([], 0, total)
    return out


@dataclass(frozen=True)
class WeightVector:
    """Highest weight ``(k_1 >= ... >= k_n)`` of an irreducible GL(n) representation."""

    weights: tuple[int, ...]

    def __post_init__(self):
        w = tuple(int(x) for x in self.weights)
        if not w:
            raise ValueError("weight vector must be nonempty")
        if any(w[i] < w[i + 1] for i in range(len(w) - 1)):
            raise ValueError(f"weights must be weakly decreasing: {w}")
        object.__setattr__(self, "weights", w)

    @classmethod
    def scalar(cls, k: int, n: int) -> "WeightVector":
        return cls((k,) * n)

    @property
    def degree(self) -> int:
        return len(self.weights)

    @property
    def proven_range(self) -> bool:
        return self.weights[-1] > self.degree + 1

    @property
    def is_scalar(self) -> bool:
        return len(set(self.weights)) == 1

    def __iter__(self):
        return iter(self.weights)

    def __len__(self):
        return len(self.weights)

    def __getitem__(self, i):
        return self.weights[i]


def _weights(k) -> tuple[int, ...]:
    return k.weights if isinstance(k, WeightVector) else tuple(k)


def weyl_dim(k) -> int:
    """Dimension of the irreducible GL(n) representation of highest weight ``k``."""
    k = _weights(k)
    n = len(k)
    num = prod(k[t] - k[u] + u - t for t in range(n) for u in range(t + 1, n))
    den = prod(u - t for t in range(n) for u in range(t + 1, n))
    return num // den


def interlacing_children(row: Sequence[int]) -> Iterator[tuple[int, ...]]:
    """Yield every ``mu`` of length ``len(row) - 1`` with ``row[i] >= mu[i] >= row[i+1]``.

    These are the highest weights in the (multiplicity-free) restriction
    GL(j) -> GL(j-1).
    """
    row = tuple(row)
    if len(row) <= 1:
        yield ()
        return

    def rec(i: int, prefix: tuple[int, ...]):
        if i == len(row) - 1:
            yield prefix
            return
        for x in range(row[i], row[i + 1] - 1, -1):
            yield from rec(i + 1, prefix + (x,))

    yield from rec(0, ())


@lru_cache(maxsize=None)
def _restriction(k: tuple[int, ...], r: int) -> dict[tuple[int, ...], int]:
    """Multiplicities of GL(r) highest weights (length exactly r) in ``k``."""
    level = {k: 1}
    for _ in range(len(k) - r):
        nxt: dict[tuple[int, ...], int] = defaultdict(int)
        for row, mult in level.items():
            for child in interlacing_children(row):
                nxt[child] += mult
        level = dict(nxt)
    return level


def _check_rank(n: int, r: int) -> None:
    if not 1 <= r <= n:
        raise InvalidRank(f"rank r={r} must satisfy 1 <= r <= n={n}")


def branching_mult(k, b: Sequence[int], r: int) -> int:
    """Multiplicity of the GL(r) representation ``b`` inside ``k`` restricted
    from GL(n), counted as Gelfand-Tsetlin chains from ``k`` down to ``b``."""
    k = _weights(k)
    _check_rank(len(k), r)
    b = tuple(b)
    if len(b) > r:
        if any(b[r:]):
            return 0
        b = b[:r]
    b = b + (0,) * (r - len(b))
    return _restriction(k, r).get(b, 0)


def branching_support(k, r: int, floor: int | None = None) -> list[tuple[Partition, int]]:
    """All ``(b, mult)`` with ``mult = branching_mult(k, b, r) > 0`` and ``b_r >= floor``.

    Sorted lexicographically decreasing in ``b``.  ``b`` is returned as a
    partition tuple (trailing zeros stripped).
    """
    k = _weights(k)
    _check_rank(len(k), r)
    if k[-1] < 0:
        raise ValueError(f"branching needs a polynomial weight (k_n >= 0), got {k}")
    out = [
        (as_partition(b), m)
        for b, m in _restriction(k, r).items()
        if floor is None or b[-1] >= floor
    ]
    out.sort(key=lambda item: padded(item[0], r), reverse=True)
    return out
