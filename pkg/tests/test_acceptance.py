"""Exit criteria.  Every check is exact (zero tolerance) unless stated."""

import time
from fractions import Fraction

import pytest

from siegeldim.dimension import (
    asymptotics,
    c_scalar,
    c_vector,
    closed_form_low_degree,
    dim_scalar,
    dim_scalar_via_shintani,
    dim_vector,
)
from siegeldim.partitions import branching_mult, branching_support, weyl_dim
from siegeldim.rational_core import bernoulli
from siegeldim.shintani import shintani_special
from siegeldim.symfunc import c_factor, schur, schur_to_spherical, spherical
from siegeldim.tables import TABLES, verify

from oracles import (
    binomial_recurrence_holds,
    count_ssyt,
    gt_multiplicity,
    jacobi_trudi,
    partitions_upto,
    vsc_denominator,
)

LEVELS = (3, 4, 5, 7, 9, 12)
GRID = [(n, k, N) for n in range(1, 7) for k in range(n + 2, n + 9) for N in LEVELS]

criterion = pytest.mark.criterion


# -- 1 ------------------------------------------------------------------------

SPOT = {
    ("n6", 8, 3): 14338236964403459094697389537,
    ("n5", 7, 4): 320755407836707217735680,
    ("n4", 8, 5): 47380818119506096875,
    ("vector_n3", 5, 3): 210210,
}


@criterion(1, "tables --path all reproduces every published cell, < 10 s")
def test_tables_reproduced():
    for (tid, k, N), value in SPOT.items():
        assert TABLES[tid].expected[(k, N)] == value
    assert sum(len(t.expected) for t in TABLES.values()) == 51 + 24 + 12 + 9 + 6 + 3 + 12

    start = time.perf_counter()
    results = verify(path="all")
    elapsed = time.perf_counter() - start

    failures = [r for r in results if not r.ok]
    for r in failures:
        c = r.cell
        print(f"FAIL {c.table_id} k={c.k} N={c.level} path={c.path}: "
              f"expected {r.expected}, computed {r.computed}")
    assert elapsed < 10
    assert not failures, f"{len(failures)}/{len(results)} cells differ"


# -- 2 ------------------------------------------------------------------------


@criterion(2, "Bernoulli-product path == Shintani path (n<=6) == closed forms (n<=3)")
@pytest.mark.parametrize("n", range(1, 7))
def test_path_agreement(n):
    for _, k, N in (g for g in GRID if g[0] == n):
        a = dim_scalar(n, k, N).total
        assert a == dim_scalar_via_shintani(n, k, N).total, (n, k, N)
        if n <= 3:
            assert a == closed_form_low_degree(n, k, N), (n, k, N)


# -- 3 ------------------------------------------------------------------------


@criterion(3, "vector path at scalar weights == scalar path (n<=4)")
@pytest.mark.parametrize("n", range(1, 5))
def test_vector_scalar_consistency(n):
    for _, k, N in (g for g in GRID if g[0] == n):
        assert dim_vector((k,) * n, N).total == dim_scalar(n, k, N).total, (n, k, N)
        for r in range(n + 1):
            assert c_vector((k,) * n, r) == c_scalar(k, n, r), (n, k, r)


# -- 4 ------------------------------------------------------------------------


@criterion(4, "every proven-range total is a nonnegative integer")
def test_integrality():
    for n, k, N in GRID:
        for report in (dim_scalar(n, k, N), dim_scalar_via_shintani(n, k, N)):
            assert report.total.denominator == 1 and report.total >= 0, (n, k, N)


# -- 5 ------------------------------------------------------------------------


@criterion(5, "Shintani / Bernoulli spot values")
def test_shintani_bernoulli_values():
    assert shintani_special(2, 2) == Fraction(1, 96)
    assert all(shintani_special(1, n) == 0 for n in range(3, 202, 2))
    values = [bernoulli(m) for m in range(201)]
    assert binomial_recurrence_holds(values)
    assert all(values[m].denominator == vsc_denominator(m) for m in range(2, 201, 2))


# -- 6 ------------------------------------------------------------------------

KERNEL = [(lam, r) for r in range(1, 5) for lam in partitions_upto(8, r)]


@criterion(6, "symmetric-function kernel, |partition| <= 8, r <= 4")
@pytest.mark.parametrize("r", range(1, 5))
def test_symfunc_kernel(r):
    for lam in (lam for lam, rr in KERNEL if rr == r):
        sph = spherical(lam, r)
        assert sph.at_ones() == 1
        assert all(c >= 0 for c in sph.scale(c_factor(lam, r)).coeffs.values())
        dense = jacobi_trudi(lam, r)
        assert schur(lam, r).expand() == {e: Fraction(c) for e, c in dense.items()}
        row = schur_to_spherical(lam, r)
        assert row.total() == weyl_dim(tuple(lam) + (0,) * (r - len(lam)))


# -- 7 ------------------------------------------------------------------------


def _weights(n):
    for lam in partitions_upto(12, n):
        yield tuple(lam) + (0,) * (n - len(lam))


@criterion(7, "branching vs skew-tableau oracle, n<=5, |k|<=12")
@pytest.mark.parametrize("n", range(1, 6))
def test_branching(n):
    for k in _weights(n):
        for r in range(1, n + 1):
            full = branching_support(k, r)
            assert sum(m * weyl_dim(b + (0,) * (r - len(b))) for b, m in full) == weyl_dim(k)
            for b, m in full:
                assert m == gt_multiplicity(k, b, r) == branching_mult(k, b, r)
            candidates = partitions_upto(sum(k), r, max_part=k[0])
            oracle = sorted(
                (b, gt_multiplicity(k, b, r))
                for b in candidates
                if gt_multiplicity(k, b, r) and (b + (0,) * r)[r - 1] >= k[-1]
            )
            assert sorted(branching_support(k, r, k[-1])) == oracle


# -- 8 ------------------------------------------------------------------------


@criterion(8, "asymptotics sanity for n=2, k=10")
def test_asymptotics():
    bound = Fraction(2 * 10 - 3, 576) + Fraction(1, 288)
    for N in range(3, 61):
        rep = asymptotics(2, 10, N)
        assert rep.main_term + rep.remainder == rep.report.total
        assert abs(rep.remainder) / Fraction(N) ** 8 <= bound, N
    rep = asymptotics(2, 10, 12)
    assert abs(rep.remainder) / rep.report.total < Fraction(1, 100)
    assert rep.main_term / rep.report.total > Fraction(99, 100)
