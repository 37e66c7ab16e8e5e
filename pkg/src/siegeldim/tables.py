"""Published numeric tables of cusp-form dimensions and a checker for them."""

from __future__ import annotations

from concurrent.futures import ThreadPoolExecutor
from dataclasses import dataclass

from .dimension import (
    closed_form_vector_n3,
    dim_closed_form,
    dim_scalar,
    dim_scalar_via_shintani,
    dim_vector,
)
from .partitions import WeightVector

__all__ = ["TableSpec", "TABLES", "Cell", "CellResult", "cells", "verify"]


@dataclass(frozen=True)
class TableSpec:
    table_id: str
    degree: int
    vector: bool
    # (k, N) -> dimension
    expected: dict[tuple[int, int], int]

    def weight(self, k: int) -> WeightVector:
        if self.vector:
            return WeightVector((k + 1,) + (k,) * (self.degree - 1))
        return WeightVector.scalar(k, self.degree)


def _grid(ks, rows) -> dict[tuple[int, int], int]:
    return {(k, N): int(v) for N, values in rows.items() for k, v in zip(ks, values)}


TABLES: dict[str, TableSpec] = {
    "n1": TableSpec("n1", 1, False, _grid(range(3, 20), {
        3: "0 1 2 3 4 5 6 7 8 9 10 11 12 13 14 15 16".split(),
        4: "1 3 5 7 9 11 13 15 17 19 21 23 25 27 29 31 33".split(),
        5: "4 9 14 19 24 29 34 39 44 49 54 59 64 69 74 79 84".split(),
    })),
    "n2": TableSpec("n2", 2, False, _grid(range(4, 12), {
        3: "15 76 200 405 709 1130 1686 2395".split(),
        4: "360 1352 3240 6280 10728 16840 24872 35080".split(),
        5: "5655 18980 43680 83005 140205 218530 321230 451555".split(),
    })),
    "n3": TableSpec("n3", 3, False, _grid(range(5, 9), {
        3: "41132 260624 1036100 3154151".split(),
        4: "14400512 87671808 345492480 1048957952".split(),
        5: "2189096000 13202280000 51921714000 157545444875".split(),
    })),
    "n4": TableSpec("n4", 4, False, _grid(range(6, 9), {
        3: "4579839810 59162254866 456282921627".split(),
        4: "103260267479040 1412646545915904 11110964624621568".split(),
        5: "429562396640081250 5989030815121331250 47380818119506096875".split(),
    })),
    "n5": TableSpec("n5", 5, False, _grid(range(7, 9), {
        3: "54749238798613788 1961103357322399719".split(),
        4: "320755407836707217735680 11468658955208332371034112".split(),
        5: "95447256764961220187148437500 3412305106826559796929248046875".split(),
    })),
    "n6": TableSpec("n6", 6, False, _grid(range(8, 9), {
        3: ["14338236964403459094697389537"],
        4: ["62657675456744807193941531065954861056"],
        5: ["3159011529622615201202592700939984097900390625"],
    })),
    "vector_n3": TableSpec("vector_n3", 3, True, _grid(range(5, 9), {
        3: "210210 1178268 4357626 12622974".split(),
        4: "72432640 395006976 1451584512 4196369408".split(),
        5: "10968753250 59435649000 218097857250 630209284250".split(),
    })),
}


@dataclass(frozen=True)
class Cell:
    table_id: str
    k: int
    level: int
    path: str


@dataclass(frozen=True)
class CellResult:
    cell: Cell
    expected: int
    computed: object  # Fraction, or the error message if evaluation failed

    @property
    def ok(self) -> bool:
        return self.computed == self.expected


def applicable_paths(table: TableSpec) -> tuple[str, ...]:
    if table.vector:
        return ("vector", "closed")
    return ("t115", "c12", "closed", "vector")


def cells(table_ids=None, path: str = "all") -> list[Cell]:
    """Cells to check, in table / level / weight / path order."""
    out = []
    for tid in table_ids or TABLES:
        table = TABLES[tid]
        paths = applicable_paths(table)
        if path != "all":
            # scalar-only paths fall back to the vector route for vector tables
            paths = (path,) if path in paths else ("vector",)
        for k, N in sorted(table.expected, key=lambda kn: (kn[1], kn[0])):
            for p in paths:
                out.append(Cell(tid, k, N, p))
    return out


def evaluate(cell: Cell):
    table = TABLES[cell.table_id]
    n, k, N = table.degree, cell.k, cell.level
    if table.vector:
        if cell.path == "closed":
            return closed_form_vector_n3(k, N).total
        return dim_vector(table.weight(k), N).total
    if cell.path == "t115":
        return dim_scalar(n, k, N).total
    if cell.path == "c12":
        return dim_scalar_via_shintani(n, k, N).total
    if cell.path == "closed":
        return dim_closed_form(n, k, N).total
    if cell.path == "vector":
        return dim_vector(table.weight(k), N).total
    raise ValueError(f"unknown path {cell.path!r}")


def _check(cell: Cell) -> CellResult:
    expected = TABLES[cell.table_id].expected[(cell.k, cell.level)]
    try:
        computed = evaluate(cell)
    except Exception as exc:  # reported as a failing cell
        computed = f"{type(exc).__name__}: {exc}"
    return CellResult(cell, expected, computed)


def verify(table_ids=None, path: str = "all", workers: int = 4) -> list[CellResult]:
    """Recompute every requested cell; results keep the order of :func:`cells`."""
    todo = cells(table_ids, path)
    with ThreadPoolExecutor(max_workers=workers) as pool:
        return list(pool.map(_check, todo))
