"""Re-derive every tabulated dimension along every applicable route.

Cells that disagree are printed.  The degree-6 scalar table agrees only with
its own closed form; see the README for the analysis.
"""

import time

from siegeldim.tables import verify


def main() -> None:
    start = time.perf_counter()
    results = verify(path="all")
    elapsed = time.perf_counter() - start
    bad = [r for r in results if not r.ok]
    print(f"{len(results) - len(bad)}/{len(results)} checks agree ({elapsed:.2f} s)")
    for r in bad:
        c = r.cell
        print(f"    {c.table_id} k={c.k} N={c.level} [{c.path}]: "
              f"table {r.expected}, computed {r.computed}")


if __name__ == "__main__":
    main()
