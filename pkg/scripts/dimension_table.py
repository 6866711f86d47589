"""Dimension table of Weyl, Grassmann, kernel and nucleus modules over several fields.

    python scripts/dimension_table.py --max-n 5 --primes 0 2 3 5
"""

from __future__ import annotations

import argparse
import csv
import sys
import time
from dataclasses import dataclass, field
from math import comb

from weylchain.weylmod import grassmann_module, nucleus, weyl_module


@dataclass(frozen=True)
class TableConfig:
    min_n: int = 2
    max_n: int = 4
    primes: tuple[int, ...] = (0, 2, 3)
    columns: tuple[str, ...] = field(
        default=("n", "k", "p", "weyl", "grassmann", "kernel", "nucleus", "formula_ok", "seconds")
    )


def rows(cfg: TableConfig):
    for n in range(cfg.min_n, cfg.max_n + 1):
        N = 2 * n + 1
        for k in range(1, n + 1):
            for p in cfg.primes:
                t0 = time.perf_counter()
                wm = weyl_module("B", n, k, p)
                W = grassmann_module("B", n, k, p)
                kdim = wm.kernel.dim if wm.kernel is not None else 0
                nuc = nucleus(n, k, oracle_max_n=0).dim if p == 2 else ""
                low = comb(N, k - 2) if p == 2 and k >= 2 else 0
                ok = wm.dim == comb(N, k) and W.dim == comb(N, k) - low and kdim == low
                yield (n, k, p, wm.dim, W.dim, kdim, nuc, ok, round(time.perf_counter() - t0, 3))


def main() -> int:
    ap = argparse.ArgumentParser(description=__doc__.splitlines()[0])
    ap.add_argument("--min-n", type=int, default=2)
    ap.add_argument("--max-n", type=int, default=4)
    ap.add_argument("--primes", type=int, nargs="+", default=[0, 2, 3])
    args = ap.parse_args()
    cfg = TableConfig(args.min_n, args.max_n, tuple(args.primes))
    out = csv.writer(sys.stdout)
    out.writerow(cfg.columns)
    ok = True
    for r in rows(cfg):
        out.writerow(r)
        ok &= r[7]
    return 0 if ok else 1


if __name__ == "__main__":
    sys.exit(main())
