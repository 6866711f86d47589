"""Submodule lattices of V(lambda_k) over F_2 and the number of chains with binomial dimensions.

    python scripts/uniqueness_survey.py --max-n 4 --node-cap 64
"""

from __future__ import annotations

import argparse
import json
import sys
import time
from dataclasses import asdict, dataclass
from math import comb

from weylchain.errors import ScaleError
from weylchain.sublattice import full_lattice
from weylchain.weylmod import weyl_action


@dataclass(frozen=True)
class SurveyConfig:
    min_n: int = 2
    max_n: int = 4
    max_k: int = 4
    node_cap: int = 64


@dataclass
class SurveyRow:
    n: int
    k: int
    module_dim: int
    node_dims: list[int] | None
    qualifying_chains: int | None
    seconds: float
    note: str = ""


def survey(cfg: SurveyConfig):
    for n in range(cfg.min_n, cfg.max_n + 1):
        for k in range(1, min(n, cfg.max_k) + 1):
            act, _ = weyl_action(n, k)
            t0 = time.perf_counter()
            try:
                lat = full_lattice(act, cfg.node_cap)
            except ScaleError as exc:
                yield SurveyRow(n, k, act.dim, None, None, round(time.perf_counter() - t0, 3), str(exc))
                continue
            chains = lat.chains_with_dims([comb(2 * n + 1, i) for i in range(k + 1)])
            yield SurveyRow(n, k, act.dim, lat.dims, len(chains), round(time.perf_counter() - t0, 3))


def main() -> int:
    ap = argparse.ArgumentParser(description=__doc__.splitlines()[0])
    ap.add_argument("--min-n", type=int, default=2)
    ap.add_argument("--max-n", type=int, default=4)
    ap.add_argument("--max-k", type=int, default=4)
    ap.add_argument("--node-cap", type=int, default=64)
    args = ap.parse_args()
    cfg = SurveyConfig(args.min_n, args.max_n, args.max_k, args.node_cap)
    ok = True
    for row in survey(cfg):
        print(json.dumps(asdict(row)))
        ok &= row.qualifying_chains in (1, None)
    return 0 if ok else 1


if __name__ == "__main__":
    sys.exit(main())
