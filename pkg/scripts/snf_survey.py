"""Elementary divisors of the Weyl lattice inside the exterior power, recorded as data.

    python scripts/snf_survey.py --max-n 5
"""

from __future__ import annotations

import argparse
import json
import sys
from dataclasses import dataclass
from math import comb

from weylchain.weylmod import snf_profile


@dataclass(frozen=True)
class SnfConfig:
    min_n: int = 2
    max_n: int = 5


def main() -> int:
    ap = argparse.ArgumentParser(description=__doc__.splitlines()[0])
    ap.add_argument("--min-n", type=int, default=2)
    ap.add_argument("--max-n", type=int, default=5)
    args = ap.parse_args()
    cfg = SnfConfig(args.min_n, args.max_n)
    ok = True
    for n in range(cfg.min_n, cfg.max_n + 1):
        for k in range(1, n + 1):
            prof = snf_profile(n, k)
            expected_even = comb(2 * n + 1, k - 2) if k >= 2 else 0
            ok &= prof["even"] == expected_even
            print(json.dumps({"n": n, "k": k, "expected_even": expected_even,
                              **{key: (val if key != "divisors" else {str(d): c for d, c in val.items()})
                                 for key, val in prof.items()}}))
    return 0 if ok else 1


if __name__ == "__main__":
    sys.exit(main())
