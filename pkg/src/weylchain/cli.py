"""Command-line driver: ``weylchain <command> [flags]``.

Exit status is 0 when every check passes, 1 on any failed check, 2 on usage
errors and 3 when a resource guard stops the computation.
"""

from __future__ import annotations

import argparse
import sys
import time
from math import comb
from pathlib import Path

from .config import ScaleLimits
from .errors import ModulusError, PreconditionError, ScaleError
from .report import SKIPPED_SCALE, Check, Report

SUITES = ("theorem2", "theorem4", "chain", "perfect", "sigma", "lemmas", "uniqueness", "relations")
EXIT_OK, EXIT_FAIL, EXIT_USAGE, EXIT_SCALE = 0, 1, 2, 3


class UsageError(Exception):
    pass


def _parser() -> argparse.ArgumentParser:
    common = argparse.ArgumentParser(add_help=False)
    common.add_argument("--n", type=int, required=True, help="rank")
    common.add_argument("--k", type=int, default=None, help="exterior power (default: every valid k)")
    common.add_argument("--p", type=int, default=2, help="characteristic, 0 for the rationals")
    common.add_argument("--family", choices=("B", "C"), default="B")
    common.add_argument("--format", choices=("text", "json"), default="text")
    common.add_argument("--cache-dir", default=None, help="lattice cache and DOT output directory")
    common.add_argument("--max-nodes", type=int, default=64, help="submodule lattice node budget")
    common.add_argument("--max-n", type=int, default=5, help="rank guard")
    common.add_argument("--max-wedge-dim", type=int, default=25000, help="exterior power size guard")
    common.add_argument("--timing", action="store_true", help="record wall time (output is then not reproducible)")

    ap = argparse.ArgumentParser(prog="weylchain", description=__doc__.splitlines()[0])
    sub = ap.add_subparsers(dest="command", required=True)
    sub.add_parser("dims", parents=[common], help="dimension table of Weyl, Grassmann, kernel and nucleus modules")
    v = sub.add_parser("verify", parents=[common], help="run a named verification suite")
    v.add_argument("suite", choices=SUITES)
    sub.add_parser("chain", parents=[common], help="the submodule chain M_0 < ... < M_k")
    sub.add_parser("lattice", parents=[common], help="export the submodule lattice as DOT")
    sub.add_parser("snf", parents=[common], help="elementary divisors of the Weyl lattice in the exterior power")
    sub.add_parser("report-all", parents=[common], help="every suite within scale bounds")
    return ap


def _limits(args) -> ScaleLimits:
    return ScaleLimits(max_n=args.max_n, max_wedge_dim=args.max_wedge_dim, max_nodes=args.max_nodes)


def _ks(args, lo: int = 1, hi: int | None = None) -> list[int]:
    top = args.n if hi is None else min(args.n, hi)
    if args.k is not None:
        if not lo <= args.k <= top:
            raise UsageError(f"--k must lie in {lo}..{top} for this command")
        return [args.k]
    return list(range(lo, top + 1))


def _params(args, **extra) -> dict:
    out = {"family": args.family, "n": args.n, "k": args.k, "p": args.p}
    out.update(extra)
    return out


def _require(args, family: str | None = None, p: int | None = None) -> None:
    if family is not None and args.family != family:
        raise UsageError(f"this command needs --family {family}")
    if p is not None and args.p != p:
        raise UsageError(f"this command needs --p {p}")


# ---------------------------------------------------------------------------
# commands


def cmd_dims(args, limits: ScaleLimits) -> tuple[Report, str]:
    from .weylmod import grassmann_module, nucleus, weyl_module

    rep = Report("dims", _params(args))
    rows = [("k", "weyl", f"grassmann(p={args.p})", "kernel", "nucleus")]
    N = 2 * args.n + 1 if args.family == "B" else 2 * args.n
    for k in _ks(args):
        limits.check_wedge(args.family, args.n, k)
        wm = weyl_module(args.family, args.n, k, args.p)
        W = grassmann_module(args.family, args.n, k, args.p)
        low = comb(N, k - 2) if k >= 2 else 0
        if args.family == "B":
            exp_v, exp_w = comb(N, k), comb(N, k) - (low if args.p == 2 else 0)
            exp_k = low if args.p == 2 else 0
        else:
            exp_v = exp_w = comb(N, k) - low
            exp_k = 0
        rep.compare(f"weyl_dim[{k}]", "Weyl module dimension", exp_v, wm.dim)
        rep.compare(f"grassmann_dim[{k}]", "Grassmann module dimension", exp_w, W.dim)
        kdim = wm.kernel.dim if wm.kernel is not None else 0
        rep.compare(f"kernel_dim[{k}]", "dimension of the kernel onto the exterior power", exp_k, kdim)
        nuc = "-"
        if args.family == "B" and args.p == 2:
            nd = nucleus(args.n, k, oracle_max_n=0).dim
            rep.compare(f"nucleus_dim[{k}]", "nucleus submodule dimension", comb(N, k - 1), nd)
            nuc = str(nd)
        rows.append((str(k), str(wm.dim), str(W.dim), str(kdim), nuc))
    widths = [max(len(r[i]) for r in rows) for i in range(len(rows[0]))]
    table = "\n".join("  ".join(c.rjust(w) for c, w in zip(r, widths)) for r in rows)
    return rep, table


def _per_k(args, limits, suite: str, build, lo: int = 1, hi: int | None = None) -> Report:
    rep = Report(suite, _params(args))
    for k in _ks(args, lo, hi):
        try:
            limits.check_wedge("B", args.n, k)
            sub = build(k)
        except ScaleError as exc:
            if args.k is not None:
                raise
            rep.add(Check(f"k={k}", "skipped by a scale guard", None, str(exc), SKIPPED_SCALE))
            continue
        rep.extend(sub, prefix=f"k={k}.")
    return rep


def cmd_verify(args, limits: ScaleLimits) -> Report:
    from . import sublattice as sl
    from . import weylmod as wm
    from .chevalley import relation_check

    suite = args.suite
    if suite == "relations":
        return relation_check(args.n)
    if suite == "sigma":
        for k in _ks(args):
            limits.check_wedge("C", args.n, k)
        rep = Report("sigma", _params(args, family="C", p=0))
        for k in _ks(args):
            rep.extend(wm.sigma_suite(args.n, k), prefix=f"k={k}.")
        return rep
    _require(args, family="B", p=2)
    limits.check_rank(args.n)
    if suite == "theorem2":
        return _per_k(args, limits, suite, lambda k: wm.nucleus_report(args.n, k))
    if suite == "theorem4":
        def both(k):
            r = wm.nucleus_iso_report(args.n, k)
            r.extend(wm.kernel_as_module(args.n, k), prefix="kernel.")
            return r
        return _per_k(args, limits, suite, both, lo=2)
    if suite == "chain":
        return _per_k(args, limits, suite, lambda k: wm.chain(args.n, k).report)
    if suite == "perfect":
        return _per_k(args, limits, suite, lambda k: wm.perfect_report(args.n, k))
    if suite == "lemmas":
        def both(k):
            r = wm.lowering_suite(args.n, k)
            r.extend(wm.splitting_decomposition(args.n, k), prefix="splitting.")
            return r
        return _per_k(args, limits, suite, both)
    if suite == "uniqueness":
        return _per_k(args, limits, suite, lambda k: sl.verify_uniqueness(args.n, k, limits.max_nodes), hi=4)
    raise UsageError(f"unknown suite {suite}")


def cmd_chain(args, limits: ScaleLimits) -> Report:
    from .weylmod import chain

    _require(args, family="B", p=2)
    limits.check_rank(args.n)
    k = args.n if args.k is None else _ks(args)[0]
    limits.check_wedge("B", args.n, k)
    c = chain(args.n, k)
    rep = c.report
    rep.params["k"] = k
    return rep


def cmd_lattice(args, limits: ScaleLimits) -> tuple[Report, str]:
    from .sublattice import full_lattice
    from .weylmod import weyl_action

    _require(args, family="B", p=2)
    if args.k is None:
        raise UsageError("lattice needs --k")
    k = _ks(args)[0]
    limits.check_wedge("B", args.n, k)
    act, _ = weyl_action(args.n, k)
    lat = full_lattice(act, limits.max_nodes, limits.max_primitive_dim)
    rep = Report("lattice", _params(args))
    rep.flag("closed", "lattice closed under sum and intersection", lat.is_closed(), sorted(lat.dims))
    dot = lat.to_dot(f"V_B{args.n}_lambda{k}")
    if args.cache_dir:
        path = Path(args.cache_dir) / f"lattice-B-n{args.n}-k{k}-p2.dot"
        path.parent.mkdir(parents=True, exist_ok=True)
        path.write_text(dot)
        print(f"wrote {path}", file=sys.stderr)
    return rep, dot


def cmd_snf(args, limits: ScaleLimits) -> Report:
    from .weylmod import generate_lattice, snf_profile

    _require(args, family="B")
    rep = Report("snf", _params(args, p=0))
    for k in _ks(args):
        limits.check_wedge("B", args.n, k)
        if args.cache_dir:
            generate_lattice("B", args.n, k, cache_dir=args.cache_dir, max_wedge_dim=limits.max_wedge_dim)
        prof = snf_profile(args.n, k)
        exp = comb(2 * args.n + 1, k - 2) if k >= 2 else 0
        rep.compare(f"k={k}.even_divisors", "number of even elementary divisors", exp, prof["even"])
        rep.add(Check(f"k={k}.divisors", "elementary divisor histogram", None,
                      {str(d): c for d, c in prof["divisors"].items()}, "pass"))
        rep.add(Check(f"k={k}.divisible_by_4", "observation: divisors divisible by 4", None,
                      prof["divisible_by_4"], "pass"))
    return rep


def cmd_report_all(args, limits: ScaleLimits) -> Report:
    rep = Report("report-all", _params(args))
    jobs = [("dims", None)] + [("verify", s) for s in SUITES] + [("snf", None)]
    for cmd, suite in jobs:
        a = argparse.Namespace(**vars(args))
        a.family, a.p = "B", 2
        a.suite = suite
        name = suite or cmd
        try:
            if cmd == "dims":
                sub, _ = cmd_dims(a, limits)
            elif cmd == "snf":
                sub = cmd_snf(a, limits)
            else:
                sub = cmd_verify(a, limits)
        except ScaleError as exc:
            rep.add(Check(name, "skipped by a scale guard", None, str(exc), SKIPPED_SCALE))
            continue
        rep.extend(sub, prefix=f"{name}.")
    return rep


# ---------------------------------------------------------------------------


def run(argv: list[str] | None = None) -> int:
    ap = _parser()
    try:
        args = ap.parse_args(argv)
    except SystemExit as exc:
        return EXIT_USAGE if exc.code else EXIT_OK
    limits = _limits(args)
    start = time.perf_counter()
    extra = None
    try:
        if args.n < 2:
            raise UsageError("--n must be at least 2")
        if args.command == "dims":
            rep, extra = cmd_dims(args, limits)
        elif args.command == "verify":
            rep = cmd_verify(args, limits)
        elif args.command == "chain":
            rep = cmd_chain(args, limits)
        elif args.command == "lattice":
            rep, extra = cmd_lattice(args, limits)
        elif args.command == "snf":
            rep = cmd_snf(args, limits)
        else:
            rep = cmd_report_all(args, limits)
    except (UsageError, PreconditionError, ModulusError) as exc:
        print(f"weylchain: error: {exc}", file=sys.stderr)
        return EXIT_USAGE
    except ScaleError as exc:
        print(f"weylchain: scale guard: {exc}", file=sys.stderr)
        return EXIT_SCALE
    if args.timing:
        rep.wall_time_ms = round((time.perf_counter() - start) * 1000, 1)
    if args.format == "json":
        print(rep.to_json())
    else:
        if extra:
            print(extra)
        print(rep.to_text())
    return EXIT_OK if rep.passed else EXIT_FAIL


def main() -> None:
    sys.exit(run())


if __name__ == "__main__":
    main()
