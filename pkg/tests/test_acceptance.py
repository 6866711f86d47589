"""Acceptance criteria, one test and one printed PASS/FAIL line each.

Every criterion is an exact integer or subspace identity, so the tolerance is
zero throughout. Lines are printed straight to the terminal so they show up in
``pytest -v`` output without ``-s``.
"""

from math import comb

import pytest

from weylchain.chevalley import relation_check
from weylchain.errors import DivisibilityError
from weylchain.sublattice import brute_force_minimal, key, minimal_submodules, verify_uniqueness
from weylchain.wedge import generator_set
from weylchain.weylmod import (
    chain,
    grassmann_module,
    kernel_as_module,
    lowering_suite,
    nucleus,
    sigma_suite,
    snf_profile,
    splitting_decomposition,
    symplectic_module,
    nucleus_report,
    nucleus_iso_report,
    trivial_action,
    weyl_action,
    weyl_module,
)


@pytest.fixture
def verdict(capsys):
    def emit(number: int, title: str, failures: list, checked: int):
        status = "PASS" if not failures else "FAIL"
        line = f"[criterion {number:>2}] {status}  {title}  ({checked} checks, tolerance exact"
        line += f", {len(failures)} failing: {failures[:5]})" if failures else ")"
        with capsys.disabled():
            print("\n" + line)
        assert not failures, line

    return emit


def _binom(a, b):
    return comb(a, b) if b >= 0 else 0


def _failed(rep, tag):
    return [f"{tag}:{c.id}" for c in rep.failures]


def test_criterion_01_dimension_formulas(verdict):
    bad, count = [], 0
    for n in range(2, 6):
        N = 2 * n + 1
        for k in range(1, n + 1):
            count += 2
            if weyl_module("B", n, k, 2).dim != comb(N, k):
                bad.append(f"V({n},{k})")
            if grassmann_module("B", n, k, 2).dim != comb(N, k) - _binom(N, k - 2):
                bad.append(f"W2({n},{k})")
            for p in (0, 3, 5):
                count += 1
                if grassmann_module("B", n, k, p).dim != comb(N, k):
                    bad.append(f"W{p}({n},{k})")
    verdict(1, "Weyl and Grassmann module dimensions, n = 2..5", bad, count)


def test_criterion_02_kernel_dimension(verdict):
    bad, count = [], 0
    for n in range(2, 6):
        N = 2 * n + 1
        for k in range(1, n + 1):
            kd = weyl_module("B", n, k, 2).kernel.dim
            even = snf_profile(n, k)["even"]
            count += 3
            if kd != _binom(N, k - 2):
                bad.append(f"K({n},{k})={kd}")
            if even != kd:
                bad.append(f"snf({n},{k})={even}")
            for p in (3, 5):
                if weyl_module("B", n, k, p).kernel.dim != 0:
                    bad.append(f"K{p}({n},{k})")
    verdict(2, "kernel dimension and even elementary divisors agree", bad, count)


def test_criterion_03_nucleus(verdict):
    bad, count = [], 0
    for n in range(2, 5):
        for k in range(1, n + 1):
            rep = nucleus_report(n, k)
            count += len(rep.checks)
            bad += _failed(rep, f"{n},{k}")
            if n <= 3 and not {"oracle_image", "oracle_preimage"} <= {c.id for c in rep.checks}:
                bad.append(f"oracle-missing({n},{k})")
    verdict(3, "nucleus dimension and geometric span (oracle at n <= 3)", bad, count)


def test_criterion_04_nucleus_isomorphism(verdict):
    bad, count = [], 0
    for n in range(2, 5):
        for k in range(2, n + 1):
            rep = nucleus_iso_report(n, k)
            count += len(rep.checks)
            bad += _failed(rep, f"{n},{k}")
    verdict(4, "nucleus isomorphic to the previous Weyl module, nucleus onto kernel", bad, count)


def test_criterion_05_chain(verdict):
    bad, count = [], 0
    for n in range(2, 5):
        for k in range(1, n + 1):
            rep = chain(n, k, certify=n <= 3).report
            count += len(rep.checks)
            bad += _failed(rep, f"{n},{k}")
            if n <= 3 and not any(c.id.startswith("quotient_iso") for c in rep.checks):
                bad.append(f"certificate-missing({n},{k})")
    verdict(5, "chain dimensions, quotients and section isomorphisms", bad, count)


def test_criterion_06_lowering_and_splitting(verdict):
    bad, count = [], 0
    for n in range(2, 5):
        for k in range(1, n + 1):
            for rep in (lowering_suite(n, k), splitting_decomposition(n, k)):
                count += len(rep.checks)
                bad += _failed(rep, f"{rep.suite}{n},{k}")
            if k >= 2:
                rep = kernel_as_module(n, k)
                count += len(rep.checks)
                bad += _failed(rep, f"kernel{n},{k}")
    verdict(6, "lowering-vector identities and vector-space splitting", bad, count)


def test_criterion_07_sigma(verdict):
    bad, count = [], 0
    for n in range(2, 4):
        for k in range(1, n + 1):
            rep = sigma_suite(n, k)
            count += len(rep.checks)
            bad += _failed(rep, f"{n},{k}")
    verdict(7, "symplectic and orthogonal root vectors on the exterior powers", bad, count)


def test_criterion_08_relations(verdict):
    bad, count = [], 0
    for n in range(2, 7):
        rep = relation_check(n)
        count += len(rep.checks)
        bad += _failed(rep, str(n))
    verdict(8, "Chevalley relations and nilpotency exponents, n = 2..6", bad, count)


def test_criterion_09_uniqueness_and_socle(verdict):
    bad, count = [], 0
    for n, k in ((3, 2), (3, 3), (4, 2), (4, 3), (4, 4)):
        rep = verify_uniqueness(n, k)
        count += len(rep.checks)
        bad += _failed(rep, f"{n},{k}")
    for n in (2, 3, 4):
        m = symplectic_module(n, 2)
        dims = [s.dim for s in minimal_submodules(m)]
        expect = [1] if n % 2 == 0 else [m.dim]
        count += 1
        if dims != expect:
            bad.append(f"socle{n}={dims}")
    verdict(9, "unique chain of submodules for k <= 4 and the socle parity rule", bad, count)


def _small_modules():
    out = [trivial_action(2)]
    for n in (2, 3):
        for k in range(1, n + 1):
            for m in (grassmann_module("B", n, k, 2), symplectic_module(n, k)):
                if m.dim <= 14:
                    out.append(m.section().action)
    for n, k in ((2, 1), (2, 2), (3, 1)):
        out.append(weyl_action(n, k)[0])
    return out


def test_criterion_10_properties(verdict):
    bad, count = [], 0
    for n in range(2, 5):
        for k in range(1, n + 1):
            mods = [grassmann_module("B", n, k, p) for p in (2, 3)]
            mods += [symplectic_module(n, k), nucleus(n, k, oracle_max_n=0).spun]
            mods += chain(n, k, certify=False).modules
            for m in mods:
                count += 1
                if m.closure_residual():
                    bad.append(f"closure({m.ambient},{m.dim})")
    for fam in ("B", "C"):
        for n in range(2, 6):
            for k in range(1, n + 1):
                count += 1
                try:
                    generator_set(fam, n, k)
                except DivisibilityError:
                    bad.append(f"divisibility({fam},{n},{k})")
    for act in _small_modules():
        count += 1
        a = sorted(key(s) for s in minimal_submodules(act))
        b = sorted(key(s) for s in brute_force_minimal(act))
        if a != b:
            bad.append(f"socle(dim {act.dim})")
    verdict(10, "closure residuals, exact divided powers, socle oracle", bad, count)
