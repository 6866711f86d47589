from math import comb

import pytest

from weylchain.errors import ModulusError, PreconditionError, ScaleError
from weylchain.exactlin import FpSubspace, IntLattice, IntMatrix
from weylchain.wedge import colex_rank
from weylchain.weylmod import (
    chain,
    dimension_report,
    generate_lattice,
    grassmann_module,
    group_stability,
    kernel_as_module,
    lowering_suite,
    nucleus,
    perfect_report,
    sigma_suite,
    splitting_decomposition,
    symplectic_module,
    nucleus_report,
    nucleus_iso_report,
    weyl_module,
)


def assert_passed(rep):
    assert rep.passed, [(c.id, c.expected, c.observed) for c in rep.failures]


# --- lattices and Weyl modules ------------------------------------------


@pytest.mark.parametrize("n,k,rank", [(2, 2, 10), (3, 3, 35)])
def test_lattice_rank(n, k, rank):
    lat = generate_lattice("B", n, k)
    assert lat.rank == rank
    assert lat.is_hnf()


@pytest.mark.parametrize("n", [2, 3, 4])
def test_symplectic_natural_lattice_is_full(n):
    assert generate_lattice("C", n, 1) == IntLattice.standard(2 * n)


def test_weyl_module_examples():
    wm = weyl_module("B", 2, 2, 2)
    assert wm.dim == 10 and wm.kernel.dim == 1
    assert weyl_module("B", 3, 1, 2).kernel.dim == 0
    assert weyl_module("C", 3, 3, 2).kernel.dim == 0
    assert weyl_module("B", 3, 3, 0).kernel is None


def test_phi_sends_highest_vector_to_top_wedge():
    wm = weyl_module("B", 3, 2, 2)
    assert wm.phi(wm.hw_vector) == 1 << colex_rank((1, 2))


@pytest.mark.parametrize("n,k,dim", [(2, 2, 9), (3, 3, 28)])
def test_grassmann_examples(n, k, dim):
    assert grassmann_module("B", n, k, 2).dim == dim


@pytest.mark.parametrize("p", [0, 3, 5])
def test_grassmann_full_away_from_two(p):
    for k in (1, 2, 3):
        assert grassmann_module("B", 3, k, p).dim == comb(7, k)


@pytest.mark.parametrize("p", [2, 3])
def test_closure_residuals_vanish(p):
    for n in (2, 3):
        for k in range(1, n + 1):
            for fam in ("B", "C"):
                assert grassmann_module(fam, n, k, p).closure_residual() == 0


def test_cyclic_generator_in_basis():
    m = grassmann_module("B", 3, 2, 2)
    assert m.basis.contains_vector(m.cyclic_vector)
    assert len(m.cyclic_gen) == m.dim
    assert set(m.gens) and all(g.nrows == m.dim for g in m.gens.values())


@pytest.mark.parametrize("n", [2, 3])
def test_hyperalgebra_stable_implies_group_stable(n):
    for k in range(1, n + 1):
        assert group_stability(grassmann_module("B", n, k, 2))
        assert group_stability(symplectic_module(n, k))


def test_bad_arguments():
    with pytest.raises(PreconditionError):
        weyl_module("B", 3, 4, 2)
    with pytest.raises(ModulusError):
        weyl_module("B", 2, 1, 4)
    with pytest.raises(ScaleError):
        generate_lattice("B", 5, 5, max_wedge_dim=100)


def test_lattice_cache_roundtrip(tmp_path):
    lat = generate_lattice("B", 3, 2, cache_dir=tmp_path)
    path = tmp_path / "lattice-B-n3-k2-p0.txt"
    assert path.exists()
    assert generate_lattice("B", 3, 2, cache_dir=tmp_path) == lat


def test_lattice_cache_rejects_tampering(tmp_path):
    path = tmp_path / "lattice-B-n2-k2-p0.txt"
    bogus = IntLattice(10, IntMatrix(1, 10, ((1,) + (0,) * 9,)))
    path.write_text(bogus.dumps())
    lat = generate_lattice("B", 2, 2, cache_dir=tmp_path)
    assert lat.rank == 10
    assert IntLattice.loads(path.read_text()) == lat


# --- nucleus, chain, isomorphisms -------------------------------------------


def test_nucleus_examples():
    n1 = nucleus(2, 1)
    assert n1.dim == 1
    assert n1.image == FpSubspace.span(2, 5, [1 << 4])
    n2 = nucleus(2, 2)
    assert n2.dim == 5 and n2.oracle_dim == 5
    with pytest.raises(PreconditionError):
        nucleus(2, 2, p=3)


@pytest.mark.parametrize("n,k", [(2, 2), (3, 2), (3, 3)])
def test_nucleus_and_isomorphism_reports(n, k):
    assert_passed(nucleus_report(n, k))
    assert_passed(nucleus_iso_report(n, k))


def test_chain_examples():
    c = chain(3, 3)
    assert c.dims == [1, 7, 21, 35]
    assert [b - a for a, b in zip(c.dims, c.dims[1:])] == [6, 14, 14]
    assert_passed(c.report)
    c2 = chain(2, 2)
    assert c2.dims == [1, 5, 10]
    assert_passed(c2.report)


def test_bottom_of_chain_is_trivial():
    c = chain(3, 2)
    act = c.modules[0].section().action
    assert act.dim == 1
    assert not any(any(cols) for cols in act.ops.values())


@pytest.mark.parametrize("n,k", [(2, 2), (3, 3), (3, 2)])
def test_kernel_as_module(n, k):
    assert_passed(kernel_as_module(n, k))


def test_lowering_suite_examples():
    assert_passed(lowering_suite(3, 2))
    assert_passed(lowering_suite(3, 3))


def test_sigma_examples():
    assert_passed(sigma_suite(2, 2))
    rep = sigma_suite(2, 1)
    assert_passed(rep)


@pytest.mark.parametrize("n,k,parts", [(2, 2, (5, 4)), (3, 2, (14, 6)), (3, 1, (6, 1))])
def test_splitting(n, k, parts):
    rep = splitting_decomposition(n, k)
    assert_passed(rep)
    obs = {c.id: c.observed for c in rep.checks}
    assert (obs["symplectic_part"], obs["nucleus_part"]) == parts


def test_perfect_filtration_small():
    assert_passed(perfect_report(3, 3))


def test_dimension_report_p3():
    assert_passed(dimension_report(3, 2, 3))
