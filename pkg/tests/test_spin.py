import pytest

from weylchain.errors import PreconditionError
from weylchain.exactlin import FpSubspace
from weylchain.spin import (
    Action,
    closure_residual,
    direct_sum,
    parallel_spin_iso,
    section,
    spin,
)
from weylchain.weylmod import wedge_action


def jordan_block(p=2):
    """F_p^3 with a raising operator e2 -> e1, e3 -> e2 and its transpose."""
    up = [0, 1, 2] if p == 2 else [{}, {0: 1}, {1: 1}]
    down = [2, 4, 0] if p == 2 else [{1: 1}, {2: 1}, {}]
    return Action(p, 3, {"X": up, "Y": down}, ((2,), (0,), (-2,)))


def test_spin_of_lowest_vector_is_everything():
    a = jordan_block()
    assert spin(a, [0b100]).dim == 3
    assert spin(a, [0b001]).dim == 3


def test_spin_odd_prime():
    a = jordan_block(3)
    assert spin(a, [{2: 1}]).dim == 3


def test_closure_residual_detects_unstable_subspace():
    a = jordan_block()
    assert closure_residual(a, FpSubspace.span(2, 3, [0b001])) > 0
    assert closure_residual(a, FpSubspace.full(2, 3)) == 0


def test_section_of_full_by_zero_is_isomorphic():
    a = wedge_action("B", 2, 2, 2)
    sub = spin(a, [1])
    sec = section(a, sub)
    assert sec.dim == sub.dim
    for v in sub.vectors():
        assert sec.lift(sec.project(v)) == v


def test_parallel_spin_diagonal_is_iso():
    a = wedge_action("B", 2, 1, 2)
    iso = parallel_spin_iso(a, 1, a, 1)
    assert iso.is_graph_iso
    assert iso.dim_graph == 5


def test_parallel_spin_weight_mismatch():
    a = wedge_action("B", 2, 1, 2)
    with pytest.raises(PreconditionError):
        parallel_spin_iso(a, 1, a, 0b10)


def test_parallel_spin_non_primitive_rejected():
    a = wedge_action("B", 2, 1, 2)
    with pytest.raises(PreconditionError):
        # e_{n+1} is moved by X(u1)
        parallel_spin_iso(a, 1 << 2, a, 1 << 2)


def test_nucleus_line_is_primitive_mod_2():
    a = wedge_action("B", 2, 1, 2)
    assert spin(a, [1 << 4]).dim == 1


def test_direct_sum_dimensions():
    a = jordan_block()
    b = direct_sum(a, a)
    assert b.dim == 6
    assert spin(b, [0b100100]).dim == 3
