from fractions import Fraction

import pytest
from hypothesis import given
from hypothesis import strategies as st

from weylchain.errors import PreconditionError
from weylchain.rootdata import (
    Root,
    alpha_coords,
    cartan_matrix,
    fundamental_weight,
    lambda_circ,
    lambda_sp,
    monomial_degree,
    pairing,
    positive_roots,
    simple_roots,
    weight_from_u,
)


@pytest.mark.parametrize("family", ["B", "C"])
@pytest.mark.parametrize("n", range(2, 9))
def test_root_count(family, n):
    roots = positive_roots(family, n)
    assert len(roots) == n * n
    assert len(set(roots)) == n * n
    assert all(r.positive for r in roots)


def test_b3_cartan_matrix():
    assert cartan_matrix("B", 3) == ((2, -1, 0), (-1, 2, -2), (0, -1, 2))


def test_c3_cartan_is_transpose_of_b3():
    b, c = cartan_matrix("B", 3), cartan_matrix("C", 3)
    assert c == tuple(zip(*b))


def test_lambda_circ_example():
    w = lambda_circ(3, 2)
    assert w.alpha_coords == (1, 2, 2)
    assert [pairing(w, i) for i in (1, 2, 3)] == [0, 1, 0]
    assert w.u_coords() == (1, 1, 0)


@pytest.mark.parametrize("n", range(2, 7))
def test_lambda_circ_is_fundamental_times_multiplicity(n):
    for k in range(1, n + 1):
        w = lambda_circ(n, k)
        expect = [0] * n
        expect[k - 1] = 2 if k == n else 1
        assert [pairing(w, i) for i in range(1, n + 1)] == expect
    for k in range(1, n):
        assert lambda_circ(n, k) == fundamental_weight("B", n, k)


def test_lambda_sp_half_integral():
    w = lambda_sp(3, 1)
    assert w.alpha_coords == (1, 1, Fraction(1, 2))
    assert [pairing(w, i) for i in (1, 2, 3)] == [1, 0, 0]


@pytest.mark.parametrize("family", ["B", "C"])
def test_simple_root_pairings_reproduce_cartan(family):
    n = 4
    a = cartan_matrix(family, n)
    for m, r in enumerate(simple_roots(family, n)):
        w = weight_from_u(family, n, r.u_vector())
        assert [pairing(w, i) for i in range(1, n + 1)] == list(a[m])


@pytest.mark.parametrize("family", ["B", "C"])
def test_alpha_coords_match_u_vector(family):
    for r in positive_roots(family, 5):
        assert weight_from_u(family, 5, r.u_vector()).alpha_coords == alpha_coords(r)
        assert alpha_coords(-r) == tuple(-x for x in alpha_coords(r))


def test_invalid_roots():
    with pytest.raises(PreconditionError):
        Root("B", 3, "long2", 1)
    with pytest.raises(PreconditionError):
        Root("C", 3, "diff", 2, 1)
    with pytest.raises(PreconditionError):
        lambda_circ(3, 4)


@given(st.data())
def test_monomial_degree_additive(data):
    n = data.draw(st.integers(2, 6))
    roots = positive_roots("B", n)
    pick = st.tuples(st.sampled_from(roots + tuple(-r for r in roots)), st.integers(1, 3))
    a = data.draw(st.lists(pick, min_size=1, max_size=4))
    b = data.draw(st.lists(pick, min_size=1, max_size=4))
    da, db, dab = monomial_degree(a), monomial_degree(b), monomial_degree(a + b)
    assert dab == tuple(x + y for x, y in zip(da, db))


def test_monomial_degree_examples():
    n, k = 5, 3
    y = -Root("B", n, "short", k)
    assert monomial_degree([(y, 1)]) == (0, 0, -1, -1, -1)
    assert monomial_degree([], n=4) == (0, 0, 0, 0)


@pytest.mark.parametrize("n", range(2, 9))
def test_lowering_by_u_k_steps_down_one_weight(n):
    for k in range(1, n + 1):
        u_k = alpha_coords(Root("B", n, "short", k))
        assert u_k == tuple(int(i >= k) for i in range(1, n + 1))
        stepped = tuple(a - b for a, b in zip(lambda_circ(n, k).alpha_coords, u_k))
        assert stepped == lambda_circ(n, k - 1).alpha_coords


def test_lambda_circ_examples():
    assert lambda_circ(3, 0).alpha_coords == (0, 0, 0)
    assert lambda_circ(2, 2).alpha_coords == (1, 2)
    assert pairing(lambda_circ(4, 2), 2) == 1
    assert pairing(lambda_circ(4, 2), 1) == 0
    assert pairing(lambda_circ(4, 4), 4) == 2
