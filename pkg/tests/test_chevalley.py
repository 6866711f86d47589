import pytest

from weylchain.chevalley import (
    ambient_dim,
    ortho_generator,
    relation_check,
    restrict_to_hyperplane,
    root_operator,
    symp_generator,
)
from weylchain.errors import PreconditionError
from weylchain.rootdata import positive_roots


@pytest.mark.parametrize("n", range(2, 7))
def test_relations(n):
    rep = relation_check(n)
    assert rep.passed, [c.id for c in rep.failures]
    assert len(rep.checks) > 0


def test_short_root_vector_on_basis():
    # X(u1) on B2: e_{n+1} -> e_{2n+1} -> -2 e_1
    x = ortho_generator(2, "X(u1)").matrix
    assert x.apply({2: 1}) == {4: 1}
    assert x.apply({4: 1}) == {0: -2}
    y = ortho_generator(2, "Y(u1)").matrix
    assert y.apply({0: 1}) == {4: -1}
    assert y.apply({4: 1}) == {2: 2}


def test_divided_square_is_integral():
    sq = ortho_generator(3, "X(u2)^2/2").matrix
    assert sq.apply({4: 1}) == {1: -1}


def test_long_root_vectors_type_c():
    u = symp_generator(2, "U(2u1)").matrix
    assert u.apply({2: 1}) == {0: 1}
    assert u.apply({0: 1}) == {}


def test_hyperplane_restriction_shape():
    m = restrict_to_hyperplane(ortho_generator(3, "X(u1-u2)").matrix, 3)
    assert m.shape == (6, 6)
    assert m == symp_generator(3, "U(u1-u2)").matrix


@pytest.mark.parametrize("family", ["B", "C"])
def test_ambient_dims(family):
    assert ambient_dim(family, 4) == (9 if family == "B" else 8)
    for r in positive_roots(family, 4):
        assert root_operator(r).matrix.shape == (ambient_dim(family, 4),) * 2


def test_unknown_label():
    with pytest.raises(PreconditionError):
        ortho_generator(2, "Z(u1)")
