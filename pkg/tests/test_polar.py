import pytest

from weylchain.errors import PreconditionError
from weylchain.polar import (
    count_totally_singular,
    nucleus_oracle_vectors,
    polar_form,
    quadratic_form,
    singular_points,
    totally_singular_subspaces,
    wedge_bits,
)
from weylchain.wedge import colex_rank


def test_singular_point_count_n2():
    assert len(singular_points(2)) == 15


@pytest.mark.parametrize("n", [2, 3])
def test_enumeration_matches_closed_form(n):
    for d in range(n + 1):
        assert len(totally_singular_subspaces(n, d)) == count_totally_singular(n, d)


def test_nucleus_spans_radical():
    n = 3
    e7 = 1 << (2 * n)
    assert quadratic_form(n, e7) == 1
    assert all(polar_form(n, e7, x) == 0 for x in range(1 << (2 * n + 1)))


def test_polarization():
    n = 2
    for x in range(32):
        for y in range(32):
            assert polar_form(n, x, y) == quadratic_form(n, x ^ y) ^ quadratic_form(n, x) ^ quadratic_form(n, y)


def test_wedge_bits_of_basis_vectors():
    assert wedge_bits([0b001, 0b100], 3) == 1 << colex_rank((1, 3))
    # (e1 + e2) ^ e2 = e1 ^ e2
    assert wedge_bits([0b011, 0b010], 3) == 1 << colex_rank((1, 2))


def test_oracle_k1_is_nucleus():
    assert nucleus_oracle_vectors(2, 1) == [1 << colex_rank((5,))]


def test_rank_guard():
    with pytest.raises(PreconditionError):
        totally_singular_subspaces(4, 1)
