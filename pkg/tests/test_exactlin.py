import random
from math import prod

import pytest
import sympy
from hypothesis import given
from hypothesis import strategies as st

from weylchain.errors import ContainmentError, ModulusError
from weylchain.exactlin import (
    FpMatrix,
    FpSubspace,
    IntLattice,
    IntMatrix,
    SparseIntMatrix,
    hnf,
    left_kernel,
    rref,
    smith_diagonal,
    snf_divisors,
    subspace_intersection,
    subspace_ops,
    subspace_sum,
)


def matrices(p, max_rows=6, max_cols=7):
    return st.integers(1, max_cols).flatmap(
        lambda c: st.lists(st.lists(st.integers(0, p - 1), min_size=c, max_size=c), min_size=0, max_size=max_rows)
        .map(lambda rows: (rows, c))
    )


def naive_rank(rows, p):
    m = [list(r) for r in rows]
    rank = 0
    ncols = len(m[0]) if m else 0
    for c in range(ncols):
        piv = next((i for i in range(rank, len(m)) if m[i][c] % p), None)
        if piv is None:
            continue
        m[rank], m[piv] = m[piv], m[rank]
        inv = pow(m[rank][c], -1, p)
        m[rank] = [x * inv % p for x in m[rank]]
        for i in range(len(m)):
            if i != rank and m[i][c] % p:
                f = m[i][c]
                m[i] = [(x - f * y) % p for x, y in zip(m[i], m[rank])]
        rank += 1
    return rank


# --- prime fields ----------------------------------------------------------


def test_rref_example_gf2():
    s = rref(FpMatrix.from_rows(2, [[1, 1, 0], [0, 1, 1], [1, 0, 1]]))
    assert s.dim == 2
    assert s.basis.to_lists() == [[1, 0, 1], [0, 1, 1]]


def test_rref_example_gf3():
    s = rref(FpMatrix.from_rows(3, [[1, 2, 0], [2, 1, 0]]))
    assert s.dim == 1
    assert s.basis.to_lists() == [[1, 2, 0]]


def test_composite_modulus_rejected():
    with pytest.raises(ModulusError):
        FpMatrix.from_rows(4, [[1]])


@pytest.mark.parametrize("p", [2, 3, 5])
@given(data=st.data())
def test_rref_idempotent_and_rank(p, data):
    rows, c = data.draw(matrices(p))
    s = rref(FpMatrix.from_rows(p, rows, c))
    assert s.dim == naive_rank(rows, p)
    again = rref(s.basis)
    assert again == s


@pytest.mark.parametrize("p", [2, 3])
@given(data=st.data())
def test_grassmann_dimension_identity(p, data):
    c = data.draw(st.integers(1, 7))
    vec = st.lists(st.integers(0, p - 1), min_size=c, max_size=c)
    a = FpSubspace.span(p, c, data.draw(st.lists(vec, max_size=5)))
    b = FpSubspace.span(p, c, data.draw(st.lists(vec, max_size=5)))
    ops = subspace_ops(a, b)
    assert ops.sum.dim + ops.intersection.dim == a.dim + b.dim
    assert ops.sum.contains(a) and ops.sum.contains(b)
    assert a.contains(ops.intersection) and b.contains(ops.intersection)


def test_intersection_example():
    a = FpSubspace.span(2, 3, [[1, 0, 0], [0, 1, 0]])
    b = FpSubspace.span(2, 3, [[0, 1, 0], [0, 0, 1]])
    assert subspace_intersection(a, b).basis.to_lists() == [[0, 1, 0]]
    assert subspace_sum(a, b).dim == 3


def test_bitset_against_dense_reference_50x50():
    rng = random.Random(7)
    for density in (0.05, 0.2, 0.5):
        rows = [[int(rng.random() < density) for _ in range(50)] for _ in range(50)]
        s = rref(FpMatrix.from_rows(2, rows))
        assert s.dim == naive_rank(rows, 2)
        for r in rows:
            assert s.contains_vector(r)


@given(data=st.data())
def test_left_kernel(data):
    rows, c = data.draw(matrices(2))
    m = FpMatrix.from_rows(2, rows, c)
    ker = left_kernel(m)
    assert ker.dim == len(rows) - naive_rank(rows, 2)
    for x in ker.vectors():
        acc = 0
        for i, r in enumerate(m.rows_internal()):
            if (x >> i) & 1:
                acc ^= r
        assert acc == 0


def test_coordinates_roundtrip():
    s = FpSubspace.span(3, 4, [[1, 2, 0, 1], [0, 1, 1, 2]])
    r0, r1 = s.basis.to_lists()
    combo = [(x + 2 * y) % 3 for x, y in zip(r0, r1)]
    assert s.coordinates(combo) == [1, 2]
    assert not s.contains_vector([0, 0, 0, 1])


# --- integers ----------------------------------------------------------------


int_rows = st.integers(1, 5).flatmap(
    lambda c: st.lists(st.lists(st.integers(-6, 6), min_size=c, max_size=c), min_size=1, max_size=5)
)


def _sympy_volume(rows):
    """Product of nonzero invariant factors (gcd of maximal minors), via sympy."""
    from sympy.matrices.normalforms import smith_normal_form

    snf = smith_normal_form(sympy.Matrix(rows), domain=sympy.ZZ)
    return prod(abs(int(snf[i, i])) for i in range(min(snf.shape)) if snf[i, i])


@given(int_rows)
def test_hnf_preserves_row_lattice(rows):
    lat = hnf(IntMatrix.from_rows(rows))
    assert lat.is_hnf()
    assert lat.rank == sympy.Matrix(rows).rank()
    for r in rows:
        assert lat.contains(r)
    if lat.rank:
        # same rank, containment and equal covolume force equality
        assert _sympy_volume(list(lat.basis.rows)) == _sympy_volume(rows)
        assert hnf(IntMatrix.from_rows(list(lat.basis.rows))).basis == lat.basis


@given(int_rows)
def test_smith_divisors_match_sympy(rows):
    from sympy.matrices.normalforms import smith_normal_form

    ours = smith_diagonal(rows)
    M = sympy.Matrix(rows)
    snf = smith_normal_form(M, domain=sympy.ZZ)
    theirs = sorted(abs(int(snf[i, i])) for i in range(min(snf.shape)) if snf[i, i])
    assert ours == theirs
    for a, b in zip(ours, ours[1:]):
        assert b % a == 0


@given(st.integers(1, 5).flatmap(lambda n: st.lists(
    st.lists(st.integers(-5, 5), min_size=n, max_size=n), min_size=n, max_size=n)))
def test_smith_product_is_abs_det(rows):
    det = int(sympy.Matrix(rows).det())
    d = smith_diagonal(rows)
    if det:
        assert len(d) == len(rows)
        assert prod(d) == abs(det)
    else:
        assert len(d) < len(rows)


def test_snf_example():
    sub = hnf(IntMatrix.from_rows([[2, 0], [0, 3]]))
    assert snf_divisors(sub, IntLattice.standard(2)) == [1, 6]


def test_lattice_text_roundtrip(tmp_path):
    lat = hnf(IntMatrix.from_rows([[2, 4, 0], [0, 3, 3]]))
    path = tmp_path / "l.txt"
    path.write_text(lat.dumps())
    assert path.read_text().startswith("weylchain-lattice v1 ambient=3 rank=2")
    assert IntLattice.loads(path.read_text()) == lat


def test_coordinates_and_containment():
    lat = hnf(IntMatrix.from_rows([[2, 0], [0, 3]]))
    assert lat.coordinates([4, 9]) == [2, 3]
    with pytest.raises(ContainmentError):
        lat.coordinates([1, 0])


def test_sparse_matrix_arithmetic():
    a = SparseIntMatrix.from_dense([[0, 1], [0, 0]])
    b = SparseIntMatrix.from_dense([[0, 0], [1, 0]])
    assert a.bracket(b) == SparseIntMatrix.from_dense([[1, 0], [0, -1]])
    assert (a @ a).is_zero()
    assert (2 * a).exact_div(2) == a
