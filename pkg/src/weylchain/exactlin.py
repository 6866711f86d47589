"""Exact linear algebra over the integers and over prime fields.

Vectors over F_2 are Python ints used as bitsets (bit ``j`` is coordinate ``j``);
row operations are XORs. Vectors over an odd prime field are sparse dicts
``{column: residue}`` holding only nonzero residues. Integer vectors are
sparse dicts as well; dense tuples only appear at the public boundary.
"""

from __future__ import annotations

from dataclasses import dataclass, field
from math import gcd
from typing import Iterable, NamedTuple, Sequence

from .errors import ContainmentError, DivisibilityError, ModulusError

LATTICE_HEADER = "weylchain-lattice v1"


def is_prime(p: int) -> bool:
    if p < 2:
        return False
    if p % 2 == 0:
        return p == 2
    d = 3
    while d * d <= p:
        if p % d == 0:
            return False
        d += 2
    return True


def _check_prime(p: int) -> None:
    if not is_prime(p):
        raise ModulusError(f"modulus {p} is not prime")


# ---------------------------------------------------------------------------
# vector helpers


def to_internal(p: int, vec) -> int | dict:
    """Convert a dense sequence (or an already internal vector) to internal form."""
    if p == 2:
        if isinstance(vec, int):
            return vec
        out = 0
        for j, x in enumerate(vec):
            if x % 2:
                out |= 1 << j
        return out
    if isinstance(vec, dict):
        return {j: x % p for j, x in vec.items() if x % p}
    return {j: x % p for j, x in enumerate(vec) if x % p}


def to_dense(p: int, vec, n: int) -> list[int]:
    if p == 2:
        return [(vec >> j) & 1 for j in range(n)]
    out = [0] * n
    for j, x in vec.items():
        out[j] = x
    return out


def vec_add(p: int, a, b):
    if p == 2:
        return a ^ b
    out = dict(a)
    for j, x in b.items():
        y = (out.get(j, 0) + x) % p
        if y:
            out[j] = y
        else:
            out.pop(j, None)
    return out


def vec_support(p: int, v) -> list[int]:
    if p == 2:
        out = []
        while v:
            low = v & -v
            out.append(low.bit_length() - 1)
            v ^= low
        return out
    return sorted(v)


def _freeze(p: int, v):
    return v if p == 2 else tuple(sorted(v.items()))


def _thaw(p: int, v):
    return v if p == 2 else dict(v)


# ---------------------------------------------------------------------------
# row echelon builders (mutable, internal)


class Echelon2:
    """Incremental reduced row echelon form over F_2 on int bitsets."""

    __slots__ = ("rows", "pivmask")

    def __init__(self) -> None:
        self.rows: dict[int, int] = {}
        self.pivmask = 0

    def __len__(self) -> int:
        return len(self.rows)

    def reduce(self, v: int) -> int:
        hit = v & self.pivmask
        rows = self.rows
        while hit:
            low = hit & -hit
            v ^= rows[low.bit_length() - 1]
            hit ^= low
        return v

    def insert(self, v: int) -> int:
        """Add ``v``; return its nonzero residual, or 0 if it was already in the span."""
        r = self.reduce(v)
        if not r:
            return 0
        low = r & -r
        c = low.bit_length() - 1
        rows = self.rows
        for key, row in rows.items():
            if row & low:
                rows[key] = row ^ r
        rows[c] = r
        self.pivmask |= low
        return r


class EchelonP:
    """Incremental reduced row echelon form over an odd prime field, sparse rows."""

    __slots__ = ("p", "rows")

    def __init__(self, p: int) -> None:
        self.p = p
        self.rows: dict[int, dict[int, int]] = {}

    def __len__(self) -> int:
        return len(self.rows)

    def reduce(self, v: dict) -> dict:
        p, rows = self.p, self.rows
        hits = [(c, x) for c, x in v.items() if c in rows]
        if not hits:
            return dict(v)
        out = dict(v)
        for c, coef in hits:
            for j, x in rows[c].items():
                y = (out.get(j, 0) - coef * x) % p
                if y:
                    out[j] = y
                else:
                    out.pop(j, None)
        return out

    def insert(self, v: dict) -> dict:
        r = self.reduce(v)
        if not r:
            return {}
        p = self.p
        c = min(r)
        inv = pow(r[c], -1, p)
        r = {j: x * inv % p for j, x in r.items()}
        for key, row in self.rows.items():
            coef = row.get(c)
            if coef:
                for j, x in r.items():
                    y = (row.get(j, 0) - coef * x) % p
                    if y:
                        row[j] = y
                    else:
                        row.pop(j, None)
        self.rows[c] = r
        return r


def new_echelon(p: int):
    return Echelon2() if p == 2 else EchelonP(p)


# ---------------------------------------------------------------------------
# F_p matrices and subspaces


@dataclass(frozen=True)
class FpMatrix:
    """Matrix over F_p; rows are bitsets when p = 2, frozen sparse pairs otherwise."""

    p: int
    nrows: int
    ncols: int
    data: tuple = ()

    def __post_init__(self) -> None:
        _check_prime(self.p)
        if len(self.data) != self.nrows:
            raise ValueError("row count does not match data")

    @classmethod
    def from_rows(cls, p: int, rows: Sequence[Sequence[int]], ncols: int | None = None) -> "FpMatrix":
        _check_prime(p)
        rows = list(rows)
        if ncols is None:
            ncols = len(rows[0]) if rows else 0
        for r in rows:
            if len(r) != ncols:
                raise ValueError("ragged rows")
        data = tuple(_freeze(p, to_internal(p, r)) for r in rows)
        return cls(p, len(rows), ncols, data)

    @classmethod
    def from_internal(cls, p: int, ncols: int, rows: Iterable) -> "FpMatrix":
        data = tuple(_freeze(p, r) for r in rows)
        return cls(p, len(data), ncols, data)

    def row(self, i: int):
        return _thaw(self.p, self.data[i])

    def rows_internal(self) -> list:
        return [_thaw(self.p, r) for r in self.data]

    def to_lists(self) -> list[list[int]]:
        return [to_dense(self.p, self.row(i), self.ncols) for i in range(self.nrows)]


@dataclass(frozen=True)
class FpSubspace:
    """Subspace of F_p^N held by its canonical reduced row echelon basis."""

    p: int
    ambient_dim: int
    basis: FpMatrix
    pivots: tuple[int, ...]
    _rows_by_pivot: dict = field(default=None, compare=False, repr=False, hash=False)

    def __post_init__(self) -> None:
        if self.basis.ncols != self.ambient_dim:
            raise ValueError("basis width differs from ambient dimension")
        if list(self.pivots) != sorted(set(self.pivots)) or len(self.pivots) != self.basis.nrows:
            raise ValueError("pivots must be strictly increasing, one per row")
        object.__setattr__(
            self, "_rows_by_pivot", dict(zip(self.pivots, self.basis.rows_internal()))
        )

    @classmethod
    def zero(cls, p: int, n: int) -> "FpSubspace":
        return cls(p, n, FpMatrix(p, 0, n, ()), ())

    @classmethod
    def full(cls, p: int, n: int) -> "FpSubspace":
        rows = [1 << j for j in range(n)] if p == 2 else [{j: 1} for j in range(n)]
        return cls(p, n, FpMatrix.from_internal(p, n, rows), tuple(range(n)))

    @classmethod
    def from_echelon(cls, p: int, n: int, ech) -> "FpSubspace":
        piv = tuple(sorted(ech.rows))
        return cls(p, n, FpMatrix.from_internal(p, n, [ech.rows[c] for c in piv]), piv)

    @classmethod
    def span(cls, p: int, n: int, vectors: Iterable) -> "FpSubspace":
        ech = new_echelon(p)
        for v in vectors:
            ech.insert(to_internal(p, v))
        return cls.from_echelon(p, n, ech)

    @property
    def dim(self) -> int:
        return len(self.pivots)

    def __len__(self) -> int:
        return self.dim

    def vectors(self) -> list:
        """Basis rows in internal form, ordered by pivot."""
        return self.basis.rows_internal()

    def echelon(self):
        ech = new_echelon(self.p)
        if self.p == 2:
            ech.rows = dict(self._rows_by_pivot)
            for c in self.pivots:
                ech.pivmask |= 1 << c
        else:
            ech.rows = {c: dict(r) for c, r in self._rows_by_pivot.items()}
        return ech

    def reduce(self, v):
        """Canonical residual of ``v`` modulo this subspace (zero at every pivot)."""
        v = to_internal(self.p, v)
        rows = self._rows_by_pivot
        if self.p == 2:
            hit = v
            while hit:
                low = hit & -hit
                c = low.bit_length() - 1
                if c in rows:
                    v ^= rows[c]
                hit ^= low
            return v
        p = self.p
        out = dict(v)
        for c, coef in [(c, x) for c, x in v.items() if c in rows]:
            for j, x in rows[c].items():
                y = (out.get(j, 0) - coef * x) % p
                if y:
                    out[j] = y
                else:
                    out.pop(j, None)
        return out

    def contains_vector(self, v) -> bool:
        return not self.reduce(v)

    def contains(self, other: "FpSubspace") -> bool:
        _same_ambient(self, other)
        return all(not self.reduce(r) for r in other.vectors())

    def coordinates(self, v) -> list[int]:
        """Coefficients of ``v`` in the basis; ``v`` must lie in the subspace."""
        v = to_internal(self.p, v)
        if self.reduce(v):
            raise ContainmentError("vector is not in the subspace")
        if self.p == 2:
            return [(v >> c) & 1 for c in self.pivots]
        return [v.get(c, 0) for c in self.pivots]


def _same_ambient(a: FpSubspace, b: FpSubspace) -> None:
    if a.p != b.p or a.ambient_dim != b.ambient_dim:
        raise ValueError(
            f"ambient mismatch: F_{a.p}^{a.ambient_dim} vs F_{b.p}^{b.ambient_dim}"
        )


def rref(m: FpMatrix) -> FpSubspace:
    """Row space of ``m`` in canonical reduced row echelon form."""
    ech = new_echelon(m.p)
    for r in m.rows_internal():
        ech.insert(r)
    return FpSubspace.from_echelon(m.p, m.ncols, ech)


class SubspaceOps(NamedTuple):
    sum: FpSubspace
    intersection: FpSubspace
    contains: bool


def _shift(p: int, v, k: int):
    if p == 2:
        return v << k
    return {j + k: x for j, x in v.items()}


def subspace_sum(a: FpSubspace, b: FpSubspace) -> FpSubspace:
    _same_ambient(a, b)
    ech = a.echelon()
    for r in b.vectors():
        ech.insert(r)
    return FpSubspace.from_echelon(a.p, a.ambient_dim, ech)


def subspace_intersection(a: FpSubspace, b: FpSubspace) -> FpSubspace:
    """Zassenhaus: rows (x | x) for x in a and (y | 0) for y in b."""
    _same_ambient(a, b)
    p, n = a.p, a.ambient_dim
    ech = new_echelon(p)
    for r in a.vectors():
        ech.insert(vec_add(p, r, _shift(p, r, n)) if p != 2 else r | (r << n))
    for r in b.vectors():
        ech.insert(r)
    out = new_echelon(p)
    for c, row in ech.rows.items():
        if c >= n:
            out.insert(row >> n if p == 2 else {j - n: x for j, x in row.items()})
    return FpSubspace.from_echelon(p, n, out)


def subspace_ops(a: FpSubspace, b: FpSubspace) -> SubspaceOps:
    return SubspaceOps(subspace_sum(a, b), subspace_intersection(a, b), a.contains(b))


def left_kernel(m: FpMatrix) -> FpSubspace:
    """All x in F_p^nrows with x . m = 0."""
    p, nc = m.p, m.ncols
    ech = new_echelon(p)
    for i, r in enumerate(m.rows_internal()):
        if p == 2:
            ech.insert(r | (1 << (nc + i)))
        else:
            aug = dict(r)
            aug[nc + i] = 1
            ech.insert(aug)
    out = new_echelon(p)
    for c, row in ech.rows.items():
        if c >= nc:
            out.insert(row >> nc if p == 2 else {j - nc: x for j, x in row.items()})
    return FpSubspace.from_echelon(p, m.nrows, out)


# ---------------------------------------------------------------------------
# sparse integer matrices (operators)


class SparseIntMatrix:
    """Integer matrix stored column-major: ``cols[j]`` maps row index to entry.

    Treated as immutable once constructed.
    """

    __slots__ = ("nrows", "ncols", "cols")

    def __init__(self, nrows: int, ncols: int, cols: Sequence[dict[int, int]]):
        if len(cols) != ncols:
            raise ValueError("column count mismatch")
        self.nrows = nrows
        self.ncols = ncols
        self.cols = tuple(cols)

    @classmethod
    def from_entries(cls, nrows: int, ncols: int, entries: Iterable[tuple[int, int, int]]):
        cols: list[dict[int, int]] = [{} for _ in range(ncols)]
        for r, c, v in entries:
            if not (0 <= r < nrows and 0 <= c < ncols):
                raise IndexError((r, c))
            x = cols[c].get(r, 0) + v
            if x:
                cols[c][r] = x
            else:
                cols[c].pop(r, None)
        return cls(nrows, ncols, cols)

    @classmethod
    def from_dense(cls, rows: Sequence[Sequence[int]]):
        nrows = len(rows)
        ncols = len(rows[0]) if rows else 0
        return cls.from_entries(
            nrows, ncols, ((i, j, x) for i, r in enumerate(rows) for j, x in enumerate(r) if x)
        )

    @classmethod
    def identity(cls, n: int):
        return cls(n, n, [{j: 1} for j in range(n)])

    @classmethod
    def zeros(cls, nrows: int, ncols: int):
        return cls(nrows, ncols, [{} for _ in range(ncols)])

    @property
    def shape(self) -> tuple[int, int]:
        return (self.nrows, self.ncols)

    def entry(self, r: int, c: int) -> int:
        return self.cols[c].get(r, 0)

    def entries(self):
        for c, col in enumerate(self.cols):
            for r, v in col.items():
                yield r, c, v

    def nnz(self) -> int:
        return sum(len(c) for c in self.cols)

    def is_zero(self) -> bool:
        return not any(self.cols)

    def to_dense(self) -> list[list[int]]:
        out = [[0] * self.ncols for _ in range(self.nrows)]
        for r, c, v in self.entries():
            out[r][c] = v
        return out

    def apply(self, vec: dict[int, int]) -> dict[int, int]:
        out: dict[int, int] = {}
        cols = self.cols
        for j, x in vec.items():
            for i, a in cols[j].items():
                y = out.get(i, 0) + a * x
                if y:
                    out[i] = y
                else:
                    del out[i]
        return out

    def __matmul__(self, other: "SparseIntMatrix") -> "SparseIntMatrix":
        if self.ncols != other.nrows:
            raise ValueError(f"shape mismatch {self.shape} @ {other.shape}")
        return SparseIntMatrix(self.nrows, other.ncols, [self.apply(c) for c in other.cols])

    def _combine(self, other: "SparseIntMatrix", sign: int) -> "SparseIntMatrix":
        if self.shape != other.shape:
            raise ValueError("shape mismatch")
        cols = []
        for a, b in zip(self.cols, other.cols):
            c = dict(a)
            for i, x in b.items():
                y = c.get(i, 0) + sign * x
                if y:
                    c[i] = y
                else:
                    c.pop(i, None)
            cols.append(c)
        return SparseIntMatrix(self.nrows, self.ncols, cols)

    def __add__(self, other):
        return self._combine(other, 1)

    def __sub__(self, other):
        return self._combine(other, -1)

    def __neg__(self):
        return SparseIntMatrix(self.nrows, self.ncols, [{i: -x for i, x in c.items()} for c in self.cols])

    def __rmul__(self, k: int):
        if not k:
            return SparseIntMatrix.zeros(self.nrows, self.ncols)
        return SparseIntMatrix(self.nrows, self.ncols, [{i: k * x for i, x in c.items()} for c in self.cols])

    def __eq__(self, other) -> bool:
        if not isinstance(other, SparseIntMatrix):
            return NotImplemented
        return self.shape == other.shape and self.cols == other.cols

    __hash__ = None  # type: ignore[assignment]

    def __repr__(self) -> str:
        return f"SparseIntMatrix({self.nrows}x{self.ncols}, nnz={self.nnz()})"

    def bracket(self, other: "SparseIntMatrix") -> "SparseIntMatrix":
        return self @ other - other @ self

    def power(self, t: int) -> "SparseIntMatrix":
        out = SparseIntMatrix.identity(self.ncols)
        for _ in range(t):
            out = self @ out
        return out

    def exact_div(self, d: int) -> "SparseIntMatrix":
        cols = []
        for c in self.cols:
            new = {}
            for i, x in c.items():
                q, r = divmod(x, d)
                if r:
                    raise DivisibilityError(f"entry {x} not divisible by {d}")
                new[i] = q
            cols.append(new)
        return SparseIntMatrix(self.nrows, self.ncols, cols)

    def all_congruent(self, other: "SparseIntMatrix", m: int) -> bool:
        return all(x % m == 0 for _, _, x in (self - other).entries())

    def submatrix(self, rows: Sequence[int], cols: Sequence[int]) -> "SparseIntMatrix":
        pos = {r: i for i, r in enumerate(rows)}
        new = []
        for c in cols:
            new.append({pos[r]: x for r, x in self.cols[c].items() if r in pos})
        return SparseIntMatrix(len(rows), len(cols), new)

    def mod_columns(self, p: int) -> list:
        """Column images reduced mod p, in internal F_p vector form."""
        return [to_internal(p, {i: x for i, x in c.items()}) if p != 2 else _bits_mod2(c) for c in self.cols]


def _bits_mod2(col: dict[int, int]) -> int:
    out = 0
    for i, x in col.items():
        if x & 1:
            out |= 1 << i
    return out


# ---------------------------------------------------------------------------
# integer lattices


@dataclass(frozen=True)
class IntMatrix:
    nrows: int
    ncols: int
    rows: tuple[tuple[int, ...], ...]

    def __post_init__(self) -> None:
        if len(self.rows) != self.nrows or any(len(r) != self.ncols for r in self.rows):
            raise ValueError("shape does not match rows")

    @classmethod
    def from_rows(cls, rows: Sequence[Sequence[int]], ncols: int | None = None) -> "IntMatrix":
        rows = [tuple(int(x) for x in r) for r in rows]
        if ncols is None:
            ncols = len(rows[0]) if rows else 0
        return cls(len(rows), ncols, tuple(rows))


def _xgcd(a: int, b: int) -> tuple[int, int, int]:
    x0, x1, y0, y1 = 1, 0, 0, 1
    while b:
        q, a, b = a // b, b, a % b
        x0, x1 = x1, x0 - q * x1
        y0, y1 = y1, y0 - q * y1
    if a < 0:
        a, x0, y0 = -a, -x0, -y0
    return a, x0, y0


def _axpy(v: dict[int, int], w: dict[int, int], k: int) -> dict[int, int]:
    """Return v + k*w."""
    out = dict(v)
    for j, x in w.items():
        y = out.get(j, 0) + k * x
        if y:
            out[j] = y
        else:
            out.pop(j, None)
    return out


def _lin(a: int, v: dict[int, int], b: int, w: dict[int, int]) -> dict[int, int]:
    out: dict[int, int] = {}
    for j, x in v.items():
        out[j] = a * x
    for j, x in w.items():
        y = out.get(j, 0) + b * x
        if y:
            out[j] = y
        else:
            out.pop(j, None)
    return {j: x for j, x in out.items() if x}


class LatticeBuilder:
    """Incremental integral row echelon form (pivot = leading column, pivot > 0)."""

    __slots__ = ("ncols", "rows")

    def __init__(self, ncols: int) -> None:
        self.ncols = ncols
        self.rows: dict[int, dict[int, int]] = {}

    def __len__(self) -> int:
        return len(self.rows)

    def insert(self, v: dict[int, int]) -> bool:
        """Add ``v`` to the lattice; return True iff the lattice grew."""
        v = {j: x for j, x in v.items() if x}
        rows = self.rows
        changed = False
        while v:
            c = min(v)
            row = rows.get(c)
            if row is None:
                if v[c] < 0:
                    v = {j: -x for j, x in v.items()}
                rows[c] = v
                return True
            a, b = row[c], v[c]
            if b % a == 0:
                v = _axpy(v, row, -(b // a))
                continue
            g, s, t = _xgcd(a, b)
            rows[c] = _lin(s, row, t, v)
            v = _lin(a // g, v, -(b // g), row)
            changed = True
        return changed

    def contains(self, v: dict[int, int]) -> bool:
        v = {j: x for j, x in v.items() if x}
        rows = self.rows
        while v:
            c = min(v)
            row = rows.get(c)
            if row is None or v[c] % row[c]:
                return False
            v = _axpy(v, row, -(v[c] // row[c]))
        return True

    def to_lattice(self) -> "IntLattice":
        piv = sorted(self.rows)
        rows = {c: dict(self.rows[c]) for c in piv}
        for idx, c in enumerate(piv):
            pr = rows[c]
            d = pr[c]
            for c2 in piv[:idx]:
                x = rows[c2].get(c)
                if x is not None and not (0 <= x < d):
                    rows[c2] = _axpy(rows[c2], pr, -(x // d))
        dense = []
        for c in piv:
            r = [0] * self.ncols
            for j, x in rows[c].items():
                r[j] = x
            dense.append(tuple(r))
        return IntLattice(self.ncols, IntMatrix(len(dense), self.ncols, tuple(dense)))


@dataclass(frozen=True)
class IntLattice:
    """Sublattice of Z^N held by its row Hermite normal form."""

    ambient_dim: int
    basis: IntMatrix
    pivots: tuple[int, ...] = field(default=None, compare=False)
    _index: dict = field(default=None, compare=False, repr=False)

    def __post_init__(self) -> None:
        if self.basis.ncols != self.ambient_dim:
            raise ValueError("basis width differs from ambient dimension")
        piv = []
        for r in self.basis.rows:
            lead = next((j for j, x in enumerate(r) if x), None)
            if lead is None:
                raise ValueError("zero row in lattice basis")
            piv.append(lead)
        if piv != sorted(set(piv)):
            raise ValueError("basis is not in echelon form")
        object.__setattr__(self, "pivots", tuple(piv))
        rows = self.sparse_rows()
        object.__setattr__(self, "_index", {c: (i, r) for i, (c, r) in enumerate(zip(piv, rows))})

    @property
    def rank(self) -> int:
        return self.basis.nrows

    def sparse_rows(self) -> list[dict[int, int]]:
        return [{j: x for j, x in enumerate(r) if x} for r in self.basis.rows]

    def builder(self) -> LatticeBuilder:
        b = LatticeBuilder(self.ambient_dim)
        for c, r in zip(self.pivots, self.sparse_rows()):
            b.rows[c] = r
        return b

    def is_hnf(self) -> bool:
        for i, (c, r) in enumerate(zip(self.pivots, self.basis.rows)):
            if r[c] <= 0:
                return False
            for r2 in self.basis.rows[:i]:
                if not (0 <= r2[c] < r[c]):
                    return False
        return True

    def coordinates(self, vec) -> list[int]:
        """Integer coefficients of ``vec`` in the basis; ContainmentError if absent."""
        v = vec if isinstance(vec, dict) else {j: x for j, x in enumerate(vec) if x}
        v = {j: x for j, x in v.items() if x}
        index = self._index
        coords = [0] * self.rank
        while v:
            c = min(v)
            hit = index.get(c)
            if hit is None:
                raise ContainmentError("vector not in lattice")
            i, row = hit
            q, rem = divmod(v[c], row[c])
            if rem:
                raise ContainmentError("vector not in lattice")
            coords[i] = q
            v = _axpy(v, row, -q)
        return coords

    def contains(self, vec) -> bool:
        try:
            self.coordinates(vec)
        except ContainmentError:
            return False
        return True

    def dumps(self) -> str:
        lines = [f"{LATTICE_HEADER} ambient={self.ambient_dim} rank={self.rank}"]
        lines.extend(" ".join(str(x) for x in r) for r in self.basis.rows)
        return "\n".join(lines) + "\n"

    @classmethod
    def loads(cls, text: str) -> "IntLattice":
        lines = [ln for ln in text.splitlines() if ln.strip()]
        head = lines[0].split()
        if " ".join(head[:2]) != LATTICE_HEADER:
            raise ValueError(f"not a {LATTICE_HEADER} file")
        fields = dict(tok.split("=") for tok in head[2:])
        n, r = int(fields["ambient"]), int(fields["rank"])
        rows = [tuple(int(x) for x in ln.split()) for ln in lines[1 : 1 + r]]
        if len(rows) != r:
            raise ValueError("truncated lattice file")
        return cls(n, IntMatrix(r, n, tuple(rows)))

    @classmethod
    def standard(cls, n: int) -> "IntLattice":
        rows = tuple(tuple(int(i == j) for j in range(n)) for i in range(n))
        return cls(n, IntMatrix(n, n, rows))


def hnf(m: IntMatrix) -> IntLattice:
    """Row Hermite normal form of ``m``; preserves the row lattice."""
    b = LatticeBuilder(m.ncols)
    for r in m.rows:
        b.insert({j: x for j, x in enumerate(r) if x})
    return b.to_lattice()


def _diagonalize(block: list[list[int]]) -> list[int]:
    """Diagonal entries of an equivalent diagonal form (not yet a divisor chain)."""
    a = [list(row) for row in block]
    m = len(a)
    n = len(a[0]) if m else 0
    diag: list[int] = []
    for t in range(min(m, n)):
        while True:
            best = None
            for i in range(t, m):
                for j in range(t, n):
                    x = a[i][j]
                    if x and (best is None or abs(x) < best[0]):
                        best = (abs(x), i, j)
            if best is None:
                return diag
            _, bi, bj = best
            a[t], a[bi] = a[bi], a[t]
            for row in a:
                row[t], row[bj] = row[bj], row[t]
            piv = a[t][t]
            done = True
            for i in range(t + 1, m):
                if a[i][t]:
                    q = a[i][t] // piv
                    a[i] = [x - q * y for x, y in zip(a[i], a[t])]
                    done = done and not a[i][t]
            for j in range(t + 1, n):
                if a[t][j]:
                    q = a[t][j] // piv
                    for row in a:
                        row[j] -= q * row[t]
                    done = done and not a[t][j]
            if done:
                break
        diag.append(abs(a[t][t]))
    return diag


def divisor_chain(diag: Iterable[int]) -> list[int]:
    """Turn diagonal entries into invariant factors d_1 | d_2 | ... (zeros dropped)."""
    d = sorted(x for x in diag if x)
    for i in range(len(d)):
        for j in range(i + 1, len(d)):
            a, b = d[i], d[j]
            g = gcd(a, b)
            d[i], d[j] = g, a // g * b
    return d


def smith_diagonal(rows: Sequence[Sequence[int]]) -> list[int]:
    """Invariant factors of an integer matrix, splitting it into connected blocks first."""
    m = len(rows)
    n = len(rows[0]) if m else 0
    parent = list(range(m + n))

    def find(x: int) -> int:
        while parent[x] != x:
            parent[x] = parent[parent[x]]
            x = parent[x]
        return x

    for i, r in enumerate(rows):
        for j, x in enumerate(r):
            if x:
                a, b = find(i), find(m + j)
                if a != b:
                    parent[a] = b
    groups: dict[int, tuple[list[int], list[int]]] = {}
    for i in range(m):
        groups.setdefault(find(i), ([], []))[0].append(i)
    for j in range(n):
        groups.setdefault(find(m + j), ([], []))[1].append(j)
    diag: list[int] = []
    for ri, ci in groups.values():
        if ri and ci:
            diag.extend(_diagonalize([[rows[i][j] for j in ci] for i in ri]))
    return divisor_chain(diag)


def snf_divisors(sub: IntLattice, ambient: IntLattice) -> list[int]:
    """Elementary divisors of the inclusion ``sub`` into ``ambient``."""
    if sub.ambient_dim != ambient.ambient_dim:
        raise ValueError("ambient dimension mismatch")
    coords = []
    for r in sub.sparse_rows():
        try:
            coords.append(ambient.coordinates(r))
        except ContainmentError as exc:
            raise ContainmentError("sub is not contained in ambient") from exc
    return smith_diagonal(coords)
