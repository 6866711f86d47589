"""Root systems of types B_n and C_n, stored structurally.

Roots are ``(kind, i, j, sign)`` records rather than real vectors:

====== ============ ==========
kind   positive     family
====== ============ ==========
diff   u_i - u_j    B, C
short  u_i          B only
long2  2 u_i        C only
sum    u_i + u_j    B, C
====== ============ ==========

Simple roots are ``u_i - u_{i+1}`` (i < n) together with ``u_n`` (B) or
``2 u_n`` (C). Indices are 1-based throughout, as in the usual tables.
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from functools import lru_cache
from typing import Iterable, Sequence

from .errors import PreconditionError

FAMILIES = ("B", "C")
_KINDS = {"B": ("diff", "short", "sum"), "C": ("diff", "long2", "sum")}


@dataclass(frozen=True, order=True)
class Root:
    family: str
    n: int
    kind: str
    i: int
    j: int = 0
    sign: int = 1

    def __post_init__(self) -> None:
        if self.family not in FAMILIES:
            raise PreconditionError(f"unknown family {self.family!r}")
        if self.kind not in _KINDS[self.family]:
            raise PreconditionError(f"kind {self.kind!r} is not legal for {self.family}")
        if self.sign not in (1, -1):
            raise PreconditionError("sign must be +1 or -1")
        if self.kind in ("diff", "sum"):
            if not 1 <= self.i < self.j <= self.n:
                raise PreconditionError(f"need 1 <= i < j <= n, got {self.i}, {self.j}")
        elif not (1 <= self.i <= self.n and self.j == 0):
            raise PreconditionError(f"index {self.i} out of range")

    def __neg__(self) -> "Root":
        return Root(self.family, self.n, self.kind, self.i, self.j, -self.sign)

    @property
    def positive(self) -> bool:
        return self.sign == 1

    def u_vector(self) -> tuple[int, ...]:
        v = [0] * self.n
        s = self.sign
        if self.kind == "diff":
            v[self.i - 1], v[self.j - 1] = s, -s
        elif self.kind == "sum":
            v[self.i - 1] = v[self.j - 1] = s
        elif self.kind == "short":
            v[self.i - 1] = s
        else:
            v[self.i - 1] = 2 * s
        return tuple(v)

    def is_long(self) -> bool:
        if self.family == "B":
            return self.kind != "short"
        return self.kind == "long2"

    def symbol(self) -> str:
        i, j = self.i, self.j
        body = {
            "diff": f"u{i}-u{j}",
            "sum": f"u{i}+u{j}",
            "short": f"u{i}",
            "long2": f"2u{i}",
        }[self.kind]
        if self.sign == 1:
            return body
        return {
            "diff": f"u{j}-u{i}",
            "sum": f"-u{i}-u{j}",
            "short": f"-u{i}",
            "long2": f"-2u{i}",
        }[self.kind]

    def __str__(self) -> str:
        return self.symbol()


def _check_rank(n: int) -> None:
    if n < 2:
        raise PreconditionError(f"rank n must be >= 2, got {n}")


@lru_cache(maxsize=None)
def positive_roots(family: str, n: int) -> tuple[Root, ...]:
    """Positive roots: diffs (lex), then shorts/longs by i, then sums (lex)."""
    _check_rank(n)
    if family not in FAMILIES:
        raise PreconditionError(f"unknown family {family!r}")
    pairs = [(i, j) for i in range(1, n + 1) for j in range(i + 1, n + 1)]
    mid = "short" if family == "B" else "long2"
    return (
        tuple(Root(family, n, "diff", i, j) for i, j in pairs)
        + tuple(Root(family, n, mid, i) for i in range(1, n + 1))
        + tuple(Root(family, n, "sum", i, j) for i, j in pairs)
    )


def simple_roots(family: str, n: int) -> tuple[Root, ...]:
    _check_rank(n)
    last = Root(family, n, "short" if family == "B" else "long2", n)
    return tuple(Root(family, n, "diff", i, i + 1) for i in range(1, n)) + (last,)


def alpha_coords(r: Root) -> tuple[int, ...]:
    """Coefficients of ``r`` in the simple-root basis."""
    if not r.positive:
        return tuple(-x for x in alpha_coords(-r))
    n, i, j = r.n, r.i, r.j
    c = [0] * n
    if r.kind == "diff":
        for m in range(i, j):
            c[m - 1] = 1
    elif r.kind == "short":
        for m in range(i, n + 1):
            c[m - 1] = 1
    elif r.kind == "long2":
        for m in range(i, n):
            c[m - 1] = 2
        c[n - 1] = 1
    else:
        for m in range(i, j):
            c[m - 1] = 1
        top = n + 1 if r.family == "B" else n
        for m in range(j, top):
            c[m - 1] = 2
        if r.family == "C":
            c[n - 1] = 1
    return tuple(c)


def _dot(a: Sequence, b: Sequence):
    return sum(x * y for x, y in zip(a, b))


@lru_cache(maxsize=None)
def cartan_matrix(family: str, n: int) -> tuple[tuple[int, ...], ...]:
    """``A[m][j] = <alpha_m, alpha_j coroot> = 2 (alpha_m, alpha_j) / (alpha_j, alpha_j)``."""
    simple = [r.u_vector() for r in simple_roots(family, n)]
    return tuple(
        tuple(2 * _dot(a, b) // _dot(b, b) for b in simple) for a in simple
    )


def coroot_u(r: Root) -> tuple[Fraction, ...]:
    u = r.u_vector()
    norm = _dot(u, u)
    return tuple(Fraction(2 * x, norm) for x in u)


@dataclass(frozen=True)
class Weight:
    """Weight in simple-root coordinates (may be half-integral for type C)."""

    family: str
    n: int
    alpha_coords: tuple[Fraction, ...]

    def __post_init__(self) -> None:
        if len(self.alpha_coords) != self.n:
            raise PreconditionError("coordinate length must equal the rank")
        object.__setattr__(self, "alpha_coords", tuple(Fraction(x) for x in self.alpha_coords))

    def __add__(self, other: "Weight") -> "Weight":
        return Weight(self.family, self.n, tuple(a + b for a, b in zip(self.alpha_coords, other.alpha_coords)))

    def __sub__(self, other: "Weight") -> "Weight":
        return Weight(self.family, self.n, tuple(a - b for a, b in zip(self.alpha_coords, other.alpha_coords)))

    def u_coords(self) -> tuple[Fraction, ...]:
        out = [Fraction(0)] * self.n
        for c, r in zip(self.alpha_coords, simple_roots(self.family, self.n)):
            for k, x in enumerate(r.u_vector()):
                out[k] += c * x
        return tuple(out)

    def int_coords(self) -> tuple[int, ...]:
        if any(x.denominator != 1 for x in self.alpha_coords):
            raise ValueError(f"weight {self} is not in the root lattice")
        return tuple(int(x) for x in self.alpha_coords)


def zero_weight(family: str, n: int) -> Weight:
    return Weight(family, n, (0,) * n)


def root_weight(r: Root) -> Weight:
    return Weight(r.family, r.n, alpha_coords(r))


def weight_from_u(family: str, n: int, u: Sequence) -> Weight:
    """Express a vector given in the u-basis in simple-root coordinates."""
    # simple roots are upper bidiagonal in u: peel off from the first coordinate
    rest = [Fraction(x) for x in u]
    coords = []
    for m in range(n - 1):
        c = rest[m]
        coords.append(c)
        rest[m] -= c
        rest[m + 1] += c
    last = 1 if family == "B" else 2
    coords.append(rest[n - 1] / last)
    return Weight(family, n, tuple(coords))


def lambda_circ(n: int, k: int) -> Weight:
    """``lambda_k`` for k < n, ``2 lambda_n`` for k = n, zero for k = 0 (type B)."""
    _check_rank(n)
    if not 0 <= k <= n:
        raise PreconditionError(f"k must lie in 0..{n}, got {k}")
    coords = [min(i, k) for i in range(1, n + 1)]
    return Weight("B", n, tuple(coords))


def fundamental_weight(family: str, n: int, k: int) -> Weight:
    """k-th fundamental weight, solved from the inverse transpose Cartan matrix."""
    _check_rank(n)
    if not 1 <= k <= n:
        raise PreconditionError(f"k must lie in 1..{n}, got {k}")
    a = [[Fraction(x) for x in row] for row in cartan_matrix(family, n)]
    # solve c^T A = e_k^T, i.e. A^T c = e_k, by Gauss-Jordan over Q
    m = [[a[j][i] for j in range(n)] + [Fraction(int(i == k - 1))] for i in range(n)]
    for col in range(n):
        piv = next(r for r in range(col, n) if m[r][col])
        m[col], m[piv] = m[piv], m[col]
        inv = 1 / m[col][col]
        m[col] = [x * inv for x in m[col]]
        for r in range(n):
            if r != col and m[r][col]:
                f = m[r][col]
                m[r] = [x - f * y for x, y in zip(m[r], m[col])]
    return Weight(family, n, tuple(m[i][n] for i in range(n)))


def lambda_sp(n: int, k: int) -> Weight:
    if k == 0:
        _check_rank(n)
        return zero_weight("C", n)
    return fundamental_weight("C", n, k)


def pairing(w: Weight, i: int) -> int:
    """``w(H_i)``: pairing of ``w`` with the i-th simple coroot."""
    if not 1 <= i <= w.n:
        raise PreconditionError(f"simple root index {i} out of range")
    a = cartan_matrix(w.family, w.n)
    val = sum(c * a[m][i - 1] for m, c in enumerate(w.alpha_coords))
    if val.denominator != 1:
        raise ValueError("non-integral pairing")
    return int(val)


def monomial_degree(factors: Iterable[tuple[Root, int]], n: int | None = None) -> tuple[int, ...]:
    """Degree vector of a product of divided powers; negative roots count negatively.

    The empty product has degree zero; pass ``n`` to get a vector of that length.
    """
    factors = list(factors)
    if not factors:
        return (0,) * (n or 0)
    n = factors[0][0].n
    fam = factors[0][0].family
    d = [0] * n
    for r, t in factors:
        if r.n != n or r.family != fam:
            raise PreconditionError("factors must share family and rank")
        for m, c in enumerate(alpha_coords(r)):
            d[m] += t * c
    return tuple(d)
