"""Exterior powers: colex subset indexing, derivation lifts and divided powers.

Basis vectors of ``wedge^k`` of an N-dimensional space are indexed by k-subsets
of ``{1..N}`` written in ascending order. The position of a subset in the basis
is its colexicographic rank, so ``wedge^k`` of ``e_1..e_{2n}`` is exactly the
first ``C(2n, k)`` coordinates of ``wedge^k`` of ``e_1..e_{2n+1}``.
"""

from __future__ import annotations

from dataclasses import dataclass
from functools import lru_cache
from math import comb, factorial
from typing import Sequence

from .chevalley import Operator, ambient_dim, cartan_operator, root_operator
from .errors import PreconditionError
from .exactlin import SparseIntMatrix
from .rootdata import positive_roots


def colex_rank(subset: Sequence[int]) -> int:
    """Rank of an ascending 1-based subset."""
    return sum(comb(j - 1, m + 1) for m, j in enumerate(subset))


def colex_unrank(rank: int, k: int) -> tuple[int, ...]:
    out = []
    r = rank
    for m in range(k, 0, -1):
        c = m - 1
        while comb(c + 1, m) <= r:
            c += 1
        out.append(c + 1)
        r -= comb(c, m)
    return tuple(reversed(out))


@lru_cache(maxsize=None)
def subsets(N: int, k: int) -> tuple[tuple[int, ...], ...]:
    if not 0 <= k <= N:
        raise PreconditionError(f"need 0 <= k <= {N}, got {k}")
    return tuple(colex_unrank(r, k) for r in range(comb(N, k)))


@lru_cache(maxsize=None)
def _rank_table(N: int, k: int) -> dict[tuple[int, ...], int]:
    return {s: r for r, s in enumerate(subsets(N, k))}


@dataclass(frozen=True)
class WedgeIndex:
    k: int
    N: int
    subset: tuple[int, ...]

    def __post_init__(self) -> None:
        s = self.subset
        if len(s) != self.k or any(a >= b for a, b in zip(s, s[1:])) or (s and not 1 <= s[0] <= s[-1] <= self.N):
            raise PreconditionError(f"{s} is not an ascending {self.k}-subset of 1..{self.N}")

    @property
    def rank(self) -> int:
        return colex_rank(self.subset)

    @classmethod
    def from_rank(cls, N: int, k: int, rank: int) -> "WedgeIndex":
        if not 0 <= rank < comb(N, k):
            raise PreconditionError(f"rank {rank} out of range")
        return cls(k, N, colex_unrank(rank, k))


def basis_vector(N: int, subset: Sequence[int]) -> dict[int, int]:
    return {WedgeIndex(len(subset), N, tuple(subset)).rank: 1}


def subset_weight(n: int, subset: Sequence[int]) -> tuple[int, ...]:
    """Weight of ``e_J`` in u-coordinates: ``e_i -> u_i``, ``e_{n+i} -> -u_i``, ``e_{2n+1} -> 0``."""
    w = [0] * n
    for j in subset:
        if j <= n:
            w[j - 1] += 1
        elif j <= 2 * n:
            w[j - n - 1] -= 1
    return tuple(w)


@dataclass(frozen=True, eq=False)
class WedgeOperator:
    base: Operator
    k: int
    divided_exponent: int
    matrix: SparseIntMatrix

    @property
    def label(self) -> str:
        t = self.divided_exponent
        return self.base.label if t == 1 else f"{self.base.label}^{t}/{factorial(t)}"

    def __call__(self, vec: dict[int, int]) -> dict[int, int]:
        return self.matrix.apply(vec)


def lift_matrix(m: SparseIntMatrix, k: int) -> SparseIntMatrix:
    N = m.ncols
    if not 1 <= k <= N:
        raise PreconditionError(f"k = {k} out of range for dimension {N}")
    table = _rank_table(N, k)
    cols = []
    for J in subsets(N, k):
        img: dict[int, int] = {}
        members = set(J)
        for pos, j in enumerate(J):
            for l0, a in m.cols[j - 1].items():
                l = l0 + 1
                if l == j:
                    key, coeff = table[J], a
                elif l in members:
                    continue
                else:
                    lo, hi = (l, j) if l < j else (j, l)
                    between = sum(1 for x in J if lo < x < hi)
                    newJ = tuple(sorted(J[:pos] + (l,) + J[pos + 1:]))
                    key, coeff = table[newJ], -a if between & 1 else a
                v = img.get(key, 0) + coeff
                if v:
                    img[key] = v
                else:
                    img.pop(key, None)
        cols.append(img)
    size = len(cols)
    return SparseIntMatrix(size, size, cols)


def lift(op: Operator, k: int) -> WedgeOperator:
    """Derivation action on ``wedge^k``; ``g(v_1 ^ .. ^ v_k) = sum_i v_1 ^ .. g(v_i) .. ^ v_k``."""
    if op.divided_exponent != 1:
        raise PreconditionError("lift applies to t = 1 operators; use divided_power afterwards")
    return WedgeOperator(op, k, 1, lift_matrix(op.matrix, k))


def divided_power(wop: WedgeOperator, t: int) -> WedgeOperator:
    """``wop^t / t!`` computed exactly; raises DivisibilityError on a remainder."""
    if wop.divided_exponent != 1:
        raise PreconditionError("divided_power expects a t = 1 operator")
    if t < 1:
        raise PreconditionError("t must be positive")
    if t == 1:
        return wop
    m = wop.matrix.power(t).exact_div(factorial(t))
    return WedgeOperator(wop.base, wop.k, t, m)


def nilpotency_index(wop: WedgeOperator, cap: int = 64) -> int:
    p = wop.matrix
    for e in range(1, cap + 1):
        if p.is_zero():
            return e
        p = wop.matrix @ p
    raise PreconditionError(f"{wop.label} is not nilpotent within {cap} steps")


@lru_cache(maxsize=None)
def generator_set(family: str, n: int, k: int) -> tuple[WedgeOperator, ...]:
    """All nonzero divided powers of root vectors on ``wedge^k``.

    Order: positive roots in rootdata order, then negative roots; within a root
    by increasing t.
    """
    roots = positive_roots(family, n)
    out = []
    for r in tuple(roots) + tuple(-r for r in roots):
        w = lift(root_operator(r), k)
        power = w.matrix
        t = 1
        while not power.is_zero():
            out.append(w if t == 1 else WedgeOperator(w.base, k, t, power.exact_div(factorial(t))))
            t += 1
            power = w.matrix @ power
    return tuple(out)


@lru_cache(maxsize=None)
def cartan_lifts(family: str, n: int, k: int) -> tuple[WedgeOperator, ...]:
    return tuple(lift(cartan_operator(family, n, i), k) for i in range(1, n + 1))


def wedge_dim(family: str, n: int, k: int) -> int:
    return comb(ambient_dim(family, n), k)


def group_element(family: str, n: int, k: int, label: str) -> SparseIntMatrix:
    """``exp`` of a root vector at parameter 1: ``sum_t E^t/t!`` on ``wedge^k``."""
    gens = [g for g in generator_set(family, n, k) if g.base.label == label]
    if not gens:
        raise PreconditionError(f"no generator {label!r}")
    total = SparseIntMatrix.identity(gens[0].matrix.ncols)
    for g in gens:
        total = total + g.matrix
    return total
