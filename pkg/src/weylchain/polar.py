"""Totally singular subspaces of the parabolic quadric over F_2, by exhaustion.

Vectors of ``F_2^{2n+1}`` are Python ints; bit ``l-1`` is the coefficient of
``e_l``. The quadratic form is ``x_1 x_{n+1} + ... + x_n x_{2n} + x_{2n+1}^2``.
"""

from __future__ import annotations

from functools import lru_cache

from .errors import PreconditionError
from .exactlin import Echelon2
from .wedge import colex_rank

MAX_RANK = 3


def quadratic_form(n: int, x: int) -> int:
    low, high = x & ((1 << n) - 1), (x >> n) & ((1 << n) - 1)
    return (bin(low & high).count("1") + ((x >> (2 * n)) & 1)) & 1


def polar_form(n: int, x: int, y: int) -> int:
    """Bilinearization ``eta(x+y) - eta(x) - eta(y)``; ``e_{2n+1}`` spans its radical."""
    mask = (1 << n) - 1
    xl, xh = x & mask, (x >> n) & mask
    yl, yh = y & mask, (y >> n) & mask
    return (bin(xl & yh).count("1") + bin(xh & yl).count("1")) & 1


def singular_points(n: int) -> list[int]:
    return [x for x in range(1, 1 << (2 * n + 1)) if not quadratic_form(n, x)]


def _canonical(vectors) -> tuple[int, ...]:
    ech = Echelon2()
    for v in vectors:
        ech.insert(v)
    return tuple(ech.rows[c] for c in sorted(ech.rows))


@lru_cache(maxsize=None)
def totally_singular_subspaces(n: int, dim: int) -> tuple[tuple[int, ...], ...]:
    """Canonical bases of every totally singular ``dim``-subspace (rank ``n <= 3``)."""
    if n > MAX_RANK:
        raise PreconditionError(f"exhaustive enumeration is limited to n <= {MAX_RANK}")
    if not 0 <= dim <= n:
        raise PreconditionError(f"dimension {dim} out of range")
    if dim == 0:
        return ((),)
    points = singular_points(n)
    found: set[tuple[int, ...]] = set()
    for X in totally_singular_subspaces(n, dim - 1):
        span = _span(X)
        for y in points:
            if y in span:
                continue
            if all(not polar_form(n, x, y) for x in X):
                found.add(_canonical(X + (y,)))
    return tuple(sorted(found))


def _span(basis: tuple[int, ...]) -> set[int]:
    out = {0}
    for b in basis:
        out |= {v ^ b for v in out}
    return out


def wedge_bits(vectors, N: int) -> int:
    """``v_1 ^ ... ^ v_m`` over F_2 as a bitmask in colex coordinates of ``wedge^m``."""
    terms = {(): 1}
    for v in vectors:
        new: dict[tuple[int, ...], int] = {}
        for J, c in terms.items():
            for l in range(1, N + 1):
                if (v >> (l - 1)) & 1 and l not in J:
                    key = tuple(sorted(J + (l,)))
                    new[key] = new.get(key, 0) ^ c
        terms = {J: c for J, c in new.items() if c}
    out = 0
    for J in terms:
        out |= 1 << colex_rank(J)
    return out


def nucleus_oracle_vectors(n: int, k: int) -> list[int]:
    """``x_1 ^ .. ^ x_{k-1} ^ e_{2n+1}`` for every totally singular ``X = <x_i>``."""
    N = 2 * n + 1
    nucleus = 1 << (N - 1)
    out = []
    for X in totally_singular_subspaces(n, k - 1):
        out.append(wedge_bits(X + (nucleus,), N))
    return out


def count_totally_singular(n: int, dim: int) -> int:
    """Closed-form count over F_2, used as a cross-check of the enumeration."""
    # number of totally singular dim-spaces of Q(2n, q) at q = 2
    q = 2
    num = 1
    for i in range(dim):
        num *= (q ** (2 * (n - i)) - 1)
    den = 1
    for i in range(1, dim + 1):
        den *= q**i - 1
    return num // den


__all__ = [
    "quadratic_form",
    "polar_form",
    "singular_points",
    "totally_singular_subspaces",
    "wedge_bits",
    "nucleus_oracle_vectors",
    "count_totally_singular",
]
