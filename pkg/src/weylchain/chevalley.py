"""Integer operator tables for the Chevalley bases of o(2n+1) and sp(2n).

Type B acts on ``V = Z^{2n+1}`` with basis ``e_1..e_{2n+1}`` and quadratic form
``x_1 x_{n+1} + ... + x_n x_{2n} + x_{2n+1}^2``. Type C acts on the hyperplane
``Vbar = Z^{2n}`` spanned by ``e_1..e_{2n}`` with the standard alternating form.

Labels are plain strings::

    X(u1-u2)  Y(u1-u2)  X(u1+u2)  Y(u1+u2)  X(u1)  Y(u1)  H1 .. Hn
    X(u1)^2/2  Y(u1)^2/2                          (type B divided squares)
    U(u1-u2)  V(u1-u2)  U(u1+u2)  V(u1+u2)  U(2u1)  V(2u1)  C1 .. Cn
"""

from __future__ import annotations

import re
from dataclasses import dataclass
from functools import lru_cache

from .errors import PreconditionError
from .exactlin import SparseIntMatrix
from .report import Report
from .rootdata import Root, alpha_coords, cartan_matrix, positive_roots, simple_roots

_LABEL = re.compile(r"^([XYUV])\((.+)\)(\^2/2)?$")
_CARTAN = re.compile(r"^([HC])(\d+)$")
_ROOT = re.compile(r"^(?:u(\d+)-u(\d+)|u(\d+)\+u(\d+)|u(\d+)|2u(\d+))$")


def space_name(family: str, n: int) -> str:
    return f"V_{family}({n})"


def ambient_dim(family: str, n: int) -> int:
    return 2 * n + 1 if family == "B" else 2 * n


@dataclass(frozen=True, eq=False)
class Operator:
    space: str
    label: str
    divided_exponent: int
    matrix: SparseIntMatrix
    root: Root | None = None

    @property
    def dim(self) -> int:
        return self.matrix.ncols

    def __call__(self, vec: dict[int, int]) -> dict[int, int]:
        return self.matrix.apply(vec)


def parse_root(family: str, n: int, text: str, negative: bool = False) -> Root:
    m = _ROOT.match(text)
    if not m:
        raise PreconditionError(f"cannot parse root {text!r}")
    a, b, c, d, e, f = m.groups()
    sign = -1 if negative else 1
    if a:
        return Root(family, n, "diff", int(a), int(b), sign)
    if c:
        return Root(family, n, "sum", int(c), int(d), sign)
    if e:
        return Root(family, n, "short", int(e), 0, sign)
    return Root(family, n, "long2", int(f), 0, sign)


def root_label(r: Root) -> str:
    """``X(..)``/``Y(..)`` for type B, ``U(..)``/``V(..)`` for type C."""
    up, down = ("X", "Y") if r.family == "B" else ("U", "V")
    body = r.symbol() if r.positive else (-r).symbol()
    return f"{up if r.positive else down}({body})"


def _entries_B(n: int, r: Root) -> list[tuple[int, int, int]]:
    """``(target, source, coeff)`` triples, 1-based, for the t = 1 operator."""
    i, j, m = r.i, r.j, 2 * n + 1
    pos = r.positive
    if r.kind == "diff":
        if pos:
            return [(i, j, 1), (n + j, n + i, -1)]
        return [(j, i, 1), (n + i, n + j, -1)]
    if r.kind == "sum":
        if pos:
            return [(j, n + i, 1), (i, n + j, -1)]
        return [(n + j, i, -1), (n + i, j, 1)]
    if pos:
        return [(m, n + i, 1), (i, m, -2)]
    return [(m, i, -1), (n + i, m, 2)]


def _entries_C(n: int, r: Root) -> list[tuple[int, int, int]]:
    i, j = r.i, r.j
    pos = r.positive
    if r.kind == "diff":
        return _entries_B(n, r)
    if r.kind == "sum":
        if pos:
            return [(j, n + i, 1), (i, n + j, 1)]
        return [(n + j, i, 1), (n + i, j, 1)]
    return [(i, n + i, 1)] if pos else [(n + i, i, 1)]


def _cartan_entries(family: str, n: int, i: int) -> list[tuple[int, int, int]]:
    if i < n:
        return [(i, i, 1), (i + 1, i + 1, -1), (n + i, n + i, -1), (n + i + 1, n + i + 1, 1)]
    c = 2 if family == "B" else 1
    return [(n, n, c), (2 * n, 2 * n, -c)]


def _matrix(dim: int, entries) -> SparseIntMatrix:
    return SparseIntMatrix.from_entries(dim, dim, ((a - 1, b - 1, x) for a, b, x in entries))


@lru_cache(maxsize=None)
def root_operator(r: Root) -> Operator:
    dim = ambient_dim(r.family, r.n)
    entries = _entries_B(r.n, r) if r.family == "B" else _entries_C(r.n, r)
    return Operator(space_name(r.family, r.n), root_label(r), 1, _matrix(dim, entries), r)


@lru_cache(maxsize=None)
def cartan_operator(family: str, n: int, i: int) -> Operator:
    if not 1 <= i <= n:
        raise PreconditionError(f"Cartan index {i} out of range")
    letter = "H" if family == "B" else "C"
    m = _matrix(ambient_dim(family, n), _cartan_entries(family, n, i))
    return Operator(space_name(family, n), f"{letter}{i}", 1, m)


def coroot_coefficients(r: Root) -> tuple[int, ...]:
    """``H_alpha`` as an integral combination of the simple ``H_i`` (or ``C_i``)."""
    if not r.positive:
        return tuple(-x for x in coroot_coefficients(-r))
    n, i, j = r.n, r.i, r.j
    c = [0] * n
    if r.kind == "diff":
        for m in range(i, j):
            c[m - 1] = 1
    elif r.kind == "short":
        for m in range(i, n):
            c[m - 1] = 2
        c[n - 1] = 1
    elif r.kind == "long2":
        for m in range(i, n + 1):
            c[m - 1] = 1
    else:
        for m in range(i, j):
            c[m - 1] = 1
        for m in range(j, n):
            c[m - 1] = 2
        c[n - 1] = 1 if r.family == "B" else 2
    return tuple(c)


def coroot_operator(r: Root) -> Operator:
    dim = ambient_dim(r.family, r.n)
    total = SparseIntMatrix.zeros(dim, dim)
    for m, c in enumerate(coroot_coefficients(r), start=1):
        if c:
            total = total + c * cartan_operator(r.family, r.n, m).matrix
    letter = "H" if r.family == "B" else "C"
    return Operator(space_name(r.family, r.n), f"{letter}({r.symbol()})", 1, total)


def _square_half(r: Root) -> Operator:
    base = root_operator(r)
    m = base.matrix.power(2).exact_div(2)
    return Operator(base.space, f"{base.label}^2/2", 2, m, r)


def _lookup(family: str, n: int, label: str) -> Operator:
    m = _CARTAN.match(label)
    if m:
        letter, idx = m.groups()
        if (letter == "H") != (family == "B"):
            raise PreconditionError(f"{label!r} does not belong to type {family}")
        return cartan_operator(family, n, int(idx))
    m = _LABEL.match(label)
    if not m:
        raise PreconditionError(f"unknown generator label {label!r}")
    letter, body, square = m.groups()
    if (letter in "XY") != (family == "B"):
        raise PreconditionError(f"{label!r} does not belong to type {family}")
    r = parse_root(family, n, body, negative=letter in "YV")
    if square:
        if r.kind != "short":
            raise PreconditionError(f"divided square is only tabulated for short roots: {label!r}")
        return _square_half(r)
    return root_operator(r)


def ortho_generator(n: int, label: str) -> Operator:
    return _lookup("B", n, label)


def symp_generator(n: int, label: str) -> Operator:
    return _lookup("C", n, label)


def restrict_to_hyperplane(m: SparseIntMatrix, n: int) -> SparseIntMatrix:
    """Block of a type-B matrix acting on ``e_1..e_{2n}``."""
    idx = range(2 * n)
    return m.submatrix(idx, idx)


def stabilizes_hyperplane(m: SparseIntMatrix, n: int) -> bool:
    top = 2 * n
    return all(top not in m.cols[c] for c in range(top))


# ---------------------------------------------------------------------------


def _nilpotency_exponent(m: SparseIntMatrix, cap: int = 8) -> int:
    p = m
    for e in range(1, cap + 1):
        if p.is_zero():
            return e
        p = m @ p
    return cap + 1


def relation_check(n: int) -> Report:
    """Exact Lie-algebra and B/C correspondence identities at rank ``n``."""
    if n < 2:
        raise PreconditionError("n must be >= 2")
    rep = Report("relations", {"n": n})
    for fam in ("B", "C"):
        a = cartan_matrix(fam, n)
        for r in positive_roots(fam, n):
            x, y = root_operator(r).matrix, root_operator(-r).matrix
            h = coroot_operator(r).matrix
            rep.flag(f"{fam}.bracket[{r}]", f"[E, F] = H for {r}", x.bracket(y) == h)
            if fam == "B":
                expected = 2 if r.is_long() else 3
                desc = "nilpotency exponent on V"
            else:
                expected = 2
                desc = "nilpotency exponent on Vbar"
            rep.compare(f"{fam}.nilpotent[{r}]", desc,
                        [expected, expected],
                        [_nilpotency_exponent(x), _nilpotency_exponent(y)])
            # [H_i, X_alpha] = <alpha, alpha_i^vee> X_alpha
            coords = alpha_coords(r)
            ok = True
            for i in range(1, n + 1):
                hi = cartan_operator(fam, n, i).matrix
                val = sum(c * a[m][i - 1] for m, c in enumerate(coords))
                ok &= hi.bracket(x) == val * x and hi.bracket(y) == (-val) * y
            rep.flag(f"{fam}.cartan[{r}]", f"Cartan eigenvalues on root vectors of {r}", ok)
    _correspondence(n, rep)
    return rep


def _correspondence(n: int, rep: Report) -> None:
    B = lambda lbl: ortho_generator(n, lbl).matrix  # noqa: E731
    C = lambda lbl: symp_generator(n, lbl).matrix  # noqa: E731
    res = lambda m: restrict_to_hyperplane(m, n)  # noqa: E731
    for i in range(1, n + 1):
        x2, y2 = B(f"X(u{i})^2/2"), B(f"Y(u{i})^2/2")
        ok = stabilizes_hyperplane(x2, n) and stabilizes_hyperplane(y2, n)
        rep.flag(f"stable.square[{i}]", "divided squares stabilize Vbar", ok)
        rep.flag(f"sigma.long[{i}]", "U(2u_i) = -X(u_i)^2/2 and V(2u_i) = -Y(u_i)^2/2 on Vbar",
                 C(f"U(2u{i})") == -res(x2) and C(f"V(2u{i})") == -res(y2))
        sx, sy = B(f"X(u{i})"), B(f"Y(u{i})")
        rep.flag(f"unstable.short[{i}]", "short root vectors leave Vbar",
                 not stabilizes_hyperplane(sx, n) and not stabilizes_hyperplane(sy, n))
    for i in range(1, n + 1):
        for j in range(i + 1, n + 1):
            d, s = f"u{i}-u{j}", f"u{i}+u{j}"
            xd, yd, xs, ys = B(f"X({d})"), B(f"Y({d})"), B(f"X({s})"), B(f"Y({s})")
            ok = all(stabilizes_hyperplane(m, n) for m in (xd, yd, xs, ys))
            rep.flag(f"stable.long[{i},{j}]", "long root vectors stabilize Vbar", ok)
            ud, vd, us, vs = C(f"U({d})"), C(f"V({d})"), C(f"U({s})"), C(f"V({s})")
            u2, v2 = C(f"U(2u{j})"), C(f"V(2u{j})")
            rep.flag(f"sigma.diff[{i},{j}]", "U, V of u_i-u_j agree with X, Y on Vbar",
                     ud == res(xd) and vd == res(yd))
            rep.flag(f"sigma.sum[{i},{j}]", "sum-root vectors differ by twice a product",
                     us == res(xs) + 2 * (ud @ u2) and vs == res(ys) + 2 * (v2 @ vd))
            rep.flag(f"sigma.mod2[{i},{j}]", "sum-root vectors agree mod 2",
                     us.all_congruent(res(xs), 2) and vs.all_congruent(res(ys), 2))
            rep.flag(f"sigma.bracket[{i},{j}]", "sum-root vectors as brackets",
                     us == ud.bracket(u2) and vs == v2.bracket(vd))
            x2, y2 = res(B(f"X(u{j})^2/2")), res(B(f"Y(u{j})^2/2"))
            rxd, ryd = res(xd), res(yd)
            rep.flag(f"sigma.commutator[{i},{j}]", "sum-root vectors via divided squares",
                     us == x2 @ rxd - rxd @ x2 and vs == ryd @ y2 - y2 @ ryd)


def generators(family: str, n: int) -> tuple[Operator, ...]:
    """All root vectors ``X_alpha, Y_alpha`` (or ``U, V``), positive first."""
    pos = positive_roots(family, n)
    return tuple(root_operator(r) for r in pos) + tuple(root_operator(-r) for r in pos)


def simple_cartans(family: str, n: int) -> tuple[Operator, ...]:
    return tuple(cartan_operator(family, n, i) for i in range(1, len(simple_roots(family, n)) + 1))
