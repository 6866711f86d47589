"""Finite-dimensional modules given by generator matrices over F_p, and spinning.

An :class:`Action` is a list of column images per generator label, stored in
the internal vector form of :mod:`weylchain.exactlin` (ints for p = 2, sparse
dicts otherwise). Coordinates carry u-weights so that every subspace built
from weight vectors can report its weight decomposition.
"""

from __future__ import annotations

from collections import deque
from dataclasses import dataclass, field
from typing import Iterable, Mapping, Sequence

from .errors import PreconditionError
from .exactlin import FpSubspace, new_echelon, subspace_intersection, to_internal
from .exactlin import vec_support as support

Weight = tuple[int, ...]


def is_raising(label: str) -> bool:
    return label[0] in "XU"


@dataclass(eq=False)
class Action:
    p: int
    dim: int
    ops: dict[str, list]
    weights: tuple[Weight, ...]
    _nonzero: dict[str, list] = field(default=None, repr=False)

    def __post_init__(self) -> None:
        if len(self.weights) != self.dim:
            raise ValueError("one weight per coordinate required")
        for lbl, cols in self.ops.items():
            if len(cols) != self.dim:
                raise ValueError(f"generator {lbl} has {len(cols)} columns, expected {self.dim}")
        self._nonzero = {lbl: cols for lbl, cols in self.ops.items() if any(cols)}

    @property
    def labels(self) -> list[str]:
        return list(self.ops)

    def apply_cols(self, cols: list, v):
        if self.p == 2:
            out = 0
            while v:
                low = v & -v
                out ^= cols[low.bit_length() - 1]
                v ^= low
            return out
        p = self.p
        out: dict[int, int] = {}
        for j, x in v.items():
            for i, a in cols[j].items():
                y = (out.get(i, 0) + a * x) % p
                if y:
                    out[i] = y
                else:
                    out.pop(i, None)
        return out

    def apply(self, label: str, v):
        cols = self.ops.get(label)
        if cols is None:
            return 0 if self.p == 2 else {}
        return self.apply_cols(cols, to_internal(self.p, v))

    def apply_word(self, word: Sequence[str], v):
        """Apply ``word[0] word[1] ... word[-1]`` to ``v`` (rightmost first)."""
        for lbl in reversed(word):
            v = self.apply(lbl, v)
        return v

    def nonzero_ops(self) -> Mapping[str, list]:
        return self._nonzero

    def weight_of(self, v) -> Weight | None:
        """Common weight of the support of ``v``; None if ``v`` is zero or mixed."""
        ws = {self.weights[j] for j in support(self.p, v)}
        return ws.pop() if len(ws) == 1 else None

    def unit(self, j: int):
        return 1 << j if self.p == 2 else {j: 1}


def spin(action: Action, seeds: Iterable, base: FpSubspace | None = None) -> FpSubspace:
    """Smallest generator-stable subspace containing ``seeds`` (and ``base``).

    ``base`` must itself be stable; its vectors are not re-processed.
    """
    ech = base.echelon() if base is not None else new_echelon(action.p)
    queue = deque()
    for s in seeds:
        r = ech.insert(to_internal(action.p, s))
        if r:
            queue.append(r)
    ops = list(action.nonzero_ops().values())
    apply = action.apply_cols
    while queue:
        v = queue.popleft()
        for cols in ops:
            w = apply(cols, v)
            if w:
                r = ech.insert(w)
                if r:
                    queue.append(r)
    return FpSubspace.from_echelon(action.p, action.dim, ech)


def closure_residual(action: Action, sub: FpSubspace) -> int:
    """Number of (generator, basis vector) pairs whose image leaves ``sub``."""
    bad = 0
    for cols in action.nonzero_ops().values():
        for v in sub.vectors():
            if sub.reduce(action.apply_cols(cols, v)):
                bad += 1
    return bad


def is_submodule(action: Action, sub: FpSubspace) -> bool:
    return closure_residual(action, sub) == 0


# ---------------------------------------------------------------------------
# sections


@dataclass(eq=False)
class Section:
    """The quotient ``top / bottom`` of two stable subspaces, with its own action.

    Coordinates of the section are indexed by a basis of representatives:
    the rows of ``top`` reduced modulo ``bottom`` and re-echelonized.
    """

    parent: Action
    top: FpSubspace
    bottom: FpSubspace
    reps: FpSubspace
    action: Action

    @property
    def dim(self) -> int:
        return self.action.dim

    def project(self, v):
        """Section coordinates of a vector of ``top`` (internal form)."""
        r = self.bottom.reduce(v)
        coords = self.reps.coordinates(r)
        if self.parent.p == 2:
            out = 0
            for i, c in enumerate(coords):
                if c:
                    out |= 1 << i
            return out
        return {i: c for i, c in enumerate(coords) if c}

    def lift(self, v):
        """Representative in the parent space of a section vector."""
        p = self.parent.p
        reps = self.reps.vectors()
        if p == 2:
            out = 0
            for i in support(2, v):
                out ^= reps[i]
            return out
        out: dict[int, int] = {}
        for i, c in v.items():
            for j, x in reps[i].items():
                y = (out.get(j, 0) + c * x) % p
                if y:
                    out[j] = y
                else:
                    out.pop(j, None)
        return out

    def lift_subspace(self, sub: FpSubspace) -> FpSubspace:
        """Preimage in the parent of a subspace of the section."""
        ech = self.bottom.echelon()
        for v in sub.vectors():
            ech.insert(self.lift(v))
        return FpSubspace.from_echelon(self.parent.p, self.parent.dim, ech)

    def image(self, sub: FpSubspace) -> FpSubspace:
        """Image in the section of a subspace of ``top``."""
        return FpSubspace.span(self.parent.p, self.dim, [self.project(v) for v in sub.vectors()])


def section(action: Action, top: FpSubspace, bottom: FpSubspace | None = None) -> Section:
    p = action.p
    if bottom is None:
        bottom = FpSubspace.zero(p, action.dim)
    if not top.contains(bottom):
        raise PreconditionError("bottom is not contained in top")
    ech = new_echelon(p)
    for v in top.vectors():
        r = bottom.reduce(v)
        if r:
            ech.insert(r)
    reps = FpSubspace.from_echelon(p, action.dim, ech)
    weights = tuple(action.weights[c] for c in reps.pivots)
    shell = Section(action, top, bottom, reps, None)  # type: ignore[arg-type]
    ops = {}
    for lbl, cols in action.ops.items():
        ops[lbl] = [shell.project(action.apply_cols(cols, v)) for v in reps.vectors()]
    shell.action = Action(p, reps.dim, ops, weights)
    return shell


def restrict(action: Action, sub: FpSubspace) -> Section:
    return section(action, sub, None)


# ---------------------------------------------------------------------------
# parallel spinning


@dataclass(eq=False)
class GraphIso:
    is_graph_iso: bool
    graph: FpSubspace
    dim_u: int
    dim_w: int
    dim_graph: int
    meets_right: int
    spin_u: FpSubspace
    spin_w: FpSubspace
    dim_left: int

    def transport(self, sub: FpSubspace) -> FpSubspace:
        """Image under the graph of a subspace of the left-hand space."""
        p, du = self.graph.p, self.dim_left
        total = self.graph.ambient_dim
        dw = total - du
        ech = new_echelon(p)
        for v in sub.vectors():
            ech.insert(v)
        for j in range(dw):
            ech.insert(1 << (du + j) if p == 2 else {du + j: 1})
        box = FpSubspace.from_echelon(p, total, ech)
        meet = subspace_intersection(self.graph, box)
        if p == 2:
            out = [v >> du for v in meet.vectors()]
        else:
            out = [{j - du: x for j, x in v.items() if j >= du} for v in meet.vectors()]
        return FpSubspace.span(p, dw, out)


def direct_sum(a: Action, b: Action) -> Action:
    if a.p != b.p:
        raise PreconditionError("actions over different fields")
    p, da = a.p, a.dim
    labels = list(dict.fromkeys(list(a.ops) + list(b.ops)))
    zero = 0 if p == 2 else {}
    ops = {}
    for lbl in labels:
        left = a.ops.get(lbl, [zero] * a.dim)
        right = b.ops.get(lbl, [zero] * b.dim)
        if p == 2:
            ops[lbl] = list(left) + [c << da for c in right]
        else:
            ops[lbl] = list(left) + [{i + da: x for i, x in c.items()} for c in right]
    return Action(p, a.dim + b.dim, ops, a.weights + b.weights)


def check_highest_weight(action: Action, v) -> Weight:
    v = to_internal(action.p, v)
    w = action.weight_of(v)
    if w is None:
        raise PreconditionError("vector is zero or not a weight vector")
    for lbl, cols in action.nonzero_ops().items():
        if is_raising(lbl) and action.apply_cols(cols, v):
            raise PreconditionError(f"{lbl} does not annihilate the vector")
    return w


def parallel_spin_iso(U: Action, u, W: Action, w) -> GraphIso:
    """Spin ``u + w`` in ``U (+) W``; the result is the graph of a homomorphism
    ``spin(u) -> spin(w)`` whenever it meets ``0 (+) W`` trivially."""
    wu = check_highest_weight(U, u)
    ww = check_highest_weight(W, w)
    if wu != ww:
        raise PreconditionError(f"weights differ: {wu} vs {ww}")
    p = U.p
    u, w = to_internal(p, u), to_internal(p, w)
    both = direct_sum(U, W)
    seed = u | (w << U.dim) if p == 2 else {**u, **{j + U.dim: x for j, x in w.items()}}
    graph = spin(both, [seed])
    su, sw = spin(U, [u]), spin(W, [w])
    right = FpSubspace.span(p, both.dim, [both.unit(U.dim + j) for j in range(W.dim)])
    meet = subspace_intersection(graph, right).dim
    ok = graph.dim == su.dim == sw.dim and meet == 0
    return GraphIso(ok, graph, su.dim, sw.dim, graph.dim, meet, su, sw, U.dim)
