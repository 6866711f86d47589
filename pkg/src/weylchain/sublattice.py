"""Submodule lattices of small modules over F_p by primitive-vector search.

A nonzero submodule contains a nonzero vector killed by every raising divided
power, since those act nilpotently. A minimal submodule is spun by any of its
primitive weight vectors, so enumerating the primitive space one weight
component at a time finds every minimal submodule. Covers of a node ``S`` are
the preimages of the minimal submodules of the quotient by ``S``, so a
breadth-first search over covers visits every submodule.
"""

from __future__ import annotations

from collections import deque
from dataclasses import dataclass, field
from itertools import product
from math import comb

from .errors import PreconditionError, ScaleError
from .exactlin import FpMatrix, FpSubspace, left_kernel, subspace_intersection, subspace_sum
from .report import Report
from .spin import Action, is_raising, section, spin
from .weylmod import GeneratedModule, lowering_word, weyl_action, weyl_generated

MAX_PRIMITIVE_DIM = 20
NODE_CAP = 64
# module dimension allowed per unit of node budget; the default admits dim <= 128
DIM_PER_NODE = 2
BRUTE_FORCE_MAX_DIM = 14


def module_action(m: GeneratedModule | Action) -> Action:
    """Intrinsic action of a module (coordinates relative to its own basis)."""
    if isinstance(m, Action):
        return m
    return m.section().action


def key(sub: FpSubspace) -> tuple:
    if sub.p == 2:
        return sub.pivots, tuple(sub.vectors())
    return sub.pivots, tuple(tuple(sorted(v.items())) for v in sub.vectors())


def primitive_space(m: GeneratedModule | Action) -> FpSubspace:
    """Common kernel of every raising divided power."""
    act = module_action(m)
    p, d = act.p, act.dim
    raising = [cols for lbl, cols in act.nonzero_ops().items() if is_raising(lbl)]
    rows = []
    for j in range(d):
        if p == 2:
            r = 0
            for s, cols in enumerate(raising):
                r |= cols[j] << (s * d)
        else:
            r = {}
            for s, cols in enumerate(raising):
                r.update({i + s * d: x for i, x in cols[j].items()})
        rows.append(r)
    return left_kernel(FpMatrix.from_internal(p, d * max(len(raising), 1), rows))


def weight_components(act: Action, sub: FpSubspace) -> dict[tuple[int, ...], list]:
    """Split a weight-graded subspace into weight components (basis rows are homogeneous)."""
    out: dict[tuple[int, ...], list] = {}
    for v in sub.vectors():
        w = act.weight_of(v)
        if w is None:
            raise PreconditionError("subspace basis is not made of weight vectors")
        out.setdefault(w, []).append(v)
    return out


def _combinations(p: int, basis: list):
    """Every nonzero vector of the span, up to scalars (leading coefficient 1)."""
    m = len(basis)
    for lead in range(m):
        for tail in product(range(p), repeat=m - lead - 1):
            if p == 2:
                v = basis[lead]
                for c, b in zip(tail, basis[lead + 1:]):
                    if c:
                        v ^= b
            else:
                v = dict(basis[lead])
                for c, b in zip(tail, basis[lead + 1:]):
                    for i, x in b.items():
                        y = (v.get(i, 0) + c * x) % p
                        if y:
                            v[i] = y
                        else:
                            v.pop(i, None)
            yield v


def _minimal(cands: list[FpSubspace]) -> list[FpSubspace]:
    uniq = {}
    for c in cands:
        uniq.setdefault(key(c), c)
    items = sorted(uniq.values(), key=lambda s: (s.dim, key(s)))
    out = []
    for s in items:
        if not any(s.contains(t) for t in out):
            out.append(s)
    return out


def minimal_submodules(m: GeneratedModule | Action, max_primitive_dim: int = MAX_PRIMITIVE_DIM) -> list[FpSubspace]:
    """All minimal nonzero submodules, ordered by dimension then canonical basis."""
    act = module_action(m)
    if act.dim == 0:
        return []
    prim = primitive_space(act)
    if prim.dim > max_primitive_dim:
        raise ScaleError(f"primitive space of dimension {prim.dim} exceeds enumeration bound {max_primitive_dim}")
    cands = []
    for basis in weight_components(act, prim).values():
        for v in _combinations(act.p, basis):
            cands.append(spin(act, [v]))
    return _minimal(cands)


def brute_force_minimal(m: GeneratedModule | Action, max_dim: int = BRUTE_FORCE_MAX_DIM) -> list[FpSubspace]:
    """Minimal submodules from spinning every nonzero vector (small modules only)."""
    act = module_action(m)
    if act.dim > max_dim:
        raise ScaleError(f"brute force limited to dimension {max_dim}")
    full = [act.unit(j) for j in range(act.dim)]
    return _minimal([spin(act, [v]) for v in _combinations(act.p, full)])


@dataclass(eq=False)
class SubmoduleLattice:
    action: Action
    nodes: list[FpSubspace]
    edges: list[tuple[int, int]]
    module: GeneratedModule | None = field(default=None, repr=False)

    @property
    def dims(self) -> list[int]:
        return [s.dim for s in self.nodes]

    def index(self, sub: FpSubspace) -> int | None:
        k = key(sub)
        for i, s in enumerate(self.nodes):
            if key(s) == k:
                return i
        return None

    def covers(self, i: int) -> list[int]:
        return [b for a, b in self.edges if a == i]

    def chains_with_dims(self, dims: list[int]) -> list[list[int]]:
        """Node chains ``N_0 < N_1 < ...`` with ``dim N_i = dims[i]`` (not necessarily covers)."""
        layers = [[i for i, s in enumerate(self.nodes) if s.dim == d] for d in dims]
        chains = [[i] for i in layers[0]]
        for layer in layers[1:]:
            chains = [c + [j] for c in chains for j in layer if self.nodes[j].contains(self.nodes[c[-1]])]
        return chains

    def is_closed(self) -> bool:
        """Pairwise sums and intersections are nodes."""
        keys = {key(s) for s in self.nodes}
        for a in range(len(self.nodes)):
            for b in range(a + 1, len(self.nodes)):
                x, y = self.nodes[a], self.nodes[b]
                if key(subspace_sum(x, y)) not in keys or key(subspace_intersection(x, y)) not in keys:
                    return False
        return True

    def to_dot(self, name: str = "submodules") -> str:
        lines = [f"digraph {name} {{", "  rankdir=BT;"]
        for i, s in enumerate(self.nodes):
            lines.append(f'  n{i} [label="{s.dim}"];')
        for a, b in self.edges:
            lines.append(f"  n{a} -> n{b};")
        lines.append("}")
        return "\n".join(lines) + "\n"


def full_lattice(m: GeneratedModule | Action, node_cap: int = NODE_CAP,
                 max_primitive_dim: int = MAX_PRIMITIVE_DIM) -> SubmoduleLattice:
    """Every submodule, found by breadth-first search over covers.

    The search budget is governed by ``node_cap``: at most that many nodes, and
    a module of dimension at most ``DIM_PER_NODE * node_cap``.
    """
    act = module_action(m)
    if act.p != 2:
        raise PreconditionError("lattice search is implemented over F_2")
    if act.dim > DIM_PER_NODE * node_cap:
        raise ScaleError(
            f"module dimension {act.dim} exceeds the search budget {DIM_PER_NODE * node_cap}"
            f" for node cap {node_cap}"
        )
    whole = FpSubspace.full(2, act.dim)
    zero = FpSubspace.zero(2, act.dim)
    nodes = [zero]
    index = {key(zero): 0}
    edges = []
    queue = deque([0])
    while queue:
        i = queue.popleft()
        S = nodes[i]
        if S.dim == act.dim:
            continue
        sec = section(act, whole, S)
        for T in minimal_submodules(sec.action, max_primitive_dim):
            up = sec.lift_subspace(T)
            k = key(up)
            j = index.get(k)
            if j is None:
                if len(nodes) >= node_cap:
                    raise ScaleError(f"submodule lattice exceeds node cap {node_cap}")
                j = len(nodes)
                nodes.append(up)
                index[k] = j
                queue.append(j)
            edges.append((i, j))
    order = sorted(range(len(nodes)), key=lambda i: (nodes[i].dim, key(nodes[i])))
    renum = {old: new for new, old in enumerate(order)}
    return SubmoduleLattice(
        act,
        [nodes[i] for i in order],
        sorted((renum[a], renum[b]) for a, b in edges),
        m if isinstance(m, GeneratedModule) else None,
    )


def verify_uniqueness(n: int, k: int, node_cap: int = NODE_CAP) -> Report:
    """The chain of dimensions ``C(2n+1, i)`` is realized by exactly one chain of submodules."""
    if not 1 <= k <= 4:
        raise PreconditionError("uniqueness is verified for k <= 4")
    if k > n:
        raise PreconditionError(f"k must lie in 1..{n}")
    rep = Report("uniqueness", {"family": "B", "n": n, "k": k, "p": 2})
    act, _ = weyl_action(n, k)
    lat = full_lattice(act, node_cap)
    dims = [comb(2 * n + 1, i) for i in range(k + 1)]
    rep.flag("node_dims", "submodule dimensions include C(2n+1, i) for i <= k",
             set(dims) <= set(lat.dims), lat.dims)
    chains = lat.chains_with_dims(dims)
    rep.compare("qualifying_chains", "number of submodule chains with dimensions C(2n+1, i)", 1, len(chains))
    rep.flag("closed", "lattice closed under sum and intersection", lat.is_closed())
    rep.flag("all_submodules", "every node is stable",
             all(_stable(act, s) for s in lat.nodes))
    if len(chains) == 1:
        expected = [weyl_generated(n, k, lowering_word(i, k)).basis for i in range(k + 1)]
        rep.flag("matches_spun_chain", "the chain is M_0 < ... < M_k",
                 [key(lat.nodes[j]) for j in chains[0]] == [key(s) for s in expected])
    return rep


def _stable(act: Action, sub: FpSubspace) -> bool:
    return all(not sub.reduce(act.apply_cols(cols, v))
               for cols in act.nonzero_ops().values() for v in sub.vectors())


__all__ = [
    "BRUTE_FORCE_MAX_DIM",
    "DIM_PER_NODE",
    "MAX_PRIMITIVE_DIM",
    "NODE_CAP",
    "SubmoduleLattice",
    "brute_force_minimal",
    "full_lattice",
    "minimal_submodules",
    "module_action",
    "primitive_space",
    "verify_uniqueness",
]
