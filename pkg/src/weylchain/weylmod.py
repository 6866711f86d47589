"""Weyl modules for the weights lambda_k of B_n inside exterior powers.

``V_Z(lambda_k)`` is realized as the lattice spanned by the orbit of
``e_1 ^ ... ^ e_k`` in ``wedge^k Z^{2n+1}`` under all divided powers of root
vectors. Its reduction ``V_F`` lives in lattice coordinates (the HNF basis
rows), and the comparison map to the exterior power is coordinate reduction.
"""

from __future__ import annotations

import os
from collections import deque
from dataclasses import dataclass, field
from functools import lru_cache
from math import comb
from pathlib import Path

from .chevalley import ambient_dim
from .errors import ContainmentError, PreconditionError, ScaleError
from .exactlin import (
    FpMatrix,
    FpSubspace,
    IntLattice,
    LatticeBuilder,
    SparseIntMatrix,
    is_prime,
    left_kernel,
    subspace_intersection,
    subspace_sum,
)
from .polar import nucleus_oracle_vectors
from .report import Report
from .rootdata import lambda_circ, pairing, weight_from_u
from .spin import Action, GraphIso, Section, closure_residual, parallel_spin_iso, section, spin
from .wedge import colex_rank, generator_set, subset_weight, subsets

MAX_WEDGE_DIM = 25000


def _check(family: str, n: int, k: int) -> None:
    if family not in ("B", "C"):
        raise PreconditionError(f"unknown family {family!r}")
    if n < 2:
        raise PreconditionError("n must be >= 2")
    if not 1 <= k <= n:
        raise PreconditionError(f"k must lie in 1..{n}, got {k}")


def _check_field(p: int) -> None:
    if p != 0 and not is_prime(p):
        from .errors import ModulusError

        raise ModulusError(f"{p} is neither 0 nor a prime")


def highest_vector(k: int) -> dict[int, int]:
    """``e_1 ^ ... ^ e_k``; its colex rank is 0."""
    return {colex_rank(tuple(range(1, k + 1))): 1}


def nucleus_vector(n: int, k: int) -> dict[int, int]:
    """``e_1 ^ ... ^ e_{k-1} ^ e_{2n+1}`` with coefficient -1, the image of ``Y(u_k)``."""
    return {colex_rank(tuple(range(1, k)) + (2 * n + 1,)): -1}


@lru_cache(maxsize=None)
def wedge_weights(family: str, n: int, k: int) -> tuple[tuple[int, ...], ...]:
    return tuple(subset_weight(n, J) for J in subsets(ambient_dim(family, n), k))


@lru_cache(maxsize=None)
def wedge_action(family: str, n: int, k: int, p: int) -> Action:
    """Divided-power generators on ``wedge^k F_p^N``."""
    ops = {g.label: g.matrix.mod_columns(p) for g in generator_set(family, n, k)}
    return Action(p, comb(ambient_dim(family, n), k), ops, wedge_weights(family, n, k))


# ---------------------------------------------------------------------------
# integral closure


def _cache_path(cache_dir, family: str, n: int, k: int, p: int = 0) -> Path:
    return Path(cache_dir) / f"lattice-{family}-n{n}-k{k}-p{p}.txt"


def _is_closed(lattice: IntLattice, family: str, n: int, k: int) -> bool:
    gens = generator_set(family, n, k)
    rows = lattice.sparse_rows()
    for g in gens:
        for r in rows:
            if not lattice.contains(g.matrix.apply(r)):
                return False
    return True


def generate_lattice(
    family: str,
    n: int,
    k: int,
    *,
    max_wedge_dim: int = MAX_WEDGE_DIM,
    cache_dir: str | os.PathLike | None = None,
) -> IntLattice:
    """Z-span of the orbit of ``e_1 ^ .. ^ e_k`` under all divided powers, in HNF."""
    _check(family, n, k)
    size = comb(ambient_dim(family, n), k)
    if size > max_wedge_dim:
        raise ScaleError(f"wedge dimension {size} exceeds cap {max_wedge_dim}")
    if cache_dir is not None:
        path = _cache_path(cache_dir, family, n, k)
        if path.exists():
            lat = IntLattice.loads(path.read_text())
            if (
                lat.ambient_dim == size
                and lat.contains(highest_vector(k))
                and _is_closed(lat, family, n, k)
            ):
                return lat
    lat = _closure(family, n, k)
    if cache_dir is not None:
        Path(cache_dir).mkdir(parents=True, exist_ok=True)
        _cache_path(cache_dir, family, n, k).write_text(lat.dumps())
    return lat


@lru_cache(maxsize=None)
def _closure(family: str, n: int, k: int) -> IntLattice:
    size = comb(ambient_dim(family, n), k)
    gens = [g.matrix for g in generator_set(family, n, k)]
    builder = LatticeBuilder(size)
    start = highest_vector(k)
    builder.insert(start)
    queue = deque([start])
    while queue:
        v = queue.popleft()
        for g in gens:
            w = g.apply(v)
            if w and builder.insert(w):
                queue.append(w)
    return builder.to_lattice()


# ---------------------------------------------------------------------------
# Weyl modules


@dataclass(eq=False)
class WeylModule:
    family: str
    n: int
    k: int
    p: int
    lattice: IntLattice
    action: Action | None
    hw_vector: object
    phi_matrix: FpMatrix | None
    kernel: FpSubspace | None
    int_images: dict[str, list[list[int]]] = field(repr=False, default_factory=dict)

    @property
    def dim(self) -> int:
        return self.lattice.rank

    @property
    def coord_basis(self) -> list[dict[int, int]]:
        return self.lattice.sparse_rows()

    def phi(self, v) -> object:
        """Image in ``wedge^k F_p^N`` of a vector given in lattice coordinates."""
        rows = self.phi_matrix.rows_internal()
        if self.p == 2:
            out = 0
            j = 0
            while v:
                if v & 1:
                    out ^= rows[j]
                v >>= 1
                j += 1
            return out
        out: dict[int, int] = {}
        for i, c in v.items():
            for j, x in rows[i].items():
                y = (out.get(j, 0) + c * x) % self.p
                if y:
                    out[j] = y
                else:
                    out.pop(j, None)
        return out

    def preimage(self, sub: FpSubspace) -> FpSubspace:
        """``phi^{-1}(sub)`` as a subspace of lattice coordinates."""
        m = FpMatrix.from_internal(
            self.p, sub.ambient_dim, [sub.reduce(r) for r in self.phi_matrix.rows_internal()]
        )
        return left_kernel(m)


@lru_cache(maxsize=None)
def weyl_module(family: str, n: int, k: int, p: int) -> WeylModule:
    _check(family, n, k)
    _check_field(p)
    lat = generate_lattice(family, n, k)
    rows = lat.sparse_rows()
    weights_amb = wedge_weights(family, n, k)
    weights = tuple(weights_amb[c] for c in lat.pivots)
    hw = lat.coordinates(highest_vector(k))
    images: dict[str, list[list[int]]] = {}
    for g in generator_set(family, n, k):
        images[g.label] = [lat.coordinates(g.matrix.apply(r)) for r in rows]
    if p == 0:
        return WeylModule(family, n, k, 0, lat, None, hw, None, None, images)
    ops = {lbl: [_reduce_coords(p, c) for c in cols] for lbl, cols in images.items()}
    action = Action(p, lat.rank, ops, weights)
    phi = FpMatrix.from_internal(p, lat.ambient_dim, [_reduce_sparse(p, r) for r in rows])
    kernel = left_kernel(phi)
    return WeylModule(family, n, k, p, lat, action, _reduce_coords(p, hw), phi, kernel, images)


def _reduce_coords(p: int, coords: list[int]):
    if p == 2:
        out = 0
        for i, c in enumerate(coords):
            if c & 1:
                out |= 1 << i
        return out
    return {i: c % p for i, c in enumerate(coords) if c % p}


def _reduce_sparse(p: int, row: dict[int, int]):
    if p == 2:
        out = 0
        for j, x in row.items():
            if x & 1:
                out |= 1 << j
        return out
    return {j: x % p for j, x in row.items() if x % p}


# ---------------------------------------------------------------------------
# generated modules


@dataclass(eq=False)
class GeneratedModule:
    """A cyclic submodule of an ambient action, spun from one vector."""

    family: str
    n: int
    k: int
    p: int
    ambient: str
    basis: FpSubspace | IntLattice
    action: Action | None
    cyclic_vector: object
    _section: Section | None = field(default=None, repr=False)

    @property
    def dim(self) -> int:
        return self.basis.rank if isinstance(self.basis, IntLattice) else self.basis.dim

    @property
    def cyclic_gen(self) -> list[int]:
        """Coordinates of the generating vector in the module basis."""
        if isinstance(self.basis, IntLattice):
            return self.basis.coordinates(self.cyclic_vector)
        return self.basis.coordinates(self.cyclic_vector)

    def section(self) -> Section:
        if self._section is None:
            self._section = section(self.action, self.basis)
        return self._section

    @property
    def gens(self) -> dict[str, FpMatrix]:
        """Restricted action: column ``j`` of each matrix is the image of basis vector ``j``."""
        act = self.section().action
        out = {}
        for lbl, cols in act.ops.items():
            out[lbl] = FpMatrix.from_internal(self.p, act.dim, cols)
        return out

    def closure_residual(self) -> int:
        if isinstance(self.basis, IntLattice):
            return 0 if _is_closed(self.basis, self.family, self.n, self.k) else 1
        return closure_residual(self.action, self.basis)


def _generated(family, n, k, p, ambient, action, seed, base=None) -> GeneratedModule:
    sub = spin(action, [seed], base)
    mod = GeneratedModule(family, n, k, p, ambient, sub, action, seed)
    return mod


def grassmann_module(family: str, n: int, k: int, p: int) -> GeneratedModule:
    """Spin of ``e_1 ^ .. ^ e_k`` in ``wedge^k F_p^N``; ``p = 0`` works over Z."""
    _check(family, n, k)
    _check_field(p)
    amb = f"wedge^{k}({family}{n})"
    if p == 0:
        lat = generate_lattice(family, n, k)
        return GeneratedModule(family, n, k, 0, amb, lat, None, highest_vector(k))
    act = wedge_action(family, n, k, p)
    seed = 1 if p == 2 else {0: 1}
    return _generated(family, n, k, p, amb, act, seed)


def weyl_ambient(n: int, k: int) -> str:
    return f"V(B{n},lambda{k})"


def weyl_generated(n: int, k: int, word: tuple[str, ...], p: int = 2) -> GeneratedModule:
    """Submodule of ``V_F(lambda_k)`` spun by ``word`` applied to the highest vector."""
    wm = weyl_module("B", n, k, p)
    v = wm.action.apply_word(word, wm.hw_vector)
    return _generated("B", n, k, p, weyl_ambient(n, k), wm.action, v)


def lowering_word(lo: int, k: int) -> tuple[str, ...]:
    """``Y(u_{lo+1}) Y(u_{lo+2}) ... Y(u_k)``."""
    return tuple(f"Y(u{i})" for i in range(lo + 1, k + 1))


def trivial_action(n: int, p: int = 2) -> Action:
    """One-dimensional module on which every root vector acts as zero."""
    return Action(p, 1, {}, ((0,) * n,))


def weyl_action(n: int, k: int, p: int = 2) -> tuple[Action, object]:
    """Action and highest vector of ``V_F(lambda_k)``, including ``k = 0``."""
    if k == 0:
        return trivial_action(n, p), (1 if p == 2 else {0: 1})
    wm = weyl_module("B", n, k, p)
    return wm.action, wm.hw_vector


# ---------------------------------------------------------------------------
# nucleus


@dataclass(eq=False)
class NucleusResult:
    spun: GeneratedModule
    image: FpSubspace
    oracle_span: FpSubspace | None
    oracle_dim: int | None
    oracle_preimage: FpSubspace | None

    @property
    def dim(self) -> int:
        return self.spun.dim


def nucleus(n: int, k: int, p: int = 2, oracle_max_n: int = 3) -> NucleusResult:
    """Submodule of ``V_F(lambda_k)`` spun by ``Y(u_k) v+``, with the geometric cross-check.

    ``image`` is its image in ``wedge^k F_2^{2n+1}``. For ``n <= oracle_max_n`` the
    span of ``x_1 ^ .. ^ x_{k-1} ^ e_{2n+1}`` over all totally singular
    ``<x_1..x_{k-1}>`` is formed as ``oracle_span``; ``oracle_dim`` is the
    dimension of its preimage in ``V_F(lambda_k)``.
    """
    if p != 2:
        raise PreconditionError("the nucleus is defined in characteristic 2 only")
    _check("B", n, k)
    wm = weyl_module("B", n, k, 2)
    spun = weyl_generated(n, k, (f"Y(u{k})",))
    image = FpSubspace.span(2, wm.lattice.ambient_dim, [wm.phi(v) for v in spun.basis.vectors()])
    if n > oracle_max_n:
        return NucleusResult(spun, image, None, None, None)
    oracle = FpSubspace.span(2, wm.lattice.ambient_dim, nucleus_oracle_vectors(n, k))
    pre = wm.preimage(oracle)
    return NucleusResult(spun, image, oracle, pre.dim, pre)


# ---------------------------------------------------------------------------
# quotient by the nucleus line (characteristic 2)


@lru_cache(maxsize=None)
def hyperplane_quotient_action(n: int, k: int) -> tuple[Action, bool]:
    """Induced action mod 2 on ``wedge^k (V / <e_{2n+1}>) = wedge^k F_2^{2n}``.

    Returns the action and whether ``wedge^{k-1} V ^ e_{2n+1}`` (the trailing colex
    block) is stable, which is what makes the induced action well defined.
    """
    full = wedge_action("B", n, k, 2)
    m = comb(2 * n, k)
    mask = (1 << m) - 1
    stable = all(not (cols[j] & mask) for cols in full.ops.values() for j in range(m, full.dim))
    ops = {lbl: [cols[j] & mask for j in range(m)] for lbl, cols in full.ops.items()}
    return Action(2, m, ops, wedge_weights("C", n, k)), stable


def symplectic_module(n: int, k: int, p: int = 2) -> GeneratedModule:
    return grassmann_module("C", n, k, p)


# ---------------------------------------------------------------------------
# verification suites


def _binom(a: int, b: int) -> int:
    return comb(a, b) if b >= 0 else 0


def _gf2_dims(n: int, k: int) -> tuple[int, int]:
    return comb(2 * n + 1, k), comb(2 * n + 1, k) - _binom(2 * n + 1, k - 2)


def dimension_report(n: int, k: int, p: int) -> Report:
    rep = Report("dims", {"family": "B", "n": n, "k": k, "p": p})
    wm = weyl_module("B", n, k, p)
    rep.compare("weyl_dim", "dimension of the Weyl module", comb(2 * n + 1, k), wm.dim)
    W = grassmann_module("B", n, k, p)
    exp = _gf2_dims(n, k)[1] if p == 2 else comb(2 * n + 1, k)
    rep.compare("grassmann_dim", "dimension of the Grassmann module", exp, W.dim)
    if p:
        exp_k = _binom(2 * n + 1, k - 2) if p == 2 else 0
        rep.compare("kernel_dim", "dimension of the kernel onto the Grassmann module", exp_k, wm.kernel.dim)
        image = FpSubspace.span(p, wm.lattice.ambient_dim, wm.phi_matrix.rows_internal())
        rep.flag("phi_image", "the Grassmann module is the image of the Weyl module", image == W.basis)
    return rep


def perfect_report(n: int, k: int) -> Report:
    """Filtration by symplectic Grassmann modules in characteristic 2.

    Each ``M_i / M_{i-1}`` is certified isomorphic to the symplectic Grassmann
    module of ``wedge^i``, which in turn is checked to be a Weyl module for C_n
    (the lattice reduction mod 2 is injective).
    """
    _check("B", n, k)
    rep = Report("perfect", {"family": "B", "n": n, "k": k, "p": 2})
    mods = [weyl_generated(n, k, lowering_word(i, k)) for i in range(k + 1)]
    for i in range(1, k + 1):
        ok, info = quotient_certificate(n, k, i, mods)
        rep.flag(f"quotient_iso[{i}]", f"M_{i}/M_{i-1} matches the symplectic Grassmann module", ok, info)
        wc = weyl_module("C", n, i, 2)
        rep.compare(f"symplectic_weyl[{i}]", "kernel of the type C lattice reduction", 0, wc.kernel.dim)
        rep.compare(f"symplectic_dim[{i}]", "symplectic Grassmann dimension",
                    comb(2 * n, i) - _binom(2 * n, i - 2), symplectic_module(n, i).dim)
    return rep


def nucleus_report(n: int, k: int) -> Report:
    """Dimension of the nucleus submodule and its geometric description."""
    rep = Report("theorem2", {"family": "B", "n": n, "k": k, "p": 2})
    res = nucleus(n, k)
    rep.compare("nucleus_dim", "dimension of the submodule spun by Y(u_k) v+", comb(2 * n + 1, k - 1), res.dim)
    rep.compare("closure", "closure residual of the spun submodule", 0, res.spun.closure_residual())
    wm = weyl_module("B", n, k, 2)
    kernel_inside = res.spun.basis.contains(wm.kernel)
    rep.flag("kernel_inside", "the kernel lies in the nucleus submodule", kernel_inside)
    if res.oracle_span is not None:
        rep.compare("oracle_dim", "preimage dimension of the geometric span", comb(2 * n + 1, k - 1), res.oracle_dim)
        rep.flag("oracle_image", "geometric span equals the image in the exterior power", res.oracle_span == res.image)
        rep.flag("oracle_preimage", "preimage of the geometric span equals the spun submodule",
                 res.oracle_preimage == res.spun.basis)
    return rep


def nucleus_iso_report(n: int, k: int) -> Report:
    """Nucleus isomorphic to the previous Weyl module, carrying its nucleus onto the kernel."""
    if k < 2:
        raise PreconditionError("needs k >= 2")
    rep = Report("theorem4", {"family": "B", "n": n, "k": k, "p": 2})
    low, hw_low = weyl_action(n, k - 1)
    wm = weyl_module("B", n, k, 2)
    v1 = wm.action.apply(f"Y(u{k})", wm.hw_vector)
    iso = parallel_spin_iso(low, hw_low, wm.action, v1)
    rep.flag("graph_iso", "parallel spin is the graph of an isomorphism", iso.is_graph_iso,
             [iso.dim_u, iso.dim_w, iso.dim_graph, iso.meets_right])
    low_nucleus = spin(low, [low.apply(f"Y(u{k - 1})", hw_low)])
    image = iso.transport(low_nucleus)
    rep.compare("transport_dim", "dimension of the transported nucleus", wm.kernel.dim, image.dim)
    rep.flag("transport_kernel", "nucleus of the smaller module is carried onto the kernel", image == wm.kernel)
    return rep


def kernel_as_module(n: int, k: int, p: int = 2) -> Report:
    if k < 2:
        raise PreconditionError("needs k >= 2")
    if p != 2:
        raise PreconditionError("characteristic 2 only")
    rep = Report("kernel", {"family": "B", "n": n, "k": k, "p": 2})
    wm = weyl_module("B", n, k, 2)
    v2 = wm.action.apply_word((f"Y(u{k - 1})", f"Y(u{k})"), wm.hw_vector)
    sub = spin(wm.action, [v2])
    rep.compare("kernel_dim", "dimension of the kernel", _binom(2 * n + 1, k - 2), wm.kernel.dim)
    rep.flag("kernel_spun", "kernel equals the spin of Y(u_{k-1}) Y(u_k) v+", sub == wm.kernel)
    low, hw_low = weyl_action(n, k - 2)
    iso = parallel_spin_iso(low, hw_low, wm.action, v2)
    rep.flag("kernel_iso", "kernel isomorphic to the Weyl module two steps down", iso.is_graph_iso,
             [iso.dim_u, iso.dim_w, iso.dim_graph])
    if k == 2:
        act = section(wm.action, wm.kernel).action
        rep.flag("kernel_trivial", "every root vector acts as zero on the kernel",
                 not any(any(c) for c in act.ops.values()))
    return rep


@dataclass(eq=False)
class Chain:
    n: int
    k: int
    modules: list[GeneratedModule]
    report: Report

    @property
    def dims(self) -> list[int]:
        return [m.dim for m in self.modules]


def chain(n: int, k: int, p: int = 2, certify: bool | None = None) -> Chain:
    """``M_i`` spun by ``Y(u_{i+1}) ... Y(u_k) v+`` for ``i = 0..k``, with checks."""
    if p != 2:
        raise PreconditionError("the chain is defined in characteristic 2")
    _check("B", n, k)
    if certify is None:
        certify = n <= 3
    rep = Report("chain", {"family": "B", "n": n, "k": k, "p": 2})
    mods = [weyl_generated(n, k, lowering_word(i, k)) for i in range(k + 1)]
    wm = weyl_module("B", n, k, 2)
    rep.compare("dims", "dimensions of M_0..M_k",
                [comb(2 * n + 1, i) for i in range(k + 1)], [m.dim for m in mods])
    rep.compare("closure", "closure residuals", [0] * (k + 1), [m.closure_residual() for m in mods])
    rep.flag("nested", "M_{i-1} inside M_i",
             all(mods[i].basis.contains(mods[i - 1].basis) for i in range(1, k + 1)))
    top = mods[0].section().action
    rep.flag("trivial_bottom", "root vectors vanish on M_0", not any(any(c) for c in top.ops.values()))
    zero = FpSubspace.zero(2, wm.dim)
    two_down, one_down = [], []
    for i in range(1, k + 1):
        below2 = mods[i - 2].basis if i >= 2 else zero
        two_down.append(mods[i].dim - below2.dim)
        one_down.append(mods[i].dim - mods[i - 1].dim)
    rep.compare("two_step", "dim M_i/M_{i-2}", [_gf2_dims(n, i)[1] for i in range(1, k + 1)], two_down)
    rep.compare("one_step", "dim M_i/M_{i-1}",
                [comb(2 * n, i) - _binom(2 * n, i - 2) for i in range(1, k + 1)], one_down)
    if certify:
        for i in range(1, k + 1):
            ok, info = quotient_certificate(n, k, i, mods)
            rep.flag(f"quotient_iso[{i}]", f"M_{i}/M_{i-1} matches the symplectic Grassmann module", ok, info)
    return Chain(n, k, mods, rep)


def quotient_certificate(n: int, k: int, i: int, mods: list[GeneratedModule]) -> tuple[bool, list[int]]:
    """Certify ``M_i / M_{i-1}`` against ``wedge^i(V/<e_{2n+1}>)`` spun from ``e_1 ^ .. ^ e_i``.

    Three facts are checked: the induced action on the quotient of the exterior
    power is well defined mod 2; the spin of ``e_1 ^ .. ^ e_i`` there coincides
    with the symplectic Grassmann module; and a parallel spin identifies it with
    the section of the chain.
    """
    wm = weyl_module("B", n, k, 2)
    sec = section(wm.action, mods[i].basis, mods[i - 1].basis)
    gen = wm.action.apply_word(lowering_word(i, k), wm.hw_vector)
    quot, stable = hyperplane_quotient_action(n, i)
    induced = spin(quot, [1])
    symp = symplectic_module(n, i).basis
    iso = parallel_spin_iso(sec.action, sec.project(gen), quot, 1)
    ok = stable and induced == symp and iso.is_graph_iso
    return ok, [int(stable), induced.dim, symp.dim, iso.dim_graph]


def lowering_suite(n: int, k: int, p: int = 2) -> Report:
    """Identities for the lowering vectors ``Y(u_i) v+`` in ``V_F(lambda_k)``."""
    if p != 2:
        raise PreconditionError("characteristic 2 only")
    _check("B", n, k)
    rep = Report("lemmas", {"family": "B", "n": n, "k": k, "p": 2})
    wm = weyl_module("B", n, k, 2)
    act, v = wm.action, wm.hw_vector
    v1 = act.apply(f"Y(u{k})", v)
    # weight of v1 is lambda_{k-1}
    w_u = act.weight_of(v1)
    expect_u = tuple(1 if i < k else 0 for i in range(1, n + 1))
    rep.compare("v1_weight", "weight of Y(u_k) v+ in u-coordinates", list(expect_u), list(w_u))
    w_alpha = weight_from_u("B", n, w_u)
    rep.compare("v1_weight_alpha", "same weight in simple-root coordinates",
                [str(x) for x in lambda_circ(n, k - 1).alpha_coords], [str(x) for x in w_alpha.alpha_coords])
    if k >= 2:
        rep.compare("v1_pairing", "pairing of that weight with H_{k-1}", 1, pairing(w_alpha, k - 1))
    # Y(u_k) v+ is killed by every raising divided power
    raising = [lbl for lbl in act.ops if lbl[0] == "X"]
    bad = [lbl for lbl in raising if act.apply(lbl, v1)]
    rep.compare("v1_primitive", "raising operators that fail to kill Y(u_k) v+", [], bad)
    # Y(u_i) v+ vanishes above k and factors through Y(u_k) below k
    above = [i for i in range(k + 1, n + 1) if act.apply(f"Y(u{i})", v)]
    rep.compare("lower_above_k", "indices i > k with Y(u_i) v+ != 0", [], above)
    below = [i for i in range(1, k) if act.apply(f"Y(u{i})", v) != act.apply(f"Y(u{i}-u{k})", v1)]
    rep.compare("lower_below_k", "indices i < k with Y(u_i) v+ != Y(u_i-u_k) Y(u_k) v+", [], below)
    # double lowering lands in the kernel
    outside = []
    for i in range(1, n + 1):
        for j in range(i + 1, n + 1):
            x = act.apply_word((f"Y(u{i})", f"Y(u{j})"), v)
            if not wm.kernel.contains_vector(x):
                outside.append([i, j])
    rep.compare("double_lowering", "pairs i < j with Y(u_i) Y(u_j) v+ outside the kernel", [], outside)
    # over Z: Y(u_i) Y(u_k) e_1..e_k = -2 e_1 .. e_{k-1} e_{n+i}, zero mod 2
    gens = {g.label: g.matrix for g in generator_set("B", n, k)}
    wrong = []
    for i in range(1, k):
        x = gens[f"Y(u{i})"].apply(gens[f"Y(u{k})"].apply(highest_vector(k)))
        J = tuple(range(1, k)) + (n + i,)
        if x != {colex_rank(J): -2}:
            wrong.append(i)
    rep.compare("double_lowering_even", "indices with Y(u_i) Y(u_k) e_1..e_k != -2 e_1..e_{k-1} e_{n+i}", [], wrong)
    return rep


def splitting_decomposition(n: int, k: int) -> Report:
    """Vector-space splitting of the Grassmann module into the symplectic part and the nucleus part."""
    _check("B", n, k)
    rep = Report("splitting", {"family": "B", "n": n, "k": k, "p": 2})
    W = grassmann_module("B", n, k, 2).basis
    symp = symplectic_module(n, k).basis  # coordinates of wedge^k F_2^{2n} are a prefix
    embedded = FpSubspace.span(2, W.ambient_dim, symp.vectors())
    act = wedge_action("B", n, k, 2)
    nuc = spin(act, [1 << colex_rank(tuple(range(1, k)) + (2 * n + 1,))])
    rep.compare("nucleus_part", "dimension of the spin of e_1..e_{k-1} e_{2n+1}",
                comb(2 * n + 1, k - 1) - _binom(2 * n + 1, k - 2), nuc.dim)
    rep.compare("symplectic_part", "dimension of the symplectic Grassmann module",
                comb(2 * n, k) - _binom(2 * n, k - 2), embedded.dim)
    rep.compare("meet", "intersection dimension", 0, subspace_intersection(embedded, nuc).dim)
    rep.flag("sum", "the two parts add up to the Grassmann module", subspace_sum(embedded, nuc) == W)
    return rep


def sigma_suite(n: int, k: int) -> Report:
    """Integer comparison of symplectic and orthogonal root vectors on ``wedge^k Z^{2n}``."""
    from .chevalley import ortho_generator, restrict_to_hyperplane, symp_generator
    from .wedge import divided_power, lift, lift_matrix

    _check("C", n, k)
    rep = Report("sigma", {"n": n, "k": k})
    m = comb(2 * n, k)
    block = list(range(m))

    def wB(label):
        return lift(ortho_generator(n, label), k)

    def wC(label):
        return lift(symp_generator(n, label), k).matrix

    def res(mat: SparseIntMatrix) -> SparseIntMatrix:
        return mat.submatrix(block, block)

    def leaves_block(mat: SparseIntMatrix) -> bool:
        return any(r >= m for c in range(m) for r in mat.cols[c])

    for i in range(1, n + 1):
        sq_x = divided_power(wB(f"X(u{i})"), 2).matrix
        sq_y = divided_power(wB(f"Y(u{i})"), 2).matrix
        rep.flag(f"long[{i}]", "U(2u_i), V(2u_i) equal minus the divided squares",
                 not leaves_block(sq_x) and not leaves_block(sq_y)
                 and wC(f"U(2u{i})") == -res(sq_x) and wC(f"V(2u{i})") == -res(sq_y))
        half = restrict_to_hyperplane(ortho_generator(n, f"X(u{i})^2/2").matrix, n)
        rep.flag(f"square_lift[{i}]", "divided square of the lift agrees with the lifted square on the block",
                 lift_matrix(half, k) == res(sq_x))
    for i in range(1, n + 1):
        for j in range(i + 1, n + 1):
            d, s = f"u{i}-u{j}", f"u{i}+u{j}"
            xd, yd = wB(f"X({d})").matrix, wB(f"Y({d})").matrix
            xs, ys = wB(f"X({s})").matrix, wB(f"Y({s})").matrix
            ud, vd, us, vs = wC(f"U({d})"), wC(f"V({d})"), wC(f"U({s})"), wC(f"V({s})")
            u2, v2 = wC(f"U(2u{j})"), wC(f"V(2u{j})")
            rep.flag(f"diff[{i},{j}]", "U, V of u_i-u_j equal X, Y", ud == res(xd) and vd == res(yd))
            du, dv = us - res(xs), vs - res(ys)
            rep.flag(f"even[{i},{j}]", "sum-root differences have even entries",
                     all(x % 2 == 0 for _, _, x in du.entries()) and all(x % 2 == 0 for _, _, x in dv.entries()))
            base_u = symp_generator(n, f"U({d})").matrix @ symp_generator(n, f"U(2u{j})").matrix
            base_v = symp_generator(n, f"V(2u{j})").matrix @ symp_generator(n, f"V({d})").matrix
            rep.flag(f"difference[{i},{j}]", "differences are twice the lifted products",
                     du == 2 * lift_matrix(base_u, k) and dv == 2 * lift_matrix(base_v, k))
            rep.flag(f"mod2[{i},{j}]", "sum-root vectors agree mod 2",
                     us.all_congruent(res(xs), 2) and vs.all_congruent(res(ys), 2))
            rep.flag(f"bracket[{i},{j}]", "sum-root vectors are brackets",
                     us == ud.bracket(u2) and vs == v2.bracket(vd))
            sx = res(divided_power(wB(f"X(u{j})"), 2).matrix)
            sy = res(divided_power(wB(f"Y(u{j})"), 2).matrix)
            rep.flag(f"commutator[{i},{j}]", "sum-root vectors through divided squares",
                     us == sx @ res(xd) - res(xd) @ sx and vs == res(yd) @ sy - sy @ res(yd))
    return rep


def snf_profile(n: int, k: int) -> dict:
    """Elementary divisors of ``A_Z v+`` inside ``wedge^k Z^{2n+1}`` (as a histogram)."""
    from .exactlin import snf_divisors

    lat = generate_lattice("B", n, k)
    divs = snf_divisors(lat, IntLattice.standard(lat.ambient_dim))
    hist: dict[int, int] = {}
    for d in divs:
        hist[d] = hist.get(d, 0) + 1
    return {"divisors": dict(sorted(hist.items())), "even": sum(1 for d in divs if d % 2 == 0),
            "divisible_by_4": sum(1 for d in divs if d % 4 == 0)}


def group_stability(mod: GeneratedModule) -> bool:
    """Each ``x_alpha(1) = sum_t E^t/t!`` preserves the module (ambient wedge actions only)."""
    act = mod.action
    sub = mod.basis
    by_root: dict[str, list[list]] = {}
    for lbl, cols in act.ops.items():
        base = lbl.split("^")[0]
        by_root.setdefault(base, []).append(cols)
    for parts in by_root.values():
        for v in sub.vectors():
            img = v
            for cols in parts:
                img ^= act.apply_cols(cols, v)
            if sub.reduce(img):
                return False
    return True


__all__ = [
    "MAX_WEDGE_DIM",
    "Chain",
    "GeneratedModule",
    "GraphIso",
    "NucleusResult",
    "WeylModule",
    "chain",
    "dimension_report",
    "generate_lattice",
    "grassmann_module",
    "group_stability",
    "hyperplane_quotient_action",
    "kernel_as_module",
    "lowering_suite",
    "nucleus",
    "parallel_spin_iso",
    "perfect_report",
    "quotient_certificate",
    "sigma_suite",
    "snf_profile",
    "splitting_decomposition",
    "symplectic_module",
    "nucleus_report",
    "nucleus_iso_report",
    "weyl_action",
    "weyl_generated",
    "weyl_module",
]
