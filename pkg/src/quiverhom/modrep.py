"""Finite-dimensional modules over a bound quiver algebra, as representations.

A right ``A``-module is a representation of the quiver of ``A``: arrow ``a``
acts by a matrix from the space at ``s(a)`` to the space at ``t(a)``.  A left
``A``-module is stored as a right module over ``A.opposite`` (same arrow
names, reversed arrows), so all the constructions below are written once for
right modules over the *acting* algebra ``M.ring``.
"""

from __future__ import annotations

import enum
import itertools
from dataclasses import dataclass
from functools import lru_cache
from typing import Iterable, Sequence

from .algebra import BoundQuiverAlgebra, Path
from .exactla import (
    FieldSpec,
    Matrix,
    block_diag,
    column_space,
    cokernel_section,
    free_columns,
    hstack,
    kernel_basis,
    rank,
    solve,
    vstack,
)


class Side(str, enum.Enum):
    RIGHT = "right"
    LEFT = "left"

    @property
    def other(self) -> "Side":
        return Side.LEFT if self is Side.RIGHT else Side.RIGHT


class ModuleError(ValueError):
    """Invalid module data or mismatched modules."""


def acting_algebra(A: BoundQuiverAlgebra, side: Side) -> BoundQuiverAlgebra:
    return A if Side(side) is Side.RIGHT else A.opposite


@dataclass(frozen=True)
class Module:
    """A module over ``algebra`` on the given ``side``.

    ``action[k]`` is the matrix of the ``k``-th arrow (in declaration order)
    of the acting quiver, mapping the space at its source to the space at its
    target.  For left modules the acting quiver is the opposite quiver.
    """

    algebra: BoundQuiverAlgebra
    side: Side
    dims: tuple[int, ...]
    action: tuple[Matrix, ...]

    def __post_init__(self):
        object.__setattr__(self, "side", Side(self.side))
        object.__setattr__(self, "dims", tuple(int(d) for d in self.dims))
        B = self.ring
        q = B.quiver
        if len(self.dims) != len(q.vertices) or any(d < 0 for d in self.dims):
            raise ModuleError(f"bad dimension vector {list(self.dims)}")
        if len(self.action) != len(q.arrows):
            raise ModuleError("need one action matrix per arrow")
        vi = q.vertex_index
        for arr, mat in zip(q.arrows, self.action):
            want = (self.dims[vi[arr.target]], self.dims[vi[arr.source]])
            if mat.shape != want:
                raise ModuleError(f"arrow {arr.name}: matrix shape {mat.shape}, expected {want}")
            if mat.field != B.field:
                raise ModuleError("action matrix over the wrong field")
        for p in B.relation_paths:
            if not self.path_action(p).is_zero():
                raise ModuleError(f"relation {p} does not act as zero")

    @property
    def ring(self) -> BoundQuiverAlgebra:
        """The algebra this module is a right module over."""
        return acting_algebra(self.algebra, self.side)

    @property
    def field(self) -> FieldSpec:
        return self.algebra.field

    @property
    def dimension(self) -> int:
        return sum(self.dims)

    def is_zero(self) -> bool:
        return self.dimension == 0

    def dim_at(self, v: str) -> int:
        return self.dims[self.ring.quiver.vertex_index[v]]

    def arrow_action(self, name: str) -> Matrix:
        return self.action[self.ring.quiver.arrow_index[name]]

    def path_action(self, p: Path) -> Matrix:
        """Matrix of ``m -> m * p`` from the space at ``p.source`` to ``p.target``."""
        vi = self.ring.quiver.vertex_index
        out = Matrix.identity(self.field, self.dims[vi[p.source]])
        for name in p.arrows:
            out = self.arrow_action(name) @ out
        return out

    def __repr__(self):
        return f"<{self.side.value} module dims={list(self.dims)}>"


@dataclass(frozen=True)
class ModuleHom:
    """Per-vertex matrices commuting with every arrow action."""

    source: Module
    target: Module
    maps: tuple[Matrix, ...]

    def __post_init__(self):
        M, N = self.source, self.target
        if M.algebra != N.algebra or M.side is not N.side:
            raise ModuleError("homomorphism between modules over different rings or sides")
        if len(self.maps) != len(M.dims):
            raise ModuleError("need one matrix per vertex")
        for i, f in enumerate(self.maps):
            if f.shape != (N.dims[i], M.dims[i]):
                raise ModuleError(f"vertex map {i} has shape {f.shape}, expected {(N.dims[i], M.dims[i])}")
        vi = M.ring.quiver.vertex_index
        for k, arr in enumerate(M.ring.quiver.arrows):
            s, t = vi[arr.source], vi[arr.target]
            if N.action[k] @ self.maps[s] != self.maps[t] @ M.action[k]:
                raise ModuleError(f"maps do not commute with arrow {arr.name}")

    def compose(self, other: "ModuleHom") -> "ModuleHom":
        """``self ∘ other`` (apply ``other`` first)."""
        if other.target != self.source:
            raise ModuleError("cannot compose: codomain/domain mismatch")
        return ModuleHom(other.source, self.target, tuple(f @ g for f, g in zip(self.maps, other.maps)))

    def __add__(self, other: "ModuleHom") -> "ModuleHom":
        return ModuleHom(self.source, self.target, tuple(f + g for f, g in zip(self.maps, other.maps)))

    def scale(self, c) -> "ModuleHom":
        return ModuleHom(self.source, self.target, tuple(f.scale(c) for f in self.maps))

    def is_zero(self) -> bool:
        return all(f.is_zero() for f in self.maps)

    def is_injective(self) -> bool:
        return all(rank(f) == f.cols for f in self.maps)

    def is_surjective(self) -> bool:
        return all(rank(f) == f.rows for f in self.maps)

    def is_isomorphism(self) -> bool:
        return self.is_injective() and self.is_surjective()

    def flat(self) -> list:
        return [x for f in self.maps for x in f.entries]


def identity_hom(M: Module) -> ModuleHom:
    return ModuleHom(M, M, tuple(Matrix.identity(M.field, d) for d in M.dims))


def zero_hom(M: Module, N: Module) -> ModuleHom:
    return ModuleHom(M, N, tuple(Matrix.zeros(M.field, n, m) for m, n in zip(M.dims, N.dims)))


def zero_module(A: BoundQuiverAlgebra, side: Side) -> Module:
    B = acting_algebra(A, side)
    return Module(A, side, (0,) * len(B.vertices), tuple(Matrix.zeros(A.field, 0, 0) for _ in B.quiver.arrows))


def from_matrices(A: BoundQuiverAlgebra, side: Side, dims: Sequence[int], action: dict) -> Module:
    """Build a module from ``{arrow name: rows}``; missing arrows act as zero."""
    B = acting_algebra(A, side)
    q = B.quiver
    vi = q.vertex_index
    unknown = set(action) - set(q.arrow_index)
    if unknown:
        raise ModuleError(f"unknown arrows {sorted(unknown)}")
    mats = []
    for arr in q.arrows:
        shape = (dims[vi[arr.target]], dims[vi[arr.source]])
        rows = action.get(arr.name)
        if rows is None or shape[0] == 0:
            mats.append(Matrix.zeros(A.field, *shape))
        else:
            mats.append(Matrix.from_rows(A.field, rows, shape[1]))
    return Module(A, side, tuple(dims), tuple(mats))


# -- constructors -------------------------------------------------------------


def simple(A: BoundQuiverAlgebra, vertex, side: Side = Side.RIGHT) -> Module:
    B = acting_algebra(A, side)
    v = B.quiver.check_vertex(vertex)
    dims = [0] * len(B.vertices)
    dims[B.quiver.vertex_index[v]] = 1
    return from_matrices(A, side, dims, {})


def _projective_data(B: BoundQuiverAlgebra, v: str) -> tuple[list[list[Path]], list[Matrix]]:
    q = B.quiver
    spaces = [B.paths_between(v, w) for w in q.vertices]
    index = [{p: i for i, p in enumerate(sp)} for sp in spaces]
    vi = q.vertex_index
    mats = []
    for arr in q.arrows:
        src, tgt = spaces[vi[arr.source]], index[vi[arr.target]]
        rows = [[0] * len(src) for _ in range(len(spaces[vi[arr.target]]))]
        for j, p in enumerate(src):
            r = Path(p.source, arr.target, p.arrows + (arr.name,))
            if r in tgt:
                rows[tgt[r]][j] = 1
        mats.append(Matrix.from_rows(B.field, rows, len(src)))
    return spaces, mats


def projective(A: BoundQuiverAlgebra, vertex, side: Side = Side.RIGHT) -> Module:
    """``e_v A`` (right) or ``A e_v`` (left); the basis at ``w`` is the paths ``v -> w``.

    For left modules the paths are paths of the opposite algebra, i.e. paths
    of ``A`` ending at ``v`` read backwards.
    """
    B = acting_algebra(A, side)
    v = B.quiver.check_vertex(vertex)
    spaces, mats = _projective_data(B, v)
    return Module(A, side, tuple(len(s) for s in spaces), tuple(mats))


def projective_basis(M_ring: BoundQuiverAlgebra, vertex: str) -> list[list[Path]]:
    """Vertex-wise path bases of the indecomposable projective of ``M_ring`` at ``vertex``."""
    return [M_ring.paths_between(vertex, w) for w in M_ring.quiver.vertices]


def direct_sum(M: Module, N: Module) -> Module:
    if M.algebra != N.algebra or M.side is not N.side:
        raise ModuleError("direct sum of modules over different rings or sides")
    return Module(
        M.algebra, M.side,
        tuple(a + b for a, b in zip(M.dims, N.dims)),
        tuple(block_diag(M.field, [x, y]) for x, y in zip(M.action, N.action)),
    )


def direct_sum_many(A: BoundQuiverAlgebra, side: Side, mods: Sequence[Module]) -> Module:
    out = zero_module(A, side)
    for m in mods:
        out = direct_sum(out, m)
    return out


def submodule(M: Module, spans: Sequence[Matrix]) -> tuple[Module, ModuleHom]:
    """Submodule with the given per-vertex spanning columns (must be arrow-stable)."""
    bases = [column_space(s)[0] for s in spans]
    return _from_basis(M, bases)


def _from_basis(M: Module, bases: Sequence[Matrix]) -> tuple[Module, ModuleHom]:
    # bases: per-vertex matrices with independent columns spanning a stable subspace
    q = M.ring.quiver
    vi = q.vertex_index
    mats = []
    for k, arr in enumerate(q.arrows):
        s, t = vi[arr.source], vi[arr.target]
        x = solve(bases[t], M.action[k] @ bases[s])
        if x is None:
            raise ModuleError(f"subspace is not stable under arrow {arr.name}")
        mats.append(x)
    sub = Module(M.algebra, M.side, tuple(b.cols for b in bases), tuple(mats))
    return sub, ModuleHom(sub, M, tuple(bases))


def _quotient(M: Module, spans: Sequence[Matrix]) -> tuple[Module, ModuleHom]:
    q = M.ring.quiver
    vi = q.vertex_index
    qs = [cokernel_section(s) for s in spans]
    mats = []
    for k, arr in enumerate(q.arrows):
        s, t = vi[arr.source], vi[arr.target]
        mats.append(qs[t][0] @ M.action[k] @ qs[s][1])
    quo = Module(M.algebra, M.side, tuple(p.rows for p, _ in qs), tuple(mats))
    return quo, ModuleHom(M, quo, tuple(p for p, _ in qs))


def kernel(f: ModuleHom) -> tuple[Module, ModuleHom]:
    return _from_basis(f.source, [kernel_basis(m) for m in f.maps])


def image(f: ModuleHom) -> tuple[Module, ModuleHom]:
    return _from_basis(f.target, [column_space(m)[0] for m in f.maps])


def cokernel(f: ModuleHom) -> tuple[Module, ModuleHom]:
    return _quotient(f.target, list(f.maps))


def quotient(M: Module, inclusion: ModuleHom) -> tuple[Module, ModuleHom]:
    return cokernel(inclusion)


def cyclic_quotient(A: BoundQuiverAlgebra, vertex, side: Side = Side.RIGHT, kill: Iterable = ()) -> Module:
    """The projective at ``vertex`` modulo the submodule generated by ``kill``.

    Kill paths are lists of arrow names of ``A``: for right modules they must
    start at ``vertex``, for left modules they must end there.
    """
    side = Side(side)
    B = acting_algebra(A, side)
    v = B.quiver.check_vertex(vertex)
    P = projective(A, v, side)
    gens = []
    for k in kill:
        if isinstance(k, Path):
            p = k
        else:
            k = tuple(k)
            p = A.quiver.path(k, vertex=v)
        if side is Side.LEFT:
            p = p.reversed()
        if p not in B.basis_index:
            raise ModuleError(f"kill path {p} is not a basis path")
        if p.source != v:
            raise ModuleError(f"kill path {p} is not anchored at vertex {v}")
        gens.append(p)
    spaces = projective_basis(B, v)
    # monomial algebra: the submodule generated by the gens is spanned by the
    # basis paths having some generator as a prefix
    spans = []
    for sp in spaces:
        cols = [[1 if i == j else 0 for i in range(len(sp))]
                for j, p in enumerate(sp) if any(p.arrows[:len(g.arrows)] == g.arrows for g in gens)]
        spans.append(Matrix.from_columns(A.field, cols, len(sp)) if cols else Matrix.zeros(A.field, len(sp), 0))
    return _quotient(P, spans)[0]


# -- radical layers -----------------------------------------------------------


def radical(M: Module) -> tuple[Module, ModuleHom]:
    q = M.ring.quiver
    vi = q.vertex_index
    spans = []
    for w in q.vertices:
        blocks = [M.action[k] for k, arr in enumerate(q.arrows) if arr.target == w]
        n = M.dims[vi[w]]
        spans.append(_hcat(M.field, n, blocks))
    return submodule(M, spans)


def top(M: Module) -> tuple[Module, ModuleHom]:
    return cokernel(radical(M)[1])


def socle(M: Module) -> tuple[Module, ModuleHom]:
    q = M.ring.quiver
    vi = q.vertex_index
    bases = []
    for w in q.vertices:
        blocks = [M.action[k] for k, arr in enumerate(q.arrows) if arr.source == w]
        n = M.dims[vi[w]]
        stacked = vstack(M.field, n, blocks) if blocks else Matrix.zeros(M.field, 0, n)
        bases.append(kernel_basis(stacked))
    return _from_basis(M, bases)


def _hcat(field: FieldSpec, rows: int, blocks: Sequence[Matrix]) -> Matrix:
    return hstack(field, rows, blocks) if blocks else Matrix.zeros(field, rows, 0)


# -- homomorphisms --------------------------------------------------------------


@dataclass(frozen=True)
class HomSpace:
    """A basis of ``Hom(source, target)`` with cheap coordinates.

    ``basis[k]`` is the kernel vector whose entry at ``free[k]`` is 1 and at
    every other free position 0, so coordinates are read off directly.
    """

    source: Module
    target: Module
    basis: tuple[ModuleHom, ...]
    free: tuple[int, ...]

    def __len__(self):
        return len(self.basis)

    def coordinates(self, f: ModuleHom) -> list:
        flat = f.flat()
        return [flat[c] for c in self.free]

    def combination(self, coeffs: Sequence) -> ModuleHom:
        out = zero_hom(self.source, self.target)
        for c, h in zip(coeffs, self.basis):
            if c != 0:
                out = out + h.scale(c)
        return out


@lru_cache(maxsize=8192)
def hom_space(M: Module, N: Module) -> HomSpace:
    if M.algebra != N.algebra or M.side is not N.side:
        raise ModuleError("Hom between modules over different rings or sides")
    field = M.field
    q = M.ring.quiver
    vi = q.vertex_index
    # unknowns: the entries of every vertex map, row-major, vertex after vertex
    offsets = list(itertools.accumulate((m * n for m, n in zip(M.dims, N.dims)), initial=0))
    nvars = offsets[-1]
    eqs = []
    for k, arr in enumerate(q.arrows):
        s, t = vi[arr.source], vi[arr.target]
        Na, Ma = N.action[k], M.action[k]
        ms, nt, mt, ns = M.dims[s], N.dims[t], M.dims[t], N.dims[s]
        # (N_a f_s - f_t M_a)[i][j] = 0
        for i in range(nt):
            for j in range(ms):
                row = [0] * nvars
                for l in range(ns):
                    c = Na[i, l]
                    if c != 0:
                        row[offsets[s] + l * ms + j] += c
                for l in range(mt):
                    c = Ma[l, j]
                    if c != 0:
                        row[offsets[t] + i * mt + l] -= c
                eqs.append(row)
    C = Matrix.from_rows(field, eqs, nvars) if eqs else Matrix.zeros(field, 0, nvars)
    K = kernel_basis(C)
    free = tuple(free_columns(C))
    homs = []
    for c in range(K.cols):
        v = K.col(c)
        maps = tuple(
            Matrix(field, N.dims[i], M.dims[i], tuple(v[offsets[i]:offsets[i + 1]]))
            for i in range(len(M.dims))
        )
        homs.append(ModuleHom(M, N, maps))
    return HomSpace(M, N, tuple(homs), free)


def hom_basis(M: Module, N: Module) -> list[ModuleHom]:
    return list(hom_space(M, N).basis)


# -- projective covers ------------------------------------------------------------


def projective_cover(M: Module) -> tuple[Module, ModuleHom]:
    """Minimal projective cover; summands ordered by vertex, then by lifted top vector."""
    B = M.ring
    q = B.quiver
    vi = q.vertex_index
    rad_incl = radical(M)[1]
    summands: list[Module] = []
    blocks_per_vertex: list[list[Matrix]] = [[] for _ in q.vertices]
    for v in q.vertices:
        i = vi[v]
        _, sec = cokernel_section(rad_incl.maps[i])
        if sec.cols == 0:
            continue
        spaces = projective_basis(B, v)
        for c in range(sec.cols):
            m = Matrix(M.field, sec.rows, 1, tuple(sec.col(c)))
            summands.append(projective(M.algebra, v, M.side))
            for w_idx, paths in enumerate(spaces):
                cols = [(M.path_action(p) @ m).col(0) for p in paths]
                n = M.dims[w_idx]
                blocks_per_vertex[w_idx].append(
                    Matrix.from_columns(M.field, cols, n) if cols else Matrix.zeros(M.field, n, 0)
                )
    P = direct_sum_many(M.algebra, M.side, summands)
    maps = tuple(_hcat(M.field, M.dims[i], blocks_per_vertex[i]) for i in range(len(q.vertices)))
    return P, ModuleHom(P, M, maps)


def is_projective(M: Module) -> bool:
    return projective_cover(M)[0].dims == M.dims


def top_multiplicities(M: Module) -> tuple[int, ...]:
    return top(M)[0].dims


def socle_multiplicities(M: Module) -> tuple[int, ...]:
    return socle(M)[0].dims
