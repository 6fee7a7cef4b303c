"""Duals, minimal resolutions, transposes, Ext-modules and reflexivity tests.

Everything is computed on the acting algebra ``B = M.ring``; the dual of a
right ``B``-module is a right module over ``B.opposite`` (a left
``B``-module), with the space at vertex ``j`` equal to ``Hom(M, e_j B)``.
"""

from __future__ import annotations

from dataclasses import dataclass
from functools import lru_cache
from typing import Optional, Union

from .algebra import BoundQuiverAlgebra, Path
from .exactla import Matrix, rank, solve
from .modrep import (
    Module,
    ModuleHom,
    Side,
    acting_algebra,
    cokernel,
    hom_space,
    is_projective,
    kernel,
    projective,
    projective_cover,
    radical,
)

DEGREE_CAP = 16
CRITERION_INAPPLICABLE = "criterion-inapplicable"


class InternalConsistencyError(RuntimeError):
    """Two independent criteria disagreed; this signals a bug in the engine."""


# -- duality ------------------------------------------------------------------


@lru_cache(maxsize=None)
def left_multiplication(A: BoundQuiverAlgebra, side: Side, arrow: str) -> ModuleHom:
    """``p -> a p`` as a map from the projective at ``t(a)`` to the one at ``s(a)``.

    Arrows are those of the acting algebra of ``side``.
    """
    B = acting_algebra(A, side)
    arr = B.quiver.arrow(arrow)
    src = projective(A, arr.target, side)
    tgt = projective(A, arr.source, side)
    maps = []
    for w in B.quiver.vertices:
        from_paths = B.paths_between(arr.target, w)
        to_paths = {p: i for i, p in enumerate(B.paths_between(arr.source, w))}
        rows = [[0] * len(from_paths) for _ in to_paths]
        for j, p in enumerate(from_paths):
            r = Path(arr.source, w, (arrow,) + p.arrows)
            if r in to_paths:
                rows[to_paths[r]][j] = 1
        maps.append(Matrix.from_rows(A.field, rows, len(from_paths)))
    return ModuleHom(src, tgt, tuple(maps))


@lru_cache(maxsize=4096)
def dual(M: Module) -> Module:
    """``Hom(M, R)`` as a module over the other side."""
    A, B = M.algebra, M.ring
    q = B.quiver
    vi = q.vertex_index
    spaces = [hom_space(M, projective(A, v, M.side)) for v in q.vertices]
    action = []
    for arr in q.arrows:
        lam = left_multiplication(A, M.side, arr.name)
        src, tgt = spaces[vi[arr.target]], spaces[vi[arr.source]]
        cols = [tgt.coordinates(lam.compose(phi)) for phi in src.basis]
        action.append(_from_cols(M, cols, len(tgt)))
    return Module(A, M.side.other, tuple(len(s) for s in spaces), tuple(action))


def _from_cols(M: Module, cols: list, nrows: int) -> Matrix:
    if not cols:
        return Matrix.zeros(M.field, nrows, 0)
    return Matrix.from_columns(M.field, cols, nrows)


def induced_dual_hom(f: ModuleHom) -> ModuleHom:
    """``Hom(f, R)``: ``dual(target) -> dual(source)``, ``psi -> psi ∘ f``."""
    M, N = f.source, f.target
    maps = []
    for v in M.ring.quiver.vertices:
        P = projective(M.algebra, v, M.side)
        hm, hn = hom_space(M, P), hom_space(N, P)
        maps.append(_from_cols(M, [hm.coordinates(psi.compose(f)) for psi in hn.basis], len(hm)))
    return ModuleHom(dual(N), dual(M), tuple(maps))


# -- resolutions ----------------------------------------------------------------


@dataclass(frozen=True)
class Resolution:
    """Minimal projective resolution ``... -> P_1 -> P_0 -> M -> 0``.

    ``differentials[k - 1]`` is ``d_k : P_k -> P_{k-1}`` and ``syzygies[k]``
    is ``Ω^k M`` with inclusion ``inclusions[k]`` into ``P_{k-1}`` (for k ≥ 1;
    ``inclusions[0]`` is the identity placeholder ``None``).
    """

    module: Module
    terms: tuple[Module, ...]
    differentials: tuple[ModuleHom, ...]
    augmentation: ModuleHom
    syzygies: tuple[Module, ...]
    inclusions: tuple[Optional[ModuleHom], ...]

    @property
    def length(self) -> int:
        return len(self.terms) - 1

    def projective_dimension(self) -> Optional[int]:
        """Projective dimension if ``Ω^{k+1} M = 0`` for some computed ``k``, else ``None``."""
        for k in range(len(self.syzygies) - 1):
            if self.syzygies[k + 1].is_zero():
                return k
        return None

    def is_exact(self) -> bool:
        if not self.augmentation.is_surjective():
            return False
        maps = [self.augmentation, *self.differentials]
        for outer, inner in zip(maps, maps[1:]):
            if not outer.compose(inner).is_zero():
                return False
            # rank bookkeeping: dim ker(outer) == dim im(inner), vertexwise
            for f, g in zip(outer.maps, inner.maps):
                if f.cols - rank(f) != rank(g):
                    return False
        return True

    def is_minimal(self) -> bool:
        for d in self.differentials:
            _, incl = radical(d.target)
            for f, r in zip(d.maps, incl.maps):
                if solve(r, f) is None:
                    return False
        return True


def _check_degree(k: int, name: str) -> None:
    if k < 0:
        raise ValueError(f"{name} must be non-negative")
    if k > DEGREE_CAP:
        raise ValueError(f"{name} {k} exceeds the degree cap {DEGREE_CAP}")


@lru_cache(maxsize=1024)
def min_resolution(M: Module, length: int) -> Resolution:
    """Terms ``P_0 .. P_length``; zero modules once the resolution has stopped."""
    _check_degree(length, "length")
    P0, eps = projective_cover(M)
    terms, diffs = [P0], []
    syz, incls = [M], [None]
    prev = eps
    for _ in range(length + 1):
        K, inc = kernel(prev)
        syz.append(K)
        incls.append(inc)
        if len(terms) > length:
            break
        P, cov = projective_cover(K)
        d = inc.compose(cov)
        terms.append(P)
        diffs.append(d)
        prev = cov
    return Resolution(M, tuple(terms), tuple(diffs), eps, tuple(syz), tuple(incls))


def syzygy(M: Module, k: int) -> Module:
    _check_degree(k, "k")
    if k == 0:
        return M
    return min_resolution(M, k - 1).syzygies[k]


def transpose(M: Module) -> Module:
    """Cokernel of the dual of the minimal presentation ``P_1 -> P_0``."""
    d1 = min_resolution(M, 1).differentials[0]
    return cokernel(induced_dual_hom(d1))[0]


def d_k(M: Module, k: int) -> Module:
    return syzygy(transpose(M), k)


# -- Ext ------------------------------------------------------------------------


@dataclass(frozen=True)
class ExtReport:
    module: Module
    degree: int
    cocycles: int
    coboundaries: int

    @property
    def dims(self) -> tuple[int, ...]:
        return self.module.dims

    @property
    def is_zero(self) -> bool:
        return self.module.is_zero()

    @property
    def is_projective(self) -> bool:
        return is_projective(self.module)

    def to_json(self) -> dict:
        return {
            "degree": self.degree,
            "side": self.module.side.value,
            "dims": list(self.dims),
            "is_zero": self.is_zero,
            "is_projective": self.is_projective,
            "witness": {"cocycles": self.cocycles, "coboundaries": self.coboundaries},
        }


def _factor_through(g: ModuleHom, inc: ModuleHom) -> ModuleHom:
    """The unique ``h`` with ``inc ∘ h == g`` for a monomorphism ``inc``."""
    maps = []
    for gv, iv in zip(g.maps, inc.maps):
        x = solve(iv, gv)
        if x is None:
            raise InternalConsistencyError("map does not factor through the kernel")
        maps.append(x)
    return ModuleHom(g.source, inc.source, tuple(maps))


@lru_cache(maxsize=1024)
def ext_module(M: Module, i: int) -> ExtReport:
    """``Ext^i(M, R)`` as a module over the other side, for ``i >= 1``."""
    if i < 1:
        raise ValueError("ext_module needs degree >= 1")
    _check_degree(i, "degree")
    res = min_resolution(M, i + 1)
    d_next = induced_dual_hom(res.differentials[i])      # P_i* -> P_{i+1}*
    d_prev = induced_dual_hom(res.differentials[i - 1])  # P_{i-1}* -> P_i*
    Z, z_inc = kernel(d_next)
    h = _factor_through(d_prev, z_inc)
    E, _ = cokernel(h)
    boundaries = sum(rank(f) for f in d_prev.maps)
    return ExtReport(E, i, Z.dimension, boundaries)


def ext_dimension(M: Module, N: Module, i: int) -> int:
    """``dim Ext^i(M, N)`` from ranks in the complex ``Hom(P_*, N)``."""
    _check_degree(i, "degree")
    res = min_resolution(M, i + 1)

    def pullback_rank(d: ModuleHom) -> int:
        hs, ht = hom_space(d.source, N), hom_space(d.target, N)
        cols = [hs.coordinates(psi.compose(d)) for psi in ht.basis]
        if not cols or not len(hs):
            return 0
        return rank(Matrix.from_columns(M.field, cols, len(hs)))

    total = len(hom_space(res.terms[i], N))
    total -= pullback_rank(res.differentials[i])
    if i >= 1:
        total -= pullback_rank(res.differentials[i - 1])
    return total


# -- evaluation map and reflexivity ------------------------------------------------


@lru_cache(maxsize=1024)
def evaluation_map(M: Module) -> ModuleHom:
    """``ev_M : M -> M**``, ``m -> (phi -> phi(m))``."""
    A, B = M.algebra, M.ring
    Bop = B.opposite
    q = B.quiver
    D = dual(M)
    DD = dual(D)
    verts = q.vertices
    src_spaces = [hom_space(M, projective(A, v, M.side)) for v in verts]
    ev_maps = []
    for j, vj in enumerate(verts):
        T = projective(A, vj, D.side)
        target_space = hom_space(D, T)
        cols = []
        for k in range(M.dims[j]):
            maps = []
            for i, vi_ in enumerate(verts):
                # phi(m) lies in e_i B e_j; reversed, in e_j B^op e_i
                from_paths = B.paths_between(vi_, vj)
                to_index = {p: r for r, p in enumerate(Bop.paths_between(vj, vi_))}
                rows = [[0] * len(src_spaces[i]) for _ in to_index]
                for l, phi in enumerate(src_spaces[i].basis):
                    col = phi.maps[j].col(k)
                    for r, p in enumerate(from_paths):
                        rows[to_index[p.reversed()]][l] = col[r]
                maps.append(Matrix.from_rows(M.field, rows, len(src_spaces[i])))
            cols.append(target_space.coordinates(ModuleHom(D, T, tuple(maps))))
        ev_maps.append(_from_cols(M, cols, len(target_space)))
    return ModuleHom(M, DD, tuple(ev_maps))


def _ext_vanishes(M: Module, i: int) -> bool:
    return ext_module(transpose(M), i).is_zero


def is_torsionless(M: Module) -> bool:
    """Whether ``M`` embeds in a projective (``ev_M`` injective)."""
    via_ev = evaluation_map(M).is_injective()
    via_ext = _ext_vanishes(M, 1)
    if via_ev != via_ext:
        raise InternalConsistencyError(
            f"{M!r}: ev injective={via_ev} but Ext^1(Tr M, R)=0 is {via_ext}"
        )
    return via_ev


def is_reflexive(M: Module) -> bool:
    via_ev = evaluation_map(M).is_isomorphism()
    via_ext = _ext_vanishes(M, 1) and _ext_vanishes(M, 2)
    if via_ev != via_ext:
        raise InternalConsistencyError(
            f"{M!r}: ev bijective={via_ev} but Ext^1,2(Tr M, R)=0 is {via_ext}"
        )
    return via_ev


def is_two_reflexive(M: Module) -> Union[bool, str]:
    """2-reflexivity for torsionless modules: ``Ext^2(Tr M, R)`` projective.

    Returns :data:`CRITERION_INAPPLICABLE` when ``M`` is not torsionless.
    """
    if not is_torsionless(M):
        return CRITERION_INAPPLICABLE
    return ext_module(transpose(M), 2).is_projective


def verdicts(M: Module) -> dict:
    return {
        "torsionless": is_torsionless(M),
        "reflexive": is_reflexive(M),
        "two_reflexive": is_two_reflexive(M),
    }
