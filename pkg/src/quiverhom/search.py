"""Candidate enumeration and counterexample hunts.

The candidate grammar is deliberately small: simples, indecomposable
projectives, cyclic quotients of projectives by sets of arrows, radical
layers of projectives, and first and second syzygies of all of those.
"""

from __future__ import annotations

import itertools
from dataclasses import dataclass
from typing import Iterator

from .algebra import BoundQuiverAlgebra
from .homalg import ExtReport, ext_module, syzygy, verdicts
from .modrep import (
    Module,
    Side,
    acting_algebra,
    cokernel,
    cyclic_quotient,
    hom_space,
    projective,
    radical,
    simple,
    socle,
    top,
)


@dataclass(frozen=True)
class CandidateSet:
    algebra: BoundQuiverAlgebra
    side: Side
    candidates: tuple[Module, ...]
    provenance: tuple[str, ...]

    def __len__(self):
        return len(self.candidates)

    def __iter__(self):
        return iter(zip(self.candidates, self.provenance))

    def recipe_of(self, M: Module) -> str:
        return self.provenance[self.candidates.index(M)]


@dataclass(frozen=True)
class Witness:
    module: Module
    recipe: str
    ext2: ExtReport
    verdicts: dict

    def to_json(self) -> dict:
        return {
            "recipe": self.recipe,
            "side": self.module.side.value,
            "dims": list(self.module.dims),
            "ext2": self.ext2.to_json(),
            "verdicts": dict(self.verdicts),
        }


def fingerprint(M: Module) -> tuple:
    """Cheap dedup key: dims plus per-vertex hom counts to and from the simples.

    Not an isomorphism invariant strong enough to separate all modules.
    """
    simples = [simple(M.algebra, v, M.side) for v in M.ring.vertices]
    return (
        M.dims,
        tuple(len(hom_space(M, S)) for S in simples),
        tuple(len(hom_space(S, M)) for S in simples),
    )


def _kill_label(arrows: tuple[str, ...]) -> str:
    return "[" + ",".join(arrows) + "]"


def _base_candidates(A: BoundQuiverAlgebra, side: Side) -> Iterator[tuple[Module, str]]:
    B = acting_algebra(A, side)
    verts = B.vertices
    for v in verts:
        yield simple(A, v, side), f"simple {v}"
    for v in verts:
        yield projective(A, v, side), f"projective {v}"
    for v in verts:
        # length-1 paths out of v in the acting quiver, named as arrows of A
        arrows = [arr.name for arr in B.quiver.arrows if arr.source == v]
        for size in range(1, len(arrows) + 1):
            for kill in itertools.combinations(arrows, size):
                yield (cyclic_quotient(A, v, side, [[a] for a in kill]),
                       f"cyclic_quotient {v} kill {_kill_label(kill)}")
    for v in verts:
        P = projective(A, v, side)
        yield radical(P)[0], f"radical(projective {v})"
        yield top(P)[0], f"top(projective {v})"
        yield cokernel(socle(P)[1])[0], f"socle_quotient(projective {v})"


def enumerate_candidates(A: BoundQuiverAlgebra, side: Side = Side.RIGHT, budget: int = 100) -> CandidateSet:
    """Deduplicated, deterministic candidate stream truncated at ``budget``."""
    side = Side(side)
    if budget < 0:
        raise ValueError("budget must be non-negative")
    mods: list[Module] = []
    recipes: list[str] = []
    seen: set = set()

    def offer(M: Module, recipe: str) -> bool:
        if len(mods) >= budget:
            return False
        if M.is_zero():
            return True
        key = fingerprint(M)
        if key not in seen:
            seen.add(key)
            mods.append(M)
            recipes.append(recipe)
        return True

    base = list(_base_candidates(A, side))
    for M, r in base:
        if not offer(M, r):
            break
    for k in (1, 2):
        for M, r in base:
            if not offer(syzygy(M, k), f"syzygy{k}({r})"):
                break
    return CandidateSet(A, side, tuple(mods), tuple(recipes))


def _witness(M: Module, recipe: str) -> Witness:
    return Witness(M, recipe, ext_module(M, 2), verdicts(M))


def hunt_ext2_projective(cands: CandidateSet) -> list[Witness]:
    """Candidates ``M`` with ``Ext^2(M, R)`` nonzero and projective, in input order."""
    out = []
    for M, recipe in cands:
        e = ext_module(M, 2)
        if not e.is_zero and e.is_projective:
            out.append(_witness(M, recipe))
    return out


def hunt_2reflexive_not_reflexive(cands: CandidateSet) -> list[Witness]:
    """Candidates that are 2-reflexive (torsionless criterion) but not reflexive."""
    out = []
    for M, recipe in cands:
        w = _witness(M, recipe)
        if w.verdicts["two_reflexive"] is True and not w.verdicts["reflexive"]:
            out.append(w)
    return out


HUNT_MODES = {
    "ext2proj": hunt_ext2_projective,
    "2refl-not-refl": hunt_2reflexive_not_reflexive,
}
