"""Quivers, paths and bound quiver algebras ``KQ/I`` with monomial relations.

Convention: the product ``pq`` of paths means "first traverse ``p``, then
``q``".  With this convention right modules are representations of ``Q``
itself and left modules are representations of the opposite quiver.
"""

from __future__ import annotations

from dataclasses import dataclass, field as dc_field
from functools import cached_property
from typing import Iterable, Optional, Sequence

from .exactla import FieldSpec

DEFAULT_PATH_CAP = 10_000


class QuiverError(ValueError):
    """Malformed quiver, path or relation."""


class NonAdmissibleError(ValueError):
    """Relations do not cut the path algebra down to a finite-dimensional one."""


@dataclass(frozen=True)
class Arrow:
    name: str
    source: str
    target: str


@dataclass(frozen=True)
class Quiver:
    vertices: tuple[str, ...]
    arrows: tuple[Arrow, ...]

    def __post_init__(self):
        object.__setattr__(self, "vertices", tuple(str(v) for v in self.vertices))
        object.__setattr__(
            self, "arrows",
            tuple(a if isinstance(a, Arrow) else Arrow(str(a[0]), str(a[1]), str(a[2])) for a in self.arrows),
        )
        if len(set(self.vertices)) != len(self.vertices):
            raise QuiverError("vertex labels must be unique")
        names = [a.name for a in self.arrows]
        if len(set(names)) != len(names):
            raise QuiverError("arrow names must be unique")
        vs = set(self.vertices)
        for a in self.arrows:
            if a.source not in vs or a.target not in vs:
                raise QuiverError(f"arrow {a.name} has an undeclared endpoint")

    @cached_property
    def vertex_index(self) -> dict[str, int]:
        return {v: i for i, v in enumerate(self.vertices)}

    @cached_property
    def arrow_index(self) -> dict[str, int]:
        return {a.name: i for i, a in enumerate(self.arrows)}

    def arrow(self, name: str) -> Arrow:
        try:
            return self.arrows[self.arrow_index[name]]
        except KeyError:
            raise QuiverError(f"unknown arrow {name!r}") from None

    def check_vertex(self, v) -> str:
        v = str(v)
        if v not in self.vertex_index:
            raise QuiverError(f"unknown vertex {v!r}")
        return v

    def opposite(self) -> "Quiver":
        return Quiver(self.vertices, tuple(Arrow(a.name, a.target, a.source) for a in self.arrows))

    def path(self, arrows: Sequence[str], vertex: Optional[str] = None) -> "Path":
        """Build a path from arrow names; ``vertex`` is required for a trivial path."""
        arrows = tuple(arrows)
        if not arrows:
            if vertex is None:
                raise QuiverError("a trivial path needs a vertex")
            v = self.check_vertex(vertex)
            return Path(v, v, ())
        first, last = self.arrow(arrows[0]), self.arrow(arrows[-1])
        for x, y in zip(arrows, arrows[1:]):
            if self.arrow(x).target != self.arrow(y).source:
                raise QuiverError(f"arrows {x} and {y} do not compose")
        return Path(first.source, last.target, arrows)


@dataclass(frozen=True, order=True)
class Path:
    source: str
    target: str
    arrows: tuple[str, ...] = ()

    def __len__(self):
        return len(self.arrows)

    def reversed(self) -> "Path":
        return Path(self.target, self.source, self.arrows[::-1])

    def contains(self, sub: "Path") -> bool:
        n, k = len(self.arrows), len(sub.arrows)
        return any(self.arrows[i:i + k] == sub.arrows for i in range(n - k + 1))

    def __str__(self):
        return "*".join(self.arrows) if self.arrows else f"e{self.source}"


@dataclass(frozen=True)
class RelationSet:
    radical_power: Optional[int] = None
    monomials: tuple[tuple[str, ...], ...] = ()

    def __post_init__(self):
        object.__setattr__(self, "monomials", tuple(tuple(m) for m in self.monomials))
        if self.radical_power is not None and self.radical_power < 2:
            raise NonAdmissibleError("admissibility requires radical_power >= 2")
        for m in self.monomials:
            if len(m) < 2:
                raise NonAdmissibleError(f"monomial relation {list(m)} has length < 2")

    def reversed(self) -> "RelationSet":
        return RelationSet(self.radical_power, tuple(m[::-1] for m in self.monomials))


@dataclass(frozen=True)
class BoundQuiverAlgebra:
    field: FieldSpec
    quiver: Quiver
    relations: RelationSet
    basis: tuple[Path, ...] = dc_field(compare=False, repr=False)

    @property
    def dimension(self) -> int:
        return len(self.basis)

    @property
    def vertices(self) -> tuple[str, ...]:
        return self.quiver.vertices

    @cached_property
    def basis_index(self) -> dict[Path, int]:
        return {p: i for i, p in enumerate(self.basis)}

    @cached_property
    def relation_paths(self) -> tuple[Path, ...]:
        """Paths whose image in the algebra is zero and that generate ``I``.

        These are the monomials plus every path of length ``radical_power``;
        a module satisfies the relations iff all of them act as zero.
        """
        out = {self.quiver.path(m) for m in self.relations.monomials}
        n = self.relations.radical_power
        if n is not None:
            layer = [Path(v, v, ()) for v in self.vertices]
            for _ in range(n):
                layer = [Path(p.source, a.target, p.arrows + (a.name,))
                         for p in layer for a in self.quiver.arrows if a.source == p.target]
            out.update(layer)
        return tuple(sorted(out, key=_path_key(self.quiver)))

    def paths_between(self, source: str, target: str) -> list[Path]:
        return [p for p in self.basis if p.source == source and p.target == target]

    def paths_from(self, source: str) -> list[Path]:
        return [p for p in self.basis if p.source == source]

    def check_path(self, p: Path) -> Path:
        if p not in self.basis_index:
            raise QuiverError(f"{p} is not a basis path")
        return p

    def multiply(self, p: Path, q: Path) -> Optional[Path]:
        return multiply(self, p, q)

    @cached_property
    def opposite(self) -> "BoundQuiverAlgebra":
        op = build_algebra(self.field, self.quiver.opposite(), self.relations.reversed())
        op.__dict__["opposite"] = self
        return op

    def is_commutative(self) -> bool:
        """Brute-force commutativity check on basis paths."""
        return all(multiply(self, p, q) == multiply(self, q, p) for p in self.basis for q in self.basis)

    def dims_between(self) -> dict[tuple[str, str], int]:
        out: dict[tuple[str, str], int] = {}
        for p in self.basis:
            out[(p.source, p.target)] = out.get((p.source, p.target), 0) + 1
        return out


def _path_key(quiver: Quiver):
    vi = quiver.vertex_index
    return lambda p: (len(p.arrows), vi[p.source], p.arrows)


def build_algebra(
    field: FieldSpec,
    quiver: Quiver,
    relations: RelationSet,
    cap: int = DEFAULT_PATH_CAP,
) -> BoundQuiverAlgebra:
    """Enumerate the surviving paths of ``KQ/I`` (breadth first, by length)."""
    monos = [quiver.path(m) for m in relations.monomials]
    bound = relations.radical_power
    layer = [Path(v, v, ()) for v in quiver.vertices]
    basis = list(layer)
    length = 0
    while layer:
        length += 1
        if bound is not None and length >= bound:
            break
        nxt = []
        for p in layer:
            for a in quiver.arrows:
                if a.source != p.target:
                    continue
                q = Path(p.source, a.target, p.arrows + (a.name,))
                # only suffixes can be new occurrences of a monomial
                if any(q.arrows[-len(m.arrows):] == m.arrows for m in monos if len(m.arrows) <= len(q.arrows)):
                    continue
                nxt.append(q)
        basis.extend(nxt)
        if len(basis) > cap:
            raise NonAdmissibleError(f"path enumeration exceeded the cap of {cap} basis paths")
        layer = nxt
    basis.sort(key=_path_key(quiver))
    return BoundQuiverAlgebra(field, quiver, relations, tuple(basis))


def multiply(A: BoundQuiverAlgebra, p: Path, q: Path) -> Optional[Path]:
    """``p`` then ``q``; ``None`` stands for zero."""
    A.check_path(p)
    A.check_path(q)
    if p.target != q.source:
        return None
    r = Path(p.source, q.target, p.arrows + q.arrows)
    return r if r in A.basis_index else None


def opposite(A: BoundQuiverAlgebra) -> BoundQuiverAlgebra:
    return A.opposite


def make_algebra(
    vertices: Iterable,
    arrows: Iterable[tuple],
    radical_power: Optional[int] = None,
    monomials: Iterable[Sequence[str]] = (),
    field: FieldSpec = FieldSpec(),
    cap: int = DEFAULT_PATH_CAP,
) -> BoundQuiverAlgebra:
    """Convenience wrapper: ``make_algebra([1, 2], [("a", 1, 2)], radical_power=2)``."""
    q = Quiver(tuple(vertices), tuple(arrows))
    return build_algebra(field, q, RelationSet(radical_power, tuple(tuple(m) for m in monomials)), cap)
