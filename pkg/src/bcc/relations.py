"""Defining relations of the algebra and the path normal form modulo them.

The ideal of relations is never built. Because every arrow is the first arrow
of exactly one special cycle, a path survives in the quotient iff it keeps
following that cycle, and it is then a proper prefix of ``C^mu``, equal to
``C^mu`` (the socle element of its polygon), or zero when longer.
"""

from __future__ import annotations

from dataclasses import dataclass

from .quiver import Quiver, SpecialCycle, special_cycles

__all__ = [
    "Idempotent",
    "Path",
    "PrefixBasis",
    "Relation",
    "Socle",
    "ZERO",
    "Zero",
    "format_path",
    "normal_form",
    "relations_text",
    "relations_type_one",
    "relations_type_three",
    "relations_type_two",
]


@dataclass(frozen=True)
class Idempotent:
    vertex: str


@dataclass(frozen=True)
class PrefixBasis:
    """Nonempty proper prefix of ``C^mu``; ``first`` is an arrow id."""

    first: int
    length: int


@dataclass(frozen=True)
class Socle:
    polygon: str


@dataclass(frozen=True)
class Zero:
    pass


ZERO = Zero()


@dataclass(frozen=True)
class Path:
    """Composable arrow sequence; ``vertex`` anchors the empty path."""

    arrows: tuple[int, ...]
    vertex: str | None = None

    def __len__(self) -> int:
        return len(self.arrows)

    @classmethod
    def of(cls, q: Quiver, arrows) -> "Path":
        arrows = tuple(arrows)
        for a, b in zip(arrows, arrows[1:]):
            if q.arrows[a].target != q.arrows[b].source:
                raise ValueError(f"arrows {q.label(a)} and {q.label(b)} do not compose")
        return cls(arrows, q.arrows[arrows[0]].source if arrows else None)

    @classmethod
    def empty(cls, vertex: str) -> "Path":
        return cls((), vertex)


def format_path(q: Quiver, p: Path | tuple[int, ...]) -> str:
    arrows = p.arrows if isinstance(p, Path) else p
    if not arrows:
        return f"e_{p.vertex}" if isinstance(p, Path) else "e"
    return "·".join(q.label(a) for a in arrows)


def normal_form(q: Quiver, p: Path) -> Idempotent | PrefixBasis | Socle | Zero:
    if not p.arrows:
        if p.vertex is None:
            raise ValueError("empty path needs an anchor vertex")
        return Idempotent(p.vertex)
    arrows = p.arrows
    for a, b in zip(arrows, arrows[1:]):
        if q.arrows[a].target != q.arrows[b].source:
            raise ValueError(f"arrows {q.label(a)} and {q.label(b)} do not compose")
    for a, b in zip(arrows, arrows[1:]):
        if q.succ[a] != b:
            return ZERO
    top = q.socle_length(q.owner[arrows[0]])
    if len(arrows) < top:
        return PrefixBasis(arrows[0], len(arrows))
    if len(arrows) == top:
        return Socle(q.arrows[arrows[0]].source)
    return ZERO


@dataclass(frozen=True)
class Relation:
    kind: int  # 1, 2 or 3
    paths: tuple[tuple[int, ...], ...]

    def text(self, q: Quiver) -> str:
        if self.kind == 1:
            return f"type1: {format_path(q, self.paths[0])} - {format_path(q, self.paths[1])}"
        if self.kind == 2:
            return f"type2: {format_path(q, self.paths[0])}"
        return f"type3: {q.label(self.paths[0][0])}·{q.label(self.paths[0][1])}"


def _cycles_at(q: Quiver, polygon: str) -> list[SpecialCycle]:
    return [c for alpha in q.nontruncated for c in special_cycles(q, alpha) if c.start_polygon(q) == polygon]


def relations_type_one(q: Quiver) -> list[Relation]:
    out = []
    for v in q.vertices:
        cycles = _cycles_at(q, v)
        for i, c in enumerate(cycles):
            for d in cycles[i + 1 :]:
                p = c.arrows(q, q.mu(c.owner))
                r = d.arrows(q, q.mu(d.owner))
                out.append(Relation(1, (p, r)))
    return out


def relations_type_two(q: Quiver) -> list[Relation]:
    out = []
    for alpha in q.nontruncated:
        for c in special_cycles(q, alpha):
            first = c.first_arrow(q)
            out.append(Relation(2, (q.walk(first, q.socle_length(alpha) + 1),)))
    return out


def relations_type_three(q: Quiver) -> list[tuple[int, int]]:
    """Composable arrow pairs ``(a, b)`` where ``b`` is not the cyclic successor of ``a``."""
    out = []
    for a, arrow in enumerate(q.arrows):
        for b, other in enumerate(q.arrows):
            if arrow.target == other.source and q.succ[a] != b:
                out.append((a, b))
    return out


def relations_text(q: Quiver) -> str:
    rels = relations_type_one(q) + relations_type_two(q)
    rels += [Relation(3, (pair,)) for pair in relations_type_three(q)]
    return "\n".join(r.text(q) for r in rels) + ("\n" if rels else "")
