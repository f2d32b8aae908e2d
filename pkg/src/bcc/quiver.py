"""The quiver induced by a Brauer configuration and its cycle families."""

from __future__ import annotations

from dataclasses import dataclass
from functools import cached_property

from .configuration import BrauerConfig, VertexClassification, classify_vertices, validate

__all__ = [
    "Arrow",
    "MixedCycle",
    "NonSpecialCycle",
    "Quiver",
    "SpecialCycle",
    "build_quiver",
    "count_loops",
    "first_arrow_map",
    "mixed_cycles",
    "non_special_cycles",
    "special_cycles",
    "special_cycles_at",
    "to_dot",
]


@dataclass(frozen=True)
class Arrow:
    vertex: str  # configuration vertex owning the arrow
    index: int  # 1-based position in the successor sequence of ``vertex``
    source: str  # polygon
    target: str

    @property
    def label(self) -> str:
        return f"a^({self.vertex})_{self.index}"

    @property
    def is_loop(self) -> bool:
        return self.source == self.target


class Quiver:
    """Quiver with one vertex per polygon and one arrow per successor relation.

    Arrows are referred to by integer ids (positions in :attr:`arrows`),
    ordered by owning vertex and then by position in its successor sequence.
    """

    def __init__(self, cfg: BrauerConfig):
        self.config = cfg
        self.classes: VertexClassification = classify_vertices(cfg)
        self.vertices: tuple[str, ...] = cfg.polygon_names
        self.vertex_index = {v: i for i, v in enumerate(self.vertices)}

        arrows: list[Arrow] = []
        self.cycle: dict[str, tuple[int, ...]] = {}
        for alpha in cfg.vertices:
            if alpha in self.classes.truncated:
                continue
            seq = cfg.orders[alpha]
            ids = []
            for i, src in enumerate(seq):
                ids.append(len(arrows))
                arrows.append(Arrow(alpha, i + 1, src, seq[(i + 1) % len(seq)]))
            self.cycle[alpha] = tuple(ids)
        self.arrows: tuple[Arrow, ...] = tuple(arrows)
        self.arrow_id = {(a.vertex, a.index): k for k, a in enumerate(arrows)}

        self.owner = [a.vertex for a in arrows]
        self.position = [a.index - 1 for a in arrows]
        self.succ = [0] * len(arrows)
        for ids in self.cycle.values():
            for j, k in enumerate(ids):
                self.succ[k] = ids[(j + 1) % len(ids)]

    def val(self, alpha: str) -> int:
        return len(self.config.orders[alpha]) if alpha in self.config.orders else 0

    def mu(self, alpha: str) -> int:
        return self.config.mu(alpha)

    def socle_length(self, alpha: str) -> int:
        """Length of ``C^mu(alpha)`` for any special alpha-cycle ``C``."""
        return self.mu(alpha) * self.val(alpha)

    def walk(self, first: int, length: int) -> tuple[int, ...]:
        """The path of ``length`` arrows following the special cycle from arrow ``first``."""
        out, a = [], first
        for _ in range(length):
            out.append(a)
            a = self.succ[a]
        return tuple(out)

    @cached_property
    def nontruncated(self) -> tuple[str, ...]:
        return tuple(self.cycle)

    def label(self, arrow: int) -> str:
        return self.arrows[arrow].label


def build_quiver(cfg: BrauerConfig) -> Quiver:
    report = validate(cfg)
    if not report.ok:
        raise ValueError("invalid configuration: " + "; ".join(v.message for v in report.violations))
    return Quiver(cfg)


@dataclass(frozen=True)
class SpecialCycle:
    """The special ``owner``-cycle whose first arrow is ``a^(owner)_start``."""

    owner: str
    start: int  # 1-based

    def first_arrow(self, q: Quiver) -> int:
        return q.arrow_id[(self.owner, self.start)]

    def arrows(self, q: Quiver, power: int = 1) -> tuple[int, ...]:
        return q.walk(self.first_arrow(q), power * q.val(self.owner))

    def start_polygon(self, q: Quiver) -> str:
        return q.arrows[self.first_arrow(q)].source


def special_cycles(q: Quiver, alpha: str) -> list[SpecialCycle]:
    if alpha not in q.cycle:
        raise ValueError(f"vertex {alpha} is truncated or unknown; it has no special cycles")
    return [SpecialCycle(alpha, i + 1) for i in range(q.val(alpha))]


def special_cycles_at(q: Quiver, alpha: str, polygon: str) -> list[SpecialCycle]:
    return [c for c in special_cycles(q, alpha) if c.start_polygon(q) == polygon]


def first_arrow_map(q: Quiver) -> dict[SpecialCycle, int]:
    mapping = {c: c.first_arrow(q) for alpha in q.nontruncated for c in special_cycles(q, alpha)}
    images = set(mapping.values())
    assert len(images) == len(mapping), "first-arrow map is not injective"
    assert images == set(range(len(q.arrows))), "first-arrow map is not surjective"
    return mapping


@dataclass(frozen=True)
class NonSpecialCycle:
    owner: str
    polygon: str
    index: int  # 1-based, l in 1..occ
    arrows: tuple[int, ...]


def _visits(q: Quiver, alpha: str, polygon: str) -> list[int]:
    """0-based positions of ``polygon`` in the canonical successor sequence of ``alpha``."""
    return [i for i, p in enumerate(q.config.orders[alpha]) if p == polygon]


def non_special_cycles(q: Quiver, alpha: str, polygon: str) -> list[NonSpecialCycle]:
    """Arrow runs between consecutive visits of the alpha-cycle to ``polygon``.

    Empty when ``alpha`` occurs only once in ``polygon``.
    """
    if alpha not in q.cycle:
        raise ValueError(f"vertex {alpha} is truncated or unknown")
    if q.config.polygon(polygon).occ(alpha) == 0:
        raise ValueError(f"vertex {alpha} does not occur in polygon {polygon}")
    visits = _visits(q, alpha, polygon)
    if len(visits) < 2:
        return []
    n = q.val(alpha)
    ids = q.cycle[alpha]
    out = []
    for l, p in enumerate(visits):
        nxt = visits[(l + 1) % len(visits)]
        run = (nxt - p) % n
        out.append(NonSpecialCycle(alpha, polygon, l + 1, q.walk(ids[p], run)))
    return out


def nonspecial_special_cycle(q: Quiver, alpha: str, polygon: str, l: int) -> SpecialCycle:
    """The special cycle ``C^(alpha,v)_l`` starting at the l-th visit (1-based, cyclic)."""
    visits = _visits(q, alpha, polygon)
    return SpecialCycle(alpha, visits[(l - 1) % len(visits)] + 1)


@dataclass(frozen=True)
class MixedCycle:
    """Central mixed cycle attached to a loop ``q^(alpha,v)_s``.

    As a path it is the prefix of length ``mu*val - 1`` of the special cycle
    starting right after the loop.
    """

    owner: str
    polygon: str
    index: int  # s
    loop: int  # arrow id of the loop q_s
    arrows: tuple[int, ...]


def mixed_cycles(q: Quiver) -> list[MixedCycle]:
    out = []
    for k, arrow in enumerate(q.arrows):
        alpha = arrow.vertex
        if not arrow.is_loop or q.val(alpha) < 2:
            continue
        visits = _visits(q, alpha, arrow.source)
        s = visits.index(arrow.index - 1) + 1
        path = q.walk(q.succ[k], q.socle_length(alpha) - 1)
        out.append(MixedCycle(alpha, arrow.source, s, k, path))
    return out


def count_loops(q: Quiver) -> int:
    return sum(1 for a in q.arrows if a.is_loop)


def to_dot(q: Quiver) -> str:
    lines = ["digraph Q {"]
    for v in q.vertices:
        lines.append(f'  "{v}";')
    for a in q.arrows:
        lines.append(f'  "{a.source}" -> "{a.target}" [label="{a.label}"];')
    lines.append("}")
    return "\n".join(lines) + "\n"
