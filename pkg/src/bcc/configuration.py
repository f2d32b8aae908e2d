"""Brauer configurations: data model, file format, validation and random generation.

A configuration is a set of vertices with multiplicities, a collection of
polygons (multisets of vertices) and, for every vertex, a cyclic successor
sequence listing the polygons it occurs in (with repetition).

File format (one declaration per line, ``#`` starts a comment)::

    vertex <name> [mult <k>]
    polygon <name> : <vertex> <vertex> ...
    order <vertex> : <polygon> <polygon> ...
"""

from __future__ import annotations

import random
import re
from collections import Counter
from dataclasses import dataclass, field
from typing import Iterable, Mapping

__all__ = [
    "BrauerConfig",
    "ConfigSyntaxError",
    "GenerationError",
    "Polygon",
    "ValidationReport",
    "VertexClassification",
    "Violation",
    "classify_vertices",
    "generate_random",
    "generate_random_tree",
    "is_brauer_tree",
    "is_connected",
    "is_reduced",
    "natural_key",
    "occ",
    "parse_config",
    "serialize",
    "val",
    "validate",
]

_TOKEN = re.compile(r"^[^\s:#]+$")


class ConfigSyntaxError(ValueError):
    """Malformed configuration text. ``line`` is 1-based, 0 when not tied to a line."""

    def __init__(self, message: str, line: int = 0):
        self.line = line
        super().__init__(f"line {line}: {message}" if line else message)


class GenerationError(RuntimeError):
    pass


def natural_key(name: str) -> tuple:
    """Sort key that orders ``V2`` before ``V10``."""
    parts = re.split(r"(\d+)", name)
    return tuple((0, int(p), "") if p.isdigit() else (1, 0, p) for p in parts if p)


def _canonical_rotation(seq: tuple[str, ...]) -> tuple[str, ...]:
    # smallest rotation under the natural order of polygon names
    if not seq:
        return seq
    rotations = [seq[i:] + seq[:i] for i in range(len(seq))]
    return min(rotations, key=lambda r: [natural_key(x) for x in r])


@dataclass(frozen=True)
class Polygon:
    name: str
    members: tuple[str, ...]

    def occ(self, vertex: str) -> int:
        return self.members.count(vertex)

    @property
    def size(self) -> int:
        return len(self.members)


@dataclass(frozen=True)
class BrauerConfig:
    """An immutable, normalized Brauer configuration.

    Vertices and polygons are kept in natural-sort order, polygon members are
    sorted, and every successor sequence is stored in its canonical rotation.
    ``orders`` holds the sequences that were supplied plus the forced
    singleton sequences of valency-one vertices.
    """

    vertices: tuple[str, ...]
    multiplicity: Mapping[str, int]
    polygons: tuple[Polygon, ...]
    orders: Mapping[str, tuple[str, ...]] = field(default_factory=dict)

    @classmethod
    def from_parts(
        cls,
        vertices: Mapping[str, int],
        polygons: Mapping[str, Iterable[str]],
        orders: Mapping[str, Iterable[str]] | None = None,
    ) -> "BrauerConfig":
        orders = dict(orders or {})
        for name in list(vertices) + list(polygons):
            if not _TOKEN.match(name):
                raise ValueError(f"invalid name {name!r}")
        for v, m in vertices.items():
            if int(m) < 1:
                raise ValueError(f"multiplicity of {v} must be >= 1, got {m}")
        for p, members in polygons.items():
            for v in members:
                if v not in vertices:
                    raise ValueError(f"polygon {p} references unknown vertex {v}")
        for v, seq in orders.items():
            if v not in vertices:
                raise ValueError(f"order for unknown vertex {v}")
            for p in seq:
                if p not in polygons:
                    raise ValueError(f"order for {v} references unknown polygon {p}")

        vs = tuple(sorted(vertices, key=natural_key))
        polys = tuple(
            Polygon(p, tuple(sorted(polygons[p], key=natural_key)))
            for p in sorted(polygons, key=natural_key)
        )
        canon = {v: _canonical_rotation(tuple(orders[v])) for v in vs if v in orders}
        for v in vs:
            if v not in canon:
                places = [p.name for p in polys for m in p.members if m == v]
                if len(places) == 1:
                    canon[v] = (places[0],)
        return cls(vs, {v: int(vertices[v]) for v in vs}, polys, canon)

    # lookups

    def polygon(self, name: str) -> Polygon:
        for p in self.polygons:
            if p.name == name:
                return p
        raise KeyError(f"unknown polygon {name}")

    @property
    def polygon_names(self) -> tuple[str, ...]:
        return tuple(p.name for p in self.polygons)

    def mu(self, vertex: str) -> int:
        return self.multiplicity[vertex]


def occ(cfg: BrauerConfig, vertex: str, polygon: str) -> int:
    if vertex not in cfg.multiplicity:
        raise KeyError(f"unknown vertex {vertex}")
    return cfg.polygon(polygon).occ(vertex)


def val(cfg: BrauerConfig, vertex: str) -> int:
    if vertex not in cfg.multiplicity:
        raise KeyError(f"unknown vertex {vertex}")
    return sum(p.occ(vertex) for p in cfg.polygons)


# ---------------------------------------------------------------------------
# parsing / serialization
# ---------------------------------------------------------------------------


def _split_colon(rest: str, lineno: int, what: str) -> tuple[str, list[str]]:
    if ":" not in rest:
        raise ConfigSyntaxError(f"{what} line needs ':'", lineno)
    head, tail = rest.split(":", 1)
    head_tokens = head.split()
    if len(head_tokens) != 1:
        raise ConfigSyntaxError(f"{what} line needs exactly one name before ':'", lineno)
    items = tail.split()
    if not items:
        raise ConfigSyntaxError(f"{what} line has no entries after ':'", lineno)
    return head_tokens[0], items


def parse_config(text: str) -> BrauerConfig:
    """Parse configuration text. Structural well-formedness only; see :func:`validate`."""
    vertices: dict[str, int] = {}
    polygons: dict[str, list[str]] = {}
    orders: dict[str, list[str]] = {}
    order_lines: dict[str, int] = {}
    member_lines: list[tuple[int, str, str]] = []

    for lineno, raw in enumerate(text.splitlines(), start=1):
        line = raw.split("#", 1)[0].strip()
        if not line:
            continue
        keyword, _, rest = line.partition(" ")
        if keyword == "vertex":
            toks = rest.split()
            if len(toks) not in (1, 3) or (len(toks) == 3 and toks[1] != "mult"):
                raise ConfigSyntaxError("expected 'vertex <name> [mult <k>]'", lineno)
            name = toks[0]
            if not _TOKEN.match(name):
                raise ConfigSyntaxError(f"invalid vertex name {name!r}", lineno)
            if name in vertices:
                raise ConfigSyntaxError(f"duplicate vertex {name}", lineno)
            mult = 1
            if len(toks) == 3:
                try:
                    mult = int(toks[2])
                except ValueError:
                    raise ConfigSyntaxError(f"bad multiplicity {toks[2]!r}", lineno) from None
                if mult < 1:
                    raise ConfigSyntaxError("multiplicity must be >= 1", lineno)
            vertices[name] = mult
        elif keyword == "polygon":
            name, members = _split_colon(rest, lineno, "polygon")
            if not _TOKEN.match(name):
                raise ConfigSyntaxError(f"invalid polygon name {name!r}", lineno)
            if name in polygons:
                raise ConfigSyntaxError(f"duplicate polygon {name}", lineno)
            polygons[name] = members
            member_lines.extend((lineno, name, m) for m in members)
        elif keyword == "order":
            name, seq = _split_colon(rest, lineno, "order")
            if name in orders:
                raise ConfigSyntaxError(f"duplicate order line for {name}", lineno)
            orders[name] = seq
            order_lines[name] = lineno
        else:
            raise ConfigSyntaxError(f"unknown keyword {keyword!r}", lineno)

    if not vertices:
        raise ConfigSyntaxError("no vertices declared")
    for lineno, p, m in member_lines:
        if m not in vertices:
            raise ConfigSyntaxError(f"polygon {p} references unknown vertex {m}", lineno)
    for v, seq in orders.items():
        if v not in vertices:
            raise ConfigSyntaxError(f"order line for unknown vertex {v}", order_lines[v])
        for p in seq:
            if p not in polygons:
                raise ConfigSyntaxError(f"order line references unknown polygon {p}", order_lines[v])
    return BrauerConfig.from_parts(vertices, polygons, orders)


def serialize(cfg: BrauerConfig) -> str:
    lines = []
    for v in cfg.vertices:
        m = cfg.mu(v)
        lines.append(f"vertex {v}" + (f" mult {m}" if m != 1 else ""))
    for p in cfg.polygons:
        lines.append(f"polygon {p.name} : {' '.join(p.members)}")
    for v in cfg.vertices:
        if v in cfg.orders:
            lines.append(f"order {v} : {' '.join(cfg.orders[v])}")
    return "\n".join(lines) + "\n"


# ---------------------------------------------------------------------------
# validation and classification
# ---------------------------------------------------------------------------


@dataclass(frozen=True)
class Violation:
    code: str  # C1 | C2 | C3 | order | order-missing
    message: str


@dataclass(frozen=True)
class ValidationReport:
    violations: tuple[Violation, ...]

    @property
    def ok(self) -> bool:
        return not self.violations

    def codes(self) -> set[str]:
        return {v.code for v in self.violations}


def validate(cfg: BrauerConfig) -> ValidationReport:
    out: list[Violation] = []
    valency = {v: val(cfg, v) for v in cfg.vertices}
    for v in cfg.vertices:
        if valency[v] == 0:
            out.append(Violation("C1", f"vertex {v} occurs in no polygon"))
    for p in cfg.polygons:
        if p.size < 2:
            out.append(Violation("C2", f"polygon {p.name} has {p.size} member(s), needs >= 2"))
        if not any(valency[m] * cfg.mu(m) > 1 for m in p.members):
            out.append(Violation("C3", f"polygon {p.name} has no vertex with val*mult > 1"))
    for v in cfg.vertices:
        expected = Counter({p.name: p.occ(v) for p in cfg.polygons if p.occ(v)})
        if v in cfg.orders:
            got = Counter(cfg.orders[v])
            if got != expected:
                out.append(
                    Violation("order", f"successor sequence of {v} does not match its occurrences")
                )
        elif valency[v] > 1:
            out.append(Violation("order-missing", f"vertex {v} has valency {valency[v]} but no order line"))
    return ValidationReport(tuple(out))


@dataclass(frozen=True)
class VertexClassification:
    truncated: frozenset[str]
    val_one_mult_big: frozenset[str]
    multi_big: frozenset[str]
    multi_one: frozenset[str]

    @property
    def nontruncated(self) -> frozenset[str]:
        return self.val_one_mult_big | self.multi_big | self.multi_one

    @property
    def val_big(self) -> frozenset[str]:
        return self.multi_big | self.multi_one


def classify_vertices(cfg: BrauerConfig) -> VertexClassification:
    t, c, a, b = set(), set(), set(), set()
    for v in cfg.vertices:
        n, m = val(cfg, v), cfg.mu(v)
        if n * m == 1:
            t.add(v)
        elif n == 1:
            c.add(v)
        elif m > 1:
            a.add(v)
        else:
            b.add(v)
    return VertexClassification(frozenset(t), frozenset(c), frozenset(a), frozenset(b))


def is_reduced(cfg: BrauerConfig) -> bool:
    truncated = classify_vertices(cfg).truncated
    for p in cfg.polygons:
        hits = sum(1 for m in p.members if m in truncated)
        if hits and not (p.size == 2 and hits == 1):
            return False
    return True


def _components(cfg: BrauerConfig) -> int:
    parent: dict[str, str] = {}

    def find(x: str) -> str:
        while parent.setdefault(x, x) != x:
            parent[x] = parent[parent[x]]
            x = parent[x]
        return x

    nodes = [("v", v) for v in cfg.vertices] + [("p", p.name) for p in cfg.polygons]
    for kind, name in nodes:
        find(f"{kind}:{name}")
    for p in cfg.polygons:
        for m in p.members:
            parent[find(f"p:{p.name}")] = find(f"v:{m}")
    return len({find(f"{k}:{n}") for k, n in nodes})


def is_connected(cfg: BrauerConfig) -> bool:
    """Connectedness of the bipartite vertex/polygon incidence graph."""
    return _components(cfg) == 1


def is_brauer_tree(cfg: BrauerConfig) -> bool:
    if not all(p.size == 2 for p in cfg.polygons):
        return False
    if any(p.members[0] == p.members[1] for p in cfg.polygons):
        return False
    return is_connected(cfg) and len(cfg.polygons) == len(cfg.vertices) - 1


# ---------------------------------------------------------------------------
# random generation
# ---------------------------------------------------------------------------


def _draw(rng: random.Random, polygon_count: int, max_size: int, max_mult: int) -> BrauerConfig:
    vertices: list[str] = []
    polygons: dict[str, list[str]] = {}
    for k in range(polygon_count):
        size = rng.randint(2, max_size)
        members: list[str] = []
        for slot in range(size):
            reuse = vertices and (slot == 0 and k > 0 or rng.random() < 0.6)
            if reuse:
                members.append(rng.choice(vertices))
            else:
                vertices.append(str(len(vertices) + 1))
                members.append(vertices[-1])
        polygons[f"V{k + 1}"] = members
    mult = {v: rng.randint(1, max_mult) for v in vertices}
    orders = {}
    for v in vertices:
        seq = [p for p, members in polygons.items() for m in members if m == v]
        rng.shuffle(seq)
        orders[v] = seq
    return BrauerConfig.from_parts(mult, polygons, orders)


def generate_random(
    polygon_count: int,
    max_polygon_size: int,
    max_multiplicity: int,
    seed: int,
    *,
    max_valency: int | None = None,
    max_rounds: int = 2000,
) -> BrauerConfig:
    """Draw a valid, reduced, connected configuration by rejection sampling.

    Deterministic in ``seed``. Raises :class:`GenerationError` when no sample
    is accepted within ``max_rounds`` draws.
    """
    if polygon_count < 1 or max_polygon_size < 2 or max_multiplicity < 1:
        raise ValueError("need polygon_count >= 1, max_polygon_size >= 2, max_multiplicity >= 1")
    rng = random.Random(seed)
    for _ in range(max_rounds):
        cfg = _draw(rng, polygon_count, max_polygon_size, max_multiplicity)
        if max_valency is not None and any(val(cfg, v) > max_valency for v in cfg.vertices):
            continue
        if validate(cfg).ok and is_reduced(cfg) and is_connected(cfg):
            return cfg
    raise GenerationError(f"no acceptable configuration after {max_rounds} rounds (seed={seed})")


def generate_random_tree(edge_count: int, max_multiplicity: int, seed: int) -> BrauerConfig:
    """Random Brauer tree with ``edge_count`` edges (2-gons) and random orientation."""
    if edge_count < 1:
        raise ValueError("need at least one edge")
    if edge_count == 1 and max_multiplicity == 1:
        raise ValueError("a single edge needs an endpoint of multiplicity > 1")
    rng = random.Random(seed)
    for _ in range(1000):
        vertices = [str(i + 1) for i in range(edge_count + 1)]
        polygons = {}
        for i in range(1, edge_count + 1):
            polygons[f"E{i}"] = [vertices[rng.randrange(i)], vertices[i]]
        mult = {v: rng.randint(1, max_multiplicity) for v in vertices}
        orders = {}
        for v in vertices:
            seq = [p for p, members in polygons.items() if v in members]
            rng.shuffle(seq)
            orders[v] = seq
        cfg = BrauerConfig.from_parts(mult, polygons, orders)
        if validate(cfg).ok:
            return cfg
    raise GenerationError(f"no valid tree after 1000 rounds (seed={seed})")
