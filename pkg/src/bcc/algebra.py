"""Basis, structure constants and elements of the Brauer configuration algebra."""

from __future__ import annotations

from dataclasses import dataclass
from typing import Iterable, Mapping

import numpy as np

from . import _kernels
from .configuration import BrauerConfig
from .quiver import (
    Quiver,
    SpecialCycle,
    count_loops,
    mixed_cycles,
    non_special_cycles,
    nonspecial_special_cycle,
    special_cycles,
)
from .relations import ZERO, Idempotent, Path, PrefixBasis, Socle, format_path, normal_form

__all__ = [
    "AlgebraTable",
    "BasisElement",
    "Check",
    "Element",
    "build_table",
    "dim_vv_enumerated",
    "dim_vv_formula",
    "element_C_alpha",
    "enumerate_basis",
    "multiply",
    "radical_square_nonzero",
    "verify_identities",
]

BasisElement = Idempotent | PrefixBasis | Socle


class Element:
    """Finite linear combination of basis elements, ``{basis index: scalar}``."""

    __slots__ = ("coeffs",)

    def __init__(self, coeffs: Mapping[int, object] | None = None):
        self.coeffs = {k: v for k, v in (coeffs or {}).items() if v}

    @classmethod
    def basis(cls, index: int) -> "Element":
        return cls({index: 1})

    def __add__(self, other: "Element") -> "Element":
        out = dict(self.coeffs)
        for k, v in other.coeffs.items():
            out[k] = out.get(k, 0) + v
        return Element(out)

    def __neg__(self) -> "Element":
        return Element({k: -v for k, v in self.coeffs.items()})

    def __sub__(self, other: "Element") -> "Element":
        return self + (-other)

    def __rmul__(self, scalar) -> "Element":
        return Element({k: scalar * v for k, v in self.coeffs.items()})

    def __eq__(self, other) -> bool:
        if not isinstance(other, Element):
            return NotImplemented
        return self.coeffs == other.coeffs

    def __hash__(self):
        return hash(frozenset(self.coeffs.items()))

    def __bool__(self) -> bool:
        return bool(self.coeffs)

    def __repr__(self) -> str:
        return f"Element({dict(sorted(self.coeffs.items()))})"

    def support(self) -> list[int]:
        return sorted(self.coeffs)

    def vector(self, n: int) -> list:
        v = [0] * n
        for k, x in self.coeffs.items():
            v[k] = x
        return v


@dataclass(frozen=True)
class Check:
    name: str
    detail: str
    passed: bool


def enumerate_basis(q: Quiver) -> list[BasisElement]:
    """Idempotents, then proper prefixes of ``C^mu`` by (owner, first arrow, length), then socles."""
    out: list[BasisElement] = [Idempotent(v) for v in q.vertices]
    for alpha in q.nontruncated:
        top = q.socle_length(alpha)
        for a in q.cycle[alpha]:
            out.extend(PrefixBasis(a, length) for length in range(1, top))
    out.extend(Socle(v) for v in q.vertices)
    return out


class AlgebraTable:
    """Multiplication table of the algebra in its path basis.

    All structure constants are 0 or 1, so ``product[i, j]`` stores the index
    of ``b_i b_j`` or -1 when the product vanishes.
    """

    def __init__(self, q: Quiver):
        self.quiver = q
        self.config: BrauerConfig = q.config
        self.basis = enumerate_basis(q)
        self.index = {b: i for i, b in enumerate(self.basis)}
        n = len(self.basis)
        vidx = q.vertex_index
        owner_idx = {alpha: k for k, alpha in enumerate(q.config.vertices)}

        kind = np.zeros(n, dtype=np.int64)
        src = np.zeros(n, dtype=np.int64)
        tgt = np.zeros(n, dtype=np.int64)
        owner = np.full(n, -1, dtype=np.int64)
        pos = np.zeros(n, dtype=np.int64)
        length = np.zeros(n, dtype=np.int64)
        cyc = np.ones(n, dtype=np.int64)
        top = np.zeros(n, dtype=np.int64)
        base = np.zeros(n, dtype=np.int64)
        socle_at = np.zeros(len(q.vertices), dtype=np.int64)
        for i, b in enumerate(self.basis):
            if isinstance(b, Idempotent):
                src[i] = tgt[i] = vidx[b.vertex]
            elif isinstance(b, Socle):
                kind[i] = _kernels.KIND_SOCLE
                src[i] = tgt[i] = vidx[b.polygon]
                socle_at[vidx[b.polygon]] = i
            else:
                alpha = q.owner[b.first]
                kind[i] = _kernels.KIND_PREFIX
                src[i] = vidx[q.arrows[b.first].source]
                last = q.cycle[alpha][(q.position[b.first] + b.length - 1) % q.val(alpha)]
                tgt[i] = vidx[q.arrows[last].target]
                owner[i] = owner_idx[alpha]
                pos[i] = q.position[b.first]
                length[i] = b.length
                cyc[i] = q.val(alpha)
                top[i] = q.socle_length(alpha)
                base[i] = self.index[PrefixBasis(b.first, 1)]
        self.kind, self.source, self.target = kind, src, tgt
        self.product = _kernels.product_table(kind, src, tgt, owner, pos, length, cyc, top, base, socle_at)

    def __len__(self) -> int:
        return len(self.basis)

    @property
    def dim(self) -> int:
        return len(self.basis)

    # element constructors

    def idempotent(self, vertex: str) -> Element:
        return Element.basis(self.index[Idempotent(vertex)])

    def one(self) -> Element:
        return Element({self.index[Idempotent(v)]: 1 for v in self.quiver.vertices})

    def arrow(self, a: int) -> Element:
        return Element.basis(self.index[PrefixBasis(a, 1)])

    def socle(self, polygon: str) -> Element:
        return Element.basis(self.index[Socle(polygon)])

    def path(self, arrows: Iterable[int], vertex: str | None = None) -> Element:
        arrows = tuple(arrows)
        p = Path.of(self.quiver, arrows) if arrows else Path.empty(vertex)
        nf = normal_form(self.quiver, p)
        return Element() if nf == ZERO else Element.basis(self.index[nf])

    def cycle_class(self, c: SpecialCycle, power: int = 1) -> Element:
        return self.path(c.arrows(self.quiver, power))

    def mul(self, x: Element, y: Element) -> Element:
        return multiply(self, x, y)

    def power(self, x: Element, k: int) -> Element:
        if k == 0:
            return self.one()
        out = x
        for _ in range(k - 1):
            out = self.mul(out, x)
        return out

    # display

    def label(self, i: int) -> str:
        b = self.basis[i]
        if isinstance(b, Idempotent):
            return f"e_{b.vertex}"
        if isinstance(b, Socle):
            return f"C^({b.polygon})"
        return format_path(self.quiver, self.quiver.walk(b.first, b.length))

    def format(self, x: Element) -> str:
        if not x:
            return "0"
        terms = []
        for k in x.support():
            c = x.coeffs[k]
            terms.append(self.label(k) if c == 1 else f"{c}*{self.label(k)}")
        return " + ".join(terms)

    def dump(self) -> str:
        lines = []
        n = self.dim
        for i in range(n):
            for j in range(n):
                k = self.product[i, j]
                lines.append(f"b_{i} * b_{j} = " + (f"b_{k}" if k >= 0 else "0"))
        return "\n".join(lines) + "\n"

    def associativity_defects(self) -> int:
        return _kernels.associativity_defects(self.product)


def build_table(q: Quiver) -> AlgebraTable:
    return AlgebraTable(q)


def multiply(table: AlgebraTable, x: Element, y: Element) -> Element:
    prod = table.product
    out: dict[int, object] = {}
    for i, a in x.coeffs.items():
        row = prod[i]
        for j, b in y.coeffs.items():
            k = row[j]
            if k >= 0:
                k = int(k)
                out[k] = out.get(k, 0) + a * b
    return Element(out)


def dim_vv_formula(cfg: BrauerConfig, polygon: str) -> int:
    p = cfg.polygon(polygon)
    return 2 + sum(p.occ(a) * (p.occ(a) * cfg.mu(a) - 1) for a in set(p.members))


def dim_vv_enumerated(table: AlgebraTable, polygon: str) -> int:
    v = table.quiver.vertex_index[polygon]
    return int(np.count_nonzero((table.source == v) & (table.target == v)))


def radical_square_nonzero(table: AlgebraTable) -> bool:
    rad = table.kind != _kernels.KIND_IDEMPOTENT
    block = table.product[np.ix_(rad, rad)]
    return bool((block >= 0).any())


def element_C_alpha(table: AlgebraTable, alpha: str) -> Element:
    out = Element()
    for c in special_cycles(table.quiver, alpha):
        out = out + table.cycle_class(c)
    return out


def _q_product(table: AlgebraTable, runs) -> Element:
    out = None
    for run in runs:
        e = table.path(run.arrows)
        out = e if out is None else table.mul(out, e)
    return out


def verify_identities(table: AlgebraTable) -> list[Check]:
    """Check the algebra-level identities on every applicable instance."""
    q = table.quiver
    cfg = q.config
    cls = q.classes
    checks: list[Check] = []

    def add(name, detail, ok):
        checks.append(Check(name, detail, bool(ok)))

    for alpha in sorted(cls.val_big, key=cfg.vertices.index):
        mu = q.mu(alpha)
        for p in cfg.polygons:
            runs = non_special_cycles(q, alpha, p.name) if p.occ(alpha) else []
            n = len(runs)
            for j in range(1, n + 1):
                c_j = table.cycle_class(nonspecial_special_cycle(q, alpha, p.name, j))
                c_next = table.cycle_class(nonspecial_special_cycle(q, alpha, p.name, j + 1))
                seq = [runs[(j - 1 + t) % n] for t in range(n)]
                add("nonspecial-product", f"{alpha},{p.name},j={j}", _q_product(table, seq) == c_j)
                q_j = table.path(runs[j - 1].arrows)
                for l in range(0, mu + 2):
                    lhs = table.mul(table.power(c_j, l), q_j)
                    rhs = table.mul(q_j, table.power(c_next, l))
                    add("cycle-shift", f"{alpha},{p.name},j={j},l={l}", lhs == rhs)

    for alpha in q.nontruncated:
        mu = q.mu(alpha)
        cycles = special_cycles(q, alpha)
        classes = [table.cycle_class(c) for c in cycles]
        if alpha in cls.val_big:
            for i, x in enumerate(classes):
                for j, y in enumerate(classes):
                    if i != j:
                        add("distinct-cycles-annihilate", f"{alpha},{i + 1},{j + 1}", not table.mul(x, y))
            if alpha in cls.multi_one:
                for i, x in enumerate(classes):
                    add("cycle-square-zero", f"{alpha},{i + 1}", not table.mul(x, x))
        c_alpha = element_C_alpha(table, alpha)
        expected = Element()
        for p in cfg.polygons:
            if p.occ(alpha):
                expected = expected + p.occ(alpha) * table.socle(p.name)
        add("top-power-socle", alpha, table.power(c_alpha, mu) == expected)
        for i, x in enumerate(classes):
            add("power-overflow-zero", f"{alpha},{i + 1}", not table.power(x, mu + 1))
        for j in range(1, mu + 2):
            rhs = Element()
            for x in classes:
                rhs = rhs + table.power(x, j)
            add("power-of-sum", f"{alpha},j={j}", table.power(c_alpha, j) == rhs)

    all_classes = [
        table.cycle_class(c) for beta in q.nontruncated for c in special_cycles(q, beta)
    ]
    for a, arrow in enumerate(q.arrows):
        alpha = arrow.vertex
        abar = table.arrow(a)
        own = special_cycles(q, alpha)
        first = [c for c in own if c.first_arrow(q) == a][0]
        last = [c for c in own if c.arrows(q)[-1] == a][0]
        if alpha in cls.multi_one:
            ok = all(not table.mul(d, abar) and not table.mul(abar, d) for d in all_classes)
            add("arrow-kills-cycles", arrow.label, ok)
            continue
        left = [c for c in own if table.mul(table.cycle_class(c), abar)]
        right = [c for c in own if table.mul(abar, table.cycle_class(c))]
        add("arrow-cycle-pair", arrow.label, left == [first] and right == [last])
        cbar, cpbar = table.cycle_class(first), table.cycle_class(last)
        for l in range(1, q.mu(alpha) + 1):
            lhs = table.mul(table.power(cbar, l), abar)
            rhs = table.mul(abar, table.power(cpbar, l))
            add("cycle-arrow-commute", f"{arrow.label},l={l}", lhs == rhs)

    rhs = len(mixed_cycles(q)) + len(cls.val_one_mult_big)
    add("loop-count", f"{count_loops(q)} == {rhs}", count_loops(q) == rhs)
    add("rad-square", "rad^2 != 0", radical_square_nonzero(table))
    return checks
