"""Dimension and basis of the center, by closed formula and by linear algebra.

The closed formula counts ``1 + sum(mu) + |polygons| - |vertices| + loops - |C|``
where ``C`` is the set of valency-one vertices of multiplicity above one.
The oracle computes the kernel of ``chi -> (chi_s(a) a - a chi_t(a))_a`` on
``⊕_v vΛv``, which is the center, with exact arithmetic.
"""

from __future__ import annotations

import json
from dataclasses import dataclass, field
from fractions import Fraction

import numpy as np

from .algebra import AlgebraTable, Element, build_table, element_C_alpha
from .configuration import (
    BrauerConfig,
    is_brauer_tree,
    is_connected,
    is_reduced,
    validate,
)
from .exactla import QQ, ExactMatrix, FieldSpec, independent, kernel_basis, rank
from .quiver import Quiver, build_quiver, count_loops, mixed_cycles
from .relations import PrefixBasis

__all__ = [
    "CenterBasisCandidate",
    "CenterReport",
    "D1Star",
    "HypothesisError",
    "center_basis_candidates",
    "center_dim_bruteforce",
    "center_dim_formula",
    "center_dim_tree_corollary",
    "center_kernel",
    "d1_star_matrix",
    "is_central",
    "verify_theorem",
]


class HypothesisError(ValueError):
    """The input does not satisfy the hypotheses of the dimension formula."""


def _require_hypotheses(cfg: BrauerConfig) -> None:
    report = validate(cfg)
    if not report.ok:
        raise HypothesisError("invalid configuration: " + "; ".join(v.message for v in report.violations))
    if not is_reduced(cfg):
        raise HypothesisError("reduced hypothesis violated")
    if not is_connected(cfg):
        raise HypothesisError("connected hypothesis violated")


def center_dim_formula(cfg: BrauerConfig, quiver: Quiver | None = None) -> int:
    _require_hypotheses(cfg)
    q = quiver or build_quiver(cfg)
    return (
        1
        + sum(cfg.mu(v) for v in cfg.vertices)
        + len(cfg.polygons)
        - len(cfg.vertices)
        + count_loops(q)
        - len(q.classes.val_one_mult_big)
    )


def center_dim_tree_corollary(cfg: BrauerConfig) -> int:
    _require_hypotheses(cfg)
    if len(cfg.vertices) == 1 and len(cfg.polygons) == 1 and cfg.polygons[0].size == 2:
        raise HypothesisError("graph is a single loop, excluded from the tree formula")
    if not is_brauer_tree(cfg):
        raise HypothesisError("configuration is not a Brauer tree")
    return 1 + sum(cfg.mu(v) for v in cfg.vertices) + len(cfg.polygons) - len(cfg.vertices)


@dataclass
class D1Star:
    """Matrix of the commutator map restricted to ``⊕_v vΛv``.

    ``columns[c]`` is the basis index of column ``c``; ``rows[r]`` is the
    pair ``(arrow id, basis index)`` of row ``r``.
    """

    matrix: ExactMatrix
    columns: list[int]
    rows: list[tuple[int, int]]


def d1_star_matrix(table: AlgebraTable, field: FieldSpec = QQ) -> D1Star:
    q = table.quiver
    prod = table.product
    src, tgt = table.source, table.target
    columns = [int(i) for i in np.flatnonzero(src == tgt)]
    rows: list[tuple[int, int]] = []
    row_of: dict[tuple[int, int], int] = {}
    for a, arrow in enumerate(q.arrows):
        s, t = q.vertex_index[arrow.source], q.vertex_index[arrow.target]
        for b in np.flatnonzero((src == s) & (tgt == t)):
            row_of[(a, int(b))] = len(rows)
            rows.append((a, int(b)))
    arrow_basis = [table.index[PrefixBasis(a, 1)] for a in range(len(q.arrows))]
    entries = [[0] * len(columns) for _ in rows]
    for c, b in enumerate(columns):
        v = q.vertices[src[b]]
        for a, arrow in enumerate(q.arrows):
            if arrow.source == v:
                k = prod[b, arrow_basis[a]]
                if k >= 0:
                    entries[row_of[(a, int(k))]][c] += 1
            if arrow.target == v:
                k = prod[arrow_basis[a], b]
                if k >= 0:
                    entries[row_of[(a, int(k))]][c] -= 1
    return D1Star(ExactMatrix(entries, len(columns), field), columns, rows)


def center_kernel(table: AlgebraTable, field: FieldSpec = QQ) -> list[Element]:
    """Kernel basis of the commutator map, as elements of the algebra."""
    d = d1_star_matrix(table, field)
    out = []
    for vec in kernel_basis(d.matrix):
        out.append(Element({d.columns[c]: x for c, x in enumerate(vec) if x}))
    return out


def center_dim_bruteforce(table: AlgebraTable, field: FieldSpec = QQ) -> int:
    d = d1_star_matrix(table, field)
    return d.matrix.cols - rank(d.matrix)


def is_central(table: AlgebraTable, x: Element) -> bool:
    """True iff ``x`` commutes with every idempotent and every arrow."""
    q = table.quiver
    gens = [table.idempotent(v) for v in q.vertices] + [table.arrow(a) for a in range(len(q.arrows))]
    return all(table.mul(x, g) == table.mul(g, x) for g in gens)


@dataclass(frozen=True)
class CenterBasisCandidate:
    kind: str  # identity | power | socle | mixed
    label: str
    value: Element


def center_basis_candidates(table: AlgebraTable) -> list[CenterBasisCandidate]:
    q = table.quiver
    cfg = q.config
    _require_hypotheses(cfg)
    out = [CenterBasisCandidate("identity", "1", table.one())]
    for alpha in cfg.vertices:
        if alpha in q.classes.multi_big or alpha in q.classes.val_one_mult_big:
            c = element_C_alpha(table, alpha)
            for j in range(1, q.mu(alpha)):
                out.append(CenterBasisCandidate("power", f"C({alpha})^{j}", table.power(c, j)))
    for p in cfg.polygons:
        out.append(CenterBasisCandidate("socle", f"C^({p.name})", table.socle(p.name)))
    for m in mixed_cycles(q):
        out.append(
            CenterBasisCandidate("mixed", f"D^({m.owner})_{m.polygon},{m.index}", table.path(m.arrows))
        )
    return out


def _coincidences(cands: list[CenterBasisCandidate]) -> list[tuple[str, str]]:
    seen: dict[Element, str] = {}
    out = []
    for c in cands:
        if c.value in seen:
            out.append((seen[c.value], c.label))
        else:
            seen[c.value] = c.label
    return out


def _fmt(x) -> str:
    return str(x) if not isinstance(x, Fraction) or x.denominator != 1 else str(x.numerator)


@dataclass
class CenterReport:
    dim_formula: int
    dim_oracle: int | None
    dim_candidates: int
    candidates_independent: bool
    all_candidates_central: bool
    field: FieldSpec
    candidates: list[CenterBasisCandidate] = field(default_factory=list)
    coincidences: list[tuple[str, str]] = field(default_factory=list)
    table: AlgebraTable | None = field(default=None, repr=False)

    @property
    def success(self) -> bool:
        dims_ok = self.dim_formula == self.dim_candidates and (
            self.dim_oracle is None or self.dim_oracle == self.dim_formula
        )
        return dims_ok and self.candidates_independent and self.all_candidates_central and not self.coincidences

    def to_dict(self) -> dict:
        t = self.table
        return {
            "dim_formula": self.dim_formula,
            "dim_oracle": self.dim_oracle,
            "dim_candidates": self.dim_candidates,
            "field": str(self.field),
            "candidates_independent": self.candidates_independent,
            "all_candidates_central": self.all_candidates_central,
            "coincidences": [list(c) for c in self.coincidences],
            "candidates": [
                {
                    "kind": c.kind,
                    "label": c.label,
                    "support": [[t.label(k) if t else k, _fmt(c.value.coeffs[k])] for k in c.value.support()],
                }
                for c in self.candidates
            ],
            "success": self.success,
        }

    def to_json(self) -> str:
        return json.dumps(self.to_dict(), indent=2, sort_keys=True)

    def to_text(self, basis: bool = False) -> str:
        oracle = "skipped" if self.dim_oracle is None else str(self.dim_oracle)
        lines = [
            f"field: {self.field}",
            f"dim Z (formula):    {self.dim_formula}",
            f"dim Z (kernel):     {oracle}",
            f"candidates:         {self.dim_candidates}",
            f"independent:        {'yes' if self.candidates_independent else 'NO'}",
            f"all central:        {'yes' if self.all_candidates_central else 'NO'}",
        ]
        for a, b in self.coincidences:
            lines.append(f"coincidence:        {a} == {b}")
        if basis and self.table is not None:
            lines.append("basis:")
            for c in self.candidates:
                lines.append(f"  {c.label} = {self.table.format(c.value)}")
        lines.append("result: " + ("OK" if self.success else "MISMATCH"))
        return "\n".join(lines) + "\n"


def verify_theorem(cfg: BrauerConfig, field: FieldSpec = QQ, oracle: bool = True) -> CenterReport:
    _require_hypotheses(cfg)
    q = build_quiver(cfg)
    table = build_table(q)
    formula = center_dim_formula(cfg, q)
    dim_oracle = center_dim_bruteforce(table, field) if oracle else None
    cands = center_basis_candidates(table)
    vectors = [c.value.vector(table.dim) for c in cands]
    return CenterReport(
        dim_formula=formula,
        dim_oracle=dim_oracle,
        dim_candidates=len(cands),
        candidates_independent=independent(vectors, QQ),
        all_candidates_central=all(is_central(table, c.value) for c in cands),
        field=field,
        candidates=cands,
        coincidences=_coincidences(cands),
        table=table,
    )
