"""Full invariant battery for one configuration, used by ``bcc verify`` and the tests."""

from __future__ import annotations

import random
from dataclasses import dataclass, field

from .algebra import Check, build_table, dim_vv_enumerated, dim_vv_formula, verify_identities
from .center import (
    center_dim_formula,
    center_dim_tree_corollary,
    center_kernel,
    d1_star_matrix,
    is_central,
    verify_theorem,
)
from .configuration import (
    BrauerConfig,
    generate_random,
    is_brauer_tree,
    is_connected,
    is_reduced,
    val,
    validate,
)
from .exactla import QQ, FieldSpec
from .quiver import (
    build_quiver,
    first_arrow_map,
    non_special_cycles,
    nonspecial_special_cycle,
    special_cycles_at,
)
from .relations import Idempotent, Path, Socle, normal_form

__all__ = ["ASSOCIATIVITY_LIMIT", "BatteryResult", "random_suite_config", "run_battery"]

# exhaustive associativity is cubic in dim Λ; the kernels handle a few hundred easily
ASSOCIATIVITY_LIMIT = 200


def random_suite_config(seed: int, max_polygons: int = 8, max_size: int = 4, max_mult: int = 3, max_val: int = 6) -> BrauerConfig:
    """Configuration number ``seed`` of the random suite; the polygon count is drawn in ``1..max_polygons``."""
    count = random.Random(seed).randint(1, max_polygons)
    return generate_random(count, max_size, max_mult, seed, max_valency=max_val)


@dataclass
class BatteryResult:
    checks: list[Check] = field(default_factory=list)
    dim_algebra: int = 0
    center_dim: int | None = None

    @property
    def ok(self) -> bool:
        return all(c.passed for c in self.checks)

    def failures(self) -> list[Check]:
        return [c for c in self.checks if not c.passed]


def _kernel_checks(table, field: FieldSpec, add) -> None:
    d = d1_star_matrix(table, field)
    kernel = center_kernel(table, field)
    for k, x in enumerate(kernel):
        vec = [x.coeffs.get(b, 0) for b in d.columns]
        add("kernel-annihilated", f"vector {k}", not any(d.matrix.apply(vec)))
        idem = {x.coeffs.get(i, 0) for i, b in enumerate(table.basis) if isinstance(b, Idempotent)}
        add("kernel-idempotents-equal", f"vector {k}", len(idem) == 1)
        add("kernel-central", f"vector {k}", is_central(table, x))
    add("d1-entries", "entries in {-1,0,1}", all(v in (-1, 0, 1) for row in d.matrix.entries for v in row))


def run_battery(cfg: BrauerConfig, field: FieldSpec = QQ, associativity: bool = True) -> BatteryResult:
    res = BatteryResult()

    def add(name, detail, ok):
        res.checks.append(Check(name, detail, bool(ok)))

    report = validate(cfg)
    add("valid", ",".join(report.codes()) or "ok", report.ok)
    add("reduced", "", is_reduced(cfg))
    add("connected", "", is_connected(cfg))
    if not res.ok:
        return res

    q = build_quiver(cfg)
    expected = sum(val(cfg, v) for v in q.nontruncated)
    add("q1-count", f"{len(q.arrows)} == {expected}", len(q.arrows) == expected)
    try:
        fam = first_arrow_map(q)
        add("first-arrow-bijection", "", sorted(fam.values()) == list(range(len(q.arrows))))
    except AssertionError as exc:
        add("first-arrow-bijection", str(exc), False)

    # concatenating the non-special cycles from q_l gives the special cycle C_l as a path
    for alpha in q.classes.val_big:
        for p in cfg.polygons:
            if not p.occ(alpha):
                continue
            runs = non_special_cycles(q, alpha, p.name)
            for l in range(1, len(runs) + 1):
                path = tuple(a for t in range(len(runs)) for a in runs[(l - 1 + t) % len(runs)].arrows)
                c = nonspecial_special_cycle(q, alpha, p.name, l)
                add("nonspecial-concat", f"{alpha},{p.name},l={l}", path == c.arrows(q))

    table = build_table(q)
    res.dim_algebra = table.dim
    for p in cfg.polygons:
        f, e = dim_vv_formula(cfg, p.name), dim_vv_enumerated(table, p.name)
        add("dim-vv", f"{p.name}: {f} vs {e}", f == e)
    for p in cfg.polygons:
        # C^mu from each nontruncated member of V lands on the same socle class
        for alpha in set(p.members):
            if alpha in q.nontruncated:
                for c in special_cycles_at(q, alpha, p.name):
                    nf = normal_form(q, Path.of(q, c.arrows(q, q.mu(alpha))))
                    add("socle-common", f"{alpha},{p.name}", nf == Socle(p.name))

    if associativity and table.dim <= ASSOCIATIVITY_LIMIT:
        add("associativity", f"dim {table.dim}", table.associativity_defects() == 0)

    res.checks.extend(verify_identities(table))

    rep = verify_theorem(cfg, field)
    res.center_dim = rep.dim_oracle
    add("theorem", f"formula {rep.dim_formula} oracle {rep.dim_oracle}", rep.dim_formula == rep.dim_oracle)
    add("candidates-count", f"{rep.dim_candidates}", rep.dim_candidates == rep.dim_formula)
    add("candidates-central", "", rep.all_candidates_central)
    add("candidates-independent", "", rep.candidates_independent)
    add("candidates-distinct", str(rep.coincidences), not rep.coincidences)
    _kernel_checks(rep.table, field, add)

    if is_brauer_tree(cfg):
        add("tree-corollary", "", center_dim_tree_corollary(cfg) == center_dim_formula(cfg, q))
    return res

