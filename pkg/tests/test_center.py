import json

import pytest
from hypothesis import given
from hypothesis import strategies as st

from bcc.algebra import Element, build_table, element_C_alpha
from bcc.battery import run_battery
from bcc.center import (
    HypothesisError,
    center_basis_candidates,
    center_dim_bruteforce,
    center_dim_formula,
    center_dim_tree_corollary,
    center_kernel,
    d1_star_matrix,
    is_central,
    verify_theorem,
)
from bcc.configuration import BrauerConfig, generate_random, generate_random_tree, parse_config
from bcc.exactla import FieldSpec, rank
from bcc.families import cycle, self_loop, square, two5, two_gon
from bcc.quiver import build_quiver, special_cycles
from bcc.relations import Idempotent

configs = st.builds(generate_random, st.integers(1, 5), st.integers(2, 4), st.integers(1, 3), st.integers(0, 10**6))

NOT_REDUCED = "vertex 1 mult 2\nvertex 2 mult 2\nvertex t\npolygon V : 1 2 t\n"
DISCONNECTED = "vertex x mult 2\nvertex y mult 2\npolygon V : x x\npolygon W : y y\norder x : V V\norder y : W W\n"


def table_of(cfg):
    return build_table(build_quiver(cfg))


def star(mults):
    """Brauer tree with centre c and one leaf per entry of ``mults`` (leaf multiplicities)."""
    verts = {"c": 1, **{f"l{i}": m for i, m in enumerate(mults)}}
    polys = {f"E{i}": ["c", f"l{i}"] for i in range(len(mults))}
    return BrauerConfig.from_parts(verts, polys, {"c": list(polys)})


def test_formula_examples():
    assert center_dim_formula(square()) == 5
    for m in range(2, 6):
        for n in range(1, 4):
            assert center_dim_formula(cycle(m, n)) == 1 + n * m
    for n in range(1, 5):
        assert center_dim_formula(self_loop(n)) == n + 3
    assert center_dim_formula(two_gon()) == 3
    assert center_dim_formula(two5()) == 11


def test_formula_refuses_hypothesis_violations():
    with pytest.raises(HypothesisError, match="reduced hypothesis violated"):
        center_dim_formula(parse_config(NOT_REDUCED))
    with pytest.raises(HypothesisError, match="connected"):
        center_dim_formula(parse_config(DISCONNECTED))
    with pytest.raises(HypothesisError, match="invalid"):
        center_dim_formula(BrauerConfig.from_parts({"a": 1, "b": 1}, {"V": ["a", "b"]}, {}))


def test_tree_corollary_examples():
    assert center_dim_tree_corollary(two_gon()) == 3
    s = star([1, 1, 1])
    assert center_dim_tree_corollary(s) == 4 == center_dim_bruteforce(table_of(s))
    with pytest.raises(HypothesisError, match="single loop"):
        center_dim_tree_corollary(self_loop(2))
    with pytest.raises(HypothesisError, match="not a Brauer tree"):
        center_dim_tree_corollary(square())


def test_d1_star_2gon_is_zero():
    d = d1_star_matrix(table_of(two_gon()))
    assert d.matrix.cols == 3
    assert all(v == 0 for row in d.matrix.entries for v in row)


def test_d1_star_identity_column_sum():
    tab = table_of(square())
    d = d1_star_matrix(tab)
    one = tab.one()
    vec = [one.coeffs.get(b, 0) for b in d.columns]
    assert not any(d.matrix.apply(vec))
    assert d.matrix.cols - rank(d.matrix) == 5


def test_bruteforce_examples():
    assert center_dim_bruteforce(table_of(square())) == 5
    assert center_dim_bruteforce(table_of(cycle(3, 2))) == 7
    assert center_dim_bruteforce(table_of(self_loop(2))) == 5


def test_candidates_square():
    tab = table_of(square())
    cands = center_basis_candidates(tab)
    assert [c.label for c in cands] == ["1", "C^(V1)", "C^(V2)", "C^(V3)", "C^(V4)"]
    assert cands[0].value == tab.one()
    assert [c.kind for c in cands] == ["identity"] + ["socle"] * 4


def test_candidates_2gon():
    tab = table_of(two_gon())
    cands = center_basis_candidates(tab)
    assert [c.kind for c in cands] == ["identity", "power", "socle"]
    assert cands[1].value == tab.arrow(0)


def test_candidates_self1():
    cands = center_basis_candidates(table_of(self_loop(1)))
    assert [c.kind for c in cands] == ["identity", "socle", "mixed", "mixed"]


def test_is_central_examples():
    tab = table_of(square())
    assert is_central(tab, tab.one())
    assert not is_central(tab, tab.arrow(0))
    assert is_central(tab, Element())


@pytest.mark.parametrize(
    "cfg, dim",
    [(square(), 5), (cycle(4, 1), 5), (two5(), 11), (two_gon(), 3), (self_loop(2), 5), (cycle(2, 3), 7)],
)
def test_verify_theorem(cfg, dim):
    rep = verify_theorem(cfg)
    assert rep.success
    assert (rep.dim_formula, rep.dim_oracle, rep.dim_candidates) == (dim, dim, dim)


def test_verify_prime_field():
    rep = verify_theorem(cycle(2, 3), FieldSpec(5))
    assert rep.success and rep.dim_oracle == 7 and str(rep.field) == "GF(5)"


def test_verify_without_oracle():
    rep = verify_theorem(square(), oracle=False)
    assert rep.dim_oracle is None and rep.success
    assert "skipped" in rep.to_text()


def test_report_json():
    rep = verify_theorem(self_loop(1))
    doc = json.loads(rep.to_json())
    for key in ("dim_formula", "dim_oracle", "dim_candidates", "field", "candidates"):
        assert key in doc
    assert doc["field"] == "Q"
    assert all({"kind", "label", "support"} <= set(c) for c in doc["candidates"])
    assert rep.to_json() == verify_theorem(self_loop(1)).to_json()


def test_report_text_basis():
    text = verify_theorem(square()).to_text(basis=True)
    assert "C^(V1) = C^(V1)" in text and text.rstrip().endswith("result: OK")


def test_sum_of_cycle_powers_central_not_individual():
    tab = table_of(cycle(3, 2))
    q = tab.quiver
    for alpha in q.classes.multi_big:
        for j in range(1, q.mu(alpha)):
            assert is_central(tab, tab.power(element_C_alpha(tab, alpha), j))
            singles = [tab.power(tab.cycle_class(c), j) for c in special_cycles(q, alpha)]
            assert not any(is_central(tab, x) for x in singles)


@given(configs)
def test_formula_equals_oracle(cfg):
    rep = verify_theorem(cfg)
    assert rep.success, rep.to_text()


@given(configs)
def test_kernel_vectors(cfg):
    tab = table_of(cfg)
    q = tab.quiver
    idem = [tab.index[k] for k in tab.basis if isinstance(k, Idempotent)]
    d = d1_star_matrix(tab)
    assert all(v in (-1, 0, 1) for row in d.matrix.entries for v in row)
    for x in center_kernel(tab):
        assert len({x.coeffs.get(i, 0) for i in idem}) == 1
        assert is_central(tab, x)
    assert len(center_kernel(tab)) == center_dim_formula(cfg, q)


@given(configs, st.sampled_from([2, 3, 5]))
def test_small_prime_fields(cfg, p):
    # field independence is an experiment; every case so far agrees
    tab = table_of(cfg)
    assert center_dim_bruteforce(tab, FieldSpec(p)) == center_dim_formula(cfg)


@given(st.integers(2, 8), st.integers(1, 3), st.integers(0, 10**6))
def test_tree_corollary_random(edges, mult, seed):
    cfg = generate_random_tree(edges, mult, seed)
    value = center_dim_tree_corollary(cfg)
    assert value == center_dim_formula(cfg) == center_dim_bruteforce(table_of(cfg))


@given(configs)
def test_battery_passes(cfg):
    res = run_battery(cfg)
    assert res.ok, res.failures()
