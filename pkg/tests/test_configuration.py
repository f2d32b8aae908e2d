import pytest
from hypothesis import given
from hypothesis import strategies as st

from bcc.configuration import (
    BrauerConfig,
    ConfigSyntaxError,
    classify_vertices,
    generate_random,
    generate_random_tree,
    is_brauer_tree,
    is_connected,
    is_reduced,
    occ,
    parse_config,
    serialize,
    val,
    validate,
)
from bcc.families import cycle, example, self_loop, square, two5, two_gon

SQUARE_TEXT = """
# triangle with a pendant edge
vertex 1
vertex 2
vertex 3
vertex 4
polygon V1 : 1 3
polygon V2 : 2 3
polygon V3 : 1 2
polygon V4 : 1 4
order 1 : V1 V3 V4
order 2 : V3 V2
order 3 : V1 V2
"""


def test_parse_square_text():
    cfg = parse_config(SQUARE_TEXT)
    assert len(cfg.vertices) == 4 and len(cfg.polygons) == 4
    assert cfg == square()
    assert validate(cfg).ok


def test_parse_self_loop_text():
    cfg = parse_config("vertex 1 mult 3\npolygon V : 1 1\norder 1 : V V\n")
    assert occ(cfg, "1", "V") == 2
    assert cfg.mu("1") == 3
    assert cfg == self_loop(3)


@pytest.mark.parametrize(
    "text",
    [
        "",
        "# only a comment\n",
        "vertex 1 mult\n",
        "vertex 1 mult 0\n",
        "vertex 1\nvertex 1\n",
        "vertex 1\npolygon V : 1 1\npolygon V : 1 1\n",
        "vertex 1\npolygon V : 1 2\n",
        "vertex 1\npolygon V : 1 1\norder 1 : W\n",
        "vertex 1\npolygon V 1 1\n",
        "edge 1 2\n",
    ],
)
def test_parse_errors(text):
    with pytest.raises(ConfigSyntaxError):
        parse_config(text)


def test_syntax_error_carries_line():
    with pytest.raises(ConfigSyntaxError) as info:
        parse_config("vertex a\n\nvertex a\n")
    assert info.value.line == 3


def test_validate_square_ok():
    assert validate(square()).ok


def test_validate_singleton_polygon_c2():
    cfg = BrauerConfig.from_parts({"1": 2, "2": 1}, {"V": ["1"], "W": ["1", "2"]}, {"1": ["V", "W"]})
    assert "C2" in validate(cfg).codes()


def test_validate_all_truncated_c3():
    cfg = BrauerConfig.from_parts({"a": 1, "b": 1}, {"V": ["a", "b"]}, {})
    assert validate(cfg).codes() == {"C3"}


def test_validate_unused_vertex_c1():
    cfg = BrauerConfig.from_parts({"a": 2, "b": 1, "z": 1}, {"V": ["a", "b"]}, {})
    assert "C1" in validate(cfg).codes()


def test_validate_order_mismatch_and_missing():
    cfg = parse_config("vertex a\npolygon V : a a\npolygon W : a a\norder a : V V W\n")
    assert "order" in validate(cfg).codes()
    cfg = parse_config("vertex a\npolygon V : a a\n")
    assert "order-missing" in validate(cfg).codes()


def test_val_one_order_line_optional():
    cfg = parse_config("vertex a mult 2\nvertex t\npolygon V : a t\norder a : V\n")
    assert validate(cfg).ok
    assert cfg == two_gon()


def test_occ_and_val():
    t = two5()
    assert occ(t, "a", "V") == occ(t, "a", "W") == 5
    assert val(t, "a") == 10
    sq = square()
    assert occ(sq, "1", "V2") == 0
    assert val(sq, "4") == 1
    assert val(sq, "1") == 3
    assert occ(self_loop(2), "1", "V") == 2
    with pytest.raises(KeyError):
        occ(sq, "9", "V1")
    with pytest.raises(KeyError):
        val(sq, "9")


def test_classify():
    c = classify_vertices(square())
    assert c.truncated == {"4"} and c.multi_one == {"1", "2", "3"}
    assert not c.multi_big and not c.val_one_mult_big
    c = classify_vertices(two_gon())
    assert c.val_one_mult_big == {"a"} and c.truncated == {"t"}
    c = classify_vertices(cycle(3, 2))
    assert c.multi_big == {"0", "1", "2"}
    assert not (c.truncated | c.val_one_mult_big | c.multi_one)


def test_reduced():
    assert is_reduced(square())
    assert is_reduced(two_gon())
    cfg = parse_config("vertex 1 mult 2\nvertex 2 mult 2\nvertex t\npolygon V : 1 2 t\n")
    assert validate(cfg).ok and not is_reduced(cfg)


def test_connected():
    assert is_connected(square())
    assert all(is_connected(cycle(m, 2)) for m in range(2, 6))
    two = parse_config("vertex x mult 2\nvertex y mult 2\npolygon V : x x\npolygon W : y y\norder x : V V\norder y : W W\n")
    assert validate(two).ok and not is_connected(two)


def test_brauer_tree():
    assert is_brauer_tree(two_gon())
    assert not is_brauer_tree(square())
    assert not is_brauer_tree(self_loop(2))
    assert is_brauer_tree(generate_random_tree(5, 3, 1))


def test_canonical_rotation_is_rotation_invariant():
    a = parse_config("vertex 1\nvertex 2\npolygon A : 1 2\npolygon B : 1 2\npolygon C : 1 2\norder 1 : B C A\norder 2 : A B C\n")
    b = parse_config("vertex 1\nvertex 2\npolygon A : 1 2\npolygon B : 1 2\npolygon C : 1 2\norder 1 : A B C\norder 2 : C A B\n")
    assert a == b
    assert a.orders["1"] == ("A", "B", "C")


def test_generate_small_cases():
    cfg = generate_random(1, 2, 3, seed=5)
    assert validate(cfg).ok and len(cfg.polygons) == 1 and cfg.polygons[0].size == 2
    assert validate(generate_random(4, 4, 2, seed=42)).ok


def test_generate_deterministic():
    assert generate_random(4, 4, 2, seed=42) == generate_random(4, 4, 2, seed=42)
    assert generate_random_tree(6, 3, 9) == generate_random_tree(6, 3, 9)


def test_generate_bad_params():
    with pytest.raises(ValueError):
        generate_random(0, 3, 2, seed=1)
    with pytest.raises(ValueError):
        generate_random(2, 1, 2, seed=1)


configs = st.builds(
    generate_random,
    st.integers(1, 6),
    st.integers(2, 5),
    st.integers(1, 3),
    st.integers(0, 10**6),
)


@given(configs)
def test_generated_configs_satisfy_hypotheses(cfg):
    assert validate(cfg).ok and is_reduced(cfg) and is_connected(cfg)


@given(configs)
def test_parse_serialize_round_trip(cfg):
    assert parse_config(serialize(cfg)) == cfg


@given(configs)
def test_val_is_sum_of_occ(cfg):
    for v in cfg.vertices:
        assert val(cfg, v) == sum(p.members.count(v) for p in cfg.polygons)


@given(configs)
def test_classification_is_partition(cfg):
    c = classify_vertices(cfg)
    parts = [c.truncated, c.val_one_mult_big, c.multi_big, c.multi_one]
    assert sum(len(p) for p in parts) == len(cfg.vertices)
    assert set().union(*parts) == set(cfg.vertices)
    assert c.val_big == {v for v in cfg.vertices if val(cfg, v) > 1}


@pytest.mark.parametrize("name", ["square", "cycle:4,2", "self:3", "two5", "2gon", "2gon:4"])
def test_named_examples_round_trip(name):
    cfg = example(name)
    assert validate(cfg).ok
    assert parse_config(serialize(cfg)) == cfg


def test_unknown_example():
    with pytest.raises(ValueError):
        example("pentagon")
