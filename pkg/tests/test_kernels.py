from contextlib import contextmanager

import numpy as np
import pytest
from hypothesis import given
from hypothesis import strategies as st

from bcc import _kernels
from bcc.algebra import build_table
from bcc.configuration import generate_random
from bcc.quiver import build_quiver

configs = st.builds(generate_random, st.integers(1, 5), st.integers(2, 4), st.integers(1, 3), st.integers(0, 10**6))


@contextmanager
def backend(name):
    before = _kernels.get_backend()
    _kernels.set_backend(name)
    try:
        yield
    finally:
        _kernels.set_backend(before)


def with_backend(name, fn):
    with backend(name):
        return fn()


@given(configs)
def test_product_tables_agree(cfg):
    q = build_quiver(cfg)
    a = with_backend("numba", lambda: build_table(q).product)
    b = with_backend("numpy", lambda: build_table(q).product)
    assert np.array_equal(a, b)


@given(configs)
def test_associativity_counts_agree(cfg):
    prod = build_table(build_quiver(cfg)).product
    a = with_backend("numba", lambda: _kernels.associativity_defects(prod))
    b = with_backend("numpy", lambda: _kernels.associativity_defects(prod))
    assert a == b == 0


def test_associativity_detects_defects():
    # b0*b0 = b1, b1*b0 = b1, b0*b1 = -1 (zero): (b0 b0) b0 = b1 but b0 (b0 b0) = 0
    prod = np.array([[1, -1], [1, -1]], dtype=np.int64)
    counts = {with_backend(n, lambda: _kernels.associativity_defects(prod)) for n in ("numba", "numpy")}
    assert len(counts) == 1 and counts.pop() > 0


@given(
    st.integers(1, 6).flatmap(lambda n: st.lists(st.lists(st.integers(-3, 3), min_size=n, max_size=n), min_size=1, max_size=7)),
    st.sampled_from([2, 3, 7, 1000003]),
)
def test_rref_mod_p_agree(rows, p):
    a = np.array(rows, dtype=np.int64)
    r1, p1 = with_backend("numba", lambda: _kernels.rref_mod_p(a, p))
    r2, p2 = with_backend("numpy", lambda: _kernels.rref_mod_p(a, p))
    assert np.array_equal(r1, r2) and np.array_equal(p1, p2)
    # input untouched
    assert np.array_equal(a, np.array(rows))


def test_rref_mod_p_bounds():
    with pytest.raises(ValueError):
        _kernels.rref_mod_p(np.eye(2, dtype=np.int64), 2**31 + 11)


def test_set_backend_validates():
    with pytest.raises(ValueError):
        _kernels.set_backend("cuda")
    with backend("numpy"):
        assert _kernels.get_backend() == "numpy"
