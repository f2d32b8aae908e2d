from fractions import Fraction

import numpy as np
import pytest
from hypothesis import given
from hypothesis import strategies as st

from bcc.exactla import QQ, ExactMatrix, FieldSpec, default_field, independent, kernel_basis, rank, rref


def m(rows, field=QQ):
    return ExactMatrix.from_rows(rows, field)


def test_rank_examples():
    assert rank(m([[1, 0, 0], [0, 1, 0], [0, 0, 1]])) == 3
    assert rank(ExactMatrix.from_rows([[0] * 7] * 4)) == 0
    assert rank(m([[1, 2], [2, 4]])) == 1


def test_kernel_examples():
    assert kernel_basis(m([[1, 0], [0, 1]])) == []
    assert len(kernel_basis(ExactMatrix.from_rows([[0] * 3] * 2))) == 3
    mat = m([[1, 1, 0]])
    ker = kernel_basis(mat)
    assert len(ker) == 2 and independent(ker)
    assert all(not any(mat.apply(v)) for v in ker)


def test_independent_examples():
    assert independent([(1, 0), (0, 1)])
    assert not independent([(1, 1), (2, 2)])
    assert independent([])
    with pytest.raises(ValueError):
        independent([(1, 0), (1, 0, 0)])


def test_rational_entries_exact():
    mat = m([[Fraction(1, 3), Fraction(2, 3)], [1, 2]])
    assert rank(mat) == 1
    (v,) = kernel_basis(mat)
    assert v == [Fraction(-2), Fraction(1)]


def test_rref_is_reduced():
    pivots, cols = rref(m([[0, 2, 4], [1, 1, 1], [1, 3, 5]]))
    assert cols == [0, 1]
    assert pivots[0] == {0: 1, 2: -1} and pivots[1] == {1: 1, 2: 2}


def test_prime_field():
    f = FieldSpec(5)
    assert str(f) == "GF(5)" and str(QQ) == "Q"
    # rank drops mod 5
    assert rank(m([[1, 2], [3, 1]])) == 2
    assert rank(m([[1, 2], [3, 1]], f)) == 1
    ker = kernel_basis(m([[1, 2], [3, 1]], f))
    assert ker == [[3, 1]]
    # fractions map through the inverse mod p
    assert rank(m([[Fraction(1, 2), 1]], f)) == 1


def test_field_parse():
    assert FieldSpec.parse("q") == QQ
    assert FieldSpec.parse("p=7") == FieldSpec(7)
    assert FieldSpec.parse("11") == FieldSpec(11)
    for bad in ("p=4", "x", "p=1"):
        with pytest.raises(ValueError):
            FieldSpec.parse(bad)


def test_default_field(monkeypatch):
    monkeypatch.delenv("BCC_FIELD", raising=False)
    assert default_field() == QQ
    monkeypatch.setenv("BCC_FIELD", "p=3")
    assert default_field() == FieldSpec(3)


def test_apply_mismatch():
    with pytest.raises(ValueError):
        m([[1, 2]]).apply([1])
    with pytest.raises(ValueError):
        ExactMatrix.from_rows([[1, 2], [1]])


small = st.integers(1, 7).flatmap(
    lambda cols: st.lists(st.lists(st.integers(-1, 1), min_size=cols, max_size=cols), min_size=1, max_size=8)
)


@given(small)
def test_rank_plus_nullity(rows):
    mat = m(rows)
    ker = kernel_basis(mat)
    assert rank(mat) + len(ker) == mat.cols
    assert all(not any(mat.apply(v)) for v in ker)
    assert independent(ker) if ker else True


@given(small)
def test_rank_matches_numpy(rows):
    assert rank(m(rows)) == np.linalg.matrix_rank(np.array(rows, dtype=float))


@given(small, st.sampled_from([10007, 1000003]))
def test_rank_large_prime_equals_rational(rows, p):
    # {0,±1} matrices this small have minors far below p
    assert rank(m(rows, FieldSpec(p))) == rank(m(rows))


@given(small, st.sampled_from([2, 3, 5]))
def test_prime_kernel_annihilated(rows, p):
    mat = m(rows, FieldSpec(p))
    ker = kernel_basis(mat)
    assert rank(mat) + len(ker) == mat.cols
    assert all(not any(mat.apply(v)) for v in ker)
