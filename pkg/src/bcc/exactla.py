"""Exact linear algebra over the rationals and prime fields.

Rationals use :class:`fractions.Fraction` with sparse row reduction (the
matrices met here are large but have a handful of ``±1`` entries per row).
Prime fields go through the integer kernel in :mod:`bcc._kernels`.
"""

from __future__ import annotations

import os
from dataclasses import dataclass
from fractions import Fraction
from typing import Sequence

import numpy as np

from . import _kernels

__all__ = [
    "ExactMatrix",
    "FieldSpec",
    "QQ",
    "default_field",
    "independent",
    "kernel_basis",
    "rank",
    "rref",
]


def _is_prime(p: int) -> bool:
    if p < 2:
        return False
    i = 2
    while i * i <= p:
        if p % i == 0:
            return False
        i += 1
    return True


@dataclass(frozen=True)
class FieldSpec:
    """``p == 0`` means the rationals, otherwise GF(p)."""

    p: int = 0

    def __post_init__(self):
        if self.p and not _is_prime(self.p):
            raise ValueError(f"{self.p} is not prime")
        if self.p >= 2**31:
            raise ValueError("prime fields are limited to p < 2**31")

    @classmethod
    def parse(cls, text: str) -> "FieldSpec":
        t = text.strip().lower()
        if t in ("q", "qq", "rationals", "0"):
            return cls(0)
        if t.startswith("p="):
            t = t[2:]
        try:
            return cls(int(t))
        except ValueError:
            raise ValueError(f"cannot parse field {text!r}; use 'q' or 'p=<prime>'") from None

    @property
    def is_rational(self) -> bool:
        return self.p == 0

    def __str__(self) -> str:
        return "Q" if self.p == 0 else f"GF({self.p})"


QQ = FieldSpec(0)


def default_field() -> FieldSpec:
    """Field named by ``BCC_FIELD`` or the rationals."""
    env = os.environ.get("BCC_FIELD")
    return FieldSpec.parse(env) if env else QQ


@dataclass
class ExactMatrix:
    """Dense matrix with exact entries (ints or Fractions) over ``field``."""

    entries: list[list]
    cols: int
    field: FieldSpec = QQ

    @classmethod
    def from_rows(cls, rows: Sequence[Sequence], field: FieldSpec = QQ, cols: int | None = None) -> "ExactMatrix":
        rows = [list(r) for r in rows]
        if cols is None:
            cols = len(rows[0]) if rows else 0
        if any(len(r) != cols for r in rows):
            raise ValueError("ragged rows")
        return cls(rows, cols, field)

    @classmethod
    def from_array(cls, a: np.ndarray, field: FieldSpec = QQ) -> "ExactMatrix":
        a = np.asarray(a)
        return cls([[int(x) for x in row] for row in a], a.shape[1], field)

    @property
    def rows(self) -> int:
        return len(self.entries)

    def apply(self, v: Sequence) -> list:
        if len(v) != self.cols:
            raise ValueError("dimension mismatch")
        out = [sum(x * y for x, y in zip(row, v) if x) for row in self.entries]
        if self.field.p:
            out = [_mod(x, self.field.p) for x in out]
        return out


def _mod(x, p: int) -> int:
    x = Fraction(x)
    if x.denominator % p == 0:
        raise ZeroDivisionError(f"{x} has no image in GF({p})")
    return x.numerator * pow(x.denominator, -1, p) % p


def _rref_rational(m: ExactMatrix) -> tuple[dict[int, dict[int, Fraction]], list[int]]:
    """Fully reduced pivot rows keyed by pivot column, plus pivot order."""
    pivots: dict[int, dict[int, Fraction]] = {}
    order: list[int] = []
    for raw in m.entries:
        row = {c: Fraction(x) for c, x in enumerate(raw) if x}
        # reduce against existing pivots until no pivot column remains
        hit = [c for c in row if c in pivots]
        while hit:
            for c in hit:
                f = row.get(c)
                if not f:
                    continue
                for k, x in pivots[c].items():
                    y = row.get(k, 0) - f * x
                    if y:
                        row[k] = y
                    else:
                        row.pop(k, None)
            hit = [c for c in row if c in pivots]
        if not row:
            continue
        lead = min(row)
        inv = 1 / row[lead]
        row = {k: x * inv for k, x in row.items()}
        for c, prow in pivots.items():
            f = prow.get(lead)
            if f:
                for k, x in row.items():
                    y = prow.get(k, 0) - f * x
                    if y:
                        prow[k] = y
                    else:
                        prow.pop(k, None)
        pivots[lead] = row
        order.append(lead)
    return pivots, order


def rref(m: ExactMatrix) -> tuple[dict[int, dict[int, object]], list[int]]:
    """Sparse RREF: ``{pivot column: {column: value}}`` and the sorted pivot columns."""
    if m.field.is_rational:
        pivots, _ = _rref_rational(m)
        return pivots, sorted(pivots)
    if m.rows == 0 or m.cols == 0:
        return {}, []
    p = m.field.p
    a = np.array([[_mod(x, p) for x in row] for row in m.entries], dtype=np.int64)
    red, piv = _kernels.rref_mod_p(a, m.field.p)
    pivots = {}
    for r, c in enumerate(piv):
        nz = np.flatnonzero(red[r])
        pivots[int(c)] = {int(k): int(red[r, k]) for k in nz}
    return pivots, sorted(pivots)


def rank(m: ExactMatrix) -> int:
    return len(rref(m)[1])


def kernel_basis(m: ExactMatrix) -> list[list]:
    """Basis of the right null space, one vector per free column (ascending)."""
    pivots, cols = rref(m)
    pivot_set = set(cols)
    p = m.field.p
    one = 1 if p else Fraction(1)
    zero = 0 if p else Fraction(0)
    out = []
    for free in range(m.cols):
        if free in pivot_set:
            continue
        v = [zero] * m.cols
        v[free] = one
        for c, row in pivots.items():
            x = row.get(free)
            if x:
                v[c] = (-x) % p if p else -x
        out.append(v)
    return out


def independent(vectors: Sequence[Sequence], field: FieldSpec = QQ) -> bool:
    vectors = list(vectors)
    if not vectors:
        return True
    n = len(vectors[0])
    if any(len(v) != n for v in vectors):
        raise ValueError("vectors have different lengths")
    return rank(ExactMatrix.from_rows(vectors, field, n)) == len(vectors)
