"""Integer kernels: structure-constant table, associativity sweep, RREF mod p.

Each kernel has a numba ``@njit`` implementation and a pure-numpy fallback.
The backend is chosen by the ``BCC_BACKEND`` environment variable
(``numba`` or ``numpy``); it defaults to numba when it can be imported.
:func:`set_backend` switches at runtime (tests and benchmarks use it).
"""

from __future__ import annotations

import os

import numpy as np

try:
    from numba import njit

    HAVE_NUMBA = True
except ImportError:  # pragma: no cover - numba is a declared dependency
    HAVE_NUMBA = False

    def njit(*args, **kwargs):
        def wrap(fn):
            return fn

        return wrap if not (args and callable(args[0])) else args[0]


KIND_IDEMPOTENT, KIND_PREFIX, KIND_SOCLE = 0, 1, 2

_backend = os.environ.get("BCC_BACKEND", "numba" if HAVE_NUMBA else "numpy").strip().lower()
if _backend not in ("numba", "numpy"):
    raise ValueError(f"BCC_BACKEND must be 'numba' or 'numpy', got {_backend!r}")
if _backend == "numba" and not HAVE_NUMBA:
    _backend = "numpy"


def get_backend() -> str:
    return _backend


def set_backend(name: str) -> None:
    global _backend
    if name not in ("numba", "numpy"):
        raise ValueError(name)
    if name == "numba" and not HAVE_NUMBA:
        raise RuntimeError("numba is not available")
    _backend = name


# ---------------------------------------------------------------------------
# multiplication table
# ---------------------------------------------------------------------------


@njit(cache=True)
def _product_table_numba(kind, src, tgt, owner, pos, length, cyc, top, base, socle_at):
    n = kind.shape[0]
    out = np.full((n, n), -1, dtype=np.int64)
    for i in range(n):
        for j in range(n):
            if kind[i] == 0:
                if src[j] == src[i]:
                    out[i, j] = j
            elif kind[j] == 0:
                if tgt[i] == src[j]:
                    out[i, j] = i
            elif kind[i] == 1 and kind[j] == 1:
                if owner[i] == owner[j] and pos[j] == (pos[i] + length[i]) % cyc[i]:
                    total = length[i] + length[j]
                    if total < top[i]:
                        out[i, j] = base[i] + total - 1
                    elif total == top[i]:
                        out[i, j] = socle_at[src[i]]
    return out


def _product_table_numpy(kind, src, tgt, owner, pos, length, cyc, top, base, socle_at):
    n = kind.shape[0]
    out = np.full((n, n), -1, dtype=np.int64)
    ki, kj = kind[:, None], kind[None, :]
    idx_i = np.broadcast_to(np.arange(n)[:, None], (n, n))
    idx_j = np.broadcast_to(np.arange(n)[None, :], (n, n))

    total = length[:, None] + length[None, :]
    chain = (
        (ki == KIND_PREFIX)
        & (kj == KIND_PREFIX)
        & (owner[:, None] == owner[None, :])
        & (pos[None, :] == (pos[:, None] + length[:, None]) % np.maximum(cyc[:, None], 1))
    )
    top_i = top[:, None]
    out = np.where(chain & (total < top_i), base[:, None] + total - 1, out)
    out = np.where(chain & (total == top_i), socle_at[src][:, None], out)
    right_unit = (kj == KIND_IDEMPOTENT) & (tgt[:, None] == src[None, :])
    out = np.where(right_unit, idx_i, out)
    left_unit = (ki == KIND_IDEMPOTENT) & (src[:, None] == src[None, :])
    out = np.where(left_unit, idx_j, out)
    out = np.where((ki == KIND_IDEMPOTENT) & ~left_unit, -1, out)
    return out


def product_table(kind, src, tgt, owner, pos, length, cyc, top, base, socle_at) -> np.ndarray:
    """``out[i, j]`` is the basis index of ``b_i * b_j`` or -1 for zero."""
    args = [np.ascontiguousarray(a, dtype=np.int64) for a in (kind, src, tgt, owner, pos, length, cyc, top, base, socle_at)]
    if _backend == "numba":
        return _product_table_numba(*args)
    return _product_table_numpy(*args)


# ---------------------------------------------------------------------------
# associativity
# ---------------------------------------------------------------------------


@njit(cache=True)
def _associativity_defects_numba(prod):
    n = prod.shape[0]
    bad = 0
    for i in range(n):
        for j in range(n):
            a = prod[i, j]
            for k in range(n):
                b = prod[j, k]
                lhs = prod[a, k] if a >= 0 else -1
                rhs = prod[i, b] if b >= 0 else -1
                if lhs != rhs:
                    bad += 1
    return bad


def _associativity_defects_numpy(prod):
    n = prod.shape[0]
    padded = np.full((n + 1, n + 1), n, dtype=np.int64)
    padded[:n, :n] = np.where(prod >= 0, prod, n)
    bad = 0
    for i in range(n):
        lhs = padded[padded[i, :n], :n]  # (b_i b_j) b_k
        rhs = padded[i, padded[:n, :n]]  # b_i (b_j b_k)
        bad += int(np.count_nonzero(lhs != rhs))
    return bad


def associativity_defects(prod: np.ndarray) -> int:
    """Number of triples ``(i, j, k)`` with ``(b_i b_j) b_k != b_i (b_j b_k)``."""
    prod = np.ascontiguousarray(prod, dtype=np.int64)
    if _backend == "numba":
        return int(_associativity_defects_numba(prod))
    return _associativity_defects_numpy(prod)


# ---------------------------------------------------------------------------
# row reduction over GF(p)
# ---------------------------------------------------------------------------


@njit(cache=True)
def _inv_mod(a, p):
    result, base, e = 1, a % p, p - 2
    while e > 0:
        if e & 1:
            result = result * base % p
        base = base * base % p
        e >>= 1
    return result


@njit(cache=True)
def _rref_mod_p_numba(a, p):
    m, n = a.shape
    pivots = np.full(n, -1, dtype=np.int64)
    r = 0
    for c in range(n):
        if r == m:
            break
        piv = -1
        for i in range(r, m):
            if a[i, c] != 0:
                piv = i
                break
        if piv < 0:
            continue
        if piv != r:
            for k in range(n):
                t = a[r, k]
                a[r, k] = a[piv, k]
                a[piv, k] = t
        inv = _inv_mod(a[r, c], p)
        for k in range(n):
            a[r, k] = a[r, k] * inv % p
        for i in range(m):
            if i != r and a[i, c] != 0:
                f = a[i, c]
                for k in range(n):
                    a[i, k] = (a[i, k] - f * a[r, k]) % p
        pivots[r] = c
        r += 1
    return a, pivots[:r]


def _rref_mod_p_numpy(a, p):
    m, n = a.shape
    pivots = []
    r = 0
    for c in range(n):
        if r == m:
            break
        nz = np.flatnonzero(a[r:, c])
        if nz.size == 0:
            continue
        piv = r + int(nz[0])
        if piv != r:
            a[[r, piv]] = a[[piv, r]]
        a[r] = a[r] * pow(int(a[r, c]), p - 2, p) % p
        f = a[:, c].copy()
        f[r] = 0
        rows = np.flatnonzero(f)
        if rows.size:
            a[rows] = (a[rows] - np.outer(f[rows], a[r])) % p
        pivots.append(c)
        r += 1
    return a, np.array(pivots, dtype=np.int64)


def rref_mod_p(a: np.ndarray, p: int) -> tuple[np.ndarray, np.ndarray]:
    """Reduced row echelon form of ``a`` over GF(p) and its pivot columns.

    First-nonzero pivoting; ``p`` must be below 2**31 so products fit in int64.
    """
    if not 2 <= p < 2**31:
        raise ValueError("prime must satisfy 2 <= p < 2**31")
    work = np.array(a, dtype=np.int64) % p
    if work.ndim != 2:
        raise ValueError("expected a 2-d array")
    if work.size == 0:
        return work, np.zeros(0, dtype=np.int64)
    if _backend == "numba":
        return _rref_mod_p_numba(work, np.int64(p))
    return _rref_mod_p_numpy(work, p)
