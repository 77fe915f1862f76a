"""Array kernels for table-driven finite-field linear algebra.

Matrices are numpy uint16 arrays whose entries index into a field's
operation tables (see :mod:`mcgquot.ff`); the kernels take those tables as
explicit arguments so they stay plain array functions.

Two interchangeable backends compute the same results:

* ``numba``: @njit loop kernels (default when numba imports cleanly);
* ``numpy``: vectorized table-gather fallback.

Select with the ``MCGQUOT_BACKEND`` environment variable (``numba`` or
``numpy``) or at runtime via :func:`set_backend`.  ``python -m
mcgquot.bench`` compares the two.
"""

from __future__ import annotations

import os

import numpy as np

DTYPE = np.uint16

try:
    from numba import njit

    _NUMBA_AVAILABLE = True
except ImportError:  # pragma: no cover - numba is a declared dependency
    _NUMBA_AVAILABLE = False


# ---------------------------------------------------------------------------
# loop implementations (numba-compilable, also runnable as plain python)

def _mat_mul_loops(a, b, add_t, mul_t):
    n, m = a.shape
    k = b.shape[1]
    out = np.zeros((n, k), dtype=DTYPE)
    for i in range(n):
        for j in range(k):
            acc = DTYPE(0)
            for t in range(m):
                acc = add_t[acc, mul_t[a[i, t], b[t, j]]]
            out[i, j] = acc
    return out


def _batched_mat_mul_loops(a, b, add_t, mul_t):
    bsz, n, m = a.shape
    k = b.shape[2]
    out = np.zeros((bsz, n, k), dtype=DTYPE)
    for s in range(bsz):
        for i in range(n):
            for j in range(k):
                acc = DTYPE(0)
                for t in range(m):
                    acc = add_t[acc, mul_t[a[s, i, t], b[s, t, j]]]
                out[s, i, j] = acc
    return out


def _rref_loops(a, add_t, mul_t, inv_t, neg_t):
    r = a.copy()
    rows, cols = r.shape
    rank = 0
    for c in range(cols):
        piv = -1
        for i in range(rank, rows):
            if r[i, c] != 0:
                piv = i
                break
        if piv < 0:
            continue
        if piv != rank:
            for j in range(cols):
                tmp = r[rank, j]
                r[rank, j] = r[piv, j]
                r[piv, j] = tmp
        inv = inv_t[r[rank, c]]
        for j in range(cols):
            r[rank, j] = mul_t[r[rank, j], inv]
        for i in range(rows):
            if i != rank and r[i, c] != 0:
                f = neg_t[r[i, c]]
                for j in range(cols):
                    r[i, j] = add_t[r[i, j], mul_t[f, r[rank, j]]]
        rank += 1
        if rank == rows:
            break
    return r, rank


# ---------------------------------------------------------------------------
# vectorized numpy implementations

def _mat_mul_numpy(a, b, add_t, mul_t):
    prod = mul_t[a[:, :, None], b[None, :, :]]
    out = prod[:, 0, :]
    for t in range(1, a.shape[1]):
        out = add_t[out, prod[:, t, :]]
    return out.astype(DTYPE)


def _batched_mat_mul_numpy(a, b, add_t, mul_t):
    prod = mul_t[a[:, :, :, None], b[:, None, :, :]]
    out = prod[:, :, 0, :]
    for t in range(1, a.shape[2]):
        out = add_t[out, prod[:, :, t, :]]
    return out.astype(DTYPE)


def _rref_numpy(a, add_t, mul_t, inv_t, neg_t):
    r = a.copy()
    rows, cols = r.shape
    rank = 0
    for c in range(cols):
        nz = np.nonzero(r[rank:, c])[0]
        if nz.size == 0:
            continue
        piv = rank + int(nz[0])
        if piv != rank:
            r[[rank, piv]] = r[[piv, rank]]
        r[rank] = mul_t[r[rank], inv_t[r[rank, c]]]
        col = r[:, c].copy()
        col[rank] = 0
        hit = np.nonzero(col)[0]
        if hit.size:
            factors = neg_t[col[hit]]
            r[hit] = add_t[r[hit], mul_t[factors[:, None], r[rank][None, :]]]
        rank += 1
        if rank == rows:
            break
    return r, rank


_IMPLS = {
    "numpy": {
        "mat_mul": _mat_mul_numpy,
        "batched_mat_mul": _batched_mat_mul_numpy,
        "rref": _rref_numpy,
    }
}

if _NUMBA_AVAILABLE:
    _IMPLS["numba"] = {
        "mat_mul": njit(cache=True)(_mat_mul_loops),
        "batched_mat_mul": njit(cache=True)(_batched_mat_mul_loops),
        "rref": njit(cache=True)(_rref_loops),
    }


def _default_backend() -> str:
    requested = os.environ.get("MCGQUOT_BACKEND", "").strip().lower()
    if requested:
        if requested not in ("numba", "numpy"):
            raise ValueError(f"MCGQUOT_BACKEND must be 'numba' or 'numpy', got {requested!r}")
        if requested == "numba" and not _NUMBA_AVAILABLE:
            raise RuntimeError("MCGQUOT_BACKEND=numba but numba is not importable")
        return requested
    return "numba" if _NUMBA_AVAILABLE else "numpy"


_ACTIVE = _default_backend()


def active_backend() -> str:
    return _ACTIVE


def available_backends() -> tuple[str, ...]:
    return tuple(sorted(_IMPLS))


def set_backend(name: str) -> None:
    """Switch kernel backend at runtime (used by tests and the benchmark)."""
    if name not in _IMPLS:
        raise ValueError(f"unknown backend {name!r}; available: {available_backends()}")
    global _ACTIVE
    _ACTIVE = name


def mat_mul(a, b, tables):
    """Matrix product over the field described by ``tables``."""
    return _IMPLS[_ACTIVE]["mat_mul"](a, b, tables.add, tables.mul)


def batched_mat_mul(a, b, tables):
    """Entrywise-batched matrix product: (B,n,m) x (B,m,k) -> (B,n,k)."""
    return _IMPLS[_ACTIVE]["batched_mat_mul"](a, b, tables.add, tables.mul)


def rref(a, tables):
    """Row-reduced echelon form and rank."""
    return _IMPLS[_ACTIVE]["rref"](a, tables.add, tables.mul, tables.inv, tables.neg)
