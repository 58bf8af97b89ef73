"""Batched kernels over arrays of permutations.

Every exhaustive check over S_n funnels through here: inversion counts,
inversion bitmasks (for weak-order comparisons) and Young-Fibonacci
insertion keys.  Each kernel has a numba implementation and a pure numpy
one with identical results.  Set ``YOUNGFIB_DISABLE_NUMBA=1`` to force the
numpy path; it is also used automatically when numba is not importable.

Permutation arrays are ``(count, n)`` integer arrays holding the letters
``1..n`` in one-line notation.
"""

from __future__ import annotations

import itertools
import os
from functools import lru_cache

import numpy as np

try:  # pragma: no cover - exercised implicitly
    import numba
except ImportError:  # pragma: no cover
    numba = None

HAVE_NUMBA = numba is not None
USE_NUMBA = HAVE_NUMBA and os.environ.get("YOUNGFIB_DISABLE_NUMBA", "") in ("", "0")

# inversion bitmasks live in uint64
MAX_MASK_N = 11


def backend() -> str:
    return "numba" if USE_NUMBA else "numpy"


@lru_cache(maxsize=None)
def all_permutations(n: int) -> np.ndarray:
    """All permutations of ``1..n`` in lexicographic order, shape ``(n!, n)``."""
    if n == 0:
        return np.zeros((1, 0), dtype=np.int64)
    arr = np.array(list(itertools.permutations(range(1, n + 1))), dtype=np.int64)
    arr.setflags(write=False)
    return arr


def pair_bit(i: int, j: int) -> int:
    """Bit index of the value pair ``i < j`` (1-based letters)."""
    return (j - 1) * (j - 2) // 2 + (i - 1)


# ---------------------------------------------------------------- numpy path


def _inversion_counts_numpy(perms: np.ndarray) -> np.ndarray:
    perms = np.asarray(perms)
    n = perms.shape[1]
    out = np.zeros(perms.shape[0], dtype=np.int64)
    for p in range(n):
        for q in range(p + 1, n):
            out += perms[:, p] > perms[:, q]
    return out


def _inversion_masks_numpy(perms: np.ndarray) -> np.ndarray:
    perms = np.asarray(perms, dtype=np.int64)
    n = perms.shape[1]
    out = np.zeros(perms.shape[0], dtype=np.uint64)
    for p in range(n):
        for q in range(p + 1, n):
            left, right = perms[:, p], perms[:, q]
            # (left, right) is an inversion when the larger letter comes first
            hi = np.maximum(left, right)
            lo = np.minimum(left, right)
            bit = ((hi - 1) * (hi - 2) // 2 + (lo - 1)).astype(np.uint64)
            out |= np.where(left > right, np.uint64(1) << bit, np.uint64(0))
    return out


def _insertion_keys_numpy(perms: np.ndarray) -> np.ndarray:
    perms = np.asarray(perms, dtype=np.int64)
    count, n = perms.shape
    rows = np.arange(count)
    matched = np.zeros((count, n + 1), dtype=bool)
    partner = np.zeros((count, n + 1), dtype=np.int64)
    for p in range(n - 1, -1, -1):
        x = perms[:, p]
        free = ~matched[rows, x]
        if p == 0:
            break
        left = perms[:, :p]
        ok = (left > x[:, None]) & ~matched[rows[:, None], left]
        cand = np.where(ok, left, 0).max(axis=1)
        hit = free & (cand > 0)
        hr = rows[hit]
        partner[hr, x[hit]] = cand[hit]
        partner[hr, cand[hit]] = x[hit]
        matched[hr, x[hit]] = True
        matched[hr, cand[hit]] = True
    weights = (n + 1) ** np.arange(n, dtype=np.int64)
    return partner[:, 1:] @ weights


# ---------------------------------------------------------------- numba path

if HAVE_NUMBA:

    @numba.njit(cache=True)
    def _inversion_counts_numba(perms):
        count, n = perms.shape
        out = np.zeros(count, dtype=np.int64)
        for r in range(count):
            s = 0
            for p in range(n):
                for q in range(p + 1, n):
                    if perms[r, p] > perms[r, q]:
                        s += 1
            out[r] = s
        return out

    @numba.njit(cache=True)
    def _inversion_masks_numba(perms):
        count, n = perms.shape
        out = np.zeros(count, dtype=np.uint64)
        for r in range(count):
            m = np.uint64(0)
            for p in range(n):
                for q in range(p + 1, n):
                    a = perms[r, p]
                    b = perms[r, q]
                    if a > b:
                        bit = (a - 1) * (a - 2) // 2 + (b - 1)
                        m |= np.uint64(1) << np.uint64(bit)
            out[r] = m
        return out

    @numba.njit(cache=True)
    def _insertion_keys_numba(perms):
        count, n = perms.shape
        out = np.zeros(count, dtype=np.int64)
        matched = np.zeros(n + 1, dtype=np.bool_)
        partner = np.zeros(n + 1, dtype=np.int64)
        for r in range(count):
            matched[:] = False
            partner[:] = 0
            for p in range(n - 1, 0, -1):
                x = perms[r, p]
                if matched[x]:
                    continue
                best = 0
                for q in range(p):
                    y = perms[r, q]
                    if y > x and y > best and not matched[y]:
                        best = y
                if best > 0:
                    matched[x] = True
                    matched[best] = True
                    partner[x] = best
                    partner[best] = x
            key = 0
            w = 1
            for v in range(1, n + 1):
                key += partner[v] * w
                w *= n + 1
            out[r] = key
        return out

else:  # pragma: no cover
    _inversion_counts_numba = None
    _inversion_masks_numba = None
    _insertion_keys_numba = None


def _as_perm_array(perms) -> np.ndarray:
    arr = np.ascontiguousarray(np.asarray(perms, dtype=np.int64))
    if arr.ndim == 1:
        arr = arr.reshape(1, -1)
    return arr


def inversion_counts(perms) -> np.ndarray:
    """Number of inversions of every row."""
    arr = _as_perm_array(perms)
    if USE_NUMBA:
        return _inversion_counts_numba(arr)
    return _inversion_counts_numpy(arr)


def inversion_masks(perms) -> np.ndarray:
    """Inversion sets as bitmasks; bit ``pair_bit(i, j)`` is set when j precedes i."""
    arr = _as_perm_array(perms)
    if arr.shape[1] > MAX_MASK_N:
        raise ValueError(f"inversion masks support n <= {MAX_MASK_N}, got {arr.shape[1]}")
    if USE_NUMBA:
        return _inversion_masks_numba(arr)
    return _inversion_masks_numpy(arr)


def insertion_keys(perms) -> np.ndarray:
    """Integer key of the Young-Fibonacci insertion tableau of every row.

    The key packs the matching partner of each letter (0 when unmatched) in
    base ``n + 1``.  Two permutations get equal keys exactly when their
    insertion tableaux coincide, since the matching determines the tableau.
    """
    arr = _as_perm_array(perms)
    if arr.shape[1] > 15:
        raise ValueError("insertion keys overflow int64 beyond n = 15")
    if USE_NUMBA:
        return _insertion_keys_numba(arr)
    return _insertion_keys_numpy(arr)


def submask_matrix(lower: np.ndarray, upper: np.ndarray) -> np.ndarray:
    """Boolean matrix ``M[a, b]`` true when ``lower[a]`` is a subset of ``upper[b]``."""
    lower = np.asarray(lower, dtype=np.uint64)
    upper = np.asarray(upper, dtype=np.uint64)
    return (lower[:, None] & ~upper[None, :]) == 0
