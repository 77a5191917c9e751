"""Damerau-Levenshtein cost-matrix kernels.

Two interchangeable implementations of the same DP (unit costs, adjacent
transposition): a numba-jitted nested loop and a vectorized pure-numpy
fallback. Set LTGEC_DISABLE_NUMBA=1 to force the numpy path; it is also used
automatically when numba is unavailable.
"""

from __future__ import annotations

import os

import numpy as np

_ENV_FLAG = "LTGEC_DISABLE_NUMBA"


def _dl_matrix_loops(a, b):
    n = a.shape[0]
    m = b.shape[0]
    d = np.empty((n + 1, m + 1), np.int32)
    for j in range(m + 1):
        d[0, j] = j
    for i in range(1, n + 1):
        d[i, 0] = i
        ai = a[i - 1]
        for j in range(1, m + 1):
            cost = d[i - 1, j - 1] + (ai != b[j - 1])
            up = d[i - 1, j] + 1
            if up < cost:
                cost = up
            left = d[i, j - 1] + 1
            if left < cost:
                cost = left
            if i > 1 and j > 1 and ai == b[j - 2] and a[i - 2] == b[j - 1]:
                tr = d[i - 2, j - 2] + 1
                if tr < cost:
                    cost = tr
            d[i, j] = cost
    return d


def dl_matrix_numpy(a: np.ndarray, b: np.ndarray) -> np.ndarray:
    """Row-vectorized DP. The insertion recurrence row[j] = min(v[j],
    row[j-1]+1) unrolls to j + running_min(v[k]-k), which numpy can
    accumulate."""
    n = a.shape[0]
    m = b.shape[0]
    d = np.empty((n + 1, m + 1), np.int32)
    idx = np.arange(m + 1, dtype=np.int32)
    d[0] = idx
    full = np.empty(m + 1, np.int32)
    for i in range(1, n + 1):
        prev = d[i - 1]
        v = prev[:m] + (b != a[i - 1])
        np.minimum(v, prev[1:] + 1, out=v)
        if i >= 2 and m >= 2:
            tmask = (b[1:] == a[i - 2]) & (b[:-1] == a[i - 1])
            v[1:] = np.where(tmask, np.minimum(v[1:], d[i - 2, :m - 1] + 1), v[1:])
        full[0] = i
        full[1:] = v
        np.subtract(full, idx, out=full)
        np.minimum.accumulate(full, out=full)
        np.add(full, idx, out=full)
        d[i] = full
    return d


_numba_matrix = None
if not os.environ.get(_ENV_FLAG):
    try:
        from numba import njit

        _numba_matrix = njit(cache=True)(_dl_matrix_loops)
    except ImportError:
        _numba_matrix = None


def active_backend() -> str:
    return "numba" if _numba_matrix is not None else "numpy"


def dl_matrix(a: np.ndarray, b: np.ndarray) -> np.ndarray:
    if _numba_matrix is not None:
        return _numba_matrix(a, b)
    return dl_matrix_numpy(a, b)
