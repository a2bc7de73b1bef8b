# cython: boundscheck=False, wraparound=False, cdivision=True
"""Compiled kernels for windowed pair counting and generalized-match sums."""

from libc.stdint cimport int64_t

import numpy as np

BACKEND = "compiled"


def total_window_pairs(starts, int window):
    cdef const int64_t[::1] s = np.ascontiguousarray(starts, dtype=np.int64)
    cdef int64_t total = 0
    cdef Py_ssize_t d
    cdef int64_t n, k, span
    for d in range(s.shape[0] - 1):
        n = s[d + 1] - s[d]
        span = window if window < n - 1 else n - 1
        for k in range(1, span + 1):
            total += n - k
    return int(total)


def pair_keys(ids, starts, int window):
    """Packed (first << 32 | second) keys for every ordered instance pair
    at distance 1..window within a document, in stream order."""
    cdef const int64_t[::1] v = np.ascontiguousarray(ids, dtype=np.int64)
    cdef const int64_t[::1] s = np.ascontiguousarray(starts, dtype=np.int64)
    out_arr = np.empty(total_window_pairs(starts, window), dtype=np.int64)
    cdef int64_t[::1] out = out_arr
    cdef Py_ssize_t pos = 0
    cdef Py_ssize_t d, i, j, lo, hi, jmax
    cdef int64_t first
    for d in range(s.shape[0] - 1):
        lo = s[d]
        hi = s[d + 1]
        for i in range(lo, hi):
            first = v[i] << 32
            jmax = i + window
            if jmax > hi - 1:
                jmax = hi - 1
            for j in range(i + 1, jmax + 1):
                out[pos] = first | v[j]
                pos += 1
    return out_arr


cdef inline bint _matches(int64_t d, int64_t p, int64_t qd, int64_t qp) nogil:
    if qd != 0 and d == qd:
        return True
    if qp != 0 and p == qp:
        return True
    return qd == 0 and qp == 0 and d == 0 and p == 0


def match_sum(dobj, prt, counts, q_dobj, q_prt):
    cdef const int64_t[::1] d = np.ascontiguousarray(dobj, dtype=np.int64)
    cdef const int64_t[::1] p = np.ascontiguousarray(prt, dtype=np.int64)
    cdef const int64_t[::1] c = np.ascontiguousarray(counts, dtype=np.int64)
    cdef int64_t qd = q_dobj, qp = q_prt
    cdef int64_t total = 0
    cdef Py_ssize_t i
    with nogil:
        for i in range(d.shape[0]):
            if _matches(d[i], p[i], qd, qp):
                total += c[i]
    return int(total)


def pair_match_sum(d1, p1, d2, p2, counts, qd1, qp1, qd2, qp2):
    cdef const int64_t[::1] a = np.ascontiguousarray(d1, dtype=np.int64)
    cdef const int64_t[::1] b = np.ascontiguousarray(p1, dtype=np.int64)
    cdef const int64_t[::1] e = np.ascontiguousarray(d2, dtype=np.int64)
    cdef const int64_t[::1] f = np.ascontiguousarray(p2, dtype=np.int64)
    cdef const int64_t[::1] c = np.ascontiguousarray(counts, dtype=np.int64)
    cdef int64_t x1 = qd1, y1 = qp1, x2 = qd2, y2 = qp2
    cdef int64_t total = 0
    cdef Py_ssize_t i
    with nogil:
        for i in range(a.shape[0]):
            if _matches(a[i], b[i], x1, y1) and _matches(e[i], f[i], x2, y2):
                total += c[i]
    return int(total)
