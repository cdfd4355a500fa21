# cython: boundscheck=False, wraparound=False, cdivision=True
"""Compiled kernels: codeword weights over a GF(2) span and the nested-support scan."""

import numpy as np

from libc.stdint cimport int64_t, uint64_t
from libc.stdlib cimport calloc, free

cdef extern from *:
    int __builtin_popcountll(unsigned long long) nogil
    int __builtin_ctzll(unsigned long long) nogil


def span_weights(const uint64_t[:, ::1] rows):
    """Hamming weight of every XOR combination of ``rows``, indexed by selection mask."""
    cdef Py_ssize_t r = rows.shape[0], nwords = rows.shape[1]
    if r > 40:
        raise ValueError("too many rows")
    cdef Py_ssize_t total = (<Py_ssize_t>1) << r
    out = np.zeros(total, dtype=np.int64)
    cdef int64_t[::1] w = out
    cdef uint64_t* acc = <uint64_t*>calloc(nwords if nwords > 0 else 1, sizeof(uint64_t))
    if acc == NULL:
        raise MemoryError()
    cdef Py_ssize_t g, j, bit
    cdef int64_t s
    try:
        with nogil:
            for g in range(1, total):
                bit = __builtin_ctzll(<unsigned long long>g)
                s = 0
                for j in range(nwords):
                    acc[j] ^= rows[bit, j]
                    s += __builtin_popcountll(acc[j])
                w[g ^ (g >> 1)] = s
    finally:
        free(acc)
    return out


def nested_pair(const int64_t[::1] weights, int64_t lower_bound=0):
    """Find nonzero masks ``(i, j)``, i != j, whose codeword supports nest (i inside j).

    ``weights`` must come from an independent basis.  Only targets ``j`` with
    weight at least ``lower_bound`` are examined.  Returns None if none exist.
    """
    cdef Py_ssize_t total = weights.shape[0]
    cdef Py_ssize_t i, j
    cdef int64_t wj
    cdef Py_ssize_t fi = -1, fj = -1
    with nogil:
        for j in range(1, total):
            wj = weights[j]
            if wj < lower_bound:
                continue
            for i in range(1, total):
                if i != j and weights[i] + weights[i ^ j] == wj:
                    fi = i
                    fj = j
                    break
            if fi >= 0:
                break
    if fi < 0:
        return None
    return int(fi), int(fj)
