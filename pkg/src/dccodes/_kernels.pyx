# cython: language_level=3, boundscheck=False, wraparound=False, cdivision=True
"""Compiled inner loops.  Same signatures as :mod:`dccodes._fallback`."""

import numpy as np
cimport numpy as cnp

cnp.import_array()


def weight_counts(const int[::1] indptr, const int[::1] indices,
                  const int[::1] values, const int[::1] base,
                  const int[:, ::1] add, int p):
    """Weight histogram of ``base + span_GF(p)(rows)``.

    Rows are given in CSR form over field reps.  Combinations are visited in
    modular p-ary Gray order, so each step adds exactly one row.
    """
    cdef Py_ssize_t K = indptr.shape[0] - 1
    cdef Py_ssize_t L = base.shape[0]
    cdef Py_ssize_t j, c, k
    cdef long long step, total = 1
    cdef int old, new, weight = 0
    for j in range(K):
        total *= p
    counts = np.zeros(L + 1, dtype=np.int64)
    cdef long long[::1] cv = counts
    word_arr = np.array(base, dtype=np.int32)
    cdef int[::1] w = word_arr
    digit_arr = np.zeros(K + 1, dtype=np.int32)
    cdef int[::1] digit = digit_arr
    for c in range(L):
        if w[c] != 0:
            weight += 1
    with nogil:
        cv[weight] += 1
        for step in range(1, total):
            j = 0
            while digit[j] == p - 1:
                digit[j] = 0
                j += 1
            digit[j] += 1
            for k in range(indptr[j], indptr[j + 1]):
                c = indices[k]
                old = w[c]
                new = add[old, values[k]]
                w[c] = new
                weight += (new != 0) - (old != 0)
            cv[weight] += 1
    return counts


def self_dual_scan(int n, int q, const int[:, ::1] mul,
                   const int[:, ::1] add, int minus_one):
    """Encodings sum a_i q^i of all a with a(x)a(x^-1) = -1 mod x^n - 1."""
    cdef long long total = 1, idx
    cdef Py_ssize_t i, k
    cdef int acc, ok
    for i in range(n):
        total *= q
    a_arr = np.zeros(n, dtype=np.int32)
    cdef int[::1] a = a_arr
    hits = []
    for idx in range(total):
        if idx:
            i = 0
            while a[i] == q - 1:
                a[i] = 0
                i += 1
            a[i] += 1
        with nogil:
            acc = 0
            for i in range(n):
                acc = add[acc, mul[a[i], a[i]]]
            ok = acc == minus_one
            k = 1
            while ok and k <= n // 2:
                acc = 0
                for i in range(n):
                    acc = add[acc, mul[a[i], a[(i + k) % n]]]
                ok = acc == 0
                k += 1
        if ok:
            hits.append(idx)
    return np.array(hits, dtype=np.int64)
