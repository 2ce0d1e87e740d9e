"""Vectorized numpy versions of the compiled kernels.

Used when the extension module is not built, or when
``DCCODES_BACKEND=python`` is set.  Signatures match ``_kernels``.
"""

import numpy as np

CHUNK = 1 << 14


def _base_digits(idx: np.ndarray, base: int, width: int) -> np.ndarray:
    out = np.empty((idx.shape[0], width), dtype=np.int64)
    x = idx.copy()
    for j in range(width):
        out[:, j] = x % base
        x //= base
    return out


def weight_counts(indptr, indices, values, base, add, p):
    indptr = np.asarray(indptr)
    indices = np.asarray(indices)
    values = np.asarray(values)
    base = np.asarray(base, dtype=np.int64)
    add = np.asarray(add)
    K = indptr.shape[0] - 1
    L = base.shape[0]
    q = add.shape[0]
    m = 1
    while p**m < q:
        m += 1

    # a rep's base-p digits add independently mod p
    def digits(reps):
        return _base_digits(np.asarray(reps, dtype=np.int64).ravel(), p, m).reshape(
            np.shape(reps) + (m,)
        )

    gens = np.zeros((K, L), dtype=np.int64)
    for j in range(K):
        gens[j, indices[indptr[j]:indptr[j + 1]]] = values[indptr[j]:indptr[j + 1]]
    G = digits(gens).reshape(K, L * m)
    b = digits(base).reshape(L * m)

    counts = np.zeros(L + 1, dtype=np.int64)
    total = p**K
    for start in range(0, total, CHUNK):
        idx = np.arange(start, min(start + CHUNK, total), dtype=np.int64)
        coeffs = _base_digits(idx, p, K)
        words = (coeffs @ G + b) % p
        weights = words.reshape(-1, L, m).any(axis=2).sum(axis=1)
        counts += np.bincount(weights, minlength=L + 1)
    return counts


def self_dual_scan(n, q, mul, add, minus_one):
    mul = np.asarray(mul)
    add = np.asarray(add)
    total = q**n
    hits = []
    for start in range(0, total, CHUNK):
        idx = np.arange(start, min(start + CHUNK, total), dtype=np.int64)
        a = _base_digits(idx, q, n)
        acc = np.zeros(idx.shape[0], dtype=np.int64)
        for i in range(n):
            acc = add[acc, mul[a[:, i], a[:, i]]]
        ok = acc == minus_one
        for k in range(1, n // 2 + 1):
            if not ok.any():
                break
            acc = np.zeros(idx.shape[0], dtype=np.int64)
            for i in range(n):
                acc = add[acc, mul[a[:, i], a[:, (i + k) % n]]]
            ok &= acc == 0
        hits.append(idx[ok])
    return np.concatenate(hits) if hits else np.zeros(0, dtype=np.int64)
