"""Independent brute-force references used by the tests.

Nothing here calls the code paths under test beyond raw field arithmetic.
"""

import itertools

from dccodes.finite_field import make_field


def squares(F):
    return {F.mul(x, x) for x in range(F.q)}


def naive_polymul(F, f, g):
    out = [0] * (len(f) + len(g) - 1) if f and g else []
    for i, a in enumerate(f):
        for j, b in enumerate(g):
            out[i + j] = F.add(out[i + j], F.mul(a, b))
    while out and out[-1] == 0:
        out.pop()
    return out


def naive_divides(F, d, f):
    """Does monic d divide f?  Schoolbook long division."""
    r = list(f)
    while len(r) >= len(d):
        c = r[-1]
        s = len(r) - len(d)
        for i, x in enumerate(d):
            r[s + i] = F.sub(r[s + i], F.mul(c, x))
        r.pop()
        while r and r[-1] == 0:
            r.pop()
    return not r


def monic_polys(F, deg):
    for low in itertools.product(range(F.q), repeat=deg):
        yield list(low) + [1]


def irreducible_factors_by_trial_division(F, n):
    """Monic irreducible factors of x^n - 1 (squarefree case), sorted."""
    f = [F.neg(1)] + [0] * (n - 1) + [1]
    found = []
    for deg in range(1, n + 1):
        for d in monic_polys(F, deg):
            if any(naive_divides(F, g, d) for g in found if len(g) <= len(d)):
                continue
            if naive_divides(F, d, f):
                found.append(d)
    return sorted(tuple(g) for g in found)


def circulant(F, a, n):
    a = list(a) + [0] * (n - len(a))
    return [[a[(j - i) % n] for j in range(n)] for i in range(n)]


def matmul(F, A, B):
    return [
        [
            _dot(F, A[i], [B[k][j] for k in range(len(B))])
            for j in range(len(B[0]))
        ]
        for i in range(len(A))
    ]


def _dot(F, u, v):
    acc = 0
    for x, y in zip(u, v):
        acc = F.add(acc, F.mul(x, y))
    return acc


def transpose(A):
    return [list(r) for r in zip(*A)]


def generator_matrix(F, a, n):
    A = circulant(F, a, n)
    return [[1 if j == i else 0 for j in range(n)] + A[i] for i in range(n)]


def self_dual_by_matrix(F, a, n):
    G = generator_matrix(F, a, n)
    return all(v == 0 for row in matmul(F, G, transpose(G)) for v in row)


def all_codewords(F, a, n):
    """Every (m, mA) by explicit vector-matrix products."""
    A = circulant(F, a, n)
    for m in itertools.product(range(F.q), repeat=n):
        w = [_dot(F, m, [A[i][j] for i in range(n)]) for j in range(n)]
        yield tuple(m) + tuple(w)


def naive_weight_distribution(F, a, n):
    out = {}
    for c in all_codewords(F, a, n):
        w = sum(1 for x in c if x)
        out[w] = out.get(w, 0) + 1
    return out


def naive_self_dual_rows(F, n):
    return [
        tuple(a)
        for a in itertools.product(range(F.q), repeat=n)
        if self_dual_by_matrix(F, a, n)
    ]


def entropy_bisect(q, y, iters=200):
    import math

    def H(x):
        if x == 0:
            return 0.0
        return (x * math.log(q - 1) - x * math.log(x) - (1 - x) * math.log(1 - x)) / math.log(q)

    lo, hi = 0.0, (q - 1) / q
    for _ in range(iters):
        mid = (lo + hi) / 2
        if H(mid) < y:
            lo = mid
        else:
            hi = mid
    return lo


PRIME_POWERS_TO_169 = [
    q for q in range(2, 170)
    if len({p for p in range(2, q + 1) if q % p == 0 and all(p % r for r in range(2, p))}) == 1
]


def field(q):
    from dccodes.finite_field import field_from_order

    return field_from_order(q)


__all__ = ["make_field"]
