"""Double circulant codes with generator matrix (I | A), A circulant.

A code is fixed by its field, the half-length ``n`` and the first row ``a`` of
A, read as a polynomial mod x^n - 1.  Row i of A is ``x^i a``.
"""

from __future__ import annotations

import math
from concurrent.futures import ThreadPoolExecutor
from dataclasses import dataclass

import numpy as np

from . import kernels
from .finite_field import FieldSpec, parse_field
from .polyring import Poly, cyclic_mul, cyclic_reverse, format_coeffs, parse_poly

# Largest q^n scanned exhaustively by min_distance / weight_distribution.
DEFAULT_BUDGET = 2**26


class BudgetExceeded(ValueError):
    """Exhaustive search would visit more than the allowed number of words."""


@dataclass(frozen=True)
class DoubleCirculantCode:
    field: FieldSpec
    n: int
    a: Poly

    @property
    def length(self) -> int:
        return 2 * self.n

    @property
    def dimension(self) -> int:
        return self.n

    @property
    def rate(self) -> float:
        return 0.5

    def circulant(self) -> list[list[int]]:
        """The matrix A; row i is the cyclic right-shift of row i - 1."""
        n, row = self.n, self.a.vector(self.n)
        return [[row[(j - i) % n] for j in range(n)] for i in range(n)]

    def generator_matrix(self) -> list[list[int]]:
        n = self.n
        A = self.circulant()
        return [[1 if j == i else 0 for j in range(n)] + A[i] for i in range(n)]

    def to_dict(self) -> dict:
        return {"q": str(self.field), "n": self.n, "a": format_coeffs(self.a.coeffs)}

    @classmethod
    def from_dict(cls, d: dict) -> "DoubleCirculantCode":
        field = parse_field(d["q"])
        return make_code(field, int(d["n"]), parse_poly(field, str(d["a"])))


@dataclass(frozen=True)
class Codeword:
    field: FieldSpec
    left: tuple[int, ...]
    right: tuple[int, ...]

    @property
    def n(self) -> int:
        return len(self.left)

    @property
    def coords(self) -> tuple[int, ...]:
        return self.left + self.right

    @property
    def weight(self) -> int:
        return sum(1 for c in self.coords if c)

    @classmethod
    def from_coords(cls, field: FieldSpec, coords) -> "Codeword":
        coords = tuple(coords)
        if len(coords) % 2:
            raise ValueError("codeword length must be even")
        h = len(coords) // 2
        return cls(field, coords[:h], coords[h:])

    def to_strings(self) -> tuple[str, str]:
        return ",".join(map(str, self.left)), ",".join(map(str, self.right))


def make_code(field: FieldSpec, n: int, a: Poly) -> DoubleCirculantCode:
    if n < 1:
        raise ValueError("n must be >= 1")
    if math.gcd(n, field.p) != 1:
        raise ValueError(f"gcd(n={n}, p={field.p}) != 1")
    if a.field != field:
        raise ValueError("first-row polynomial is over a different field")
    if a.degree >= n:
        raise ValueError(f"deg a = {a.degree} must be < n = {n}")
    return DoubleCirculantCode(field, n, a)


def _message(code: DoubleCirculantCode, m) -> list[int]:
    if isinstance(m, Poly):
        if m.field != code.field:
            raise ValueError("message is over a different field")
        return m.vector(code.n)
    m = list(m)
    if len(m) != code.n:
        raise ValueError(f"message length {len(m)} != n = {code.n}")
    if any(not 0 <= c < code.field.q for c in m):
        raise ValueError("message entries must be field reps")
    return m


def encode(code: DoubleCirculantCode, m) -> Codeword:
    """(m, m * a mod x^n - 1)."""
    v = _message(code, m)
    w = cyclic_mul(code.field, v, code.a.coeffs, code.n)
    return Codeword(code.field, tuple(v), tuple(w + [0] * (code.n - len(w))))


def contains(code: DoubleCirculantCode, u: Codeword) -> bool:
    """u = (v, w) is a codeword iff w = a v mod x^n - 1."""
    if u.field != code.field:
        raise ValueError("codeword is over a different field")
    if len(u.left) != code.n or len(u.right) != code.n:
        raise ValueError("codeword length does not match the code")
    w = cyclic_mul(code.field, list(u.left), code.a.coeffs, code.n)
    return tuple(w + [0] * (code.n - len(w))) == tuple(u.right)


def is_self_dual(code: DoubleCirculantCode) -> bool:
    """a(x) a(x^-1) = -1 mod x^n - 1, i.e. A A^t = -I."""
    F, n = code.field, code.n
    prod = cyclic_mul(F, code.a.coeffs, cyclic_reverse(code.a.coeffs, n), n)
    return prod == [F.neg(1)]


def generator_rows_over_prime_field(code: DoubleCirculantCode) -> list[list[int]]:
    """Basis of the code as a GF(p)-space: rows (y^j e_i | y^j x^i a)."""
    F, n = code.field, code.n
    a = code.a.vector(n)
    rows = []
    for i in range(n):
        shifted = [a[(k - i) % n] for k in range(n)]
        for j in range(F.m):
            s = F.p**j  # rep of y^j
            left = [0] * n
            left[i] = s
            rows.append(left + [F.mul(s, c) for c in shifted])
    return rows


def _check_budget(code: DoubleCirculantCode, budget: int) -> None:
    if code.field.q**code.n > budget:
        raise BudgetExceeded(
            f"exhaustion infeasible: q^n = {code.field.q}^{code.n} exceeds budget "
            f"{budget}; use sampling in census"
        )


def weight_counts(code, budget=DEFAULT_BUDGET, workers=1, backend=None) -> np.ndarray:
    """Histogram over weights 0..2n of all q^n codewords.

    With ``workers > 1`` the GF(p)-combinations are split on their top digits
    and scanned in threads; the kernels release the GIL.  The result does not
    depend on the split.
    """
    _check_budget(code, budget)
    F = code.field
    rows = generator_rows_over_prime_field(code)
    K, L = len(rows), 2 * code.n
    if workers <= 1:
        return kernels.weight_counts(rows, [0] * L, F, backend)

    top = 0
    while top < K and F.p**top < 4 * workers:
        top += 1
    low, high = rows[: K - top], rows[K - top :]

    def job(index: int) -> np.ndarray:
        base = [0] * L
        for r in high:
            c = index % F.p
            index //= F.p
            if c:
                base = [F.add(x, F.mul(c, y)) for x, y in zip(base, r)]
        return kernels.weight_counts(low, base, F, backend)

    with ThreadPoolExecutor(max_workers=workers) as pool:
        parts = list(pool.map(job, range(F.p**top)))
    return np.sum(parts, axis=0)


def weight_distribution(code, budget=DEFAULT_BUDGET, workers=1, backend=None) -> dict[int, int]:
    counts = weight_counts(code, budget, workers, backend)
    return {w: int(c) for w, c in enumerate(counts) if c}


def min_distance(code, budget=DEFAULT_BUDGET, workers=1, backend=None) -> int:
    """Minimum weight over the nonzero codewords (exhaustive)."""
    counts = weight_counts(code, budget, workers, backend)
    nz = np.flatnonzero(counts[1:])
    return int(nz[0]) + 1
