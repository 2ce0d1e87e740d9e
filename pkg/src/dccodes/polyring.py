"""Polynomials over GF(q) and the factorization of x^n - 1.

Coefficients are field reps in ascending degree.  Most heavy lifting happens
on plain lists (the ``p*`` helpers); :class:`Poly` is the immutable value
exposed to callers.
"""

from __future__ import annotations

import math
from dataclasses import dataclass, field as dc_field

from .finite_field import (
    FieldSpec,
    embed,
    field_from_order,
    is_prime,
    make_field,
    multiplicative_order,
    prime_factors,
)

# -- list-level helpers ------------------------------------------------------


def trim(f: list[int]) -> list[int]:
    while f and f[-1] == 0:
        f.pop()
    return f


def padd(F: FieldSpec, f, g) -> list[int]:
    if len(f) < len(g):
        f, g = g, f
    out = list(f)
    for i, c in enumerate(g):
        out[i] = F.add(out[i], c)
    return trim(out)


def pneg(F: FieldSpec, f) -> list[int]:
    return [F.neg(c) for c in f]


def psub(F: FieldSpec, f, g) -> list[int]:
    return padd(F, f, pneg(F, g))


def pscale(F: FieldSpec, c: int, f) -> list[int]:
    if c == 0:
        return []
    return [F.mul(c, x) for x in f]


def pmul(F: FieldSpec, f, g) -> list[int]:
    if not f or not g:
        return []
    out = [0] * (len(f) + len(g) - 1)
    for i, a in enumerate(f):
        if a:
            for j, b in enumerate(g):
                if b:
                    out[i + j] = F.add(out[i + j], F.mul(a, b))
    return trim(out)


def pdivmod(F: FieldSpec, f, g) -> tuple[list[int], list[int]]:
    if not g:
        raise ZeroDivisionError("polynomial division by zero")
    r = trim(list(f))
    dg = len(g) - 1
    inv_lead = F.inv(g[-1])
    if len(r) - 1 < dg:
        return [], r
    quo = [0] * (len(r) - dg)
    while r and len(r) - 1 >= dg:
        c = F.mul(r[-1], inv_lead)
        shift = len(r) - 1 - dg
        quo[shift] = c
        for i, gi in enumerate(g):
            if gi:
                r[shift + i] = F.sub(r[shift + i], F.mul(c, gi))
        r.pop()
        trim(r)
    return trim(quo), r


def pmod(F: FieldSpec, f, g) -> list[int]:
    return pdivmod(F, f, g)[1]


def monic(F: FieldSpec, f) -> list[int]:
    if not f:
        return []
    return pscale(F, F.inv(f[-1]), f)


def pgcd(F: FieldSpec, f, g) -> list[int]:
    f, g = trim(list(f)), trim(list(g))
    while g:
        f, g = g, pmod(F, f, g)
    return monic(F, f)


def pxgcd(F: FieldSpec, f, g):
    """Return (d, s, t) with s*f + t*g = d = monic gcd."""
    r0, r1 = trim(list(f)), trim(list(g))
    s0, s1 = [1], []
    t0, t1 = [], [1]
    while r1:
        qt, r = pdivmod(F, r0, r1)
        r0, r1 = r1, r
        s0, s1 = s1, psub(F, s0, pmul(F, qt, s1))
        t0, t1 = t1, psub(F, t0, pmul(F, qt, t1))
    if not r0:
        return [], s0, t0
    c = F.inv(r0[-1])
    return pscale(F, c, r0), pscale(F, c, s0), pscale(F, c, t0)


def pinvmod(F: FieldSpec, f, mod) -> list[int]:
    d, s, _ = pxgcd(F, f, mod)
    if d != [1]:
        raise ZeroDivisionError("polynomial is not invertible modulo the given modulus")
    return pmod(F, s, mod)


def pmulmod(F: FieldSpec, f, g, mod) -> list[int]:
    return pmod(F, pmul(F, f, g), mod)


def ppowmod(F: FieldSpec, f, e: int, mod) -> list[int]:
    result = pmod(F, [1], mod)
    base = pmod(F, f, mod)
    while e:
        if e & 1:
            result = pmulmod(F, result, base, mod)
        base = pmulmod(F, base, base, mod)
        e >>= 1
    return result


def cyclic_mul(F: FieldSpec, f, g, n: int) -> list[int]:
    """f * g reduced modulo x^n - 1 (exponents folded mod n)."""
    out = [0] * n
    for i, a in enumerate(f):
        if a:
            for j, b in enumerate(g):
                if b:
                    k = (i + j) % n
                    out[k] = F.add(out[k], F.mul(a, b))
    return trim(out)


def cyclic_reverse(f, n: int) -> list[int]:
    """f(x^-1) mod x^n - 1."""
    out = [0] * n
    for i, c in enumerate(f):
        out[-i % n] = c
    return trim(out)


def peval(F: FieldSpec, f, x: int) -> int:
    acc = 0
    for c in reversed(f):
        acc = F.add(F.mul(acc, x), c)
    return acc


def xn_minus_1(F: FieldSpec, n: int) -> list[int]:
    return [F.neg(1)] + [0] * (n - 1) + [1]


# -- public types ------------------------------------------------------------


@dataclass(frozen=True)
class Poly:
    field: FieldSpec
    coeffs: tuple[int, ...] = ()

    def __post_init__(self):
        c = tuple(self.coeffs)
        while c and c[-1] == 0:
            c = c[:-1]
        q = self.field.q
        if any(not 0 <= x < q for x in c):
            raise ValueError(f"coefficients must be reps in [0, {q})")
        object.__setattr__(self, "coeffs", c)

    @classmethod
    def from_list(cls, field: FieldSpec, coeffs) -> "Poly":
        return cls(field, tuple(coeffs))

    @classmethod
    def monomial(cls, field: FieldSpec, k: int, c: int = 1) -> "Poly":
        return cls(field, (0,) * k + (c,))

    @property
    def degree(self) -> int:
        return len(self.coeffs) - 1

    def is_zero(self) -> bool:
        return not self.coeffs

    def __iter__(self):
        return iter(self.coeffs)

    def __len__(self):
        return len(self.coeffs)

    def vector(self, n: int) -> list[int]:
        """Coefficients padded to length n."""
        if len(self.coeffs) > n:
            raise ValueError(f"degree {self.degree} does not fit in length {n}")
        return list(self.coeffs) + [0] * (n - len(self.coeffs))

    def sort_key(self) -> int:
        """Integer encoding sum c_i q^i; defines the canonical order."""
        q, k = self.field.q, 0
        for c in reversed(self.coeffs):
            k = k * q + c
        return k

    def _check(self, other: "Poly"):
        if not isinstance(other, Poly):
            return NotImplemented
        if other.field != self.field:
            raise ValueError("polynomials over different fields")

    def __add__(self, other):
        self._check(other)
        return Poly(self.field, tuple(padd(self.field, self.coeffs, other.coeffs)))

    def __sub__(self, other):
        self._check(other)
        return Poly(self.field, tuple(psub(self.field, self.coeffs, other.coeffs)))

    def __neg__(self):
        return Poly(self.field, tuple(pneg(self.field, self.coeffs)))

    def __mul__(self, other):
        if isinstance(other, int):
            return Poly(self.field, tuple(pscale(self.field, other, self.coeffs)))
        self._check(other)
        return Poly(self.field, tuple(pmul(self.field, self.coeffs, other.coeffs)))

    def __divmod__(self, other):
        self._check(other)
        qt, r = pdivmod(self.field, self.coeffs, other.coeffs)
        return Poly(self.field, tuple(qt)), Poly(self.field, tuple(r))

    def __mod__(self, other):
        return divmod(self, other)[1]

    def __floordiv__(self, other):
        return divmod(self, other)[0]

    def __call__(self, x: int) -> int:
        return peval(self.field, self.coeffs, x)

    def monic(self) -> "Poly":
        return Poly(self.field, tuple(monic(self.field, self.coeffs)))

    def to_string(self) -> str:
        return format_coeffs(self.coeffs)

    def __str__(self) -> str:
        if not self.coeffs:
            return "0"
        terms = []
        for i, c in enumerate(self.coeffs):
            if not c:
                continue
            mono = "" if i == 0 else ("x" if i == 1 else f"x^{i}")
            if not mono:
                terms.append(str(c))
            elif c == 1:
                terms.append(mono)
            else:
                terms.append(f"{c}*{mono}")
        return " + ".join(terms)


def format_coeffs(coeffs) -> str:
    coeffs = list(coeffs)
    return ",".join(str(c) for c in coeffs) if coeffs else "0"


def parse_poly(field: FieldSpec, text: str) -> Poly:
    """Parse ``"1,0,1"`` (reps ascending in degree)."""
    text = text.strip()
    if not text:
        raise ValueError("empty coefficient string")
    try:
        coeffs = [int(t) for t in text.split(",")]
    except ValueError:
        raise ValueError(f"bad coefficient string {text!r}") from None
    return Poly(field, tuple(coeffs))


def poly_gcd(f: Poly, g: Poly) -> Poly:
    f._check(g)
    return Poly(f.field, tuple(pgcd(f.field, f.coeffs, g.coeffs)))


def poly_mulmod(f: Poly, g: Poly, n: int) -> Poly:
    """f * g in GF(q)[x] / (x^n - 1)."""
    f._check(g)
    if n < 1:
        raise ValueError("n must be >= 1")
    return Poly(f.field, tuple(cyclic_mul(f.field, f.coeffs, g.coeffs, n)))


def reciprocal(f: Poly) -> Poly:
    """Monic normalization of x^deg(f) f(1/x)."""
    if f.is_zero() or f.coeffs[0] == 0:
        raise ValueError("reciprocal needs f(0) != 0")
    return Poly(f.field, tuple(monic(f.field, list(reversed(f.coeffs)))))


def is_self_reciprocal(f: Poly) -> bool:
    return reciprocal(f) == f.monic()


# -- cyclotomic cosets and x^n - 1 -------------------------------------------


def cyclotomic_cosets(n: int, q: int) -> list[list[int]]:
    """q-cyclotomic cosets modulo n, each sorted, ordered by minimum."""
    if n < 1:
        raise ValueError("n must be >= 1")
    if math.gcd(n, q) != 1:
        raise ValueError(f"gcd(n={n}, q={q}) != 1")
    seen = [False] * n
    cosets = []
    for c in range(n):
        if seen[c]:
            continue
        orbit = []
        x = c
        while not seen[x]:
            seen[x] = True
            orbit.append(x)
            x = x * q % n
        cosets.append(sorted(orbit))
    return cosets


@dataclass(frozen=True)
class FactorProfile:
    """Degree data of x^n - 1 read off the cyclotomic cosets."""

    n: int
    q: int
    self_reciprocal_degrees: tuple[int, ...]  # g_1 (and g_2 for even n) first
    pair_degrees: tuple[int, ...]

    @property
    def s(self) -> int:
        return len(self.self_reciprocal_degrees)

    @property
    def t(self) -> int:
        return len(self.pair_degrees)

    @property
    def d(self) -> tuple[int, ...]:
        """Half-degrees d_j of the non-linear self-reciprocal factors."""
        lead = 2 if self.n % 2 == 0 else 1
        return tuple(deg // 2 for deg in self.self_reciprocal_degrees[lead:])

    @property
    def e(self) -> tuple[int, ...]:
        return self.pair_degrees

    @property
    def factor_count(self) -> int:
        return self.s + 2 * self.t


def _classify(n: int, cosets: list[list[int]]):
    """Split coset indices into (self_reciprocal, pairs) with the fixed order."""
    where = {}
    for i, c in enumerate(cosets):
        for x in c:
            where[x] = i
    selfrec, pairs = [], []
    for i, c in enumerate(cosets):
        j = where[-c[0] % n]
        if j == i:
            selfrec.append(i)
        elif j > i:
            pairs.append((i, j))
    lead = [where[0]]
    if n % 2 == 0:
        lead.append(where[n // 2])
    selfrec = lead + [i for i in selfrec if i not in lead]
    return selfrec, pairs


def factor_profile(n: int, q: int) -> FactorProfile:
    cosets = cyclotomic_cosets(n, q)
    selfrec, pairs = _classify(n, cosets)
    return FactorProfile(
        n,
        q,
        tuple(len(cosets[i]) for i in selfrec),
        tuple(len(cosets[i]) for i, _ in pairs),
    )


@dataclass(frozen=True)
class XnFactorization:
    """x^n - 1 = alpha * prod(g_j) * prod(h_j h_j^*) over ``field``."""

    n: int
    field: FieldSpec
    alpha: int
    self_reciprocal: tuple[tuple[Poly, int], ...]  # (g_j, d_j)
    pairs: tuple[tuple[Poly, Poly, int], ...]  # (h_j, h_j^*, e_j)
    cosets: tuple[tuple[int, ...], ...] = dc_field(repr=False, default=())

    @property
    def s(self) -> int:
        return len(self.self_reciprocal)

    @property
    def t(self) -> int:
        return len(self.pairs)

    @property
    def factor_count(self) -> int:
        return self.s + 2 * self.t

    def factors(self) -> list[Poly]:
        out = [g for g, _ in self.self_reciprocal]
        for h, hs, _ in self.pairs:
            out += [h, hs]
        return out

    def product(self) -> Poly:
        F = self.field
        acc = [self.alpha]
        for f in self.factors():
            acc = pmul(F, acc, f.coeffs)
        return Poly(F, tuple(acc))

    def profile(self) -> FactorProfile:
        return FactorProfile(
            self.n,
            self.field.q,
            tuple(g.degree for g, _ in self.self_reciprocal),
            tuple(e for _, _, e in self.pairs),
        )


def _root_of_unity(big: FieldSpec, n: int) -> int:
    """Deterministic element of exact order n: g^((Q-1)/n) for the least g."""
    if n == 1:
        return 1
    Q = big.q
    cof = (Q - 1) // n
    primes = prime_factors(n)
    for g in range(2, Q):
        z = big.pow(g, cof)
        if all(big.pow(z, n // r) != 1 for r in primes):
            return z
    raise AssertionError("no primitive n-th root of unity")  # pragma: no cover


def factor_xn_minus_1(n: int, field: FieldSpec) -> XnFactorization:
    """Irreducible factorization of x^n - 1 via cyclotomic cosets.

    Each factor is the minimal polynomial of beta^c for a coset
    representative c, where beta is a primitive n-th root of unity in
    GF(q^k), k = ord_n(q).
    """
    if n < 1:
        raise ValueError("n must be >= 1")
    if math.gcd(n, field.p) != 1:
        raise ValueError(
            f"repeated-root case unsupported: gcd(n={n}, p={field.p}) != 1"
        )
    q = field.q
    cosets = cyclotomic_cosets(n, q)
    k = multiplicative_order(q, n)
    emb = embed(field, k)
    big = emb.big
    beta = _root_of_unity(big, n)

    minpolys = []
    for c in cosets:
        acc = [1]
        for j in c:
            root = big.pow(beta, j)
            acc = pmul(big, acc, [big.neg(root), 1])
        minpolys.append(Poly(field, tuple(emb.pull(x) for x in acc)))

    selfrec, pairs = _classify(n, cosets)
    sr = tuple((minpolys[i], minpolys[i].degree // 2) for i in selfrec)
    pr = tuple((minpolys[i], minpolys[j], minpolys[i].degree) for i, j in pairs)
    fac = XnFactorization(n, field, 1, sr, pr, tuple(tuple(c) for c in cosets))
    if fac.product().coeffs != tuple(xn_minus_1(field, n)):
        raise AssertionError("factor product does not reproduce x^n - 1")
    return fac


def is_perfect_square(k: int) -> bool:
    return k >= 0 and math.isqrt(k) ** 2 == k


def artin_condition(q: int, n: int) -> dict:
    """Primitive-root flags for (q, n) plus the two-factor property of x^n - 1."""
    if n < 2:
        raise ValueError("n must be >= 2")
    if math.gcd(n, q) != 1:
        raise ValueError(f"gcd(n={n}, q={q}) != 1")
    field_from_order(q)  # q must be a prime power
    return {
        "n_prime": is_prime(n),
        "q_nonsquare": not is_perfect_square(q),
        "primitive": multiplicative_order(q, n) == n - 1,
        "two_factor": len(cyclotomic_cosets(n, q)) == 2,
    }


__all__ = [
    "Poly",
    "XnFactorization",
    "FactorProfile",
    "poly_mulmod",
    "poly_gcd",
    "reciprocal",
    "is_self_reciprocal",
    "cyclotomic_cosets",
    "factor_profile",
    "factor_xn_minus_1",
    "artin_condition",
    "parse_poly",
    "format_coeffs",
    "make_field",
]
