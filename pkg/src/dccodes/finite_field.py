"""Exact arithmetic in GF(p^m) with a polynomial basis.

Elements are plain integers in ``[0, q)``: the base-p digits of the integer
are the coefficients of the residue polynomial, least significant digit
first.  :class:`FieldSpec` carries all arithmetic on those integers;
:class:`FieldElement` is a thin operator-overloading wrapper for interactive
use.

Fields are canonical: ``make_field(p, m)`` always picks the
lexicographically smallest monic irreducible of degree ``m`` (coefficient
tuples compared low degree first) and returns the same object on every call.
"""

from __future__ import annotations

import itertools
import math
from dataclasses import dataclass
from functools import cached_property, lru_cache

import numpy as np

# Hard ceiling on q.  Splitting fields for x^n - 1 live here, so this is
# deliberately large; arithmetic above TABLE_LIMIT runs table-free.
MAX_ORDER = 2**64
TABLE_LIMIT = 2**16
ADD_TABLE_LIMIT = 1024


def is_prime(n: int) -> bool:
    if n < 2:
        return False
    if n % 2 == 0:
        return n == 2
    i = 3
    while i * i <= n:
        if n % i == 0:
            return False
        i += 2
    return True


def prime_factors(n: int) -> list[int]:
    """Distinct prime factors of ``n`` by trial division, ascending."""
    out = []
    d = 2
    while d * d <= n:
        if n % d == 0:
            out.append(d)
            while n % d == 0:
                n //= d
        d += 1 if d == 2 else 2
    if n > 1:
        out.append(n)
    return out


def prime_power(q: int) -> tuple[int, int]:
    """Split ``q = p^m``; raise ValueError if q is not a prime power."""
    if q < 2:
        raise ValueError(f"{q} is not a prime power")
    ps = prime_factors(q)
    if len(ps) != 1:
        raise ValueError(f"{q} is not a prime power")
    p = ps[0]
    m = round(math.log(q, p))
    if p**m != q:
        m = 0
        while q % p == 0:
            q //= p
            m += 1
    return p, m


def multiplicative_order(a: int, n: int) -> int:
    """Order of ``a`` in (Z/nZ)^*; requires gcd(a, n) = 1."""
    if math.gcd(a, n) != 1:
        raise ValueError(f"gcd({a}, {n}) != 1")
    if n == 1:
        return 1
    k, x = 1, a % n
    while x != 1:
        x = x * a % n
        k += 1
    return k


# -- polynomials over the prime field, as ascending coefficient lists -------


def _trim(f: list[int]) -> list[int]:
    while f and f[-1] == 0:
        f.pop()
    return f


def _pmod(f: list[int], g: list[int], p: int) -> list[int]:
    f = list(f)
    dg = len(g) - 1
    inv_lead = pow(g[-1], p - 2, p)
    while len(f) - 1 >= dg and f:
        c = f[-1] * inv_lead % p
        shift = len(f) - 1 - dg
        if c:
            for i, gi in enumerate(g):
                f[shift + i] = (f[shift + i] - c * gi) % p
        f.pop()
        _trim(f)
    return f


def _pmulmod(f: list[int], g: list[int], mod: list[int], p: int) -> list[int]:
    if not f or not g:
        return []
    out = [0] * (len(f) + len(g) - 1)
    for i, fi in enumerate(f):
        if fi:
            for j, gj in enumerate(g):
                out[i + j] += fi * gj
    return _pmod(_trim([c % p for c in out]), mod, p)


def _ppowmod(f: list[int], e: int, mod: list[int], p: int) -> list[int]:
    result = [1]
    base = _pmod(f, mod, p)
    while e:
        if e & 1:
            result = _pmulmod(result, base, mod, p)
        base = _pmulmod(base, base, mod, p)
        e >>= 1
    return result


def _pgcd(f: list[int], g: list[int], p: int) -> list[int]:
    f, g = _trim(list(f)), _trim(list(g))
    while g:
        f, g = g, _pmod(f, g, p)
    return f


def _psub(f: list[int], g: list[int], p: int) -> list[int]:
    n = max(len(f), len(g))
    f = f + [0] * (n - len(f))
    g = g + [0] * (n - len(g))
    return _trim([(a - b) % p for a, b in zip(f, g)])


def is_irreducible_mod_p(f: list[int] | tuple[int, ...], p: int) -> bool:
    """Rabin's test for a monic polynomial over GF(p)."""
    f = _trim(list(f))
    m = len(f) - 1
    if m < 1:
        return False
    if m == 1:
        return True
    x = [0, 1]

    def frob(k: int) -> list[int]:
        # x^(p^k) mod f
        r = x
        for _ in range(k):
            r = _ppowmod(r, p, f, p)
        return r

    if _psub(frob(m), x, p) != []:
        return False
    for r in prime_factors(m):
        g = _pgcd(f, _psub(frob(m // r), x, p), p)
        if len(g) != 1:
            return False
    return True


def smallest_irreducible(p: int, m: int) -> tuple[int, ...]:
    """Lexicographically smallest monic irreducible of degree m over GF(p)."""
    if m == 1:
        return (0, 1)
    # constant term 0 means divisible by x
    for c0 in range(1, p):
        for rest in itertools.product(range(p), repeat=m - 1):
            f = [c0, *rest, 1]
            if is_irreducible_mod_p(f, p):
                return tuple(f)
    raise AssertionError("no irreducible polynomial found")  # pragma: no cover


# -- fields -----------------------------------------------------------------


@dataclass(frozen=True)
class FieldSpec:
    """GF(p^m) as GF(p)[y] / (modulus)."""

    p: int
    m: int
    modulus: tuple[int, ...]

    @property
    def q(self) -> int:
        return self.p**self.m

    @property
    def zero(self) -> int:
        return 0

    @property
    def one(self) -> int:
        return 1

    def __str__(self) -> str:
        return f"{self.p}^{self.m}"

    def __repr__(self) -> str:
        return f"GF({self.p}^{self.m})"

    def __call__(self, rep: int) -> "FieldElement":
        return FieldElement(self, rep % self.q if rep < 0 else rep)

    def elements(self) -> range:
        return range(self.q)

    # digit conversion

    def digits(self, x: int) -> list[int]:
        p = self.p
        out = []
        for _ in range(self.m):
            x, r = divmod(x, p)
            out.append(r)
        return out

    def from_digits(self, ds) -> int:
        x = 0
        for d in reversed(list(ds)):
            x = x * self.p + d
        return x

    # tables (only for small fields)

    @cached_property
    def _mod_int(self) -> int:
        # modulus as a bit mask, used when p == 2
        return sum(1 << i for i, c in enumerate(self.modulus) if c)

    @cached_property
    def generator(self) -> int:
        """Smallest rep that generates the multiplicative group."""
        if self.q == 2:
            return 1
        n = self.q - 1
        exps = [n // r for r in prime_factors(n)]
        for g in range(2, self.q):
            if all(self._pow_slow(g, e) != 1 for e in exps):
                return g
        raise AssertionError("no generator")  # pragma: no cover

    @cached_property
    def _tables(self) -> tuple[list[int], list[int]]:
        n = self.q - 1
        exp = [0] * (2 * n)
        log = [0] * self.q
        g = self.generator
        x = 1
        for i in range(n):
            exp[i] = x
            log[x] = i
            x = self._mul_slow(x, g)
        for i in range(n, 2 * n):
            exp[i] = exp[i - n]
        return exp, log

    @cached_property
    def _add_table(self) -> list[list[int]] | None:
        if self.m == 1 or self.p == 2 or self.q > ADD_TABLE_LIMIT:
            return None
        d = np.array([self.digits(x) for x in range(self.q)], dtype=np.int64)
        s = (d[:, None, :] + d[None, :, :]) % self.p
        weights = self.p ** np.arange(self.m, dtype=np.int64)
        return (s @ weights).tolist()

    @cached_property
    def _neg_table(self) -> list[int]:
        return [self._neg_slow(x) for x in range(self.q)]

    # table-free primitives

    def _add_slow(self, x: int, y: int) -> int:
        p = self.p
        return self.from_digits((a + b) % p for a, b in zip(self.digits(x), self.digits(y)))

    def _neg_slow(self, x: int) -> int:
        p = self.p
        return self.from_digits((-a) % p for a in self.digits(x))

    def _mul_slow(self, x: int, y: int) -> int:
        p, m = self.p, self.m
        if m == 1:
            return x * y % p
        if p == 2:
            r = 0
            while y:
                if y & 1:
                    r ^= x
                y >>= 1
                x <<= 1
                if x >> m & 1:
                    x ^= self._mod_int
            return r
        a, b = self.digits(x), self.digits(y)
        prod = [0] * (2 * m - 1)
        for i, ai in enumerate(a):
            if ai:
                for j, bj in enumerate(b):
                    prod[i + j] += ai * bj
        mod = self.modulus
        for k in range(2 * m - 2, m - 1, -1):
            c = prod[k] % p
            if c:
                for i in range(m):
                    prod[k - m + i] -= c * mod[i]
        return self.from_digits(c % p for c in prod[:m])

    def _pow_slow(self, x: int, e: int) -> int:
        r = 1
        while e:
            if e & 1:
                r = self._mul_slow(r, x)
            x = self._mul_slow(x, x)
            e >>= 1
        return r

    @property
    def _tabled(self) -> bool:
        return self.q <= TABLE_LIMIT

    # public integer-level arithmetic

    def add(self, x: int, y: int) -> int:
        if self.m == 1:
            return (x + y) % self.p
        if self.p == 2:
            return x ^ y
        t = self._add_table
        if t is not None:
            return t[x][y]
        return self._add_slow(x, y)

    def neg(self, x: int) -> int:
        if self.m == 1:
            return -x % self.p
        if self.p == 2:
            return x
        if self.q <= ADD_TABLE_LIMIT:
            return self._neg_table[x]
        return self._neg_slow(x)

    def sub(self, x: int, y: int) -> int:
        return self.add(x, self.neg(y))

    def mul(self, x: int, y: int) -> int:
        if self.m == 1:
            return x * y % self.p
        if x == 0 or y == 0:
            return 0
        if self._tabled:
            exp, log = self._tables
            return exp[log[x] + log[y]]
        return self._mul_slow(x, y)

    def inv(self, x: int) -> int:
        if x == 0:
            raise ZeroDivisionError("inverse of zero in " + repr(self))
        if self.m == 1:
            return pow(x, self.p - 2, self.p)
        if self._tabled:
            exp, log = self._tables
            return exp[(self.q - 1 - log[x]) % (self.q - 1)]
        return self._pow_slow(x, self.q - 2)

    def pow(self, x: int, e: int) -> int:
        if e < 0:
            x, e = self.inv(x), -e
        if x == 0:
            return 1 if e == 0 else 0
        if self.m == 1:
            return pow(x, e, self.p)
        if self._tabled:
            exp, log = self._tables
            return exp[log[x] * e % (self.q - 1)]
        return self._pow_slow(x, e % (self.q - 1))

    def from_int(self, k: int) -> int:
        """Image of the integer k under Z -> GF(p)."""
        return k % self.p

    def order(self, x: int) -> int:
        """Multiplicative order of a nonzero element."""
        if x == 0:
            raise ValueError("zero has no multiplicative order")
        n = self.q - 1
        for r in prime_factors(n):
            while n % r == 0 and self.pow(x, n // r) == 1:
                n //= r
        return n


@dataclass(frozen=True)
class FieldElement:
    owner: FieldSpec
    rep: int

    def __post_init__(self):
        if not 0 <= self.rep < self.owner.q:
            raise ValueError(f"rep {self.rep} out of range for {self.owner!r}")

    def _coerce(self, other) -> int:
        if isinstance(other, FieldElement):
            if other.owner != self.owner:
                raise ValueError("operands belong to different fields")
            return other.rep
        if isinstance(other, int):
            return self.owner.from_int(other)
        return NotImplemented

    def __add__(self, other):
        y = self._coerce(other)
        return FieldElement(self.owner, self.owner.add(self.rep, y))

    __radd__ = __add__

    def __sub__(self, other):
        y = self._coerce(other)
        return FieldElement(self.owner, self.owner.sub(self.rep, y))

    def __rsub__(self, other):
        y = self._coerce(other)
        return FieldElement(self.owner, self.owner.sub(y, self.rep))

    def __mul__(self, other):
        y = self._coerce(other)
        return FieldElement(self.owner, self.owner.mul(self.rep, y))

    __rmul__ = __mul__

    def __truediv__(self, other):
        y = self._coerce(other)
        return FieldElement(self.owner, self.owner.mul(self.rep, self.owner.inv(y)))

    def __neg__(self):
        return FieldElement(self.owner, self.owner.neg(self.rep))

    def __pow__(self, e: int):
        return FieldElement(self.owner, self.owner.pow(self.rep, e))

    def inverse(self) -> "FieldElement":
        return FieldElement(self.owner, self.owner.inv(self.rep))

    def __int__(self) -> int:
        return self.rep

    def __bool__(self) -> bool:
        return self.rep != 0

    def __repr__(self) -> str:
        return f"{self.rep}@GF({self.owner})"


@lru_cache(maxsize=None)
def make_field(p: int, m: int = 1) -> FieldSpec:
    """The canonical GF(p^m)."""
    if not isinstance(p, int) or not is_prime(p):
        raise ValueError(f"characteristic {p} is not prime")
    if not isinstance(m, int) or m < 1:
        raise ValueError(f"extension degree must be >= 1, got {m}")
    if p**m > MAX_ORDER:
        raise ValueError(f"GF({p}^{m}) exceeds the supported order 2^64")
    return FieldSpec(p, m, smallest_irreducible(p, m))


def field_from_order(q: int) -> FieldSpec:
    return make_field(*prime_power(q))


def parse_field(text: str) -> FieldSpec:
    """Accept ``"p^m"`` or a plain prime power such as ``"4"``."""
    text = str(text).strip()
    if "^" in text:
        p, m = text.split("^")
        return make_field(int(p), int(m))
    return field_from_order(int(text))


_OPS = {"add", "sub", "mul", "inv", "neg", "pow"}


def arith(field: FieldSpec, op: str, x, y=None) -> FieldElement:
    """Apply one field operation to elements (or reps) of ``field``."""
    if op not in _OPS:
        raise ValueError(f"unknown op {op!r}")

    def rep(v) -> int:
        if isinstance(v, FieldElement):
            if v.owner != field:
                raise ValueError("operand belongs to a different field")
            return v.rep
        if not 0 <= v < field.q:
            raise ValueError(f"rep {v} out of range")
        return v

    a = rep(x)
    if op == "inv":
        r = field.inv(a)
    elif op == "neg":
        r = field.neg(a)
    elif op == "pow":
        r = field.pow(a, int(y))
    else:
        r = getattr(field, op)(a, rep(y))
    return FieldElement(field, r)


def minus_one_is_square(field: FieldSpec) -> bool:
    p, m = field.p, field.m
    return p == 2 or p % 4 == 1 or (p % 4 == 3 and m % 2 == 0)


def sqrt_of_minus_one(field: FieldSpec) -> int | None:
    """Smallest rep a with a^2 = -1, or None."""
    if not minus_one_is_square(field):
        return None
    target = field.neg(1)
    if field.q <= TABLE_LIMIT:
        for a in range(1, field.q):
            if field.mul(a, a) == target:
                return a
    # large field: a = g^((q-1)/4) and its negative are the two roots
    if field.p == 2:
        return 1
    g = field.generator
    a = field.pow(g, (field.q - 1) // 4)
    return min(a, field.neg(a))


# -- subfield embeddings ----------------------------------------------------


@dataclass(frozen=True)
class Embedding:
    """Field monomorphism small -> big given by sending y to ``root``."""

    small: FieldSpec
    big: FieldSpec
    root: int
    image: tuple[int, ...]

    def __call__(self, x: int) -> int:
        return self.image[x]

    @cached_property
    def preimage(self) -> dict[int, int]:
        return {v: i for i, v in enumerate(self.image)}

    def pull(self, y: int) -> int:
        try:
            return self.preimage[y]
        except KeyError:
            raise ValueError(f"{y} is not in the image of GF({self.small})") from None


@lru_cache(maxsize=None)
def embed(small: FieldSpec, k: int) -> Embedding:
    """Embedding of GF(q) into the canonical GF(q^k) = GF(p^(mk)).

    The image of the generator y of ``small`` is the root of its modulus with
    the smallest rep in the big field.
    """
    p, m = small.p, small.m
    big = make_field(p, m * k)
    if m == 1:
        root = 0
        image = tuple(range(p))
        return Embedding(small, big, root, image)
    Q, q = big.q, small.q
    # every element of the copy of GF(q) inside big is 0 or a power of z
    cofactor = (Q - 1) // (q - 1)
    for g in range(2, Q):
        z = big.pow(g, cofactor)
        powers = [1]
        x = z
        while x != 1:
            powers.append(x)
            x = big.mul(x, z)
        if len(powers) == q - 1:
            break
    roots = [r for r in powers if _eval_prime_poly(big, small.modulus, r) == 0]
    root = min(roots)
    image = []
    for x in range(q):
        acc = 0
        for d in reversed(small.digits(x)):
            acc = big.add(big.mul(acc, root), d)
        image.append(acc)
    return Embedding(small, big, root, tuple(image))


def _eval_prime_poly(field: FieldSpec, coeffs, x: int) -> int:
    acc = 0
    for c in reversed(coeffs):
        acc = field.add(field.mul(acc, x), c)
    return acc
