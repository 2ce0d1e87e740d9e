"""Monomial transforms on coordinates and the dihedral symmetry checks.

Coordinates are 0-based internally; cycle notation in output is 1-based.
A transform sends coordinate ``i`` to ``perm[i]`` and then multiplies the
destination coordinate ``j`` by ``scalars[j]``::

    apply(t, u)[j] = scalars[j] * u[perm^-1(j)]

so that ``apply(s @ t, u) == apply(s, apply(t, u))``.
"""

from __future__ import annotations

from dataclasses import dataclass

from .codes import Codeword, DoubleCirculantCode, contains, encode, is_self_dual
from .finite_field import FieldSpec


@dataclass(frozen=True)
class MonomialTransform:
    field: FieldSpec
    perm: tuple[int, ...]
    scalars: tuple[int, ...]

    def __post_init__(self):
        if sorted(self.perm) != list(range(len(self.perm))):
            raise ValueError("perm is not a bijection")
        if len(self.scalars) != len(self.perm):
            raise ValueError("scalars and perm lengths differ")
        if any(not 0 < s < self.field.q for s in self.scalars):
            raise ValueError("scalars must be nonzero field elements")

    @classmethod
    def permutation(cls, field: FieldSpec, perm) -> "MonomialTransform":
        perm = tuple(perm)
        return cls(field, perm, (1,) * len(perm))

    @classmethod
    def identity(cls, field: FieldSpec, length: int) -> "MonomialTransform":
        return cls.permutation(field, range(length))

    @classmethod
    def from_cycles(cls, field: FieldSpec, length: int, cycles) -> "MonomialTransform":
        """Build a pure permutation from 1-based cycles."""
        perm = list(range(length))
        for cyc in cycles:
            for x, y in zip(cyc, cyc[1:] + cyc[:1]):
                perm[x - 1] = y - 1
        return cls.permutation(field, perm)

    @property
    def length(self) -> int:
        return len(self.perm)

    def is_permutation(self) -> bool:
        return all(s == 1 for s in self.scalars)

    def __matmul__(self, other: "MonomialTransform") -> "MonomialTransform":
        """Composition: (self @ other) acts as other first, then self."""
        if other.field != self.field or other.length != self.length:
            raise ValueError("transforms do not match")
        F = self.field
        inv = self.inverse_perm()
        perm = tuple(self.perm[other.perm[i]] for i in range(self.length))
        scalars = tuple(F.mul(self.scalars[j], other.scalars[inv[j]]) for j in range(self.length))
        return MonomialTransform(F, perm, scalars)

    def inverse_perm(self) -> list[int]:
        inv = [0] * self.length
        for i, j in enumerate(self.perm):
            inv[j] = i
        return inv

    def inverse(self) -> "MonomialTransform":
        F = self.field
        inv = self.inverse_perm()
        # coordinate j came from inv[j] scaled by scalars[j]; undo both
        scalars = tuple(F.inv(self.scalars[self.perm[i]]) for i in range(self.length))
        return MonomialTransform(F, tuple(inv), scalars)

    def __pow__(self, k: int) -> "MonomialTransform":
        if k < 0:
            return self.inverse() ** (-k)
        out = MonomialTransform.identity(self.field, self.length)
        for _ in range(k):
            out = self @ out
        return out

    def perm_part(self) -> "MonomialTransform":
        return MonomialTransform.permutation(self.field, self.perm)

    def cycles(self) -> list[tuple[int, ...]]:
        """Nontrivial cycles, 1-based, each starting at its least element."""
        seen = [False] * self.length
        out = []
        for i in range(self.length):
            if seen[i]:
                continue
            cyc = []
            j = i
            while not seen[j]:
                seen[j] = True
                cyc.append(j + 1)
                j = self.perm[j]
            if len(cyc) > 1:
                out.append(tuple(cyc))
        return out

    def cycle_string(self) -> str:
        cyc = self.cycles()
        if not cyc:
            return "()"
        return "".join("(" + ",".join(map(str, c)) + ")" for c in cyc)

    def to_dict(self) -> dict:
        return {"cycles": self.cycle_string(), "scalars": list(self.scalars)}


def apply(t: MonomialTransform, u: Codeword) -> Codeword:
    if u.field != t.field:
        raise ValueError("codeword and transform are over different fields")
    x = u.coords
    if len(x) != t.length:
        raise ValueError(f"codeword length {len(x)} != transform length {t.length}")
    F = t.field
    out = [0] * t.length
    for i, j in enumerate(t.perm):
        out[j] = F.mul(t.scalars[j], x[i])
    return Codeword.from_coords(F, out)


# -- the explicit generators --------------------------------------------------


def tau(n: int, field: FieldSpec) -> MonomialTransform:
    """(1,2,...,n)(n+1,...,2n)."""
    if n < 2:
        raise ValueError("n must be >= 2")
    perm = [(i + 1) % n for i in range(n)] + [n + (i + 1) % n for i in range(n)]
    return MonomialTransform.permutation(field, perm)


def _require_odd(n: int) -> None:
    if n < 3 or n % 2 == 0:
        raise ValueError(f"n must be odd and >= 3, got {n}")


def pi_sigma(n: int, field: FieldSpec) -> MonomialTransform:
    """(1,n+1)(2,2n)(3,2n-1)...(n,n+2)."""
    _require_odd(n)
    perm = [0] * (2 * n)
    # 0-based: i -> n + (-i mod n), an involution
    for i in range(n):
        j = n + (-i) % n
        perm[i], perm[j] = j, i
    return MonomialTransform.permutation(field, perm)


def block_reversal(n: int, field: FieldSpec) -> MonomialTransform:
    """Fix 1 and n+1; reverse 2..n and n+2..2n."""
    perm = [(-i) % n for i in range(n)] + [n + (-i) % n for i in range(n)]
    return MonomialTransform.permutation(field, perm)


def antiswap(n: int, field: FieldSpec) -> MonomialTransform:
    """(x, y) -> (y, -x)."""
    perm = [n + i for i in range(n)] + list(range(n))
    minus = field.neg(1)
    return MonomialTransform(field, tuple(perm), (1,) * n + (minus,) * n)


def antiswap_flip(n: int, field: FieldSpec) -> MonomialTransform:
    """Block reversal composed with the antiswap (odd q)."""
    _require_odd(n)
    if field.p == 2:
        raise ValueError("antiswap flip needs odd q; use pi_sigma for even q")
    return block_reversal(n, field) @ antiswap(n, field)


def reversal_matrix(n: int) -> list[list[int]]:
    """Permutation matrix of i -> n+1-i (1-based); P A P = A^t for circulant A."""
    return [[1 if j == n - 1 - i else 0 for j in range(n)] for i in range(n)]


# -- verification ---------------------------------------------------------------


def invariant_under(code: DoubleCirculantCode, t: MonomialTransform) -> bool:
    """C t = C, checked on the images of the n generator rows."""
    if t.length != code.length:
        raise ValueError(f"transform length {t.length} != code length {code.length}")
    for i in range(code.n):
        e = [0] * code.n
        e[i] = 1
        if not contains(code, apply(t, encode(code, e))):
            return False
    return True


def group_order(gens) -> int:
    """Order of the permutation group generated by pure permutations."""
    gens = [tuple(g.perm) for g in gens]
    identity = tuple(range(len(gens[0])))
    seen = {identity}
    frontier = [identity]
    while frontier:
        nxt = []
        for x in frontier:
            for g in gens:
                y = tuple(g[i] for i in x)
                if y not in seen:
                    seen.add(y)
                    nxt.append(y)
        frontier = nxt
    return len(seen)


def _report(kind: str, code: DoubleCirculantCode, checks: dict, extra=None) -> dict:
    rep = {
        "type": kind,
        "code": code.to_dict(),
        "relations": {k: ("pass" if v else "fail") for k, v in checks.items()},
        "passed": all(checks.values()),
        "failed": [k for k, v in checks.items() if not v],
    }
    if extra:
        rep.update(extra)
    return rep


def verify_dihedral(code: DoubleCirculantCode) -> dict:
    F, n = code.field, code.n
    if F.p != 2:
        raise ValueError("dihedral check needs even q")
    _require_odd(n)
    if not is_self_dual(code):
        raise ValueError("code is not self-dual")
    t, s = tau(n, F), pi_sigma(n, F)
    ident = MonomialTransform.identity(F, 2 * n)
    checks = {
        "self_dual": True,
        "invariant_tau": invariant_under(code, t),
        "invariant_pi_sigma": invariant_under(code, s),
        "tau^n=1": t**n == ident,
        "(pi_sigma)^2=1": s @ s == ident,
        "pi_sigma*tau*pi_sigma=tau^-1": s @ t @ s == t.inverse(),
        "group_order=2n": group_order([t, s]) == 2 * n,
    }
    return _report(
        "dihedral",
        code,
        checks,
        {"generators": {"tau": t.to_dict(), "pi_sigma": s.to_dict()}},
    )


def verify_constadihedral(code: DoubleCirculantCode) -> dict:
    F, n = code.field, code.n
    if F.p == 2:
        raise ValueError("consta-dihedral check needs odd q")
    _require_odd(n)
    if not is_self_dual(code):
        raise ValueError("code is not self-dual")
    t, m = tau(n, F), antiswap_flip(n, F)
    minus_ident = MonomialTransform(F, tuple(range(2 * n)), (F.neg(1),) * (2 * n))
    tp, mp = t.perm_part(), m.perm_part()
    conj = m @ t @ m.inverse()
    checks = {
        "self_dual": True,
        "invariant_tau": invariant_under(code, t),
        "invariant_m": invariant_under(code, m),
        "tau^n=1": t**n == MonomialTransform.identity(F, 2 * n),
        "m^2=-1": m @ m == minus_ident,
        "perm(m)perm(tau)perm(m)^-1=perm(tau)^-1": mp @ tp @ mp.inverse() == tp.inverse(),
        "perm_group_order=2n": group_order([tp, mp]) == 2 * n,
    }
    # recorded only: whether the relation also holds with scalars
    extra = {
        "generators": {"tau": t.to_dict(), "m": m.to_dict()},
        "scalar_conjugation": {
            "m*tau*m^-1": conj.to_dict(),
            "equals_tau^-1": conj == t.inverse(),
        },
    }
    return _report("consta", code, checks, extra)
