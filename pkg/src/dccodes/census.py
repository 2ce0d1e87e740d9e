"""Counting, enumeration and census sweeps for self-dual double circulant codes.

Two independent routes produce the set of self-dual first rows ``a``:

* :func:`brute_force_enumerate` scans all of GF(q)^n with a kernel;
* :func:`crt_enumerate` builds every ``a`` from its residues modulo the
  irreducible factors of x^n - 1 and glues them with the CRT.

:func:`count_formula` gives the closed-form count from the factor degrees.
"""

from __future__ import annotations

import csv
import io
import itertools
import json
import math
import random
import time
from dataclasses import asdict, dataclass, field as dc_field
from functools import cached_property

import numpy as np

from . import kernels
from .codes import DEFAULT_BUDGET, BudgetExceeded, make_code, min_distance
from .finite_field import FieldSpec, minus_one_is_square, prime_factors
from .polyring import (
    Poly,
    artin_condition,
    cyclic_mul,
    cyclic_reverse,
    factor_profile,
    factor_xn_minus_1,
    pdivmod,
    pgcd,
    pinvmod,
    pmod,
    pmul,
    pmulmod,
    ppowmod,
    pneg,
    xn_minus_1,
)

BRUTE_FORCE_BUDGET = 2**22
AUDIT_BUDGET = 2**24
DEFAULT_SAMPLE = 64


class NoSelfDualCodes(ValueError):
    """-1 is not a square in GF(q), so no self-dual double circulant code exists."""


# -- closed-form count ----------------------------------------------------------


@dataclass(frozen=True)
class CountReport:
    n: int
    q: str
    exists: bool
    formula_count: int
    branch: str
    s: int
    t: int
    d: tuple[int, ...]
    e: tuple[int, ...]

    def to_dict(self) -> dict:
        out = asdict(self)
        out["count"] = self.formula_count
        out["d"] = list(self.d)
        out["e"] = list(self.e)
        return out


def _count_by_profile(q: int, n: int, d, e) -> tuple[str, int]:
    pairs = math.prod(q**ej - 1 for ej in e)
    selfrec = math.prod(1 + q**dj for dj in d)
    if q % 2:
        if n % 2 == 0:
            return "q_odd_n_even", 4 * selfrec * pairs
        return "q_odd_n_odd", 2 * selfrec * pairs
    if n % 2:
        return "q_even_n_odd", selfrec * pairs
    raise ValueError("q even with n even is outside the counting formula")


def count_formula(n: int, field: FieldSpec) -> CountReport:
    """Number of self-dual double circulant codes of length 2n over GF(q)."""
    q = field.q
    if math.gcd(n, field.p) != 1:
        raise ValueError(f"gcd(n={n}, p={field.p}) != 1")
    prof = factor_profile(n, q)
    branch, count = _count_by_profile(q, n, prof.d, prof.e)
    if n % 2 and prof.s == 2 and prof.t == 0:
        # two irreducible factors: the closed form 2^[q odd] (q^((n-1)/2) + 1)
        closed = (2 if q % 2 else 1) * (q ** ((n - 1) // 2) + 1)
        assert closed == count, (closed, count)
        branch = "lemma4_" + branch
    exists = minus_one_is_square(field)
    return CountReport(
        n=n,
        q=str(field),
        exists=exists,
        formula_count=count if exists else 0,
        branch=branch,
        s=prof.s,
        t=prof.t,
        d=prof.d,
        e=prof.e,
    )


# -- brute force -------------------------------------------------------------------


def decode_index(field: FieldSpec, n: int, idx: int) -> Poly:
    q = field.q
    coeffs = []
    for _ in range(n):
        idx, r = divmod(idx, q)
        coeffs.append(r)
    return Poly(field, tuple(coeffs))


def brute_force_enumerate(n: int, field: FieldSpec, budget=BRUTE_FORCE_BUDGET, backend=None) -> list[Poly]:
    """Every a with a(x) a(x^-1) = -1 mod x^n - 1, by exhaustive scan."""
    if field.q**n > budget:
        raise BudgetExceeded(f"q^n = {field.q}^{n} exceeds the brute-force budget {budget}")
    hits = kernels.self_dual_scan(n, field, backend)
    return [decode_index(field, n, int(i)) for i in hits]


# -- CRT construction -----------------------------------------------------------------


@dataclass
class _Constituent:
    """Residue choices at one irreducible factor (or reciprocal pair)."""

    kind: str  # "self" or "pair"
    factor: Poly
    partner: Poly | None
    size: int
    pick: object = dc_field(repr=False)  # index -> residue list (mod factor)


class CrtPlan:
    """Residue choices per factor and the CRT basis that glues them."""

    def __init__(self, n: int, field: FieldSpec):
        if math.gcd(n, field.p) != 1:
            raise ValueError(f"gcd(n={n}, p={field.p}) != 1")
        if not minus_one_is_square(field):
            raise NoSelfDualCodes(f"-1 is not a square in GF({field.q})")
        self.n = n
        self.field = field
        self.factorization = factor_xn_minus_1(n, field)
        self.constituents = [self._self_constituent(g) for g, _ in self.factorization.self_reciprocal]
        self.constituents += [self._pair_constituent(h, hs) for h, hs, _ in self.factorization.pairs]

    @property
    def total(self) -> int:
        return math.prod(c.size for c in self.constituents)

    # residues at a self-reciprocal factor g: b with b^(1+r) = -1, r = q^(deg g / 2)

    def _self_constituent(self, g: Poly) -> _Constituent:
        F = self.field
        mod = list(g.coeffs)
        D = g.degree
        minus_one = [F.neg(1)]
        if D == 1:
            # x -> x^-1 is the identity on GF(q): b^2 = -1
            sols = [[b] for b in range(F.q) if F.mul(b, b) == F.neg(1)]
            return _Constituent("self", g, None, len(sols), lambda j, s=sols: s[j])
        r = F.q ** (D // 2)
        Q = r * r
        gamma = self._generator(mod, Q, r)
        k0 = (r - 1) // 2 if F.p != 2 else 0
        start = ppowmod(F, gamma, k0, mod)
        step = ppowmod(F, gamma, r - 1, mod)
        assert pmulmod(F, start, ppowmod(F, start, r, mod), mod) == pmod(F, minus_one, mod)

        def pick(j, start=start, step=step, mod=mod):
            return pmulmod(F, start, ppowmod(F, step, j, mod), mod)

        return _Constituent("self", g, None, r + 1, pick)

    def _generator(self, mod: list[int], Q: int, r: int) -> list[int]:
        """Least (by coefficient encoding) generator of (GF(q)[x]/mod)^*."""
        F = self.field
        # Q - 1 = (r - 1)(r + 1); factoring the halves keeps trial division cheap
        primes = sorted(set(prime_factors(r - 1)) | set(prime_factors(r + 1)))
        D = len(mod) - 1
        for idx in range(2, Q):
            cand = decode_index(F, D, idx).coeffs
            if all(ppowmod(F, list(cand), (Q - 1) // ell, mod) != [1] for ell in primes):
                return list(cand)
        raise AssertionError("no generator found")  # pragma: no cover

    # residues at a pair (h, h*): any u != 0 at h, then -1/sigma(u) at h*

    def _pair_constituent(self, h: Poly, hs: Poly) -> _Constituent:
        F, n = self.field, self.n
        e = h.degree
        hsl = list(hs.coeffs)

        def pick(j):
            u = list(decode_index(F, e, j + 1).coeffs)
            sigma_u = pmod(F, cyclic_reverse(u, n), hsl)
            v = pneg(F, pinvmod(F, sigma_u, hsl))
            return u, v

        return _Constituent("pair", h, hs, F.q**e - 1, pick)

    @cached_property
    def _basis(self) -> list[tuple[list[int], list[list[int]]]]:
        """For each factor f: (coeffs of f, [e_f * x^l mod x^n - 1 for l < deg f])."""
        F, n = self.field, self.n
        big = xn_minus_1(F, n)
        out = []
        for f in self.factorization.factors():
            fl = list(f.coeffs)
            cof, rem = pdivmod(F, big, fl)
            assert not rem
            idem = pmul(F, cof, pinvmod(F, pmod(F, cof, fl), fl))
            vecs = []
            for l in range(len(fl) - 1):
                v = cyclic_mul(F, idem, [0] * l + [1], n)
                vecs.append(v + [0] * (n - len(v)))
            out.append((fl, vecs))
        return out

    def combine(self, residues: list[list[int]]) -> Poly:
        """CRT: the unique a mod x^n - 1 with the given residue per factor."""
        F, n = self.field, self.n
        acc = [0] * n
        for res, (_, vecs) in zip(residues, self._basis):
            for l, c in enumerate(res):
                if c:
                    vec = vecs[l]
                    for k in range(n):
                        if vec[k]:
                            acc[k] = F.add(acc[k], F.mul(c, vec[k]))
        return Poly(F, tuple(acc))

    def residues_for(self, choice: tuple[int, ...]) -> list[list[int]]:
        res = []
        for c, j in zip(self.constituents, choice):
            if c.kind == "self":
                res.append(c.pick(j))
            else:
                u, v = c.pick(j)
                res.extend([u, v])
        return res

    def build(self, choice: tuple[int, ...]) -> Poly:
        return self.combine(self.residues_for(choice))

    def all_choices(self):
        return itertools.product(*(range(c.size) for c in self.constituents))

    def choice_from_index(self, idx: int) -> tuple[int, ...]:
        out = []
        for c in self.constituents:
            idx, r = divmod(idx, c.size)
            out.append(r)
        return tuple(out)

    def sample_choices(self, k: int, seed: int = 0) -> list[tuple[int, ...]]:
        """k distinct constituent tuples chosen by a seeded generator."""
        total = self.total
        if k >= total:
            return list(self.all_choices())
        rng = random.Random(seed)
        picked: set[int] = set()
        order = []
        while len(order) < k:
            i = rng.randrange(total)
            if i not in picked:
                picked.add(i)
                order.append(i)
        return [self.choice_from_index(i) for i in order]


def crt_enumerate(n: int, field: FieldSpec) -> list[Poly]:
    """All self-dual first rows, assembled from their CRT constituents."""
    plan = CrtPlan(n, field)
    return sorted((plan.build(ch) for ch in plan.all_choices()), key=Poly.sort_key)


def crt_sample(n: int, field: FieldSpec, k: int, seed: int = 0) -> list[Poly]:
    plan = CrtPlan(n, field)
    return sorted((plan.build(ch) for ch in plan.sample_choices(k, seed)), key=Poly.sort_key)


# -- membership audit ------------------------------------------------------------------


def _all_vectors(q: int, n: int) -> np.ndarray:
    idx = np.arange(q**n, dtype=np.int64)
    out = np.empty((idx.shape[0], n), dtype=np.int64)
    for j in range(n):
        out[:, j] = idx % q
        idx //= q
    return out


def units_mod_xn_minus_1(n: int, field: FieldSpec) -> list[Poly]:
    """Every a of degree < n with gcd(a, x^n - 1) = 1."""
    big = xn_minus_1(field, n)
    out = []
    for idx in range(1, field.q**n):
        a = decode_index(field, n, idx)
        if pgcd(field, list(a.coeffs), big) == [1]:
            out.append(a)
    return out


def is_constant_word(v, w) -> bool:
    """Both halves are scalar multiples of the all-ones vector."""
    return len(set(v)) == 1 and len(set(w)) == 1


def membership_count(n: int, field: FieldSpec, v, w) -> int:
    """|{a unit mod x^n - 1 : (v, w) in C_a}|, by direct check."""
    v, w = list(v), list(w)
    count = 0
    for a in units_mod_xn_minus_1(n, field):
        prod = cyclic_mul(field, v, a.coeffs, n)
        if prod + [0] * (n - len(prod)) == w:
            count += 1
    return count


def lemma7_audit(n: int, field: FieldSpec, budget=AUDIT_BUDGET) -> dict:
    """Count, for every word u = (v, w), the codes C_a containing it.

    Requires x^n - 1 = (x - 1) h(x) with h irreducible.  Non-constant words
    must lie in at most q - 1 of the codes.
    """
    q = field.q
    flags = artin_condition(q, n)
    if not flags["two_factor"]:
        raise ValueError(f"x^{n} - 1 does not have exactly two irreducible factors over GF({q})")
    if q ** (3 * n) > budget:
        raise BudgetExceeded(f"q^(3n) = {q}^{3 * n} exceeds the audit budget {budget}")
    add, mul = kernels.tables(field)
    V = _all_vectors(q, n)
    weights = q ** np.arange(n, dtype=np.int64)
    v_idx = V @ weights
    counts = np.zeros(q ** (2 * n), dtype=np.int64)
    units = units_mod_xn_minus_1(n, field)
    for a in units:
        A = make_code(field, n, a).circulant()
        W = np.zeros_like(V)
        for j in range(n):
            col = np.zeros(V.shape[0], dtype=np.int64)
            for i in range(n):
                if A[i][j]:
                    col = add[col, mul[V[:, i], A[i][j]]]
            W[:, j] = col
        counts += np.bincount(v_idx + (W @ weights) * q**n, minlength=q ** (2 * n))

    ones = [sum(c * q**j for j in range(n)) for c in range(q)]
    constant = np.zeros(q ** (2 * n), dtype=bool)
    for cv in ones:
        for cw in ones:
            constant[cv + cw * q**n] = True
    nonconst = counts[~constant]
    max_nc = int(nonconst.max())
    # keyed "c|d" for the word (c * ones | d * ones)
    const_counts = {
        f"{c}|{d}": int(counts[cv + cw * q**n])
        for c, cv in enumerate(ones)
        for d, cw in enumerate(ones)
    }
    return {
        "n": n,
        "q": str(field),
        "scanned": q**n,
        "candidates": len(units),
        "words": q ** (2 * n),
        "max_count_nonconstant": max_nc,
        "bound": q - 1,
        "violations": int((nonconst > q - 1).sum()),
        "passed": max_nc <= q - 1,
        "max_count_constant": int(counts[constant].max()),
        "constant_counts": const_counts,
    }


# -- entropy bound ---------------------------------------------------------------------


def entropy_q(q: int, x: float) -> float:
    """q-ary entropy; H_q(0) = 0 by continuity."""
    if q < 2:
        raise ValueError("q must be >= 2")
    top = (q - 1) / q
    if not 0 <= x <= top + 1e-15:
        raise ValueError(f"x = {x} outside [0, {top}]")
    if x == 0:
        return 0.0
    lq = math.log(q)
    h = x * math.log(q - 1) - x * math.log(x)
    if x < 1:
        h -= (1 - x) * math.log(1 - x)
    return h / lq


def inv_entropy_q(q: int, y: float, tol: float = 1e-12) -> float:
    """The x in [0, (q-1)/q] with H_q(x) = y, by bisection."""
    if not 0 <= y <= 1:
        raise ValueError(f"y = {y} outside [0, 1]")
    lo, hi = 0.0, (q - 1) / q
    if y == 0:
        return 0.0
    if y == 1:
        return hi
    while hi - lo > tol:
        mid = (lo + hi) / 2
        if entropy_q(q, mid) < y:
            lo = mid
        else:
            hi = mid
    return (lo + hi) / 2


def gv_quarter(q: int) -> float:
    return inv_entropy_q(q, 0.25)


# -- census ------------------------------------------------------------------------------

CENSUS_COLUMNS = [
    "n",
    "q",
    "artin_prime",
    "artin_primitive",
    "two_factor",
    "exists",
    "count",
    "examined",
    "d_best",
    "delta",
    "gv_delta",
    "ms",
    "error",
]


@dataclass
class CensusRow:
    n: int
    q: str
    artin_prime: bool | None = None
    artin_primitive: bool | None = None
    two_factor: bool | None = None
    exists: bool | None = None
    count: int | None = None
    examined: int = 0
    d_best: int | None = None
    delta: float | None = None
    gv_delta: float | None = None
    ms: float | None = None
    error: str | None = None

    @property
    def rate(self) -> float:
        return 0.5

    def to_dict(self) -> dict:
        return asdict(self)


def census_run(
    field: FieldSpec,
    n_values,
    sample_size: int = DEFAULT_SAMPLE,
    seed: int = 0,
    budget: int = DEFAULT_BUDGET,
    timing: bool = False,
    workers: int = 1,
) -> list[CensusRow]:
    """One row per n (ascending): flags, exact count, best distance found.

    Codes are enumerated in full when the count is at most ``sample_size``,
    otherwise ``sample_size`` constituent tuples are drawn with ``seed``.
    ``ms`` is filled only with ``timing=True`` so default output is
    reproducible byte for byte.
    """
    rows = []
    gv = gv_quarter(field.q)
    for n in sorted(set(n_values)):
        t0 = time.perf_counter()
        row = CensusRow(n=n, q=str(field), gv_delta=gv)
        try:
            if n >= 2:
                flags = artin_condition(field.q, n)
                row.artin_prime = flags["n_prime"]
                row.artin_primitive = flags["primitive"]
                row.two_factor = flags["two_factor"]
            rep = count_formula(n, field)
            row.exists = rep.exists
            row.count = rep.formula_count
            if rep.exists:
                if field.q**n > budget:
                    raise BudgetExceeded(f"q^n = {field.q}^{n} exceeds distance budget {budget}")
                codes = crt_sample(n, field, sample_size, seed)
                row.examined = len(codes)
                row.d_best = max(
                    min_distance(make_code(field, n, a), budget=budget, workers=workers) for a in codes
                )
                row.delta = row.d_best / (2 * n)
        except ValueError as exc:
            row.error = str(exc)
        if timing:
            row.ms = (time.perf_counter() - t0) * 1000.0
        rows.append(row)
    return rows


def _fmt(v) -> str:
    if v is None:
        return ""
    if isinstance(v, bool):
        return "true" if v else "false"
    if isinstance(v, float):
        return format(v, ".12g")
    return str(v)


def rows_to_csv(rows: list[CensusRow]) -> str:
    buf = io.StringIO()
    writer = csv.writer(buf, lineterminator="\n")
    writer.writerow(CENSUS_COLUMNS)
    for r in rows:
        d = r.to_dict()
        writer.writerow([_fmt(d[c]) for c in CENSUS_COLUMNS])
    return buf.getvalue()


def _json_value(v):
    if isinstance(v, float):
        return float(format(v, ".12g"))
    return v


def rows_to_json(rows: list[CensusRow]) -> str:
    data = [{c: _json_value(r.to_dict()[c]) for c in CENSUS_COLUMNS} for r in rows]
    return json.dumps(data, indent=2)
