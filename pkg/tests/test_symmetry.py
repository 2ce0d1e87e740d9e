import itertools
import random

import pytest
from hypothesis import given, settings, strategies as st

from dccodes.census import crt_enumerate
from dccodes.codes import Codeword, encode, make_code
from dccodes.finite_field import field_from_order, make_field
from dccodes.polyring import Poly
from dccodes.symmetry import (
    MonomialTransform,
    antiswap,
    antiswap_flip,
    apply,
    block_reversal,
    group_order,
    invariant_under,
    pi_sigma,
    reversal_matrix,
    tau,
    verify_constadihedral,
    verify_dihedral,
)

from oracles import all_codewords, circulant, matmul, transpose

F2 = make_field(2)
F5 = make_field(5)


def test_tau_cycles():
    assert tau(3, F2).cycle_string() == "(1,2,3)(4,5,6)"
    assert tau(5, F2).cycle_string() == "(1,2,3,4,5)(6,7,8,9,10)"
    assert tau(3, F2) ** 3 == MonomialTransform.identity(F2, 6)


def test_pi_sigma_cycles():
    assert pi_sigma(3, F2).cycle_string() == "(1,4)(2,6)(3,5)"
    assert pi_sigma(5, F2).cycle_string() == "(1,6)(2,10)(3,9)(4,8)(5,7)"
    s = pi_sigma(5, F2)
    assert s @ s == MonomialTransform.identity(F2, 10)
    with pytest.raises(ValueError):
        pi_sigma(4, F2)


@pytest.mark.parametrize("n", [3, 5, 7, 9, 11])
def test_pi_sigma_matches_printed_product(n):
    # (1, n+1)(2, 2n)(3, 2n-1)...(n, n+2)
    cycles = [(1, n + 1)] + [(i, 2 * n + 2 - i) for i in range(2, n + 1)]
    assert pi_sigma(n, F2) == MonomialTransform.from_cycles(F2, 2 * n, cycles)


@pytest.mark.parametrize("n", [3, 5, 7])
def test_pi_sigma_is_block_reversal_then_swap(n):
    # sigma swaps the halves; pi reverses 2..n and n+2..2n
    sigma = MonomialTransform.from_cycles(F2, 2 * n, [(i, n + i) for i in range(1, n + 1)])
    assert block_reversal(n, F2) @ sigma == pi_sigma(n, F2)


def test_antiswap_image():
    u = Codeword(F5, (1, 2, 3), (4, 0, 1))
    assert apply(antiswap(3, F5), u).coords == (4, 0, 1, 4, 3, 2)
    assert apply(antiswap(3, F5), Codeword(F5, (1, 0, 0), (0, 0, 0))).coords == (0, 0, 0, 4, 0, 0)


def test_antiswap_flip_square():
    for n in (3, 5, 7):
        m = antiswap_flip(n, F5)
        sq = m @ m
        assert sq.perm == tuple(range(2 * n))
        assert sq.scalars == (4,) * (2 * n)
    with pytest.raises(ValueError):
        antiswap_flip(3, F2)


def test_antiswap_flip_composition_oracle_n3():
    # direct computation: (x1,x2,x3 | y1,y2,y3) -> (y1,y3,y2 | -x1,-x3,-x2)
    m = antiswap_flip(3, F5)
    u = Codeword(F5, (1, 2, 3), (0, 4, 2))
    assert apply(m, u).coords == (0, 2, 4, 4, 2, 3)


def test_apply_examples():
    u = Codeword(F2, (1, 0, 0), (0, 0, 0))
    assert apply(MonomialTransform.identity(F2, 6), u) == u
    assert apply(tau(3, F2), u).coords == (0, 1, 0, 0, 0, 0)


def _random_transform(F, L, rng):
    perm = list(range(L))
    rng.shuffle(perm)
    return MonomialTransform(F, tuple(perm), tuple(rng.randrange(1, F.q) for _ in range(L)))


@settings(max_examples=60, deadline=None)
@given(st.sampled_from([2, 3, 4, 5, 7]), st.integers(1, 6), st.integers(0, 2**32))
def test_apply_respects_composition(q, n, seed):
    F = field_from_order(q)
    rng = random.Random(seed)
    s, t = _random_transform(F, 2 * n, rng), _random_transform(F, 2 * n, rng)
    u = Codeword.from_coords(F, [rng.randrange(q) for _ in range(2 * n)])
    assert apply(s @ t, u) == apply(s, apply(t, u))
    assert apply(t.inverse(), apply(t, u)) == u


@pytest.mark.parametrize("q", [2, 3, 4, 5, 7])
@pytest.mark.parametrize("n", [3, 5, 7, 9, 11])
def test_lemma1_reversal_transposes_circulants(q, n):
    F = field_from_order(q)
    rng = random.Random(q * 100 + n)
    P = reversal_matrix(n)
    for _ in range(5):
        A = circulant(F, [rng.randrange(q) for _ in range(n)], n)
        assert matmul(F, matmul(F, P, A), P) == transpose(A)


def _image_equality(code, t):
    F, n = code.field, code.n
    words = set(all_codewords(F, code.a.vector(n), n))
    return {apply(t, Codeword.from_coords(F, w)).coords for w in words} == words


@pytest.mark.parametrize("q, n", [(2, 3), (2, 5), (3, 4), (5, 3), (4, 3)])
def test_invariant_under_matches_full_image(q, n):
    F = field_from_order(q)
    rng = random.Random(7)
    transforms = [tau(n, F), MonomialTransform.from_cycles(F, 2 * n, [(1, 2)])]
    if n % 2:
        transforms.append(pi_sigma(n, F))
        if q % 2:
            transforms.append(antiswap_flip(n, F))
    transforms += [_random_transform(F, 2 * n, rng) for _ in range(3)]
    for a in itertools.islice(itertools.product(range(q), repeat=n), 0, None, max(1, q**n // 40)):
        code = make_code(F, n, Poly(F, a))
        for t in transforms:
            assert invariant_under(code, t) == _image_equality(code, t)


def test_invariant_under_examples():
    c = make_code(F2, 3, Poly(F2, (1,)))
    assert invariant_under(c, MonomialTransform.identity(F2, 6))
    assert invariant_under(c, tau(3, F2))
    # swapping coordinates 1 and 2 sends (1,0,0|1,0,0) to (0,1,0|1,0,0)
    t = MonomialTransform.from_cycles(F2, 6, [(1, 2)])
    assert not invariant_under(c, t)
    assert apply(t, encode(c, [1, 0, 0])).coords == (0, 1, 0, 1, 0, 0)


def test_group_order():
    assert group_order([tau(5, F2), pi_sigma(5, F2)]) == 10


def test_verify_dihedral_example():
    rep = verify_dihedral(make_code(F2, 3, Poly(F2, (0, 1))))
    assert rep["passed"] and rep["type"] == "dihedral"
    assert set(rep["relations"].values()) == {"pass"}


def test_verify_preconditions():
    with pytest.raises(ValueError):
        verify_dihedral(make_code(F2, 3, Poly(F2, (1, 1))))
    with pytest.raises(ValueError):
        verify_dihedral(make_code(F5, 3, Poly(F5, (2,))))
    with pytest.raises(ValueError):
        verify_constadihedral(make_code(F2, 3, Poly(F2, (1,))))


@pytest.mark.parametrize("q, n", [(2, 3), (2, 5), (2, 7), (2, 9), (4, 3), (4, 5), (4, 7), (8, 3)])
def test_theorem2_all_codes(q, n):
    F = field_from_order(q)
    for a in crt_enumerate(n, F):
        assert verify_dihedral(make_code(F, n, a))["passed"]


@pytest.mark.parametrize("q, n", [(5, 3), (5, 7), (13, 3), (13, 7), (9, 5)])
def test_theorem3_all_codes(q, n):
    F = field_from_order(q)
    codes = crt_enumerate(n, F)
    assert codes
    for a in codes:
        rep = verify_constadihedral(make_code(F, n, a))
        assert rep["passed"], rep["failed"]


def test_pi_sigma_fails_for_odd_q():
    # odd characteristic needs the sign twist
    c = make_code(F5, 3, Poly(F5, (2,)))
    assert not invariant_under(c, pi_sigma(3, F5))
    assert invariant_under(c, antiswap_flip(3, F5))


def test_serialization():
    d = antiswap_flip(3, F5).to_dict()
    assert d == {"cycles": "(1,4)(2,6)(3,5)", "scalars": [1, 1, 1, 4, 4, 4]}
