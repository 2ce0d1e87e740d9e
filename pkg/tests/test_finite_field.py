import pytest
from hypothesis import given, settings, strategies as st

from dccodes.finite_field import (
    FieldElement,
    arith,
    embed,
    field_from_order,
    is_irreducible_mod_p,
    make_field,
    minus_one_is_square,
    parse_field,
    sqrt_of_minus_one,
)

from oracles import PRIME_POWERS_TO_169, squares

SMALL_FIELDS = [(2, 1), (2, 2), (2, 3), (3, 1), (3, 2), (5, 1), (7, 1), (2, 4), (13, 1), (5, 2)]


def test_prime_field_moduli():
    assert make_field(2, 1).modulus == (0, 1)
    assert make_field(5, 1).q == 5


def test_gf4_modulus_is_x2_x_1():
    F = make_field(2, 2)
    assert F.modulus == (1, 1, 1)
    assert F.q == 4


def test_make_field_is_canonical():
    assert make_field(3, 2) is make_field(3, 2)
    assert parse_field("3^2") is make_field(3, 2)
    assert parse_field("9") is make_field(3, 2)


@pytest.mark.parametrize("p, m", [(4, 1), (1, 1), (2, 0), (6, 2)])
def test_make_field_rejects(p, m):
    with pytest.raises(ValueError):
        make_field(p, m)


def test_modulus_is_lexicographically_smallest():
    # brute force: the first irreducible among all monic degree-m polynomials
    import itertools

    for p, m in [(2, 2), (2, 3), (2, 4), (3, 2), (3, 3), (5, 2)]:
        first = next(
            list(low) + [1]
            for low in itertools.product(range(p), repeat=m)
            if is_irreducible_mod_p(list(low) + [1], p)
        )
        assert make_field(p, m).modulus == tuple(first)


def test_irreducibility_against_root_search():
    # degree 2 and 3 polynomials are irreducible iff they have no root
    for p in (2, 3, 5):
        import itertools

        for m in (2, 3):
            for low in itertools.product(range(p), repeat=m):
                f = list(low) + [1]
                has_root = any(sum(c * x**i for i, c in enumerate(f)) % p == 0 for x in range(p))
                assert is_irreducible_mod_p(f, p) == (not has_root)


def test_arith_examples():
    F5 = make_field(5)
    assert arith(F5, "mul", 2, 3).rep == 1
    assert arith(F5, "inv", 2).rep == 3
    F4 = make_field(2, 2)
    w = F4(2)
    assert (w * w).rep == 3  # omega + 1


def test_arith_errors():
    F5 = make_field(5)
    with pytest.raises(ZeroDivisionError):
        arith(F5, "inv", 0)
    with pytest.raises(ValueError):
        F5(1) + make_field(7)(1)
    with pytest.raises(ValueError):
        arith(F5, "mul", 2, 9)


def test_pow_negative_exponent():
    F = make_field(3, 2)
    for x in range(1, 9):
        assert F.mul(F.pow(x, -3), F.pow(x, 3)) == 1


@pytest.mark.parametrize("p, m", SMALL_FIELDS)
def test_field_axioms_exhaustive(p, m):
    F = make_field(p, m)
    for x in range(F.q):
        assert F.add(x, F.neg(x)) == 0
        if x:
            assert F.mul(x, F.inv(x)) == 1
        for y in range(F.q):
            # Frobenius is additive
            assert F.pow(F.add(x, y), p) == F.add(F.pow(x, p), F.pow(y, p))


@pytest.mark.parametrize("p, m", [(2, 3), (3, 2), (5, 1)])
def test_table_and_slow_paths_agree(p, m):
    F = make_field(p, m)
    for x in range(F.q):
        for y in range(F.q):
            assert F.mul(x, y) == F._mul_slow(x, y)
            assert F.add(x, y) == F._add_slow(x, y)


@settings(max_examples=60, deadline=None)
@given(st.sampled_from([(2, 8), (3, 5), (7, 3)]), st.data())
def test_distributive_law(pm, data):
    F = make_field(*pm)
    x, y, z = (data.draw(st.integers(0, F.q - 1)) for _ in range(3))
    assert F.mul(x, F.add(y, z)) == F.add(F.mul(x, y), F.mul(x, z))
    assert F.mul(x, y) == F.mul(y, x)


def test_large_field_table_free():
    F = make_field(2, 20)
    x = 123456
    assert F.mul(x, F.inv(x)) == 1
    G = make_field(3, 12)
    assert G.mul(777, G.inv(777)) == 1


@pytest.mark.parametrize("q", PRIME_POWERS_TO_169)
def test_minus_one_is_square_matches_exhaustive_squares(q):
    F = field_from_order(q)
    assert minus_one_is_square(F) == (F.neg(1) in squares(F))


def test_minus_one_square_examples():
    assert minus_one_is_square(make_field(2))
    assert minus_one_is_square(make_field(5))
    assert not minus_one_is_square(make_field(3))
    assert minus_one_is_square(make_field(3, 2))


def test_sqrt_of_minus_one():
    assert sqrt_of_minus_one(make_field(5)) == 2
    assert sqrt_of_minus_one(make_field(2)) == 1
    assert sqrt_of_minus_one(make_field(3)) is None
    for q in PRIME_POWERS_TO_169:
        F = field_from_order(q)
        a = sqrt_of_minus_one(F)
        if a is not None:
            assert F.mul(a, a) == F.neg(1)
            assert all(F.mul(b, b) != F.neg(1) for b in range(a))


def test_field_element_wrapper():
    F = make_field(7)
    a, b = F(3), F(5)
    assert (a + b).rep == 1
    assert (a - b).rep == 5
    assert (a / b * b) == a
    assert (-a).rep == 4
    assert (a**-1).rep == 5
    assert int(2 * a) == 6
    with pytest.raises(ValueError):
        FieldElement(F, 7)


@pytest.mark.parametrize("p, m, k", [(2, 2, 3), (3, 2, 2), (2, 3, 2), (5, 1, 3)])
def test_embedding_is_a_ring_homomorphism(p, m, k):
    small = make_field(p, m)
    emb = embed(small, k)
    big = emb.big
    assert big.q == small.q**k
    for x in range(small.q):
        assert emb.pull(emb(x)) == x
        for y in range(small.q):
            assert emb(small.add(x, y)) == big.add(emb(x), emb(y))
            assert emb(small.mul(x, y)) == big.mul(emb(x), emb(y))
