import random
from math import gcd

import pytest

from gausschar.cyclo import (
    MAX_ORDER,
    CyclotomicElement,
    OrderMismatchError,
    cyclotomic_polynomial,
    euler_phi,
    evaluate_poly,
    poly_divmod,
    poly_mul,
    poly_trim,
    sum_of_zeta_powers,
    zeta_pow,
)


def test_cyclotomic_small_cases():
    assert cyclotomic_polynomial(1) == (-1, 1)
    assert cyclotomic_polynomial(2) == (1, 1)
    assert cyclotomic_polynomial(3) == (1, 1, 1)
    assert cyclotomic_polynomial(4) == (1, 0, 1)
    # x^6 - 1 divided by Phi_1 * Phi_2 * Phi_3, done by hand
    assert cyclotomic_polynomial(6) == (1, -1, 1)
    assert cyclotomic_polynomial(7) == (1, 1, 1, 1, 1, 1, 1)
    assert cyclotomic_polynomial(12) == (1, 0, -1, 0, 1)


def test_cyclotomic_degree_is_totient():
    for n in range(1, 61):
        assert len(cyclotomic_polynomial(n)) - 1 == euler_phi(n)


def test_cyclotomic_product_over_divisors():
    for n in range(1, 61):
        prod = (1,)
        for d in range(1, n + 1):
            if n % d == 0:
                prod = poly_mul(prod, cyclotomic_polynomial(d))
        assert prod == poly_trim([-1] + [0] * (n - 1) + [1])


def test_cyclotomic_vanishes_at_zeta():
    for n in range(1, 61):
        assert evaluate_poly(cyclotomic_polynomial(n), zeta_pow(n, 1)).is_zero


def test_poly_divmod_requires_monic():
    with pytest.raises(ValueError):
        poly_divmod((1, 2, 3), (1, 2))


def test_poly_divmod_reconstructs():
    rng = random.Random(7)
    for _ in range(200):
        num = tuple(rng.randint(-9, 9) for _ in range(rng.randint(0, 10)))
        den = tuple(rng.randint(-9, 9) for _ in range(rng.randint(0, 5))) + (1,)
        quot, rem = poly_divmod(num, den)
        assert _poly_add(poly_mul(quot, den), rem) == poly_trim(num)
        assert len(rem) < len(den)


def _padded(a, b):
    n = max(len(a), len(b))
    return zip(tuple(a) + (0,) * (n - len(a)), tuple(b) + (0,) * (n - len(b)))


def _poly_add(a, b):
    return poly_trim(x + y for x, y in _padded(a, b))


def test_zeta_pow_examples():
    assert zeta_pow(4, 2) == CyclotomicElement.from_int(4, -1)
    assert zeta_pow(6, 2).coeffs == (-1, 1)
    assert zeta_pow(5, 5) == CyclotomicElement.one(5)
    assert zeta_pow(5, -1) == zeta_pow(5, 4)


def test_add_examples():
    z3 = zeta_pow(3, 1)
    assert z3 + zeta_pow(3, 2) == CyclotomicElement.from_int(3, -1)
    z = CyclotomicElement.from_coeffs(12, (3, -1, 0, 2))
    assert z + CyclotomicElement.zero(12) == z
    assert (zeta_pow(4, 1) + zeta_pow(4, 3)).is_zero


def test_mul_examples():
    i = zeta_pow(4, 1)
    assert i * i == CyclotomicElement.from_int(4, -1)
    one = CyclotomicElement.one(4)
    assert (one + i) * (one - i) == CyclotomicElement.from_int(4, 2)
    assert zeta_pow(6, 1) * zeta_pow(6, 5) == CyclotomicElement.one(6)


def test_int_operands():
    z = zeta_pow(8, 3)
    assert z * 2 == z + z
    assert 1 + z - 1 == z
    assert 0 * z == CyclotomicElement.zero(8)


def test_order_mismatch_rejected():
    with pytest.raises(OrderMismatchError):
        zeta_pow(3, 1) + zeta_pow(6, 2)
    with pytest.raises(OrderMismatchError):
        zeta_pow(3, 1) * zeta_pow(6, 2)


def test_conjugate_examples():
    for n, k in [(5, 1), (8, 3), (12, 7), (9, 4)]:
        assert zeta_pow(n, k).conjugate() == zeta_pow(n, n - k)
    one = CyclotomicElement.one(3)
    assert (one + zeta_pow(3, 1)).conjugate() == -zeta_pow(3, 1)
    assert CyclotomicElement.from_int(20, -7).conjugate() == CyclotomicElement.from_int(20, -7)


def test_conjugate_is_involutive_automorphism():
    rng = random.Random(11)
    for order in (1, 2, 3, 4, 6, 8, 9, 12, 15, 16, 20, 24, 30, 36, 45, 60):
        deg = euler_phi(order)
        for _ in range(20):
            a = CyclotomicElement(order, tuple(rng.randint(-9, 9) for _ in range(deg)))
            b = CyclotomicElement(order, tuple(rng.randint(-9, 9) for _ in range(deg)))
            assert a.conjugate().conjugate() == a
            assert (a * b).conjugate() == a.conjugate() * b.conjugate()
            assert (a + b).conjugate() == a.conjugate() + b.conjugate()


def test_norm_squared_examples():
    one = CyclotomicElement.one(4)
    assert (one + zeta_pow(4, 1)).norm_squared() == CyclotomicElement.from_int(4, 2)
    for n, k in [(7, 3), (12, 5), (30, 17)]:
        assert zeta_pow(n, k).norm_squared() == CyclotomicElement.one(n)


def test_norm_squared_multiplicative():
    rng = random.Random(13)
    for order in (3, 4, 5, 8, 12, 18, 24, 40, 60):
        deg = euler_phi(order)
        for _ in range(15):
            a = CyclotomicElement(order, tuple(rng.randint(-5, 5) for _ in range(deg)))
            b = CyclotomicElement(order, tuple(rng.randint(-5, 5) for _ in range(deg)))
            assert (a * b).norm_squared() == a.norm_squared() * b.norm_squared()


def test_embed_examples():
    assert zeta_pow(3, 1).embed(6) == zeta_pow(6, 2)
    assert CyclotomicElement.from_int(5, 2).embed(20) == CyclotomicElement.from_int(20, 2)
    assert zeta_pow(3, 1).embed(12) == zeta_pow(12, 4)


def test_embed_rejects_non_divisible():
    with pytest.raises(ValueError):
        zeta_pow(5, 1).embed(7)


def test_embed_is_injective_ring_homomorphism():
    rng = random.Random(17)
    for order, target in [(3, 6), (4, 12), (6, 30), (10, 40), (12, 60)]:
        deg = euler_phi(order)
        for _ in range(15):
            a = CyclotomicElement(order, tuple(rng.randint(-9, 9) for _ in range(deg)))
            b = CyclotomicElement(order, tuple(rng.randint(-9, 9) for _ in range(deg)))
            ea, eb = a.embed(target), b.embed(target)
            assert (a + b).embed(target) == ea + eb
            assert (a * b).embed(target) == ea * eb
            if a != b:
                assert ea != eb


def test_galois_examples():
    z = CyclotomicElement.from_coeffs(10, (1, 2, 0, -1))
    assert z.galois(1) == z
    assert z.galois(9) == z.conjugate()
    assert zeta_pow(6, 1).galois(5) == zeta_pow(6, 5)
    with pytest.raises(ValueError):
        zeta_pow(6, 1).galois(2)
    with pytest.raises(ValueError):
        zeta_pow(6, 1).galois(3)


def test_galois_composition_and_automorphism():
    rng = random.Random(19)
    for order in (5, 7, 8, 9, 12, 15, 16, 21, 36, 60):
        units = [k for k in range(1, order) if gcd(k, order) == 1]
        deg = euler_phi(order)
        for _ in range(10):
            a = CyclotomicElement(order, tuple(rng.randint(-9, 9) for _ in range(deg)))
            b = CyclotomicElement(order, tuple(rng.randint(-9, 9) for _ in range(deg)))
            k, j = rng.choice(units), rng.choice(units)
            assert a.galois(k).galois(j) == a.galois(k * j % order)
            assert (a + b).galois(k) == a.galois(k) + b.galois(k)
            assert (a * b).galois(k) == a.galois(k) * b.galois(k)


def test_in_subfield_examples():
    assert CyclotomicElement.one(12).in_subfield(4)
    assert CyclotomicElement.one(12).in_subfield(1)
    # zeta_3 sits inside Q(zeta_6) but sigma_5 moves it out of Q = Q(zeta_2)
    assert not zeta_pow(3, 1).embed(6).in_subfield(2)
    assert zeta_pow(6, 2).in_subfield(3)
    assert zeta_pow(12, 3).in_subfield(4)
    assert not zeta_pow(12, 4).in_subfield(4)
    with pytest.raises(ValueError):
        zeta_pow(12, 1).in_subfield(5)


def test_in_subfield_matches_construction():
    # Elements embedded from Q(zeta_d) must pass the membership test; adding
    # zeta_N itself must fail whenever phi(N) > phi(d).
    rng = random.Random(23)
    for d, order in [(2, 10), (3, 12), (4, 20), (5, 15), (6, 30), (4, 12)]:
        deg = euler_phi(d)
        for _ in range(10):
            inside = CyclotomicElement(d, tuple(rng.randint(-9, 9) for _ in range(deg)))
            lifted = inside.embed(order)
            assert lifted.in_subfield(d)
            assert not (lifted + zeta_pow(order, 1)).in_subfield(d)


def test_as_integer():
    assert CyclotomicElement.one(7).as_integer() == 1
    assert (zeta_pow(3, 1) + zeta_pow(3, 2)).as_integer() == -1
    assert zeta_pow(5, 1).as_integer() is None
    assert CyclotomicElement.from_int(9, -42).as_integer() == -42


def test_sum_of_zeta_powers_matches_explicit_addition():
    rng = random.Random(29)
    for order in (2, 3, 7, 10, 12, 36):
        for _ in range(10):
            exponents = [rng.randrange(-2 * order, 2 * order) for _ in range(8)]
            total = CyclotomicElement.zero(order)
            for e in exponents:
                total = total + zeta_pow(order, e)
            assert sum_of_zeta_powers(order, exponents) == total


def test_full_root_sum_vanishes():
    # 1 + zeta + ... + zeta^(N-1) = 0 for every N > 1.
    for n in range(2, 40):
        assert sum_of_zeta_powers(n, range(n)).is_zero


def test_ring_axioms_random_sample():
    rng = random.Random(31)
    for order in (1, 2, 5, 6, 12, 25, 30, 48, 60):
        deg = euler_phi(order)
        one = CyclotomicElement.one(order)
        zero = CyclotomicElement.zero(order)
        for _ in range(50):
            a, b, c = (CyclotomicElement(order, tuple(rng.randint(-9, 9) for _ in range(deg)))
                       for _ in range(3))
            assert a + b == b + a
            assert (a + b) + c == a + (b + c)
            ab = a * b
            assert ab == b * a
            assert (ab) * c == a * (b * c)
            assert a * (b + c) == ab + a * c
            assert a * one == a
            assert a + zero == a
            assert (a * zero).is_zero


def test_order_guards():
    with pytest.raises(ValueError):
        cyclotomic_polynomial(0)
    with pytest.raises(ValueError):
        cyclotomic_polynomial(MAX_ORDER + 1)
    with pytest.raises(ValueError):
        zeta_pow(-3, 1)
    with pytest.raises(ValueError):
        zeta_pow(5, 1).embed(5 * MAX_ORDER)


def test_coefficient_vector_length_enforced():
    with pytest.raises(ValueError):
        CyclotomicElement(6, (1, 2, 3))
