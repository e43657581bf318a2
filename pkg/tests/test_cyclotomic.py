"""Exactness tests for the cyclotomic layer.

Expected values here are either forced by the defining relations or frozen
from the independent polynomial-division oracle below.
"""

import random
from math import gcd
from fractions import Fraction

import pytest

from permchar.cyclotomic import (
    Cyclotomic,
    cyclotomic_polynomial,
    divisors,
    euler_phi,
    one,
    rational,
    root_of_unity,
    zero,
)
from permchar.errors import UsageError


# ---------------------------------------------------------------- oracles

def poly_mul(a, b):
    out = [0] * (len(a) + len(b) - 1)
    for i, x in enumerate(a):
        for j, y in enumerate(b):
            out[i + j] += x * y
    return out


def poly_div(num, den):
    """Exact long division of integer polynomials; den monic."""
    num = list(num)
    dd = len(den) - 1
    out = [0] * (len(num) - dd)
    for k in range(len(num) - dd, 0, -1):
        c = num[k + dd - 1]
        out[k - 1] = c
        for i, d in enumerate(den):
            num[k - 1 + i] -= c * d
    assert all(c == 0 for c in num)
    return out


def rand_value(rng, m):
    return Cyclotomic(
        m,
        [
            Fraction(rng.randint(-6, 6), rng.randint(1, 5))
            for _ in range(euler_phi(m))
        ],
    )


# ---------------------------------------------------------- polynomials

def test_phi_p_prime():
    assert cyclotomic_polynomial(3) == (1, 1, 1)
    assert cyclotomic_polynomial(5) == (1, 1, 1, 1, 1)


def test_phi_base_case():
    assert cyclotomic_polynomial(1) == (-1, 1)


def test_phi_6_against_division_oracle():
    # divide x^6 - 1 by Phi_1 * Phi_2 * Phi_3 with exact polynomial division
    num = [-1, 0, 0, 0, 0, 0, 1]
    den = poly_mul(poly_mul([-1, 1], [1, 1]), [1, 1, 1])
    assert tuple(poly_div(num, den)) == (1, -1, 1)
    assert cyclotomic_polynomial(6) == (1, -1, 1)


def test_phi_products_recover_xm_minus_1():
    for m in range(1, 31):
        prod = [1]
        for d in divisors(m):
            prod = poly_mul(prod, list(cyclotomic_polynomial(d)))
        assert prod == [-1] + [0] * (m - 1) + [1]


def test_phi_vanishes_at_root():
    for m in range(1, 31):
        z = root_of_unity(m, 1)
        acc = zero(m)
        for c in reversed(cyclotomic_polynomial(m)):
            acc = acc * z + c
        assert acc.is_zero


# -------------------------------------------------------- roots of unity

def test_root_of_unity_examples():
    assert root_of_unity(3, 0) == one(3)
    assert root_of_unity(3, 2) == Cyclotomic(3, [-1, -1])
    assert root_of_unity(3, 5) == root_of_unity(3, 2)


def test_cancellation_identity():
    # 1 + zeta_3 + zeta_3^2 = 0
    total = root_of_unity(3, 0) + root_of_unity(3, 1) + root_of_unity(3, 2)
    assert total.is_zero
    assert (root_of_unity(3, 1) * root_of_unity(3, 2)).is_integer(1)


def test_additive_identity_random():
    rng = random.Random(7)
    for _ in range(30):
        m = rng.randint(1, 30)
        x = rand_value(rng, m)
        assert x + zero(m) == x
        assert x - x == zero(m)


def test_ring_axioms_random():
    rng = random.Random(11)
    for _ in range(60):
        m = rng.randint(1, 30)
        a, b, c = (rand_value(rng, m) for _ in range(3))
        assert (a + b) + c == a + (b + c)
        assert a + b == b + a
        assert (a * b) * c == a * (b * c)
        assert a * b == b * a
        assert a * (b + c) == a * b + a * c
        assert a * one(m) == a


def test_order_mismatch_raises():
    with pytest.raises(UsageError):
        root_of_unity(3, 1) + root_of_unity(4, 1)
    with pytest.raises(UsageError):
        root_of_unity(3, 1) * root_of_unity(6, 1)


# ----------------------------------------------------------- conjugation

def test_conjugate_examples():
    assert root_of_unity(3, 1).conjugate() == root_of_unity(3, 2)
    assert root_of_unity(3, 1).conjugate() == Cyclotomic(3, [-1, -1])
    r = rational(Fraction(7, 3), 5)
    assert r.conjugate() == r


def test_conjugate_involution_and_hom():
    rng = random.Random(13)
    for _ in range(40):
        m = rng.randint(1, 24)
        a, b = rand_value(rng, m), rand_value(rng, m)
        assert a.conjugate().conjugate() == a
        assert (a + b).conjugate() == a.conjugate() + b.conjugate()
        assert (a * b).conjugate() == a.conjugate() * b.conjugate()


def test_galois_action_composes():
    rng = random.Random(29)
    for _ in range(30):
        m = rng.choice([1, 3, 5, 7, 8, 12])
        units = [k for k in range(1, m + 1) if gcd(k, m) == 1]
        k1, k2 = rng.choice(units), rng.choice(units)
        a = rand_value(rng, m)
        assert a.galois(k2).galois(k1) == a.galois(k1 * k2)
    with pytest.raises(UsageError):
        root_of_unity(6, 1).galois(2)


def test_norm_trace_positivity():
    # Tr(a * conj(a)) is a nonnegative rational, zero exactly at a = 0
    rng = random.Random(17)
    for _ in range(40):
        m = rng.randint(1, 12)
        a = Cyclotomic(m, [rng.randint(-4, 4) for _ in range(euler_phi(m))])
        t = (a * a.conjugate()).trace()
        assert t >= 0
        assert (t == 0) == a.is_zero


# -------------------------------------------------------------- embedding

def test_embed_examples():
    assert rational(1, 1).embed(3) == one(3)
    # zeta_3 = zeta_6^2 = zeta_6 - 1 in the power basis of Phi_6 = x^2 - x + 1
    assert root_of_unity(3, 1).embed(6) == Cyclotomic(6, [-1, 1])
    x = root_of_unity(12, 5)
    assert x.embed(12) == x


def test_embed_is_ring_hom_and_commutes():
    rng = random.Random(19)
    for _ in range(40):
        m = rng.choice([1, 2, 3, 4, 6, 8, 12])
        mult = rng.choice([1, 2, 3])
        M = m * mult
        a, b = rand_value(rng, m), rand_value(rng, m)
        assert (a + b).embed(M) == a.embed(M) + b.embed(M)
        assert (a * b).embed(M) == a.embed(M) * b.embed(M)
        assert a.conjugate().embed(M) == a.embed(M).conjugate()


def test_embed_requires_divisibility():
    with pytest.raises(UsageError):
        root_of_unity(4, 1).embed(6)


# ------------------------------------------------------- misc interface

def test_rational_value_and_is_integer():
    assert rational(Fraction(4, 2), 3).is_integer(2)
    assert not root_of_unity(3, 1).is_rational
    with pytest.raises(UsageError):
        root_of_unity(3, 1).rational_value()


def test_json_round_trip():
    rng = random.Random(23)
    for _ in range(20):
        m = rng.randint(1, 20)
        x = rand_value(rng, m)
        assert Cyclotomic.from_json(x.to_json()) == x
    assert root_of_unity(3, 1).to_json() == {"order": 3, "coeffs": ["0/1", "1/1"]}


def test_render():
    assert zero(3).render() == "0"
    assert (root_of_unity(6, 1) * Fraction(-2, 3) + 1).render() == "1 - 2/3*z6"
