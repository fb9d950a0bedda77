"""Coefficient-ring arithmetic: axioms, canonical forms, zero tests."""

import random

import pytest
from hypothesis import given, settings, strategies as st

from sptforge.rings import (
    CyclotomicInteger,
    LaurentPolynomial,
    ExactDivisionError,
    ModulusError,
    INT_RING,
    LAURENT_RING,
    cyclotomic_ring,
    cyc_from_root_power,
    cyc_is_zero,
    cyc_mul,
    laurent_eval_at_root,
    laurent_mul,
)


def _random_cyc(rng, t):
    return CyclotomicInteger(t, [rng.randint(-9, 9) for _ in range(t - 1)])


def _random_laurent(rng):
    return LaurentPolynomial({rng.randint(-6, 6): rng.randint(-9, 9) for _ in range(rng.randint(0, 5))})


def test_ring_axioms_bulk():
    """Associativity, commutativity, distributivity, unit laws on >= 10^4 triples."""
    rng = random.Random(20260809)
    for i in range(4000):
        a, b, c = (rng.randint(-99, 99) for _ in range(3))
        assert (a + b) + c == a + (b + c)
        assert a * (b + c) == a * b + a * c
        assert (a * b) * c == a * (b * c)
    for t in (3, 5, 7):
        ring = cyclotomic_ring(t)
        one, zero = ring.one(), ring.zero()
        for i in range(1200):
            a, b, c = (_random_cyc(rng, t) for _ in range(3))
            assert (a + b) + c == a + (b + c)
            assert a * b == b * a
            assert (a * b) * c == a * (b * c)
            assert a * (b + c) == a * b + a * c
            assert a * one == a and a + zero == a
    one, zero = LAURENT_RING.one(), LAURENT_RING.zero()
    for i in range(3000):
        a, b, c = (_random_laurent(rng) for _ in range(3))
        assert (a + b) + c == a + (b + c)
        assert a * b == b * a
        assert (a * b) * c == a * (b * c)
        assert a * (b + c) == a * b + a * c
        assert a * one == a and a + zero == a


def test_root_power_examples():
    assert cyc_from_root_power(5, 0) == CyclotomicInteger(5, (1, 0, 0, 0))
    assert cyc_from_root_power(5, 7) == cyc_from_root_power(5, 2)
    # zeta_3^2 = -1 - zeta_3
    assert cyc_from_root_power(3, 2) == CyclotomicInteger(3, (-1, -1))
    with pytest.raises(ModulusError):
        cyc_from_root_power(6, 1)
    with pytest.raises(ModulusError):
        cyc_from_root_power(1, 0)


def test_cyc_mul_examples():
    z3 = cyc_from_root_power(3, 1)
    z3sq = cyc_from_root_power(3, 2)
    assert (1 - z3) * (1 - z3sq) == 3
    z5 = cyclotomic_ring(5)
    assert z5.root(2) * z5.root(3) == z5.one()
    phi = sum((z5.root(k) for k in range(5)), z5.zero())
    rng = random.Random(7)
    for _ in range(20):
        x = _random_cyc(rng, 5)
        assert cyc_is_zero(cyc_mul(phi, x))
    with pytest.raises(ModulusError):
        cyc_mul(z3, z5.root(1))


def test_cyc_is_zero_sound_and_complete():
    z5 = cyclotomic_ring(5)
    assert cyc_is_zero(sum((z5.root(k) for k in range(5)), z5.zero()))
    z7 = cyclotomic_ring(7)
    assert cyc_is_zero(z7.root(1) - z7.root(1))
    assert not cyc_is_zero(1 - cyc_from_root_power(3, 1))
    rng = random.Random(11)
    for t in (3, 5, 7):
        for _ in range(400):
            x = _random_cyc(rng, t)
            assert cyc_is_zero(x) == (not any(x.coeffs))


def test_laurent_examples():
    z = LaurentPolynomial.monomial(1)
    zi = LaurentPolynomial.monomial(-1)
    assert laurent_mul(z - 1, zi - 1) == LaurentPolynomial({1: -1, -1: -1, 0: 2})
    assert laurent_mul(LaurentPolynomial.monomial(3), LaurentPolynomial.monomial(-3)) == 1
    assert laurent_mul(1 + z, LaurentPolynomial()) == LaurentPolynomial()
    # canonical: no zero entries survive
    assert ((z - 1) + (1 - z)).terms == {}


def test_eval_at_root_examples():
    z = LaurentPolynomial.monomial(1)
    zi = LaurentPolynomial.monomial(-1)
    ring5 = cyclotomic_ring(5)
    assert laurent_eval_at_root(z + zi, 5) == ring5.root(1) + ring5.root(4)
    phi = sum((LaurentPolynomial.monomial(k) for k in range(5)), LaurentPolynomial())
    assert laurent_eval_at_root(phi, 5).is_zero()
    assert laurent_eval_at_root(LaurentPolynomial.monomial(7), 7) == 1


@settings(max_examples=60, deadline=None)
@given(
    st.dictionaries(st.integers(-8, 8), st.integers(-20, 20), max_size=6),
    st.dictionaries(st.integers(-8, 8), st.integers(-20, 20), max_size=6),
    st.sampled_from([3, 5, 7]),
)
def test_eval_at_root_is_a_homomorphism(ta, tb, t):
    a, b = LaurentPolynomial(ta), LaurentPolynomial(tb)
    assert laurent_eval_at_root(a * b, t) == laurent_eval_at_root(a, t) * laurent_eval_at_root(b, t)
    assert laurent_eval_at_root(a + b, t) == laurent_eval_at_root(a, t) + laurent_eval_at_root(b, t)


def test_exact_division():
    assert cyclotomic_ring(5).div_int(CyclotomicInteger(5, (10, -5, 0, 20)), 5) == CyclotomicInteger(5, (2, -1, 0, 4))
    with pytest.raises(ExactDivisionError):
        cyclotomic_ring(5).div_int(CyclotomicInteger(5, (1, 0, 0, 0)), 2)
    assert INT_RING.div_int(-12, 4) == -3
    with pytest.raises(ExactDivisionError):
        LAURENT_RING.div_int(LaurentPolynomial({2: 3}), 2)
