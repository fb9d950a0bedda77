"""Series engine: operations against brute-force oracles and frozen values."""

import random

import pytest
from hypothesis import given, settings, strategies as st

from sptforge.rings import INT_RING, LAURENT_RING, LaurentPolynomial
from sptforge.combinatorics import partition_count
from sptforge.qseries import (
    DivergentSeriesError,
    MonomialSpec,
    NegativeExponentError,
    SeriesError,
    TruncatedSeries,
    assert_z_band,
    crank_series,
    divisor_series,
    euler_product,
    h_series,
    interleave,
    jacobi_product,
    jacobi_shifted,
    lambert_sum,
    pochhammer,
    rank_series,
    series_dissect,
    series_invert,
    series_mul,
    series_substitute,
    t_series,
    theta_sum,
    u_series,
    v_series,
)


def brute_mul(a, b, order):
    out = [0] * order
    for i, x in enumerate(a[:order]):
        for j, y in enumerate(b[:order]):
            if i + j < order:
                out[i + j] += x * y
    return out


def S(coeffs, order=None):
    return TruncatedSeries(INT_RING, coeffs, order or len(coeffs))


def test_mul_examples():
    assert series_mul(S([1, -1], 4), S([1, 1], 4)).coeffs == [1, 0, -1, 0]
    # (q;q)_3 by hand: (1-q)(1-q^2)(1-q^3)
    expected = brute_mul(brute_mul([1, -1], [1, 0, -1], 8), [1, 0, 0, -1], 8)
    assert expected == [1, -1, -1, 0, 1, 1, -1, 0]
    got = pochhammer(MonomialSpec(1, 0, 1), 1, 3, 8, INT_RING)
    assert got.coeffs == expected
    a = S([3, 1, 4, 1, 5])
    assert (a * TruncatedSeries.one(INT_RING, 5)).coeffs == a.coeffs
    with pytest.raises(SeriesError):
        series_mul(a, TruncatedSeries.one(LAURENT_RING, 5))


def test_invert():
    geo = series_invert(S([1, -1, 0, 0, 0]))
    assert geo.coeffs == [1, 1, 1, 1, 1]
    p = series_invert(euler_product(1, 1, 61))
    assert [p.coeffs[n] for n in range(7)] == [1, 1, 2, 3, 5, 7, 11]
    assert all(p.coeffs[n] == partition_count(n) for n in range(61))
    assert series_invert(TruncatedSeries.one(INT_RING, 5)).coeffs == [1, 0, 0, 0, 0]
    with pytest.raises(SeriesError):
        series_invert(S([2, 1, 1]))


@settings(max_examples=40, deadline=None)
@given(st.lists(st.integers(-9, 9), min_size=1, max_size=18), st.sampled_from([1, -1]))
def test_invert_is_two_sided(tail, unit):
    a = S([unit] + tail)
    inv = series_invert(a)
    assert (a * inv).coeffs == [1] + [0] * (a.order - 1)
    assert (inv * a).coeffs == [1] + [0] * (a.order - 1)


def test_dissect_examples():
    ones = S([1] * 12)
    assert ones.dissect(3, 1).coeffs == [1, 1, 1, 1]
    p = series_invert(euler_product(1, 1, 40))
    piece = series_dissect(p, 5, 4)
    assert piece.coeffs[0] == partition_count(4) == 5
    assert piece.coeffs[1] == partition_count(9) == 30
    a = S([3, 1, 4, 1])
    assert series_dissect(a, 1, 0).coeffs == a.coeffs
    with pytest.raises(SeriesError):
        series_dissect(a, 3, 3)


@settings(max_examples=40, deadline=None)
@given(st.lists(st.integers(-9, 9), min_size=2, max_size=30), st.sampled_from([2, 3, 5, 7]))
def test_dissection_interleaves_back(coeffs, p):
    a = S(coeffs)
    pieces = [a.dissect(p, r) for r in range(min(p, a.order))]
    if len(pieces) < p:
        pieces += [TruncatedSeries.zeros(INT_RING, 1)] * (p - len(pieces))
    back = interleave(pieces, p, a.order, INT_RING)
    assert back.coeffs == a.coeffs


def test_substitute():
    assert series_substitute(S([1, 1]), 2).coeffs == [1, 0, 1, 0]
    assert series_substitute(S([1, 1, 1]), 1, negate=True).coeffs == [1, -1, 1]
    lhs = series_substitute(euler_product(1, 1, 20), 3).truncate(60)
    assert lhs.coeffs == euler_product(3, 3, 60).coeffs
    # cap on the stretched order
    big = series_substitute(S([1] * 700), 2)
    assert big.order == 1200


def test_substitute_cap_env(monkeypatch):
    monkeypatch.setenv("SPTFORGE_MAX_ORDER", "100")
    assert series_substitute(S([1] * 700), 2).order == 100


def test_pochhammer():
    e = euler_product(1, 1, 8)
    assert e.coeffs == [1, -1, -1, 0, 0, 1, 0, 1]  # pentagonal numbers
    zfac = pochhammer(MonomialSpec(1, 1, 0), 1, 1, 3)
    assert zfac.coeffs[0] == LaurentPolynomial({0: 1, 1: -1})
    gauss = euler_product(1, 2, 60) * euler_product(1, 1, 60)
    assert gauss.first_mismatch(theta_sum(1, 2, 60)) is None
    with pytest.raises(DivergentSeriesError):
        pochhammer(MonomialSpec(1, 0, 1), 0, None, 10, INT_RING)
    with pytest.raises(DivergentSeriesError):
        pochhammer(MonomialSpec(1, 0, -2), 1, None, 10, INT_RING)
    # the finite/infinite quotient identity (z;q)_n/(z;q)_inf = 1/(z q^n;q)_inf
    n = 3
    lhs = pochhammer(MonomialSpec(1, 1, 0), 1, n, 25) * pochhammer(MonomialSpec(1, 1, n), 1, None, 25)
    assert lhs.first_mismatch(pochhammer(MonomialSpec(1, 1, 0), 1, None, 25)) is None


def test_jacobi_product():
    lhs = jacobi_product(1, 3, 60)
    rhs = euler_product(1, 1, 60) * series_invert(euler_product(3, 3, 60))
    assert lhs.first_mismatch(rhs) is None
    assert jacobi_product(1, 2, 10).coeffs[0] == 1
    tri = jacobi_product(2, 5, 60) * euler_product(5, 5, 60)
    assert tri.first_mismatch(theta_sum(2, 5, 60)) is None
    with pytest.raises(SeriesError):
        jacobi_product(5, 5, 10)


def test_jacobi_shifted_reduction():
    # argument above the base folds back with a monomial: j(q^60; q^50)
    sh, ser = jacobi_shifted(1, 60, 50, 120)
    base = jacobi_product(10, 50, 120)
    assert sh == -10
    assert ser.first_mismatch(-base) is None
    # multiples of the base vanish
    sh, zero = jacobi_shifted(1, 100, 50, 40)
    assert zero.is_zero()
    # negative-sign arguments at a multiple of the base stay nonzero
    sh, ser = jacobi_shifted(-1, 50, 50, 40)
    assert ser.coeffs[0] == 2


def test_theta_sum():
    assert theta_sum(1, 2, 40).coeffs[:10] == [1, -2, 0, 0, 2, 0, 0, 0, 0, -2]
    half = theta_sum(1, 4, 60, sign=1)
    rhs = euler_product(2, 2, 60) * series_invert(euler_product(1, 2, 60))
    assert half.first_mismatch(rhs) is None
    assert theta_sum(1, 2, 60).dissect(4, 2).is_zero()  # no square is 2 mod 4
    with pytest.raises(NegativeExponentError):
        theta_sum(9, 2, 30)


def test_theta_equals_jacobi_times_eta():
    # every (g, b) pair appearing in the dissection identities
    pairs = [(5, 25), (10, 25), (7, 49), (14, 49), (21, 49), (5, 50), (10, 50),
             (15, 50), (20, 50), (14, 98), (21, 98), (28, 98), (35, 98), (42, 98),
             (5, 100), (15, 100), (35, 100), (10, 200), (30, 200), (70, 200)]
    N = 220
    for g, b in pairs:
        lhs = jacobi_product(g, b, N) * euler_product(b, b, N)
        assert lhs.first_mismatch(theta_sum(g, b, N)) is None, (g, b)


def test_divisor_series():
    ds = divisor_series(1, 6, 30)
    assert ds.coeffs[1] == 1
    assert ds.coeffs[5] == 0  # divisors 1 and 5 cancel
    # brute-force cross check
    for n in range(1, 30):
        want = sum(1 for d in range(1, n + 1) if n % d == 0 and d % 6 == 1)
        want -= sum(1 for d in range(1, n + 1) if n % d == 0 and d % 6 == 5)
        assert ds.coeffs[n] == want
    with pytest.raises(SeriesError):
        divisor_series(6, 6, 10)


def test_divisor_lambert_product_identity():
    N = 100
    lhs = TruncatedSeries.one(INT_RING, N) + divisor_series(1, 6, N).scale(3)
    e2, e3, e1, e6 = (euler_product(k, k, N) for k in (2, 3, 1, 6))
    rhs = e2 * e2 * e2 * e2 * e2 * e2 * e3 * series_invert(e1 * e1 * e1 * e6 * e6)
    assert lhs.first_mismatch(rhs) is None


def test_lambert_sum():
    ls = lambert_sum(1, 2, 8)
    assert ls.coeffs[1:4] == [1, 1, 2]
    assert lambert_sum(1, 1, 8).coeffs[4] == 3  # d(4)
    assert lambert_sum(7, 3, 2).is_zero()
    # divisor-count oracle: coefficient of q^N counts divisors d with N/d odd
    full = lambert_sum(1, 2, 60)
    for n in range(1, 60):
        want = sum(1 for d in range(1, n + 1) if n % d == 0 and (n // d) % 2 == 1)
        assert full.coeffs[n] == want


def test_rank_series():
    r = rank_series("symbolic", 6)
    assert r.coeffs[0] == LaurentPolynomial({0: 1})
    assert r.coeffs[2] == LaurentPolynomial({1: 1, -1: 1})
    p = rank_series("one", 30)
    assert p.coeffs == series_invert(euler_product(1, 1, 30)).coeffs
    # coefficient of q^n evaluated at z=1 is p(n)
    for n in range(6):
        assert rank_series("symbolic", 6).coeffs[n].eval_at_one() == partition_count(n)


def test_crank_series():
    c = crank_series("symbolic", 5)
    assert c.coeffs[0] == LaurentPolynomial({0: 1})
    assert c.coeffs[1] == LaurentPolynomial({1: 1, 0: -1, -1: 1})
    assert crank_series("one", 25).coeffs == series_invert(euler_product(1, 1, 25)).coeffs


def test_bilateral_builders():
    assert (v_series(5, 3, 80) + v_series(5, 17, 80)).is_zero()
    assert (u_series(5, 5, 80) + u_series(5, 19, 80, pre_shift=7)).is_zero()
    # quarter-period evaluation: 1 + 4 h(-q^25, q^100) = ((q^25;q^25)^2/(q^50;q^50))^2
    h = h_series(MonomialSpec(-1, 0, 25), 100, 320)
    e25, e50 = euler_product(25, 25, 320), euler_product(50, 50, 320)
    prod = e25 * e25 * e25 * e25 * series_invert(e50 * e50)
    assert (h.scale(4) + 1).first_mismatch(prod) is None
    # the n = 0 term of an unstarred T at z = 1 is a pole
    with pytest.raises(DivergentSeriesError):
        t_series(MonomialSpec(1, 0, 0), MonomialSpec(1, 0, 1), 10, 40)
    # U_5(19) alone needs a negative power; the shifted form is fine
    with pytest.raises(NegativeExponentError):
        u_series(5, 19, 40)


def test_bilateral_dispatcher():
    from sptforge.qseries import bilateral_builder

    assert bilateral_builder("V", {"ell": 5, "b": 3}, 60).coeffs == v_series(5, 3, 60).coeffs
    assert bilateral_builder("U", {"ell": 5, "b": 5}, 60).coeffs == u_series(5, 5, 60).coeffs
    t = bilateral_builder("T", {"z": MonomialSpec(1, 0, 70), "w": MonomialSpec(-1, 0, 25), "base": 100}, 150)
    assert t.coeffs == t_series(MonomialSpec(1, 0, 70), MonomialSpec(-1, 0, 25), 100, 150).coeffs
    h = bilateral_builder("h", {"z": MonomialSpec(-1, 0, 25), "base": 100}, 150)
    assert h.coeffs == h_series(MonomialSpec(-1, 0, 25), 100, 150).coeffs
    with pytest.raises(SeriesError):
        bilateral_builder("W", {}, 10)


def test_truncation_monotonicity():
    rng = random.Random(5)
    for _ in range(60):
        a = S([rng.randint(-9, 9) for _ in range(24)])
        b = S([rng.randint(-9, 9) for _ in range(24)])
        full = (a * b).coeffs
        short = (a.truncate(10) * b).coeffs
        assert short == full[:10]
        inv_full = series_invert(S([1] + a.coeffs[1:]))
        inv_short = series_invert(S([1] + a.coeffs[1:11], 11))
        assert inv_short.coeffs == inv_full.coeffs[:11]


def test_z_band():
    two_var = pochhammer(MonomialSpec(1, 1, 0), 1, None, 40) * pochhammer(MonomialSpec(1, -1, 0), 1, None, 40)
    assert assert_z_band(two_var) <= 2
    bad = TruncatedSeries(LAURENT_RING, [LaurentPolynomial({9: 1})], 1)
    with pytest.raises(SeriesError):
        assert_z_band(bad)
