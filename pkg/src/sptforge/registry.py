"""Declarative catalog of verifiable identities and the comparison runner.

Each case builds both sides of one (or a chain of) identities at a given
truncation order and compares coefficientwise.  Two-variable cases compare
full Laurent coefficients rather than evaluations, which catches z-degree
errors that any single substitution would miss.  Statements whose natural
form divides by (1-z)(1-z^-1) or by an integer are registered in an
equivalent cleared form: both sides are multiplied by the offending factor,
which keeps every object inside the exact coefficient rings.

Case ids are the stable public namespace of the command-line runner.
"""

from __future__ import annotations

import fnmatch
import functools
import time
from concurrent.futures import ThreadPoolExecutor
from dataclasses import dataclass

from .rings import INT_RING, LAURENT_RING, LaurentPolynomial, cyclotomic_ring
from .qseries import (
    MonomialSpec,
    TruncatedSeries,
    SeriesError,
    euler_product,
    factor_pass,
    geom_pass,
    h_series,
    jacobi_product,
    jacobi_shifted,
    lambert_progression,
    lambert_sum,
    lift_series,
    pochhammer,
    rank_dissection_sum,
    rank_series,
    crank_series,
    t_series,
    theta_sum,
    u_series,
    v_series,
)
from .sptcrank import build_spt_crank
from .reports import Mismatch, VerificationReport, render_value


class UnknownCaseError(KeyError):
    pass


@dataclass(frozen=True)
class IdentityCase:
    id: str
    ring: str  # "integer" | "cyclotomic(t)" | "two-variable"
    default_order: int
    build: callable  # order -> list[(label, lhs, rhs)]
    description: str
    paper_bound: int | None = None  # minimal order from the original analysis


# -- shared cached building blocks ---------------------------------------------

@functools.lru_cache(maxsize=None)
def _E(k: int, N: int) -> TruncatedSeries:
    return euler_product(k, k, N)


@functools.lru_cache(maxsize=None)
def _A(a: int, b: int, N: int) -> TruncatedSeries:
    return euler_product(a, b, N)


@functools.lru_cache(maxsize=None)
def _J(g: int, b: int, N: int) -> TruncatedSeries:
    return jacobi_product(g, b, N)


@functools.lru_cache(maxsize=None)
def _Jm(g: int, b: int, N: int) -> TruncatedSeries:
    """j(-q^g; q^b), guaranteed shift-free for 0 < g < b."""
    shift, series = jacobi_shifted(-1, g, b, N)
    if shift:
        raise SeriesError("unexpected shift in negative jacobi product")
    return series


@functools.lru_cache(maxsize=None)
def _inv(key, N: int) -> TruncatedSeries:
    kind, *args = key
    table = {"E": _E, "A": _A, "J": _J, "Jm": _Jm}
    return table[kind](*args, N).invert()


def _invE(k, N):
    return _inv(("E", k), N)


def _invA(a, b, N):
    return _inv(("A", a, b), N)


def _invJ(g, b, N):
    return _inv(("J", g, b), N)


def _invJm(g, b, N):
    return _inv(("Jm", g, b), N)


def _zpoly(terms: dict) -> LaurentPolynomial:
    return LaurentPolynomial(dict(terms))


def _zquad(j: int) -> LaurentPolynomial:
    """(1 - z^(j-1))(1 - z^j) z^(1-j) = z^(1-j) - 1 - z + z^j, exponent-safe."""
    out = LaurentPolynomial.monomial(1 - j)
    out = out - 1
    out = out - LaurentPolynomial.monomial(1)
    return out + LaurentPolynomial.monomial(j)


def _mul_z_pochhammer(series: TruncatedSeries, z_exp: int, base: int, start: int = 0) -> TruncatedSeries:
    """series * (z^z_exp q^start; q^base)_inf over the Laurent ring."""
    coeffs = list(series.coeffs)
    x = LaurentPolynomial.monomial(z_exp)
    one = LAURENT_RING.one()
    e = start
    while e < series.order:
        if e == 0:
            f = one - x
            coeffs = [f * c for c in coeffs]
        else:
            factor_pass(coeffs, x, e)
        e += base
    return TruncatedSeries(LAURENT_RING, coeffs, series.order)


def _one_plus_z(series: TruncatedSeries) -> TruncatedSeries:
    return series.scale(_zpoly({0: 1, 1: 1}))


# -- left sides of the single-series theorem -------------------------------------

def _series_lhs(family: str, order: int) -> TruncatedSeries:
    base = 1 if family in ("J1", "J2", "J3") else 2
    S = build_spt_crank(family, "symbolic", order)
    S = _mul_z_pochhammer(S, 1, base)
    S = _mul_z_pochhammer(S, -1, base)
    if family in ("J1", "J2", "J3"):
        S = S * lift_series(_E(1, order), LAURENT_RING)
    elif family == "F3":
        S = S * lift_series(_A(1, 2, order), LAURENT_RING)
    return _one_plus_z(S)


_J_POLY = {
    "J1": lambda j: ((1, 0), (-1, j), (-1, 2 * j - 2), (1, 4 * j - 3), (1, 5 * j - 2), (-1, 6 * j - 3)),
    "J2": lambda j: ((1, 0), (-1, j - 1), (-1, 2 * j), (1, 4 * j - 1), (1, 5 * j - 3), (-1, 6 * j - 3)),
    "J3": lambda j: ((1, j - 1), (-1, j), (-1, 2 * j - 2), (1, 2 * j),
                     (1, 4 * j - 3), (-1, 4 * j - 1), (-1, 5 * j - 3), (1, 5 * j - 2)),
}


def _series_rhs_j(family: str, order: int) -> TruncatedSeries:
    acc = TruncatedSeries.zeros(LAURENT_RING, order)
    j = 2
    while j * (j - 1) // 2 <= order:  # one guard term past the order
        e0 = j * (j - 1) // 2
        term = [0] * order
        for c, e in _J_POLY[family](j):
            if e0 + e < order:
                term[e0 + e] += c
        geom_pass(term, 1, 3 * j - 3)
        geom_pass(term, 1, 3 * j)
        zpart = _zquad(j)
        if j % 2 == 0:
            zpart = -zpart
        acc = acc + lift_series(TruncatedSeries(INT_RING, term, order), LAURENT_RING).scale(zpart)
        j += 1
    return acc


def _series_rhs_theta(exp_fn, sign_fn, order: int) -> TruncatedSeries:
    import math

    coeffs = [LAURENT_RING.zero()] * order
    n_limit = math.isqrt(order) + 4
    for j in range(-n_limit, n_limit + 1):
        e = exp_fn(j)
        if 0 <= e < order:
            coeffs[e] = coeffs[e] + _zquad(j) * sign_fn(j)
    for j in (-n_limit, n_limit):
        if exp_fn(j) < order:
            raise SeriesError("theta range too small")
    return TruncatedSeries(LAURENT_RING, coeffs, order)


def _case_series_single(family):
    def build(order):
        lhs = _series_lhs(family, order)
        if family in ("J1", "J2", "J3"):
            rhs = _series_rhs_j(family, order)
        elif family == "F3":
            rhs = _series_rhs_theta(lambda j: (j - 1) * (j - 1),
                                    lambda j: -1 if j % 2 == 0 else 1, order)
        elif family == "G4":
            rhs = _series_rhs_theta(lambda j: 2 * j * j - j, lambda j: 1, order)
        else:
            rhs = _series_rhs_theta(lambda j: 2 * j * j + j, lambda j: 1, order)
        return [("series", lhs, rhs)]

    return build


# -- product corollary -----------------------------------------------------------

def _case_product_f3(order):
    lhs = _mul_z_pochhammer(_mul_z_pochhammer(build_spt_crank("F3", "symbolic", order), 1, 2), -1, 2)
    lhs = lhs * lift_series(_A(1, 2, order), LAURENT_RING)
    t1 = pochhammer(MonomialSpec(1, 1, 1), 2, None, order) * pochhammer(MonomialSpec(1, -1, 1), 2, None, order)
    t1 = t1 * lift_series(_E(2, order), LAURENT_RING)
    t2 = lift_series(_E(1, order) * _A(1, 2, order), LAURENT_RING)
    return [("product", lhs, t1 - t2)]


def _case_product_g4(family):
    def build(order):
        lhs = _mul_z_pochhammer(_mul_z_pochhammer(build_spt_crank(family, "symbolic", order), 1, 2), -1, 2)
        lhs = _one_plus_z(lhs)
        z = _zpoly({1: 1})

        def neg_poch(z_exp, start):
            return pochhammer(MonomialSpec(-1, z_exp, start), 4, None, order)

        q4 = lift_series(_E(4, order), LAURENT_RING)
        if family == "G4":
            t1 = (neg_poch(-1, 1) * neg_poch(1, 3) * q4).scale(z)
            t2 = neg_poch(1, 1) * neg_poch(-1, 3) * q4
        else:
            t1 = (neg_poch(1, 1) * neg_poch(-1, 3) * q4).scale(z)
            t2 = neg_poch(-1, 1) * neg_poch(1, 3) * q4
        t3 = _one_plus_z(lift_series(_E(2, order) * _invA(1, 2, order), LAURENT_RING))
        return [("product", lhs, t1 + t2 - t3)]

    return build


# -- dissections of the main theorem ----------------------------------------------

def _RS(P, r, N):
    return rank_dissection_sum(P, r, N)


def _case_dissect_b2_5(order):
    N = order
    ring = cyclotomic_ring(5)
    C = ring.combo
    lhs = build_spt_crank("B2", ("root", 5), N)
    L = lambda s: lift_series(s, ring)
    rhs = L(TruncatedSeries.one(INT_RING, N))
    rhs = rhs - L(_E(25, N) * _J(10, 25, N) * _invJ(5, 25, N) * _invJ(5, 25, N))
    rhs = rhs + L((_invE(25, N) * _RS(25, 5, N)).shift_q(5)).scale(C({0: 1, 1: -1, 4: -1}))
    rhs = rhs + L((_E(25, N) * _invJ(10, 25, N)).shift_q(2))
    rhs = rhs + L((_E(25, N) * _J(5, 25, N) * _invJ(10, 25, N) * _invJ(10, 25, N)).shift_q(3)).scale(C({1: 1, 4: 1}))
    rhs = rhs + L((_invE(25, N) * _RS(25, 10, N)).shift_q(8)).scale(C({1: 1, 4: 1}))
    return [("dissection", lhs, rhs)]


def _case_dissect_b2_7(order):
    N = order
    ring = cyclotomic_ring(7)
    C = ring.combo
    lhs = build_spt_crank("B2", ("root", 7), N)
    L = lambda s: lift_series(s, ring)
    c16 = C({1: 1, 6: 1})
    rhs = L(TruncatedSeries.one(INT_RING, N)).scale(c16)
    rhs = rhs - L(_E(49, N) * _J(21, 49, N) * _invJ(7, 49, N) * _invJ(14, 49, N)).scale(c16)
    rhs = rhs + L((_invE(49, N) * _RS(49, 7, N)).shift_q(7)).scale(C({0: -1, 1: 1, 6: 1}))
    rhs = rhs + L((_E(49, N) * _J(14, 49, N) * _invJ(7, 49, N) * _invJ(21, 49, N)).shift_q(2))
    rhs = rhs + L((_invE(49, N) * _RS(49, 21, N)).shift_q(16)).scale(C({0: 1, 2: 1, 5: 1}))
    rhs = rhs + L((_E(49, N) * _invJ(14, 49, N)).shift_q(3)).scale(c16)
    rhs = rhs + L((_E(49, N) * _invJ(21, 49, N)).shift_q(4)).scale(C({0: 1, 1: 1, 2: 1, 5: 1, 6: 1}))
    rhs = rhs - L((_invE(49, N) * _RS(49, 14, N)).shift_q(13)).scale(C({2: 1, 5: 1}))
    rhs = rhs + L((_E(49, N) * _J(7, 49, N) * _invJ(14, 49, N) * _invJ(21, 49, N)).shift_q(6))
    return [("dissection", lhs, rhs)]


def _case_dissect_f3_3(order):
    N = order
    ring = cyclotomic_ring(3)
    lhs = build_spt_crank("F3", ("root", 3), N)
    L = lambda s: lift_series(s, ring)
    rhs = L((_E(18, N) * _E(9, N) * _invE(6, N)).shift_q(1))
    rhs = rhs + L((_E(18, N) * _E(18, N) * _E(18, N) * _E(18, N) * _E(3, N)
                   * _invE(9, N) * _invE(9, N) * _invE(6, N) * _invE(6, N)).shift_q(2))
    return [("dissection", lhs, rhs)]


def _case_dissect_f3_5(order):
    # both sides are scaled by 5 so the fifth-integral coefficients stay in Z[zeta_5]
    N = order
    ring = cyclotomic_ring(5)
    C = ring.combo
    lhs = build_spt_crank("F3", ("root", 5), N).scale(5)
    L = lambda s: lift_series(s, ring)
    rhs = L((_E(25, N) * _invJ(10, 50, N)).shift_q(1)).scale(5)
    rhs = rhs + L((_E(50, N) * _J(15, 50, N) * _invA(25, 50, N) * _invJ(10, 50, N)).shift_q(2)).scale(C({0: 3, 1: 1, 4: 1}))
    rhs = rhs - L((_E(25, N) * _J(10, 25, N) * _invJ(5, 25, N) * _invJ(20, 50, N)).shift_q(2)).scale(C({0: 1, 1: 2, 4: 2}))
    rhs = rhs + L((_E(25, N) * _J(5, 25, N) * _invJ(10, 25, N) * _invJ(10, 50, N)).shift_q(2)).scale(C({0: 3, 1: 1, 4: 1}))
    rhs = rhs - L((_E(50, N) * _J(5, 50, N) * _invA(25, 50, N) * _invJ(20, 50, N)).shift_q(7)).scale(C({0: 1, 1: 2, 4: 2}))
    rhs = rhs + L((_E(25, N) * _invJ(20, 50, N)).shift_q(3)).scale(C({0: 5, 1: 5, 4: 5}))
    return [("dissection (times 5)", lhs, rhs)]


def _case_dissect_f3_7(order):
    N = order
    ring = cyclotomic_ring(7)
    C = ring.combo
    lhs = build_spt_crank("F3", ("root", 7), N).scale(7)
    L = lambda s: lift_series(s, ring)
    rhs = L((_E(98, N) * _J(35, 98, N) * _invA(49, 98, N) * _invJ(14, 98, N)).shift_q(1)).scale(
        C({0: 18, 1: 9, 2: 3, 5: 3, 6: 9}))
    rhs = rhs - L((_E(14, N) * _invA(7, 14, N)).shift_q(1)).scale(C({0: 5, 1: 6, 2: 2, 5: 2, 6: 6}))
    rhs = rhs + L((_E(98, N) * _J(21, 98, N) * _invA(49, 98, N) * _invJ(28, 98, N)).shift_q(8)).scale(
        C({0: 2, 1: 1, 2: -2, 5: -2, 6: 1}))
    rhs = rhs - L((_E(49, N) * _J(35, 98, N) * _invJ(21, 49, N)).shift_q(1)).scale(C({0: 2, 1: 1, 2: -2, 5: -2, 6: 1}))
    rhs = rhs - L((_E(49, N) * _J(21, 98, N) * _invJ(7, 49, N)).shift_q(1)).scale(C({0: 4, 1: 2, 2: 3, 5: 3, 6: 2}))
    rhs = rhs + L((_E(49, N) * _J(14, 49, N) * _invJ(7, 49, N) * _invJ(28, 98, N)).shift_q(2)).scale(7)
    rhs = rhs + L((_E(49, N) * _J(7, 49, N) * _invJ(21, 49, N) * _invJ(14, 98, N)).shift_q(3)).scale(
        C({0: 7, 1: 7, 6: 7}))
    rhs = rhs + L((_E(49, N) * _J(21, 49, N) * _invJ(14, 49, N) * _invJ(42, 98, N)).shift_q(5)).scale(
        C({0: 7, 1: 7, 2: 7, 5: 7, 6: 7}))
    return [("dissection (times 7)", lhs, rhs)]


def _case_dissect_g4_5(order):
    N = order
    ring = cyclotomic_ring(5)
    C = ring.combo
    lhs = build_spt_crank("G4", ("root", 5), N)
    L = lambda s: lift_series(s, ring)
    rhs = -L((_E(100, N) * _J(10, 200, N) * _invJ(10, 50, N) * _invJ(5, 100, N)).shift_q(10)).scale(C({0: 1, 1: 1, 4: 1}))
    rhs = rhs - L((_E(50, N) * _invA(25, 50, N) * _invJ(20, 50, N)).shift_q(5)).scale(C({1: 1, 4: 1}))
    rhs = rhs - L((_E(100, N) * _J(30, 200, N) * _invJ(10, 50, N) * _invJ(15, 100, N)).shift_q(6))
    rhs = rhs - L((_E(100, N) * _J(10, 200, N) * _invJ(20, 50, N) * _invJ(5, 100, N)).shift_q(12))
    rhs = rhs - L((_E(50, N) * _invA(25, 50, N) * _invJ(10, 50, N)).shift_q(3))
    rhs = rhs - L((_E(100, N) * _J(30, 200, N) * _invJ(20, 50, N) * _invJ(15, 100, N)).shift_q(8)).scale(C({1: 1, 4: 1}))
    return [("dissection", lhs, rhs)]


def _case_dissect_ag4_5(order):
    N = order
    ring = cyclotomic_ring(5)
    C = ring.combo
    lhs = build_spt_crank("AG4", ("root", 5), N)
    L = lambda s: lift_series(s, ring)
    rhs = -L((_E(100, N) * _J(10, 200, N) * _invJ(10, 50, N) * _invJ(5, 100, N)).shift_q(10))
    rhs = rhs - L((_E(100, N) * _J(70, 200, N) * _invJ(10, 50, N) * _invJ(35, 100, N)).shift_q(1))
    rhs = rhs - L((_E(100, N) * _J(30, 200, N) * _invJ(10, 50, N) * _invJ(15, 100, N)).shift_q(6)).scale(C({0: 1, 1: 1, 4: 1}))
    rhs = rhs - L((_E(100, N) * _J(10, 200, N) * _invJ(20, 50, N) * _invJ(5, 100, N)).shift_q(12)).scale(C({1: 1, 4: 1}))
    rhs = rhs - L((_E(100, N) * _J(70, 200, N) * _invJ(20, 50, N) * _invJ(35, 100, N)).shift_q(3)).scale(C({1: 1, 4: 1}))
    rhs = rhs - L((_E(100, N) * _J(30, 200, N) * _invJ(20, 50, N) * _invJ(15, 100, N)).shift_q(8))
    return [("dissection", lhs, rhs)]


# -- rank and crank dissections ---------------------------------------------------

def _case_rank_zeta5(order):
    N = order
    ring = cyclotomic_ring(5)
    C = ring.combo
    lhs = rank_series(("root", 5), N)
    L = lambda s: lift_series(s, ring)
    rhs = L(_E(25, N) * _J(10, 25, N) * _invJ(5, 25, N) * _invJ(5, 25, N))
    rhs = rhs + L((_invE(25, N) * _RS(25, 5, N)).shift_q(5)).scale(C({0: -2, 1: 1, 4: 1}))
    rhs = rhs + L((_E(25, N) * _invJ(5, 25, N)).shift_q(1))
    rhs = rhs + L((_E(25, N) * _invJ(10, 25, N)).shift_q(2)).scale(C({1: 1, 4: 1}))
    rhs = rhs - L((_E(25, N) * _J(5, 25, N) * _invJ(10, 25, N) * _invJ(10, 25, N)).shift_q(3)).scale(C({1: 1, 4: 1}))
    rhs = rhs - L((_invE(25, N) * _RS(25, 10, N)).shift_q(8)).scale(C({0: 1, 1: 2, 4: 2}))
    return [("dissection", lhs, rhs)]


def _case_rank_zeta7(order):
    N = order
    ring = cyclotomic_ring(7)
    C = ring.combo
    lhs = rank_series(("root", 7), N)
    L = lambda s: lift_series(s, ring)
    one = TruncatedSeries.one(INT_RING, N)
    first = (ring.one() - ring.root(1)) * (ring.one() - ring.root(6))
    rhs = L(one).scale(first)
    rhs = rhs + L(_E(49, N) * _J(21, 49, N) * _invJ(7, 49, N) * _invJ(14, 49, N)).scale(C({0: -1, 1: 1, 6: 1}))
    rhs = rhs + L((_invE(49, N) * _RS(49, 7, N)).shift_q(7)).scale(C({0: 2, 1: -1, 6: -1}))
    rhs = rhs + L((_E(49, N) * _invJ(7, 49, N)).shift_q(1))
    rhs = rhs + L((_E(49, N) * _J(14, 49, N) * _invJ(7, 49, N) * _invJ(21, 49, N)).shift_q(2)).scale(C({1: 1, 6: 1}))
    rhs = rhs + L((_invE(49, N) * _RS(49, 21, N)).shift_q(16)).scale(C({1: 1, 2: -1, 5: -1, 6: 1}))
    rhs = rhs + L((_E(49, N) * _invJ(14, 49, N)).shift_q(3)).scale(C({0: 1, 2: 1, 5: 1}))
    rhs = rhs - L((_E(49, N) * _invJ(21, 49, N)).shift_q(4)).scale(C({2: 1, 5: 1}))
    rhs = rhs + L((_invE(49, N) * _RS(49, 14, N)).shift_q(13)).scale(C({0: 1, 1: 1, 2: 2, 5: 2, 6: 1}))
    rhs = rhs + L((_E(49, N) * _J(7, 49, N) * _invJ(14, 49, N) * _invJ(21, 49, N)).shift_q(6)).scale(C({1: 1, 2: 1, 5: 1, 6: 1}))
    return [("dissection", lhs, rhs)]


def _case_crank_zeta5(order):
    N = order
    ring = cyclotomic_ring(5)
    C = ring.combo
    lhs = crank_series(("root", 5), N)
    L = lambda s: lift_series(s, ring)
    inner = L(_J(10, 25, N) * _invJ(5, 25, N) * _invJ(5, 25, N))
    inner = inner + L(_invJ(5, 25, N).shift_q(1)).scale(C({0: -1, 1: 1, 4: 1}))
    inner = inner - L(_invJ(10, 25, N).shift_q(2)).scale(C({0: 1, 1: 1, 4: 1}))
    inner = inner - L((_J(5, 25, N) * _invJ(10, 25, N) * _invJ(10, 25, N)).shift_q(3)).scale(C({1: 1, 4: 1}))
    rhs = inner * L(_E(25, N))
    return [("dissection", lhs, rhs)]


def _case_crank_zeta7(order):
    N = order
    ring = cyclotomic_ring(7)
    C = ring.combo
    lhs = crank_series(("root", 7), N)
    L = lambda s: lift_series(s, ring)
    inner = L(_J(21, 49, N) * _invJ(7, 49, N) * _invJ(14, 49, N))
    inner = inner + L(_invJ(7, 49, N).shift_q(1)).scale(C({0: -1, 1: 1, 6: 1}))
    inner = inner + L((_J(14, 49, N) * _invJ(7, 49, N) * _invJ(21, 49, N)).shift_q(2)).scale(C({2: 1, 5: 1}))
    inner = inner - L(_invJ(14, 49, N).shift_q(3)).scale(C({1: 1, 2: 1, 5: 1, 6: 1}))
    inner = inner - L(_invJ(21, 49, N).shift_q(4)).scale(C({1: 1, 6: 1}))
    inner = inner - L((_J(7, 49, N) * _invJ(14, 49, N) * _invJ(21, 49, N)).shift_q(6)).scale(C({0: 1, 2: 1, 5: 1}))
    rhs = inner * L(_E(49, N))
    return [("dissection", lhs, rhs)]


# -- the rank link and the rank/crank form of the B2 series -----------------------

def _b2_alpha_sum(mode, order):
    """(1 + sum (1-z)(1-z^-1)(-1)^n q^(n(3n-1)/2) (1+q^(3n))
        / ((1-zq^n)(1-z^-1 q^n))) / (q;q)_inf."""
    from .qseries import resolve_mode

    ring, z, zinv = resolve_mode(mode)
    acc = [ring.zero()] * order
    acc[0] = ring.one()
    one = ring.one()
    pole = (one - z) * (one - zinv)
    n = 1
    while n * (3 * n - 1) // 2 < order:
        e = n * (3 * n - 1) // 2
        c = pole if n % 2 == 0 else -pole
        term = [ring.zero()] * order
        term[e] = c
        if e + 3 * n < order:
            term[e + 3 * n] = term[e + 3 * n] + c
        geom_pass(term, z, n)
        geom_pass(term, zinv, n)
        for j in range(e, order):
            if term[j]:
                acc[j] = acc[j] + term[j]
        n += 1
    return TruncatedSeries(ring, acc, order) * lift_series(_invE(1, order), ring)


def _case_lemma_b2_rank(order):
    lhs = _b2_alpha_sum("symbolic", order)
    R = rank_series("symbolic", order)
    rhs = R.scale(_zpoly({1: 1, -1: 1, 0: -1})) + lift_series(
        TruncatedSeries.one(INT_RING, order), LAURENT_RING
    ).scale(_zpoly({0: 2, 1: -1, -1: -1}))
    return [("rank link", lhs, rhs)]


def _case_b2_rank_crank(order):
    # cleared of the (1-z)(1-z^-1) pole:
    # (1-z)(1-z^-1) (S_B2 - 1) = (z + z^-1 - 1) R - C
    S = build_spt_crank("B2", "symbolic", order)
    one = lift_series(TruncatedSeries.one(INT_RING, order), LAURENT_RING)
    lhs = (S - one).scale(_zpoly({0: 2, 1: -1, -1: -1}))
    rhs = rank_series("symbolic", order).scale(_zpoly({1: 1, -1: 1, 0: -1})) - crank_series("symbolic", order)
    return [("rank-crank form", lhs, rhs)]


# -- the F3 crank and rank pieces --------------------------------------------------

def _f3_crank_lhs(t: int, order: int) -> TruncatedSeries:
    ring = cyclotomic_ring(t)
    coeffs = lift_series(_A(1, 2, order) * _E(2, order), ring).coeffs
    z, zinv = ring.root(1), ring.root(-1)
    n = 2
    while n < order:
        geom_pass(coeffs, z, n)
        geom_pass(coeffs, zinv, n)
        n += 2
    return TruncatedSeries(ring, coeffs, order)


def _f3_rank_lhs(t: int, order: int) -> TruncatedSeries:
    ring = cyclotomic_ring(t)
    one = ring.one()
    z, zinv = ring.root(1), ring.root(-1)
    pole = (one - z) * (one - zinv)
    acc = [ring.zero()] * order
    acc[0] = one
    n = 1
    while n < order:
        term = [ring.zero()] * order
        term[n] = pole
        if 3 * n < order:
            term[3 * n] = pole
        geom_pass(term, z, 2 * n)
        geom_pass(term, zinv, 2 * n)
        for j in range(n, order):
            if term[j]:
                acc[j] = acc[j] + term[j]
        n += 1
    pref = lift_series(_A(1, 2, order) * _invE(2, order), ring)
    return TruncatedSeries(ring, acc, order) * pref


def _case_f3_crank_mod3(order):
    N = order
    ring = cyclotomic_ring(3)
    L = lambda s: lift_series(s, ring)
    lhs = _f3_crank_lhs(3, N)
    rhs = L(_E(9, N) * _E(9, N) * _E(9, N) * _E(9, N) * _invE(18, N) * _invE(18, N) * _invE(3, N))
    rhs = rhs - L((_E(18, N) * _E(9, N) * _invE(6, N)).shift_q(1))
    rhs = rhs - L((_E(18, N) * _E(18, N) * _E(18, N) * _E(18, N) * _E(3, N)
                   * _invE(9, N) * _invE(9, N) * _invE(6, N) * _invE(6, N)).shift_q(2)).scale(2)
    return [("crank piece", lhs, rhs)]


def _case_f3_crank_mod5(order):
    N = order
    ring = cyclotomic_ring(5)
    C = ring.combo
    L = lambda s: lift_series(s, ring)
    lhs = _f3_crank_lhs(5, N)
    rhs = L(_E(25, N) * _J(15, 50, N) * _invJ(5, 25, N))
    rhs = rhs - L((_E(25, N) * _invJ(10, 50, N)).shift_q(1))
    rhs = rhs + L((_E(25, N) * _J(10, 25, N) * _invJ(5, 25, N) * _invJ(20, 50, N)).shift_q(2)).scale(C({1: 1, 4: 1}))
    rhs = rhs - L((_E(25, N) * _J(5, 25, N) * _invJ(10, 25, N) * _invJ(10, 50, N)).shift_q(2))
    rhs = rhs - L((_E(25, N) * _invJ(20, 50, N)).shift_q(3)).scale(C({1: 1, 4: 1}))
    rhs = rhs - L((_E(25, N) * _J(5, 50, N) * _invJ(10, 25, N)).shift_q(4)).scale(C({1: 1, 4: 1}))
    return [("crank piece", lhs, rhs)]


def _case_f3_crank_mod7(order):
    N = order
    ring = cyclotomic_ring(7)
    C = ring.combo
    L = lambda s: lift_series(s, ring)
    lhs = _f3_crank_lhs(7, N)
    rhs = L(_E(49, N) * _invJ(14, 98, N))
    rhs = rhs - L((_E(49, N) * _J(35, 98, N) * _invJ(21, 49, N)).shift_q(1)).scale(C({2: 1, 5: 1}))
    rhs = rhs + L((_E(49, N) * _J(21, 98, N) * _invJ(7, 49, N)).shift_q(1)).scale(C({0: 1, 2: 1, 5: 1}))
    rhs = rhs - L((_E(98, N) * _J(35, 98, N) * _invA(49, 98, N) * _invJ(14, 98, N)).shift_q(1)).scale(2)
    rhs = rhs - L((_E(49, N) * _J(14, 49, N) * _invJ(7, 49, N) * _invJ(28, 98, N)).shift_q(2)).scale(C({0: 1, 1: -1, 6: -1}))
    rhs = rhs - L((_E(49, N) * _J(7, 49, N) * _invJ(21, 49, N) * _invJ(14, 98, N)).shift_q(3)).scale(C({1: 1, 6: 1}))
    rhs = rhs + L((_E(49, N) * _invJ(28, 98, N)).shift_q(4)).scale(C({0: 1, 2: 1, 5: 1}))
    rhs = rhs - L((_E(49, N) * _J(21, 49, N) * _invJ(14, 49, N) * _invJ(42, 98, N)).shift_q(5)).scale(C({1: 1, 2: 1, 5: 1, 6: 1}))
    rhs = rhs - L((_E(49, N) * _invJ(42, 98, N)).shift_q(6)).scale(C({2: 1, 5: 1}))
    return [("crank piece", lhs, rhs)]


def _case_f3_rank_mod3(order):
    N = order
    ring = cyclotomic_ring(3)
    L = lambda s: lift_series(s, ring)
    lhs = _f3_rank_lhs(3, N)
    rhs = L(_E(9, N) * _E(9, N) * _E(9, N) * _E(9, N) * _invE(3, N) * _invE(18, N) * _invE(18, N))
    rhs = rhs + L((_E(9, N) * _E(18, N) * _invE(6, N)).shift_q(1)).scale(2)
    rhs = rhs + L((_E(3, N) * _E(18, N) * _E(18, N) * _E(18, N) * _E(18, N)
                   * _invE(6, N) * _invE(6, N) * _invE(9, N) * _invE(9, N)).shift_q(2))
    return [("rank piece", lhs, rhs)]


def _case_f3_rank_mod5(order):
    N = order
    ring = cyclotomic_ring(5)
    C = ring.combo
    L = lambda s: lift_series(s, ring)
    lhs = _f3_rank_lhs(5, N)
    rhs = L(_E(25, N) * _J(15, 50, N) * _invJ(5, 25, N))
    rhs = rhs + L((_E(25, N) * _invJ(10, 50, N)).shift_q(1)).scale(C({0: 1, 1: -1, 4: -1}))
    rhs = rhs + L((_E(50, N) * _J(15, 50, N) * _invA(25, 50, N) * _invJ(10, 50, N)).shift_q(2))
    rhs = rhs - L((_E(50, N) * _J(5, 50, N) * _invA(25, 50, N) * _invJ(20, 50, N)).shift_q(7)).scale(C({1: 1, 4: 1}))
    rhs = rhs + L((_E(25, N) * _invJ(20, 50, N)).shift_q(3)).scale(C({0: 1, 1: 1, 4: 1}))
    rhs = rhs - L((_E(25, N) * _J(5, 50, N) * _invJ(10, 25, N)).shift_q(4)).scale(C({1: 1, 4: 1}))
    return [("rank piece", lhs, rhs)]


def _case_f3_rank_mod7(order):
    N = order
    ring = cyclotomic_ring(7)
    C = ring.combo
    L = lambda s: lift_series(s, ring)
    lhs = _f3_rank_lhs(7, N)
    rhs = L(_E(49, N) * _invJ(14, 98, N))
    rhs = rhs + L((_E(98, N) * _J(35, 98, N) * _invA(49, 98, N) * _invJ(14, 98, N)).shift_q(1))
    rhs = rhs - L((_E(14, N) * _invA(7, 14, N)).shift_q(1)).scale(C({1: 1, 6: 1}))
    rhs = rhs - L((_E(98, N) * _J(21, 98, N) * _invA(49, 98, N) * _invJ(28, 98, N)).shift_q(8)).scale(C({2: 1, 5: 1}))
    rhs = rhs + L((_E(49, N) * _J(14, 49, N) * _invJ(7, 49, N) * _invJ(28, 98, N)).shift_q(2))
    rhs = rhs - L((_E(49, N) * _J(7, 49, N) * _invJ(21, 49, N) * _invJ(14, 98, N)).shift_q(3)).scale(C({2: 1, 5: 1}))
    rhs = rhs + L((_E(49, N) * _invJ(28, 98, N)).shift_q(4)).scale(C({0: 1, 2: 1, 5: 1}))
    rhs = rhs + L((_E(49, N) * _J(21, 49, N) * _invJ(14, 49, N) * _invJ(42, 98, N)).shift_q(5)).scale(C({0: 1, 2: 1, 5: 1}))
    rhs = rhs - L((_E(49, N) * _invJ(42, 98, N)).shift_q(6)).scale(C({2: 1, 5: 1}))
    return [("rank piece", lhs, rhs)]


# -- Lambert, theta-quotient, and bilateral auxiliaries -----------------------------

def _case_lambert_berndt(order):
    N = order
    out = []
    for tag, m, shift in (("step 5", 5, 1), ("step 7", 7, 3)):
        b = 2 * m
        lhs = (_E(b, N) * _E(b, N) * _E(b, N) * _E(b, N)
               * _J(2, b, N) * _J(2, b, N) * _J(4, b, N)
               * _invE(m, N) * _invE(m, N)
               * _invJ(m + 2, b, N) * _invJ(m + 2, b, N) * _invJ(m + 4, b, N)).shift_q(shift)
        if m == 5:
            rhs = (lambert_sum(1, 10, N) - lambert_sum(3, 10, N).scale(2)
                   + lambert_sum(7, 10, N).scale(2) - lambert_sum(9, 10, N))
        else:
            rhs = (lambert_sum(3, 14, N) - lambert_sum(5, 14, N).scale(2)
                   + lambert_sum(9, 14, N).scale(2) - lambert_sum(11, 14, N))
        out.append((tag, lhs, rhs))
    return out


def _case_lambert_all(order):
    N = order
    out = []
    for tag, m in (("step 10", 10), ("step 14", 14)):
        half = m // 2
        lhs = (_E(m, N) * _E(m, N) * _J(2, m, N)
               * _J(half + 1, m, N) * _J(half + 1, m, N)
               * _invJ(1, m, N) * _invJ(1, m, N) * _invJ(half, m, N) * _invJ(half + 2, m, N))
        rhs = TruncatedSeries.one(INT_RING, N)
        rhs = rhs + lambert_progression(1, m, N).scale(2) - lambert_progression(m - 1, m, N).scale(2)
        rhs = rhs - lambert_progression(half + 2, m, N) + lambert_progression(half - 2, m, N)
        out.append((tag, lhs, rhs))
    return out


def _case_theta_quotient(order):
    N = order
    M = 5
    out = []
    for a in (1, 3):
        lhs = (_E(2 * M, N) * _E(2 * M, N) * _J(a + M, 2 * M, N)
               * _invA(M, 2 * M, N) * _invA(M, 2 * M, N) * _invJ(a, 2 * M, N))
        b2 = 2 * M * M
        acc = TruncatedSeries.zeros(INT_RING, N)
        for k in range(M):
            sh_num, num = jacobi_shifted(1, a * M + M * (2 * k + 1), b2, N)
            if num.is_zero():
                continue
            den = _J(M * (2 * k + 1), b2, N)
            total = a * k + sh_num
            if total < 0:
                raise SeriesError("negative net exponent in theta-quotient term")
            acc = acc + (num * den.invert()).shift_q(total)
        rhs = acc * _E(b2, N) * _E(b2, N) * _invJ(a * M, b2, N)
        out.append((f"z = q^{a}", lhs, rhs))
    return out


def _case_one_psi_one(order):
    N = order
    out = []
    from .qseries import _add_bilateral_term
    import math

    for a in (1, 3):
        coeffs = [0] * N
        n_limit = N // min(a, 5) + 12
        for n in range(-n_limit, n_limit + 1):
            num = a * n
            den = 10 * n + 5
            if num + (-den if den < 0 else 0) < N:
                _add_bilateral_term(coeffs, num, 1, 1, den, N)
        lhs = TruncatedSeries(INT_RING, coeffs, N)
        rhs = _E(10, N) * _E(10, N) * _J(a + 5, 10, N) * _invJ(a, 10, N) * _invJ(5, 10, N)
        out.append((f"x = q^{a}", lhs, rhs))
    return out


def _case_gauss_half(order):
    N = order
    lhs1 = _E(2, N) * _invA(1, 2, N)
    rhs1 = theta_sum(1, 4, N, sign=1)
    lhs2 = _E(1, N) * _A(1, 2, N)
    rhs2 = theta_sum(1, 2, N, sign=-1)
    return [("triangular", lhs1, rhs1), ("signed squares", lhs2, rhs2)]


def _case_mod7_piece1(order):
    N = order
    pref = _A(1, 2, N) * _invE(2, N)
    lam = (TruncatedSeries.one(INT_RING, N) + lambert_sum(1, 14, N).scale(2)
           + lambert_sum(5, 14, N) - lambert_sum(9, 14, N) - lambert_sum(13, 14, N).scale(2))
    A = pref * lam
    B = (_E(14, N) * _J(3, 14, N) * _J(6, 14, N)
         * _invA(7, 14, N) * _invJ(1, 14, N) * _invJ(4, 14, N))
    C = _E(49, N) * _invJ(14, 98, N)
    C = C + (_E(98, N) * _J(35, 98, N) * _invA(49, 98, N) * _invJ(14, 98, N)).shift_q(1)
    C = C + (_E(49, N) * _J(14, 49, N) * _invJ(7, 49, N) * _invJ(28, 98, N)).shift_q(2)
    C = C + (_E(49, N) * _invJ(28, 98, N)).shift_q(4)
    C = C + (_E(49, N) * _J(21, 49, N) * _invJ(14, 49, N) * _invJ(42, 98, N)).shift_q(5)
    return [("lambert to product", A, B), ("product dissection", B, C)]


def _case_mod7_piece2(order):
    N = order
    pref = _A(1, 2, N) * _invE(2, N)
    lam = (-lambert_sum(1, 14, N) + lambert_sum(3, 14, N) + lambert_sum(5, 14, N)
           - lambert_sum(9, 14, N) - lambert_sum(11, 14, N) + lambert_sum(13, 14, N))
    lhs = pref * lam
    rhs = -(_E(14, N) * _invA(7, 14, N)).shift_q(1)
    return [("lambert to product", lhs, rhs)]


def _case_mod7_piece3(order):
    N = order
    pref = _A(1, 2, N) * _invE(2, N)
    lam = (-lambert_sum(3, 14, N) + lambert_sum(5, 14, N).scale(2)
           - lambert_sum(9, 14, N).scale(2) + lambert_sum(11, 14, N))
    A = pref * lam
    B = -(_E(14, N) * _J(1, 14, N) * _J(2, 14, N)
          * _invA(7, 14, N) * _invJ(5, 14, N) * _invJ(6, 14, N)).shift_q(3)
    C = -(_E(98, N) * _J(21, 98, N) * _invA(49, 98, N) * _invJ(28, 98, N)).shift_q(8)
    C = C - (_E(49, N) * _J(7, 49, N) * _invJ(21, 49, N) * _invJ(14, 98, N)).shift_q(3)
    C = C + (_E(49, N) * _invJ(28, 98, N)).shift_q(4)
    C = C + (_E(49, N) * _J(21, 49, N) * _invJ(14, 49, N) * _invJ(42, 98, N)).shift_q(5)
    C = C - (_E(49, N) * _invJ(42, 98, N)).shift_q(6)
    return [("lambert to product", A, B), ("product dissection", B, C)]


def _phi21(a_exp: int, b_exp: int, c_exp: int, z_exp: int, order: int) -> TruncatedSeries:
    """Basic hypergeometric sum over n of (q^a;q)_n (q^b;q)_n q^(z n)
    / ((q^c;q)_n (q;q)_n); all exponents positive."""
    if min(a_exp, b_exp, c_exp, z_exp) <= 0:
        raise SeriesError("hypergeometric instance needs positive exponents")
    N = order
    acc = [0] * N
    term = [0] * N
    term[0] = 1
    n = 0
    while z_exp * n < N:
        for j in range(z_exp * n, N):
            if term[j]:
                acc[j] += term[j]
        # advance to the summand of n+1
        factor_pass(term, 1, a_exp + n)
        factor_pass(term, 1, b_exp + n)
        geom_pass(term, 1, c_exp + n)
        geom_pass(term, 1, 1 + n)
        term = [0] * z_exp + term[: N - z_exp]
        n += 1
    return TruncatedSeries(INT_RING, acc, N)


def _case_heine(order):
    N = order
    out = []
    for a, b, c, z in ((2, 2, 5, 2), (3, 2, 6, 2), (2, 3, 6, 2)):
        lhs = _phi21(a, b, c, z, N)
        pref = _A(c - b, 1, N) * _A(b + z, 1, N) * _A(c, 1, N).invert() * _A(z, 1, N).invert()
        rhs = pref * _phi21(a + b + z - c, b, b + z, c - b, N)
        out.append((f"(a,b,c,z)=q^({a},{b},{c},{z})", lhs, rhs))
    return out


def _uv_rhs(ell: int, b: int, order: int) -> TruncatedSeries:
    N = order
    b2 = 4 * ell * ell
    core = h_series(MonomialSpec(-1, 0, 2 * ell * ell - b * ell), b2, N)
    sh_j, jser = jacobi_shifted(-1, 2 * ell * ell - b * ell, b2, N)
    outer = _E(b2, N) * _E(b2, N) * jser
    tail = TruncatedSeries.zeros(INT_RING, N)
    for k in range(1, ell):
        sh_num, num = jacobi_shifted(1, 2 * b * ell + 8 * k * ell, b2, N)
        sh_d1, d1 = jacobi_shifted(1, 4 * k * ell, b2, N)
        sh_d2, d2 = jacobi_shifted(1, 2 * b * ell + 4 * k * ell, b2, N)
        sh_d3, d3 = jacobi_shifted(-1, 2 * ell * ell + b * ell + 4 * k * ell, b2, N)
        total = 2 * k * k + b * k + sh_j + sh_num - sh_d1 - sh_d2 - sh_d3
        if total < 0:
            raise SeriesError("negative net exponent in the k-tail")
        if num.is_zero():
            continue
        term = (outer * num * d1.invert() * d2.invert() * d3.invert()).shift_q(total)
        tail = tail + term
    return core + tail


def _case_uv_lemma(order):
    out = []
    for b in (1, 3, 5, 7, 9):
        lhs = v_series(5, b, order) - u_series(5, b + 2, order, pre_shift=(b + 1) // 2)
        out.append((f"b={b}", lhs, _uv_rhs(5, b, order)))
    return out


def _case_uv_symmetries(order):
    zero = TruncatedSeries.zeros(INT_RING, order)
    out = [("V reflection b=3", v_series(5, 3, order) + v_series(5, 17, order), zero)]
    out.append(("V reflection b=7", v_series(5, 7, order) + v_series(5, 13, order), zero))
    out.append(("U reflection b=5", u_series(5, 5, order) + u_series(5, 19, order, pre_shift=7), zero))
    out.append(("U reflection b=9", u_series(5, 9, order) + u_series(5, 15, order, pre_shift=3), zero))
    return out


def _case_lewis_t(order):
    N = order
    lhs = -t_series(MonomialSpec(1, 0, 70), MonomialSpec(-1, 0, 25), 100, N, pre_shift=25)
    lhs = lhs + t_series(MonomialSpec(1, 0, 20), MonomialSpec(-1, 0, -25), 100, N)
    rhs = (_E(100, N) * _E(100, N) * _Jm(45, 100, N) * _J(50, 100, N)
           * _invJ(20, 100, N) * _invJ(70, 100, N) * _invJm(25, 100, N))
    return [("three-term relation", lhs, rhs)]


def _case_h_combination(order):
    N = order
    h5 = h_series(MonomialSpec(-1, 0, 5), 100, N)
    h15 = h_series(MonomialSpec(-1, 0, 15), 100, N)
    h45 = h_series(MonomialSpec(-1, 0, 45), 100, N)
    h35 = h_series(MonomialSpec(-1, 0, 35), 100, N)
    E2 = _E(100, N) * _E(100, N)
    X1 = E2 * _J(10, 100, N) * _J(10, 100, N) * _J(10, 100, N) * _invJm(5, 100, N) * _invJm(5, 100, N) * _invJm(5, 100, N) * _invJm(15, 100, N)
    X2 = E2 * _J(20, 100, N) * _J(20, 100, N) * _J(20, 100, N) * _invJ(10, 100, N) * _invJ(10, 100, N) * _invJ(10, 100, N) * _invJ(30, 100, N)
    X3 = E2 * _J(30, 100, N) * _J(30, 100, N) * _J(30, 100, N) * _invJm(15, 100, N) * _invJm(15, 100, N) * _invJm(15, 100, N) * _invJm(45, 100, N)
    X4 = E2 * _J(40, 100, N) * _J(40, 100, N) * _J(40, 100, N) * _invJ(30, 100, N) * _invJ(30, 100, N) * _invJ(30, 100, N) * _invJ(10, 100, N)
    X5 = E2 * _J(10, 100, N) * _J(10, 100, N) * _J(10, 100, N) * _invJm(45, 100, N) * _invJm(45, 100, N) * _invJm(45, 100, N) * _invJm(35, 100, N)
    X6 = E2 * _J(30, 100, N) * _J(30, 100, N) * _J(30, 100, N) * _invJm(35, 100, N) * _invJm(35, 100, N) * _invJm(35, 100, N) * _invJm(5, 100, N)
    out = []
    for a, bb, c, d in ((1, 0, 0, 0), (0, 1, 0, 0), (0, 0, 1, 0), (0, 0, 0, 1)):
        lhs = (h5.scale(3 * a - d) + h15.scale(3 * bb - a)
               + h45.scale(3 * c - bb) + h35.scale(3 * d - c) + (c + d))
        rhs = (X1.scale(a) + X2.scale(c - a) + X3.scale(bb) + X4.scale(d - bb)
               + X5.scale(c).shift_q(35) + X6.scale(d).shift_q(5))
        out.append((f"(a,b,c,d)={(a, bb, c, d)}", lhs, rhs))
    return out


def _case_h25(order):
    # the quarter-period value: 1 + 4 h(-q^25, q^100) = ((q^25;q^25)^2/(q^50;q^50))^2,
    # together with the matching jacobi-quotient product identity
    N = order
    h = h_series(MonomialSpec(-1, 0, 25), 100, N)
    lhs1 = h.scale(4) + 1
    phi = _E(25, N) * _E(25, N) * _invE(50, N)
    out = [("affine theta value", lhs1, phi * phi)]
    lhs2 = (_E(100, N) * _E(100, N) * _J(50, 100, N) * _J(50, 100, N) * _J(50, 100, N) * _J(50, 100, N)
            * _invJm(25, 100, N) * _invJm(25, 100, N) * _invJm(25, 100, N) * _invJm(25, 100, N))
    rhs2 = _E(25, N) * _E(25, N) * _E(25, N) * _E(25, N) * _invE(100, N) * _invE(100, N)
    out.append(("product form", lhs2, rhs2))
    return out


def _case_g4_crank_5(order):
    N = order
    ring = cyclotomic_ring(5)
    C = ring.combo
    L = lambda s: lift_series(s, ring)
    coeffs = lift_series(_E(2, N) * _invA(1, 2, N), ring).coeffs
    z, zinv = ring.root(1), ring.root(-1)
    n = 2
    while n < N:
        geom_pass(coeffs, z, n)
        geom_pass(coeffs, zinv, n)
        n += 2
    lhs = TruncatedSeries(ring, coeffs, N)
    rhs = L(_E(25, N) * _J(20, 50, N) * _invJ(10, 25, N) * _invJ(10, 50, N))
    rhs = rhs + L((_E(50, N) * _invA(25, 50, N) * _invJ(20, 50, N)).shift_q(5)).scale(C({1: 1, 4: 1}))
    rhs = rhs + L((_E(25, N) * _invJ(5, 25, N)).shift_q(1))
    rhs = rhs + L((_E(25, N) * _invJ(10, 25, N)).shift_q(2)).scale(C({1: 1, 4: 1}))
    rhs = rhs + L((_E(25, N) * _J(10, 50, N) * _invJ(5, 25, N) * _invJ(20, 50, N)).shift_q(3)).scale(C({1: 1, 4: 1}))
    rhs = rhs + L((_E(50, N) * _invA(25, 50, N) * _invJ(10, 50, N)).shift_q(3))
    return [("crank term", lhs, rhs)]


def _g4_parts_lhs(which: str, order: int) -> TruncatedSeries:
    ring = cyclotomic_ring(5)
    one = ring.one()
    z, zinv = ring.root(1), ring.root(-1)
    pole = (one - z) * (one - zinv)
    acc = [ring.zero()] * order
    acc[0] = one
    n = 1
    while True:
        e = (n * n + 3 * n) // 2 if which == "G4" else (n * n + n) // 2
        jump = n if which == "G4" else 3 * n
        if e >= order:
            break
        c = pole if n % 2 == 0 else -pole
        term = [ring.zero()] * order
        term[e] = c
        if e + jump < order:
            term[e + jump] = term[e + jump] + c
        geom_pass(term, z, 2 * n)
        geom_pass(term, zinv, 2 * n)
        for j in range(e, order):
            if term[j]:
                acc[j] = acc[j] + term[j]
        n += 1
    return TruncatedSeries(ring, acc, order) * lift_series(_invE(1, order), ring)


def _case_g4_ag4_parts_5(order):
    N = order
    ring = cyclotomic_ring(5)
    C = ring.combo
    L = lambda s: lift_series(s, ring)
    out = []
    lhs = _g4_parts_lhs("G4", N)
    rhs = L(_E(25, N) * _J(20, 50, N) * _invJ(10, 25, N) * _invJ(10, 50, N))
    rhs = rhs + L((_E(50, N) * _invA(25, 50, N) * _invJ(20, 50, N)).shift_q(5)).scale(C({0: 1, 1: -2, 4: -2}))
    rhs = rhs - L((_E(100, N) * _J(10, 200, N) * _invJ(10, 50, N) * _invJ(5, 100, N)).shift_q(10)).scale(C({0: 1, 1: 2, 4: 2}))
    rhs = rhs + L((_E(25, N) * _invJ(5, 25, N)).shift_q(1))
    rhs = rhs - L((_E(100, N) * _J(30, 200, N) * _invJ(10, 50, N) * _invJ(15, 100, N)).shift_q(6)).scale(C({0: 2, 1: -1, 4: -1}))
    rhs = rhs + L((_E(25, N) * _invJ(10, 25, N)).shift_q(2)).scale(C({1: 1, 4: 1}))
    rhs = rhs - L((_E(100, N) * _J(10, 200, N) * _invJ(20, 50, N) * _invJ(5, 100, N)).shift_q(12)).scale(C({0: 2, 1: -1, 4: -1}))
    rhs = rhs + L((_E(50, N) * _invA(25, 50, N) * _invJ(10, 50, N)).shift_q(3)).scale(C({0: -1, 1: 1, 4: 1}))
    rhs = rhs + L((_E(25, N) * _J(10, 50, N) * _invJ(5, 25, N) * _invJ(20, 50, N)).shift_q(3)).scale(C({1: 1, 4: 1}))
    rhs = rhs + L((_E(100, N) * _J(30, 200, N) * _invJ(20, 50, N) * _invJ(15, 100, N)).shift_q(8)).scale(C({0: 1, 1: -3, 4: -3}))
    out.append(("first family", lhs, rhs))

    lhs = _g4_parts_lhs("AG4", N)
    rhs = L(_E(25, N) * _J(20, 50, N) * _invJ(10, 25, N) * _invJ(10, 50, N))
    rhs = rhs + L((_E(50, N) * _invA(25, 50, N) * _invJ(20, 50, N)).shift_q(5)).scale(C({1: 1, 4: 1}))
    rhs = rhs + L((_E(100, N) * _J(10, 200, N) * _invJ(10, 50, N) * _invJ(5, 100, N)).shift_q(10)).scale(C({0: -2, 1: 1, 4: 1}))
    rhs = rhs + L((_E(100, N) * _J(70, 200, N) * _invJ(10, 50, N) * _invJ(35, 100, N)).shift_q(1)).scale(C({0: -2, 1: 1, 4: 1}))
    rhs = rhs + L((_E(25, N) * _invJ(5, 25, N)).shift_q(1))
    rhs = rhs - L((_E(100, N) * _J(30, 200, N) * _invJ(10, 50, N) * _invJ(15, 100, N)).shift_q(6)).scale(C({0: 1, 1: 2, 4: 2}))
    rhs = rhs + L((_E(25, N) * _invJ(10, 25, N)).shift_q(2)).scale(C({1: 1, 4: 1}))
    rhs = rhs + L((_E(100, N) * _J(10, 200, N) * _invJ(20, 50, N) * _invJ(5, 100, N)).shift_q(12)).scale(C({0: 1, 1: -3, 4: -3}))
    rhs = rhs + L((_E(100, N) * _J(70, 200, N) * _invJ(20, 50, N) * _invJ(35, 100, N)).shift_q(3)).scale(C({0: 1, 1: -3, 4: -3}))
    rhs = rhs + L((_E(25, N) * _J(10, 50, N) * _invJ(5, 25, N) * _invJ(20, 50, N)).shift_q(3)).scale(C({1: 1, 4: 1}))
    rhs = rhs + L((_E(50, N) * _invA(25, 50, N) * _invJ(10, 50, N)).shift_q(3))
    rhs = rhs + L((_E(100, N) * _J(30, 200, N) * _invJ(20, 50, N) * _invJ(15, 100, N)).shift_q(8)).scale(C({0: -2, 1: 1, 4: 1}))
    out.append(("second family", lhs, rhs))
    return out


def _case_relabel(src: str, dst: str):
    def build(order):
        lhs = build_spt_crank(src, "symbolic", order).substitute(1, negate=True)
        rhs = build_spt_crank(dst, "symbolic", order)
        return [("relabeling", lhs, rhs)]

    return build


def _case_series_additivity(order):
    lhs = _series_rhs_j("J1", order)
    rhs = _series_rhs_j("J2", order) + _series_rhs_j("J3", order)
    return [("additivity of the single-series sums", lhs, rhs)]


def _case_sj1_decomposition(order):
    lhs = build_spt_crank("J1", "symbolic", order)
    rhs = build_spt_crank("J2", "symbolic", order) + build_spt_crank("J3", "symbolic", order)
    return [("two-variable additivity", lhs, rhs)]


# -- catalog assembly -------------------------------------------------------------

def _build_catalog() -> dict:
    cases = []

    def add(id, ring, order, build, description, paper_bound=None):
        cases.append(IdentityCase(id, ring, order, build, description, paper_bound))

    for fam in ("J1", "J2", "J3", "F3", "G4", "AG4"):
        add(f"series_{fam}", "two-variable", 120, _case_series_single(fam),
            f"single-series form of the {fam} crank series")
    add("series_J1_additivity", "two-variable", 120, _case_series_additivity,
        "the J1 single series is the sum of the J2 and J3 single series")
    add("sj1_decomposition", "two-variable", 120, _case_sj1_decomposition,
        "S_J1(z,q) = S_J2(z,q) + S_J3(z,q)")
    add("product_F3", "two-variable", 150, _case_product_f3,
        "infinite-product form of the F3 crank series")
    add("product_G4", "two-variable", 150, _case_product_g4("G4"),
        "infinite-product form of the G4 crank series")
    add("product_AG4", "two-variable", 150, _case_product_g4("AG4"),
        "infinite-product form of the AG4 crank series")
    add("dissect_B2_5", "cyclotomic(5)", 250, _case_dissect_b2_5, "5-dissection of S_B2 at a fifth root")
    add("dissect_B2_7", "cyclotomic(7)", 250, _case_dissect_b2_7, "7-dissection of S_B2 at a seventh root")
    add("dissect_F3_3", "cyclotomic(3)", 240, _case_dissect_f3_3, "3-dissection of S_F3 at a third root")
    add("dissect_F3_5", "cyclotomic(5)", 250, _case_dissect_f3_5, "5-dissection of S_F3, cleared of /5")
    add("dissect_F3_7", "cyclotomic(7)", 250, _case_dissect_f3_7, "7-dissection of S_F3, cleared of /7",
        paper_bound=211)
    add("dissect_G4_5", "cyclotomic(5)", 250, _case_dissect_g4_5, "5-dissection of S_G4")
    add("dissect_AG4_5", "cyclotomic(5)", 250, _case_dissect_ag4_5, "5-dissection of S_AG4")
    add("rank_zeta5", "cyclotomic(5)", 250, _case_rank_zeta5, "5-dissection of the rank series")
    add("rank_zeta7", "cyclotomic(7)", 250, _case_rank_zeta7, "7-dissection of the rank series")
    add("crank_zeta5", "cyclotomic(5)", 250, _case_crank_zeta5, "5-dissection of the crank series")
    add("crank_zeta7", "cyclotomic(7)", 250, _case_crank_zeta7, "7-dissection of the crank series")
    add("lemma_B2_rank", "two-variable", 120, _case_lemma_b2_rank,
        "the B2 bilateral sum written through the rank series")
    add("b2_rank_crank", "two-variable", 120, _case_b2_rank_crank,
        "S_B2 in terms of rank and crank, pole-cleared")
    add("f3_crank_mod3", "cyclotomic(3)", 240, _case_f3_crank_mod3, "crank piece of the F3 3-dissection")
    add("f3_crank_mod5", "cyclotomic(5)", 250, _case_f3_crank_mod5, "crank piece of the F3 5-dissection")
    add("f3_crank_mod7", "cyclotomic(7)", 250, _case_f3_crank_mod7, "crank piece of the F3 7-dissection",
        paper_bound=211)
    add("f3_rank_mod3", "cyclotomic(3)", 240, _case_f3_rank_mod3, "rank piece of the F3 3-dissection")
    add("f3_rank_mod5", "cyclotomic(5)", 250, _case_f3_rank_mod5, "rank piece of the F3 5-dissection")
    add("f3_rank_mod7", "cyclotomic(7)", 250, _case_f3_rank_mod7, "rank piece of the F3 7-dissection",
        paper_bound=211)
    add("lambert_berndt", "integer", 250, _case_lambert_berndt,
        "classical Lambert-series product at two specializations")
    add("lambert_ALL", "integer", 250, _case_lambert_all,
        "five-term Lambert-series product at two specializations")
    add("theta_quotient", "integer", 250, _case_theta_quotient,
        "arithmetic-progression dissection of a theta quotient (M=5)")
    add("one_psi_one", "integer", 250, _case_one_psi_one,
        "bilateral 1-psi-1 specialization at two monomials")
    add("gauss_half", "integer", 300, _case_gauss_half, "classical theta evaluations")
    add("mod7_rank_piece1", "integer", 240, _case_mod7_piece1,
        "first Lambert piece of the mod-7 rank dissection", paper_bound=148)
    add("mod7_rank_piece2", "integer", 240, _case_mod7_piece2,
        "second Lambert piece (classical two-term evaluation)")
    add("mod7_rank_piece3", "integer", 240, _case_mod7_piece3,
        "third Lambert piece of the mod-7 rank dissection", paper_bound=148)
    add("heine", "integer", 80, _case_heine, "basic hypergeometric transformation at three monomial points")
    add("UV_lemma", "integer", 420, _case_uv_lemma,
        "the V - qU decomposition into a quarter-period value plus a theta tail")
    add("UV_symmetries", "integer", 200, _case_uv_symmetries, "reflection symmetries of V and U")
    add("lewis_T", "integer", 420, _case_lewis_t, "three-term bilateral relation at the level-100 point")
    add("h_combination", "integer", 420, _case_h_combination,
        "product evaluation of telescoped quarter-period combinations")
    add("h25", "integer", 600, _case_h25, "the self-paired quarter-period value at level 100")
    add("g4_crank_5", "cyclotomic(5)", 250, _case_g4_crank_5, "crank-type product term of the G4 5-dissection")
    add("g4_ag4_parts_5", "cyclotomic(5)", 250, _case_g4_ag4_parts_5,
        "bilateral series parts of the G4 and AG4 5-dissections")
    add("relabel_gstar", "two-variable", 120, _case_relabel("Gstar", "AG4"),
        "sign relabeling takes the first auxiliary family to AG4")
    add("relabel_gstarstar", "two-variable", 120, _case_relabel("Gstarstar", "G4"),
        "sign relabeling takes the second auxiliary family to G4")

    return {c.id: c for c in cases}


@functools.lru_cache(maxsize=1)
def catalog() -> dict:
    """The full identity catalog keyed by case id."""
    return _build_catalog()


def lookup(case_id: str) -> IdentityCase:
    try:
        return catalog()[case_id]
    except KeyError:
        raise UnknownCaseError(case_id) from None


def verify_case(case_id: str, order: int | None = None, paper_bounds: bool = False) -> VerificationReport:
    """Build both sides of a case and compare coefficientwise."""
    case = lookup(case_id)
    if paper_bounds and case.paper_bound:
        n = case.paper_bound
    else:
        n = max(case.default_order, order or 0)
    start = time.perf_counter()
    comparisons = case.build(n)
    mismatch = None
    for label, lhs, rhs in comparisons:
        bad = lhs.first_mismatch(rhs)
        if bad is not None:
            mismatch = Mismatch(
                power=bad,
                lhs=render_value(lhs.coeffs[bad]),
                rhs=render_value(rhs.coeffs[bad]),
                label=label,
            )
            break
    millis = int((time.perf_counter() - start) * 1000)
    return VerificationReport(
        id=case_id,
        order=n,
        status="verified" if mismatch is None else "mismatch",
        first_mismatch=mismatch,
        millis=millis,
    )


def verify_all(pattern: str = "*", parallelism: int = 1,
               order: int | None = None, paper_bounds: bool = False) -> list:
    """Run every case whose id matches the glob; reports sorted by id."""
    ids = sorted(i for i in catalog() if fnmatch.fnmatchcase(i, pattern))
    if parallelism > 1:
        with ThreadPoolExecutor(max_workers=parallelism) as pool:
            reports = list(pool.map(lambda i: verify_case(i, order, paper_bounds), ids))
    else:
        reports = [verify_case(i, order, paper_bounds) for i in ids]
    return sorted(reports, key=lambda r: r.id)
