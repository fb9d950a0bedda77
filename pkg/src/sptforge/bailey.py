"""Bailey-pair catalog and truncated-series verification of its identities.

A pair of sequences (alpha, beta) is a Bailey pair relative to (a, Q) when

    beta_n = sum_{k=0}^n alpha_k / ((Q; Q)_{n-k} (aQ; Q)_{n+k}).

The catalog stores each alpha rule as a finite list of signed q-monomials
(piecewise in the residue class of n) and each beta rule as a quotient of
finite Pochhammer products, expanded on demand.  Relation checks expand
both sides exactly; a shared q-binomial table turns the right side into

    beta_n = (Q;Q)_s / (Q;Q)_{s+2n} * sum_k alpha_k * binom(s+2n, n-k)_Q

for a = Q^s, which keeps the cost at one long multiplication per n.

Several sequences carry finitely many negative q-powers (for example a
stray q^-n); the checks multiply both sides by the matching normalizing
monomial before expanding, so every series object stays representable.

The lemma-variant and conjugate-pair checks are stated in a doubled
variable u with u^2 = the pair's base variable, which makes every
half-integral exponent of the originals integral.  The relative parameter
is a = u^(2s); each variant carries the set of s values for which all of
its exponents are nonnegative (variants five and six also need a != q).
"""

from __future__ import annotations

import functools
import time
from dataclasses import dataclass

from .rings import INT_RING, LAURENT_RING, LaurentPolynomial, cyclotomic_ring
from .qseries import (
    MonomialSpec,
    SeriesError,
    TruncatedSeries,
    euler_product,
    factor_pass,
    geom_pass,
    lift_series,
    pochhammer,
    pochhammer_shifted,
    resolve_mode,
)
from .reports import Mismatch, VerificationReport, render_value

PAIR_NAMES = (
    "B2", "F3", "G4", "AG4", "J1", "J2", "J3",
    "F1", "Gstar", "Gstarstar", "GenericStar", "GenericStarStar",
)

# admissible doubled-exponent parameters per lemma variant; variant 7 needs
# a strictly positive power (at a = 1 both of its sums lose formal convergence)
VARIANT_S_SETS = {
    1: (0, 1, 2),
    2: (0, 1, 2),
    3: (1, 2, 3),
    4: (1, 2, 3),
    5: (2, 3, 4),
    6: (2, 3, 4),
    7: (1, 2, 3),
}


@dataclass(frozen=True)
class BaileyPair:
    """Catalog entry: rules are given in plain q-exponents.

    base is 1 or 2 (the pair is relative to (a, q^base)); a_exp is the
    power with a = q^a_exp, zero for every named catalog pair.
    """

    name: str
    base: int
    a_exp: int = 0


def get_pair(name: str, s: int = 0) -> BaileyPair:
    """Catalog lookup; for the generic pairs, s gives a = (q^base)^s."""
    if name not in PAIR_NAMES:
        raise ValueError(f"unknown Bailey pair {name!r}")
    if name in ("GenericStar", "GenericStarStar"):
        return BaileyPair(name, 1, s)
    if s:
        raise ValueError(f"{name} is relative to a = 1")
    base = 1 if name in ("B2", "J1", "J2", "J3") else 2
    return BaileyPair(name, base, 0)


def alpha_monomials(pair: BaileyPair, n: int, scale: int = 1):
    """alpha_n as [(coefficient, q-exponent)], exponents times `scale`."""
    name = pair.name
    if n == 0:
        return [(1, 0)]
    out = []
    if name == "B2":
        s = -1 if n % 2 else 1
        out = [(s, 3 * n * (n - 1) // 2), (s, 3 * n * (n + 1) // 2)]
    elif name in ("J1", "J2", "J3"):
        k, r = divmod(n + 1, 3)  # n = 3k-1, 3k, 3k+1 for r = 0, 1, 2
        if r == 1:
            s = -1 if k % 2 else 1
            out = [(s, (9 * k * k - 3 * k) // 2), (s, (9 * k * k + 3 * k) // 2)]
        elif name == "J1":
            out = []
        elif r == 0:
            s = 1 if k % 2 else -1  # (-1)^(k-1)
            e = (9 * k * k - 9 * k + 2) // 2 if name == "J2" else (9 * k * k - 3 * k) // 2
            out = [(s, e)]
        else:  # r == 2, n = 3k+1
            s = 1 if k % 2 else -1  # (-1)^(k+1)
            e = (9 * k * k + 9 * k + 2) // 2 if name == "J2" else (9 * k * k + 3 * k) // 2
            out = [(s, e)]
    elif name == "F3":
        out = [(1, n), (1, -n)]
    elif name == "G4":
        s = -1 if n % 2 else 1
        out = [(s, n * (n - 1) // 2), (s, n * (n + 1) // 2)]
    elif name == "AG4":
        s = -1 if n % 2 else 1
        out = [(s, n * (n - 3) // 2), (s, n * (n + 3) // 2)]
    elif name == "F1":
        out = [(1, 2 * n * n - n), (1, 2 * n * n + n)]
    elif name == "Gstar":
        s0 = -1 if (n * (n - 1) // 2) % 2 else 1
        s1 = s0 * (-1 if n % 2 else 1)
        out = [(s0, n * (n - 3) // 2), (s1, n * (n + 3) // 2)]
    elif name == "Gstarstar":
        s0 = -1 if (n * (n + 1) // 2) % 2 else 1
        s1 = s0 * (-1 if n % 2 else 1)
        out = [(s0, n * (n - 1) // 2), (s1, n * (n + 1) // 2)]
    elif name == "GenericStar":
        out = []
    elif name == "GenericStarStar":
        out = [(-1, pair.a_exp + pair.base)] if n == 1 else []
    return [(c, e * scale) for c, e in out]


@functools.lru_cache(maxsize=None)
def _inv_poch(m: int, step: int, order: int) -> TruncatedSeries:
    """1 / (q^step; q^step)_m."""
    coeffs = [0] * order
    coeffs[0] = 1
    for j in range(1, m + 1):
        geom_pass(coeffs, 1, step * j)
    return TruncatedSeries(INT_RING, coeffs, order)


@functools.lru_cache(maxsize=None)
def _inv_poch_from(a: int, step: int, m: int, order: int) -> TruncatedSeries:
    """1 / (q^a; q^step)_m."""
    coeffs = [0] * order
    coeffs[0] = 1
    for j in range(m):
        e = a + step * j
        if e == 0:
            raise SeriesError("pole factor (1 - 1) in denominator")
        geom_pass(coeffs, 1, e)
    return TruncatedSeries(INT_RING, coeffs, order)


@functools.lru_cache(maxsize=None)
def _inv_poch_neg(a: int, step: int, m: int, order: int) -> TruncatedSeries:
    """1 / (-q^a; q^step)_m."""
    coeffs = [0] * order
    coeffs[0] = 1
    for j in range(m):
        geom_pass(coeffs, -1, a + step * j)
    return TruncatedSeries(INT_RING, coeffs, order)


def beta_shifted(pair: BaileyPair, n: int, order: int, scale: int = 1):
    """beta_n as (q_shift, series); the shift may be negative.

    `scale` doubles every exponent for the rescaled lemma checks.
    """
    name = pair.name
    c = scale
    if n == 0:
        return 0, TruncatedSeries.one(INT_RING, order)
    if name == "B2":
        return c * n, _inv_poch(n, c, order)
    if name == "J1":
        num = pochhammer(MonomialSpec(1, 0, 3 * c), 3 * c, n - 1, order, INT_RING)
        return 0, num * _inv_poch(2 * n - 1, c, order) * _inv_poch(n, c, order)
    if name in ("J2", "J3"):
        num = pochhammer(MonomialSpec(1, 0, 3 * c), 3 * c, n - 1, order, INT_RING)
        s = num * _inv_poch(2 * n, c, order) * _inv_poch(n - 1, c, order)
        return (0 if name == "J2" else c * n), s
    if name == "F3":
        return -c * n, _inv_poch_from(c, 2 * c, n, order) * _inv_poch(n, 2 * c, order)
    if name in ("G4", "AG4"):
        sgn = -1 if n % 2 else 1
        e = n * n if name == "G4" else n * n - 2 * n
        s = _inv_poch(n, 4 * c, order) * _inv_poch_neg(c, 2 * c, n, order)
        return c * e, s.scale(sgn)
    if name == "F1":
        return 0, _inv_poch_from(c, 2 * c, n, order) * _inv_poch(n, 2 * c, order)
    if name in ("Gstar", "Gstarstar"):
        e = n * n - 2 * n if name == "Gstar" else n * n
        s = _inv_poch(n, 4 * c, order) * _inv_poch_from(c, 2 * c, n, order)
        return c * e, s
    if name == "GenericStar":
        b = pair.base * c
        return 0, _inv_poch_from(c * pair.a_exp + b, b, n, order) * _inv_poch(n, b, order)
    if name == "GenericStarStar":
        b = pair.base * c
        return 0, _inv_poch_from(c * pair.a_exp + 2 * b, b, n, order) * _inv_poch(n, b, order)
    raise ValueError(name)


# -- the defining relation -----------------------------------------------------

@functools.lru_cache(maxsize=None)
def _qbinom(m: int, r: int, step: int, order: int) -> TruncatedSeries:
    """Gaussian binomial [m, r] in the variable q^step, truncated."""
    if r < 0 or r > m:
        return TruncatedSeries.zeros(INT_RING, order)
    if r == 0 or r == m:
        return TruncatedSeries.one(INT_RING, order)
    a = _qbinom(m - 1, r - 1, step, order)
    b = _qbinom(m - 1, r, step, order)
    return a + b.shift_q(step * r) if step * r < order else a


def check_pair_relation(pair: BaileyPair | str, n_max: int, order: int, s: int = 0) -> VerificationReport:
    """Expand beta_n and the alpha-side sum to the order for each n <= n_max."""
    start = time.perf_counter()
    if isinstance(pair, str):
        pair = get_pair(pair, s)
    step = pair.base
    if pair.a_exp % step:
        raise SeriesError("relation check needs a to be a power of the base")
    sp = pair.a_exp // step
    poch_s = pochhammer(MonomialSpec(1, 0, step), step, sp, order, INT_RING)
    mismatch = None
    for n in range(n_max + 1):
        shift, beta = beta_shifted(pair, n, order)
        monos = []
        for k in range(n + 1):
            monos.append((k, alpha_monomials(pair, k)))
        nu = max([0, -shift] + [-e for k, ms in monos for _, e in ms])
        lhs = beta.shift_q(shift + nu)
        acc = TruncatedSeries.zeros(INT_RING, order)
        for k, ms in monos:
            if not ms:
                continue
            binom = _qbinom(sp + 2 * n, n - k, step, order)
            for coef, e in ms:
                if e + nu < order:
                    acc = acc + binom.shift_q(e + nu).scale(coef)
        rhs = acc * _inv_poch(sp + 2 * n, step, order)
        if sp:
            rhs = rhs * poch_s
        bad = lhs.first_mismatch(rhs)
        if bad is not None:
            mismatch = Mismatch(
                power=bad,
                lhs=render_value(lhs.coeffs[bad]),
                rhs=render_value(rhs.coeffs[bad]),
                label=f"n={n}",
            )
            break
    millis = int((time.perf_counter() - start) * 1000)
    tag = pair.name if not pair.a_exp else f"{pair.name}(a=q^{pair.a_exp})"
    return VerificationReport(
        id=f"pair_relation_{tag}",
        order=order,
        status="verified" if mismatch is None else "mismatch",
        first_mismatch=mismatch,
        millis=millis,
    )


# -- limiting Bailey lemma ------------------------------------------------------

def check_limiting_lemma(
    pair: BaileyPair | str,
    rho1: MonomialSpec | None,
    rho2: MonomialSpec | None,
    order: int,
) -> VerificationReport:
    """The weak form of the transform: with a = 1 and base Q,

        sum (rho1, rho2; Q)_n (Q/(rho1 rho2))^n beta_n
          = (Q/rho1, Q/rho2; Q)_inf / ((Q, Q/(rho1 rho2); Q)_inf)
            * sum (rho1, rho2; Q)_n (Q/(rho1 rho2))^n alpha_n
                  / (Q/rho1, Q/rho2; Q)_n.

    rho set to None means that parameter is sent to infinity; its factors
    degenerate to (-1)^n Q^(n(n-1)/2) per standard limits.
    """
    start = time.perf_counter()
    if isinstance(pair, str):
        pair = get_pair(pair)
    if pair.a_exp:
        raise SeriesError("the weak transform check is wired for a = 1")
    b = pair.base
    rhos = [r for r in (rho1, rho2) if r is not None]
    n_inf = 2 - len(rhos)
    ring = LAURENT_RING if any(r.z_exp for r in rhos) else INT_RING

    inv_rhos = [MonomialSpec(r.sign, -r.z_exp, b - r.q_exp) for r in rhos]
    prod_z = sum(r.z_exp for r in rhos)
    prod_q = sum(r.q_exp for r in rhos)
    prod_sign = 1
    for r in rhos:
        prod_sign *= r.sign

    def lam_exp(n: int) -> tuple:
        # the monomial (Q/(rho1 rho2))^n; each rho sent to infinity
        # degenerates its factors to (-1)^n Q^(n(n-1)/2)
        sgn = prod_sign ** (n % 2)
        if n_inf == 1 and n % 2:
            sgn = -sgn
        q_e = n_inf * b * (n * (n - 1)) // 2 + n * (b - prod_q)
        return sgn, -prod_z * n, q_e

    from .qseries import resolve_z

    # running products (rho; Q)_n and inverses 1/(Q/rho; Q)_n
    up = TruncatedSeries.one(ring, order).coeffs
    dn = TruncatedSeries.one(ring, order).coeffs
    lhs = TruncatedSeries.zeros(ring, order)
    rhs_sum = TruncatedSeries.zeros(ring, order)
    n = 0
    while True:
        if n > 0:
            for r in rhos:
                x = resolve_z(ring, MonomialSpec(r.sign, r.z_exp, 0))
                e = r.q_exp + b * (n - 1)
                if e == 0:
                    one = ring.one()
                    up = [(one - x) * c for c in up]
                elif e > 0:
                    factor_pass(up, x, e)
                else:
                    raise SeriesError("inadmissible rho spec")
            for r in inv_rhos:
                x = resolve_z(ring, MonomialSpec(r.sign, r.z_exp, 0))
                e = r.q_exp + b * (n - 1)
                if e <= 0:
                    raise SeriesError("inadmissible rho spec")
                geom_pass(dn, x, e)
        sgn, z_e, q_e = lam_exp(n)
        shift, beta = beta_shifted(pair, n, order)
        monos = alpha_monomials(pair, n)
        min_alpha = min((e0 for _, e0 in monos), default=0)
        if n > 3 and q_e + shift >= order and q_e + min_alpha >= order:
            break
        tot = q_e + shift
        if tot < 0:
            raise SeriesError("negative exponent in beta summand")
        coeff = LaurentPolynomial.monomial(z_e, sgn) if ring is LAURENT_RING else sgn
        P_n = TruncatedSeries(ring, list(up), order)
        if tot < order:
            lhs = lhs + (P_n * lift_series(beta, ring)).scale(coeff).shift_q(tot)
        if monos:
            D_n = TruncatedSeries(ring, list(dn), order)
            base_term = P_n * D_n
            for c0, e0 in monos:
                e_all = q_e + e0
                if e_all < 0:
                    raise SeriesError("negative exponent in alpha summand")
                if e_all < order:
                    cc = LaurentPolynomial.monomial(z_e, sgn * c0) if ring is LAURENT_RING else sgn * c0
                    rhs_sum = rhs_sum + base_term.scale(cc).shift_q(e_all)
        n += 1
        if n > 4 * order + 8:
            raise SeriesError("limiting-lemma sum failed to terminate")

    pref = TruncatedSeries.one(ring, order)
    for r in inv_rhos:
        pref = pref * pochhammer(r, b, None, order, ring)
    pref = pref * lift_series(euler_product(b, b, order).invert(), ring)
    # (Q/(rho1 rho2); Q)_inf term: with two finite rhos it is (Q^(1-..)/..),
    # with any infinite rho it degenerates to 1
    if len(rhos) == 2:
        spec = MonomialSpec(prod_sign, -prod_z, b - prod_q)
        pref = pref * pochhammer(spec, b, None, order, ring).invert()
    rhs = pref * rhs_sum

    bad = lhs.first_mismatch(rhs)
    millis = int((time.perf_counter() - start) * 1000)
    names = ",".join(
        f"{'-' if r.sign < 0 else ''}z^{r.z_exp}q^{r.q_exp}" if r else "inf"
        for r in (rho1, rho2)
    )
    return VerificationReport(
        id=f"limiting_lemma_{pair.name}({names})",
        order=order,
        status="verified" if bad is None else "mismatch",
        first_mismatch=None if bad is None else Mismatch(
            bad, render_value(lhs.coeffs[bad]), render_value(rhs.coeffs[bad])
        ),
        millis=millis,
    )


# -- the seven lemma variants ---------------------------------------------------

def _pair_for_variant(variant: int, pair_name: str, s: int) -> BaileyPair:
    # the doubled-variable convention: the pair's own variable becomes u^2
    # (u^4 under variant seven), and a = u^(2s), i.e. a_exp = s in q-units
    if pair_name in ("GenericStar", "GenericStarStar"):
        base = 2 if variant == 7 else 1
        return BaileyPair(pair_name, base, s)
    pair = get_pair(pair_name)
    want_base = 2 if variant == 7 else 1
    if pair.base != want_base:
        raise SeriesError(f"variant {variant} needs a base-{want_base} pair")
    if s != 0:
        raise SeriesError("catalog pairs fix a = 1")
    return pair


def _scaled_beta(pair: BaileyPair, n: int, order: int):
    """(shift, series) for beta_n in the doubled variable."""
    return beta_shifted(pair, n, order, scale=2)


def _scaled_alpha(pair: BaileyPair, n: int):
    return alpha_monomials(pair, n, scale=2)


def check_lemma_variant(
    variant: int,
    pair_name: str,
    s: int,
    order: int,
) -> VerificationReport:
    """Verify one of the seven transformed summation formulas.

    Everything is computed in the doubled variable u (u^2 = the lemma's q),
    with a = u^(2s).  Variants three and four are two-variable statements
    and run over the Laurent ring; five and six are their third-root
    specializations and run over Z[zeta_3]; the others are integral.
    """
    start = time.perf_counter()
    if variant not in VARIANT_S_SETS:
        raise ValueError("variant must be 1..7")
    if s not in VARIANT_S_SETS[variant]:
        raise SeriesError(f"parameter s={s} inadmissible for variant {variant}")
    pair = _pair_for_variant(variant, pair_name, s)
    N = order

    if variant in (1, 2):
        lhs = TruncatedSeries.zeros(INT_RING, N)
        rhs_sum = TruncatedSeries.zeros(INT_RING, N)
        up = [0] * N
        up[0] = 1
        up_vanished = False
        n = 0
        while True:
            e_mon = (s * n + n * (n + 1)) if variant == 1 else (s * n + n * n)
            if n > 0:
                e = (s + 2 * (n - 1)) if variant == 1 else (s + 1 + 2 * (n - 1))
                if e == 0:
                    up_vanished = True  # factor (1 - u^0) kills all later terms
                else:
                    factor_pass(up, 1, e)
            if e_mon >= N and n > 1:
                break
            sgn = -1 if n % 2 else 1
            shift, beta = _scaled_beta(pair, n, N)
            if not up_vanished and e_mon + shift < N:
                lhs = lhs + (TruncatedSeries(INT_RING, list(up), N) * beta).scale(sgn).shift_q(e_mon + shift)
            amons = _scaled_alpha(pair, n)
            if amons:
                if variant == 1 and n > 0:
                    # per-term ratio (u^s;u^2)_n / (u^(s+2);u^2)_n,
                    # which specializes continuously at s = 0
                    if s == 0:
                        base = None
                    else:
                        ratio = [0] * N
                        ratio[0] = 1
                        factor_pass(ratio, 1, s)
                        geom_pass(ratio, 1, s + 2 * n)
                        base = TruncatedSeries(INT_RING, ratio, N)
                else:
                    base = TruncatedSeries.one(INT_RING, N)
                if base is not None:
                    for c0, e0 in amons:
                        e_all = e_mon + e0
                        if e_all < 0:
                            raise SeriesError("negative exponent in variant summand")
                        if e_all < N:
                            rhs_sum = rhs_sum + base.scale(sgn * c0).shift_q(e_all)
            n += 1
        if variant == 1:
            pref = euler_product(s + 2, 2, N) * euler_product(2 * s + 2, 2, N).invert()
        else:
            pref = euler_product(s + 1, 2, N) * euler_product(2 * s + 2, 2, N).invert()
        rhs = pref * rhs_sum

    elif variant in (3, 4):
        ring = LAURENT_RING
        lhs = TruncatedSeries.zeros(ring, N)
        rhs_sum = TruncatedSeries.zeros(ring, N)
        zp = MonomialSpec(1, 1, s - 1)
        zm = MonomialSpec(1, -1, s - 1)
        n = 0
        while True:
            e_mon = 2 * n if variant == 3 else 4 * n
            sc_p, sh_p, P_p = pochhammer_shifted(zp, 2, n, N, ring)
            sc_m, sh_m, P_m = pochhammer_shifted(zm, 2, n, N, ring)
            shift, beta = _scaled_beta(pair, n, N)
            tot = e_mon + sh_p + sh_m + shift
            if tot >= N and n > 1:
                break
            if tot < 0:
                raise SeriesError("negative exponent in variant summand")
            P = (P_p * P_m).scale(sc_p * sc_m)
            lhs = lhs + (P * lift_series(beta, ring)).shift_q(tot)
            amons = _scaled_alpha(pair, n)
            if amons:
                tails = pochhammer(MonomialSpec(1, 1, s + 2 * n + 3), 2, None, N, ring) * pochhammer(
                    MonomialSpec(1, -1, s + 2 * n + 3), 2, None, N, ring
                )
                body = P * tails
                if variant == 3:
                    tri = [ring.zero()] * N
                    tri[0] = ring.one()
                    zz = LaurentPolynomial({1: -1, -1: -1})
                    if s + 2 * n + 1 < N:
                        tri[s + 2 * n + 1] = zz
                    if 2 * s + 4 * n < N:
                        tri[2 * s + 4 * n] = tri[2 * s + 4 * n] + ring.one()
                    body = body * TruncatedSeries(ring, tri, N)
                else:
                    one_minus = [ring.zero()] * N
                    one_minus[0] = ring.one()
                    if 2 < N:
                        one_minus[2] = -ring.one()
                    body = body * TruncatedSeries(ring, one_minus, N)
                for c0, e0 in amons:
                    e_all = e_mon + e0 + sh_p + sh_m
                    if e_all < 0:
                        raise SeriesError("negative exponent in variant summand")
                    if e_all < N:
                        rhs_sum = rhs_sum + body.scale(c0).shift_q(e_all)
            n += 1
        pref = lift_series(
            (euler_product(2, 2, N) * euler_product(2 * s + 2, 2, N)).invert(), ring
        )
        rhs = pref * rhs_sum

    elif variant in (5, 6):
        ring = cyclotomic_ring(3)
        lhs_i = TruncatedSeries.zeros(INT_RING, N)
        rhs_sum = TruncatedSeries.zeros(INT_RING, N)
        n = 0
        while True:
            e_mon = 2 * n if variant == 5 else 4 * n
            if e_mon >= N and n > 1:
                break
            num = pochhammer(MonomialSpec(1, 0, 3 * s - 3), 6, n, N, INT_RING)
            den = _inv_poch_from(s - 1, 2, n, N)
            shift, beta = _scaled_beta(pair, n, N)
            tot = e_mon + shift
            if tot < 0:
                raise SeriesError("negative exponent in variant summand")
            lhs_i = lhs_i + (num * den * beta).shift_q(tot)
            amons = _scaled_alpha(pair, n)
            if amons:
                body = [0] * N
                body[0] = 1
                factor_pass(body, 1, s + 2 * n - 1)
                factor_pass(body, 1, s + 2 * n + 1)
                if variant == 5:
                    tri = [0] * N
                    tri[0] = 1
                    if s + 2 * n + 1 < N:
                        tri[s + 2 * n + 1] += 1
                    if 2 * s + 4 * n < N:
                        tri[2 * s + 4 * n] += 1
                    body_s = TruncatedSeries(INT_RING, body, N) * TruncatedSeries(INT_RING, tri, N)
                    body = body_s.coeffs
                else:
                    factor_pass(body, 1, 2)
                geom_pass(body, 1, 3 * s + 6 * n - 3)
                geom_pass(body, 1, 3 * s + 6 * n + 3)
                base = TruncatedSeries(INT_RING, body, N)
                for c0, e0 in amons:
                    e_all = e_mon + e0
                    if e_all < 0:
                        raise SeriesError("negative exponent in variant summand")
                    if e_all < N:
                        rhs_sum = rhs_sum + base.scale(c0).shift_q(e_all)
            n += 1
        pref = euler_product(3 * s - 3, 6, N)
        pref = pref * (euler_product(2, 2, N) * euler_product(2 * s + 2, 2, N)
                       * euler_product(s - 1, 2, N)).invert()
        lhs = lift_series(lhs_i, ring)
        rhs = lift_series(pref * rhs_sum, ring)

    else:  # variant 7: pair relative to (a, u^4), lemma variable u^2, a = u^(2s)
        lhs = TruncatedSeries.zeros(INT_RING, N)
        rhs_sum = TruncatedSeries.zeros(INT_RING, N)
        n = 0
        while True:
            e_mon = 2 * n
            shift, beta = _scaled_beta(pair, n, N)
            tot = e_mon + shift
            if tot >= N and n > 1:
                break
            if tot < 0:
                raise SeriesError("negative exponent in variant summand")
            up = pochhammer(MonomialSpec(-1, 0, s), 2, 2 * n, N, INT_RING)
            lhs = lhs + (up * beta).shift_q(tot)
            amons = _scaled_alpha(pair, n)
            if amons:
                # (1 + u^s) / (1 + u^(s + 4n))
                ratio = [0] * N
                ratio[0] = 1
                factor_pass(ratio, -1, s)
                geom_pass(ratio, -1, s + 4 * n)
                base = TruncatedSeries(INT_RING, ratio, N)
                for c0, e0 in amons:
                    e_all = e_mon + e0
                    if e_all < 0:
                        raise SeriesError("negative exponent in variant summand")
                    if e_all < N:
                        rhs_sum = rhs_sum + base.scale(c0).shift_q(e_all)
            n += 1
        pref = pochhammer(MonomialSpec(-1, 0, s + 2), 2, None, N, INT_RING)
        pref = pref * (euler_product(2 * s + 4, 4, N) * euler_product(2, 4, N)).invert()
        rhs = pref * rhs_sum

    bad = lhs.first_mismatch(rhs)
    millis = int((time.perf_counter() - start) * 1000)
    return VerificationReport(
        id=f"lemma_variant_{variant}_{pair_name}_s{s}",
        order=order,
        status="verified" if bad is None else "mismatch",
        first_mismatch=None if bad is None else Mismatch(
            bad, render_value(lhs.coeffs[bad]), render_value(rhs.coeffs[bad])
        ),
        millis=millis,
    )


# -- conjugate pair -------------------------------------------------------------

def _delta_gamma(z_mode, s: int, n: int, order: int):
    """(delta_n, gamma_n) of the conjugate pair, doubled variable, a = u^(2s)."""
    ring, z, zinv = resolve_mode(z_mode)
    zp = MonomialSpec(1, 1, s - 1)
    zm = MonomialSpec(1, -1, s - 1)
    sc_p, sh_p, P_p = pochhammer_shifted(zp, 2, n, order, ring)
    sc_m, sh_m, P_m = pochhammer_shifted(zm, 2, n, order, ring)
    P = (P_p * P_m).scale(sc_p * sc_m)
    tot = 2 * n + sh_p + sh_m
    if tot < 0:
        raise SeriesError("negative exponent in delta")
    delta = P.shift_q(tot)
    tails = pochhammer(MonomialSpec(1, 1, s + 2 * n + 3), 2, None, order, ring) * pochhammer(
        MonomialSpec(1, -1, s + 2 * n + 3), 2, None, order, ring
    )
    tri = [ring.zero()] * order
    tri[0] = ring.one()
    mid = -(z + zinv)
    if s + 2 * n + 1 < order:
        tri[s + 2 * n + 1] = mid
    if 2 * s + 4 * n < order:
        tri[2 * s + 4 * n] = tri[2 * s + 4 * n] + ring.one()
    pref = lift_series((euler_product(2, 2, order) * euler_product(2 * s + 2, 2, order)).invert(), ring)
    gamma = (P * tails * TruncatedSeries(ring, tri, order) * pref).shift_q(tot)
    return delta, gamma


def _delta_gamma_omega(s: int, n: int, order: int):
    """The third-root specialization (delta^2, gamma^2); needs s >= 2."""
    if s < 2:
        raise SeriesError("specialized conjugate pair needs s >= 2 (a != q)")
    num = pochhammer(MonomialSpec(1, 0, 3 * s - 3), 6, n, order, INT_RING)
    delta = (num * _inv_poch_from(s - 1, 2, n, order)).shift_q(2 * n)
    body = [0] * order
    body[0] = 1
    factor_pass(body, 1, s + 2 * n - 1)
    factor_pass(body, 1, s + 2 * n + 1)
    tri = [0] * order
    tri[0] = 1
    if s + 2 * n + 1 < order:
        tri[s + 2 * n + 1] += 1
    if 2 * s + 4 * n < order:
        tri[2 * s + 4 * n] += 1
    geom_pass(body, 1, 3 * s + 6 * n - 3)
    geom_pass(body, 1, 3 * s + 6 * n + 3)
    pref = euler_product(3 * s - 3, 6, order)
    pref = pref * (euler_product(2, 2, order) * euler_product(2 * s + 2, 2, order)
                   * euler_product(s - 1, 2, order)).invert()
    gamma = (TruncatedSeries(INT_RING, body, order) * TruncatedSeries(INT_RING, tri, order) * pref).shift_q(2 * n)
    return delta, gamma


def check_conjugate_pair(z_mode, s: int, n_max: int, order: int) -> VerificationReport:
    """gamma_n = sum_{j>=n} delta_j / ((u^2;u^2)_{j-n} (u^(2s+2);u^2)_{j+n}).

    The j-sum is truncated where delta_j's lowest power passes the order.
    With z_mode ("root", 3) the pair is also compared against its closed
    third-root specialization (for s >= 2).
    """
    start = time.perf_counter()
    ring, _, _ = resolve_mode(z_mode)
    mismatch = None
    for n in range(n_max + 1):
        _, gamma = _delta_gamma(z_mode, s, n, order)
        acc = TruncatedSeries.zeros(ring, order)
        j = n
        while True:
            low = 2 * j - (2 if s == 0 and j > 0 else 0)
            if low >= order:
                break
            delta_j, _ = _delta_gamma(z_mode, s, j, order)
            term = delta_j * lift_series(_inv_poch(j - n, 2, order), ring)
            term = term * lift_series(_inv_poch_from(2 * s + 2, 2, j + n, order), ring)
            acc = acc + term
            j += 1
        bad = gamma.first_mismatch(acc)
        if bad is not None:
            mismatch = Mismatch(bad, render_value(gamma.coeffs[bad]),
                                render_value(acc.coeffs[bad]), label=f"n={n}")
            break
        if z_mode == ("root", 3) and s >= 2:
            d1, g1 = _delta_gamma(z_mode, s, n, order)
            d2, g2 = _delta_gamma_omega(s, n, order)
            for one, two, label in ((d1, d2, "delta"), (g1, g2, "gamma")):
                bad = one.first_mismatch(lift_series(two, ring))
                if bad is not None:
                    mismatch = Mismatch(bad, render_value(one.coeffs[bad]),
                                        render_value(two.coeffs[bad]),
                                        label=f"{label} specialization n={n}")
                    break
            if mismatch:
                break
    millis = int((time.perf_counter() - start) * 1000)
    mode_tag = z_mode if isinstance(z_mode, str) else f"root{z_mode[1]}"
    return VerificationReport(
        id=f"conjugate_pair_{mode_tag}_s{s}",
        order=order,
        status="verified" if mismatch is None else "mismatch",
        first_mismatch=mismatch,
        millis=millis,
    )
