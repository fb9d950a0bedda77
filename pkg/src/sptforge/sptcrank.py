"""Builders for the two-variable crank-refined series of the seven families.

Each family X has a series of the shape

    S_X(z, q) = P_X(q) / (z, z^-1; Q)_inf * sum_{n>=1} (z, z^-1; Q)_n t_n(q)

with Q = q or q^2.  The engine never forms the n = 0 pole factors
(1 - z)(1 - z^-1): the quotient is rewritten with

    (z, z^-1; Q)_n / (z, z^-1; Q)_inf = 1 / ((z Q^n; Q)_inf (z^-1 Q^n; Q)_inf)

so the sum becomes sum t_n * U_n where U_n is a product of geometric
factors g_j = 1/((1 - z Q^j)(1 - z^-1 Q^j)) over j >= n.  Since
U_n = g_n * U_{n+1}, the whole sum is accumulated by one ascending Horner
pass, B <- (B + t_n) * g_n, which costs two geometric passes per n.  The
t_n themselves are maintained incrementally from the ratio t_n / t_{n-1},
a monomial times finitely many geometric and linear factors.

Build modes: "symbolic" keeps z as a Laurent variable (the coefficient of
z^m q^n is the crank-class count M_X(m, n)), "one" sets z = 1 (coefficients
are the weighted counts spt_X(n)), and ("root", t) sets z to a primitive
t-th root of unity over Z[zeta_t].
"""

from __future__ import annotations

import threading
from dataclasses import dataclass, field

from .rings import INT_RING, LaurentPolynomial, cyclotomic_ring
from .qseries import (
    MonomialSpec,
    TruncatedSeries,
    SeriesError,
    assert_z_band,
    euler_product,
    geom_pass,
    factor_pass,
    lift_series,
    pochhammer,
    resolve_mode,
)
from .reports import CongruenceCheck, CongruenceReport, Mismatch, VerificationReport, render_value

FAMILY_NAMES = ("B2", "F3", "G4", "AG4", "J1", "J2", "J3")
EXTENDED_FAMILY_NAMES = FAMILY_NAMES + ("Gstar", "Gstarstar")

# The vanishing coefficient progressions q^(t*n + r) in S_X(zeta_t, q),
# one per congruence of the family table.
VANISHING_PROGRESSIONS = (
    ("F3", 3, 0),
    ("J1", 3, 2),
    ("J2", 3, 0),
    ("J3", 3, 1),
    ("B2", 5, 1),
    ("B2", 5, 4),
    ("F3", 5, 0),
    ("F3", 5, 4),
    ("G4", 5, 4),
    ("AG4", 5, 4),
    ("B2", 7, 1),
    ("B2", 7, 5),
    ("F3", 7, 0),
    ("F3", 7, 4),
    ("F3", 7, 6),
)


class UnknownFamilyError(ValueError):
    pass


def _shift_list(t: list, d: int) -> list:
    if d == 0:
        return t
    return [0] * d + t[: len(t) - d]


def _family_base(family: str) -> int:
    return 1 if family in ("B2", "J1", "J2", "J3") else 2


def _family_min_degree(family: str, n: int) -> int:
    if family in ("B2", "J3"):
        return 2 * n
    if family in ("J1", "J2", "F3"):
        return n
    if family in ("G4", "Gstarstar"):
        return n * n + 2 * n
    return n * n  # AG4, Gstar


def _family_terms(family: str, order: int):
    """Yield (n, coefficient list of t_n) while t_n can reach the order.

    Every step rebinds t through a fresh shifted copy before mutating, so
    previously yielded lists are never touched again and may be stored.
    """
    t = [0] * order
    n = 1
    if family == "B2":
        if order > 2:
            t[2] = 1
            geom_pass(t, 1, 1)
    elif family in ("J1", "J2", "F3"):
        if order > 1:
            t[1] = 1
            if family == "J1":
                geom_pass(t, 1, 1)
                geom_pass(t, 1, 1)
            else:
                geom_pass(t, 1, 1)
                geom_pass(t, 1, 2)
    elif family == "J3":
        if order > 2:
            t[2] = 1
            geom_pass(t, 1, 1)
            geom_pass(t, 1, 2)
    elif family in ("G4", "AG4"):
        e = 3 if family == "G4" else 1
        if order > e:
            t[e] = -1
            geom_pass(t, 1, 4)
            geom_pass(t, -1, 1)
    elif family in ("Gstar", "Gstarstar"):
        e = 1 if family == "Gstar" else 3
        if order > e:
            t[e] = 1
            geom_pass(t, 1, 4)
            geom_pass(t, 1, 1)
    else:
        raise UnknownFamilyError(f"unknown family {family!r}")

    if _family_min_degree(family, 1) >= order:
        return
    yield 1, t

    while True:
        n += 1
        if _family_min_degree(family, n) >= order:
            return
        if family == "B2":
            t = _shift_list(t, 2)
            geom_pass(t, 1, n)
        elif family == "J1":
            t = _shift_list(t, 1)
            factor_pass(t, 1, 3 * n - 3)
            geom_pass(t, 1, 2 * n - 2)
            geom_pass(t, 1, 2 * n - 1)
            geom_pass(t, 1, n)
        elif family in ("J2", "J3"):
            t = _shift_list(t, 1 if family == "J2" else 2)
            factor_pass(t, 1, 3 * n - 3)
            geom_pass(t, 1, 2 * n - 1)
            geom_pass(t, 1, 2 * n)
            geom_pass(t, 1, n - 1)
        elif family == "F3":
            t = _shift_list(t, 1)
            geom_pass(t, 1, 2 * n - 1)
            geom_pass(t, 1, 2 * n)
        elif family in ("G4", "AG4"):
            t = _shift_list(t, 2 * n + 1 if family == "G4" else 2 * n - 1)
            t = [-c for c in t]
            geom_pass(t, 1, 4 * n)
            geom_pass(t, -1, 2 * n - 1)
        else:  # Gstar, Gstarstar
            t = _shift_list(t, 2 * n - 1 if family == "Gstar" else 2 * n + 1)
            geom_pass(t, 1, 4 * n)
            geom_pass(t, 1, 2 * n - 1)
        yield n, t


def family_prefactor(family: str, order: int) -> TruncatedSeries:
    if family in ("B2", "F3"):
        return euler_product(1, 1, order)
    if family in ("J1", "J2", "J3"):
        e = euler_product(1, 1, order)
        return e * e * euler_product(3, 3, order).invert()
    if family in ("G4", "AG4"):
        return euler_product(4, 4, order) * pochhammer(
            MonomialSpec(-1, 0, 1), 2, None, order, INT_RING
        )
    if family in ("Gstar", "Gstarstar"):
        return euler_product(4, 4, order) * euler_product(1, 2, order)
    raise UnknownFamilyError(f"unknown family {family!r}")


_build_cache: dict = {}
_build_lock = threading.Lock()


def _mode_key(mode):
    return mode if isinstance(mode, (str, tuple)) else tuple(mode)


def build_spt_crank(family: str, mode, order: int) -> TruncatedSeries:
    """S_X(z, q) to the order, in the requested evaluation mode.

    Results are memoized per (family, mode, order); series are immutable,
    so sharing the cached object is safe.
    """
    if family not in EXTENDED_FAMILY_NAMES:
        raise UnknownFamilyError(f"unknown family {family!r}")
    if order < 2:
        raise SeriesError("order must be at least 2")
    key = (family, _mode_key(mode), order)
    with _build_lock:
        cached = _build_cache.get(key)
    if cached is not None:
        return cached

    ring, z, zinv = resolve_mode(mode)
    base = _family_base(family)
    acc = [ring.zero()] * order
    terms = {n: t for n, t in _family_terms(family, order)}
    # geometric factors are trivial past q^order, but terms may extend further
    top_g = (order + base - 1) // base
    top = max(top_g, max(terms) if terms else 0)
    for n in range(1, top + 1):
        t = terms.get(n)
        if t is not None:
            for j in range(_family_min_degree(family, n), order):
                if t[j]:
                    acc[j] = acc[j] + t[j]
        if n <= top_g:
            geom_pass(acc, z, base * n)
            geom_pass(acc, zinv, base * n)
    series = TruncatedSeries(ring, acc, order) * lift_series(
        family_prefactor(family, order), ring
    )
    if mode == "symbolic":
        assert_z_band(series)
    with _build_lock:
        _build_cache[key] = series
    return series


def spt_table(family: str, n_max: int) -> list:
    """spt_X(n) for n = 0..n_max (index 0 is always 0)."""
    series = build_spt_crank(family, "one", n_max + 1)
    return list(series.coeffs)


# -- crank tables -------------------------------------------------------------

@dataclass
class CrankTable:
    """Rows of crank-class counts M_X(m, n) from the symbolic build."""

    family: str
    order: int
    rows: list  # rows[n] is the LaurentPolynomial coefficient of q^n
    observed_band: int = 0

    def m_value(self, m: int, n: int) -> int:
        return self.rows[n].terms.get(m, 0)

    def row_sum(self, n: int) -> int:
        return self.rows[n].eval_at_one()

    def class_counts(self, t: int, n: int) -> list:
        out = [0] * t
        for m, c in self.rows[n].terms.items():
            out[m % t] += c
        return out


def crank_table(family: str, order: int) -> CrankTable:
    series = build_spt_crank(family, "symbolic", order)
    band = 0
    for n, row in enumerate(series.coeffs):
        if row.terms:
            band = max(band, max(abs(row.min_exp()), abs(row.max_exp())) - n)
    return CrankTable(family, order, list(series.coeffs), band)


def class_counts_from_roots(family: str, t: int, n_max: int) -> list:
    """M_X(k, t, n) for n <= n_max, recovered exactly from the z = zeta_t and
    z = 1 builds.

    On the basis 1..zeta^(t-2) the coefficient of q^n in S_X(zeta_t, q) is
    (M_0 - M_{t-1}, ..., M_{t-2} - M_{t-1}); together with
    sum_k M_k = spt_X(n) this determines every class count.
    """
    root = build_spt_crank(family, ("root", t), n_max + 1)
    spt = spt_table(family, n_max)
    table = []
    for n in range(n_max + 1):
        v = root.coeffs[n].coeffs
        s = sum(v)
        m_last, rem = divmod(spt[n] - s, t)
        if rem:
            raise SeriesError(f"inconsistent class recovery at n={n}")
        table.append([vi + m_last for vi in v] + [m_last])
    return table


# -- congruence and vanishing checks ------------------------------------------

def check_congruence(family: str, p: int, b: int, n_max: int) -> CongruenceReport:
    """Three stacked checks that spt_X(p n + b) == 0 mod p for p n + b <= n_max.

    (i) direct divisibility of the weighted counts, (ii) vanishing of the
    q^(p n + b) coefficients of S_X(zeta_p, q) over Z[zeta_p], and (iii)
    equality of all p crank-class counts; classes are recovered exactly
    from the root and z = 1 builds, and independently confirmed against
    the symbolic table for arguments up to 120.
    """
    import time

    if p not in (3, 5, 7):
        raise ValueError("modulus must be 3, 5, or 7")
    if not (0 <= b < p):
        raise ValueError(f"residue {b} out of range")
    start = time.perf_counter()
    spt = spt_table(family, n_max)
    root = build_spt_crank(family, ("root", p), n_max + 1)
    classes = class_counts_from_roots(family, p, n_max)
    sym_top = min(n_max, 120)
    table = crank_table(family, sym_top + 1)

    checks = []
    failure = None
    arg_list = list(range(b if b else p, n_max + 1, p))

    ok = True
    witness = ""
    for arg in arg_list:
        if spt[arg] % p:
            ok, witness = False, f"spt({arg}) = {spt[arg]}"
            break
    checks.append(CongruenceCheck("divisibility", ok, witness))
    if not ok and failure is None:
        failure = {"check": "divisibility", "detail": witness}

    ok = True
    witness = ""
    for arg in arg_list:
        c = root.coeffs[arg]
        if not c.is_zero():
            ok, witness = False, f"coefficient q^{arg} = {render_value(c)}"
            break
    checks.append(CongruenceCheck("root_coefficient_zero", ok, witness))
    if not ok and failure is None:
        failure = {"check": "root_coefficient_zero", "detail": witness}

    ok = True
    witness = ""
    for arg in arg_list:
        row = classes[arg]
        if any(x != row[0] for x in row):
            ok, witness = False, f"classes at {arg}: {row}"
            break
        if arg <= sym_top:
            direct = table.class_counts(p, arg)
            if direct != row:
                ok, witness = False, f"symbolic classes at {arg}: {direct} vs {row}"
                break
    checks.append(CongruenceCheck("equal_classes", ok, witness))
    if not ok and failure is None:
        failure = {"check": "equal_classes", "detail": witness}

    millis = int((time.perf_counter() - start) * 1000)
    return CongruenceReport(
        family=family,
        modulus=p,
        residue=b,
        n_max=n_max,
        status="verified" if failure is None else "counterexample",
        checks=checks,
        first_failure=failure,
        millis=millis,
    )


def check_vanishing(family: str, t: int, residue: int, order: int) -> VerificationReport:
    """Assert the q^(t n + residue) coefficients of S_X(zeta_t, q) vanish."""
    import time

    start = time.perf_counter()
    series = build_spt_crank(family, ("root", t), order)
    piece = series.dissect(t, residue)
    mismatch = None
    for n, c in enumerate(piece.coeffs):
        if not c.is_zero():
            mismatch = Mismatch(power=t * n + residue, lhs=render_value(c), rhs="0")
            break
    millis = int((time.perf_counter() - start) * 1000)
    return VerificationReport(
        id=f"vanishing_{family}_{t}_{residue}",
        order=order,
        status="verified" if mismatch is None else "mismatch",
        first_mismatch=mismatch,
        millis=millis,
    )


# -- reference one-variable forms ---------------------------------------------

def one_variable_display(family: str, order: int) -> TruncatedSeries:
    """The simplified z = 1 series of each family, built summand by summand.

    This is an independent route to spt_X used to cross-check the pole-free
    two-variable construction.
    """
    acc = TruncatedSeries.zeros(INT_RING, order)
    n = 1
    while _family_min_degree(family, n) < order:
        term = [0] * order
        if family == "B2":
            term[2 * n] = 1
            geom_pass(term, 1, n)
            geom_pass(term, 1, n)
            s = TruncatedSeries(INT_RING, term, order)
            s = s * euler_product(n + 1, 1, order).invert()
        elif family == "J1":
            term[n] = 1
            geom_pass(term, 1, n)
            geom_pass(term, 1, n)
            s = TruncatedSeries(INT_RING, term, order)
            s = s * pochhammer(MonomialSpec(1, 0, n + 1), 1, n - 1, order, INT_RING).invert()
            s = s * euler_product(3 * n, 3, order).invert()
        elif family in ("J2", "J3"):
            term[n if family == "J2" else 2 * n] = 1
            s = TruncatedSeries(INT_RING, term, order)
            s = s * pochhammer(MonomialSpec(1, 0, n), 1, n + 1, order, INT_RING).invert()
            s = s * euler_product(3 * n, 3, order).invert()
        elif family == "F3":
            term[n] = 1
            geom_pass(term, 1, 2 * n)
            geom_pass(term, 1, 2 * n)
            s = TruncatedSeries(INT_RING, term, order)
            s = s * euler_product(2 * n + 1, 2, order)
            s = s * euler_product(2 * n + 2, 2, order).invert()
        else:  # G4, AG4
            e = n * n + 2 * n if family == "G4" else n * n
            term[e] = -1 if n % 2 else 1
            geom_pass(term, 1, 2 * n)
            geom_pass(term, 1, 2 * n)
            s = TruncatedSeries(INT_RING, term, order)
            s = s * pochhammer(MonomialSpec(-1, 0, 2 * n + 1), 2, None, order, INT_RING)
            s = s * pochhammer(MonomialSpec(1, 0, 2 * n + 2), 2, n + 1, order, INT_RING).invert()
            s = s * euler_product(2 * n + 2, 2, order).invert()
            s = s * euler_product(4 * n + 6, 4, order).invert()
        acc = acc + s
        n += 1
    return acc
