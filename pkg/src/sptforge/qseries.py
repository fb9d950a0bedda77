"""Truncated formal power series in q and the builders used everywhere.

A TruncatedSeries holds the coefficients of q^0 .. q^(N-1) for an explicit
exclusive order N, over one of the exact rings in `rings`.  Negative
q-exponents are unrepresentable by design: every bilateral object is
rewritten term by term with 1/(1 - q^-m) = -q^m/(1 - q^m) before it is
materialized, so formal convergence is a checkable precondition instead of
a silent bug.

Half-integral exponents never appear here.  Statements whose natural form
carries square roots are verified after the global substitution that
doubles every exponent, which preserves formal Laurent identities.

The workhorse passes are

    factor pass    c_j -> c_j - x * c_{j-s}     multiply by (1 - x q^s)
    geometric pass c_j -> c_j + x * c_{j-s}     multiply by 1/(1 - x q^s)

where x is a coefficient-ring element (an integer, a root of unity, or a
power of z).  Every Pochhammer product, crank denominator and bilateral
term reduces to chains of these two passes, which keeps the deep builders
near O(N^2) coefficient operations.
"""

from __future__ import annotations

import math
import os
from dataclasses import dataclass

from .rings import (
    CyclotomicInteger,
    CyclotomicRing,
    LaurentPolynomial,
    Ring,
    INT_RING,
    LAURENT_RING,
    cyclotomic_ring,
)

DEFAULT_MAX_ORDER = 1200


def max_order_cap() -> int:
    """Order cap; SPTFORGE_MAX_ORDER raises or lowers it."""
    env = os.environ.get("SPTFORGE_MAX_ORDER")
    if env:
        try:
            return int(env)
        except ValueError:
            pass
    return DEFAULT_MAX_ORDER


class SeriesError(ValueError):
    pass


class NegativeExponentError(SeriesError):
    """A construction would need a negative power of q."""


class DivergentSeriesError(SeriesError):
    """A product or bilateral sum fails its formal-convergence check."""


class RingMismatchError(SeriesError):
    pass


@dataclass(frozen=True)
class MonomialSpec:
    """A signed monomial  sign * z^z_exp * q^q_exp  used as a builder argument."""

    sign: int = 1
    z_exp: int = 0
    q_exp: int = 0

    def __post_init__(self):
        if self.sign not in (1, -1):
            raise ValueError("sign must be +1 or -1")


def _coerce_coeff(ring: Ring, value):
    if isinstance(value, int):
        return ring.from_int(value)
    return value


class TruncatedSeries:
    """Dense truncated series: coeffs[n] is the coefficient of q^n."""

    __slots__ = ("ring", "order", "coeffs")

    def __init__(self, ring: Ring, coeffs, order: int | None = None):
        if order is None:
            order = len(coeffs)
        if order <= 0:
            raise SeriesError("order must be positive")
        coeffs = list(coeffs)
        if len(coeffs) < order:
            z = ring.zero()
            coeffs.extend(z for _ in range(order - len(coeffs)))
        elif len(coeffs) > order:
            coeffs = coeffs[:order]
        self.ring = ring
        self.order = order
        self.coeffs = coeffs

    # -- constructors -------------------------------------------------

    @classmethod
    def zeros(cls, ring: Ring, order: int) -> "TruncatedSeries":
        z = ring.zero()
        return cls(ring, [z] * order, order)

    @classmethod
    def one(cls, ring: Ring, order: int) -> "TruncatedSeries":
        s = cls.zeros(ring, order)
        s.coeffs[0] = ring.one()
        return s

    @classmethod
    def monomial(cls, ring: Ring, q_exp: int, coeff=1, order: int = 1) -> "TruncatedSeries":
        if q_exp < 0:
            raise NegativeExponentError(f"monomial exponent {q_exp}")
        s = cls.zeros(ring, order)
        if q_exp < order:
            s.coeffs[q_exp] = _coerce_coeff(ring, coeff)
        return s

    # -- basic queries -------------------------------------------------

    def coeff(self, n: int):
        if n < 0 or n >= self.order:
            raise IndexError(f"coefficient q^{n} outside truncation order {self.order}")
        return self.coeffs[n]

    def is_zero(self) -> bool:
        isz = self.ring.is_zero
        return all(isz(c) for c in self.coeffs)

    def __eq__(self, other):
        if not isinstance(other, TruncatedSeries):
            return NotImplemented
        return (
            self.ring == other.ring
            and self.order == other.order
            and self.coeffs == other.coeffs
        )

    def first_mismatch(self, other: "TruncatedSeries") -> int | None:
        """Lowest power where the two series differ, up to the shared order."""
        if self.ring != other.ring:
            raise RingMismatchError(f"{self.ring} vs {other.ring}")
        n = min(self.order, other.order)
        for j in range(n):
            if self.coeffs[j] != other.coeffs[j]:
                return j
        return None

    # -- ring operations ----------------------------------------------

    def _binary_order(self, other) -> int:
        if self.ring != other.ring:
            raise RingMismatchError(f"{self.ring} vs {other.ring}")
        return min(self.order, other.order)

    def __add__(self, other):
        if isinstance(other, int):
            out = TruncatedSeries(self.ring, self.coeffs, self.order)
            out.coeffs[0] = out.coeffs[0] + self.ring.from_int(other)
            return out
        n = self._binary_order(other)
        a, b = self.coeffs, other.coeffs
        return TruncatedSeries(self.ring, [a[j] + b[j] for j in range(n)], n)

    __radd__ = __add__

    def __sub__(self, other):
        if isinstance(other, int):
            return self + (-other)
        n = self._binary_order(other)
        a, b = self.coeffs, other.coeffs
        return TruncatedSeries(self.ring, [a[j] - b[j] for j in range(n)], n)

    def __neg__(self):
        return TruncatedSeries(self.ring, [-c for c in self.coeffs], self.order)

    def __mul__(self, other):
        if isinstance(other, (int, CyclotomicInteger, LaurentPolynomial)):
            return self.scale(other)
        n = self._binary_order(other)
        zero = self.ring.zero()
        out = [zero] * n
        b = other.coeffs
        b_order = other.order
        for i, ai in enumerate(self.coeffs[:n]):
            if not ai:
                continue
            top = min(n - i, b_order)
            for j in range(top):
                bj = b[j]
                if bj:
                    out[i + j] = out[i + j] + ai * bj
        return TruncatedSeries(self.ring, out, n)

    __rmul__ = __mul__

    def scale(self, c) -> "TruncatedSeries":
        c = _coerce_coeff(self.ring, c)
        if not c:
            return TruncatedSeries.zeros(self.ring, self.order)
        return TruncatedSeries(self.ring, [c * a for a in self.coeffs], self.order)

    def shift_q(self, k: int) -> "TruncatedSeries":
        """q^k * self, truncated back to the same order.  k must be >= 0."""
        if k < 0:
            raise NegativeExponentError(f"shift by q^{k}")
        if k == 0:
            return self
        zero = self.ring.zero()
        return TruncatedSeries(self.ring, [zero] * k + self.coeffs[: self.order - k], self.order)

    def truncate(self, order: int) -> "TruncatedSeries":
        if order > self.order:
            raise SeriesError(f"cannot extend order {self.order} to {order}")
        return TruncatedSeries(self.ring, self.coeffs[:order], order)

    def invert(self) -> "TruncatedSeries":
        """Multiplicative inverse to the truncation order.

        The constant term must be a unit: +1 or -1 (as an integer, or as
        the image of one in the coefficient ring).
        """
        n = self.order
        c0 = self.coeffs[0]
        one = self.ring.one()
        if c0 == one:
            sign = 1
        elif c0 == -one:
            sign = -1
        else:
            raise SeriesError(f"constant term {c0!r} is not a unit")
        zero = self.ring.zero()
        out = [zero] * n
        out[0] = one if sign == 1 else -one
        a = self.coeffs
        nz = [(k, a[k]) for k in range(1, n) if a[k]]
        for m in range(1, n):
            acc = zero
            for k, ak in nz:
                if k > m:
                    break
                bk = out[m - k]
                if bk:
                    acc = acc + ak * bk
            out[m] = -acc if sign == 1 else acc
        return TruncatedSeries(self.ring, out, n)

    def dissect(self, p: int, r: int) -> "TruncatedSeries":
        """Coefficients on the arithmetic progression p*n + r."""
        if not (0 <= r < p):
            raise SeriesError(f"residue {r} out of range for modulus {p}")
        if r >= self.order:
            raise SeriesError(f"residue {r} at or beyond order {self.order}")
        picked = self.coeffs[r::p]
        return TruncatedSeries(self.ring, picked, len(picked))

    def substitute(self, k: int, negate: bool = False) -> "TruncatedSeries":
        """q -> (+-1) q^k; output order is k * self.order, capped."""
        if k <= 0:
            raise SeriesError("substitution power must be positive")
        new_order = min(self.order * k, max_order_cap())
        zero = self.ring.zero()
        out = [zero] * new_order
        for n, c in enumerate(self.coeffs):
            if n * k >= new_order:
                break
            if not c:
                continue
            out[n * k] = -c if (negate and n % 2) else c
        return TruncatedSeries(self.ring, out, new_order)

    def map_coeffs(self, fn, ring: Ring | None = None) -> "TruncatedSeries":
        ring = ring or self.ring
        return TruncatedSeries(ring, [fn(c) for c in self.coeffs], self.order)

    def __repr__(self):
        head = ", ".join(repr(c) for c in self.coeffs[:6])
        return f"TruncatedSeries(order={self.order}, [{head}, ...])"


# -- named operation aliases -------------------------------------------

def series_mul(a: TruncatedSeries, b: TruncatedSeries) -> TruncatedSeries:
    return a * b


def series_invert(a: TruncatedSeries) -> TruncatedSeries:
    return a.invert()


def series_dissect(a: TruncatedSeries, p: int, r: int) -> TruncatedSeries:
    return a.dissect(p, r)


def series_substitute(a: TruncatedSeries, k: int, negate: bool = False) -> TruncatedSeries:
    return a.substitute(k, negate)


def interleave(pieces, p: int, order: int, ring: Ring) -> TruncatedSeries:
    """Rebuild a series from its p dissections: sum_r q^r piece_r(q^p)."""
    if len(pieces) != p:
        raise SeriesError(f"need {p} pieces, got {len(pieces)}")
    out = [ring.zero()] * order
    for r, piece in enumerate(pieces):
        for n, c in enumerate(piece.coeffs):
            e = p * n + r
            if e >= order:
                break
            out[e] = c
    return TruncatedSeries(ring, out, order)


# -- in-place passes on raw coefficient lists ---------------------------

def geom_pass(coeffs: list, x, step: int) -> None:
    """coeffs *= 1/(1 - x q^step): c_j += x * c_{j-step}, ascending j."""
    if step <= 0:
        raise DivergentSeriesError(f"geometric step {step} must be positive")
    n = len(coeffs)
    if x == 1:
        for j in range(step, n):
            c = coeffs[j - step]
            if c:
                coeffs[j] = coeffs[j] + c
        return
    if x == -1:
        for j in range(step, n):
            c = coeffs[j - step]
            if c:
                coeffs[j] = coeffs[j] - c
        return
    if isinstance(x, LaurentPolynomial) and len(x.terms) == 1:
        ((dz, cz),) = x.terms.items()
        if cz == 1:
            for j in range(step, n):
                c = coeffs[j - step]
                if c:
                    coeffs[j] = coeffs[j].add_shifted(c, dz)
            return
    for j in range(step, n):
        c = coeffs[j - step]
        if c:
            coeffs[j] = coeffs[j] + x * c


def factor_pass(coeffs: list, x, step: int) -> None:
    """coeffs *= (1 - x q^step): c_j -= x * c_{j-step}, descending j."""
    if step <= 0:
        raise SeriesError(f"factor step {step} must be positive")
    n = len(coeffs)
    if x == 1:
        for j in range(n - 1, step - 1, -1):
            c = coeffs[j - step]
            if c:
                coeffs[j] = coeffs[j] - c
        return
    if x == -1:
        for j in range(n - 1, step - 1, -1):
            c = coeffs[j - step]
            if c:
                coeffs[j] = coeffs[j] + c
        return
    if isinstance(x, LaurentPolynomial) and len(x.terms) == 1:
        ((dz, cz),) = x.terms.items()
        if cz == 1:
            for j in range(n - 1, step - 1, -1):
                c = coeffs[j - step]
                if c:
                    coeffs[j] = coeffs[j].sub_shifted(c, dz)
            return
    for j in range(n - 1, step - 1, -1):
        c = coeffs[j - step]
        if c:
            coeffs[j] = coeffs[j] - x * c


def _mono_inverse(ring: Ring, x):
    """Inverse of a unit monomial coefficient (+-1, +-zeta^k, +-z^m)."""
    if isinstance(x, int):
        if x in (1, -1):
            return x
        raise SeriesError(f"{x} is not a unit")
    if isinstance(x, CyclotomicInteger):
        nz = [(i, c) for i, c in enumerate(x.coeffs) if c]
        if len(nz) == 1 and nz[0][1] in (1, -1):
            i, c = nz[0]
            inv = CyclotomicInteger.root_power(x.t, -i)
            return inv if c == 1 else -inv
        if all(c == -1 for c in x.coeffs):  # zeta^(t-1) in reduced form
            return CyclotomicInteger.root_power(x.t, 1)
        if all(c == 1 for c in x.coeffs):
            return -CyclotomicInteger.root_power(x.t, 1)
        raise SeriesError(f"{x!r} is not a unit monomial")
    if isinstance(x, LaurentPolynomial):
        if len(x.terms) == 1:
            ((e, c),) = x.terms.items()
            if c in (1, -1):
                return LaurentPolynomial.monomial(-e, c)
        raise SeriesError(f"{x!r} is not a unit monomial")
    raise SeriesError(f"cannot invert {x!r}")


def resolve_z(ring: Ring, spec: MonomialSpec):
    """Coefficient-ring element for the z-part of a monomial spec."""
    if spec.z_exp == 0:
        return ring.from_int(spec.sign)
    if isinstance(ring, CyclotomicRing):
        val = CyclotomicInteger.root_power(ring.t, spec.z_exp)
        return val if spec.sign == 1 else -val
    if ring is INT_RING:
        return spec.sign  # z evaluated at 1
    return LaurentPolynomial.monomial(spec.z_exp, spec.sign)


# -- Pochhammer and Jacobi products -------------------------------------

def _base_exp(base) -> int:
    if isinstance(base, MonomialSpec):
        if base.sign != 1 or base.z_exp != 0:
            raise SeriesError("product base must be a plain positive power of q")
        return base.q_exp
    return int(base)


def pochhammer_shifted(
    arg: MonomialSpec,
    base,
    count: int | None,
    order: int,
    ring: Ring | None = None,
):
    """(arg; q^base)_count as (scalar, q_shift, series).

    Factors with negative q-exponent are rewritten
    (1 - x q^-m) = (-x) q^-m (1 - x^-1 q^m), which is what makes objects
    like (z q^-1; q^2)_n * q^(2n) buildable exactly.
    """
    b = _base_exp(base)
    if ring is None:
        ring = LAURENT_RING if arg.z_exp else INT_RING
    if count is None:
        if b <= 0:
            raise DivergentSeriesError("infinite product needs a positive base exponent")
        if arg.q_exp < 0:
            raise DivergentSeriesError("infinite product with a negative starting exponent")
        count = (order - arg.q_exp + b - 1) // b + 1 if arg.q_exp < order else 0
    elif count < 0:
        raise SeriesError("negative factor count")
    elif count > 1 and b <= 0:
        raise DivergentSeriesError("repeated factors need a positive base exponent")

    x = resolve_z(ring, arg)
    one = ring.one()
    coeffs = [ring.zero()] * order
    coeffs[0] = one
    scalar = one
    shift = 0
    for j in range(count):
        e = arg.q_exp + j * b
        if b > 0 and e >= order:
            break
        if e > 0:
            factor_pass(coeffs, x, e)
        elif e == 0:
            scalar = scalar * (one - x)
            if not scalar:
                return ring.zero(), 0, TruncatedSeries.zeros(ring, order)
        else:
            shift += e
            scalar = scalar * (-x)
            factor_pass(coeffs, _mono_inverse(ring, x), -e)
    return scalar, shift, TruncatedSeries(ring, coeffs, order)


def pochhammer(
    arg: MonomialSpec,
    base,
    count: int | None,
    order: int,
    ring: Ring | None = None,
) -> TruncatedSeries:
    """(arg; q^base)_count, count=None meaning the infinite product."""
    scalar, shift, series = pochhammer_shifted(arg, base, count, order, ring)
    if shift < 0:
        raise NegativeExponentError(
            f"product carries net monomial q^{shift}; use pochhammer_shifted"
        )
    return series.scale(scalar).shift_q(shift)


def euler_product(a_exp: int, base: int, order: int, ring: Ring | None = None) -> TruncatedSeries:
    """(q^a_exp; q^base)_infinity over the integers by default."""
    return pochhammer(MonomialSpec(1, 0, a_exp), base, None, order, ring or INT_RING)


def jacobi_product(a: int, b: int, order: int) -> TruncatedSeries:
    """(q^a; q^b)_inf (q^(b-a); q^b)_inf for 0 < a < b."""
    if not (0 < a < b):
        raise SeriesError(f"jacobi product needs 0 < a < b, got a={a}, b={b}")
    return euler_product(a, b, order) * euler_product(b - a, b, order)


def jacobi_shifted(sign: int, e: int, b: int, order: int):
    """(sign*q^e, q^b/(sign*q^e); q^b)_inf as (q_shift, series).

    Exponents outside (0, b) are folded back with the quasi-period
    j(q z) = -z^-1 j(z) and the symmetry j(z) = j(q/z); the net monomial
    comes back in the shift.  A plus-sign argument whose exponent is a
    multiple of the base gives the zero series.
    """
    if sign not in (1, -1):
        raise SeriesError("sign must be +-1")
    if b <= 0:
        raise SeriesError("jacobi base must be positive")
    if sign == 1 and e % b == 0:
        return 0, TruncatedSeries.zeros(INT_RING, order)
    if e <= 0:
        e = b - e  # j(z; q) = j(q/z; q)
    r = e % b
    m = (e - r) // b
    # m downward steps contribute (-sign)^m q^(-(m e - b m(m+1)/2))
    shift = -(m * e - b * (m * (m + 1)) // 2)
    neg = (-sign) ** (m % 2) if sign == -1 else (-1) ** (m % 2)
    if r == 0:  # only possible for sign == -1
        first = pochhammer(MonomialSpec(-1, 0, 0), b, None, order)
        second = pochhammer(MonomialSpec(-1, 0, b), b, None, order)
    else:
        first = pochhammer(MonomialSpec(sign, 0, r), b, None, order)
        second = pochhammer(MonomialSpec(sign, 0, b - r), b, None, order)
    series = first * second
    if neg == -1:
        series = -series
    return shift, series


# -- theta, Lambert, divisor builders ------------------------------------

def theta_sum(
    a_exp: int,
    base_exp: int,
    order: int,
    sign: int = -1,
    z_exp: int = 0,
    ring: Ring | None = None,
) -> TruncatedSeries:
    """sum over all integers n of sign^n z^(z_exp*n) q^(base*n(n-1)/2 + a*n).

    With sign=-1 and z_exp=0 this materializes the triple-product expansion
    of j(q^a; q^base) * (q^base; q^base)_inf.
    """
    if base_exp <= 0:
        raise DivergentSeriesError("theta sum needs a positive quadratic coefficient")
    if ring is None:
        ring = LAURENT_RING if z_exp else INT_RING
    coeffs = [ring.zero()] * order
    n_limit = math.isqrt(2 * order // base_exp + 4) + 2 * (abs(a_exp) // base_exp + 2)
    exp = lambda n: base_exp * (n * (n - 1)) // 2 + a_exp * n
    if exp(-n_limit) < order or exp(n_limit) < order:
        raise SeriesError("theta range bound too small")
    for n in range(-n_limit, n_limit + 1):
        e = exp(n)
        if e >= order:
            continue
        if e < 0:
            raise NegativeExponentError(f"theta term at n={n} has exponent {e}")
        c = sign ** (n % 2)
        if z_exp:
            coeffs[e] = coeffs[e] + LaurentPolynomial.monomial(z_exp * n, c)
        else:
            coeffs[e] = coeffs[e] + ring.from_int(c)
    return TruncatedSeries(ring, coeffs, order)


def geometric_term(num_exp: int, den_exp: int, order: int, coeffs: list | None = None, scale: int = 1):
    """Add scale * q^num / (1 - q^den) (den > 0, num >= 0) into a coefficient list."""
    if den_exp <= 0:
        raise DivergentSeriesError(f"denominator exponent {den_exp}")
    if num_exp < 0:
        raise NegativeExponentError(f"numerator exponent {num_exp}")
    out = coeffs if coeffs is not None else [0] * order
    for e in range(num_exp, order, den_exp):
        out[e] += scale
    return out


def lambert_sum(num_exp: int, den_exp: int, order: int) -> TruncatedSeries:
    """sum_{n>=1} q^(a n) / (1 - q^(b n)); coefficients are divisor counts."""
    if num_exp <= 0 or den_exp <= 0:
        raise SeriesError("lambert exponents must be positive")
    coeffs = [0] * order
    n = 1
    while num_exp * n < order:
        geometric_term(num_exp * n, den_exp * n, order, coeffs)
        n += 1
    return TruncatedSeries(INT_RING, coeffs, order)


def lambert_progression(residue: int, modulus: int, order: int, k_start: int = 0) -> TruncatedSeries:
    """sum_{k >= k_start} q^m/(1 - q^m) with m = modulus*k + residue."""
    coeffs = [0] * order
    k = k_start
    while True:
        m = modulus * k + residue
        if m <= 0:
            raise SeriesError(f"nonpositive exponent {m} in progression")
        if m >= order:
            break
        geometric_term(m, m, order, coeffs)
        k += 1
    return TruncatedSeries(INT_RING, coeffs, order)


def divisor_series(r: int, m: int, order: int) -> TruncatedSeries:
    """sum_N E_r(N; m) q^N, E_r counting divisors congruent to r minus those to -r."""
    if not (0 < r < m):
        raise SeriesError(f"residue {r} out of range for modulus {m}")
    coeffs = [0] * order
    for d in range(1, order):
        if d % m == r % m:
            for mult in range(d, order, d):
                coeffs[mult] += 1
        if d % m == (-r) % m:
            for mult in range(d, order, d):
                coeffs[mult] -= 1
    return TruncatedSeries(INT_RING, coeffs, order)


# -- rank and crank generating functions ---------------------------------

def resolve_mode(mode):
    """Map a build mode to (ring, z, z_inverse).

    Modes: "symbolic" (Laurent z), "one" (z = 1 over the integers), or
    ("root", t) for z = zeta_t over the cyclotomic ring.
    """
    if mode == "symbolic":
        return LAURENT_RING, LaurentPolynomial.monomial(1), LaurentPolynomial.monomial(-1)
    if mode == "one":
        return INT_RING, 1, 1
    if isinstance(mode, tuple) and len(mode) == 2 and mode[0] == "root":
        ring = cyclotomic_ring(mode[1])
        return ring, ring.root(1), ring.root(-1)
    raise SeriesError(f"unknown mode {mode!r}")


def lift_series(s: TruncatedSeries, ring: Ring) -> TruncatedSeries:
    if s.ring == ring:
        return s
    if s.ring != INT_RING:
        raise RingMismatchError("can only lift integer series")
    return TruncatedSeries(ring, [ring.from_int(c) for c in s.coeffs], s.order)


def rank_series(mode, order: int) -> TruncatedSeries:
    """Two-variable rank generating function R(z, q), truncated.

    R(z,q) = (1 + sum_{n>=1} (1-z)(1-z^-1)(-1)^n q^(n(3n+1)/2)(1+q^n)
                  / ((1-z q^n)(1-z^-1 q^n))) / (q;q)_inf
    and R(1,q) is the partition series.
    """
    ring, z, zinv = resolve_mode(mode)
    acc = [ring.zero()] * order
    acc[0] = ring.one()
    one = ring.one()
    pole = (one - z) * (one - zinv)
    n = 1
    while n * (3 * n + 1) // 2 < order:
        e = n * (3 * n + 1) // 2
        c = pole if n % 2 == 0 else -pole
        if c:
            term = [ring.zero()] * order
            term[e] = c
            if e + n < order:
                term[e + n] = term[e + n] + c
            geom_pass(term, z, n)
            geom_pass(term, zinv, n)
            for j in range(e, order):
                if term[j]:
                    acc[j] = acc[j] + term[j]
        n += 1
    inv_euler = euler_product(1, 1, order).invert()
    return TruncatedSeries(ring, acc, order) * lift_series(inv_euler, ring)


def crank_series(mode, order: int) -> TruncatedSeries:
    """Crank generating function C(z,q) = (q;q)_inf / ((zq;q)_inf (z^-1 q;q)_inf)."""
    ring, z, zinv = resolve_mode(mode)
    coeffs = lift_series(euler_product(1, 1, order), ring).coeffs
    for n in range(1, order):
        geom_pass(coeffs, z, n)
        geom_pass(coeffs, zinv, n)
    return TruncatedSeries(ring, coeffs, order)


# -- bilateral builders ---------------------------------------------------

def _add_bilateral_term(coeffs, num_exp: int, num_coef: int, den_sign: int, den_exp: int, order: int):
    """Add num_coef q^num_exp / (1 - den_sign q^den_exp) into coeffs.

    den_exp may be negative; the term is rewritten first.  A vanishing
    denominator exponent signals a pole and is rejected.
    """
    if den_exp == 0:
        if den_sign == 1:
            raise DivergentSeriesError("term 1/(1 - q^0) is a pole")
        raise SeriesError("term 1/(1 + q^0) has no integral expansion")
    if den_exp < 0:
        # 1/(1 - s q^-m) = -s q^m / (1 - s q^m)
        num_exp += -den_exp
        num_coef *= -den_sign
        den_exp = -den_exp
    if num_exp < 0:
        raise NegativeExponentError(f"bilateral term with net exponent {num_exp}")
    e = num_exp
    c = num_coef
    while e < order:
        coeffs[e] += c
        e += den_exp
        c *= den_sign


def _min_net_exponent(num: int, den: int) -> int:
    return num + (-den if den < 0 else 0)


def _assert_tail_out(num_fn, den_fn, n_limit: int, order: int) -> None:
    # n_limit sits past the vertex of the quadratic, so checking the two
    # boundary terms proves no contributing term was dropped
    for n in (-n_limit, n_limit):
        if _min_net_exponent(num_fn(n), den_fn(n)) < order:
            raise SeriesError("bilateral range bound too small")


def v_series(ell: int, b: int, order: int, pre_shift: int = 0) -> TruncatedSeries:
    """V_ell(b) = sum_{n != 0} q^(2n^2 + b n) / (1 - q^(4 ell n)), times q^pre_shift."""
    coeffs = [0] * order
    n_limit = math.isqrt(order) + abs(b) + 4 * ell + 4
    num_fn = lambda n: 2 * n * n + b * n + pre_shift
    den_fn = lambda n: 4 * ell * n
    _assert_tail_out(num_fn, den_fn, n_limit, order)
    for n in range(-n_limit, n_limit + 1):
        if n == 0:
            continue
        num, den = num_fn(n), den_fn(n)
        if _min_net_exponent(num, den) < order:
            _add_bilateral_term(coeffs, num, 1, 1, den, order)
    return TruncatedSeries(INT_RING, coeffs, order)


def u_series(ell: int, b: int, order: int, pre_shift: int = 0) -> TruncatedSeries:
    """U_ell(b) = sum_n q^(2n^2 + b n) / (1 - q^(4 ell n + 2 ell)), times q^pre_shift."""
    coeffs = [0] * order
    n_limit = math.isqrt(order) + abs(b) + 4 * ell + 4
    num_fn = lambda n: 2 * n * n + b * n + pre_shift
    den_fn = lambda n: 4 * ell * n + 2 * ell
    _assert_tail_out(num_fn, den_fn, n_limit, order)
    for n in range(-n_limit, n_limit + 1):
        num, den = num_fn(n), den_fn(n)
        if _min_net_exponent(num, den) < order:
            _add_bilateral_term(coeffs, num, 1, 1, den, order)
    return TruncatedSeries(INT_RING, coeffs, order)


def t_series(
    z_spec: MonomialSpec,
    w_spec: MonomialSpec,
    base: int,
    order: int,
    exclude_zero: bool = False,
    pre_shift: int = 0,
) -> TruncatedSeries:
    """T(z, w, Q) = sum_n (-1)^n Q^(n(n+1)/2) w^n / (1 - z Q^n) with Q = q^base.

    z and w are signed q-monomials.  The starred variant excludes n = 0,
    whose term would otherwise be a pole when z = 1.
    """
    if z_spec.z_exp or w_spec.z_exp:
        raise SeriesError("bilateral T builders take pure q-monomials")
    if base <= 0:
        raise DivergentSeriesError("T needs a positive base exponent")
    coeffs = [0] * order
    slack = (abs(w_spec.q_exp) + abs(z_spec.q_exp)) // base + 2
    n_limit = math.isqrt(2 * order // base + 4) + 2 * slack + 2
    num_fn = lambda n: base * (n * (n + 1)) // 2 + w_spec.q_exp * n + pre_shift
    den_fn = lambda n: base * n + z_spec.q_exp
    _assert_tail_out(num_fn, den_fn, n_limit, order)
    for n in range(-n_limit, n_limit + 1):
        if n == 0 and exclude_zero:
            continue
        num, den = num_fn(n), den_fn(n)
        coef = (-1) ** (n % 2) * (w_spec.sign ** (n % 2))
        if _min_net_exponent(num, den) < order:
            _add_bilateral_term(coeffs, num, coef, z_spec.sign, den, order)
    return TruncatedSeries(INT_RING, coeffs, order)


def h_series(z_spec: MonomialSpec, base: int, order: int) -> TruncatedSeries:
    """h(z, Q) = T*(z^-1, Q) + z T(z^2, z, Q) for a signed q-monomial z."""
    if z_spec.z_exp:
        raise SeriesError("h takes a pure q-monomial")
    if z_spec.q_exp < 0:
        raise NegativeExponentError("h needs a nonnegative monomial argument")
    z_inv = MonomialSpec(z_spec.sign, 0, -z_spec.q_exp)
    z_sq = MonomialSpec(1, 0, 2 * z_spec.q_exp)
    tstar = t_series(MonomialSpec(1, 0, 0), z_inv, base, order, exclude_zero=True)
    t_part = t_series(z_sq, z_spec, base, order, pre_shift=z_spec.q_exp)
    if z_spec.sign == -1:
        t_part = -t_part
    return tstar + t_part


def rank_dissection_sum(P: int, r: int, order: int) -> TruncatedSeries:
    """sum_n (-1)^n q^(3P n(n+1)/2) / (1 - q^(P n + r)) for 0 < r < P."""
    if not (0 < r < P):
        raise SeriesError("need 0 < r < P")
    coeffs = [0] * order
    n_limit = math.isqrt(order // P + 2) + 4
    num_fn = lambda n: 3 * P * (n * (n + 1)) // 2
    den_fn = lambda n: P * n + r
    _assert_tail_out(num_fn, den_fn, n_limit, order)
    for n in range(-n_limit, n_limit + 1):
        num, den = num_fn(n), den_fn(n)
        if _min_net_exponent(num, den) < order:
            _add_bilateral_term(coeffs, num, (-1) ** (n % 2), 1, den, order)
    return TruncatedSeries(INT_RING, coeffs, order)


def bilateral_builder(kind: str, params: dict, order: int) -> TruncatedSeries:
    """Dispatch for the bilateral sums: V, U, T, Tstar, and h."""
    if kind == "V":
        return v_series(params["ell"], params["b"], order, params.get("pre_shift", 0))
    if kind == "U":
        return u_series(params["ell"], params["b"], order, params.get("pre_shift", 0))
    if kind == "T":
        return t_series(params["z"], params["w"], params["base"], order,
                        pre_shift=params.get("pre_shift", 0))
    if kind == "Tstar":
        return t_series(MonomialSpec(1, 0, 0), params["w"], params["base"], order,
                        exclude_zero=True, pre_shift=params.get("pre_shift", 0))
    if kind == "h":
        return h_series(params["z"], params["base"], order)
    raise SeriesError(f"unknown bilateral builder {kind!r}")


# -- band assertion for two-variable builders ----------------------------

def assert_z_band(series: TruncatedSeries, slack: int = 2) -> int:
    """Check |z-exponent| <= n + slack at q^n; returns the widest |m| - n seen."""
    worst = -(10**9)
    for n, c in enumerate(series.coeffs):
        if isinstance(c, LaurentPolynomial) and c.terms:
            lo, hi = c.min_exp(), c.max_exp()
            spread = max(abs(lo), abs(hi)) - n
            if spread > worst:
                worst = spread
            if spread > slack:
                raise SeriesError(
                    f"z-band violated at q^{n}: support [{lo}, {hi}] exceeds +-({n}+{slack})"
                )
    return worst
