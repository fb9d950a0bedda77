"""Exact coefficient rings for the series engine.

Three rings cover every computation: plain arbitrary-precision integers,
cyclotomic integers Z[zeta_t] for prime t, and integer Laurent polynomials
in a single variable z.  All values are immutable after construction and
all operations are pure, so values can be shared freely across workers.

Cyclotomic integers are stored on the free Z-basis 1, zeta, ..., zeta^(t-2).
The reduction zeta^(t-1) = -(1 + zeta + ... + zeta^(t-2)) keeps the
representation canonical, which is what makes equality testing and the
zero test sound and complete: an element is zero iff every basis
coordinate is zero.

Laurent polynomials store only their nonzero terms, keyed by exponent,
so equality is structural on the term map.
"""

from __future__ import annotations

import functools


class ModulusError(ValueError):
    """Raised for a non-prime cyclotomic order or mismatched moduli."""


class ExactDivisionError(ArithmeticError):
    """Raised when an exact integer division does not come out even."""


def is_prime(n: int) -> bool:
    if n < 2:
        return False
    if n < 4:
        return True
    if n % 2 == 0:
        return False
    d = 3
    while d * d <= n:
        if n % d == 0:
            return False
        d += 2
    return True


class CyclotomicInteger:
    """Element of Z[zeta_t], t prime, reduced on the basis 1..zeta^(t-2)."""

    __slots__ = ("t", "coeffs")

    def __init__(self, t: int, coeffs):
        coeffs = tuple(coeffs)
        if len(coeffs) != t - 1:
            raise ValueError(f"expected {t - 1} basis coordinates, got {len(coeffs)}")
        object.__setattr__(self, "t", t)
        object.__setattr__(self, "coeffs", coeffs)

    def __setattr__(self, *a):  # pragma: no cover
        raise AttributeError("CyclotomicInteger is immutable")

    @classmethod
    def from_int(cls, t: int, n: int) -> "CyclotomicInteger":
        return cls(t, (n,) + (0,) * (t - 2))

    @classmethod
    def root_power(cls, t: int, k: int) -> "CyclotomicInteger":
        """Canonical form of zeta_t**k."""
        if not is_prime(t):
            raise ModulusError(f"cyclotomic order {t} is not prime")
        k %= t
        if k < t - 1:
            coeffs = [0] * (t - 1)
            coeffs[k] = 1
            return cls(t, coeffs)
        # zeta^(t-1) = -(1 + zeta + ... + zeta^(t-2))
        return cls(t, (-1,) * (t - 1))

    def _check(self, other: "CyclotomicInteger") -> None:
        if self.t != other.t:
            raise ModulusError(f"mixed cyclotomic orders {self.t} and {other.t}")

    def __add__(self, other):
        if isinstance(other, int):
            if other == 0:
                return self
            other = CyclotomicInteger.from_int(self.t, other)
        elif not isinstance(other, CyclotomicInteger):
            return NotImplemented
        self._check(other)
        return CyclotomicInteger(self.t, tuple(a + b for a, b in zip(self.coeffs, other.coeffs)))

    __radd__ = __add__

    def __neg__(self):
        return CyclotomicInteger(self.t, tuple(-a for a in self.coeffs))

    def __sub__(self, other):
        if isinstance(other, int):
            other = CyclotomicInteger.from_int(self.t, other)
        elif not isinstance(other, CyclotomicInteger):
            return NotImplemented
        self._check(other)
        return CyclotomicInteger(self.t, tuple(a - b for a, b in zip(self.coeffs, other.coeffs)))

    def __rsub__(self, other):
        if isinstance(other, int):
            return CyclotomicInteger.from_int(self.t, other) - self
        return NotImplemented

    def __mul__(self, other):
        if isinstance(other, int):
            if other == 0:
                return CyclotomicInteger.from_int(self.t, 0)
            if other == 1:
                return self
            return CyclotomicInteger(self.t, tuple(a * other for a in self.coeffs))
        if not isinstance(other, CyclotomicInteger):
            return NotImplemented
        self._check(other)
        t = self.t
        acc = [0] * t
        sc = self.coeffs
        oc = other.coeffs
        for i, a in enumerate(sc):
            if not a:
                continue
            for j, b in enumerate(oc):
                if not b:
                    continue
                idx = i + j
                if idx >= t:
                    idx -= t
                acc[idx] += a * b
        top = acc[t - 1]
        if top:
            return CyclotomicInteger(t, tuple(acc[i] - top for i in range(t - 1)))
        return CyclotomicInteger(t, tuple(acc[: t - 1]))

    __rmul__ = __mul__

    def mul_root(self, k: int) -> "CyclotomicInteger":
        """Multiply by zeta**k without a general convolution."""
        t = self.t
        k %= t
        if k == 0:
            return self
        acc = [0] * t
        for i, a in enumerate(self.coeffs):
            if a:
                acc[(i + k) % t] += a
        top = acc[t - 1]
        if top:
            return CyclotomicInteger(t, tuple(acc[i] - top for i in range(t - 1)))
        return CyclotomicInteger(t, tuple(acc[: t - 1]))

    def __eq__(self, other):
        if isinstance(other, int):
            return self.coeffs[0] == other and not any(self.coeffs[1:])
        if not isinstance(other, CyclotomicInteger):
            return NotImplemented
        return self.t == other.t and self.coeffs == other.coeffs

    def __hash__(self):
        return hash((self.t, self.coeffs))

    def __bool__(self):
        return any(self.coeffs)

    def is_zero(self) -> bool:
        return not any(self.coeffs)

    def as_int(self) -> int:
        """The rational-integer value; raises if the element is irrational."""
        if any(self.coeffs[1:]):
            raise ValueError(f"{self!r} is not a rational integer")
        return self.coeffs[0]

    def exact_div(self, k: int) -> "CyclotomicInteger":
        out = []
        for a in self.coeffs:
            q, r = divmod(a, k)
            if r:
                raise ExactDivisionError(f"{a} not divisible by {k}")
            out.append(q)
        return CyclotomicInteger(self.t, out)

    def __repr__(self):
        return f"CyclotomicInteger({self.t}, {list(self.coeffs)})"


class LaurentPolynomial:
    """Integer Laurent polynomial in z with finite support.

    Invariant: the term map never stores a zero coefficient, so two equal
    polynomials have identical maps.
    """

    __slots__ = ("terms",)

    def __init__(self, terms=None, _trusted=False):
        if terms is None:
            terms = {}
        elif not _trusted:
            terms = {e: c for e, c in terms.items() if c}
        object.__setattr__(self, "terms", terms)

    def __setattr__(self, *a):  # pragma: no cover
        raise AttributeError("LaurentPolynomial is immutable")

    @classmethod
    def from_int(cls, n: int) -> "LaurentPolynomial":
        return cls({0: n} if n else {}, _trusted=True)

    @classmethod
    def monomial(cls, exp: int, coeff: int = 1) -> "LaurentPolynomial":
        return cls({exp: coeff} if coeff else {}, _trusted=True)

    def __add__(self, other):
        if isinstance(other, int):
            if other == 0:
                return self
            other = LaurentPolynomial.from_int(other)
        elif not isinstance(other, LaurentPolynomial):
            return NotImplemented
        if not other.terms:
            return self
        if not self.terms:
            return other
        merged = dict(self.terms)
        for e, c in other.terms.items():
            v = merged.get(e, 0) + c
            if v:
                merged[e] = v
            elif e in merged:
                del merged[e]
        return LaurentPolynomial(merged, _trusted=True)

    __radd__ = __add__

    def __neg__(self):
        return LaurentPolynomial({e: -c for e, c in self.terms.items()}, _trusted=True)

    def __sub__(self, other):
        if isinstance(other, int):
            other = LaurentPolynomial.from_int(other)
        elif not isinstance(other, LaurentPolynomial):
            return NotImplemented
        return self + (-other)

    def __rsub__(self, other):
        if isinstance(other, int):
            return LaurentPolynomial.from_int(other) - self
        return NotImplemented

    def __mul__(self, other):
        if isinstance(other, int):
            if other == 0:
                return LaurentPolynomial()
            if other == 1:
                return self
            return LaurentPolynomial({e: c * other for e, c in self.terms.items()}, _trusted=True)
        if not isinstance(other, LaurentPolynomial):
            return NotImplemented
        if not self.terms or not other.terms:
            return LaurentPolynomial()
        if len(other.terms) == 1:
            (e2, c2), = other.terms.items()
            return LaurentPolynomial({e + e2: c * c2 for e, c in self.terms.items()}, _trusted=True)
        acc: dict = {}
        for e1, c1 in self.terms.items():
            for e2, c2 in other.terms.items():
                e = e1 + e2
                v = acc.get(e, 0) + c1 * c2
                if v:
                    acc[e] = v
                elif e in acc:
                    del acc[e]
        return LaurentPolynomial(acc, _trusted=True)

    __rmul__ = __mul__

    def add_shifted(self, other: "LaurentPolynomial", dz: int) -> "LaurentPolynomial":
        """self + z**dz * other, the inner step of geometric-factor passes."""
        if not other.terms:
            return self
        merged = dict(self.terms)
        for e, c in other.terms.items():
            ee = e + dz
            v = merged.get(ee, 0) + c
            if v:
                merged[ee] = v
            elif ee in merged:
                del merged[ee]
        return LaurentPolynomial(merged, _trusted=True)

    def sub_shifted(self, other: "LaurentPolynomial", dz: int) -> "LaurentPolynomial":
        """self - z**dz * other."""
        if not other.terms:
            return self
        merged = dict(self.terms)
        for e, c in other.terms.items():
            ee = e + dz
            v = merged.get(ee, 0) - c
            if v:
                merged[ee] = v
            elif ee in merged:
                del merged[ee]
        return LaurentPolynomial(merged, _trusted=True)

    def __eq__(self, other):
        if isinstance(other, int):
            return self.terms == ({0: other} if other else {})
        if not isinstance(other, LaurentPolynomial):
            return NotImplemented
        return self.terms == other.terms

    def __bool__(self):
        return bool(self.terms)

    def is_zero(self) -> bool:
        return not self.terms

    def sorted_terms(self):
        return sorted(self.terms.items())

    def min_exp(self):
        return min(self.terms) if self.terms else None

    def max_exp(self):
        return max(self.terms) if self.terms else None

    def eval_at_one(self) -> int:
        return sum(self.terms.values())

    def eval_at_root(self, t: int) -> CyclotomicInteger:
        """Ring homomorphism z -> zeta_t."""
        if not is_prime(t):
            raise ModulusError(f"cyclotomic order {t} is not prime")
        acc = [0] * t
        for e, c in self.terms.items():
            acc[e % t] += c
        top = acc[t - 1]
        if top:
            return CyclotomicInteger(t, tuple(acc[i] - top for i in range(t - 1)))
        return CyclotomicInteger(t, tuple(acc[: t - 1]))

    def exact_div(self, k: int) -> "LaurentPolynomial":
        out = {}
        for e, c in self.terms.items():
            q, r = divmod(c, k)
            if r:
                raise ExactDivisionError(f"{c} not divisible by {k}")
            out[e] = q
        return LaurentPolynomial(out, _trusted=True)

    def __repr__(self):
        if not self.terms:
            return "LaurentPolynomial({})"
        body = ", ".join(f"{e}: {c}" for e, c in self.sorted_terms())
        return "LaurentPolynomial({%s})" % body


class Ring:
    """Common coefficient-ring interface used by TruncatedSeries.

    Elements themselves carry the arithmetic (plain ints, or the classes
    above); the ring object supplies constants, coercion from integers,
    the zero test, and exact division by a rational integer.
    """

    kind = "abstract"

    def zero(self):
        raise NotImplementedError

    def one(self):
        raise NotImplementedError

    def from_int(self, n: int):
        raise NotImplementedError

    def is_zero(self, x) -> bool:
        return not x

    def div_int(self, x, k: int):
        raise NotImplementedError

    def __eq__(self, other):
        return isinstance(other, Ring) and self.key() == other.key()

    def __hash__(self):
        return hash(self.key())

    def key(self):
        return (self.kind,)

    def __repr__(self):
        return f"<ring {self.kind}>"


class IntegerRing(Ring):
    kind = "int"

    def zero(self):
        return 0

    def one(self):
        return 1

    def from_int(self, n: int):
        return n

    def div_int(self, x, k):
        q, r = divmod(x, k)
        if r:
            raise ExactDivisionError(f"{x} not divisible by {k}")
        return q


class CyclotomicRing(Ring):
    kind = "cyclotomic"

    def __init__(self, t: int):
        if not is_prime(t):
            raise ModulusError(f"cyclotomic order {t} is not prime")
        self.t = t

    def key(self):
        return (self.kind, self.t)

    def zero(self):
        return CyclotomicInteger.from_int(self.t, 0)

    def one(self):
        return CyclotomicInteger.from_int(self.t, 1)

    def from_int(self, n: int):
        return CyclotomicInteger.from_int(self.t, n)

    def root(self, k: int = 1) -> CyclotomicInteger:
        return CyclotomicInteger.root_power(self.t, k)

    def combo(self, powers: dict) -> CyclotomicInteger:
        """Sum of c * zeta**k over a {k: c} map, e.g. 3 + zeta + zeta**4."""
        acc = self.zero()
        for k, c in powers.items():
            acc = acc + self.root(k) * c
        return acc

    def is_zero(self, x) -> bool:
        return x.is_zero()

    def div_int(self, x, k):
        return x.exact_div(k)

    def __repr__(self):
        return f"<ring Z[zeta_{self.t}]>"


class LaurentRing(Ring):
    kind = "laurent"

    def zero(self):
        return LaurentPolynomial()

    def one(self):
        return LaurentPolynomial.from_int(1)

    def from_int(self, n: int):
        return LaurentPolynomial.from_int(n)

    def z(self, exp: int = 1, coeff: int = 1) -> LaurentPolynomial:
        return LaurentPolynomial.monomial(exp, coeff)

    def is_zero(self, x) -> bool:
        return not x.terms

    def div_int(self, x, k):
        return x.exact_div(k)


INT_RING = IntegerRing()
LAURENT_RING = LaurentRing()


@functools.lru_cache(maxsize=None)
def cyclotomic_ring(t: int) -> CyclotomicRing:
    return CyclotomicRing(t)


# Operation-style entry points mirroring the module contract.

def cyc_from_root_power(t: int, k: int) -> CyclotomicInteger:
    return CyclotomicInteger.root_power(t, k)


def cyc_mul(a: CyclotomicInteger, b: CyclotomicInteger) -> CyclotomicInteger:
    return a * b


def cyc_is_zero(a: CyclotomicInteger) -> bool:
    return a.is_zero()


def laurent_mul(a: LaurentPolynomial, b: LaurentPolynomial) -> LaurentPolynomial:
    return a * b


def laurent_eval_at_root(a: LaurentPolynomial, t: int) -> CyclotomicInteger:
    return a.eval_at_root(t)
