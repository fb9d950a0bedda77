"""Structured results shared by the verification layers."""

from __future__ import annotations

from dataclasses import dataclass, field

from .rings import CyclotomicInteger, LaurentPolynomial


def render_value(v) -> str:
    """Canonical text form: ints plain, cyclotomic as a coordinate vector
    "[a0,...,a_{t-2}]", Laurent values as "exp:coeff" pairs sorted by exponent."""
    if isinstance(v, CyclotomicInteger):
        return "[" + ",".join(str(c) for c in v.coeffs) + "]"
    if isinstance(v, LaurentPolynomial):
        if not v.terms:
            return "0"
        return ",".join(f"{e}:{c}" for e, c in v.sorted_terms())
    return str(v)


@dataclass
class Mismatch:
    power: int
    lhs: str
    rhs: str
    label: str = ""

    def to_json(self) -> dict:
        out = {"power": self.power, "lhs": self.lhs, "rhs": self.rhs}
        if self.label:
            out["label"] = self.label
        return out


@dataclass
class VerificationReport:
    id: str
    order: int
    status: str  # "verified" | "mismatch"
    first_mismatch: Mismatch | None = None
    millis: int = 0

    @property
    def verified(self) -> bool:
        return self.status == "verified"

    def to_json(self) -> dict:
        return {
            "id": self.id,
            "order": self.order,
            "status": self.status,
            "first_mismatch": self.first_mismatch.to_json() if self.first_mismatch else None,
            "millis": self.millis,
        }

    def text(self) -> str:
        if self.verified:
            return f"{self.id}: verified to order {self.order} ({self.millis} ms)"
        m = self.first_mismatch
        where = f" [{m.label}]" if m and m.label else ""
        detail = f" at q^{m.power}: lhs={m.lhs} rhs={m.rhs}" if m else ""
        return f"{self.id}: MISMATCH{where}{detail} (order {self.order}, {self.millis} ms)"


@dataclass
class CongruenceCheck:
    name: str
    ok: bool
    witness: str = ""


@dataclass
class CongruenceReport:
    family: str
    modulus: int
    residue: int
    n_max: int
    status: str  # "verified" | "counterexample"
    checks: list = field(default_factory=list)
    first_failure: dict | None = None
    millis: int = 0

    @property
    def verified(self) -> bool:
        return self.status == "verified"

    def to_json(self) -> dict:
        return {
            "family": self.family,
            "modulus": self.modulus,
            "residue": self.residue,
            "n_max": self.n_max,
            "status": self.status,
            "checks": [{"name": c.name, "ok": c.ok, "witness": c.witness} for c in self.checks],
            "first_failure": self.first_failure,
            "millis": self.millis,
        }

    def text(self) -> str:
        head = (f"{self.family}: values {self.modulus}n+{self.residue} "
                f"mod {self.modulus}, arguments <= {self.n_max}")
        if self.verified:
            return f"{head}: verified ({self.millis} ms)"
        return f"{head}: COUNTEREXAMPLE {self.first_failure} ({self.millis} ms)"
