"""Brute-force partition oracles, independent of the series engine.

Everything here counts explicit combinatorial objects: partitions are
enumerated as weakly decreasing tuples and the weighted counts walk the
actual objects (or recurse over their part choices one part at a time).
No generating-function machinery is used, so agreement with the series
coefficients is a genuine two-sided check.

Family conventions, writing s for the smallest part of a partition and
spt for the number of times s occurs:

  B2   partitions weighted by (occurrences of s past the first), so the
       total is spt(n) - p(n).
  J1   partitions whose parts lie in [s, 2s-1] or are multiples of 3 that
       are >= 3s, weighted by spt.
  J2   partitions whose parts lie in [s, 2s] or are multiples of 3 >= 3s,
       counted once each.
  J3   as J2 but the smallest part must appear at least twice.
  F3   pairs (p1, p2): p1 has odd spt and every part >= 2s even; p2 is an
       overpartition whose plain parts are even and >= 2s+2 and whose
       overlined parts are distinct and >= s+1.  Weight
       (-1)^(overlined count) * (spt+1)/2.
  G4   pairs where p1 has spt >= s+2, spt+s even, parts > 2s even and
       parts > 4s congruent to 2 mod 4; p2 as in F3 with the extra rule
       that overlined parts >= 2s+1 are odd.  Weight
       (-1)^(s + number of overlined parts <= 2s) * (spt-s)/2.
  AG4  as G4 with the spt bound relaxed to spt >= s and weight factor
       (spt-s+2)/2.
"""

from __future__ import annotations

import functools
from dataclasses import dataclass

FAMILY_ORACLES = ("B2", "F3", "G4", "AG4", "J1", "J2", "J3")


def enumerate_partitions(n: int):
    """All partitions of n as weakly decreasing tuples, largest part first."""
    if n < 0:
        raise ValueError("n must be nonnegative")

    def rec(remaining, max_part, prefix):
        if remaining == 0:
            yield tuple(prefix)
            return
        for part in range(min(remaining, max_part), 0, -1):
            prefix.append(part)
            yield from rec(remaining - part, part, prefix)
            prefix.pop()

    return rec(n, n if n else 0, []) if n else iter([()])


@functools.lru_cache(maxsize=None)
def partition_count(n: int) -> int:
    """p(n) by the part-bounded counting recursion (no series involved)."""

    @functools.lru_cache(maxsize=None)
    def count(remaining, max_part):
        if remaining == 0:
            return 1
        if max_part == 0:
            return 0
        total = 0
        for part in range(min(remaining, max_part), 0, -1):
            total += count(remaining - part, part)
        return total

    return count(n, n)


def classic_spt(n: int) -> int:
    """Total number of smallest parts over all partitions of n."""
    if n < 1:
        raise ValueError("n must be positive")
    total = 0
    for p in enumerate_partitions(n):
        s = p[-1]
        total += p.count(s)
    return total


# -- single-partition families ---------------------------------------------

def _j_part_ok(family: str, x: int, s: int) -> bool:
    if family == "J1":
        return s <= x <= 2 * s - 1 or (x >= 3 * s and x % 3 == 0)
    # J2 and J3 allow x = 2s as well
    return s <= x <= 2 * s or (x >= 3 * s and x % 3 == 0)


def _oracle_single(family: str, n: int) -> int:
    total = 0
    for p in enumerate_partitions(n):
        s = p[-1]
        spt = p.count(s)
        if family == "B2":
            total += spt - 1
            continue
        if family == "J3" and spt < 2:
            continue
        if all(_j_part_ok(family, x, s) for x in p):
            total += spt if family == "J1" else 1
    return total


# -- overpartition halves for the pair families ------------------------------

@functools.lru_cache(maxsize=None)
def _count_even_parts(total: int, min_part: int) -> int:
    """Partitions of `total` into even parts, each >= min_part (min_part even)."""
    if total == 0:
        return 1
    count = 0
    part = min_part
    while part <= total:
        count += _count_even_parts(total - part, part)
        part += 2
    return count


@functools.lru_cache(maxsize=None)
def _signed_distinct(total: int, min_part: int) -> int:
    """Sum of (-1)^(number of parts) over distinct-part partitions of `total`
    with parts >= min_part."""
    if total == 0:
        return 1
    acc = 0
    for part in range(min_part, total + 1):
        acc -= _signed_distinct(total - part, part + 1)
    return acc


@functools.lru_cache(maxsize=None)
def _signed_distinct_oddtail(total: int, min_part: int, s: int) -> int:
    """As _signed_distinct, but parts >= 2s+1 must be odd and do not carry
    the sign; only parts <= 2s contribute a factor -1 each."""
    if total == 0:
        return 1
    acc = 0
    for part in range(min_part, total + 1):
        if part <= 2 * s:
            acc -= _signed_distinct_oddtail(total - part, part + 1, s)
        elif part % 2 == 1:
            acc += _signed_distinct_oddtail(total - part, part + 1, s)
    return acc


def _overpartition_weight(family: str, total: int, s: int) -> int:
    """Signed count of admissible second components of size `total`."""
    acc = 0
    for plain in range(0, total + 1):
        over = total - plain
        plain_count = _count_even_parts(plain, 2 * s + 2)
        if not plain_count:
            continue
        if family == "F3":
            acc += plain_count * _signed_distinct(over, s + 1)
        else:
            acc += plain_count * _signed_distinct_oddtail(over, s + 1, s)
    return acc


def _oracle_pairs(family: str, n: int) -> int:
    total = 0
    for n1 in range(1, n + 1):
        for p in enumerate_partitions(n1):
            s = p[-1]
            spt = p.count(s)
            if family == "F3":
                if spt % 2 == 0:
                    continue
                if any(x % 2 for x in p if x >= 2 * s):
                    continue
                weight = (spt + 1) // 2
                sign = 1
            else:
                if (spt + s) % 2:
                    continue
                if family == "G4" and spt < s + 2:
                    continue
                if family == "AG4" and spt < s:
                    continue
                if any(x % 2 for x in p if x > 2 * s):
                    continue
                if any(x % 4 != 2 for x in p if x > 4 * s):
                    continue
                weight = (spt - s) // 2 if family == "G4" else (spt - s + 2) // 2
                sign = -1 if s % 2 else 1
            if not weight:
                continue
            total += sign * weight * _overpartition_weight(family, n - n1, s)
    return total


def spt_oracle(family: str, n: int) -> int:
    """Exact weighted count for the family at n, by exhaustive enumeration."""
    if family not in FAMILY_ORACLES:
        raise ValueError(f"unknown family {family!r}")
    if n < 1:
        raise ValueError("n must be positive")
    if family in ("B2", "J1", "J2", "J3"):
        return _oracle_single(family, n)
    return _oracle_pairs(family, n)


def spt_oracle_table(family: str, n_max: int) -> list:
    """spt_oracle for n = 0..n_max in one sweep over the first components."""
    if family not in FAMILY_ORACLES:
        raise ValueError(f"unknown family {family!r}")
    if family in ("B2", "J1", "J2", "J3"):
        return [0] + [_oracle_single(family, n) for n in range(1, n_max + 1)]
    table = [0] * (n_max + 1)
    for n1 in range(1, n_max + 1):
        for p in enumerate_partitions(n1):
            s = p[-1]
            spt = p.count(s)
            if family == "F3":
                if spt % 2 == 0 or any(x % 2 for x in p if x >= 2 * s):
                    continue
                weight, sign = (spt + 1) // 2, 1
            else:
                if (spt + s) % 2:
                    continue
                if family == "G4" and spt < s + 2:
                    continue
                if family == "AG4" and spt < s:
                    continue
                if any(x % 2 for x in p if x > 2 * s):
                    continue
                if any(x % 4 != 2 for x in p if x > 4 * s):
                    continue
                weight = (spt - s) // 2 if family == "G4" else (spt - s + 2) // 2
                sign = -1 if s % 2 else 1
            if not weight:
                continue
            for n2 in range(0, n_max - n1 + 1):
                table[n1 + n2] += sign * weight * _overpartition_weight(family, n2, s)
    return table


# -- the J-family fiber map ---------------------------------------------------

@dataclass
class FiberReport:
    n: int
    consistent: bool
    j1_weight: int
    j2_count: int
    j3_count: int
    detail: str = ""


def _j_sets(n: int):
    j1, j2, j3 = [], [], []
    for p in enumerate_partitions(n):
        s = p[-1]
        spt = p.count(s)
        if all(_j_part_ok("J1", x, s) for x in p):
            j1.append(p)
        if all(_j_part_ok("J2", x, s) for x in p):
            j2.append(p)
            if spt >= 2:
                j3.append(p)
    return j1, j2, j3


def _split_map(p: tuple) -> tuple:
    """Replace every copy of 2s by s + s; the image keeps smallest part s."""
    s = p[-1]
    out = []
    extra = 0
    for x in p:
        if x == 2 * s:
            extra += 2
        else:
            out.append(x)
    out.extend([s] * extra)
    out.sort(reverse=True)
    return tuple(out)


def j_fiber_check(n: int) -> FiberReport:
    """Verify the splitting map from the J2 and J3 sets onto the J1 set.

    Fibers over an image with smallest-part multiplicity m must have sizes
    floor((m+1)/2) from J2 and floor(m/2) from J3, which together recover
    the weighted J1 count.
    """
    j1, j2, j3 = _j_sets(n)
    fibers2: dict = {}
    fibers3: dict = {}
    for p in j2:
        fibers2[_split_map(p)] = fibers2.get(_split_map(p), 0) + 1
    for p in j3:
        fibers3[_split_map(p)] = fibers3.get(_split_map(p), 0) + 1
    j1_set = set(j1)
    problems = []
    if not set(fibers2) <= j1_set or not set(fibers3) <= j1_set:
        problems.append("image leaves the target set")
    if set(fibers2) != j1_set:
        problems.append("the J2 map is not onto")
    for p in j1:
        m = p.count(p[-1])
        if fibers2.get(p, 0) != (m + 1) // 2:
            problems.append(f"J2 fiber over {p} has size {fibers2.get(p, 0)} != {(m + 1) // 2}")
            break
    for p in j1:
        m = p.count(p[-1])
        if fibers3.get(p, 0) != m // 2:
            problems.append(f"J3 fiber over {p} has size {fibers3.get(p, 0)} != {m // 2}")
            break
    w1 = sum(p.count(p[-1]) for p in j1)
    if w1 != len(j2) + len(j3):
        problems.append(f"weighted count {w1} != {len(j2)} + {len(j3)}")
    return FiberReport(
        n=n,
        consistent=not problems,
        j1_weight=w1,
        j2_count=len(j2),
        j3_count=len(j3),
        detail="; ".join(problems),
    )
