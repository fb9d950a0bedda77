"""Acceptance criteria: exact reproduction of every verified statement.

Each criterion runs at its stated truncation order and argument bound with
zero numerical tolerance (all arithmetic is exact) and prints one pass line
with its wall time.  Run with `pytest tests/test_acceptance.py -s` to see
the per-criterion lines.
"""

import json
import time

from sptforge.combinatorics import (
    classic_spt,
    j_fiber_check,
    partition_count,
    spt_oracle,
    spt_oracle_table,
)
from sptforge.qseries import TruncatedSeries, euler_product, geom_pass, series_invert
from sptforge.rings import INT_RING
from sptforge.sptcrank import VANISHING_PROGRESSIONS, check_congruence, spt_table
from sptforge.bailey import (
    VARIANT_S_SETS,
    check_conjugate_pair,
    check_lemma_variant,
    check_pair_relation,
)
from sptforge.registry import verify_all
from sptforge.cli import main


def _report(k, started, detail, budget):
    elapsed = time.perf_counter() - started
    assert elapsed < budget, f"criterion {k} exceeded its {budget}s budget ({elapsed:.1f}s)"
    print(f"[acceptance {k}] PASS  {detail}  ({elapsed:.2f}s)")


def test_criterion_1_classic_anchor():
    start = time.perf_counter()
    assert classic_spt(4) == 10
    p = series_invert(euler_product(1, 1, 61))
    for n in range(61):
        assert p.coeffs[n] == partition_count(n)
    _report(1, start, "spt(4) = 10 and partition counts to n = 60", 1.0)


def test_criterion_2_b2_is_spt_minus_p():
    start = time.perf_counter()
    N = 201
    b2 = spt_table("B2", 200)
    # independent total-smallest-parts series, built term by term
    acc = TruncatedSeries.zeros(INT_RING, N)
    inv_tail = series_invert(euler_product(1, 1, N)).coeffs
    running = list(inv_tail)  # 1/(q^(n);q)_inf for the current n, starting at n=1
    for n in range(1, N):
        term = [0] * N
        term[n] = 1
        geom_pass(term, 1, n)
        geom_pass(term, 1, n)
        # term now equals q^n/(1-q^n)^2; divide by (q^(n+1);q)_inf
        nxt = list(running)
        for j in range(N - 1, n - 1, -1):
            if nxt[j - n]:
                nxt[j] -= nxt[j - n]  # multiply by (1 - q^n)
        acc = acc + TruncatedSeries(INT_RING, term, N) * TruncatedSeries(INT_RING, nxt, N)
        running = nxt
    p = series_invert(euler_product(1, 1, N))
    for n in range(1, 201):
        assert b2[n] == acc.coeffs[n] - p.coeffs[n], n
    for n in range(1, 41):
        assert spt_oracle("B2", n) == classic_spt(n) - partition_count(n) == b2[n]
    _report(2, start, "spt_B2 = spt - p to n = 200 (series) and n = 40 (enumeration)", 10.0)


def test_criterion_3_j_additivity():
    start = time.perf_counter()
    j1 = spt_table("J1", 200)
    j2 = spt_table("J2", 200)
    j3 = spt_table("J3", 200)
    assert all(j1[n] == j2[n] + j3[n] for n in range(1, 201))
    for n in range(1, 31):
        rep = j_fiber_check(n)
        assert rep.consistent, rep.detail
        assert spt_oracle("J1", n) == spt_oracle("J2", n) + spt_oracle("J3", n) == j1[n]
    _report(3, start, "spt_J1 = spt_J2 + spt_J3 to n = 200 (series), n = 30 (fiber map)", 30.0)


def test_criterion_4_fifteen_congruences():
    start = time.perf_counter()
    for family, p, b in VANISHING_PROGRESSIONS:
        rep = check_congruence(family, p, b, 300)
        assert rep.verified, rep.text()
        assert [c.name for c in rep.checks] == ["divisibility", "root_coefficient_zero", "equal_classes"]
    _report(4, start, "all fifteen congruences to arguments 300, three stacked checks", 300.0)


def test_criterion_5_single_series():
    start = time.perf_counter()
    reports = verify_all("series_*")
    assert len(reports) == 7  # six families plus the additivity case
    assert all(r.verified and r.order >= 120 for r in reports), [r.text() for r in reports]
    assert any(r.id == "series_J1_additivity" for r in reports)
    dec = verify_all("sj1_decomposition")
    assert dec[0].verified
    _report(5, start, "six single-series identities at order 120 plus additivity", 180.0)


def test_criterion_6_product_identities():
    start = time.perf_counter()
    reports = verify_all("product_*")
    assert len(reports) == 3
    assert all(r.verified and r.order >= 150 for r in reports)
    _report(6, start, "three product identities at order 150", 60.0)


def test_criterion_7_dissections():
    start = time.perf_counter()
    reports = verify_all("dissect_*")
    assert len(reports) == 7
    for r in reports:
        want = 240 if r.id == "dissect_F3_3" else 250
        assert r.verified and r.order >= want, r.text()
    _report(7, start, "seven dissections over cyclotomic rings at orders 240/250", 600.0)


AUX_PREFIXES = ("series_", "product_", "dissect_", "sj1_")


def test_criterion_8_auxiliary_catalog():
    start = time.perf_counter()
    reports = [r for r in verify_all() if not r.id.startswith(AUX_PREFIXES)]
    assert len(reports) >= 25
    bad = [r.text() for r in reports if not r.verified]
    assert not bad, bad
    _report(8, start, f"{len(reports)} auxiliary catalog cases at their default orders", 600.0)


def test_criterion_9_bailey_infrastructure():
    start = time.perf_counter()
    for name in ("B2", "F3", "G4", "AG4", "J1", "J2", "J3", "F1", "Gstar", "Gstarstar"):
        assert check_pair_relation(name, 25, 200).verified, name
    for s in (0, 2):
        assert check_pair_relation("GenericStar", 25, 200, s=s).verified
        assert check_pair_relation("GenericStarStar", 25, 200, s=s).verified
    assert check_conjugate_pair("one", 0, 3, 120).verified
    assert check_conjugate_pair("symbolic", 1, 2, 120).verified
    assert check_conjugate_pair(("root", 3), 2, 2, 120).verified
    for variant, s_set in VARIANT_S_SETS.items():
        verdicts = set()
        for s in s_set:
            for pname in ("GenericStar", "GenericStarStar"):
                verdicts.add(check_lemma_variant(variant, pname, s, 120).status)
        assert verdicts == {"verified"}, variant
    _report(9, start, "pair relations n <= 25 at order 200; conjugate pair and 7 variants at 120", 180.0)


def test_criterion_10_oracle_equivalence():
    start = time.perf_counter()
    for family in ("B2", "J1", "J2", "J3"):
        series = spt_table(family, 40)
        table = spt_oracle_table(family, 40)
        assert series[1:] == table[1:], family
    for family in ("F3", "G4", "AG4"):
        series = spt_table(family, 30)
        table = spt_oracle_table(family, 30)
        assert series[1:] == table[1:], family
    _report(10, start, "enumeration oracles equal series coefficients (40 / 30)", 300.0)


def test_criterion_11_determinism(tmp_path):
    start = time.perf_counter()
    files = []
    for par in (1, 8):
        out = tmp_path / f"reports_p{par}.json"
        code = main(["verify", "--id", "*", "--format", "json", "--timing", "none",
                     "--parallelism", str(par), "--output", str(out)])
        assert code == 0
        files.append(out.read_bytes())
    assert files[0] == files[1]
    parsed = json.loads(files[0])
    assert all(r["status"] == "verified" for r in parsed)
    _report(11, start, f"two full runs (parallelism 1 and 8) byte-identical over {len(parsed)} cases", 600.0)
