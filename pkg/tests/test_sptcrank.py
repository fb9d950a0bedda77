"""Family builders: mode agreement, displays, tables, congruence machinery."""

import pytest

from sptforge.rings import cyclotomic_ring
from sptforge.qseries import SeriesError
from sptforge.sptcrank import (
    FAMILY_NAMES,
    UnknownFamilyError,
    VANISHING_PROGRESSIONS,
    build_spt_crank,
    check_congruence,
    check_vanishing,
    class_counts_from_roots,
    crank_table,
    one_variable_display,
    spt_table,
)


def test_build_examples():
    b2 = spt_table("B2", 4)
    assert b2[1:] == [0, 1, 2, 5]
    assert spt_table("J2", 2)[1] == 1
    for family in FAMILY_NAMES:
        assert build_spt_crank(family, "one", 8).coeffs[0] == 0
    with pytest.raises(UnknownFamilyError):
        build_spt_crank("nope", "one", 10)
    with pytest.raises(SeriesError):
        build_spt_crank("B2", "one", 1)


def test_one_variable_displays_match():
    for family in FAMILY_NAMES:
        disp = one_variable_display(family, 70)
        built = build_spt_crank(family, "one", 70)
        assert disp.first_mismatch(built) is None, family


def test_modes_agree():
    for family in FAMILY_NAMES:
        sym = build_spt_crank(family, "symbolic", 50)
        one = build_spt_crank(family, "one", 50)
        assert all(sym.coeffs[n].eval_at_one() == one.coeffs[n] for n in range(50)), family
        for t in (3, 5, 7):
            root = build_spt_crank(family, ("root", t), 50)
            assert all(sym.coeffs[n].eval_at_root(t) == root.coeffs[n] for n in range(50)), (family, t)


def test_j1_is_j2_plus_j3():
    a = build_spt_crank("J1", "symbolic", 70)
    b = build_spt_crank("J2", "symbolic", 70)
    c = build_spt_crank("J3", "symbolic", 70)
    assert a.first_mismatch(b + c) is None


def test_crank_table():
    tab = crank_table("B2", 121)
    spt = spt_table("B2", 121)
    assert all(tab.row_sum(n) == spt[n] for n in range(121))
    assert tab.rows[0].terms == {}  # nothing at q^0
    counts = tab.class_counts(5, 6)
    assert len(set(counts)) == 1  # all five classes equal at n = 6
    assert sum(counts) == spt[6]
    assert tab.observed_band <= 0  # support never reaches past |m| = n
    # M(m, 2): single partition contributing crank class 0
    assert tab.rows[2].terms == {0: 1}


def test_class_recovery_matches_symbolic():
    for family, t in (("B2", 5), ("F3", 3), ("G4", 5)):
        rec = class_counts_from_roots(family, t, 60)
        tab = crank_table(family, 61)
        for n in range(1, 61):
            assert rec[n] == tab.class_counts(t, n), (family, t, n)


def test_congruence_examples():
    assert check_congruence("F3", 3, 0, 120).verified
    assert check_congruence("B2", 7, 5, 120).verified
    rep = check_congruence("B2", 5, 2, 100)
    assert rep.status == "counterexample"
    assert rep.first_failure["check"] == "divisibility"
    with pytest.raises(ValueError):
        check_congruence("B2", 11, 1, 50)


def test_vanishing_examples():
    assert check_vanishing("J1", 3, 2, 140).verified
    assert check_vanishing("G4", 5, 4, 140).verified
    bad = check_vanishing("J2", 3, 1, 140)
    assert bad.status == "mismatch"
    assert bad.first_mismatch.power % 3 == 1


def test_vanishing_list_is_the_congruence_list():
    assert len(VANISHING_PROGRESSIONS) == 15
    fams = {f for f, _, _ in VANISHING_PROGRESSIONS}
    assert fams == set(FAMILY_NAMES)
