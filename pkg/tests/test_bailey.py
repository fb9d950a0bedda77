"""Bailey catalog: defining relation, transforms, conjugate pair."""

import pytest

from sptforge.qseries import MonomialSpec, SeriesError
from sptforge.bailey import (
    PAIR_NAMES,
    VARIANT_S_SETS,
    BaileyPair,
    alpha_monomials,
    beta_shifted,
    check_conjugate_pair,
    check_lemma_variant,
    check_limiting_lemma,
    check_pair_relation,
    get_pair,
)

NAMED = ("B2", "F3", "G4", "AG4", "J1", "J2", "J3", "F1", "Gstar", "Gstarstar")


def test_alpha_beta_zero_terms():
    for name in NAMED:
        pair = get_pair(name)
        assert alpha_monomials(pair, 0) == [(1, 0)]
        shift, beta = beta_shifted(pair, 0, 10)
        assert shift == 0 and beta.coeffs == [1] + [0] * 9


def test_j_beta_additivity():
    # the J1 quotient is the sum of the J2 and J3 quotients for n >= 1
    for n in range(1, 16):
        s1, b1 = beta_shifted(get_pair("J1"), n, 120)
        s2, b2 = beta_shifted(get_pair("J2"), n, 120)
        s3, b3 = beta_shifted(get_pair("J3"), n, 120)
        assert s1 == s2 == 0 and s3 == n
        assert b1.first_mismatch(b2 + b3.shift_q(n)) is None, n


def test_b2_first_beta():
    # beta_1 of B2 is q/(1-q); the relation gives it as
    # 1/(1-q)^2 - (1+q^3)/((1-q)(1-q^2))
    shift, beta = beta_shifted(get_pair("B2"), 1, 30)
    assert shift == 1
    assert beta.coeffs == [1] * 30  # 1/(q;q)_1


def test_pair_relations():
    for name in NAMED:
        rep = check_pair_relation(name, 10, 100)
        assert rep.verified, rep.text()
    for s in (0, 1, 3):
        assert check_pair_relation("GenericStar", 8, 80, s=s).verified
        assert check_pair_relation("GenericStarStar", 8, 80, s=s).verified


def test_pair_relation_negative_control():
    # breaking beta additivity: J2's beta against J1's alpha must fail
    broken = BaileyPair("J1", 1, 0)
    import sptforge.bailey as bailey

    orig = bailey.beta_shifted

    def patched(pair, n, order, scale=1):
        if pair.name == "J1" and n >= 1:
            return orig(get_pair("J2"), n, order, scale)
        return orig(pair, n, order, scale)

    bailey.beta_shifted = patched
    try:
        rep = check_pair_relation("J1", 4, 60)
    finally:
        bailey.beta_shifted = orig
    assert rep.status == "mismatch"
    assert rep.first_mismatch is not None


def test_limiting_lemma():
    z, zi = MonomialSpec(1, 1, 0), MonomialSpec(1, -1, 0)
    for name in ("B2", "J1", "J2", "J3", "F3", "G4", "AG4"):
        assert check_limiting_lemma(name, z, zi, 50).verified, name
    # degenerate cases: both parameters at infinity, and one finite monomial
    assert check_limiting_lemma(BaileyPair("GenericStar", 1, 0), None, None, 60).verified
    assert check_limiting_lemma("F3", MonomialSpec(-1, 0, 1), None, 60).verified
    with pytest.raises(SeriesError):
        check_limiting_lemma("B2", MonomialSpec(1, 0, 1), None, 40)  # rho = q is a pole


def test_lemma_variants_and_s_independence():
    for variant, s_set in VARIANT_S_SETS.items():
        verdicts = set()
        for s in s_set:
            for pname in ("GenericStar", "GenericStarStar"):
                rep = check_lemma_variant(variant, pname, s, 70)
                verdicts.add(rep.status)
        assert verdicts == {"verified"}, variant


def test_lemma_variants_catalog_pairs():
    for variant in (1, 2):
        for pname in ("B2", "J1", "J2", "J3"):
            assert check_lemma_variant(variant, pname, 0, 70).verified, (variant, pname)


def test_inadmissible_variant_parameters():
    with pytest.raises(SeriesError):
        check_lemma_variant(3, "GenericStar", 0, 40)  # negative exponents
    with pytest.raises(SeriesError):
        check_lemma_variant(5, "GenericStar", 1, 40)  # a = q excluded
    with pytest.raises(SeriesError):
        check_lemma_variant(7, "F3", 0, 40)  # a = 1 loses formal convergence
    with pytest.raises(SeriesError):
        check_lemma_variant(7, "B2", 1, 40)  # wrong base


def test_conjugate_pair():
    assert check_conjugate_pair("one", 0, 2, 60).verified
    assert check_conjugate_pair("one", 1, 3, 60).verified
    assert check_conjugate_pair("symbolic", 1, 2, 50).verified
    assert check_conjugate_pair(("root", 3), 2, 3, 50).verified  # includes specialization
    # vacuous high n: both sides are zero to the order
    assert check_conjugate_pair("one", 0, 2, 60).order == 60
