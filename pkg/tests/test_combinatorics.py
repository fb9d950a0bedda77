"""Enumeration oracles against hand counts and the series engine."""

import pytest

from sptforge.combinatorics import (
    classic_spt,
    enumerate_partitions,
    j_fiber_check,
    partition_count,
    spt_oracle,
    spt_oracle_table,
)
from sptforge.qseries import euler_product, series_invert
from sptforge.sptcrank import spt_table


def test_enumerate_partitions():
    assert list(enumerate_partitions(4)) == [(4,), (3, 1), (2, 2), (2, 1, 1), (1, 1, 1, 1)]
    assert list(enumerate_partitions(0)) == [()]
    assert sum(1 for _ in enumerate_partitions(9)) == 30
    for n in range(20):
        parts = list(enumerate_partitions(n))
        assert len(parts) == partition_count(n)
        assert all(sum(p) == n for p in parts)
        assert all(all(p[i] >= p[i + 1] for i in range(len(p) - 1)) for p in parts)


def test_partition_counts_match_series():
    p = series_invert(euler_product(1, 1, 61))
    for n in range(61):
        assert partition_count(n) == p.coeffs[n]
    # object-level enumeration agrees at a larger spot check too
    assert sum(1 for _ in enumerate_partitions(35)) == p.coeffs[35] == 14883


def test_classic_spt():
    assert classic_spt(4) == 10
    assert classic_spt(1) == 1
    assert classic_spt(2) == 3


def test_spt_oracle_examples():
    assert spt_oracle("B2", 4) == 5
    assert spt_oracle("J2", 3) == 3
    assert spt_oracle("J1", 2) == 3
    assert spt_oracle("J1", 2) % 3 == 0
    assert spt_oracle("J3", 2) == 1
    assert spt_oracle("J1", 3) == spt_oracle("J2", 3) + spt_oracle("J3", 3) == 4
    with pytest.raises(ValueError):
        spt_oracle("XX", 3)


def test_b2_oracle_is_spt_minus_p():
    for n in range(1, 26):
        assert spt_oracle("B2", n) == classic_spt(n) - partition_count(n)


def test_fiber_map():
    rep = j_fiber_check(3)
    assert rep.consistent
    assert rep.j1_weight == rep.j2_count + rep.j3_count == 4
    assert j_fiber_check(1).consistent
    for n in range(1, 19):
        rep = j_fiber_check(n)
        assert rep.consistent, rep.detail


def test_oracles_match_series_small():
    for family in ("B2", "J1", "J2", "J3"):
        series = spt_table(family, 18)
        for n in range(1, 19):
            assert spt_oracle(family, n) == series[n], (family, n)
    for family in ("F3", "G4", "AG4"):
        series = spt_table(family, 14)
        table = spt_oracle_table(family, 14)
        assert table[1:] == series[1:15], family
        # the one-shot oracle agrees with the swept table
        assert spt_oracle(family, 9) == table[9]
