"""Exact q-series computer algebra for spt-crank-type functions.

The engine computes with truncated formal power series in q whose
coefficients live in one of three exact rings: arbitrary-precision
integers, cyclotomic integers Z[zeta_t] for prime t, or integer Laurent
polynomials in z.  On top of the series core sit a catalog of Bailey
pairs, builders for the two-variable crank-refined series S_X(z,q) of
seven smallest-parts families, brute-force enumeration oracles, and a
registry of verifiable identities with a CLI runner.
"""

from .rings import (
    CyclotomicInteger,
    CyclotomicRing,
    IntegerRing,
    LaurentPolynomial,
    LaurentRing,
    INT_RING,
    LAURENT_RING,
    cyc_from_root_power,
    cyc_is_zero,
    cyc_mul,
    laurent_eval_at_root,
    laurent_mul,
)
from .qseries import (
    MonomialSpec,
    TruncatedSeries,
    series_dissect,
    series_invert,
    series_mul,
    series_substitute,
    pochhammer,
    jacobi_product,
    theta_sum,
    lambert_sum,
    divisor_series,
    rank_series,
    crank_series,
    bilateral_builder,
)
from .sptcrank import (
    FAMILY_NAMES,
    build_spt_crank,
    crank_table,
    spt_table,
    check_congruence,
    check_vanishing,
)
from .combinatorics import (
    enumerate_partitions,
    classic_spt,
    spt_oracle,
    j_fiber_check,
)
from .registry import catalog, verify_case, verify_all

__all__ = [name for name in dir() if not name.startswith("_")]
__version__ = "0.1.0"
