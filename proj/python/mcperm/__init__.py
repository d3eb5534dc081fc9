"""Multi-colored permutation groups: statistics, enumeration and generating functions."""

from ._core import (
    BudgetExceeded,
    Element,
    K,
    Signature,
    corollary_exc_count,
    cyc,
    enumerate,
    exc_A,
    exc_definitional,
    exc_via_proposition,
    fix,
    involution_polynomial,
    oracle_polynomial,
    poly_normalize,
    stats,
    thm1_closed,
    thm2_closed,
    thm2_recurrence,
    verify,
    csum_p,
)

__all__ = [
    "BudgetExceeded",
    "Element",
    "K",
    "Signature",
    "corollary_exc_count",
    "csum_p",
    "cyc",
    "enumerate",
    "exc_A",
    "exc_definitional",
    "exc_via_proposition",
    "fix",
    "involution_polynomial",
    "oracle_polynomial",
    "poly_normalize",
    "stats",
    "thm1_closed",
    "thm2_closed",
    "thm2_recurrence",
    "verify",
]
