"""Exact Hankel and t-Hankel determinants of automatic sequences,
with machine-checked congruence verifiers."""

from .congruence import binom, binom_parity
from .hankel import (
    HankelWindow,
    bareiss_determinant,
    hankel_det,
    hankel_det_parity,
    t_hankel_det,
    t_hankel_det_elimination,
    t_hankel_det_mod2,
    t_hankel_mod2_leading_minors,
)
from .involutions import (
    ENUMERATION_CAP,
    LEIBNIZ_CAP,
    Involution,
    Permutation,
    enumerate_involutions,
    fix_generating_polynomial,
    fixed_points_count,
    inversions,
    leibniz_t_det,
    mu,
    mu2,
    odd_double_factorial,
    transposition_counts,
    transposition_counts2,
)
from .number_sets import (
    FinitePrefix,
    SetId,
    beta,
    delta,
    membership,
    prefix,
    transposition_in,
    two_adic_valuation,
)
from .polynomial import (
    GF2Polynomial,
    IntPolynomial,
    default_nodes,
    interpolate,
    poly_add,
    poly_eval,
    poly_mod2,
    poly_mul,
    poly_neg,
)
from .sequences import SequenceId, prefix_terms, series_oracle, term
from .verify import ClaimId, PROFILES, VerifyReport, verify, verify_all

__version__ = "0.1.0"

__all__ = [
    "ENUMERATION_CAP",
    "LEIBNIZ_CAP",
    "PROFILES",
    "ClaimId",
    "FinitePrefix",
    "GF2Polynomial",
    "HankelWindow",
    "IntPolynomial",
    "Involution",
    "Permutation",
    "SequenceId",
    "SetId",
    "VerifyReport",
    "bareiss_determinant",
    "beta",
    "binom",
    "binom_parity",
    "default_nodes",
    "delta",
    "enumerate_involutions",
    "fix_generating_polynomial",
    "fixed_points_count",
    "hankel_det",
    "hankel_det_parity",
    "interpolate",
    "inversions",
    "leibniz_t_det",
    "membership",
    "mu",
    "mu2",
    "odd_double_factorial",
    "poly_add",
    "poly_eval",
    "poly_mod2",
    "poly_mul",
    "poly_neg",
    "prefix",
    "prefix_terms",
    "series_oracle",
    "t_hankel_det",
    "t_hankel_det_elimination",
    "t_hankel_det_mod2",
    "t_hankel_mod2_leading_minors",
    "term",
    "transposition_counts",
    "transposition_counts2",
    "transposition_in",
    "two_adic_valuation",
    "verify",
    "verify_all",
    "__version__",
]
