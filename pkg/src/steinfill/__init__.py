"""Exact-arithmetic verification of 2-adic Bernoulli number congruences
and of the admissibility conditions for stable almost complex structures
on (4k-1)-connected 8k-manifolds.

No floating point anywhere: integers are arbitrary precision, fractions
are always in lowest terms, and checks compare exact values.
"""

__version__ = "0.1.0"

from .bernoulli import (
    NumDenParts,
    SelfCheckReport,
    akiyama_tanigawa,
    bernoulli_nt,
    bernoulli_nt_oracle,
    bernoulli_top,
    clear_cache,
    index_bridge,
    num_den_parts,
    self_check,
    tangent_numbers,
    vsc_denominator,
)
from .congruence import (
    CarlitzParams,
    CongruenceReport,
    carlitz_bound,
    carlitz_lambda,
    check_carlitz,
    check_doubling_divisibility,
    check_reciprocal_difference,
    finite_difference,
)
from .exact_arith import (
    INFINITY,
    InternalCheckError,
    Rational,
    Valuation,
    binomial,
    denominator_of,
    is_prime,
    numerator_of,
    ord_2,
    ord_p,
    rational_make,
)
from .fillability import (
    AdmissibilityReport,
    AhatValue,
    ManifoldInvariants,
    NumeratorIdentityReport,
    a_coeff,
    ahat,
    decide_admissibility,
    equivalence_audit_cases,
    forced_sigma_valuation,
    validate_invariants,
    yang_condition,
    yang_numerator_identity,
    yang_plus_condition,
)

__all__ = [
    "__version__",
    "INFINITY",
    "InternalCheckError",
    "Rational",
    "Valuation",
    "rational_make",
    "numerator_of",
    "denominator_of",
    "is_prime",
    "ord_p",
    "ord_2",
    "binomial",
    "tangent_numbers",
    "bernoulli_nt",
    "bernoulli_nt_oracle",
    "akiyama_tanigawa",
    "bernoulli_top",
    "index_bridge",
    "vsc_denominator",
    "NumDenParts",
    "num_den_parts",
    "SelfCheckReport",
    "self_check",
    "clear_cache",
    "CarlitzParams",
    "CongruenceReport",
    "carlitz_lambda",
    "finite_difference",
    "carlitz_bound",
    "check_carlitz",
    "check_reciprocal_difference",
    "check_doubling_divisibility",
    "ManifoldInvariants",
    "AhatValue",
    "NumeratorIdentityReport",
    "AdmissibilityReport",
    "validate_invariants",
    "a_coeff",
    "ahat",
    "forced_sigma_valuation",
    "yang_condition",
    "yang_plus_condition",
    "yang_numerator_identity",
    "decide_admissibility",
    "equivalence_audit_cases",
]
