"""Existence arithmetic for stable almost complex structures.

Decides, for a closed oriented (4k-1)-connected 8k-manifold described by
its invariants (k, signature sigma, tangential self-pairing tau_sq, and
whether the tangential class lands in the image of the unitary homotopy),
two equivalent admissibility conditions:

* the Bernoulli-number condition of Yang: a 2-divisibility constraint on
  an exact rational built from B_k, B_{2k} and sigma;
* the simplified condition: k >= 3 odd, or k = 1 with sigma even, or
  k even with the image condition.

"Divisible by 2" for a rational value is formalized as 2-adic valuation
>= 1 (a value of exactly 0 passes); whether the value is an integer is
reported separately in the audit and never assumed.

Also provides Wall's closed formula for the A-hat genus of such manifolds,
evaluated exactly in two algebraically equal forms, and the forced
signature divisibility 2^(4k-3-2j) | sigma that integrality of the A-hat
genus imposes once k > 2.

Only the arithmetic of the conditions is decided; whether an invariant
tuple is realized by an actual manifold is out of scope.  All functions
are pure over immutable inputs.
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from typing import Iterator

from .bernoulli import bernoulli_top, num_den_parts
from .exact_arith import InternalCheckError, Valuation, ord_2

__all__ = [
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


@dataclass(frozen=True)
class ManifoldInvariants:
    """Invariants of a (4k-1)-connected 8k-manifold.

    sigma: signature of the middle intersection form (may be negative).
    tau_sq: self-pairing of the tangential class in degree 4k (may be
        negative; indefinite forms are fine).
    tau_in_image: whether the tangential homomorphism lands in the image
        coming from the unitary classifying space.  Supplied by the caller:
        deriving it needs cohomology data this package does not model.  The
        quotient the flag tests is only nontrivial (Z/2) for even k, so odd
        k forces the flag to be true.
    """

    k: int
    sigma: int
    tau_sq: int
    tau_in_image: bool


def validate_invariants(inv: ManifoldInvariants) -> list[str]:
    """Return the list of violated constraints (empty when valid)."""
    problems = []
    if inv.k < 1:
        problems.append(f"k must be >= 1, got {inv.k}")
        return problems
    if inv.k % 2 == 1 and not inv.tau_in_image:
        problems.append("odd k forces tau_in_image (the obstruction group is trivial)")
    if inv.k > 2 and inv.tau_sq % 2 != 0:
        problems.append(f"k > 2 requires even tau_sq (even intersection form), got {inv.tau_sq}")
    if inv.k % 2 == 0 and inv.tau_in_image and inv.tau_sq % 8 != 0:
        problems.append(f"even k with tau_in_image requires 8 | tau_sq, got {inv.tau_sq}")
    return problems


def a_coeff(k: int) -> int:
    """(3 - (-1)^k) / 2: the coefficient 2 for odd k, 1 for even k."""
    if k < 1:
        raise ValueError("k must be >= 1")
    return 2 if k % 2 else 1


@dataclass(frozen=True)
class AhatValue:
    """An exactly evaluated A-hat genus and whether it is an integer."""

    value: Fraction
    is_integer: bool


def ahat(k: int, sigma: int, tau_sq: int) -> AhatValue:
    """A-hat genus of a (4k-1)-connected 8k-manifold by Wall's formula.

    Evaluated twice: in the direct form

        (a_k^2 2^(4k-4) B_k^2 (2^(2k)-1)^2 tau_sq - k^2 sigma)
        / (2^(4k+1) k^2 (2^(4k-1)-1))

    and in the rewritten form that splits B_k = N_k/(2 D'_k) and k = 2^j c
    into odd and 2-power parts.  The two evaluations are asserted equal.
    """
    if k < 1:
        raise ValueError("k must be >= 1")
    a_sq = a_coeff(k) ** 2
    b_k = bernoulli_top(k)
    q = 2 ** (2 * k) - 1
    odd_pow = 2 ** (4 * k - 1) - 1
    direct_num = a_sq * 2 ** (4 * k - 4) * b_k * b_k * q * q * tau_sq - k * k * sigma
    direct = direct_num / (2 ** (4 * k + 1) * k * k * odd_pow)

    j = ord_2(k)
    assert isinstance(j, int)
    c = k >> j
    parts = num_den_parts(k)
    # 4k - 6 - 2j is negative for k = 1; keep the power exact as a rational
    two_pow = Fraction(2) ** (4 * k - 6 - 2 * j)
    rewritten_num = (
        a_sq * parts.numerator**2 * q * q * tau_sq * two_pow
        - parts.odd_part**2 * c * c * sigma
    )
    rewritten = rewritten_num / (2 ** (4 * k + 1) * c * c * parts.odd_part**2 * odd_pow)
    if direct != rewritten:
        raise InternalCheckError(
            f"A-hat forms disagree at k={k}, sigma={sigma}, tau_sq={tau_sq}: "
            f"{direct} vs {rewritten}"
        )
    return AhatValue(value=direct, is_integer=direct.denominator == 1)


def forced_sigma_valuation(k: int) -> int:
    """The exponent 4k - 3 - 2j (k = 2^j * odd) that must divide ord_2(sigma).

    Integrality of the A-hat genus plus evenness of the intersection form
    forces 2^(4k-3-2j) | sigma; the evenness input is only available for
    k > 2, so smaller k is rejected.
    """
    if k < 3:
        raise ValueError(f"defined for k >= 3 only, got {k}")
    j = ord_2(k)
    assert isinstance(j, int)
    return 4 * k - 3 - 2 * j


def _bernoulli_condition_factor(k: int) -> Fraction:
    # (B_{2k} + B_k)/(B_{2k} B_k) for odd k, (B_{2k} - B_k)/(B_{2k} B_k) for even k
    b_k = bernoulli_top(k)
    b_2k = bernoulli_top(2 * k)
    return 1 / b_k + 1 / b_2k if k % 2 else 1 / b_k - 1 / b_2k


def yang_condition(inv: ManifoldInvariants) -> tuple[bool, dict[str, object]]:
    """Yang's Bernoulli-number admissibility condition, with audit trail.

    Odd k: the value ((B_{2k}+B_k)/(B_{2k}B_k)) * sigma / 2^(4k-2) must have
    2-adic valuation >= 1.  Even k: tau_in_image must hold and the value
    ((B_{2k}-B_k)/(B_{2k}B_k)) * 4k sigma / 2^(4k) must have 2-adic
    valuation >= 1.  Zero passes either way.
    """
    problems = validate_invariants(inv)
    if problems:
        raise ValueError("; ".join(problems))
    k = inv.k
    factor = _bernoulli_condition_factor(k)
    if k % 2:
        value = factor * Fraction(inv.sigma, 2 ** (4 * k - 2))
    else:
        value = factor * Fraction(4 * k * inv.sigma, 2 ** (4 * k))
    parity_ok = ord_2(value) >= 1
    verdict = parity_ok if k % 2 else (inv.tau_in_image and parity_ok)
    audit: dict[str, object] = {
        "bernoulli_factor": factor,
        "bernoulli_factor_ord_2": ord_2(factor),
        "condition_value": value,
        "condition_value_ord_2": ord_2(value),
        "condition_value_is_integer": value.denominator == 1,
        "parity_ok": parity_ok,
        "tau_in_image": inv.tau_in_image,
    }
    return verdict, audit


def yang_plus_condition(inv: ManifoldInvariants) -> bool:
    """The simplified admissibility condition (no Bernoulli numbers).

    True iff k >= 3 is odd, or k = 1 and sigma is even, or k is even and
    tau_in_image holds.
    """
    problems = validate_invariants(inv)
    if problems:
        raise ValueError("; ".join(problems))
    if inv.k % 2 == 0:
        return inv.tau_in_image
    if inv.k == 1:
        return inv.sigma % 2 == 0
    return True


@dataclass(frozen=True)
class NumeratorIdentityReport:
    """Both sides of D_k N_{2k} + D_{2k} N_k = 2(D'_k N_{2k} + D'_{2k} N_k)."""

    k: int
    lhs: int
    rhs: int
    ord_2: Valuation
    holds: bool


def yang_numerator_identity(k: int) -> NumeratorIdentityReport:
    """For odd k: verify the factor-of-two split of D_k N_{2k} + D_{2k} N_k.

    The quantity is the unreduced numerator of (B_{2k}+B_k)/(B_{2k}B_k);
    both sides are computed independently and must agree, and the report
    checks it is divisible by 4 (2-adic valuation >= 2).
    """
    if k < 1 or k % 2 == 0:
        raise ValueError(f"k must be odd and >= 1, got {k}")
    p_k = num_den_parts(k)
    p_2k = num_den_parts(2 * k)
    lhs = p_k.denominator * p_2k.numerator + p_2k.denominator * p_k.numerator
    rhs = 2 * (p_k.odd_part * p_2k.numerator + p_2k.odd_part * p_k.numerator)
    if lhs != rhs:
        raise InternalCheckError(f"numerator identity sides differ at k={k}: {lhs} vs {rhs}")
    v = ord_2(lhs)
    return NumeratorIdentityReport(k=k, lhs=lhs, rhs=rhs, ord_2=v, holds=v >= 2)


@dataclass(frozen=True)
class AdmissibilityReport:
    """Verdicts of both conditions plus the consistency audit trail."""

    yang_verdict: bool
    yang_plus_verdict: bool
    consistent: bool
    audit: dict[str, object]


def decide_admissibility(inv: ManifoldInvariants) -> AdmissibilityReport:
    """Run both admissibility conditions and flag any disagreement.

    Preconditions: the invariants validate, and for k >= 3 the signature
    carries the forced 2-power (ord_2(sigma) >= 4k-3-2j); otherwise
    ValueError names the violated divisibility.  Under these preconditions
    an inconsistent pair of verdicts would be a falsification event: it is
    reported via consistent=False rather than raised.
    """
    problems = validate_invariants(inv)
    if problems:
        raise ValueError("; ".join(problems))
    sigma_ord = ord_2(inv.sigma)
    forced: int | None = None
    if inv.k >= 3:
        forced = forced_sigma_valuation(inv.k)
        if not sigma_ord >= forced:
            raise ValueError(
                f"2^{forced} must divide sigma for k={inv.k}; "
                f"ord_2(sigma) is {sigma_ord}"
            )
    yang, audit = yang_condition(inv)
    yang_plus = yang_plus_condition(inv)
    genus = ahat(inv.k, inv.sigma, inv.tau_sq)
    audit = dict(audit)
    audit.update(
        {
            "sigma_ord_2": sigma_ord,
            "forced_sigma_valuation": forced,
            "ahat": genus.value,
            "ahat_is_integer": genus.is_integer,
        }
    )
    return AdmissibilityReport(
        yang_verdict=yang,
        yang_plus_verdict=yang_plus,
        consistent=yang == yang_plus,
        audit=audit,
    )


# Deterministic sample grids for the equivalence audit.  tau_sq samples are
# keyed by what validation demands in each slot.
_TAU_UNCONSTRAINED = (0, 1, 2, -3)
_TAU_EVEN = (0, 2, -2, 6)
_TAU_MULT_8 = (0, 8, -8, 24)
_ODD_SCALES = (1, 3, 5, 7)


def _sigma_samples(k: int) -> list[int]:
    if k == 1:
        v = 1
    elif k == 2:
        # no forced divisibility: exercise zero, odd and even signatures
        return [0, 1, -1, 2, -2, 3, -3, 8, -8]
    else:
        v = forced_sigma_valuation(k)
    return [sign * 2**v * s for s in _ODD_SCALES for sign in (1, -1)]


def _tau_samples(k: int, tau_in_image: bool) -> tuple[int, ...]:
    if k % 2 == 0 and tau_in_image:
        return _TAU_MULT_8
    if k > 2:
        return _TAU_EVEN
    return _TAU_UNCONSTRAINED


def equivalence_audit_cases(k_max: int) -> Iterator[ManifoldInvariants]:
    """Deterministic grid of valid invariants for auditing both conditions.

    For each k <= k_max: signatures +-2^v * odd with v the forced valuation
    (v = 1 for k = 1; a free sample for k = 2), both tau_in_image settings
    validation permits, and tau_sq samples satisfying the constraints.
    """
    if k_max < 1:
        raise ValueError("k_max must be >= 1")
    for k in range(1, k_max + 1):
        flags = (True,) if k % 2 else (True, False)
        for sigma in _sigma_samples(k):
            for flag in flags:
                for tau_sq in _tau_samples(k, flag):
                    inv = ManifoldInvariants(
                        k=k, sigma=sigma, tau_sq=tau_sq, tau_in_image=flag
                    )
                    if validate_invariants(inv):
                        raise InternalCheckError(f"audit grid produced invalid case {inv}")
                    yield inv
