"""2-adic valuation checks on finite differences of Bernoulli numbers.

Three families of checks, all exact:

* Carlitz congruences: lower bounds on ord_2 of iterated finite differences
  sum_{s=0}^r (-1)^s C(r,s) b_{n+sw} with even indices and even increment.
* Reciprocal differences: ord_2(1/b_n - 1/b_m) = 2 + ord_2(b_n - b_m),
  bounded below by min(n, 2 + ord_2(m - n)).
* Index-doubling divisibility: for even k with j = ord_2(k), the value
  (B_{2k} - B_k)/(B_{2k} B_k) has 2-adic valuation at least j + 3.

Every check returns a CongruenceReport carrying the exact witness value, so
a failure is reproducible from the report alone.  Identities that hold for
every legal input (route agreement, denominator parity facts) are asserted
and raise InternalCheckError when violated; the reported pass/fail verdict
is always the valuation bound itself.

All functions are pure; reports are immutable.
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction

from .bernoulli import bernoulli_nt, bernoulli_top
from .exact_arith import (
    INFINITY,
    InternalCheckError,
    Valuation,
    binomial,
    ord_2,
)

__all__ = [
    "CarlitzParams",
    "CongruenceReport",
    "carlitz_lambda",
    "finite_difference",
    "carlitz_bound",
    "check_carlitz",
    "check_reciprocal_difference",
    "check_doubling_divisibility",
]


@dataclass(frozen=True)
class CarlitzParams:
    """Difference parameters: start index n, increment w (both even >= 2), order r >= 1."""

    n: int
    w: int
    r: int

    def __post_init__(self) -> None:
        if self.n < 2 or self.n % 2 == 1:
            raise ValueError(f"n must be even and >= 2, got {self.n}")
        if self.w < 2 or self.w % 2 == 1:
            raise ValueError(f"w must be even and >= 2, got {self.w}")
        if self.r < 1:
            raise ValueError(f"r must be >= 1, got {self.r}")


@dataclass(frozen=True)
class CongruenceReport:
    """One checked congruence instance with its exact witness.

    holds is exactly (observed_ord >= bound); INFINITY >= bound is true.
    """

    instance: str
    observed_ord: Valuation
    bound: int
    holds: bool
    witness: Fraction


def carlitz_lambda(r: int) -> int:
    """The correction term lambda = min(r-1, r-l+2) with l = floor(log2 r).

    An equivalent published form uses r' with 2^r' <= 2r < 2^(r'+1), giving
    min(r-1, r-r'+3).  Since r' = l + 1 the two coincide; both are computed
    and compared on every call rather than trusting the identity silently.
    """
    if r < 1:
        raise ValueError(f"r must be >= 1, got {r}")
    l = r.bit_length() - 1
    lam = min(r - 1, r - l + 2)
    r_prime = (2 * r).bit_length() - 1
    alt = min(r - 1, r - r_prime + 3)
    if alt != lam:
        raise InternalCheckError(
            f"lambda formulas disagree at r={r}: {lam} vs {alt}"
        )
    return lam


def finite_difference(params: CarlitzParams) -> Fraction:
    """sum_{s=0}^r (-1)^s C(r,s) b_{n+sw}, exactly."""
    n, w, r = params.n, params.w, params.r
    total = Fraction(0)
    for s in range(r + 1):
        term = binomial(r, s) * bernoulli_nt(n + s * w)
        total = total - term if s % 2 else total + term
    return total


def carlitz_bound(params: CarlitzParams) -> int:
    """Lower bound min(n-2, r*e + lambda - 1) with e = 1 + ord_2(w)."""
    e = 1 + ord_2(params.w)
    assert isinstance(e, int)
    return min(params.n - 2, params.r * e + carlitz_lambda(params.r) - 1)


def check_carlitz(params: CarlitzParams) -> CongruenceReport:
    """Check the Carlitz bound on one difference instance.

    The doubled phrasing -- ord_2 of twice the sum is at least
    min(n-1, r*e + lambda) -- is verified alongside; the two are equivalent
    shifts of each other, and both must hold for the report to pass.
    """
    diff = finite_difference(params)
    observed = ord_2(diff)
    bound = carlitz_bound(params)
    e = 1 + ord_2(params.w)
    assert isinstance(e, int)
    doubled_bound = min(params.n - 1, params.r * e + carlitz_lambda(params.r))
    holds = (observed >= bound) and (ord_2(2 * diff) >= doubled_bound)
    return CongruenceReport(
        instance=f"carlitz(n={params.n}, w={params.w}, r={params.r})",
        observed_ord=observed,
        bound=bound,
        holds=holds,
        witness=diff,
    )


def check_reciprocal_difference(n: int, m: int) -> CongruenceReport:
    """Check ord_2(1/b_n - 1/b_m) for even m > n >= 2.

    Asserted identities (InternalCheckError on violation):
      * ord_2(1/b_n - 1/b_m) = 2 + ord_2(b_n - b_m), infinite on both sides
        when b_n = b_m;
      * the denominator of b_n * b_m in lowest terms has 2-adic valuation
        exactly 2.
    Reported check: the shared valuation is >= min(n, 2 + ord_2(m - n)),
    where ord_2(m - n) is taken on the integer m - n directly.
    """
    if n < 2 or n % 2 == 1 or m % 2 == 1 or m <= n:
        raise ValueError(f"need even m > n >= 2, got n={n}, m={m}")
    b_n = bernoulli_nt(n)
    b_m = bernoulli_nt(m)
    recip_diff = 1 / b_n - 1 / b_m
    plain_diff = b_n - b_m
    observed = ord_2(recip_diff)
    shifted = 2 + ord_2(plain_diff)
    if observed != shifted:
        raise InternalCheckError(
            f"reciprocal route {observed} != shifted route {shifted} at n={n}, m={m}"
        )
    product_den_ord = ord_2((b_n * b_m).denominator)
    if product_den_ord != 2:
        raise InternalCheckError(
            f"Denom(b_{n} * b_{m}) has ord_2 {product_den_ord}, expected 2"
        )
    bound = min(n, 2 + ord_2(m - n))
    assert isinstance(bound, int)
    return CongruenceReport(
        instance=f"reciprocal-difference(n={n}, m={m})",
        observed_ord=observed,
        bound=bound,
        holds=observed >= bound,
        witness=recip_diff,
    )


def check_doubling_divisibility(k: int) -> CongruenceReport:
    """Check 2^(j+3) | (B_{2k} - B_k)/(B_{2k} B_k) for even k, j = ord_2(k).

    The valuation is computed two ways and asserted equal:
      (a) directly on the lowest-terms value, whose denominator divides the
          odd number N_k * N_{2k} (oddness asserted);
      (b) as 2 + ord_2(b_{2k} - b_{4k}) after asserting that b_{2k} and
          b_{4k} have the same sign, which makes the two differences carry
          identical valuations.
    A strict excess over j + 3 still passes; the bound is a lower bound.
    """
    if k < 2 or k % 2 == 1:
        raise ValueError(f"k must be even and >= 2, got {k}")
    j = ord_2(k)
    assert isinstance(j, int)
    b_k = bernoulli_top(k)
    b_2k = bernoulli_top(2 * k)
    value = 1 / b_k - 1 / b_2k  # == (B_{2k} - B_k) / (B_{2k} B_k)
    if value.denominator % 2 == 0:
        raise InternalCheckError(
            f"lowest-terms denominator even at k={k}: {value.denominator}"
        )
    via_numerator = ord_2(value.numerator) if value else INFINITY
    nt_2k = bernoulli_nt(2 * k)
    nt_4k = bernoulli_nt(4 * k)
    if (nt_2k > 0) != (nt_4k > 0) or nt_2k == 0 or nt_4k == 0:
        raise InternalCheckError(
            f"b_{2 * k} and b_{4 * k} do not share a sign: {nt_2k}, {nt_4k}"
        )
    via_signed = 2 + ord_2(nt_2k - nt_4k)
    if via_numerator != via_signed:
        raise InternalCheckError(
            f"valuation routes disagree at k={k}: {via_numerator} vs {via_signed}"
        )
    bound = j + 3
    return CongruenceReport(
        instance=f"doubling-divisibility(k={k})",
        observed_ord=via_numerator,
        bound=bound,
        holds=via_numerator >= bound,
        witness=value,
    )
