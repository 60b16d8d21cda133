"""Bernoulli numbers, exactly, in both standard indexing conventions.

Number-theoretic convention: ``b_n`` defined by the generating function
t/(e^t - 1) = sum b_n t^n / n!.  So b_0 = 1, b_1 = -1/2, b_n = 0 for odd
n > 1, and the even-indexed values alternate in sign with b_2 = 1/6.

Topologist convention: ``B_k = (-1)^(k+1) * b_{2k}``, positive for every
k >= 1 (B_1 = 1/6, B_2 = 1/30, B_3 = 1/42, ...).

Two independent algorithms are provided so each can audit the other:

* primary: the tangent-number scheme.  Tangent numbers T_m (coefficients
  of tan x) are built by an all-integer triangle, and
  b_{2m} = (-1)^(m-1) * T_m * 2m / (4^m (4^m - 1)) is a single final
  division.  No rational arithmetic happens until that division.
* oracle: the Akiyama-Tanigawa transform, run entirely over rationals.
  It natively produces the convention with +1/2 at index 1, so the odd
  indices are sign-flipped: b_n = (-1)^n * (transform value).

Computed values are memoized in a module cache guarded by a lock; the
cache only ever stores values the primary algorithm would recompute
identically, so results do not depend on cache state.
"""

from __future__ import annotations

import threading
from dataclasses import dataclass
from fractions import Fraction
from math import isqrt

from .exact_arith import InternalCheckError, is_prime

__all__ = [
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
]

_lock = threading.Lock()
_tangent_table: list[int] = [0, 1]  # index m holds T_m; slot 0 unused
_nt_cache: dict[int, Fraction] = {}


def _tangent_triangle(size: int) -> list[int]:
    # Knuth-Buckholtz triangle: stays in integers throughout
    t = [0] * (size + 1)
    t[1] = 1
    for k in range(2, size + 1):
        t[k] = (k - 1) * t[k - 1]
    for k in range(2, size + 1):
        for j in range(k, size + 1):
            t[j] = (j - k) * t[j - 1] + (j - k + 2) * t[j]
    return t


def _tangent_cached(m: int) -> int:
    with _lock:
        have = len(_tangent_table) - 1
        if m > have:
            # grow geometrically so ascending sweeps cost O(final size^2)
            _tangent_table[:] = _tangent_triangle(max(m, 2 * have))
        return _tangent_table[m]


def tangent_numbers(count: int) -> list[int]:
    """First `count` tangent numbers [T_1, ..., T_count] (1, 2, 16, 272, ...)."""
    if count < 0:
        raise ValueError("count must be >= 0")
    if count == 0:
        return []
    _tangent_cached(count)
    with _lock:
        return _tangent_table[1 : count + 1]


def _nt_even_from_tangent(n: int, t_m: int) -> Fraction:
    m = n // 2
    pow4 = 4**m
    return Fraction((-1) ** (m - 1) * t_m * n, pow4 * (pow4 - 1))


def bernoulli_nt(n: int, *, use_cache: bool = True) -> Fraction:
    """Bernoulli number b_n, number-theoretic convention (b_1 = -1/2).

    With use_cache=False the tangent triangle is rebuilt from scratch at
    exactly the needed size, bypassing the module cache entirely.
    """
    if n < 0:
        raise ValueError("n must be >= 0")
    if n == 0:
        return Fraction(1)
    if n == 1:
        return Fraction(-1, 2)
    if n % 2 == 1:
        return Fraction(0)
    if not use_cache:
        return _nt_even_from_tangent(n, _tangent_triangle(n // 2)[n // 2])
    with _lock:
        hit = _nt_cache.get(n)
    if hit is not None:
        return hit
    value = _nt_even_from_tangent(n, _tangent_cached(n // 2))
    with _lock:
        _nt_cache[n] = value
    return value


def akiyama_tanigawa(n_max: int) -> list[Fraction]:
    """[b_0, ..., b_n_max] by the Akiyama-Tanigawa transform (oracle route).

    O(n_max^2) rational operations; independent of the tangent scheme.
    """
    if n_max < 0:
        raise ValueError("n_max must be >= 0")
    row = [Fraction(0)] * (n_max + 1)
    out: list[Fraction] = []
    for m in range(n_max + 1):
        row[m] = Fraction(1, m + 1)
        for j in range(m, 0, -1):
            row[j - 1] = j * (row[j - 1] - row[j])
        # the transform yields the +1/2-at-index-1 convention
        out.append(row[0] if m % 2 == 0 else -row[0])
    return out


def bernoulli_nt_oracle(n: int) -> Fraction:
    """b_n by the oracle route alone (uncached, recomputed every call)."""
    if n < 0:
        raise ValueError("n must be >= 0")
    return akiyama_tanigawa(n)[n]


def index_bridge(k: int) -> tuple[int, int]:
    """Map a topologist index k >= 1 to (2k, sign) with B_k = sign * b_{2k}."""
    if k < 1:
        raise ValueError("k must be >= 1")
    return 2 * k, (-1) ** (k + 1)


def bernoulli_top(k: int) -> Fraction:
    """Bernoulli number B_k, topologist convention: positive for all k >= 1."""
    n, sign = index_bridge(k)
    value = sign * bernoulli_nt(n)
    if value <= 0:
        raise InternalCheckError(f"B_{k} computed non-positive: {value}")
    return value


def vsc_denominator(n: int) -> int:
    """Denominator of b_n for even n >= 2: the product of primes p with p-1 | n.

    Computed by enumerating the divisors d of n and keeping d + 1 when it is
    prime, independently of any Bernoulli computation (von Staudt-Clausen).
    """
    if n < 2 or n % 2 == 1:
        raise ValueError("defined for even n >= 2 only")
    divisors = set()
    for d in range(1, isqrt(n) + 1):
        if n % d == 0:
            divisors.add(d)
            divisors.add(n // d)
    prod = 1
    for d in sorted(divisors):
        if is_prime(d + 1):
            prod *= d + 1
    return prod


@dataclass(frozen=True)
class NumDenParts:
    """B_k = numerator/denominator in lowest terms; odd_part = denominator // 2.

    For every k the numerator is odd and the denominator is exactly twice an
    odd number, so odd_part is odd; construction verifies this.
    """

    numerator: int
    denominator: int
    odd_part: int


def num_den_parts(k: int) -> NumDenParts:
    """Decompose B_k (topologist convention); k >= 1.

    Raises InternalCheckError if the parity facts fail: that would mean the
    Bernoulli computation itself is wrong, not the input.
    """
    b = bernoulli_top(k)
    num, den = b.numerator, b.denominator
    if num % 2 == 0:
        raise InternalCheckError(f"numerator of B_{k} is even: {num}")
    if den % 2 != 0 or (den // 2) % 2 == 0:
        raise InternalCheckError(f"denominator of B_{k} is not 2*(odd): {den}")
    return NumDenParts(numerator=num, denominator=den, odd_part=den // 2)


@dataclass(frozen=True)
class SelfCheckReport:
    """Outcome of cross-checking the two algorithms plus the denominator law."""

    ok: bool
    checked: int
    detail: str | None = None


def self_check(n_max: int) -> SelfCheckReport:
    """Audit even n in [2, n_max]: primary == oracle and denominator law holds.

    Stops at the first discrepancy; `checked` counts indices fully verified.
    """
    if n_max < 0 or n_max % 2 == 1:
        raise ValueError("n_max must be even and >= 0")
    if n_max < 2:
        return SelfCheckReport(ok=True, checked=0)
    oracle = akiyama_tanigawa(n_max)
    checked = 0
    for n in range(2, n_max + 1, 2):
        primary = bernoulli_nt(n)
        if primary != oracle[n]:
            return SelfCheckReport(
                ok=False,
                checked=checked,
                detail=f"n={n}: tangent route {primary} != transform route {oracle[n]}",
            )
        expected_den = vsc_denominator(n)
        if primary.denominator != expected_den:
            return SelfCheckReport(
                ok=False,
                checked=checked,
                detail=f"n={n}: denominator {primary.denominator} != prime product {expected_den}",
            )
        checked += 1
    return SelfCheckReport(ok=True, checked=checked)


def clear_cache() -> None:
    """Drop all memoized state (tangent table and derived values)."""
    with _lock:
        _tangent_table[:] = [0, 1]
        _nt_cache.clear()
