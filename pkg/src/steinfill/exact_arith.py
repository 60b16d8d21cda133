"""Exact integer and rational arithmetic with p-adic valuations.

Integers are plain Python ints (arbitrary precision, never rounded).
Rationals are ``fractions.Fraction``: always in lowest terms, denominator
strictly positive, sign carried by the numerator.  The p-adic valuation of
zero is the distinguished ``INFINITY`` object rather than a sentinel
integer, so accidental arithmetic on it cannot masquerade as a finite
valuation.

Everything in this module is a pure function of its inputs; all values are
immutable and safe to share across threads.
"""

from __future__ import annotations

from fractions import Fraction
from math import comb, isqrt

__all__ = [
    "Rational",
    "Valuation",
    "INFINITY",
    "InternalCheckError",
    "rational_make",
    "numerator_of",
    "denominator_of",
    "is_prime",
    "ord_p",
    "ord_2",
    "binomial",
]

Rational = Fraction


class InternalCheckError(Exception):
    """A cross-checked identity failed.

    Raised when two routes that must agree (independent algorithms, or an
    identity that holds for every legal input) disagree.  This always
    indicates a bug in this package, never bad user input: usage errors
    raise ValueError instead.
    """


class _PlusInfinity:
    """Valuation of zero: compares greater than every int, absorbs addition.

    Singleton; use the module constant INFINITY.
    """

    __slots__ = ()

    def __repr__(self) -> str:
        return "+inf"

    def __eq__(self, other: object) -> bool:
        return isinstance(other, _PlusInfinity)

    def __hash__(self) -> int:
        return hash("steinfill.exact_arith.INFINITY")

    def __lt__(self, other: object):
        if isinstance(other, (int, _PlusInfinity)):
            return False
        return NotImplemented

    def __le__(self, other: object):
        if isinstance(other, _PlusInfinity):
            return True
        if isinstance(other, int):
            return False
        return NotImplemented

    def __gt__(self, other: object):
        if isinstance(other, _PlusInfinity):
            return False
        if isinstance(other, int):
            return True
        return NotImplemented

    def __ge__(self, other: object):
        if isinstance(other, (int, _PlusInfinity)):
            return True
        return NotImplemented

    def __add__(self, other: object):
        if isinstance(other, (int, _PlusInfinity)):
            return self
        return NotImplemented

    __radd__ = __add__


INFINITY = _PlusInfinity()

# A p-adic valuation: an int, or INFINITY for the valuation of zero.
Valuation = int | _PlusInfinity


def rational_make(num: int, den: int) -> Fraction:
    """Return num/den normalized: lowest terms, positive denominator.

    Raises ZeroDivisionError for den == 0 and TypeError for non-int
    arguments (floats would smuggle in rounding).
    """
    if not isinstance(num, int) or not isinstance(den, int):
        raise TypeError("rational_make takes exact ints")
    return Fraction(num, den)


def numerator_of(r: Fraction) -> int:
    """Numerator of r in lowest terms; carries the sign."""
    return r.numerator


def denominator_of(r: Fraction) -> int:
    """Denominator of r in lowest terms; always positive."""
    return r.denominator


def is_prime(n: int) -> bool:
    """Trial-division primality test.

    Meant for the small primes fed to ord_p; not a general-purpose test.
    """
    if n < 2:
        return False
    if n < 4:
        return True
    if n % 2 == 0:
        return False
    d = 3
    top = isqrt(n)
    while d <= top:
        if n % d == 0:
            return False
        d += 2
    return True


def _ord_int(p: int, n: int) -> Valuation:
    # exponent of p in n; caller guarantees p is prime
    if n == 0:
        return INFINITY
    if p == 2:
        # lowest set bit of |n|; works for negative n as well
        return (n & -n).bit_length() - 1
    k = 0
    n = abs(n)
    while True:
        q, r = divmod(n, p)
        if r:
            return k
        n = q
        k += 1


def ord_p(p: int, r: Fraction | int) -> Valuation:
    """p-adic valuation of a rational or integer; INFINITY for zero.

    p must be prime (checked by trial division).  For a fraction in lowest
    terms this is ord_p(numerator) - ord_p(denominator), so it is negative
    exactly when p divides the denominator.
    """
    if not is_prime(p):
        raise ValueError(f"ord_p needs a prime, got {p}")
    return ord_2(r) if p == 2 else _ord_general(p, r)


def _ord_general(p: int, r: Fraction | int) -> Valuation:
    if isinstance(r, int):
        return _ord_int(p, r)
    if r.numerator == 0:
        return INFINITY
    num = _ord_int(p, r.numerator)
    den = _ord_int(p, r.denominator)
    assert isinstance(num, int) and isinstance(den, int)
    return num - den


def ord_2(r: Fraction | int) -> Valuation:
    """2-adic valuation; same as ord_p(2, r) without the primality check."""
    if isinstance(r, int):
        return _ord_int(2, r)
    if r.numerator == 0:
        return INFINITY
    num = _ord_int(2, r.numerator)
    den = _ord_int(2, r.denominator)
    assert isinstance(num, int) and isinstance(den, int)
    return num - den


def binomial(n: int, s: int) -> int:
    """Exact binomial coefficient C(n, s).

    By convention returns 0 when s > n >= 0; negative arguments raise
    ValueError (from math.comb).
    """
    return comb(n, s)
