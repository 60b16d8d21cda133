from __future__ import annotations

from fractions import Fraction
from math import gcd

import pytest
from hypothesis import given
from hypothesis import strategies as st

from steinfill import (
    INFINITY,
    binomial,
    denominator_of,
    is_prime,
    numerator_of,
    ord_2,
    ord_p,
    rational_make,
)


def nonzero_rationals():
    return st.builds(
        Fraction,
        st.integers(-(10**9), 10**9).filter(bool),
        st.integers(1, 10**6),
    )


def trial_factorization(n: int) -> dict[int, int]:
    """Independent oracle: prime exponents by naive trial division."""
    assert n > 0
    out: dict[int, int] = {}
    d = 2
    while d * d <= n:
        while n % d == 0:
            out[d] = out.get(d, 0) + 1
            n //= d
        d += 1
    if n > 1:
        out[n] = out.get(n, 0) + 1
    return out


class TestRationalMake:
    def test_sign_and_gcd_normalization(self):
        r = rational_make(2, -4)
        assert (numerator_of(r), denominator_of(r)) == (-1, 2)

    def test_zero_is_zero_over_one(self):
        r = rational_make(0, 7)
        assert (numerator_of(r), denominator_of(r)) == (0, 1)

    def test_coprime_pair_is_untouched(self):
        # oracle check that 108000 and 3617 share no prime factor
        assert not set(trial_factorization(108000)) & set(trial_factorization(3617))
        r = rational_make(108510 - 510, 3617)
        assert (numerator_of(r), denominator_of(r)) == (108000, 3617)

    def test_zero_denominator_rejected(self):
        with pytest.raises(ZeroDivisionError):
            rational_make(1, 0)

    def test_floats_rejected(self):
        with pytest.raises(TypeError):
            rational_make(1.5, 2)

    @given(st.integers(-(10**12), 10**12), st.integers(-(10**12), 10**12).filter(bool))
    def test_always_lowest_terms_with_positive_denominator(self, num, den):
        r = rational_make(num, den)
        assert denominator_of(r) >= 1
        assert gcd(abs(numerator_of(r)), denominator_of(r)) == 1


class TestNumDenom:
    def test_sign_lives_in_numerator(self):
        r = rational_make(-3, 6)
        assert numerator_of(r) == -1
        assert denominator_of(r) == 2

    def test_known_values(self):
        assert numerator_of(Fraction(691, 2730)) == 691
        assert denominator_of(Fraction(3617, 510)) == 510


class TestOrdP:
    def test_two_divides_denominator_of_one_sixth(self):
        assert ord_2(Fraction(1, 6)) == -1

    def test_against_factorization_oracle(self):
        assert trial_factorization(108000).get(2) == 5
        assert ord_2(Fraction(108000, 3617)) == 5
        assert ord_p(2, Fraction(108000, 3617)) == 5

    def test_zero_has_infinite_valuation(self):
        assert ord_p(5, Fraction(0)) == INFINITY
        assert ord_2(0) == INFINITY

    def test_integer_arguments(self):
        assert ord_2(48) == 4
        assert ord_2(-48) == 4
        assert ord_p(3, 54) == 3

    @pytest.mark.parametrize("p", [0, 1, 4, 6, 9, -3])
    def test_non_prime_rejected(self, p):
        with pytest.raises(ValueError):
            ord_p(p, Fraction(1, 2))

    @given(
        st.sampled_from([2, 3, 5, 7]),
        nonzero_rationals(),
        nonzero_rationals(),
    )
    def test_additive_on_products(self, p, a, b):
        assert ord_p(p, a * b) == ord_p(p, a) + ord_p(p, b)

    @given(
        st.sampled_from([2, 3, 5, 7]),
        nonzero_rationals(),
        nonzero_rationals(),
    )
    def test_ultrametric_inequality(self, p, a, b):
        va, vb = ord_p(p, a), ord_p(p, b)
        low = min(va, vb)
        v = ord_p(p, a + b)
        assert v >= low
        if va != vb:
            assert v == low


class TestInfinity:
    def test_comparisons(self):
        assert INFINITY == INFINITY
        assert INFINITY != 5
        assert INFINITY >= 10**100
        assert INFINITY > -(10**100)
        assert not INFINITY < 3
        assert not INFINITY > INFINITY
        assert INFINITY <= INFINITY
        assert not 3 >= INFINITY
        assert 3 < INFINITY

    def test_addition_absorbs_integers(self):
        assert INFINITY + 7 == INFINITY
        assert 7 + INFINITY == INFINITY
        assert INFINITY + INFINITY == INFINITY

    def test_repr(self):
        assert repr(INFINITY) == "+inf"


class TestBinomial:
    def test_small_values(self):
        assert binomial(4, 2) == 6
        assert binomial(5, 0) == 1

    def test_matches_pascal_triangle(self):
        row = [1]
        for n in range(12):
            for s, expected in enumerate(row):
                assert binomial(n, s) == expected
            row = [1] + [row[i] + row[i + 1] for i in range(len(row) - 1)] + [1]
        assert binomial(10, 3) == 120

    def test_s_above_n_is_zero(self):
        assert binomial(3, 5) == 0

    def test_negative_arguments_rejected(self):
        with pytest.raises(ValueError):
            binomial(-1, 0)
        with pytest.raises(ValueError):
            binomial(3, -2)


class TestIsPrime:
    def test_small_classification(self):
        primes = {2, 3, 5, 7, 11, 13, 17, 19, 23, 29, 31, 37, 41, 43, 47}
        for n in range(-2, 50):
            assert is_prime(n) == (n in primes)

    def test_square_of_prime(self):
        assert not is_prime(3617**2)
        assert is_prime(3617)
