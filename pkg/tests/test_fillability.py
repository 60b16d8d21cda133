from __future__ import annotations

from fractions import Fraction

import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from steinfill import (
    ManifoldInvariants,
    a_coeff,
    ahat,
    bernoulli_top,
    decide_admissibility,
    equivalence_audit_cases,
    forced_sigma_valuation,
    ord_2,
    validate_invariants,
    yang_condition,
    yang_numerator_identity,
    yang_plus_condition,
)


def wall_formula(k: int, sigma: int, tau_sq: int) -> Fraction:
    """Test-local transcription of the direct closed formula."""
    a = 2 if k % 2 else 1
    b_k = bernoulli_top(k)
    num = a**2 * 2 ** (4 * k - 4) * b_k**2 * (2 ** (2 * k) - 1) ** 2 * tau_sq - k**2 * sigma
    return num / (2 ** (4 * k + 1) * k**2 * (2 ** (4 * k - 1) - 1))


def ahat_degree8_oracle(sigma: int, tau_sq: int) -> Fraction:
    """k = 1 oracle via Pontryagin numbers: (7 p1^2 - 4 p2)/5760.

    For a 3-connected 8-manifold p1 = 2 * (tangential class), so the
    characteristic numbers satisfy p1^2 = 4 tau_sq and the signature
    formula 45 sigma = 7 p2 - p1^2 fixes p2.
    """
    p1_sq = 4 * tau_sq
    p2 = Fraction(45 * sigma + p1_sq, 7)
    return (7 * p1_sq - 4 * p2) / 5760


class TestValidateInvariants:
    def test_valid_odd_case(self):
        inv = ManifoldInvariants(k=3, sigma=2**9, tau_sq=2, tau_in_image=True)
        assert validate_invariants(inv) == []

    def test_even_k_needs_tau_sq_multiple_of_8(self):
        inv = ManifoldInvariants(k=4, sigma=0, tau_sq=4, tau_in_image=True)
        problems = validate_invariants(inv)
        assert len(problems) == 1 and "8 | tau_sq" in problems[0]

    def test_odd_k_forces_image_flag(self):
        inv = ManifoldInvariants(k=3, sigma=0, tau_sq=0, tau_in_image=False)
        problems = validate_invariants(inv)
        assert len(problems) == 1 and "tau_in_image" in problems[0]

    def test_large_k_needs_even_tau_sq(self):
        inv = ManifoldInvariants(k=5, sigma=0, tau_sq=3, tau_in_image=True)
        assert any("even tau_sq" in p for p in validate_invariants(inv))

    def test_nonpositive_k(self):
        inv = ManifoldInvariants(k=0, sigma=0, tau_sq=0, tau_in_image=True)
        assert validate_invariants(inv)


class TestACoeff:
    def test_parity_values(self):
        assert a_coeff(1) == 2
        assert a_coeff(2) == 1
        assert a_coeff(7) == 2

    def test_whole_range(self):
        for k in range(1, 101):
            assert a_coeff(k) == (2 if k % 2 else 1)

    def test_bad_index(self):
        with pytest.raises(ValueError):
            a_coeff(0)


class TestAhat:
    def test_degree8_vanishing(self):
        result = ahat(1, 1, 1)
        assert result.value == 0 and result.is_integer
        assert ahat_degree8_oracle(1, 1) == 0

    def test_degree8_negative_one(self):
        result = ahat(1, 225, 1)
        assert result.value == -1 and result.is_integer
        assert ahat_degree8_oracle(225, 1) == -1

    def test_zero_inputs(self):
        result = ahat(2, 0, 0)
        assert result.value == 0 and result.is_integer

    def test_degree8_oracle_grid(self):
        for sigma in (-3, 0, 1, 16, 224, 225):
            for tau_sq in (-2, 0, 1, 9):
                assert ahat(1, sigma, tau_sq).value == ahat_degree8_oracle(sigma, tau_sq)

    def test_k1_closed_form(self):
        for sigma, tau_sq in ((5, 7), (-3, 11), (0, 0)):
            assert ahat(1, sigma, tau_sq).value == Fraction(tau_sq - sigma, 224)

    @settings(max_examples=60, deadline=None)
    @given(st.integers(1, 32), st.integers(-(2**64), 2**64), st.integers(-(2**64), 2**64))
    def test_matches_direct_formula(self, k, sigma, tau_sq):
        assert ahat(k, sigma, tau_sq).value == wall_formula(k, sigma, tau_sq)

    def test_bad_index(self):
        with pytest.raises(ValueError):
            ahat(0, 1, 1)


class TestForcedSigmaValuation:
    def test_listed_values(self):
        assert forced_sigma_valuation(3) == 9
        assert forced_sigma_valuation(4) == 9

    def test_below_hypothesis_rejected(self):
        with pytest.raises(ValueError):
            forced_sigma_valuation(2)

    def test_formula(self):
        for k in range(3, 40):
            j = ord_2(k)
            assert forced_sigma_valuation(k) == 4 * k - 3 - 2 * j


class TestYangCondition:
    def test_k1_even_signature(self):
        inv = ManifoldInvariants(k=1, sigma=2, tau_sq=0, tau_in_image=True)
        verdict, audit = yang_condition(inv)
        assert verdict
        assert audit["condition_value"] == 18  # 9 * sigma

    def test_k1_odd_signature(self):
        inv = ManifoldInvariants(k=1, sigma=1, tau_sq=1, tau_in_image=True)
        verdict, audit = yang_condition(inv)
        assert not verdict
        assert audit["condition_value"] == 9

    def test_k2_difference_term_vanishes(self):
        inv = ManifoldInvariants(k=2, sigma=7, tau_sq=8, tau_in_image=True)
        verdict, audit = yang_condition(inv)
        assert verdict
        assert audit["bernoulli_factor"] == 0
        assert audit["condition_value"] == 0

    def test_invalid_invariants_rejected(self):
        inv = ManifoldInvariants(k=3, sigma=0, tau_sq=0, tau_in_image=False)
        with pytest.raises(ValueError):
            yang_condition(inv)


class TestYangPlusCondition:
    def test_clauses(self):
        assert yang_plus_condition(ManifoldInvariants(3, 2**9, 2, True))
        assert not yang_plus_condition(ManifoldInvariants(1, 1, 1, True))
        assert not yang_plus_condition(ManifoldInvariants(4, 2**9, 8, False))
        assert yang_plus_condition(ManifoldInvariants(4, 2**9, 8, True))
        assert yang_plus_condition(ManifoldInvariants(1, 2, 0, True))


class TestNumeratorIdentity:
    def test_k1(self):
        rep = yang_numerator_identity(1)
        assert rep.lhs == 36 == rep.rhs
        assert rep.lhs == 2 * (3 * 1 + 15 * 1)
        assert rep.ord_2 == 2 and rep.holds

    def test_k3(self):
        rep = yang_numerator_identity(3)
        assert rep.lhs == 42 * 691 + 2730 * 1 == 31752
        assert rep.rhs == 2 * (21 * 691 + 1365 * 1)
        assert rep.ord_2 == 3 and rep.holds

    def test_even_k_rejected(self):
        with pytest.raises(ValueError):
            yang_numerator_identity(2)

    def test_odd_range(self):
        for k in range(1, 100, 2):
            rep = yang_numerator_identity(k)
            assert rep.lhs == rep.rhs and rep.holds


class TestDecideAdmissibility:
    def test_k1_both_true(self):
        rep = decide_admissibility(ManifoldInvariants(1, 2, 0, True))
        assert rep.yang_verdict and rep.yang_plus_verdict and rep.consistent

    def test_k3_with_forced_signature(self):
        rep = decide_admissibility(ManifoldInvariants(3, 2**9, 2, True))
        assert rep.yang_verdict and rep.yang_plus_verdict and rep.consistent
        assert rep.audit["condition_value"] == Fraction(15876, 691)
        assert rep.audit["condition_value_ord_2"] == 2

    def test_k4_with_forced_signature(self):
        rep = decide_admissibility(ManifoldInvariants(4, 2**9, 8, True))
        assert rep.yang_verdict and rep.yang_plus_verdict and rep.consistent
        assert rep.audit["condition_value_ord_2"] == 2

    def test_missing_sigma_divisibility_rejected(self):
        with pytest.raises(ValueError, match="2\\^9"):
            decide_admissibility(ManifoldInvariants(3, 2**8, 2, True))

    def test_invalid_invariants_rejected(self):
        with pytest.raises(ValueError):
            decide_admissibility(ManifoldInvariants(4, 2**9, 4, True))

    def test_audit_carries_ahat(self):
        rep = decide_admissibility(ManifoldInvariants(1, 225, 1, True))
        assert rep.audit["ahat"] == -1
        assert rep.audit["ahat_is_integer"]
        assert rep.audit["forced_sigma_valuation"] is None
        assert rep.audit["sigma_ord_2"] == 0


@st.composite
def valid_decidable_invariants(draw):
    k = draw(st.integers(1, 10))
    sign = draw(st.sampled_from([1, -1]))
    odd = 2 * draw(st.integers(0, 300)) + 1
    if k == 1:
        sigma = sign * odd * 2 ** draw(st.integers(0, 5))
    elif k == 2:
        sigma = draw(st.integers(-200, 200))
    else:
        sigma = sign * odd * 2 ** (forced_sigma_valuation(k) + draw(st.integers(0, 3)))
    tau_in_image = True if k % 2 else draw(st.booleans())
    base = draw(st.integers(-40, 40))
    if k % 2 == 0 and tau_in_image:
        tau_sq = 8 * base
    elif k > 2:
        tau_sq = 2 * base
    else:
        tau_sq = base
    return ManifoldInvariants(k=k, sigma=sigma, tau_sq=tau_sq, tau_in_image=tau_in_image)


class TestEquivalence:
    def test_audit_grid_consistent(self):
        count = 0
        for inv in equivalence_audit_cases(12):
            rep = decide_admissibility(inv)
            assert rep.consistent, f"verdicts split at {inv}"
            count += 1
        assert count > 300

    @settings(max_examples=120, deadline=None)
    @given(valid_decidable_invariants())
    def test_random_valid_tuples_consistent(self, inv):
        assert not validate_invariants(inv)
        assert decide_admissibility(inv).consistent

    def test_non_integrality_below_forced_valuation(self):
        for k in range(3, 7):
            v = forced_sigma_valuation(k) - 1
            tau_choices = (0, 8, 24) if k % 2 == 0 else (0, 2, 6)
            for s in (1, 3):
                for tau_sq in tau_choices:
                    assert not ahat(k, 2**v * s, tau_sq).is_integer
