"""Point classification, unipotent dimensions by both routes, profiles."""

import random
from fractions import Fraction

import pytest

from picalb import (
    InsufficientTruncationError,
    Jet,
    NotMonomialUnibranchError,
    NumericalSemigroup,
    SingularPointData,
    UnstableTruncationError,
    classify_point,
    monomial_point,
    unipotent_dim_jets,
    unipotent_dim_semigroup,
    valuation_profile,
)
from picalb.oracle import run_equivalence_trials, sample_exponents


def unibranch(label, *jets):
    return SingularPointData(label, (tuple(jets),))


def multibranch(label, *branches):
    return SingularPointData(label, tuple(tuple(b) for b in branches))


def node(order=8):
    return multibranch(
        "node",
        (Jet.monomial(1, order), Jet.zero(order)),
        (Jet.zero(order), Jet.monomial(1, order)),
    )


class TestClassify:
    def test_smooth(self):
        p = unibranch("p", Jet.monomial(1, 4), Jet.monomial(2, 4))
        assert str(classify_point(p)) == "smooth"

    def test_node_is_ordinary(self):
        assert str(classify_point(node())) == "ordinary-2"

    @pytest.mark.parametrize("alpha", [1, 2, 3])
    def test_cusp_is_general(self, alpha):
        p = monomial_point("p", (2, 2 * alpha + 1), 2 * alpha + 4)
        cls = classify_point(p)
        assert cls.is_general and cls.branches == 1

    def test_three_coordinate_axes_are_ordinary(self):
        jets = [Jet.monomial(1, 6), Jet.zero(6)]
        axes = multibranch(
            "axes",
            (jets[0], jets[1], jets[1]),
            (jets[1], jets[0], jets[1]),
            (jets[1], jets[1], jets[0]),
        )
        assert str(classify_point(axes)) == "ordinary-3"
        assert unipotent_dim_jets(axes, 4) == 0

    def test_three_concurrent_coplanar_lines_are_not_ordinary(self):
        # Tangents (1,0), (0,1), (1,1) are pairwise independent but span
        # only a plane; the germ is not a transversal axes crossing and
        # its quotient is one-dimensional.
        one, zero = Jet.monomial(1, 8), Jet.zero(8)
        lines = multibranch("triple", (one, zero), (zero, one), (one, one))
        cls = classify_point(lines)
        assert cls.is_general and cls.branches == 3
        assert unipotent_dim_jets(lines, 5) == 1

    def test_transversal_parabola_and_line_is_ordinary(self):
        p = multibranch(
            "pl",
            (Jet.monomial(1, 8), Jet.monomial(2, 8)),
            (Jet.zero(8), Jet.monomial(1, 8)),
        )
        assert str(classify_point(p)) == "ordinary-2"
        assert unipotent_dim_jets(p, 5) == 0

    def test_insufficient_truncation(self):
        p = unibranch("p", Jet.zero(1), Jet.zero(1))
        with pytest.raises(ValueError):
            # all-zero branch is rejected before classification
            classify_point(p)
        q = SingularPointData("q", ((Jet.from_coeffs([0]),),))
        with pytest.raises(InsufficientTruncationError):
            classify_point(q)


class TestJetsDim:
    def test_ordinary_cusp(self):
        assert unipotent_dim_jets(monomial_point("p", (2, 3), 10), 8) == 1

    def test_higher_cusp(self):
        assert unipotent_dim_jets(monomial_point("p", (3, 5), 14), 12) == 4

    def test_node_contributes_nothing(self):
        assert unipotent_dim_jets(node(), 6) == 0

    def test_three_coordinates(self):
        # gaps of the semigroup generated by 4, 5, 6 are {1, 2, 3, 7}
        assert unipotent_dim_jets(monomial_point("p", (4, 5, 6), 18), 16) == 4

    def test_default_truncation(self):
        assert unipotent_dim_jets(monomial_point("p", (3, 5), 20)) == 4

    def test_unstable_truncation_detected(self):
        # (t^2, t^4) is not birational onto its image: the quotient keeps
        # growing with the truncation and stability must fail.
        p = monomial_point("p", (2, 4), 12)
        with pytest.raises(UnstableTruncationError):
            unipotent_dim_jets(p, 8)

    def test_insufficient_data_for_ladder(self):
        p = monomial_point("p", (2, 3), 6)
        with pytest.raises(InsufficientTruncationError):
            unipotent_dim_jets(p, 6)


class TestSemigroupDim:
    def test_origin_family_point(self):
        assert unipotent_dim_semigroup(monomial_point("p", (2, 9), 12)) == 4

    def test_infinity_family_point(self):
        assert unipotent_dim_semigroup(monomial_point("p", (5, 7), 26)) == 12

    def test_smooth_point(self):
        assert unipotent_dim_semigroup(monomial_point("p", (1, 7), 10)) == 0

    def test_requires_monomial_unibranch(self):
        with pytest.raises(NotMonomialUnibranchError):
            unipotent_dim_semigroup(node())
        mixed = unibranch("p", Jet.monomial(2, 8) + Jet.monomial(3, 8), Jet.monomial(3, 8))
        with pytest.raises(NotMonomialUnibranchError):
            unipotent_dim_semigroup(mixed)


class TestOracleEquivalence:
    def test_seeded_equivalence_trials(self):
        result = run_equivalence_trials(25, seed=1105)
        assert result["all_agree"]
        for case in result["cases"]:
            assert case["jets"] == case["semigroup"] == case["gap_count"]

    def test_sampled_exponents_are_coprime_and_bounded(self):
        rng = random.Random(3)
        for _ in range(50):
            exps = sample_exponents(rng)
            assert all(1 <= e <= 12 for e in exps)
            assert NumericalSemigroup(exps).generator_gcd() == 1


def random_invertible_2x2(rng):
    while True:
        entries = [Fraction(rng.randint(-4, 4), rng.randint(1, 3)) for _ in range(4)]
        if entries[0] * entries[3] - entries[1] * entries[2] != 0:
            return entries


class TestCoordinateChangeInvariance:
    def test_linear_changes_preserve_dimension(self):
        rng = random.Random(20260810)
        x = Jet.monomial(2, 8)
        y = Jet.monomial(3, 8)
        for _ in range(25):
            a, b, c, d = random_invertible_2x2(rng)
            p = unibranch("p", x.scale(a) + y.scale(b), x.scale(c) + y.scale(d))
            assert unipotent_dim_jets(p, 6) == 1


class TestValuationProfile:
    def test_cusp_profile(self):
        profile = valuation_profile(monomial_point("p", (2, 5), 16))
        assert profile.as_dict() == {1: 1, 3: 1}
        assert not profile.extrapolated

    def test_smooth_profile_is_empty(self):
        profile = valuation_profile(unibranch("p", Jet.monomial(1, 6), Jet.monomial(4, 6)))
        assert profile.orders == ()

    def test_three_four_profile(self):
        profile = valuation_profile(monomial_point("p", (3, 4), 20))
        assert profile.as_dict() == {1: 1, 2: 1, 5: 1}

    def test_total_equals_unipotent_dim(self):
        for exps in [(2, 3), (3, 5), (4, 5, 6), (2, 9)]:
            sg = NumericalSemigroup(exps)
            point = monomial_point("p", exps, 2 * sg.conductor() + 4)
            assert valuation_profile(point).total == unipotent_dim_jets(point)

    def test_filtration_path_is_flagged_and_consistent(self):
        tacnode = multibranch(
            "tac",
            (Jet.monomial(1, 10), Jet.monomial(2, 10)),
            (Jet.monomial(1, 10), Jet.monomial(2, 10, -1)),
        )
        profile = valuation_profile(tacnode, 6)
        assert profile.extrapolated
        assert profile.total == unipotent_dim_jets(tacnode, 6) == 1
        assert profile.as_dict() == {1: 1}

    def test_nonmonomial_unibranch_matches_value_semigroup(self):
        # Subalgebra generated by (t^2 + t^3, t^3): same value semigroup
        # as generated by 2 and 3 since t^3 is recoverable.
        p = unibranch("p", Jet.monomial(2, 10) + Jet.monomial(3, 10), Jet.monomial(3, 10))
        profile = valuation_profile(p, 6)
        assert profile.extrapolated
        assert profile.as_dict() == {1: 1}


class TestValidation:
    def test_branch_must_vanish_at_point(self):
        with pytest.raises(ValueError):
            unibranch("p", Jet.from_coeffs([1, 1], order=4))

    def test_zero_branch_rejected(self):
        with pytest.raises(ValueError):
            unibranch("p", Jet.zero(4), Jet.zero(4))

    def test_mixed_orders_rejected(self):
        with pytest.raises(ValueError):
            unibranch("p", Jet.monomial(1, 4), Jet.monomial(2, 6))
