"""Jet arithmetic and exact span dimensions."""

from fractions import Fraction

import pytest
from hypothesis import assume, given, settings
from hypothesis import strategies as st

from picalb import BranchJetTuple, Jet, ShapeMismatchError, jet_mul, jet_valuation, span_dimension

rationals = st.fractions(min_value=-5, max_value=5, max_denominator=6)


@st.composite
def jets(draw, order=None, min_order=1, max_order=6):
    if order is None:
        order = draw(st.integers(min_value=min_order, max_value=max_order))
    coeffs = draw(st.lists(rationals, min_size=order, max_size=order))
    return Jet.from_coeffs(coeffs)


def t(exponent, order, coeff=1):
    return Jet.monomial(exponent, order, coeff)


class TestMul:
    def test_difference_of_squares(self):
        a = Jet.from_coeffs([1, 1], order=4)
        b = Jet.from_coeffs([1, -1], order=4)
        assert jet_mul(a, b) == Jet.from_coeffs([1, 0, -1], order=4)

    def test_monomial_product(self):
        assert jet_mul(t(2, 6), t(3, 6)) == t(5, 6)

    def test_truncation_absorbs_high_order(self):
        assert jet_mul(t(2, 4), t(3, 4)) == Jet.zero(4)

    def test_result_order_is_minimum(self):
        assert jet_mul(t(1, 4), t(1, 6)).truncation_order == 4
        assert (t(1, 7) + t(2, 5)).truncation_order == 5

    @given(a=jets(order=5), b=jets(order=5))
    def test_commutative(self, a, b):
        assert jet_mul(a, b) == jet_mul(b, a)

    @given(a=jets(order=4), b=jets(order=4), c=jets(order=4))
    def test_associative(self, a, b, c):
        assert jet_mul(jet_mul(a, b), c) == jet_mul(a, jet_mul(b, c))

    @given(a=jets(order=8), b=jets(order=8))
    def test_valuation_additive(self, a, b):
        va, vb = jet_valuation(a), jet_valuation(b)
        assume(va is not None and vb is not None and va + vb < 8)
        assert jet_valuation(jet_mul(a, b)) == va + vb


class TestValuation:
    def test_plain(self):
        jet = t(3, 6) + t(4, 6, 2)
        assert jet_valuation(jet) == 3

    def test_zero_jet_has_no_valuation(self):
        assert jet_valuation(Jet.zero(6)) is None

    def test_unit(self):
        assert jet_valuation(Jet.from_coeffs([7], order=3)) == 0


class TestCoefficients:
    def test_floats_rejected(self):
        with pytest.raises(TypeError):
            Jet.from_coeffs([0.5, 1])

    def test_string_rationals_accepted(self):
        assert Jet.from_coeffs(["1/2", 1]).coeffs[0] == Fraction(1, 2)

    def test_cannot_extend(self):
        with pytest.raises(ValueError):
            t(1, 4).truncate(6)


def pair(a, b):
    return BranchJetTuple.of(a, b)


class TestSpanDimension:
    def test_empty(self):
        assert span_dimension([]) == 0

    def test_dependent_third_vector(self):
        vs = [pair(t(1, 3), Jet.zero(3)), pair(Jet.zero(3), t(1, 3)), pair(t(1, 3), t(1, 3))]
        assert span_dimension(vs) == 2

    def test_distinct_monomials(self):
        assert span_dimension([t(2, 6), t(3, 6), t(5, 6)]) == 3

    def test_mixed_shapes_rejected(self):
        with pytest.raises(ShapeMismatchError):
            span_dimension([t(1, 3), t(1, 4)])
        with pytest.raises(ShapeMismatchError):
            span_dimension([pair(t(1, 3), t(1, 3)), BranchJetTuple.of(t(1, 3))])

    @given(st.lists(jets(order=5), min_size=1, max_size=6), st.randoms(use_true_random=False))
    def test_permutation_invariant(self, vectors, rng):
        shuffled = list(vectors)
        rng.shuffle(shuffled)
        assert span_dimension(vectors) == span_dimension(shuffled)

    @given(
        st.lists(jets(order=5), min_size=1, max_size=5),
        st.integers(min_value=0, max_value=4),
        st.fractions(min_value=Fraction(1, 6), max_value=5, max_denominator=6),
    )
    def test_scaling_invariant(self, vectors, index, factor):
        index = index % len(vectors)
        scaled = list(vectors)
        scaled[index] = scaled[index].scale(factor)
        assert span_dimension(vectors) == span_dimension(scaled)

    @given(st.lists(jets(order=5), min_size=0, max_size=8))
    def test_bounds(self, vectors):
        dim = span_dimension(vectors)
        assert dim <= len(vectors)
        assert dim <= 5  # branch count 1, order 5

    def test_rational_coefficients_exact(self):
        # Hilbert-style rows are dense in small denominators; the rank
        # must come out full despite heavy fraction arithmetic.
        rows = [
            Jet.from_coeffs([Fraction(1, i + j + 1) for j in range(6)])
            for i in range(6)
        ]
        assert span_dimension(rows) == 6
