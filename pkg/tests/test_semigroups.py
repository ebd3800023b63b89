"""Numerical semigroup combinatorics, checked against brute enumeration."""

from itertools import product
from math import gcd

import pytest
from hypothesis import given
from hypothesis import strategies as st

from picalb import NonCofiniteError, NumericalSemigroup


def brute_force_gaps(generators, bound):
    """Independent oracle: enumerate all coefficient vectors outright."""
    reachable = set()
    ranges = [range(bound // g + 1) for g in generators]
    for coeffs in product(*ranges):
        total = sum(c * g for c, g in zip(coeffs, generators))
        if total <= bound:
            reachable.add(total)
    return sorted(set(range(1, bound + 1)) - reachable)


class TestGaps:
    def test_two_seven(self):
        # alpha = 3 cusp at the origin: alpha gaps
        assert NumericalSemigroup([2, 7]).gaps() == [1, 3, 5]

    def test_three_five(self):
        # alpha = 2 cusp at infinity: 2*alpha*(alpha-1) = 4 gaps
        assert NumericalSemigroup([3, 5]).gaps() == [1, 2, 4, 7]

    def test_full_semigroup(self):
        assert NumericalSemigroup([1]).gaps() == []

    def test_three_four_vs_brute_force(self):
        expected = brute_force_gaps((3, 4), 12)
        assert expected == [1, 2, 5]  # frozen from the oracle
        assert NumericalSemigroup([3, 4]).gaps() == expected

    def test_three_generators_vs_brute_force(self):
        for gens in [(4, 5, 6), (3, 7, 11), (5, 7, 9), (6, 10, 15)]:
            bound = max(gens) * min(gens)
            assert NumericalSemigroup(gens).gaps() == brute_force_gaps(gens, bound)

    def test_non_cofinite_rejected(self):
        with pytest.raises(NonCofiniteError):
            NumericalSemigroup([4, 6]).gaps()

    def test_redundant_generators_tolerated(self):
        assert NumericalSemigroup([2, 4, 7]).gaps() == NumericalSemigroup([2, 7]).gaps()


class TestConductor:
    def test_examples(self):
        assert NumericalSemigroup([2, 7]).conductor() == 6  # largest gap 5
        assert NumericalSemigroup([1]).conductor() == 0
        assert NumericalSemigroup([3, 5]).conductor() == 8  # largest gap 7


class TestMembership:
    def test_examples(self):
        s = NumericalSemigroup([2, 7])
        assert not s.is_member(5)
        assert s.is_member(9)
        assert s.is_member(0)

    def test_zero_is_always_member(self):
        assert NumericalSemigroup([4, 6]).is_member(0)

    def test_works_without_cofiniteness(self):
        s = NumericalSemigroup([4, 6])
        assert s.is_member(10)
        assert not s.is_member(5)
        assert not s.is_member(2)

    def test_complementary_to_gaps(self):
        for gens in [(2, 7), (3, 5), (4, 5, 6), (1,), (5, 8)]:
            s = NumericalSemigroup(gens)
            gaps = set(s.gaps())
            for n in range(0, s.conductor() + min(gens) + 1):
                assert (n in gaps) == (n >= 1 and not s.is_member(n))


coprime_pairs = [(a, b) for a in range(2, 21) for b in range(a + 1, 21) if gcd(a, b) == 1]


@pytest.mark.parametrize("a,b", coprime_pairs)
def test_classical_gap_count(a, b):
    assert len(NumericalSemigroup([a, b]).gaps()) == (a - 1) * (b - 1) // 2


@given(
    gens=st.lists(st.integers(min_value=2, max_value=15), min_size=1, max_size=3),
    extra=st.integers(min_value=1, max_value=15),
)
def test_adding_a_generator_never_enlarges_gaps(gens, extra):
    gens = gens + [gens[-1] + 1]  # force gcd 1 via consecutive integers
    before = set(NumericalSemigroup(gens).gaps())
    after = set(NumericalSemigroup(gens + [extra]).gaps())
    assert after <= before


@pytest.mark.parametrize("alpha", range(1, 11))
def test_cusp_family_gap_counts(alpha):
    at_zero = NumericalSemigroup([2, 2 * alpha + 1])
    at_infinity = NumericalSemigroup([2 * alpha - 1, 2 * alpha + 1])
    assert len(at_zero.gaps()) == alpha
    assert len(at_infinity.gaps()) == 2 * alpha * (alpha - 1)


def test_invalid_generators():
    with pytest.raises(ValueError):
        NumericalSemigroup([])
    with pytest.raises(ValueError):
        NumericalSemigroup([0, 3])
    with pytest.raises(ValueError):
        NumericalSemigroup([-2, 3])
