"""Albanese invariants of products of cuspidal curves, and Gysin thresholds.

A curve with vanishing abelian and toric parts has a vectorial Albanese
variety whose Lie algebra carries an explicit basis of pole symbols: one
symbol ``t^-nu`` at a point ``q`` per missing valuation ``nu`` there.
For a product of two such curves the basis consists of tensor pairs of
symbols where either slot may be the unit, excluding unit (x) unit, so
the dimensions multiply as ``(a+1)(b+1) - 1``.

The surjectivity of the Gysin map from a general ample section curve of
degree parameter ``N`` to the surface Albanese is controlled by two
exact rational thresholds:

* below ``N_low`` (strictly) the map cannot be surjective, by comparing
  the vectorial dimension of the section curve with the surface one;
* from ``N_suff`` (inclusive) on it is surjective, via the restriction
  injectivity criterion implemented in ``check_injectivity_criterion``.

For equal parameters the two integerized thresholds coincide, which
makes the condition necessary and sufficient; the older estimate of
Esnault-Srinivas-Viehweg (the ``esv_bound`` field) is strictly weaker
and is kept for comparison.

All thresholds stay exact rationals until report assembly, where the
strict-vs-nonstrict boundary rules are applied once.
"""

from __future__ import annotations

import math
from dataclasses import dataclass
from fractions import Fraction
from typing import Dict, Mapping, Optional, Tuple, Union

from picalb.errors import MissingCountError
from picalb.picard import gamma_cusp_exponents
from picalb.semigroups import NumericalSemigroup
from picalb.singularities import ValuationProfile


class _UnitSymbol:
    """The unit slot in a tensor symbol."""

    _instance = None

    def __new__(cls):
        if cls._instance is None:
            cls._instance = super().__new__(cls)
        return cls._instance

    def __repr__(self):
        return "1"


UNIT = _UnitSymbol()


@dataclass(frozen=True, order=True)
class PoleSymbol:
    """Basis representative ``t^-order`` at the named point."""

    point: str
    order: int

    def __post_init__(self):
        if self.order < 1:
            raise ValueError("pole orders are positive")

    def __repr__(self):
        return f"t[{self.point}]^-{self.order}"


@dataclass(frozen=True)
class ThetaBasis:
    """Representatives of a basis of the Lie algebra of divisor deformations.

    Curve case: ``PoleSymbol`` entries. Product case: pairs whose slots
    are symbols of the factors or ``UNIT``, never both unit.
    """

    symbols: tuple

    def __post_init__(self):
        if len(set(self.symbols)) != len(self.symbols):
            raise ValueError("duplicate basis symbols")
        for sym in self.symbols:
            if isinstance(sym, tuple) and sym == (UNIT, UNIT):
                raise ValueError("the unit (x) unit pair is not a basis symbol")

    def __len__(self):
        return len(self.symbols)

    def __iter__(self):
        return iter(self.symbols)


def curve_theta_basis(profiles: Mapping[str, ValuationProfile]) -> ThetaBasis:
    """One pole symbol per order per point, from unibranch profiles.

    Every graded dimension must be 1: a single representative ``t^-nu``
    spans each piece. (Profiles with larger graded pieces come from the
    extrapolated multibranch filtration and have no symbol basis here.)
    """
    symbols = []
    for point in sorted(profiles):
        profile = profiles[point]
        for nu, dim in profile.orders:
            if dim != 1:
                raise ValueError(
                    f"point {point!r}: graded dimension {dim} at order {nu}; symbols need dimension 1"
                )
            symbols.append(PoleSymbol(point, nu))
    return ThetaBasis(tuple(symbols))


def gamma_theta_basis(alpha: int) -> ThetaBasis:
    """Basis for the bicuspidal example curve: gaps at "0" and at "inf"."""
    exps_zero, exps_inf = gamma_cusp_exponents(alpha)
    profiles = {
        "0": ValuationProfile.from_dims({nu: 1 for nu in NumericalSemigroup(exps_zero).gaps()}),
        "inf": ValuationProfile.from_dims({nu: 1 for nu in NumericalSemigroup(exps_inf).gaps()}),
    }
    return curve_theta_basis(profiles)


def product_theta(a: ThetaBasis, b: ThetaBasis) -> ThetaBasis:
    """Tensor basis of the product: all pairs with unit slots, minus unit (x) unit."""
    symbols = []
    for x in tuple(a.symbols) + (UNIT,):
        for y in tuple(b.symbols) + (UNIT,):
            if x is UNIT and y is UNIT:
                continue
            symbols.append((x, y))
    return ThetaBasis(tuple(symbols))


def product_albanese_dim(a: int, b: int) -> int:
    """Dimension of the product Albanese from the factor dimensions."""
    if a < 0 or b < 0:
        raise ValueError("dimensions are nonnegative")
    return (a + 1) * (b + 1) - 1


def gamma_albanese_dim(alpha: int) -> int:
    """Closed form alpha*(2*alpha - 1) for the bicuspidal example curve."""
    if alpha < 1:
        raise ValueError("alpha must be a positive integer")
    return alpha * (2 * alpha - 1)


ProfileLike = Union[ValuationProfile, Mapping[int, int]]


def _profile_orders(profile: ProfileLike) -> Tuple[int, ...]:
    if isinstance(profile, ValuationProfile):
        return profile.pole_orders
    return tuple(sorted(profile))


def ruling_graded_dims(first_factor_dim: int, profile_second: ProfileLike) -> Dict[int, int]:
    """Graded dimensions along a ruling over a singular point of the second factor.

    Each pole order of the second factor at that point contributes a
    graded piece spanned by (first-factor symbols plus the unit) tensor
    the pole symbol, hence of dimension ``first_factor_dim + 1``.
    """
    if first_factor_dim < 0:
        raise ValueError("dimensions are nonnegative")
    return {nu: first_factor_dim + 1 for nu in _profile_orders(profile_second)}


def product_surface_ruling_profiles(alpha: int, beta: int) -> Dict[str, Dict[int, int]]:
    """Graded-dimension tables for the four singular rulings of the product.

    Horizontal rulings sit over the two cusps of the second (beta)
    factor, vertical ones over the cusps of the first (alpha) factor.
    """
    dim_a = gamma_albanese_dim(alpha)
    dim_b = gamma_albanese_dim(beta)
    alpha_exps = gamma_cusp_exponents(alpha)
    beta_exps = gamma_cusp_exponents(beta)
    profiles = {}
    for tag, exps in zip(("0", "inf"), beta_exps):
        profiles[f"horiz:{tag}"] = {nu: dim_a + 1 for nu in NumericalSemigroup(exps).gaps()}
    for tag, exps in zip(("0", "inf"), alpha_exps):
        profiles[f"vert:{tag}"] = {nu: dim_b + 1 for nu in NumericalSemigroup(exps).gaps()}
    return profiles


def section_ruling_count(alpha: int, beta: int, n: int) -> int:
    """Intersection count of a degree-N general section with each ruling."""
    return n * 2 * (alpha + beta + 1)


def section_curve_vectorial_dim(alpha: int, beta: int, n: int) -> int:
    """Vectorial dimension of a general degree-N section curve of the product."""
    da = gamma_albanese_dim(alpha)
    db = gamma_albanese_dim(beta)
    return n * (da * (2 * beta + 1) + db * (2 * alpha + 1))


@dataclass(frozen=True)
class CriterionWitness:
    ruling: str
    order: int
    required: int
    count: int


@dataclass(frozen=True)
class CriterionResult:
    """Outcome of the injectivity criterion, with the first violation if any."""

    holds: bool
    witness: Optional[CriterionWitness] = None

    def __bool__(self):
        return self.holds


def check_injectivity_criterion(
    profiles: Mapping[str, Mapping[int, int]],
    counts: Mapping[str, int],
) -> CriterionResult:
    """Sufficient numeric condition for injective restriction of deformations.

    Holds when every ruling meets the section curve in at least as many
    points as the dimension of each of its graded pieces. A ``True``
    certifies the sufficient condition only; the geometric general
    position hypotheses are the caller's obligation, and a ``False``
    does not by itself decide injectivity.
    """
    for ruling in sorted(profiles):
        if ruling not in counts:
            raise MissingCountError(f"no intersection count for ruling {ruling!r}")
        count = counts[ruling]
        table = profiles[ruling]
        for nu in sorted(table):
            dim = table[nu]
            if count < dim:
                return CriterionResult(False, CriterionWitness(ruling, nu, dim, count))
    return CriterionResult(True)


@dataclass(frozen=True)
class GysinReport:
    """Exact thresholds governing surjectivity of the Gysin map.

    ``n_low``: below it (strict) surjectivity fails. ``n_suff``: from it
    (inclusive) surjectivity holds. ``n0``/``n1`` are the corresponding
    smallest non-excluded / sufficient integers. ``n1 >= n0`` is not
    asserted for distinct parameters; for equal parameters they agree
    (``exact``), and the weaker classical estimate ``esv_bound``
    (surjectivity for integers strictly above it) is attached.
    """

    alpha: int
    beta: int
    n_low: Fraction
    n_suff: Fraction
    n0: int
    n1: int
    exact: bool
    esv_bound: Optional[Fraction]

    def to_json(self) -> Dict[str, object]:
        def frac(x: Optional[Fraction]):
            return None if x is None else f"{x.numerator}/{x.denominator}"

        return {
            "alpha": self.alpha,
            "beta": self.beta,
            "N_low": frac(self.n_low),
            "N_suff": frac(self.n_suff),
            "N0": self.n0,
            "N1": self.n1,
            "exact": self.exact,
            "esv_bound": frac(self.esv_bound),
        }


def gysin_thresholds(alpha: int, beta: int) -> GysinReport:
    """Exact rational thresholds and their integerizations.

    Exclusion is strict, so the smallest non-excluded integer is the
    ceiling of ``n_low`` (an integer boundary is itself not excluded);
    sufficiency is inclusive, so ``n1`` is the ceiling of ``n_suff`` as
    well. Integerization happens only here.
    """
    if alpha < 1 or beta < 1:
        raise ValueError("alpha and beta must be positive integers")
    da = gamma_albanese_dim(alpha)
    db = gamma_albanese_dim(beta)
    n_low = Fraction(
        (da + 1) * (db + 1) - 1,
        da * (2 * beta + 1) + db * (2 * alpha + 1),
    )
    half_degree = 2 * (alpha + beta + 1)
    n_suff = max(Fraction(da + 1, half_degree), Fraction(db + 1, half_degree))
    esv = None
    if alpha == beta:
        esv = 2 * Fraction(3 * da - 1, 2 * alpha + 1) + 1
    return GysinReport(
        alpha=alpha,
        beta=beta,
        n_low=n_low,
        n_suff=n_suff,
        n0=math.ceil(n_low),
        n1=math.ceil(n_suff),
        exact=(alpha == beta),
        esv_bound=esv,
    )


def verify_alpha_beta_coincidence(alpha: int) -> bool:
    """Check that the two integer thresholds agree for equal parameters.

    Independently re-derives why: the rational thresholds differ by
    ``1/(2(2*alpha + 1)) < 1`` and ``2(2*alpha + 1)`` does not divide
    ``alpha(2*alpha - 1) + 1``, so no integer separates them.
    """
    report = gysin_thresholds(alpha, alpha)
    gap_ok = report.n_low - report.n_suff == Fraction(1, 2 * (2 * alpha + 1))
    divisor = 2 * (2 * alpha + 1)
    non_divisible = (gamma_albanese_dim(alpha) + 1) % divisor != 0
    return report.n0 == report.n1 and gap_ok and non_divisible
