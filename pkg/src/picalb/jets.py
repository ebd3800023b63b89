"""Truncated power series over exact rationals, and tuples of them.

A ``Jet`` is a power series in one variable ``t`` known modulo ``t^M``;
``M`` is the truncation order and is explicit data. Coefficients are
``fractions.Fraction`` throughout: floating point is forbidden in the
core, since every quantity downstream is an integer dimension and
rounding would corrupt rank computations.

Arithmetic between jets of different orders truncates to the minimum
order, so results are always sound (they are lower bounds on the true
valuation, never fabricated precision).

``BranchJetTuple`` holds one jet per formal local branch of a curve
germ; ``span_dimension`` computes exact ranks of sets of such tuples
and is the linear-algebra backend for every dimension count in the
package.
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from typing import Iterable, Optional, Sequence, Union

from picalb.errors import ShapeMismatchError
from picalb.kernels import clear_denominators, integer_rank

_ZERO = Fraction(0)

Coefficient = Union[int, str, Fraction]


def as_fraction(value: Coefficient) -> Fraction:
    """Coerce an exact coefficient. Floats are rejected, not rounded."""
    if isinstance(value, Fraction):
        return value
    if isinstance(value, bool):
        raise TypeError("bool is not a coefficient")
    if isinstance(value, int):
        return Fraction(value)
    if isinstance(value, str):
        return Fraction(value)
    if isinstance(value, float):
        raise TypeError("floating point coefficients are not allowed; use 'p/q' strings")
    raise TypeError(f"cannot interpret {value!r} as an exact rational")


@dataclass(frozen=True)
class Jet:
    """A univariate power series truncated at order ``len(coeffs)``.

    ``coeffs[i]`` is the coefficient of ``t^i``.
    """

    coeffs: tuple

    def __post_init__(self):
        if not self.coeffs:
            raise ValueError("a jet needs a positive truncation order")

    @classmethod
    def from_coeffs(cls, values: Sequence[Coefficient], order: Optional[int] = None) -> "Jet":
        coeffs = [as_fraction(v) for v in values]
        if order is None:
            order = len(coeffs)
        if order < len(coeffs):
            raise ValueError(f"{len(coeffs)} coefficients exceed truncation order {order}")
        coeffs.extend([_ZERO] * (order - len(coeffs)))
        return cls(tuple(coeffs))

    @classmethod
    def zero(cls, order: int) -> "Jet":
        return cls((_ZERO,) * order)

    @classmethod
    def monomial(cls, exponent: int, order: int, coeff: Coefficient = 1) -> "Jet":
        """``coeff * t^exponent`` mod ``t^order``; zero if exponent >= order."""
        if exponent < 0:
            raise ValueError("exponent must be nonnegative")
        if exponent >= order:
            return cls.zero(order)
        coeffs = [_ZERO] * order
        coeffs[exponent] = as_fraction(coeff)
        return cls(tuple(coeffs))

    @property
    def truncation_order(self) -> int:
        return len(self.coeffs)

    def is_zero(self) -> bool:
        return all(c == 0 for c in self.coeffs)

    def valuation(self) -> Optional[int]:
        """Index of the first nonzero coefficient; ``None`` for the zero jet.

        ``None`` is deliberate: at truncation ``M`` the zero jet only
        certifies valuation >= M, which is not any particular integer.
        """
        for i, c in enumerate(self.coeffs):
            if c != 0:
                return i
        return None

    def truncate(self, order: int) -> "Jet":
        if order > len(self.coeffs):
            raise ValueError("cannot extend a jet; coefficients beyond the order are unknown")
        return Jet(self.coeffs[:order])

    def _nonzero_terms(self):
        return [(i, c) for i, c in enumerate(self.coeffs) if c != 0]

    def mul(self, other: "Jet") -> "Jet":
        order = min(len(self.coeffs), len(other.coeffs))
        out = [_ZERO] * order
        terms_b = other._nonzero_terms()
        for i, ca in self._nonzero_terms():
            if i >= order:
                break
            for j, cb in terms_b:
                k = i + j
                if k >= order:
                    break
                out[k] += ca * cb
        return Jet(tuple(out))

    def add(self, other: "Jet") -> "Jet":
        order = min(len(self.coeffs), len(other.coeffs))
        return Jet(tuple(self.coeffs[i] + other.coeffs[i] for i in range(order)))

    def scale(self, factor: Coefficient) -> "Jet":
        f = as_fraction(factor)
        return Jet(tuple(f * c for c in self.coeffs))

    def __add__(self, other):
        if not isinstance(other, Jet):
            return NotImplemented
        return self.add(other)

    def __sub__(self, other):
        if not isinstance(other, Jet):
            return NotImplemented
        return self.add(other.scale(-1))

    def __neg__(self):
        return self.scale(-1)

    def __mul__(self, other):
        if isinstance(other, Jet):
            return self.mul(other)
        return self.scale(other)

    def __rmul__(self, other):
        return self.scale(other)

    def __repr__(self):
        terms = [f"{c}*t^{i}" for i, c in enumerate(self.coeffs) if c != 0]
        body = " + ".join(terms) if terms else "0"
        return f"Jet({body} mod t^{len(self.coeffs)})"


@dataclass(frozen=True)
class BranchJetTuple:
    """One jet per formal local branch, all at the same truncation order."""

    branches: tuple

    def __post_init__(self):
        if not self.branches:
            raise ValueError("a branch tuple needs at least one branch")
        orders = {jet.truncation_order for jet in self.branches}
        if len(orders) != 1:
            raise ShapeMismatchError(f"branches carry mixed truncation orders {sorted(orders)}")

    @classmethod
    def of(cls, *jets: Jet) -> "BranchJetTuple":
        return cls(tuple(jets))

    @property
    def branch_count(self) -> int:
        return len(self.branches)

    @property
    def truncation_order(self) -> int:
        return self.branches[0].truncation_order

    def is_zero(self) -> bool:
        return all(jet.is_zero() for jet in self.branches)

    def truncate(self, order: int) -> "BranchJetTuple":
        return BranchJetTuple(tuple(jet.truncate(order) for jet in self.branches))

    def mul(self, other: "BranchJetTuple") -> "BranchJetTuple":
        if other.branch_count != self.branch_count:
            raise ShapeMismatchError("branch counts differ")
        return BranchJetTuple(
            tuple(a.mul(b) for a, b in zip(self.branches, other.branches))
        )

    def add(self, other: "BranchJetTuple") -> "BranchJetTuple":
        if other.branch_count != self.branch_count:
            raise ShapeMismatchError("branch counts differ")
        order = min(self.truncation_order, other.truncation_order)
        return BranchJetTuple(
            tuple(a.truncate(order).add(b.truncate(order)) for a, b in zip(self.branches, other.branches))
        )

    def scale(self, factor: Coefficient) -> "BranchJetTuple":
        return BranchJetTuple(tuple(jet.scale(factor) for jet in self.branches))

    def flatten(self) -> list:
        """Branch-major coefficient vector of length branches * order."""
        out = []
        for jet in self.branches:
            out.extend(jet.coeffs)
        return out

    def __mul__(self, other):
        if isinstance(other, BranchJetTuple):
            return self.mul(other)
        return self.scale(other)

    def __rmul__(self, other):
        return self.scale(other)

    def __add__(self, other):
        if not isinstance(other, BranchJetTuple):
            return NotImplemented
        return self.add(other)


def jet_mul(a: Jet, b: Jet) -> Jet:
    """Product in k[[t]]/t^M with M the minimum of the operand orders."""
    return a.mul(b)


def jet_valuation(a: Jet) -> Optional[int]:
    """Order of vanishing; ``None`` when indistinguishable from zero."""
    return a.valuation()


def span_dimension(vectors: Iterable[Union[BranchJetTuple, Jet]]) -> int:
    """Exact rank of a set of branch tuples over the rationals.

    Bare jets are accepted and treated as single-branch tuples. All
    inputs must share branch count and truncation order.
    """
    tuples = []
    for v in vectors:
        if isinstance(v, Jet):
            v = BranchJetTuple((v,))
        tuples.append(v)
    if not tuples:
        return 0
    shapes = {(v.branch_count, v.truncation_order) for v in tuples}
    if len(shapes) != 1:
        raise ShapeMismatchError(f"mixed shapes in span: {sorted(shapes)}")
    branch_count, order = next(iter(shapes))
    rows = [clear_denominators(v.flatten()) for v in tuples]
    return integer_rank(rows, branch_count * order)
