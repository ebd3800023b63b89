"""Per-point invariants of curve singularities.

A singular point is given by the parametrizations of its formal local
branches: branch ``i`` is a map ``t -> (x_1(t), ..., x_r(t))`` with every
coordinate vanishing at ``t = 0``. From this data the module computes

* the point classification (smooth / ordinary m-ple / general),
* the codimension of the local maximal ideal inside the product of the
  branch maximal ideals (the local unipotent contribution to the Picard
  variety), by two independent routes:

  - ``unipotent_dim_semigroup``: gap count of the value semigroup, valid
    for unibranch monomial parametrizations;
  - ``unipotent_dim_jets``: exact rank computation in jet space, valid
    for any parametrization but subject to a truncation-stability check;

* the valuation profile (pole orders with graded dimensions) housing the
  local part of the Lie algebra of divisor deformations killed by
  push-forward.

Truncation soundness is the module's own responsibility: the underlying
geometry lives in actual power series, so every jets-path answer is
recomputed at three consecutive truncation orders and rejected unless
all three agree.
"""

from __future__ import annotations

from collections import deque
from dataclasses import dataclass
from typing import Dict, List, Mapping, Optional, Sequence, Tuple

from picalb.errors import (
    InsufficientTruncationError,
    NotMonomialUnibranchError,
    UnstableTruncationError,
)
from picalb.jets import BranchJetTuple, Jet
from picalb.kernels import clear_denominators, integer_rank, rational_rank
from picalb.semigroups import NumericalSemigroup


@dataclass(frozen=True)
class PointClass:
    """Classification of a curve point by its branch structure.

    kind is one of "smooth", "ordinary", "general"; ``branches`` is the
    number of formal local branches.
    """

    kind: str
    branches: int

    @classmethod
    def smooth(cls) -> "PointClass":
        return cls("smooth", 1)

    @classmethod
    def ordinary(cls, m: int) -> "PointClass":
        if m < 2:
            raise ValueError("an ordinary multiple point has at least 2 branches")
        return cls("ordinary", m)

    @classmethod
    def general(cls, m: int) -> "PointClass":
        if m < 1:
            raise ValueError("branch count must be positive")
        return cls("general", m)

    @property
    def is_smooth(self) -> bool:
        return self.kind == "smooth"

    @property
    def is_ordinary(self) -> bool:
        return self.kind == "ordinary"

    @property
    def is_general(self) -> bool:
        return self.kind == "general"

    def __str__(self):
        if self.kind == "smooth":
            return "smooth"
        return f"{self.kind}-{self.branches}"


@dataclass(frozen=True)
class ValuationProfile:
    """Pole orders and graded dimensions at one singular branch point.

    ``orders`` maps a pole order ``nu >= 1`` to the dimension of the
    corresponding graded piece. For a unibranch point each listed order
    has dimension 1 (one basis representative ``t^-nu`` per gap of the
    value semigroup). Profiles produced by the generic jet filtration
    (multibranch or non-monomial inputs) carry ``extrapolated=True``:
    the total is exact but the per-order split is defined here by the
    valuation filtration of the quotient, a convention the source
    geometry does not need elsewhere.
    """

    orders: Tuple[Tuple[int, int], ...]
    extrapolated: bool = False

    def __post_init__(self):
        for nu, dim in self.orders:
            if nu < 1 or dim < 1:
                raise ValueError(f"invalid profile entry (order {nu}, dim {dim})")
        if list(self.orders) != sorted(self.orders):
            raise ValueError("profile orders must be sorted")

    @classmethod
    def from_dims(cls, dims: Mapping[int, int], extrapolated: bool = False) -> "ValuationProfile":
        entries = tuple(sorted((int(nu), int(d)) for nu, d in dims.items() if d))
        return cls(entries, extrapolated)

    @property
    def pole_orders(self) -> Tuple[int, ...]:
        return tuple(nu for nu, _ in self.orders)

    def as_dict(self) -> Dict[int, int]:
        return dict(self.orders)

    @property
    def total(self) -> int:
        return sum(dim for _, dim in self.orders)


@dataclass(frozen=True)
class SingularPointData:
    """Branch parametrizations of one point of a curve.

    ``branches[i][j]`` is the jet of coordinate ``j`` on branch ``i``.
    Every coordinate jet vanishes at the origin (valuation >= 1), all
    branches share the coordinate count and the truncation order, and
    each branch has at least one coordinate that is not identically zero
    at this truncation.
    """

    label: str
    branches: Tuple[Tuple[Jet, ...], ...]

    def __post_init__(self):
        if not self.branches:
            raise ValueError(f"point {self.label!r}: at least one branch required")
        counts = {len(b) for b in self.branches}
        if len(counts) != 1 or counts == {0}:
            raise ValueError(f"point {self.label!r}: branches disagree on coordinate count")
        orders = {jet.truncation_order for b in self.branches for jet in b}
        if len(orders) != 1:
            raise ValueError(f"point {self.label!r}: mixed truncation orders {sorted(orders)}")
        for i, branch in enumerate(self.branches):
            if all(jet.is_zero() for jet in branch):
                raise ValueError(f"point {self.label!r}: branch {i} is identically zero")
            for j, jet in enumerate(branch):
                if jet.coeffs[0] != 0:
                    raise ValueError(
                        f"point {self.label!r}: coordinate {j} on branch {i} does not vanish at the point"
                    )

    @classmethod
    def from_branches(cls, label: str, branches: Sequence[Sequence[Jet]]) -> "SingularPointData":
        return cls(label, tuple(tuple(b) for b in branches))

    @property
    def branch_count(self) -> int:
        return len(self.branches)

    @property
    def coordinate_count(self) -> int:
        return len(self.branches[0])

    @property
    def truncation_order(self) -> int:
        return self.branches[0][0].truncation_order

    def coordinate_tuples(self) -> List[BranchJetTuple]:
        """The generators of the local ring: coordinate j across branches."""
        return [
            BranchJetTuple(tuple(branch[j] for branch in self.branches))
            for j in range(self.coordinate_count)
        ]

    def monomial_exponents(self) -> Optional[Tuple[int, ...]]:
        """Exponents when unibranch with single-term coordinates, else None."""
        if self.branch_count != 1:
            return None
        exps = []
        for jet in self.branches[0]:
            terms = [(i, c) for i, c in enumerate(jet.coeffs) if c != 0]
            if len(terms) != 1:
                return None
            exps.append(terms[0][0])
        return tuple(exps)


def classify_point(point: SingularPointData) -> PointClass:
    """Smooth, ordinary m-ple, or general, from branch tangent data.

    A branch is smooth when some coordinate has valuation exactly 1. The
    point is an ordinary multiple point when all branches are smooth and
    their tangent vectors (degree-1 coefficients) are linearly
    independent as a set; that is exactly the condition under which the
    germ is isomorphic to coordinate axes crossing transversally.
    """
    if point.truncation_order < 2:
        raise InsufficientTruncationError(
            f"point {point.label!r}: truncation order {point.truncation_order} < 2, tangent data unreadable"
        )
    smooth_flags = [
        any(jet.valuation() == 1 for jet in branch) for branch in point.branches
    ]
    if point.branch_count == 1:
        return PointClass.smooth() if smooth_flags[0] else PointClass.general(1)
    if all(smooth_flags):
        tangents = [[jet.coeffs[1] for jet in branch] for branch in point.branches]
        if rational_rank(tangents, point.coordinate_count) == point.branch_count:
            return PointClass.ordinary(point.branch_count)
    return PointClass.general(point.branch_count)


def value_semigroup(point: SingularPointData) -> NumericalSemigroup:
    """Semigroup generated by the coordinate valuations (monomial unibranch only)."""
    exps = point.monomial_exponents()
    if exps is None:
        raise NotMonomialUnibranchError(
            f"point {point.label!r} is not a unibranch monomial parametrization"
        )
    return NumericalSemigroup(exps)


def unipotent_dim_semigroup(point: SingularPointData) -> int:
    """Gap count of the value semigroup: the fast exact route.

    Counts the missing valuations, which index a basis of the quotient
    of the branch maximal ideal by the local maximal ideal.
    """
    return len(value_semigroup(point).gaps())


def _monomial_closure(point: SingularPointData, order: int) -> List[BranchJetTuple]:
    """All nonzero products of coordinate tuples, in jet space at ``order``.

    These span the image of the local maximal ideal. Every coordinate has
    valuation >= 1 on every branch, so products of degree >= order vanish
    and the closure is finite. Products are enumerated with nondecreasing
    coordinate indices so each monomial is built exactly once; zero
    intermediates are pruned since all their multiples stay zero.
    """
    coords = [ct.truncate(order) for ct in point.coordinate_tuples()]
    out: List[BranchJetTuple] = []
    queue = deque()
    for i, ct in enumerate(coords):
        if not ct.is_zero():
            out.append(ct)
            queue.append((i, ct))
    while queue:
        start, current = queue.popleft()
        for i in range(start, len(coords)):
            product = current.mul(coords[i])
            if product.is_zero():
                continue
            out.append(product)
            queue.append((i, product))
    return out


def _quotient_dims(point: SingularPointData, orders: Sequence[int]) -> Dict[int, int]:
    """dim of (product of branch maximal ideals)/(local maximal ideal) in jet space."""
    top = max(orders)
    monomials = _monomial_closure(point, top)
    b = point.branch_count
    dims = {}
    for m in orders:
        rows = []
        for tup in monomials:
            truncated = tup.truncate(m)
            if not truncated.is_zero():
                rows.append(clear_denominators(truncated.flatten()))
        dims[m] = b * (m - 1) - integer_rank(rows, b * m)
    return dims


def _resolve_truncation(point: SingularPointData, truncation: Optional[int]) -> int:
    """Truncation order for the jets path, leaving room for the stability ladder."""
    available = point.truncation_order - 2
    if truncation is None:
        exps = point.monomial_exponents()
        if exps is not None:
            sg = NumericalSemigroup(exps)
            if sg.generator_gcd() == 1:
                truncation = min(2 * sg.conductor() + 2, available)
            else:
                truncation = available
        else:
            truncation = available
    if truncation < 2:
        raise InsufficientTruncationError(
            f"point {point.label!r}: requested truncation {truncation} is below 2"
        )
    if truncation + 2 > point.truncation_order:
        raise InsufficientTruncationError(
            f"point {point.label!r}: stability check at truncation {truncation} needs "
            f"coefficients to order {truncation + 2}, only {point.truncation_order} available"
        )
    return truncation


def unipotent_dim_jets(point: SingularPointData, truncation: Optional[int] = None) -> int:
    """Quotient dimension by exact rank in jet space, stability-checked.

    The dimension is computed at ``truncation``, ``truncation + 1`` and
    ``truncation + 2``; all three must agree, otherwise the truncation is
    too small to see the whole quotient and UnstableTruncationError asks
    the caller to supply longer jets. When ``truncation`` is omitted it
    defaults to twice the conductor estimate plus two, capped by the
    available data.
    """
    m = _resolve_truncation(point, truncation)
    dims = _quotient_dims(point, [m, m + 1, m + 2])
    values = [dims[m], dims[m + 1], dims[m + 2]]
    if len(set(values)) != 1:
        raise UnstableTruncationError(
            f"point {point.label!r}: dimensions {values} at truncations {[m, m + 1, m + 2]} disagree; "
            "raise the truncation order"
        )
    return values[0]


def unipotent_dim(point: SingularPointData, truncation: Optional[int] = None) -> int:
    """Dispatch: semigroup gap count when applicable, else the jets path."""
    try:
        return unipotent_dim_semigroup(point)
    except NotMonomialUnibranchError:
        return unipotent_dim_jets(point, truncation)


def _filtration_profile(point: SingularPointData, m: int) -> Dict[int, int]:
    """Graded dimensions of the quotient under the valuation filtration.

    Level ``nu`` of the filtration is spanned by tuples with valuation at
    least ``nu`` on every branch. The dimension of the part of the
    quotient at level >= nu is rank(span + level) - rank(span); graded
    pieces are consecutive differences.
    """
    b = point.branch_count
    ncols = b * m
    base_rows = []
    for tup in _monomial_closure(point, m):
        base_rows.append(clear_denominators(tup.flatten()))
    base_rank = integer_rank(base_rows, ncols)

    def unit_row(branch: int, power: int) -> List[int]:
        row = [0] * ncols
        row[branch * m + power] = 1
        return row

    level_dims = {}
    previous = 0
    for nu in range(m - 1, 0, -1):
        rows = list(base_rows)
        for branch in range(b):
            for power in range(nu, m):
                rows.append(unit_row(branch, power))
        at_least_nu = integer_rank(rows, ncols) - base_rank
        if at_least_nu - previous > 0:
            level_dims[nu] = at_least_nu - previous
        previous = at_least_nu
    return level_dims


def valuation_profile(point: SingularPointData, truncation: Optional[int] = None) -> ValuationProfile:
    """Pole orders and graded dimensions at the point.

    Unibranch monomial parametrizations take the exact semigroup route:
    one order per gap, dimension 1 each. Smooth points give the empty
    profile. Everything else goes through the jet-space filtration at a
    stability-checked truncation and is flagged extrapolated.
    """
    exps = point.monomial_exponents()
    if exps is not None:
        sg = NumericalSemigroup(exps)
        return ValuationProfile.from_dims({nu: 1 for nu in sg.gaps()})
    if classify_point(point).is_smooth:
        return ValuationProfile(())
    m = _resolve_truncation(point, truncation)
    profiles = [_filtration_profile(point, order) for order in (m, m + 1, m + 2)]
    if not (profiles[0] == profiles[1] == profiles[2]):
        raise UnstableTruncationError(
            f"point {point.label!r}: valuation profiles at truncations {[m, m + 1, m + 2]} disagree; "
            "raise the truncation order"
        )
    return ValuationProfile.from_dims(profiles[0], extrapolated=True)
