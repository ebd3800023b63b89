"""Global curve bookkeeping and the Picard-variety dimension triple.

A ``CurveModel`` records the components of the normalization (with their
genera), the singular points (either with full branch parametrizations
or as declared shortcuts), and which components each branch touches.
The identity component of the Picard group then decomposes as

* an abelian part of dimension the sum of the component genera,
* a torus whose rank depends only on branch counts and the component
  graph: sum of (branches - 1) over all points, minus the number of
  components, plus one (connected curves only),
* a unipotent part summing the per-point quotient dimensions computed
  in ``picalb.singularities``.

For a projective curve the same triple describes its generalized
Albanese variety, so the builders for the worked example families live
here too: ``build_gamma_alpha`` for the bicuspidal plane curves
``y^2 z^(2a-1) = x^(2a+1)`` and ``build_dkl`` for unions of their
vertical and horizontal copies meeting in ordinary double points.
"""

from __future__ import annotations

from dataclasses import dataclass
from typing import Dict, List, Optional, Sequence, Tuple

from picalb.errors import DisconnectedError
from picalb.jets import Jet
from picalb.semigroups import NumericalSemigroup
from picalb.singularities import PointClass, SingularPointData, unipotent_dim


@dataclass(frozen=True)
class Component:
    """An irreducible component of the normalization, with its genus."""

    id: str
    genus: int

    def __post_init__(self):
        if self.genus < 0:
            raise ValueError(f"component {self.id!r}: genus must be nonnegative")


@dataclass(frozen=True)
class ModelPoint:
    """A singular point of the model.

    Exactly one of ``data`` (full parametrization) and ``declared``
    (class shortcut) is set. Ordinary shortcuts need no dimension: they
    contribute branches - 1 to the torus and nothing to the unipotent
    part. A declared general point must carry its unipotent dimension.
    ``incidence`` lists the component touched by each branch (repeats
    allowed: several branches of one point may lie on one component).
    """

    label: str
    incidence: Tuple[str, ...]
    data: Optional[SingularPointData] = None
    declared: Optional[PointClass] = None
    declared_unipotent: Optional[int] = None

    def __post_init__(self):
        if (self.data is None) == (self.declared is None):
            raise ValueError(f"point {self.label!r}: exactly one of data/declared required")
        if self.data is not None:
            if self.data.label != self.label:
                raise ValueError(f"point {self.label!r}: parametrization labelled {self.data.label!r}")
            if self.declared_unipotent is not None:
                raise ValueError(f"point {self.label!r}: declared dimension with full data")
        else:
            if self.declared.is_smooth:
                raise ValueError(f"point {self.label!r}: smooth points are not declared, omit them")
            if self.declared.is_ordinary:
                if self.declared_unipotent not in (None, 0):
                    raise ValueError(
                        f"point {self.label!r}: an ordinary point has unipotent dimension 0"
                    )
            elif self.declared_unipotent is None or self.declared_unipotent < 0:
                raise ValueError(
                    f"point {self.label!r}: declared general point needs a unipotent dimension"
                )
        if len(self.incidence) != self.branch_count:
            raise ValueError(
                f"point {self.label!r}: {len(self.incidence)} incidences for "
                f"{self.branch_count} branches"
            )

    @property
    def branch_count(self) -> int:
        if self.data is not None:
            return self.data.branch_count
        return self.declared.branches


@dataclass(frozen=True)
class CurveModel:
    """Components, singular points, and a declared connectedness flag."""

    components: Tuple[Component, ...]
    points: Tuple[ModelPoint, ...]
    connected: bool

    def __post_init__(self):
        if not self.components:
            raise ValueError("a curve model needs at least one component")
        ids = [c.id for c in self.components]
        if len(set(ids)) != len(ids):
            raise ValueError("duplicate component ids")
        labels = [p.label for p in self.points]
        if len(set(labels)) != len(labels):
            raise ValueError("duplicate point labels")
        known = set(ids)
        for p in self.points:
            for cid in p.incidence:
                if cid not in known:
                    raise ValueError(f"point {p.label!r} touches unknown component {cid!r}")
        if self.connected != self._incidence_connected():
            raise ValueError(
                "declared connected flag contradicts the component-point incidence graph"
            )

    def _incidence_connected(self) -> bool:
        # Components are vertices; every singular point links all the
        # components its branches touch.
        ids = [c.id for c in self.components]
        parent = {cid: cid for cid in ids}

        def find(x):
            while parent[x] != x:
                parent[x] = parent[parent[x]]
                x = parent[x]
            return x

        for p in self.points:
            touched = list(dict.fromkeys(p.incidence))
            for other in touched[1:]:
                ra, rb = find(touched[0]), find(other)
                if ra != rb:
                    parent[rb] = ra
        roots = {find(cid) for cid in ids}
        return len(roots) == 1

    @classmethod
    def build(
        cls,
        components: Sequence[Component],
        points: Sequence[ModelPoint],
        connected: bool = True,
    ) -> "CurveModel":
        return cls(tuple(components), tuple(points), connected)


@dataclass(frozen=True)
class PicardDecomposition:
    """Dimension triple of the identity component of the Picard group."""

    abelian_dim: int
    torus_rank: int
    unipotent_dim: int
    total: int

    def __post_init__(self):
        if self.total != self.abelian_dim + self.torus_rank + self.unipotent_dim:
            raise ValueError("total must equal abelian + torus + unipotent")

    @classmethod
    def of_parts(cls, abelian: int, torus: int, unipotent: int) -> "PicardDecomposition":
        return cls(abelian, torus, unipotent, abelian + torus + unipotent)


def torus_rank(model: CurveModel) -> int:
    """Rank of the toric part: sum of (branches - 1) - #components + 1.

    Only multibranch points contribute; they are exactly the singular
    points surviving on the largest homeomorphic curve with ordinary
    singularities. The formula needs the curve connected.
    """
    if not model.connected:
        raise DisconnectedError("torus rank formula assumes a connected curve")
    return sum(p.branch_count - 1 for p in model.points) - len(model.components) + 1


def unipotent_dim_total(model: CurveModel, truncation: Optional[int] = None) -> int:
    """Sum of per-point unipotent dimensions over the singular points."""
    total = 0
    for p in model.points:
        if p.declared is not None:
            total += p.declared_unipotent or 0
        else:
            total += unipotent_dim(p.data, truncation)
    return total


def picard_decompose(model: CurveModel, truncation: Optional[int] = None) -> PicardDecomposition:
    """The (abelian, torus, unipotent) dimension triple of the model.

    For a projective curve this triple equally describes the generalized
    Albanese variety, which is canonically the same group.
    """
    abelian = sum(c.genus for c in model.components)
    return PicardDecomposition.of_parts(
        abelian, torus_rank(model), unipotent_dim_total(model, truncation)
    )


# ---------------------------------------------------------------------------
# Example family builders
# ---------------------------------------------------------------------------

def gamma_cusp_exponents(alpha: int) -> Tuple[Tuple[int, int], Tuple[int, int]]:
    """Monomial exponents of the two cusps of y^2 z^(2a-1) = x^(2a+1).

    At the origin the branch is (t^2, t^(2a+1)); at the point at
    infinity it is (t^(2a-1), t^(2a+1)). For alpha = 1 the latter is a
    smooth parametrization.
    """
    if alpha < 1:
        raise ValueError("alpha must be a positive integer")
    return (2, 2 * alpha + 1), (2 * alpha - 1, 2 * alpha + 1)


def monomial_point(label: str, exponents: Sequence[int], order: int) -> SingularPointData:
    """Unibranch point parametrized by t -> (t^e for e in exponents)."""
    branch = tuple(Jet.monomial(e, order) for e in exponents)
    return SingularPointData(label, (branch,))


def _monomial_data_order(exponents: Sequence[int], truncation: Optional[int]) -> int:
    # Data order = computation order + 2, leaving room for the
    # three-point stability ladder of the jets path.
    if truncation is None:
        truncation = 2 * NumericalSemigroup(exponents).conductor() + 2
    return truncation + 2


def build_gamma_alpha(alpha: int, truncation: Optional[int] = None) -> CurveModel:
    """Model of the bicuspidal rational plane curve of the example family.

    One component of genus zero carrying the two parametrized points
    labelled "0" and "inf". The decomposition total is alpha*(2*alpha-1).
    """
    exps_zero, exps_inf = gamma_cusp_exponents(alpha)
    component = Component("C", 0)
    points = []
    for label, exps in (("0", exps_zero), ("inf", exps_inf)):
        order = _monomial_data_order(exps, truncation)
        points.append(
            ModelPoint(label=label, incidence=("C",), data=monomial_point(label, exps, order))
        )
    return CurveModel.build([component], points)


def build_dkl(
    alpha: int,
    beta: int,
    k: int,
    l: int,
    truncation: Optional[int] = None,
) -> CurveModel:
    """Model of k vertical and l horizontal curve copies on the product surface.

    The k vertical components are copies of the beta-family curve, the l
    horizontal ones of the alpha-family curve; each vertical meets each
    horizontal in one ordinary double point, so there are k*l nodes plus
    the 2k + 2l cusps of the copies. All components are rational.
    """
    if min(alpha, beta, k, l) < 1:
        raise ValueError("alpha, beta, k, l must be positive integers")
    beta_exps = gamma_cusp_exponents(beta)
    alpha_exps = gamma_cusp_exponents(alpha)
    components: List[Component] = []
    points: List[ModelPoint] = []
    for i in range(k):
        cid = f"v{i}"
        components.append(Component(cid, 0))
        for tag, exps in zip(("0", "inf"), beta_exps):
            label = f"{cid}:{tag}"
            order = _monomial_data_order(exps, truncation)
            points.append(
                ModelPoint(label=label, incidence=(cid,), data=monomial_point(label, exps, order))
            )
    for j in range(l):
        cid = f"h{j}"
        components.append(Component(cid, 0))
        for tag, exps in zip(("0", "inf"), alpha_exps):
            label = f"{cid}:{tag}"
            order = _monomial_data_order(exps, truncation)
            points.append(
                ModelPoint(label=label, incidence=(cid,), data=monomial_point(label, exps, order))
            )
    for i in range(k):
        for j in range(l):
            points.append(
                ModelPoint(
                    label=f"n{i}.{j}",
                    incidence=(f"v{i}", f"h{j}"),
                    declared=PointClass.ordinary(2),
                )
            )
    return CurveModel.build(components, points)
