"""Exact invariants of singular projective curves and their products.

The package computes, in exact rational arithmetic throughout:

* truncated power series (jets) and exact ranks of sets of multi-branch
  jet tuples (:mod:`picalb.jets`),
* numerical semigroup combinatorics (:mod:`picalb.semigroups`),
* per-singular-point classification, unipotent dimensions by two
  independent routes, and valuation profiles
  (:mod:`picalb.singularities`),
* the (abelian, torus, unipotent) decomposition of the Picard variety of
  a curve model, with builders for the worked bicuspidal example family
  (:mod:`picalb.picard`),
* tensor bases and dimension formulas for products of cuspidal curves,
  the restriction-injectivity criterion, and the Gysin surjectivity
  thresholds (:mod:`picalb.albanese`).

The rank kernel has a compiled twin selected at import; see
``picalb.kernels.BACKEND``.
"""

from picalb.albanese import (
    UNIT,
    CriterionResult,
    CriterionWitness,
    GysinReport,
    PoleSymbol,
    ThetaBasis,
    check_injectivity_criterion,
    curve_theta_basis,
    gamma_albanese_dim,
    gamma_theta_basis,
    gysin_thresholds,
    product_albanese_dim,
    product_surface_ruling_profiles,
    product_theta,
    ruling_graded_dims,
    section_curve_vectorial_dim,
    section_ruling_count,
    verify_alpha_beta_coincidence,
)
from picalb.errors import (
    CurveAlgebraError,
    DisconnectedError,
    InsufficientTruncationError,
    MissingCountError,
    NonCofiniteError,
    NotMonomialUnibranchError,
    ShapeMismatchError,
    UnstableTruncationError,
    ValidationError,
)
from picalb.jets import BranchJetTuple, Jet, jet_mul, jet_valuation, span_dimension
from picalb.kernels import BACKEND
from picalb.picard import (
    Component,
    CurveModel,
    ModelPoint,
    PicardDecomposition,
    build_dkl,
    build_gamma_alpha,
    gamma_cusp_exponents,
    monomial_point,
    picard_decompose,
    torus_rank,
    unipotent_dim_total,
)
from picalb.semigroups import NumericalSemigroup
from picalb.singularities import (
    PointClass,
    SingularPointData,
    ValuationProfile,
    classify_point,
    unipotent_dim,
    unipotent_dim_jets,
    unipotent_dim_semigroup,
    valuation_profile,
)

__version__ = "0.1.0"

__all__ = [
    "BACKEND",
    "BranchJetTuple",
    "Component",
    "CriterionResult",
    "CriterionWitness",
    "CurveAlgebraError",
    "CurveModel",
    "DisconnectedError",
    "GysinReport",
    "InsufficientTruncationError",
    "Jet",
    "MissingCountError",
    "ModelPoint",
    "NonCofiniteError",
    "NotMonomialUnibranchError",
    "NumericalSemigroup",
    "PicardDecomposition",
    "PointClass",
    "PoleSymbol",
    "ShapeMismatchError",
    "SingularPointData",
    "ThetaBasis",
    "UNIT",
    "UnstableTruncationError",
    "ValidationError",
    "ValuationProfile",
    "build_dkl",
    "build_gamma_alpha",
    "check_injectivity_criterion",
    "classify_point",
    "curve_theta_basis",
    "gamma_albanese_dim",
    "gamma_cusp_exponents",
    "gamma_theta_basis",
    "gysin_thresholds",
    "jet_mul",
    "jet_valuation",
    "monomial_point",
    "picard_decompose",
    "product_albanese_dim",
    "product_surface_ruling_profiles",
    "product_theta",
    "ruling_graded_dims",
    "section_curve_vectorial_dim",
    "section_ruling_count",
    "span_dimension",
    "torus_rank",
    "unipotent_dim",
    "unipotent_dim_jets",
    "unipotent_dim_semigroup",
    "unipotent_dim_total",
    "valuation_profile",
    "verify_alpha_beta_coincidence",
]
