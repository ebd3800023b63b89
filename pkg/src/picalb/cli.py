"""Command-line front end.

One subcommand per invocation; results are a single UTF-8 JSON document
on stdout, human-readable tables and diagnostics go to stderr. Exit
status 0 on success, 2 on validation or precondition errors (with a
``{"error": code, "detail": message}`` JSON diagnostic on stderr), and
1 on internal invariant breaches, which are always bugs.

Rationals are serialized as "p/q" strings, never floats.
"""

from __future__ import annotations

import argparse
import json
import sys
from typing import List, Optional

from picalb import __version__
from picalb.albanese import (
    gamma_albanese_dim,
    gamma_theta_basis,
    gysin_thresholds,
    product_albanese_dim,
    product_theta,
)
from picalb.errors import CurveAlgebraError, NotMonomialUnibranchError, UsageError
from picalb.modelio import load_model, load_point
from picalb.oracle import run_equivalence_trials
from picalb.picard import build_dkl, build_gamma_alpha, picard_decompose
from picalb.semigroups import NumericalSemigroup
from picalb.singularities import (
    classify_point,
    unipotent_dim_jets,
    unipotent_dim_semigroup,
    valuation_profile,
)

DEFAULT_RANGE_LIMIT = 12


class _Parser(argparse.ArgumentParser):
    def error(self, message):
        raise UsageError(message)


def build_parser() -> argparse.ArgumentParser:
    parser = _Parser(prog="picalb", description=__doc__)
    parser.add_argument("--version", action="version", version=f"picalb {__version__}")
    sub = parser.add_subparsers(dest="command", required=True)

    p = sub.add_parser("semigroup", help="gap set and conductor of a numerical semigroup")
    p.add_argument("generators", type=int, nargs="+", metavar="GEN")

    p = sub.add_parser("local", help="classify a point file and compute its invariants")
    p.add_argument("pointfile")
    p.add_argument("--truncation", type=int, default=None, metavar="M")

    p = sub.add_parser("picard", help="decompose the Picard variety of a curve model file")
    p.add_argument("modelfile")
    p.add_argument("--truncation", type=int, default=None, metavar="M")

    p = sub.add_parser("gamma", help="decomposition for the bicuspidal example family")
    p.add_argument("alpha", type=int, nargs="?", default=None)
    p.add_argument("--range", dest="range_max", type=int, default=None, metavar="AMAX")
    p.add_argument("--max", dest="limit", type=int, default=DEFAULT_RANGE_LIMIT)
    p.add_argument("--truncation", type=int, default=None, metavar="M")

    p = sub.add_parser("dkl", help="decomposition for the product-surface divisor family")
    p.add_argument("alpha", type=int)
    p.add_argument("beta", type=int)
    p.add_argument("k", type=int)
    p.add_argument("l", type=int)
    p.add_argument("--truncation", type=int, default=None, metavar="M")

    p = sub.add_parser("product", help="Albanese dimension of a product of two example curves")
    p.add_argument("alpha", type=int)
    p.add_argument("beta", type=int)

    p = sub.add_parser("gysin", help="surjectivity thresholds for the Gysin map")
    p.add_argument("alpha", type=int, nargs="?", default=None)
    p.add_argument("beta", type=int, nargs="?", default=None)
    p.add_argument("--range", dest="range_max", type=int, default=None, metavar="AMAX")
    p.add_argument("--max", dest="limit", type=int, default=DEFAULT_RANGE_LIMIT)

    p = sub.add_parser("oracle", help="seeded cross-check of the two dimension backends")
    p.add_argument("trials", type=int)
    p.add_argument("--seed", type=int, default=0)

    return parser


def _positive(name: str, value: int) -> int:
    if value < 1:
        raise UsageError(f"{name} must be a positive integer, got {value}")
    return value


def _emit(payload) -> None:
    sys.stdout.write(json.dumps(payload, separators=(",", ":")) + "\n")


def _table(rows: List[dict], columns: List[str]) -> None:
    if not rows:
        return
    widths = [max(len(col), max(len(str(r[col])) for r in rows)) for col in columns]
    header = "  ".join(col.ljust(w) for col, w in zip(columns, widths))
    sys.stderr.write(header + "\n")
    sys.stderr.write("  ".join("-" * w for w in widths) + "\n")
    for r in rows:
        sys.stderr.write("  ".join(str(r[col]).ljust(w) for col, w in zip(columns, widths)) + "\n")


def _check_range(range_max: int, limit: int) -> None:
    if range_max < 0:
        raise UsageError("--range must be nonnegative")
    if range_max > limit:
        raise UsageError(f"--range {range_max} exceeds the configured maximum {limit}")


def _cmd_semigroup(args) -> int:
    semigroup = NumericalSemigroup(_positive("generator", g) for g in args.generators)
    _emit({"gaps": semigroup.gaps(), "conductor": semigroup.conductor()})
    return 0


def _cmd_local(args) -> int:
    point = load_point(args.pointfile)
    cls = classify_point(point)
    if args.truncation is not None:
        dim = unipotent_dim_jets(point, args.truncation)
        method = "jets"
    else:
        try:
            dim = unipotent_dim_semigroup(point)
            method = "semigroup"
        except NotMonomialUnibranchError:
            dim = unipotent_dim_jets(point)
            method = "jets"
    profile = valuation_profile(point, args.truncation)
    _emit(
        {
            "label": point.label,
            "class": str(cls),
            "branches": point.branch_count,
            "unipotent": dim,
            "method": method,
            "stable": True,
            "profile": [[nu, d] for nu, d in profile.orders],
            "extrapolated": profile.extrapolated,
        }
    )
    return 0


def _decomposition_json(dec) -> dict:
    return {
        "abelian": dec.abelian_dim,
        "torus": dec.torus_rank,
        "unipotent": dec.unipotent_dim,
        "total": dec.total,
    }


def _cmd_picard(args) -> int:
    model = load_model(args.modelfile)
    _emit(_decomposition_json(picard_decompose(model, args.truncation)))
    return 0


def _gamma_row(alpha: int, truncation) -> dict:
    dec = picard_decompose(build_gamma_alpha(alpha, truncation))
    return {"alpha": alpha, **_decomposition_json(dec)}


def _cmd_gamma(args) -> int:
    if (args.alpha is None) == (args.range_max is None):
        raise UsageError("give exactly one of a positive ALPHA or --range AMAX")
    if args.range_max is not None:
        _check_range(args.range_max, args.limit)
        rows = [_gamma_row(a, args.truncation) for a in range(1, args.range_max + 1)]
        _table(rows, ["alpha", "abelian", "torus", "unipotent", "total"])
        _emit(rows)
        return 0
    _emit(_gamma_row(_positive("alpha", args.alpha), args.truncation))
    return 0


def _cmd_dkl(args) -> int:
    for name in ("alpha", "beta", "k", "l"):
        _positive(name, getattr(args, name))
    model = build_dkl(args.alpha, args.beta, args.k, args.l, args.truncation)
    dec = picard_decompose(model, args.truncation)
    _emit(
        {
            "alpha": args.alpha,
            "beta": args.beta,
            "k": args.k,
            "l": args.l,
            **_decomposition_json(dec),
        }
    )
    return 0


def _cmd_product(args) -> int:
    alpha = _positive("alpha", args.alpha)
    beta = _positive("beta", args.beta)
    dim_a = gamma_albanese_dim(alpha)
    dim_b = gamma_albanese_dim(beta)
    basis = product_theta(gamma_theta_basis(alpha), gamma_theta_basis(beta))
    dim = product_albanese_dim(dim_a, dim_b)
    if len(basis) != dim:
        raise AssertionError(f"theta basis size {len(basis)} != product dimension {dim}")
    _emit(
        {
            "alpha": alpha,
            "beta": beta,
            "dim_alpha": dim_a,
            "dim_beta": dim_b,
            "product_dim": dim,
            "theta_cardinality": len(basis),
        }
    )
    return 0


def _cmd_gysin(args) -> int:
    if args.range_max is not None:
        if args.alpha is not None or args.beta is not None:
            raise UsageError("--range replaces the positional ALPHA BETA arguments")
        _check_range(args.range_max, args.limit)
        rows = [gysin_thresholds(a, a).to_json() for a in range(1, args.range_max + 1)]
        _table(rows, ["alpha", "beta", "N_low", "N_suff", "N0", "N1", "exact", "esv_bound"])
        _emit(rows)
        return 0
    if args.alpha is None or args.beta is None:
        raise UsageError("give ALPHA and BETA, or --range AMAX")
    report = gysin_thresholds(_positive("alpha", args.alpha), _positive("beta", args.beta))
    _emit(report.to_json())
    return 0


def _cmd_oracle(args) -> int:
    result = run_equivalence_trials(_positive("trials", args.trials), args.seed)
    _emit(result)
    # Disagreement between the two backends is an internal bug, not bad input.
    return 0 if result["all_agree"] else 1


_HANDLERS = {
    "semigroup": _cmd_semigroup,
    "local": _cmd_local,
    "picard": _cmd_picard,
    "gamma": _cmd_gamma,
    "dkl": _cmd_dkl,
    "product": _cmd_product,
    "gysin": _cmd_gysin,
    "oracle": _cmd_oracle,
}


def main(argv: Optional[List[str]] = None) -> int:
    parser = build_parser()
    try:
        args = parser.parse_args(argv)
        return _HANDLERS[args.command](args)
    except CurveAlgebraError as exc:
        sys.stderr.write(json.dumps({"error": exc.code, "detail": str(exc)}) + "\n")
        return 2


if __name__ == "__main__":
    sys.exit(main())
