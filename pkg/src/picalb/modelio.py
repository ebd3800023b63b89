"""JSON encoding of curve models and point files.

The curve-model document looks like::

    {
      "components": [{"id": "C", "genus": 0}],
      "points": [
        {"label": "0", "class": "param",
         "branches": [[[0, 0, 1], ["0", "0", "0", "1/1"]]],
         "incidence": ["C"]},
        {"label": "n", "class": "ordinary-2", "incidence": ["C", "C"]}
      ],
      "connected": true
    }

``branches[i][j]`` is the coefficient array of coordinate ``j`` on
branch ``i``; all arrays share one length, the truncation order.
Rational coefficients are encoded as "p/q" strings (plain integers are
accepted too); floats are rejected. A point file for the ``local``
command is a single point object without the incidence field.
"""

from __future__ import annotations

import json
import re
from fractions import Fraction
from typing import Any, Dict, List

from picalb.errors import ValidationError
from picalb.jets import Jet
from picalb.picard import Component, CurveModel, ModelPoint
from picalb.singularities import PointClass, SingularPointData

_ORDINARY_RE = re.compile(r"^ordinary-(\d+)$")


def fraction_to_str(value: Fraction) -> str:
    return f"{value.numerator}/{value.denominator}"


def parse_coefficient(value: Any, where: str) -> Fraction:
    if isinstance(value, bool) or isinstance(value, float):
        raise ValidationError(f"{where}: coefficients must be integers or 'p/q' strings, got {value!r}")
    if isinstance(value, int):
        return Fraction(value)
    if isinstance(value, str):
        try:
            return Fraction(value)
        except (ValueError, ZeroDivisionError) as exc:
            raise ValidationError(f"{where}: bad rational {value!r} ({exc})") from None
    raise ValidationError(f"{where}: coefficients must be integers or 'p/q' strings, got {value!r}")


def _require(cond: bool, message: str):
    if not cond:
        raise ValidationError(message)


def _branches_from_json(raw: Any, label: str, where: str) -> SingularPointData:
    _require(isinstance(raw, list) and raw, f"{where}: 'branches' must be a nonempty array")
    lengths = set()
    parsed: List[List[List[Fraction]]] = []
    for b, branch in enumerate(raw):
        _require(isinstance(branch, list) and branch, f"{where}: branch {b} must be a nonempty array")
        coords = []
        for c, arr in enumerate(branch):
            _require(
                isinstance(arr, list) and arr,
                f"{where}: branch {b} coordinate {c} must be a nonempty coefficient array",
            )
            coords.append([parse_coefficient(v, f"{where}: branch {b} coordinate {c}") for v in arr])
            lengths.add(len(arr))
        parsed.append(coords)
    _require(len(lengths) == 1, f"{where}: all coefficient arrays must share one length, got {sorted(lengths)}")
    try:
        return SingularPointData(
            label,
            tuple(tuple(Jet.from_coeffs(arr) for arr in coords) for coords in parsed),
        )
    except ValueError as exc:
        raise ValidationError(str(exc)) from None


def point_from_json(raw: Any) -> ModelPoint:
    _require(isinstance(raw, dict), "point entries must be objects")
    label = raw.get("label")
    _require(isinstance(label, str) and label, "every point needs a nonempty string 'label'")
    where = f"point {label!r}"
    inc = raw.get("incidence")
    _require(
        isinstance(inc, list) and inc and all(isinstance(i, str) for i in inc),
        f"{where}: 'incidence' must be a nonempty array of component ids",
    )
    incidence = tuple(inc)
    cls = raw.get("class")
    if cls is None and "branches" in raw:
        cls = "param"
    _require(cls is not None, f"{where}: missing 'class' (or 'branches')")
    if cls == "param":
        data = _branches_from_json(raw.get("branches"), label, where)
        try:
            return ModelPoint(label=label, incidence=incidence, data=data)
        except ValueError as exc:
            raise ValidationError(str(exc)) from None
    match = _ORDINARY_RE.match(cls) if isinstance(cls, str) else None
    _require(match is not None, f"{where}: unknown class {cls!r} (expected 'param' or 'ordinary-m')")
    m = int(match.group(1))
    _require(m >= 2, f"{where}: ordinary points have at least 2 branches")
    try:
        return ModelPoint(label=label, incidence=incidence, declared=PointClass.ordinary(m))
    except ValueError as exc:
        raise ValidationError(str(exc)) from None


def model_from_json(raw: Any) -> CurveModel:
    _require(isinstance(raw, dict), "the model document must be a JSON object")
    comps_raw = raw.get("components")
    _require(isinstance(comps_raw, list) and comps_raw, "'components' must be a nonempty array")
    components = []
    for entry in comps_raw:
        _require(isinstance(entry, dict), "component entries must be objects")
        cid = entry.get("id")
        genus = entry.get("genus")
        _require(isinstance(cid, str) and cid, "every component needs a nonempty string 'id'")
        _require(
            isinstance(genus, int) and not isinstance(genus, bool) and genus >= 0,
            f"component {cid!r}: 'genus' must be a nonnegative integer",
        )
        components.append(Component(cid, genus))
    points_raw = raw.get("points", [])
    _require(isinstance(points_raw, list), "'points' must be an array")
    points = [point_from_json(p) for p in points_raw]
    connected = raw.get("connected")
    _require(isinstance(connected, bool), "'connected' must be a boolean")
    try:
        return CurveModel.build(components, points, connected)
    except ValueError as exc:
        raise ValidationError(str(exc)) from None


def model_to_json(model: CurveModel) -> Dict[str, Any]:
    points = []
    for p in model.points:
        entry: Dict[str, Any] = {"label": p.label}
        if p.data is not None:
            entry["class"] = "param"
            entry["branches"] = [
                [[fraction_to_str(c) for c in jet.coeffs] for jet in branch]
                for branch in p.data.branches
            ]
        elif p.declared is not None and p.declared.is_ordinary:
            entry["class"] = f"ordinary-{p.declared.branches}"
        else:
            raise ValidationError(
                f"point {p.label!r}: declared general points have no JSON encoding"
            )
        entry["incidence"] = list(p.incidence)
        points.append(entry)
    return {
        "components": [{"id": c.id, "genus": c.genus} for c in model.components],
        "points": points,
        "connected": model.connected,
    }


def load_json(path: str) -> Any:
    try:
        with open(path, "r", encoding="utf-8") as fh:
            return json.load(fh)
    except OSError as exc:
        raise ValidationError(f"cannot read {path}: {exc}") from None
    except json.JSONDecodeError as exc:
        raise ValidationError(f"{path} is not valid JSON: {exc}") from None


def load_model(path: str) -> CurveModel:
    return model_from_json(load_json(path))


def load_point(path: str) -> SingularPointData:
    """Read a standalone point file: a point object without incidence."""
    raw = load_json(path)
    _require(isinstance(raw, dict), "the point document must be a JSON object")
    label = raw.get("label", "p")
    _require(isinstance(label, str) and label, "'label' must be a nonempty string")
    cls = raw.get("class", "param")
    _require(cls == "param", "a point file must carry branch parametrizations ('class': 'param')")
    return _branches_from_json(raw.get("branches"), label, f"point {label!r}")
