"""
JSON interchange formats (sorted keys, rationals as reduced "p/q" strings)
"""

import json
from fractions import Fraction
from typing import Any, Dict, List, Optional

from .combinatorics import Matching, Verdict
from .complex_core import FaceFamily, SimplicialComplex, from_facets
from .errors import MalformedInputError
from .geometry import Facet, JoinLayout, LinearizeResult
from .linalg import format_rational
from .placement import Placement
from .verify import Certificate, CrossCheckReport, OverlapWitness


def dumps(payload: Any) -> str:
    return json.dumps(payload, sort_keys=True, indent=2) + "\n"


def load_json(path: str) -> Any:
    try:
        with open(path, "r", encoding="utf-8") as fh:
            return json.load(fh)
    except OSError as exc:
        raise MalformedInputError(f"cannot read {path}: {exc}") from exc
    except ValueError as exc:
        raise MalformedInputError(f"{path} is not valid JSON: {exc}") from exc


def parse_rational(value: Any) -> Fraction:
    if isinstance(value, bool) or not isinstance(value, (int, str)):
        raise MalformedInputError(f"expected a rational string, got {value!r}")
    try:
        return Fraction(value.strip() if isinstance(value, str) else value)
    except (ValueError, ZeroDivisionError) as exc:
        raise MalformedInputError(f"malformed rational {value!r}") from exc


def _rationals(values) -> List[str]:
    return [format_rational(v) for v in values]


def _field(data: Dict[str, Any], key: str, kind, what: str):
    if not isinstance(data, dict) or key not in data:
        raise MalformedInputError(f"{what} needs a {key!r} field")
    value = data[key]
    if isinstance(value, bool) and kind is not bool:
        raise MalformedInputError(f"{what} field {key!r} has the wrong type")
    if not isinstance(value, kind):
        raise MalformedInputError(f"{what} field {key!r} has the wrong type")
    return value


def _int_lists(values, what: str) -> List[List[int]]:
    """Vertex lists as written in a document: integers, strictly increasing."""
    if not isinstance(values, list):
        raise MalformedInputError(f"{what} must be a list of vertex lists")
    for entry in values:
        if not isinstance(entry, list) or any(
            isinstance(v, bool) or not isinstance(v, int) for v in entry
        ):
            raise MalformedInputError(f"{what} must be a list of vertex lists")
        if any(a >= b for a, b in zip(entry, entry[1:])):
            raise MalformedInputError(
                f"{what} entry {entry} is not strictly increasing"
            )
    return values


def complex_to_dict(K: SimplicialComplex) -> Dict[str, Any]:
    return {"n": K.n, "facets": [list(f) for f in K.facets]}


def complex_from_dict(data: Any) -> SimplicialComplex:
    n = _field(data, "n", int, "complex")
    facets = _int_lists(_field(data, "facets", list, "complex"), "facets")
    return from_facets(n, facets)


def family_to_dict(F: FaceFamily) -> Dict[str, Any]:
    return {"n": F.n, "sets": [list(s) for s in F.sets]}


def family_from_dict(data: Any) -> FaceFamily:
    n = _field(data, "n", int, "family")
    sets = _int_lists(_field(data, "sets", list, "family"), "sets")
    return FaceFamily(n, tuple(tuple(s) for s in sets))


def matching_to_list(matching: Optional[Matching]) -> Optional[List[List[int]]]:
    if matching is None:
        return None
    return [list(s) for s in matching.sets]


def verdict_to_dict(verdict: Verdict) -> Dict[str, Any]:
    return {
        "decision": verdict.decision.value,
        "n": verdict.n,
        "d": verdict.d,
        "nu": verdict.nu,
        "matching": matching_to_list(verdict.matching),
        "intersecting": verdict.intersecting,
        "full_simplex": verdict.full_simplex,
        "isolated_vertices": list(verdict.isolated_vertices),
    }


def placement_to_dict(P: Placement) -> Dict[str, Any]:
    return P.to_dict()


def placement_from_dict(data: Any) -> Placement:
    dim = _field(data, "dim", int, "placement")
    on_sphere = _field(data, "on_sphere", bool, "placement")
    raw = _field(data, "coords", dict, "placement")
    coords = {}
    for key, values in raw.items():
        try:
            vertex = int(key)
        except ValueError as exc:
            raise MalformedInputError(
                f"placement vertex key {key!r} is not an integer"
            ) from exc
        if not isinstance(values, list):
            raise MalformedInputError(f"coordinates of vertex {key} must be a list")
        coords[vertex] = tuple(parse_rational(v) for v in values)
    return Placement(dim, coords, on_sphere=on_sphere)


def layout_to_dict(layout: JoinLayout) -> Dict[str, Any]:
    return {
        "matching": matching_to_list(layout.matching),
        "blocks": [
            {"set": list(s), "axes": list(axes)}
            for s, axes in layout.subspace_assignment.items()
        ],
        "leftover_axes": {str(v): axis for v, axis in layout.leftover_axes.items()},
    }


def facet_to_dict(facet: Facet) -> Dict[str, Any]:
    return {
        "vertices": list(facet.vertices),
        "normal": _rationals(facet.normal),
        "offset": format_rational(facet.offset),
    }


def certificate_to_dict(certificate: Certificate) -> Dict[str, Any]:
    offending_pair = certificate.offending_pair
    offending_facet = certificate.offending_facet
    return {
        "complex_id": certificate.complex_id,
        "placement_hash": certificate.placement_hash,
        "mode": certificate.mode.value,
        "verdict": "pass" if certificate.passed else "fail",
        "offending_facet": (
            list(offending_facet) if offending_facet is not None else None
        ),
        "offending_pair": (
            [list(f) for f in offending_pair] if offending_pair is not None else None
        ),
        "rank_checks": [
            {
                "face": list(r.face),
                "rank": r.rank,
                "required": r.required,
                "passed": r.passed,
            }
            for r in certificate.rank_checks
        ],
        "pair_checks": [
            {
                "sigma": list(p.sigma),
                "tau": list(p.tau),
                "status": p.status.value,
                "optimum": (
                    format_rational(p.optimum) if p.optimum is not None else None
                ),
                "farkas": _rationals(p.farkas) if p.farkas is not None else None,
            }
            for p in certificate.pair_checks
        ],
    }


def witness_to_dict(witness: OverlapWitness) -> Dict[str, Any]:
    return {
        "sigma": list(witness.sigma),
        "tau": list(witness.tau),
        "lambda": _rationals(witness.lam),
        "mu": _rationals(witness.mu),
        "point": _rationals(witness.point),
    }


def crosscheck_to_dict(report: CrossCheckReport) -> Dict[str, Any]:
    return {
        "trials": report.trials,
        "pair_checks": report.pair_checks,
        "disagreements": [
            {
                "trial": d.trial,
                "kind": d.kind,
                "faces": [list(f) for f in d.faces],
                "exact": d.exact_passed,
                "float": d.float_passed,
            }
            for d in report.disagreements
        ],
    }


def linearize_to_dict(result: LinearizeResult) -> Dict[str, Any]:
    return {
        "status": result.status.value,
        "placement": (
            result.placement.to_dict() if result.placement is not None else None
        ),
        "layout": layout_to_dict(result.layout) if result.layout is not None else None,
        "projection_facet": (
            facet_to_dict(result.projection_facet)
            if result.projection_facet is not None
            else None
        ),
    }
