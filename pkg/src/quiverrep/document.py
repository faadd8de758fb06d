"""JSON document formats for quivers, representations, subspace systems and
single operators.

A representation document is an object with keys "quiver" (vertices plus
arrows with name/src/dst), "dims" (vertex -> nonnegative integer) and "maps"
(arrow -> row-major matrix whose entries are [re, im] pairs).  An optional
"meta" object carries builder provenance (model name, params, seed,
finite_truncation).  Parsers reject malformed input with positional messages.
"""

from __future__ import annotations

import json
from typing import Any

import numpy as np

from .errors import ValidationError
from .quiver import Arrow, Quiver
from .rep import Representation
from .subspaces import SubspaceSystem, make_system
from .numerics import DEFAULT_TOL, Tolerances


def matrix_to_json(matrix: np.ndarray) -> list:
    return [[[float(z.real), float(z.imag)] for z in row] for row in np.asarray(matrix)]


def matrix_from_json(data: Any, rows: int, cols: int, where: str) -> np.ndarray:
    if not isinstance(data, list):
        raise ValidationError(f"{where}: expected a list of rows")
    if len(data) != rows:
        raise ValidationError(f"{where}: expected {rows} rows, got {len(data)}")
    out = np.zeros((rows, cols), dtype=complex)
    for i, row in enumerate(data):
        if not isinstance(row, list) or len(row) != cols:
            raise ValidationError(f"{where}, row {i + 1}: expected {cols} entries")
        for j, entry in enumerate(row):
            if (not isinstance(entry, list) or len(entry) != 2
                    or not all(isinstance(x, (int, float)) for x in entry)):
                raise ValidationError(
                    f"{where}, row {i + 1}, column {j + 1}: entries are [re, im] pairs"
                )
            out[i, j] = complex(entry[0], entry[1])
    return out


def quiver_to_json(quiver: Quiver) -> dict:
    return {
        "vertices": list(quiver.vertices),
        "arrows": [{"name": a.name, "src": a.src, "dst": a.dst} for a in quiver.arrows],
    }


def quiver_from_json(data: Any) -> Quiver:
    if not isinstance(data, dict):
        raise ValidationError("quiver: expected an object")
    vertices = data.get("vertices")
    arrows = data.get("arrows")
    if not isinstance(vertices, list) or not all(isinstance(v, str) for v in vertices):
        raise ValidationError("quiver.vertices: expected a list of strings")
    if not isinstance(arrows, list):
        raise ValidationError("quiver.arrows: expected a list")
    parsed = []
    for i, a in enumerate(arrows):
        if (not isinstance(a, dict)
                or not all(isinstance(a.get(k), str) for k in ("name", "src", "dst"))):
            raise ValidationError(
                f"quiver.arrows[{i}]: expected an object with string name/src/dst"
            )
        parsed.append(Arrow(a["name"], a["src"], a["dst"]))
    return Quiver(tuple(vertices), tuple(parsed))


def rep_to_json(rep: Representation, meta: dict | None = None) -> dict:
    doc = {
        "quiver": quiver_to_json(rep.quiver),
        "dims": dict(rep.dims),
        "maps": {name: matrix_to_json(m) for name, m in rep.maps.items()},
    }
    if meta:
        doc["meta"] = meta
    return doc


def rep_from_json(data: Any) -> tuple[Representation, dict]:
    """Parse a representation document; returns (representation, meta)."""
    if not isinstance(data, dict):
        raise ValidationError("document: expected a JSON object")
    for key in ("quiver", "dims", "maps"):
        if key not in data:
            raise ValidationError(f"document: missing key {key!r}")
    quiver = quiver_from_json(data["quiver"])
    dims_raw = data["dims"]
    if not isinstance(dims_raw, dict):
        raise ValidationError("dims: expected an object")
    dims = {}
    for v, d in dims_raw.items():
        if not isinstance(d, int) or isinstance(d, bool) or d < 0:
            raise ValidationError(f"dims[{v!r}]: expected a nonnegative integer")
        dims[v] = d
    maps_raw = data["maps"]
    if not isinstance(maps_raw, dict):
        raise ValidationError("maps: expected an object")
    maps = {}
    for a in quiver.arrows:
        if a.name not in maps_raw:
            raise ValidationError(f"maps: missing matrix for arrow {a.name!r}")
        rows = dims.get(a.dst)
        cols = dims.get(a.src)
        if rows is None or cols is None:
            missing = a.dst if rows is None else a.src
            raise ValidationError(f"dims: missing vertex {missing!r}")
        maps[a.name] = matrix_from_json(maps_raw[a.name], rows, cols, f"maps[{a.name!r}]")
    meta = data.get("meta") or {}
    if not isinstance(meta, dict):
        raise ValidationError("meta: expected an object")
    return Representation(quiver, dims, maps), meta


def system_to_json(system: SubspaceSystem, meta: dict | None = None) -> dict:
    doc = {
        "ambient_dim": system.ambient_dim,
        "inclusions": [matrix_to_json(inc) for inc in system.inclusions],
    }
    if meta:
        doc["meta"] = meta
    return doc


def system_from_json(data: Any, tol: Tolerances = DEFAULT_TOL) -> tuple[SubspaceSystem, dict]:
    if not isinstance(data, dict):
        raise ValidationError("document: expected a JSON object")
    if "ambient_dim" not in data or "inclusions" not in data:
        raise ValidationError("system document needs keys 'ambient_dim' and 'inclusions'")
    d = data["ambient_dim"]
    if not isinstance(d, int) or isinstance(d, bool) or d < 0:
        raise ValidationError("ambient_dim: expected a nonnegative integer")
    raw = data["inclusions"]
    if not isinstance(raw, list):
        raise ValidationError("inclusions: expected a list of matrices")
    mats = []
    for i, inc in enumerate(raw):
        if not isinstance(inc, list):
            raise ValidationError(f"inclusions[{i}]: expected a list of rows")
        cols = len(inc[0]) if inc else 0
        mats.append(matrix_from_json(inc, d, cols, f"inclusions[{i}]"))
    meta = data.get("meta") or {}
    return make_system(d, mats, tol), meta


def operator_from_json(data: Any) -> np.ndarray:
    """Parse a single-operator document: an object with a square "matrix"."""
    if not isinstance(data, dict) or "matrix" not in data:
        raise ValidationError("operator document needs a 'matrix' key")
    raw = data["matrix"]
    if not isinstance(raw, list) or not raw:
        raise ValidationError("matrix: expected a nonempty list of rows")
    n = len(raw)
    return matrix_from_json(raw, n, n, "matrix")


def operator_to_json(matrix: np.ndarray) -> dict:
    return {"matrix": matrix_to_json(matrix)}


def detect_kind(data: Any) -> str:
    """Classify a parsed JSON object as representation, system or operator."""
    if isinstance(data, dict):
        if "quiver" in data:
            return "representation"
        if "inclusions" in data:
            return "system"
        if "matrix" in data:
            return "operator"
    raise ValidationError(
        "unrecognized document: expected representation (quiver/dims/maps), "
        "system (ambient_dim/inclusions) or operator (matrix)"
    )


def dumps(doc: dict) -> str:
    return json.dumps(doc, indent=2, sort_keys=True)
