"""Stable file formats: JSON for point sets and polygons, CSV for embedded
coordinates and X-ray tables. All JSON carries a format tag; identical
inputs produce byte-identical files.
"""

from __future__ import annotations

import json
from dataclasses import dataclass
from pathlib import Path

import numpy as np

from .construct import Homothety
from .cyclo import CycInt
from .geometry import Direction, DirectionSet, Polygon, XRayTable
from .modelset import ModelSetSpec, PointSet

FORMAT = "quasipoly/1"


def _dump(data: dict, path) -> None:
    Path(path).write_text(json.dumps(data, indent=2) + "\n")


def _load(path) -> dict:
    data = json.loads(Path(path).read_text())
    if data.get("format") != FORMAT:
        raise ValueError(f"{path}: missing or unsupported format tag, expected {FORMAT!r}")
    return data


def point_set_to_dict(ps: PointSet, label: str | None = None) -> dict:
    data = {
        "format": FORMAT,
        "kind": "pointset",
        "spec": ps.spec.to_dict(),
        "points": [list(z.coeffs) for z in ps.points],
    }
    if label:
        data["label"] = label
    return data


def point_set_from_dict(data: dict) -> PointSet:
    spec = ModelSetSpec.from_dict(data["spec"])
    points = tuple(CycInt(spec.n, coeffs) for coeffs in data["points"])
    ps = PointSet(spec=spec, points=points)
    ps.validate()
    return ps


def save_point_set(ps: PointSet, path, label: str | None = None) -> None:
    _dump(point_set_to_dict(ps, label), path)


def load_point_set(path) -> PointSet:
    return point_set_from_dict(_load(path))


@dataclass
class PolygonFile:
    """Contents of a polygon JSON file."""

    polygon: Polygon
    directions: DirectionSet
    homothety: Homothety | None = None
    spec: ModelSetSpec | None = None
    label: str | None = None


def polygon_to_dict(pf: PolygonFile) -> dict:
    data = {
        "format": FORMAT,
        "kind": "polygon",
        "n": pf.polygon.n,
        "vertices": [list(v.coeffs) for v in pf.polygon.vertices],
        "directions": [list(d.rep.coeffs) for d in pf.directions],
        "homothety": pf.homothety.to_dict() if pf.homothety else None,
        "spec": pf.spec.to_dict() if pf.spec else None,
    }
    if pf.label:
        data["label"] = pf.label
    return data


def polygon_from_dict(data: dict) -> PolygonFile:
    n = int(data["n"])
    polygon = Polygon([CycInt(n, coeffs) for coeffs in data["vertices"]])
    directions = DirectionSet(
        Direction(CycInt(n, coeffs)) for coeffs in data["directions"]
    )
    homothety = Homothety.from_dict(data["homothety"]) if data.get("homothety") else None
    spec = ModelSetSpec.from_dict(data["spec"]) if data.get("spec") else None
    return PolygonFile(
        polygon=polygon,
        directions=directions,
        homothety=homothety,
        spec=spec,
        label=data.get("label"),
    )


def save_polygon(pf: PolygonFile, path) -> None:
    _dump(polygon_to_dict(pf), path)


def load_polygon(path) -> PolygonFile:
    return polygon_from_dict(_load(path))


def write_embedded_csv(points, path) -> None:
    """Embedded float coordinates as x,y rows (full round-trip precision)."""
    if isinstance(points, PointSet):
        xy = points.embedded()
    else:
        xy = np.asarray(points, dtype=float)
    lines = ["x,y"]
    lines.extend(f"{repr(float(x))},{repr(float(y))}" for x, y in xy)
    Path(path).write_text("\n".join(lines) + "\n")


def write_xray_csv(table: XRayTable, path) -> None:
    """X-ray table as `line_key_coeffs;count` rows, sorted by key."""
    lines = [
        ",".join(str(c) for c in key.coeffs) + f";{count}"
        for key, count in table.sorted_items()
    ]
    Path(path).write_text("\n".join(lines) + "\n")
