"""Graticule construction and flat-file export.

A graticule is the drawn grid itself: straight meridian rays and
concentric parallel arcs over a latitude/longitude window, with
sexagesimal edge labels.  Exporters emit deterministic SVG 1.1 and
GeoJSON text, and a small CSV reader ingests point lists for batch
projection.
"""

from __future__ import annotations

import json
import math
from dataclasses import dataclass
from xml.sax.saxutils import escape

from .angles import RAD_PER_DEG, DmsParseError, DmsRangeError, dms_format, dms_parse
from .params import ConicParams
from .projection import GeoPoint, PlanePoint, ProjectionDomainError, apex_arc, forward

__all__ = [
    "EmptyGeometryError",
    "Graticule",
    "MeridianLine",
    "ParallelArc",
    "PointsCsvError",
    "RegionWindow",
    "SvgStyle",
    "build_graticule",
    "read_points_csv",
    "write_geojson",
    "write_svg",
]

_GRID_EPS = 1e-9


class EmptyGeometryError(ValueError):
    """Nothing to export."""


class PointsCsvError(ValueError):
    """A point file row could not be read; carries the 1-based line number."""

    def __init__(self, line: int, message: str):
        self.line = line
        super().__init__(f"line {line}: {message}")


@dataclass(frozen=True)
class RegionWindow:
    """Latitude/longitude box with grid steps, all in degrees.

    Grid lines start at the minima; a span that is not an exact multiple
    of its step is truncated at the last line inside the window.
    """

    lat_min: float
    lat_max: float
    lon_min: float
    lon_max: float
    lat_step: float = 1.0
    lon_step: float = 1.0

    def __post_init__(self) -> None:
        if not (self.lat_min < self.lat_max and self.lon_min < self.lon_max):
            raise ValueError("window must have positive extent on both axes")
        if not (self.lat_step > 0.0 and self.lon_step > 0.0):
            raise ValueError("window steps must be positive")


@dataclass(frozen=True)
class MeridianLine:
    """Straight meridian image: two endpoints suffice."""

    lon: float
    lat_run: tuple[float, float]
    points: tuple[PlanePoint, PlanePoint]


@dataclass(frozen=True)
class ParallelArc:
    """Parallel image: a circular arc about the apex, plus its polyline."""

    lat: float
    center: PlanePoint
    radius: float
    theta_start: float
    theta_end: float
    lons: tuple[float, ...]
    points: tuple[PlanePoint, ...]


@dataclass(frozen=True)
class Graticule:
    meridians: tuple[MeridianLine, ...]
    parallels: tuple[ParallelArc, ...]
    labels: tuple[tuple[PlanePoint, str], ...]


def _grid_values(lo: float, hi: float, step: float) -> list[float]:
    values = []
    k = 0
    while True:
        v = lo + k * step
        if v > hi + _GRID_EPS:
            break
        values.append(min(v, hi))
        k += 1
    return values


def build_graticule(
    params: ConicParams,
    window: RegionWindow,
    arc_segments_per_degree: int = 4,
) -> Graticule:
    """Assemble meridians, parallel arcs and edge labels for a window.

    Parallel arcs are sampled at arc_segments_per_degree chords per
    degree of longitude (the default keeps the chord sagitta below 1e-4
    map units at mid-latitude radii).  Labels sit at the south and west
    window edges in sexagesimal minute precision.
    """
    if arc_segments_per_degree < 1:
        raise ValueError("arc_segments_per_degree must be >= 1")
    half_span = max(
        abs(window.lon_min - params.central_meridian),
        abs(window.lon_max - params.central_meridian),
    )
    if RAD_PER_DEG * params.cone_constant * half_span >= math.pi:
        raise ProjectionDomainError(
            "window exceeds the cone's longitude span (wraps past the slit)"
        )
    lats = _grid_values(window.lat_min, window.lat_max, window.lat_step)
    lons = _grid_values(window.lon_min, window.lon_max, window.lon_step)

    meridians = tuple(
        MeridianLine(
            lon=lon,
            lat_run=(lats[0], lats[-1]),
            points=(
                forward(GeoPoint(lats[0], lon), params),
                forward(GeoPoint(lats[-1], lon), params),
            ),
        )
        for lon in lons
    )

    span = window.lon_max - window.lon_min
    n_seg = max(1, math.ceil(arc_segments_per_degree * span - _GRID_EPS))
    arc_lons = [
        window.lon_min + i * (span / n_seg) for i in range(n_seg)
    ] + [window.lon_max]

    def plane_angle(lon: float) -> float:
        return RAD_PER_DEG * params.cone_constant * (lon - params.central_meridian)

    parallels = []
    for lat in lats:
        pts = tuple(forward(GeoPoint(lat, lon), params) for lon in arc_lons)
        parallels.append(
            ParallelArc(
                lat=lat,
                center=PlanePoint(0.0, 0.0),
                radius=params.degree_length * apex_arc(params, lat),
                theta_start=plane_angle(window.lon_min),
                theta_end=plane_angle(window.lon_max),
                lons=tuple(arc_lons),
                points=pts,
            )
        )

    labels = [
        (parallel.points[0], dms_format(parallel.lat, "minutes"))
        for parallel in parallels
    ]
    labels.extend(
        (meridian.points[0], dms_format(meridian.lon, "minutes"))
        for meridian in meridians
    )
    return Graticule(
        meridians=meridians, parallels=tuple(parallels), labels=tuple(labels)
    )


@dataclass(frozen=True)
class SvgStyle:
    stroke: str = "#444444"
    stroke_width: float = 0.05
    label_color: str = "#222222"
    font_size: float = 0.6


def _fmt(value: float) -> str:
    # Fixed 6-decimal output; normalize negative zero for stable bytes.
    out = f"{value:.6f}"
    return "0.000000" if out == "-0.000000" else out


def write_svg(graticule: Graticule, style: SvgStyle | None = None) -> str:
    """Serialize to SVG 1.1 text, byte-identical for identical inputs.

    The y axis is flipped at export so north points up on screen; the
    viewBox bounds all geometry plus a 2 percent margin.  Element order
    is fixed: parallels south to north, meridians west to east, labels.
    """
    if style is None:
        style = SvgStyle()
    if not graticule.meridians and not graticule.parallels:
        raise EmptyGeometryError("graticule has no meridians and no parallels")

    def flip(pt: PlanePoint) -> tuple[float, float]:
        return pt.x, -pt.y

    anchors = [flip(p) for arc in graticule.parallels for p in arc.points]
    anchors += [flip(p) for m in graticule.meridians for p in m.points]
    anchors += [flip(p) for p, _ in graticule.labels]
    xs = [p[0] for p in anchors]
    ys = [p[1] for p in anchors]
    width = max(xs) - min(xs)
    height = max(ys) - min(ys)
    margin = 0.02 * max(width, height)
    view = (
        min(xs) - margin,
        min(ys) - margin,
        width + 2.0 * margin,
        height + 2.0 * margin,
    )

    def path(points) -> str:
        start = flip(points[0])
        d = f"M {_fmt(start[0])},{_fmt(start[1])}"
        for pt in points[1:]:
            x, y = flip(pt)
            d += f" L {_fmt(x)},{_fmt(y)}"
        return (
            f'<path d="{d}" fill="none" stroke="{style.stroke}" '
            f'stroke-width="{_fmt(style.stroke_width)}"/>'
        )

    lines = [
        '<?xml version="1.0" encoding="UTF-8"?>',
        "<!-- y axis flipped at export: plane north maps to smaller svg y (up) -->",
        (
            '<svg xmlns="http://www.w3.org/2000/svg" version="1.1" '
            f'viewBox="{_fmt(view[0])} {_fmt(view[1])} {_fmt(view[2])} {_fmt(view[3])}">'
        ),
    ]
    lines.extend(path(arc.points) for arc in graticule.parallels)
    lines.extend(path(m.points) for m in graticule.meridians)
    for anchor, text in graticule.labels:
        x, y = flip(anchor)
        lines.append(
            f'<text x="{_fmt(x)}" y="{_fmt(y)}" font-size="{_fmt(style.font_size)}" '
            f'fill="{style.label_color}">{escape(text)}</text>'
        )
    lines.append("</svg>")
    return "\n".join(lines) + "\n"


def _round9(value: float) -> float:
    rounded = round(value, 9)
    return 0.0 if rounded == 0.0 else rounded


def write_geojson(
    graticule: Graticule, params: ConicParams, mode: str = "geographic"
) -> str:
    """Serialize to a GeoJSON FeatureCollection of LineStrings.

    "geographic" emits longitude/latitude vertices for overlay in
    standard GIS tools; "projected" emits plane coordinates and a
    top-level note naming the projection parameters, warning consumers
    that the coordinates are not geographic.  Coordinates carry nine
    decimals so re-inverting projected vertices reproduces the
    geographic ones well within 1e-7 degrees.
    """
    if mode not in ("geographic", "projected"):
        raise ValueError(f"unknown mode {mode!r}; use 'geographic' or 'projected'")

    features = []
    for arc in graticule.parallels:
        if mode == "geographic":
            coords = [[_round9(lon), _round9(arc.lat)] for lon in arc.lons]
        else:
            coords = [[_round9(p.x), _round9(p.y)] for p in arc.points]
        features.append(
            {
                "type": "Feature",
                "properties": {"kind": "parallel", "lat": _round9(arc.lat)},
                "geometry": {"type": "LineString", "coordinates": coords},
            }
        )
    for meridian in graticule.meridians:
        if mode == "geographic":
            coords = [
                [_round9(meridian.lon), _round9(lat)] for lat in meridian.lat_run
            ]
        else:
            coords = [[_round9(p.x), _round9(p.y)] for p in meridian.points]
        features.append(
            {
                "type": "Feature",
                "properties": {"kind": "meridian", "lon": _round9(meridian.lon)},
                "geometry": {"type": "LineString", "coordinates": coords},
            }
        )
    collection: dict = {"type": "FeatureCollection"}
    if mode == "projected":
        collection["note"] = {
            "projection": "delisle equidistant conic",
            "cone_constant": params.cone_constant,
            "apex_offset_deg": params.apex_offset,
            "degree_length": params.degree_length,
            "central_meridian_deg": params.central_meridian,
            "south_cone": params.south_cone,
            "warning": "coordinates are projected map units, not longitude/latitude",
        }
    collection["features"] = features
    return json.dumps(collection, separators=(",", ":")) + "\n"


def read_points_csv(text: str) -> list[GeoPoint]:
    """Read a "lat,lon" CSV into points, angles decimal or sexagesimal.

    Blank lines are skipped anywhere; errors carry the offending 1-based
    line number and, for bad values, the column name.
    """
    points: list[GeoPoint] = []
    header_seen = False
    for lineno, raw in enumerate(text.splitlines(), start=1):
        line = raw.strip()
        if not line:
            continue
        if not header_seen:
            names = [c.strip().lower() for c in line.split(",")]
            if names != ["lat", "lon"]:
                raise PointsCsvError(lineno, f"expected header 'lat,lon', got {line!r}")
            header_seen = True
            continue
        cells = [c.strip() for c in line.split(",")]
        if len(cells) != 2:
            raise PointsCsvError(
                lineno, f"expected 2 columns (lat,lon), got {len(cells)}"
            )
        values = []
        for column, cell in zip(("lat", "lon"), cells):
            try:
                values.append(dms_parse(cell))
            except (DmsParseError, DmsRangeError) as exc:
                raise PointsCsvError(lineno, f"column {column}: {exc}") from exc
        try:
            points.append(GeoPoint(values[0], values[1]))
        except ValueError as exc:
            raise PointsCsvError(lineno, str(exc)) from exc
    if not header_seen:
        raise PointsCsvError(1, "missing header 'lat,lon'")
    return points
