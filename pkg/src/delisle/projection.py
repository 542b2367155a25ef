"""Forward and inverse point projection.

Meridians map to straight rays through the cone apex and parallels to
concentric circular arcs spaced one degree-length per degree of
latitude, so the map is faithful along every meridian.  The apex sits at
the plane origin and the central meridian runs down the negative y axis;
the plane angle is measured as atan2(x, -y) and grows eastward.  For a
south-opening cone the picture is mirrored about the x axis so north
stays up.
"""

from __future__ import annotations

import math
from dataclasses import dataclass

from .angles import RAD_PER_DEG, to_radians
from .params import ConicParams

__all__ = [
    "GeoPoint",
    "PlanePoint",
    "ProjectionDomainError",
    "apex_arc",
    "forward",
    "inverse",
    "parallel_scale_factor",
]

# Tolerated round-trip overshoot past the poles before inverse() rejects
# a plane point as non-geographic.
_POLE_SLACK = 1e-9


class ProjectionDomainError(ValueError):
    """Input outside the geometric domain of the cone."""


@dataclass(frozen=True)
class GeoPoint:
    """Latitude/longitude in degrees; longitudes are left unwrapped."""

    lat: float
    lon: float

    def __post_init__(self) -> None:
        if not (math.isfinite(self.lat) and math.isfinite(self.lon)):
            raise ValueError(f"non-finite coordinates ({self.lat}, {self.lon})")
        if not -90.0 <= self.lat <= 90.0:
            raise ValueError(f"latitude {self.lat} outside [-90, 90]")


@dataclass(frozen=True)
class PlanePoint:
    """Projected map coordinates in degree-length units, east and north positive."""

    x: float
    y: float


def apex_arc(params: ConicParams, lat: float) -> float:
    """Meridian-arc degrees between the apex and the parallel at lat."""
    if params.south_cone:
        return 90.0 + lat + params.apex_offset
    return 90.0 - lat + params.apex_offset


def forward(point: GeoPoint, params: ConicParams) -> PlanePoint:
    """Project a geographic point onto the plane.

    The parallel through the point maps to the circle of radius
    degree_length x (arc from the apex); the meridian maps to the ray at
    plane angle cone_constant x (longitude offset from the central
    meridian).
    """
    arc = apex_arc(params, point.lat)
    if arc <= 0.0:
        raise ProjectionDomainError(
            f"latitude {point.lat} lies at or beyond the cone apex"
        )
    radius = params.degree_length * arc
    theta = RAD_PER_DEG * params.cone_constant * (point.lon - params.central_meridian)
    x = radius * math.sin(theta)
    y = -radius * math.cos(theta)
    if params.south_cone:
        y = -y
    return PlanePoint(x, y)


def inverse(point: PlanePoint, params: ConicParams) -> GeoPoint:
    """Invert the projection algebraically.

    Rejects the apex itself (no latitude there), points whose plane angle
    reaches the cone's slit, and points that do not correspond to any
    latitude in [-90, 90].
    """
    y = -point.y if params.south_cone else point.y
    radius = math.hypot(point.x, y)
    if radius == 0.0:
        raise ProjectionDomainError("the apex has no defined geographic position")
    theta = math.atan2(point.x, -y)
    if abs(theta) >= math.pi:
        raise ProjectionDomainError("plane angle wraps past the cone's slit")
    arc = radius / params.degree_length
    if params.south_cone:
        lat = arc - 90.0 - params.apex_offset
    else:
        lat = 90.0 + params.apex_offset - arc
    if lat > 90.0:
        if lat > 90.0 + _POLE_SLACK:
            raise ProjectionDomainError(
                f"plane point lies between the pole image and the apex (lat {lat:.9f})"
            )
        lat = 90.0
    elif lat < -90.0:
        if lat < -90.0 - _POLE_SLACK:
            raise ProjectionDomainError(
                f"plane point lies beyond the far pole image (lat {lat:.9f})"
            )
        lat = -90.0
    lon = params.central_meridian + theta / (RAD_PER_DEG * params.cone_constant)
    return GeoPoint(lat, lon)


def parallel_scale_factor(lat: float, params: ConicParams) -> float:
    """Map length over true length for one degree of parallel at lat.

    The meridian scale factor is identically 1; this ratio minus 1 equals
    the meridian-degree error divided by cos(lat).
    """
    if not abs(lat) < 90.0:
        raise ProjectionDomainError(
            f"the parallel at latitude {lat} has zero true length"
        )
    arc = apex_arc(params, lat)
    if arc <= 0.0:
        raise ProjectionDomainError(
            f"latitude {lat} lies at or beyond the cone apex"
        )
    return RAD_PER_DEG * params.cone_constant * arc / math.cos(to_radians(lat))
