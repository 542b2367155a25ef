"""Projection parameter derivation for the equidistant conic construction.

Two routes produce the cone constant and the apex offset.  The classical
route starts from two standard parallels and places the apex by similar
triangles.  The equal-error route starts from the region's bounding
latitudes and chooses the parameters so that the longitude-scale error
is equal at the two bounds and, with the refined solver, exactly
opposite at the interior extremum (the equioscillation condition of a
best uniform linear approximation).

All latitudes and offsets are decimal degrees; the cone constant is the
dimensionless ratio of plane angle to longitude difference.
"""

from __future__ import annotations

import math
from dataclasses import dataclass

from .angles import RAD_PER_DEG, to_radians

__all__ = [
    "ConicParams",
    "DegenerateConeError",
    "DegenerateRegionError",
    "NoInteriorMaximumError",
    "RegionBounds",
    "StandardParallels",
    "apex_distance_from_parallels",
    "apex_offset_from_bounds",
    "apex_offset_from_parallels",
    "cone_constant_from_bounds",
    "cone_constant_from_parallels",
    "equal_error_residual",
    "refined_apex_offset",
]


class DegenerateConeError(ValueError):
    """Standard parallels with equal cosines define no cone apex."""


class DegenerateRegionError(ValueError):
    """Region bounds unusable for the bounds-based derivations."""


class NoInteriorMaximumError(ValueError):
    """No interior extremum of the scale error exists (cone constant > 1)."""


def _cos_deg(lat: float) -> float:
    return math.cos(to_radians(lat))


@dataclass(frozen=True)
class RegionBounds:
    """Bounding latitudes of the mapped region, in degrees, south < north.

    The northern bound may reach 90 (azimuthal limit); the region must
    not be a single parallel.
    """

    south: float
    north: float

    def __post_init__(self) -> None:
        if not (-90.0 < self.south < self.north <= 90.0):
            raise DegenerateRegionError(
                f"bounds must satisfy -90 < south < north <= 90, "
                f"got ({self.south}, {self.north})"
            )

    @property
    def width(self) -> float:
        return self.north - self.south

    @property
    def mid(self) -> float:
        return 0.5 * (self.south + self.north)


@dataclass(frozen=True)
class StandardParallels:
    """The two latitudes along which a longitude degree keeps true length."""

    south: float
    north: float

    def __post_init__(self) -> None:
        if not (-90.0 < self.south < self.north <= 90.0):
            raise DegenerateConeError(
                f"parallels must satisfy -90 < south < north <= 90, "
                f"got ({self.south}, {self.north})"
            )


def _reflected_parallels(parallels: StandardParallels) -> StandardParallels:
    return StandardParallels(-parallels.north, -parallels.south)


def _is_south_pair(parallels: StandardParallels) -> bool:
    # cos decreasing away from the equator: a pair whose cosines increase
    # northward belongs to a cone opening over the southern hemisphere.
    return _cos_deg(parallels.south) < _cos_deg(parallels.north)


def _check_nondegenerate(parallels: StandardParallels) -> None:
    if _cos_deg(parallels.south) == _cos_deg(parallels.north):
        raise DegenerateConeError(
            f"parallels ({parallels.south}, {parallels.north}) have equal "
            "cosines; the meridian images are parallel lines"
        )


def apex_distance_from_parallels(parallels: StandardParallels) -> float:
    """Meridian-arc degrees from the lower standard parallel to the apex.

    For a pair straddling into the southern hemisphere the computation
    reflects to its northern mirror image; the apex then lies beyond the
    South pole and the returned distance refers to the mirrored pair.
    """
    _check_nondegenerate(parallels)
    if _is_south_pair(parallels):
        return apex_distance_from_parallels(_reflected_parallels(parallels))
    p, q = parallels.south, parallels.north
    cp, cq = _cos_deg(p), _cos_deg(q)
    return (q - p) * cp / (cp - cq)


def cone_constant_from_parallels(parallels: StandardParallels) -> float:
    """Plane angle per degree of longitude making both parallels true-length."""
    _check_nondegenerate(parallels)
    if _is_south_pair(parallels):
        return cone_constant_from_parallels(_reflected_parallels(parallels))
    p, q = parallels.south, parallels.north
    return (_cos_deg(p) - _cos_deg(q)) / (RAD_PER_DEG * (q - p))


def apex_offset_from_parallels(parallels: StandardParallels) -> float:
    """Degrees by which the apex lies beyond the pole image.

    Equals apex_distance_from_parallels minus the pole distance of the
    lower parallel, exactly.
    """
    _check_nondegenerate(parallels)
    if _is_south_pair(parallels):
        return apex_offset_from_parallels(_reflected_parallels(parallels))
    return apex_distance_from_parallels(parallels) - (90.0 - parallels.south)


def _northern_bounds(bounds: RegionBounds) -> RegionBounds:
    """Reflect a fully southern region to its northern mirror image."""
    if bounds.north <= 0.0:
        return RegionBounds(-bounds.north, -bounds.south)
    if bounds.south < 0.0:
        raise DegenerateRegionError(
            f"bounds ({bounds.south}, {bounds.north}) straddle the equator; "
            "the equal-error derivation needs cos monotone over the region"
        )
    return bounds


def cone_constant_from_bounds(bounds: RegionBounds) -> float:
    """Cone constant equalizing the scale error at the two bounds.

    Same formula as cone_constant_from_parallels applied to the bounding
    latitudes themselves; the two entry points agree exactly.
    """
    nb = _northern_bounds(bounds)
    return cone_constant_from_parallels(StandardParallels(nb.south, nb.north))


def apex_offset_from_bounds(bounds: RegionBounds) -> float:
    """Apex offset from the midpoint equal-error condition.

    Solves the condition that the boundary errors equal the sign-flipped
    error at the region's middle latitude, with the cone constant from
    cone_constant_from_bounds.
    """
    nb = _northern_bounds(bounds)
    a = nb.south
    omega = cone_constant_from_bounds(nb)
    rhs = _cos_deg(a) + _cos_deg(nb.mid)
    return 0.5 * (rhs / (RAD_PER_DEG * omega) - 180.0 + 1.5 * a + 0.5 * nb.north)


def refined_apex_offset(bounds: RegionBounds) -> tuple[float, float]:
    """Apex offset from the exact interior extremum of the scale error.

    The extremum sits where sin(lat) equals the cone constant; the offset
    then makes the boundary errors equal to the sign-flipped extremum
    error, which is the equioscillation signature of the best uniform
    linear fit.  Returns (extremum latitude, apex offset); the latitude
    is negative for a reflected southern region.
    """
    nb = _northern_bounds(bounds)
    a = nb.south
    omega = cone_constant_from_bounds(nb)
    if omega > 1.0:
        raise NoInteriorMaximumError(
            f"cone constant {omega} exceeds 1; the scale error has no "
            "interior extremum over the region"
        )
    x_star = math.asin(omega) / RAD_PER_DEG
    rhs = _cos_deg(a) + _cos_deg(x_star)
    offset = 0.5 * (rhs / (RAD_PER_DEG * omega) - 180.0 + a + x_star)
    if bounds.north <= 0.0:
        return -x_star, offset
    return x_star, offset


def equal_error_residual(bounds: RegionBounds, parallels: StandardParallels) -> float:
    """Mismatch of the two members of the equal-boundary-error condition.

    Returns (north-south width of the region) x (cosine drop between the
    parallels) minus (parallel separation) x (cosine drop over the
    region); zero exactly when the boundary errors of the parallels-based
    projection match.
    """
    a, b = bounds.south, bounds.north
    p, q = parallels.south, parallels.north
    return (b - a) * (_cos_deg(p) - _cos_deg(q)) - (q - p) * (_cos_deg(a) - _cos_deg(b))


@dataclass(frozen=True)
class ConicParams:
    """Full state of one projection instance.

    cone_constant: plane angle turned per unit of longitude, dimensionless,
        in (0, 1]; 1 is the azimuthal limit.
    apex_offset: meridian-arc degrees from the pole image to the apex.
    degree_length: map length of one degree of meridian arc (> 0).
    central_meridian: longitude drawn as the straight vertical meridian.
    south_cone: apex beyond the South pole instead of the North pole.
    """

    cone_constant: float
    apex_offset: float
    degree_length: float = 1.0
    central_meridian: float = 0.0
    south_cone: bool = False

    def __post_init__(self) -> None:
        if not (0.0 < self.cone_constant <= 1.0):
            raise ValueError(
                f"cone constant must lie in (0, 1], got {self.cone_constant}"
            )
        if not self.degree_length > 0.0:
            raise ValueError(f"degree length must be positive, got {self.degree_length}")

    @classmethod
    def from_parallels(
        cls,
        parallels: StandardParallels,
        degree_length: float = 1.0,
        central_meridian: float = 0.0,
    ) -> "ConicParams":
        """Parameters making both given parallels true to scale."""
        return cls(
            cone_constant=cone_constant_from_parallels(parallels),
            apex_offset=apex_offset_from_parallels(parallels),
            degree_length=degree_length,
            central_meridian=central_meridian,
            south_cone=_is_south_pair(parallels),
        )

    @classmethod
    def from_bounds(
        cls,
        bounds: RegionBounds,
        solver: str = "refined",
        degree_length: float = 1.0,
        central_meridian: float = 0.0,
    ) -> "ConicParams":
        """Equal-error parameters for a region; solver is "refined" or "midpoint"."""
        if solver == "refined":
            _, offset = refined_apex_offset(bounds)
        elif solver == "midpoint":
            offset = apex_offset_from_bounds(bounds)
        else:
            raise ValueError(f"unknown solver {solver!r}; use 'refined' or 'midpoint'")
        return cls(
            cone_constant=cone_constant_from_bounds(bounds),
            apex_offset=offset,
            degree_length=degree_length,
            central_meridian=central_meridian,
            south_cone=bounds.north <= 0.0,
        )
