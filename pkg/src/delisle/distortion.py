"""Longitude-scale error analysis along the meridian.

The signed error e(lat) is the excess map length of one degree of
longitude over its true spherical length, in fractions of a meridian
degree: positive where the mapped parallel runs too long.  As a function
of latitude it is strictly convex with one interior minimum, so it has
at most two roots (the latitudes mapped true to scale) and its largest
magnitude over a region is attained at the bounds or at that minimum.

A brute-force grid search over (cone constant, apex offset) is included
as an independent check that the equal-error parameter choice really
minimizes the worst-case error.
"""

from __future__ import annotations

import math
import warnings
from dataclasses import dataclass
from typing import Callable, NamedTuple

import numpy as np

from .angles import RAD_PER_DEG, dms_format, to_radians
from .params import (
    ConicParams,
    DegenerateRegionError,
    NoInteriorMaximumError,
    RegionBounds,
    apex_offset_from_bounds,
    cone_constant_from_bounds,
)
from .projection import apex_arc, parallel_scale_factor

__all__ = [
    "DistortionReport",
    "OracleGrid",
    "OracleResult",
    "Sample",
    "build_report",
    "error_at",
    "error_in_miles",
    "max_error_latitude",
    "minimax_oracle",
    "standard_parallel_roots",
]

_ROOT_TOL = 1e-10  # bisection convergence, degrees


def error_at(lat: float, params: ConicParams) -> float:
    """Signed longitude-scale error at lat, in meridian degrees.

    Expects |lat| < 90; the value is the map length of one longitude
    degree along the parallel minus its true length cos(lat).
    """
    return (
        RAD_PER_DEG * params.cone_constant * apex_arc(params, lat)
        - math.cos(to_radians(lat))
    )


def max_error_latitude(params: ConicParams) -> float:
    """Latitude of the unique interior critical point of the error.

    The error's derivative vanishes where sin(lat) equals the cone
    constant; the second derivative is positive everywhere between the
    poles, so this is the error's minimum and the latitude of largest
    shortfall.  Negative for a south-opening cone.
    """
    omega = params.cone_constant
    if omega > 1.0:
        raise NoInteriorMaximumError(
            f"cone constant {omega} exceeds 1; the error has no critical point"
        )
    lat = math.asin(omega) / RAD_PER_DEG
    return -lat if params.south_cone else lat


def _bisect(f: Callable[[float], float], lo: float, hi: float) -> float:
    """Bisection root on a bracket with a sign change; 1e-10 deg width."""
    flo = f(lo)
    if flo == 0.0:
        return lo
    fhi = f(hi)
    if fhi == 0.0:
        return hi
    lo_neg = flo < 0.0
    while hi - lo > _ROOT_TOL:
        mid = 0.5 * (lo + hi)
        fm = f(mid)
        if fm == 0.0:
            return mid
        if (fm < 0.0) == lo_neg:
            lo = mid
        else:
            hi = mid
    return 0.5 * (lo + hi)


def standard_parallel_roots(params: ConicParams, bracket: RegionBounds) -> list[float]:
    """All latitudes in the bracket where the error vanishes exactly.

    Convexity makes the error monotone on each side of its interior
    minimum, so plain bisection on the two sub-brackets is exhaustive:
    the result has zero, one or two entries, in increasing order.
    """
    f = lambda lat: error_at(lat, params)
    a, b = bracket.south, bracket.north
    crit = max_error_latitude(params)
    edges = [a, crit, b] if a < crit < b else [a, b]
    roots: list[float] = []
    for lo, hi in zip(edges, edges[1:]):
        flo, fhi = f(lo), f(hi)
        if flo == 0.0:
            roots.append(lo)
        elif flo * fhi < 0.0:
            roots.append(_bisect(f, lo, hi))
    if f(b) == 0.0:
        roots.append(b)
    # A root exactly at the critical latitude is a tangency shared by both
    # sub-brackets; keep one copy.
    deduped: list[float] = []
    for r in roots:
        if not deduped or r - deduped[-1] > _ROOT_TOL:
            deduped.append(r)
    return deduped


def error_in_miles(error: float, miles_per_degree: float = 15.0) -> float:
    """Convert a meridian-degree error to miles."""
    if not miles_per_degree > 0.0:
        raise ValueError(f"miles_per_degree must be positive, got {miles_per_degree}")
    return error * miles_per_degree


class OracleResult(NamedTuple):
    cone_constant: float
    apex_offset: float
    sup_error: float


@dataclass(frozen=True)
class OracleGrid:
    """Resolution of the brute-force search.

    The contract minimum is 200 points per parameter axis and a latitude
    sampling step of at most 0.05 degrees.  The sup error is roughly
    fifty times stiffer along the cone-constant axis than along the
    offset axis while the offset box is the wider one, so the default
    grid spends ten times more points on the offset axis; an odd
    cone-constant count also places the equal-error anchor value exactly
    on the grid.
    """

    omega_points: int = 201
    z_points: int = 2001
    lat_step: float = 0.05

    def __post_init__(self) -> None:
        if self.omega_points < 2 or self.z_points < 2:
            raise ValueError("grid needs at least 2 points per axis")
        if not self.lat_step > 0.0:
            raise ValueError(f"lat_step must be positive, got {self.lat_step}")

    @property
    def meets_contract(self) -> bool:
        return (
            self.omega_points >= 200
            and self.z_points >= 200
            and self.lat_step <= 0.05
        )


def minimax_oracle(bounds: RegionBounds, grid: OracleGrid | None = None) -> OracleResult:
    """Brute-force minimax search over (cone constant, apex offset).

    Minimizes the largest absolute error over the region, sampled at
    latitude steps no coarser than the grid's lat_step, over the box
    [0.5, 1.5] x the equal-error cone constant and [0, 3] x the midpoint
    apex offset.  Returns the best grid point and its objective.
    Deterministic and independent of evaluation order: ties break toward
    the smallest cone constant, then the smallest offset.
    """
    if grid is None:
        grid = OracleGrid()
    if not grid.meets_contract:
        warnings.warn(
            "oracle grid below the contract minimum "
            "(200 points per axis, latitude step <= 0.05 deg)",
            UserWarning,
            stacklevel=2,
        )
    omega_anchor = cone_constant_from_bounds(bounds)
    z_anchor = apex_offset_from_bounds(bounds)
    if z_anchor <= 0.0:
        raise DegenerateRegionError(
            f"midpoint apex offset {z_anchor} leaves an empty search box"
        )
    nb = bounds if bounds.north > 0.0 else RegionBounds(-bounds.north, -bounds.south)
    n_lat = math.ceil(nb.width / grid.lat_step) + 1
    lats = np.linspace(nb.south, nb.north, n_lat)
    cos_lats = np.cos(lats * RAD_PER_DEG)

    ws = np.linspace(0.5 * omega_anchor, 1.5 * omega_anchor, grid.omega_points)
    zs = np.linspace(0.0, 3.0 * z_anchor, grid.z_points)
    base = 90.0 - lats[np.newaxis, :] + zs[:, np.newaxis]
    best_sup = math.inf
    best_i = best_j = 0
    for i, w in enumerate(ws):
        sup = np.abs(RAD_PER_DEG * w * base - cos_lats[np.newaxis, :]).max(axis=1)
        j = int(np.argmin(sup))
        if sup[j] < best_sup:
            best_sup = float(sup[j])
            best_i, best_j = i, j
    return OracleResult(float(ws[best_i]), float(zs[best_j]), best_sup)


class Sample(NamedTuple):
    lat: float
    error: float
    scale: float


@dataclass(frozen=True)
class DistortionReport:
    """Per-latitude error table for one parameter set over one region.

    samples are (latitude, error, parallel scale factor) rows sorted by
    latitude.  extremum_lat is the interior critical latitude of the
    error; max_error is the largest |error| over the region, attained at
    max_error_lat (a bound or the extremum).  roots are the true-scale
    latitudes inside the region.
    """

    params: ConicParams
    samples: tuple[Sample, ...]
    extremum_lat: float
    max_error_lat: float
    max_error: float
    roots: tuple[float, ...]
    miles_per_degree: float = 15.0

    def to_csv(self) -> str:
        """Sample table as CSV: lat_deg, e_meridian_deg, scale_factor, e_miles."""
        lines = ["lat_deg,e_meridian_deg,scale_factor,e_miles"]
        for s in self.samples:
            miles = error_in_miles(s.error, self.miles_per_degree)
            lines.append(f"{s.lat:.9f},{s.error:.9f},{s.scale:.9f},{miles:.9f}")
        return "\n".join(lines) + "\n"

    def to_text(self) -> str:
        """Aligned plain-text table with a parameter header block."""
        p = self.params
        head = [
            f"cone constant : {p.cone_constant:.7f} "
            f"({dms_format(p.cone_constant, 'seconds')} per degree of longitude)",
            f"apex offset   : {p.apex_offset:.7f} deg "
            f"({dms_format(p.apex_offset, 'minutes')})",
            f"degree length : {p.degree_length:g}",
            f"extremum lat  : {self.extremum_lat:.5f} deg "
            f"({dms_format(self.extremum_lat, 'minutes')})",
            f"max |error|   : {self.max_error:.7f} meridian deg at "
            f"{self.max_error_lat:.5f} deg "
            f"({error_in_miles(self.max_error, self.miles_per_degree):.5f} miles)",
            "true-scale roots : "
            + (
                ", ".join(f"{r:.5f}" for r in self.roots)
                if self.roots
                else "(none)"
            ),
            "",
            f"{'lat_deg':>10} {'e_meridian_deg':>15} {'scale_factor':>13} {'e_miles':>12}",
        ]
        rows = [
            f"{s.lat:>10.4f} {s.error:>15.7f} {s.scale:>13.7f} "
            f"{error_in_miles(s.error, self.miles_per_degree):>12.5f}"
            for s in self.samples
        ]
        return "\n".join(head + rows) + "\n"


def build_report(
    params: ConicParams,
    bounds: RegionBounds,
    step: float = 1.0,
    miles_per_degree: float = 15.0,
) -> DistortionReport:
    """Sample the error over the region at the given latitude step.

    Samples run from the southern bound in equal steps and always include
    the northern bound; the exact extremum latitude and the true-scale
    roots are attached alongside.
    """
    if not step > 0.0:
        raise ValueError(f"step must be positive, got {step}")
    lats: list[float] = []
    k = 0
    while True:
        lat = bounds.south + k * step
        if lat >= bounds.north - 1e-9:
            break
        lats.append(lat)
        k += 1
    lats.append(bounds.north)
    samples = tuple(
        Sample(lat, error_at(lat, params), parallel_scale_factor(lat, params))
        for lat in lats
    )
    extremum = max_error_latitude(params)
    candidates = [bounds.south, bounds.north]
    if bounds.south < extremum < bounds.north:
        candidates.append(extremum)
    candidates.extend(lats)
    peak = min(candidates, key=lambda lat: (-abs(error_at(lat, params)), lat))
    return DistortionReport(
        params=params,
        samples=samples,
        extremum_lat=extremum,
        max_error_lat=peak,
        max_error=abs(error_at(peak, params)),
        roots=tuple(standard_parallel_roots(params, bounds)),
        miles_per_degree=miles_per_degree,
    )
