"""Delisle's equidistant conic projection.

Parameter selection by equal-error and equioscillation conditions,
forward and inverse point projection, longitude-scale distortion
analysis with an independent brute-force minimax check, and graticule
export to SVG and GeoJSON.
"""

from .angles import (
    RAD_PER_DEG,
    DmsParseError,
    DmsRangeError,
    dms_format,
    dms_parse,
    to_degrees,
    to_radians,
)
from .distortion import (
    DistortionReport,
    OracleGrid,
    OracleResult,
    Sample,
    build_report,
    error_at,
    error_in_miles,
    max_error_latitude,
    minimax_oracle,
    standard_parallel_roots,
)
from .graticule import (
    EmptyGeometryError,
    Graticule,
    MeridianLine,
    ParallelArc,
    PointsCsvError,
    RegionWindow,
    SvgStyle,
    build_graticule,
    read_points_csv,
    write_geojson,
    write_svg,
)
from .params import (
    ConicParams,
    DegenerateConeError,
    DegenerateRegionError,
    NoInteriorMaximumError,
    RegionBounds,
    StandardParallels,
    apex_distance_from_parallels,
    apex_offset_from_bounds,
    apex_offset_from_parallels,
    cone_constant_from_bounds,
    cone_constant_from_parallels,
    equal_error_residual,
    refined_apex_offset,
)
from .projection import (
    GeoPoint,
    PlanePoint,
    ProjectionDomainError,
    apex_arc,
    forward,
    inverse,
    parallel_scale_factor,
)

__version__ = "0.1.0"

__all__ = [
    "RAD_PER_DEG",
    "ConicParams",
    "DegenerateConeError",
    "DegenerateRegionError",
    "DistortionReport",
    "DmsParseError",
    "DmsRangeError",
    "EmptyGeometryError",
    "GeoPoint",
    "Graticule",
    "MeridianLine",
    "NoInteriorMaximumError",
    "OracleGrid",
    "OracleResult",
    "ParallelArc",
    "PlanePoint",
    "PointsCsvError",
    "ProjectionDomainError",
    "RegionBounds",
    "RegionWindow",
    "Sample",
    "StandardParallels",
    "SvgStyle",
    "apex_arc",
    "apex_distance_from_parallels",
    "apex_offset_from_bounds",
    "apex_offset_from_parallels",
    "build_graticule",
    "build_report",
    "cone_constant_from_bounds",
    "cone_constant_from_parallels",
    "dms_format",
    "dms_parse",
    "equal_error_residual",
    "error_at",
    "error_in_miles",
    "forward",
    "inverse",
    "max_error_latitude",
    "minimax_oracle",
    "parallel_scale_factor",
    "read_points_csv",
    "refined_apex_offset",
    "standard_parallel_roots",
    "to_degrees",
    "to_radians",
    "write_geojson",
    "write_svg",
]
