"""
Deriving the projection parameters
==================================

Three ways to fix the cone for a map of latitudes 40..70 (the band of
the 1745 Russian Empire atlas sheet): the classical construction from
two chosen standard parallels, and the two equal-error solvers that
work directly from the bounding latitudes.
"""

from delisle import (
    ConicParams,
    RegionBounds,
    StandardParallels,
    apex_distance_from_parallels,
    dms_format,
    equal_error_residual,
    error_at,
    max_error_latitude,
    refined_apex_offset,
)

bounds = RegionBounds(40.0, 70.0)
parallels = StandardParallels(50.0, 60.0)

# Route 1: pick the parallels 50 and 60 by hand, place the apex by
# similar triangles.
classical = ConicParams.from_parallels(parallels)
print("classical construction from parallels 50/60")
print(f"  apex distance      : {apex_distance_from_parallels(parallels):.5f} deg"
      f" ({dms_format(apex_distance_from_parallels(parallels), 'minutes')})")
print(f"  cone constant      : {classical.cone_constant:.7f}"
      f" ({dms_format(classical.cone_constant)} per degree of longitude)")
print(f"  apex offset        : {classical.apex_offset:.5f} deg")
print(f"  error at 40 / 70   : {error_at(40, classical):+.5f} / {error_at(70, classical):+.5f}")
print()

# How well chosen were 50 and 60?  The equal-error condition compares
# two products; for a perfect choice they coincide.
residual = equal_error_residual(bounds, parallels)
print(f"equal-error residual for that choice: {residual:.5f} (members are ~4.28 and ~4.24)")
print()

# Route 2: midpoint solver.  Equal boundary errors, extreme error
# assumed at the middle latitude 55.
midpoint = ConicParams.from_bounds(bounds, "midpoint")
print("midpoint equal-error solver")
print(f"  cone constant      : {midpoint.cone_constant:.7f}")
print(f"  apex offset        : {midpoint.apex_offset:.5f} deg")
print()

# Route 3: refined solver.  The true extremum sits where sin(lat)
# equals the cone constant, a touch south of the middle.
extremum, offset = refined_apex_offset(bounds)
refined = ConicParams.from_bounds(bounds, "refined")
print("refined equal-error solver")
print(f"  extremum latitude  : {extremum:.5f} deg ({dms_format(extremum, 'minutes')})")
print(f"  apex offset        : {offset:.5f} deg")
print(f"  error at 40 / 70   : {error_at(40, refined):+.7f} / {error_at(70, refined):+.7f}")
print(f"  error at extremum  : {error_at(max_error_latitude(refined), refined):+.7f}")
print()
print("the refined solver equioscillates: equal magnitudes, alternating signs,")
print("which is the signature of the smallest possible worst-case error.")
