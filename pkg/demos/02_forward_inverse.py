"""
Projecting points and inverting them
====================================

The projection maps parallels to circles about the cone apex and
meridians to straight rays through it, keeping every meridian true to
scale.  The inverse is algebraic, so round trips are exact to floating
point noise.
"""

from delisle import ConicParams, GeoPoint, RegionBounds, forward, inverse

params = ConicParams.from_bounds(RegionBounds(40.0, 70.0), "refined",
                                 central_meridian=50.0)

places = [
    ("Saint Petersburg", GeoPoint(59.95, 30.32)),
    ("Moscow", GeoPoint(55.76, 37.62)),
    ("Tobolsk", GeoPoint(58.20, 68.25)),
    ("Irkutsk", GeoPoint(52.29, 104.28)),
    ("Okhotsk", GeoPoint(59.36, 143.24)),
]

print(f"{'place':>18} {'lat':>8} {'lon':>8} {'x':>12} {'y':>12} {'round trip error':>18}")
for name, point in places:
    plane = forward(point, params)
    back = inverse(plane, params)
    err = max(abs(back.lat - point.lat), abs(back.lon - point.lon))
    print(f"{name:>18} {point.lat:>8.2f} {point.lon:>8.2f}"
          f" {plane.x:>12.4f} {plane.y:>12.4f} {err:>18.2e}")

print()
print("x, y are in degree-lengths of meridian arc; pass degree_length=15")
print("to ConicParams to get German miles at 15 miles per degree.")
