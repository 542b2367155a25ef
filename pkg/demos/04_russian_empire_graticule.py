"""
Exporting the graticule
=======================

Rebuilds the grid frame of the 1745 atlas sheet: parallels 40..70 as
concentric arcs one degree-length apart, meridians over a 60 degree
span as rays through the apex.  Writes SVG for direct viewing and both
GeoJSON flavours; output is byte-identical on every run.
"""

from delisle import (
    ConicParams,
    RegionBounds,
    RegionWindow,
    build_graticule,
    write_geojson,
    write_svg,
)

params = ConicParams.from_bounds(RegionBounds(40.0, 70.0), "refined")
window = RegionWindow(
    lat_min=40.0, lat_max=70.0, lon_min=-30.0, lon_max=30.0,
    lat_step=1.0, lon_step=1.0,
)

graticule = build_graticule(params, window, arc_segments_per_degree=4)
print(f"{len(graticule.parallels)} parallels, {len(graticule.meridians)} meridians")
print(f"southern parallel radius : {graticule.parallels[0].radius:.1f} degree-lengths")
print(f"northern parallel radius : {graticule.parallels[-1].radius:.1f} degree-lengths")

with open("russian_empire_graticule.svg", "w", encoding="utf-8", newline="") as f:
    f.write(write_svg(graticule))
with open("russian_empire_graticule.geojson", "w", encoding="utf-8", newline="") as f:
    f.write(write_geojson(graticule, params, mode="geographic"))
with open("russian_empire_graticule_plane.json", "w", encoding="utf-8", newline="") as f:
    f.write(write_geojson(graticule, params, mode="projected"))

print("wrote russian_empire_graticule.svg, .geojson, and _plane.json")
