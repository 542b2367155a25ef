"""
The longitude-scale error curve
===============================

Plots the signed error e(lat) for the published parameter choice and
for both equal-error solvers, marking the true-scale roots and the
interior extremum.  Writes distortion_profile.png next to the current
directory and prints the report table.
"""

import numpy as np
import matplotlib

matplotlib.use("Agg")
import matplotlib.pyplot as plt

from delisle import (
    ConicParams,
    RegionBounds,
    build_report,
    error_at,
    max_error_latitude,
    standard_parallel_roots,
)

bounds = RegionBounds(40.0, 70.0)
lats = np.linspace(40.0, 70.0, 601)

variants = {
    "published (offset 5)": ConicParams(0.8098270, 5.0),
    "midpoint solver": ConicParams.from_bounds(bounds, "midpoint"),
    "refined solver": ConicParams.from_bounds(bounds, "refined"),
}

fig, ax = plt.subplots(figsize=(8, 4.5))
for label, params in variants.items():
    errors = [error_at(float(lat), params) for lat in lats]
    (line,) = ax.plot(lats, errors, label=label)
    roots = standard_parallel_roots(params, bounds)
    ax.plot(roots, [0.0] * len(roots), "o", color=line.get_color(), ms=4)
    crit = max_error_latitude(params)
    ax.plot([crit], [error_at(crit, params)], "s", color=line.get_color(), ms=4)

ax.axhline(0.0, color="k", lw=0.5)
ax.set_xlabel("latitude (deg)")
ax.set_ylabel("error (meridian degrees)")
ax.set_title("longitude-scale error across the mapped band")
ax.legend()
fig.tight_layout()
fig.savefig("distortion_profile.png", dpi=150)
print("wrote distortion_profile.png")
print()

report = build_report(variants["refined solver"], bounds, step=2.0)
print(report.to_text())
