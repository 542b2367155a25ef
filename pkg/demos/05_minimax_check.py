"""
Checking the parameter choice by brute force
============================================

Is the equal-error solution really the best possible cone?  A grid
search over (cone constant, apex offset) minimizing the worst absolute
error knows nothing about equioscillation theory; if the closed-form
solution is optimal the two answers must agree.
"""

from delisle import (
    ConicParams,
    RegionBounds,
    error_at,
    max_error_latitude,
    minimax_oracle,
)

bounds = RegionBounds(40.0, 70.0)

refined = ConicParams.from_bounds(bounds, "refined")
sup_refined = max(
    abs(error_at(bounds.south, refined)),
    abs(error_at(bounds.north, refined)),
    abs(error_at(max_error_latitude(refined), refined)),
)
print("closed-form equal-error solution")
print(f"  cone constant : {refined.cone_constant:.7f}")
print(f"  apex offset   : {refined.apex_offset:.5f} deg")
print(f"  sup |error|   : {sup_refined:.7f} meridian degrees")
print()

result = minimax_oracle(bounds)
print("brute-force grid optimum")
print(f"  cone constant : {result.cone_constant:.7f}")
print(f"  apex offset   : {result.apex_offset:.5f} deg")
print(f"  sup |error|   : {result.sup_error:.7f} meridian degrees")
print()

gap = (sup_refined - result.sup_error) / result.sup_error
print(f"relative gap: {100 * gap:+.4f}%  (the search grid cannot beat the")
print("true optimum, so a tiny positive or negative gap means agreement)")

best = ConicParams(result.cone_constant, result.apex_offset)
signs = [
    error_at(bounds.south, best),
    error_at(max_error_latitude(best), best),
    error_at(bounds.north, best),
]
print()
print("error signs at south bound / extremum / north bound:",
      " ".join("+" if s > 0 else "-" for s in signs))
print("the (+,-,+) alternation is the equioscillation signature of a best")
print("uniform linear fit to the cosine over the band.")
