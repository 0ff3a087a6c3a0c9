"""Summand bounds and simplicity certificates for theta divisors.

The genus-5 divisor with two ordinary double points has clean cycle of
degree 118 = 116 + 1 + 1.  Its Tannaka group is SO/O_118 depending on the
sum of the double points, its Lie algebra is certified simple by all four
criteria, and the summand bound rules out writing the divisor as a sum of
positive-dimensional subvarieties whenever it applies.
"""

import json

from thetacycles.cycles import degree
from thetacycles.schottky import (
    PpavInput,
    cc_odp,
    simplicity_criteria,
    summand_bound,
    theta_group,
)

p = PpavInput(g=5, k=2, double_points_sum_zero=True, gauss_finite=True)
cycle = cc_odp(p)
print("clean cycle components:")
for comp in cycle.components:
    print(f"  {comp.label}: dim {comp.dim}, Gauss degree {comp.gauss_degree}")
print("total degree:", degree(cycle))
print("Tannaka group:", theta_group(p).label)

# the sum of the two points distinguishes SO from O
p_nonzero = PpavInput(g=5, k=2, double_points_sum_zero=False, gauss_finite=True)
print("with nonzero point sum:", theta_group(p_nonzero).label)

print("\nsimplicity criteria:")
print(json.dumps(simplicity_criteria(cycle, "theta"), indent=2, sort_keys=True))

print("\nsummand bounds:")
# a Jacobian: the adjoint module lives on C - C, a surface
print("  curve case, support dim 2, divisor dim 3:", summand_bound([2], 3))
# a symplectic standard pair in even genus: support dim >= g-1
print("  even genus g=6, support dim 5, divisor dim 5:", summand_bound([5], 5))
