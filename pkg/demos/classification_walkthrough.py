"""
Common preperiodic parameters of two integer starting points
=============================================================

Walk through the pair (1, 2): the integer candidates, the modular gcd
certificate that rules out anything else up to depth 6, and the
localization argument that lifts this to all depths.
"""

from quadpre import intersect, param_set
from quadpre.paramsets import R_bound

# small parameter sets first: every element is an exact integer
for k, p in [(0, 1), (1, 1), (0, 2), (1, 2)]:
    print(f"S(1, {k}, {p}) =", sorted(param_set(1, k, p).integer_values()))

rep = intersect(1, 2, 6, 6)
print("\ncommon parameters of 1 and 2:", sorted(rep.values()))
for e in rep.common:
    print(f"  c = {e['value']}: (preperiod, period) of 1 is {e['a']}, of 2 is {e['b']}")
print("gcd certificate:", rep.gcd_certified, " complete at every depth:", rep.complete)
for line in rep.certificate:
    print("  ", line)

# a pair far apart: the disk around 0 misses every parameter for 3
print("\nR_0 =", R_bound(0))
far = intersect(0, 3, 6, 6)
print("common parameters of 0 and 3:", sorted(far.values()), " complete:", far.complete)
