"""
Parameters from sign sequences
==============================

For |a| >= 2 each sign sequence starting with sgn(a) picks out one real
parameter c, found by bisection on c. Here the two routes to S(2, 2, 1)
are compared: Sturm isolation of the polynomial, and the coding.
"""

from quadpre import enumerate_sequences, gamma, param_set
from quadpre.coding import c_minus, c_plus

a, k, p = 2, 2, 1
print(f"c^- = {c_minus(a):.12f}, c^+ = {c_plus(a)}")

rep = param_set(a, k, p, cross_check=False)
roots = rep.real_values()
for s in enumerate_sequences(k, p, first_sign=1):
    g = gamma(a, s)
    nearest = min(roots, key=lambda r: abs(r - g))
    print(f"{str(s):>6}  gamma = {g:+.12f}   nearest root {nearest:+.12f}")

# extended precision on request
print("\n200-bit gamma for +-|+:", gamma(2, "+-|+", prec=200))
