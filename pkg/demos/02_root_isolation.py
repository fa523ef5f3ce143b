"""Exact real-root isolation with Sturm chains and rational bisection.

Every step uses integers or fractions, so the digits printed are certified.
"""
from fractions import Fraction

from chromroot.poly import (IntPoly, isolate_roots, refine_root, root_multiplicity,
                            sturm_count)

x = IntPoly.x()
Q = IntPoly.from_descending((1, -17, 137, -677, 2228, -4969, 7284, -6363, 2509))

# %% how many real roots, and where
print("real roots of Q:", sturm_count(Q, None, None))
print("in (1, 2):", sturm_count(Q, 1, 2), "  in (2, 3):", sturm_count(Q, 2, 3))

# %% isolate, then refine to 8 decimal places
for rec in isolate_roots(Q, 1, 3):
    print(f"isolating interval [{rec.lo}, {rec.hi}]  ->  {refine_root(rec, 8).decimal}")

# %% multiplicities come from exact gcd computations
p = (x - 1) ** 3 * (2 * x - 3)
print("multiplicity of 1 in (x-1)^3 (2x-3):", root_multiplicity(p, 1))
print("multiplicity of 3/2:", root_multiplicity(p, Fraction(3, 2)))

# %% rounding is half-even when the root is exactly on a tie
(rec,) = isolate_roots(4 * x - 1, 0, 1)
print("0.25 to one place:", refine_root(rec, 1).decimal)
