"""Chromatic polynomials by deletion-contraction, checked against colouring counts.

Run: python3 demos/01_chromatic_polynomials.py
"""
from chromroot import (ChromaticEngine, FamilySpec, build_family, chromatic_polynomial,
                       chromatic_polynomial_by_interpolation, count_proper_colourings)
from chromroot.graph import complete_graph, cycle_graph, path_graph
from chromroot.poly import IntPoly, divide_exact

# %% small graphs: the usual closed forms fall out
for name, G in [("K3", complete_graph(3)), ("P5", path_graph(5)), ("C5", cycle_graph(5))]:
    print(f"{name:3s} P(x) = {chromatic_polynomial(G)}")

# %% the polynomial counts colourings: compare P(k) with a direct count
C5 = cycle_graph(5)
P = chromatic_polynomial(C5)
for k in range(5):
    print(f"k={k}: P(C5,k)={P(k)}  counted={count_proper_colourings(C5, k)}")

# %% an independent check: interpolate through the counts instead
assert chromatic_polynomial_by_interpolation(C5) == P

# %% the 11-vertex graph X(3,3); its polynomial has the factor x(x-1)(x-2)
X33 = build_family(FamilySpec("X", 3, 3))
engine = ChromaticEngine()
P = engine.polynomial(X33)
x = IntPoly.x()
Q = divide_exact(P, x * (x - 1) * (x - 2))
print("P(X(3,3)) =", P)
print("quotient  =", Q)
print("isomorphism-cache hits during the computation:", engine.hits)
