"""The X(s,t) and Y(s,t) families: hub colouring types, the closed form, and
the root tables for odd s, t.

Rebuilding the full 19 x 19 tables takes several seconds; pass a smaller
bound on the command line to go faster, e.g. `python3 demos/03_families_and_tables.py 9`.
"""
import sys

from chromroot import FamilySpec, build_family, chromatic_polynomial
from chromroot.analysis import reproduce_table, table_to_csv
from chromroot.families import derivative_at_two, enumerate_hub_types, family_chromatic_polynomial

top = int(sys.argv[1]) if len(sys.argv) > 1 else 19

# %% colour-class patterns on the five hub vertices
for kind in ("X", "Y"):
    types = enumerate_hub_types(kind)
    print(f"{kind}: {len(types)} hub types; first few:")
    for h in types[:4]:
        print("   ", h.blocks, "k =", h.k, "dS =", h.dS, "dT =", h.dT)

# %% the closed form agrees with deletion-contraction on the built graph
spec = FamilySpec("Y", 3, 4)
assert family_chromatic_polynomial(spec) == chromatic_polynomial(build_family(spec))

# %% P'(2) depends only on the parities of s and t
for s, t in [(3, 3), (3, 4), (4, 4)]:
    print(f"P'(X({s},{t}), 2) =", derivative_at_two(FamilySpec("X", s, t))[0])

# %% smallest root in (1,2), 4 places
odd = tuple(range(3, top + 1, 2))
for kind in ("X", "Y"):
    print(f"\n{kind}(s,t)")
    print(table_to_csv(reproduce_table(kind, odd, odd), odd, odd), end="")
