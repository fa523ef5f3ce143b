"""Mechanical checks: the sign pattern of P on (-inf, 32/27], the root-existence
argument for odd X/Y, and the independent-set toughness condition."""
from chromroot import FamilySpec, build_family
from chromroot.analysis import (conjecture7_report, roots_report, verify_root_existence_argument,
                                verify_sign_theorem)
from chromroot.catalog import random_corpus
from chromroot.families import family_chromatic_polynomial
from chromroot.graph import hamiltonian_cycle_exists, is_bipartite, is_k_connected

# %% sign pattern on a seeded random corpus
corpus = random_corpus(200, max_n=8, seed=20240601)
print("sign checks passed on corpus:", sum(verify_sign_theorem(G).passed for G in corpus), "/", len(corpus))

# %% the continuity argument, step by step
ok, trace = verify_root_existence_argument(FamilySpec("X", 3, 3))
for key, value in trace.items():
    print(f"  {key}: {value}")

# %% structure of X(3,3)
spec = FamilySpec("X", 3, 3)
G = build_family(spec)
print("3-connected:", is_k_connected(G, 3), " bipartite:", is_bipartite(G)[0],
      " hamiltonian:", hamiltonian_cycle_exists(G))
rep = conjecture7_report(G, 3, poly=family_chromatic_polynomial(spec))
print("root in (1,2):", rep.has_root_in_12, " witness S =", rep.witness)

# %% the bipartite comparison graph K(3,4)
rep = roots_report(FamilySpec("Kb", 3, 4))
print("K(3,4) roots in (1,2):", [r.decimal for r in rep.roots], rep.flags)
