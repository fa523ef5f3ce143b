"""Exact chromatic polynomials, real chromatic roots, and the X(s,t)/Y(s,t)
families of 3-connected non-bipartite graphs with a chromatic root in (1, 2)."""

from chromroot.errors import BudgetExhausted, GraphError, NotDivisibleError, VerificationError
from chromroot.graph import (Graph, blocks, complete_graph, connected_components, contract_edge,
                             cycle_graph, delete_edge, dong_koh_check, dong_koh_ordering_exists,
                             empty_graph, from_edge_list, hamiltonian_cycle_exists,
                             independent_toughness_witness, is_bipartite, is_k_connected,
                             path_graph)
from chromroot.graph_io import parse_edge_list, parse_graph6, to_edge_list, to_graph6
from chromroot.poly import (IntPoly, Rat, RootRecord, derivative, divide_exact, eval_rat,
                            isolate_roots, refine_root, root_multiplicity, sturm_count)
from chromroot.chromatic import (ChromaticEngine, chromatic_polynomial,
                                 chromatic_polynomial_by_interpolation, count_proper_colourings)
from chromroot.families import (FamilySpec, HubType, build_family, derivative_at_two,
                                enumerate_hub_types, family_chromatic_polynomial,
                                family_eval_bruteforce)
from chromroot.analysis import (conjecture7_report, reproduce_table, roots_report, scan_catalog,
                                verify_root_existence_argument, verify_sign_theorem)

__version__ = "0.1.0"
