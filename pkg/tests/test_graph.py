from itertools import combinations, permutations

import networkx as nx
import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from chromroot.errors import BudgetExhausted, GraphError
from chromroot.families import FamilySpec, build_family
from chromroot.graph import (Graph, blocks, complete_graph, components_after_removal,
                             connected_components, contract_edge, cycle_graph, delete_edge,
                             dong_koh_check, dong_koh_ordering_exists, from_edge_list,
                             hamiltonian_cycle_exists, independent_toughness_witness,
                             is_bipartite, is_connected, is_independent, is_k_connected,
                             path_graph, vertex_connectivity)

K3 = complete_graph(3)
K4 = complete_graph(4)
C4 = cycle_graph(4)
C5 = cycle_graph(5)
X33 = build_family(FamilySpec("X", 3, 3))


def to_nx(G):
    H = nx.Graph()
    H.add_nodes_from(range(G.n))
    H.add_edges_from(G.edges)
    return H


@st.composite
def graphs(draw, max_n=8):
    n = draw(st.integers(0, max_n))
    pairs = list(combinations(range(n), 2))
    chosen = draw(st.lists(st.sampled_from(pairs), unique=True) if pairs else st.just([]))
    return Graph(n, chosen)


# ------------------------------------------------------------ construction

def test_from_edge_list_triangle():
    G = from_edge_list(3, [(0, 1), (1, 2), (0, 2)])
    assert G == K3
    assert G.m == 3


def test_duplicate_pairs_collapse():
    assert from_edge_list(2, [(0, 1), (1, 0)]).m == 1


def test_loop_rejected_with_pair_named():
    with pytest.raises(GraphError, match=r"\(0, 0\)"):
        from_edge_list(1, [(0, 0)])


def test_endpoint_out_of_range():
    with pytest.raises(GraphError):
        from_edge_list(2, [(0, 2)])


def test_isolated_vertices_representable():
    G = from_edge_list(5, [(0, 1)])
    assert G.n == 5 and G.m == 1


def test_graph_is_immutable():
    with pytest.raises(AttributeError):
        K3.n = 4


# --------------------------------------------------- deletion / contraction

def test_delete_edge_examples():
    assert delete_edge(K3, (0, 1)) == Graph(3, [(0, 2), (2, 1)])
    assert delete_edge(Graph(2, [(0, 1)]), (1, 0)) == Graph(2)
    assert delete_edge(K4, (2, 3)).m == 5


def test_delete_missing_edge():
    with pytest.raises(GraphError):
        delete_edge(path_graph(3), (0, 2))


def test_contract_examples():
    assert contract_edge(K3, (0, 1)) == complete_graph(2)
    assert contract_edge(path_graph(3), (0, 1)) == Graph(2, [(0, 1)])
    assert contract_edge(C4, (1, 2)) == K3


def test_contract_renumbering():
    # path 0-1-2-3-4, contract (1,3) is not an edge; contract (2,3):
    # merged vertex 2, vertex 4 shifts to 3
    G = path_graph(5)
    assert contract_edge(G, (3, 2)) == Graph(4, [(0, 1), (1, 2), (2, 3)])
    G = Graph(4, [(0, 3), (1, 3), (2, 3)])
    # merge 0 and 3 into 0: star centred at 0
    assert contract_edge(G, (0, 3)) == Graph(3, [(0, 1), (0, 2)])


def test_contract_missing_edge():
    with pytest.raises(GraphError):
        contract_edge(path_graph(3), (0, 2))


@given(graphs())
def test_delete_contract_sizes(G):
    for e in G.sorted_edges():
        assert delete_edge(G, e).m == G.m - 1
        assert contract_edge(G, e).n == G.n - 1


# --------------------------------------------------------- components/blocks

def test_components_examples():
    assert connected_components(Graph(2)) == [[0], [1]]
    assert len(connected_components(K3)) == 1
    assert connected_components(Graph(5, [(0, 1), (1, 2), (0, 2), (3, 4)])) == [[0, 1, 2], [3, 4]]


def test_blocks_examples():
    bd = blocks(path_graph(3))
    assert bd.b == 2 and bd.articulation == {1}
    bd = blocks(K4)
    assert bd.b == 1 and not bd.articulation
    bowtie = Graph(5, [(0, 1), (1, 2), (0, 2), (2, 3), (3, 4), (2, 4)])
    bd = blocks(bowtie)
    assert bd.b == 2 and bd.articulation == {2}
    assert bd.blocks == [[0, 1, 2], [2, 3, 4]]


def test_blocks_ignore_isolated_vertices():
    assert blocks(Graph(3)).b == 0
    assert blocks(Graph(4, [(0, 1)])).b == 1


@settings(max_examples=200)
@given(graphs(max_n=9))
def test_components_and_blocks_match_networkx(G):
    H = to_nx(G)
    assert connected_components(G) == sorted(sorted(c) for c in nx.connected_components(H))
    expected = sorted(sorted(c) for c in nx.biconnected_components(H))
    bd = blocks(G)
    assert bd.blocks == expected
    assert bd.articulation == set(nx.articulation_points(H))


# ----------------------------------------------------------------- bipartite

def test_bipartite_examples():
    ok, colouring = is_bipartite(build_family(FamilySpec("Kb", 3, 4)))
    assert ok and set(colouring[:3]) != set(colouring[3:])
    ok, cycle = is_bipartite(K3)
    assert not ok and sorted(cycle) == [0, 1, 2]
    ok, cycle = is_bipartite(X33)
    assert not ok and len(cycle) % 2 == 1


@settings(max_examples=200)
@given(graphs(max_n=9))
def test_bipartite_witness_valid(G):
    ok, witness = is_bipartite(G)
    assert ok == nx.is_bipartite(to_nx(G))
    if ok:
        assert all(witness[u] != witness[v] for u, v in G.edges)
    else:
        assert len(witness) % 2 == 1 and len(set(witness)) == len(witness)
        for i, v in enumerate(witness):
            assert G.has_edge(v, witness[(i + 1) % len(witness)])


# -------------------------------------------------------------- connectivity

def brute_force_k_connected(G, k):
    if G.n <= k:
        return False
    for size in range(k):
        for cut in combinations(range(G.n), size):
            if components_after_removal(G, cut) > 1:
                return False
    return True


def test_k_connected_examples():
    assert is_k_connected(X33, 3)
    assert not is_k_connected(X33, 4)
    assert not is_k_connected(path_graph(3), 2)
    assert is_k_connected(K4, 3)
    assert not is_k_connected(K4, 4)  # needs more than k vertices
    assert vertex_connectivity(K4) == 3


@settings(max_examples=300, deadline=None)
@given(graphs(max_n=8), st.integers(1, 4))
def test_k_connected_matches_cut_enumeration(G, k):
    assert is_k_connected(G, k) == brute_force_k_connected(G, k)


def test_k_connected_corpus(corpus):
    for G in corpus:
        for k in (1, 2, 3):
            assert is_k_connected(G, k) == brute_force_k_connected(G, k)


# ----------------------------------------------------------------- toughness

def test_toughness_witness_examples():
    w = independent_toughness_witness(X33, 3)
    assert w == (0, 1, 3)
    assert components_after_removal(X33, w) == 4
    assert independent_toughness_witness(K4, 3) is None
    assert independent_toughness_witness(C5, 2) is None


def test_toughness_witness_is_minimal_and_lexicographic():
    star = Graph(4, [(0, 1), (0, 2), (0, 3)])
    assert independent_toughness_witness(star, 4) == (0,)


@settings(max_examples=100, deadline=None)
@given(graphs(max_n=7))
def test_toughness_witness_against_networkx(G):
    w = independent_toughness_witness(G, G.n)
    H = to_nx(G)
    expected = None
    for size in range(1, G.n + 1):
        for S in combinations(range(G.n), size):
            if not is_independent(G, S):
                continue
            R = H.copy()
            R.remove_nodes_from(S)
            if nx.number_connected_components(R) > size:
                expected = S
                break
        if expected:
            break
    assert w == expected


# --------------------------------------------------------------- hamiltonian

def brute_force_hamiltonian(G):
    if G.n < 3:
        return False
    for perm in permutations(range(1, G.n)):
        cyc = (0,) + perm
        if all(G.has_edge(cyc[i], cyc[(i + 1) % G.n]) for i in range(G.n)):
            return True
    return False


def test_hamiltonian_examples():
    assert not hamiltonian_cycle_exists(X33)
    assert hamiltonian_cycle_exists(C5)
    assert not hamiltonian_cycle_exists(path_graph(4))


@settings(max_examples=150, deadline=None)
@given(graphs(max_n=7))
def test_hamiltonian_matches_brute_force(G):
    assert hamiltonian_cycle_exists(G) == brute_force_hamiltonian(G)


@settings(max_examples=150, deadline=None)
@given(graphs(max_n=8))
def test_hamiltonian_graphs_are_one_tough(G):
    if hamiltonian_cycle_exists(G):
        assert independent_toughness_witness(G, G.n) is None


def test_hamiltonian_budget():
    with pytest.raises(BudgetExhausted):
        hamiltonian_cycle_exists(
            Graph(12, [e for e in combinations(range(12), 2) if (e[0] + e[1]) % 3]), budget=5)


# ----------------------------------------------------------- back neighbours

def test_dong_koh_check_examples():
    for order in permutations(range(4)):
        assert dong_koh_check(K4, order)
    assert not dong_koh_check(path_graph(4), (0, 1, 2, 3))
    assert not dong_koh_check(C4, (0, 1, 2, 3))


def test_dong_koh_check_rejects_non_permutation():
    with pytest.raises(GraphError):
        dong_koh_check(K4, (0, 1, 1, 2))


def test_dong_koh_ordering_examples():
    assert dong_koh_ordering_exists(K4)
    assert not dong_koh_ordering_exists(X33)
    assert not dong_koh_ordering_exists(Graph(4, [(0, 1), (2, 3)]))


@settings(max_examples=150, deadline=None)
@given(graphs(max_n=7))
def test_dong_koh_ordering_matches_brute_force(G):
    expected = any(dong_koh_check(G, p) for p in permutations(range(G.n))) if G.n else False
    assert dong_koh_ordering_exists(G) == expected


def test_is_connected():
    assert is_connected(K3)
    assert not is_connected(Graph(0))
    assert not is_connected(Graph(2))
