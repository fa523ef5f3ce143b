"""Graph corpora: seeded random graphs and exhaustive connected catalogs."""

import random
from itertools import combinations

from chromroot.chromatic import canonical_form
from chromroot.graph import Graph
from chromroot.graph_io import to_graph6

CORPUS_PROBABILITIES = (0.2, 0.5, 0.8)


def random_graph(n, p, rng):
    return Graph(n, [e for e in combinations(range(n), 2) if rng.random() < p])


def random_corpus(count=200, max_n=8, seed=20240601, min_n=1):
    """``count`` G(n, p) graphs with n in ``min_n..max_n``, p cycling through 0.2/0.5/0.8."""
    rng = random.Random(seed)
    out = []
    for i in range(count):
        n = rng.randint(min_n, max_n)
        p = CORPUS_PROBABILITIES[i % len(CORPUS_PROBABILITIES)]
        out.append(random_graph(n, p, rng))
    return out


def _canonical_graph(adj):
    cert = canonical_form(adj, leaf_limit=10**9)
    return cert


def connected_graphs(n):
    """One representative of every isomorphism class of connected graphs on n vertices.

    Built by adding a vertex, with every non-empty neighbourhood, to each
    connected graph on ``n - 1`` vertices: every connected graph has a
    vertex whose removal leaves it connected, so nothing is missed.
    Representatives are the canonical relabelling, sorted by edge count
    then certificate.
    """
    if n <= 0:
        return []
    level = {(0,)}
    for k in range(2, n + 1):
        nxt = set()
        for cert in level:
            for nbrs in range(1, 1 << (k - 1)):
                adj = list(cert) + [nbrs]
                for v in range(k - 1):
                    if nbrs >> v & 1:
                        adj[v] |= 1 << (k - 1)
                nxt.add(_canonical_graph(tuple(adj)))
        level = nxt
    graphs = [Graph._from_adj(cert) for cert in level]
    graphs.sort(key=lambda G: (G.m, canonical_form(G.adj, leaf_limit=10**9)))
    return graphs


def write_catalog(path, graphs):
    with open(path, "w") as fh:
        for G in graphs:
            fh.write(to_graph6(G) + "\n")
