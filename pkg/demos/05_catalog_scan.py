"""Scan an exhaustive catalog of small connected graphs.

Uses the graph6 file shipped with the tests (all connected graphs on up to
7 vertices) and reports graphs with a chromatic root in (1,2).
"""
import collections
import os

from chromroot.analysis import ScanFilters, scan_catalog
from chromroot.catalog import connected_graphs
from chromroot.graph_io import parse_graph6

HERE = os.path.dirname(os.path.abspath(__file__))
CATALOG = os.path.join(HERE, os.pardir, "tests", "data", "connected_upto7.g6")

# %% the catalog can also be regenerated from scratch
print("connected graphs on 5 vertices:", len(connected_graphs(5)))

with open(CATALOG) as fh:
    lines = [ln.strip() for ln in fh if ln.strip()]

# %% everything with a root in (1,2), grouped by order
hits = list(scan_catalog(lines, ScanFilters()))
print("graphs with a root in (1,2):", len(hits))
print("by order:", dict(sorted(collections.Counter(h["n"] for h in hits).items())))

# %% now only 3-connected non-bipartite graphs: nothing this small
strict = list(scan_catalog(lines, ScanFilters(min_connectivity=3, non_bipartite=True)))
print("3-connected, non-bipartite:", len(strict))

# %% the smallest root found anywhere in the catalog
best = min(hits, key=lambda h: h["roots"][0]["decimal"])
G = parse_graph6(best["source"].split(":", 1)[1])
print("smallest:", best["roots"][0]["decimal"], "from", best["source"], f"(n={G.n}, m={G.m})")
