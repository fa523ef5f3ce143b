"""Simple undirected graphs on vertices ``0..n-1`` and the structural
queries the rest of the package needs: deletion/contraction, components,
blocks, bipartiteness, vertex connectivity, toughness witnesses,
hamiltonicity and the back-neighbour ordering condition.

Graphs are immutable.  Adjacency is kept as one integer bitmask per vertex,
which keeps the exponential searches in this module and in
:mod:`chromroot.chromatic` reasonably fast in pure Python.
"""

from collections import deque
from itertools import combinations

from chromroot.errors import Budget, GraphError


def _bits(mask):
    while mask:
        low = mask & -mask
        yield low.bit_length() - 1
        mask ^= low


class Graph:
    """A simple loopless undirected graph on vertices ``0..n-1``."""

    __slots__ = ("n", "edges", "adj")

    def __init__(self, n, edges=()):
        if n < 0:
            raise GraphError(f"vertex count must be non-negative, got {n}")
        adj = [0] * n
        normalized = set()
        for pair in edges:
            u, v = pair
            if u == v:
                raise GraphError(f"loop at vertex {u}: pair ({u}, {v})")
            if not (0 <= u < n and 0 <= v < n):
                raise GraphError(f"edge ({u}, {v}) has an endpoint outside 0..{n - 1}")
            if u > v:
                u, v = v, u
            normalized.add((u, v))
            adj[u] |= 1 << v
            adj[v] |= 1 << u
        object.__setattr__(self, "n", n)
        object.__setattr__(self, "edges", frozenset(normalized))
        object.__setattr__(self, "adj", tuple(adj))

    def __setattr__(self, name, value):
        raise AttributeError("Graph is immutable")

    @classmethod
    def _from_adj(cls, adj):
        edges = [(u, v) for u, mask in enumerate(adj) for v in _bits(mask) if u < v]
        return cls(len(adj), edges)

    @property
    def m(self):
        return len(self.edges)

    def __eq__(self, other):
        if not isinstance(other, Graph):
            return NotImplemented
        return self.n == other.n and self.edges == other.edges

    def __hash__(self):
        return hash((self.n, self.edges))

    def __repr__(self):
        return f"Graph(n={self.n}, edges={sorted(self.edges)})"

    def neighbors(self, v):
        return list(_bits(self.adj[v]))

    def degree(self, v):
        return bin(self.adj[v]).count("1")

    def has_edge(self, u, v):
        return bool(self.adj[u] >> v & 1)

    def sorted_edges(self):
        return sorted(self.edges)

    def induced_subgraph(self, vertices):
        """Subgraph on ``vertices``, relabelled ``0..k-1`` in ascending order."""
        vs = sorted(vertices)
        index = {v: i for i, v in enumerate(vs)}
        return Graph(len(vs), [(index[u], index[v]) for u, v in self.edges
                               if u in index and v in index])


def from_edge_list(n, pairs):
    """Build a graph from ``pairs``; duplicates collapse, loops are rejected."""
    return Graph(n, pairs)


def complete_graph(n):
    return Graph(n, combinations(range(n), 2))


def cycle_graph(n):
    return Graph(n, [(i, (i + 1) % n) for i in range(n)])


def path_graph(n):
    return Graph(n, [(i, i + 1) for i in range(n - 1)])


def empty_graph(n):
    return Graph(n)


def _normalize_edge(G, e):
    u, v = e
    if u > v:
        u, v = v, u
    if (u, v) not in G.edges:
        raise GraphError(f"edge ({e[0]}, {e[1]}) is not in the graph")
    return u, v


def delete_edge(G, e):
    e = _normalize_edge(G, e)
    return Graph(G.n, G.edges - {e})


def contract_edge(G, e):
    """Merge the endpoints of ``e`` into one vertex.

    The merged vertex keeps index ``min(u, v)``; every vertex above
    ``max(u, v)`` shifts down by one.  Parallel edges collapse.
    """
    u, v = _normalize_edge(G, e)

    def relabel(w):
        if w == v:
            return u
        return w - 1 if w > v else w

    edges = set()
    for a, b in G.edges:
        a, b = relabel(a), relabel(b)
        if a != b:
            edges.add((a, b) if a < b else (b, a))
    return Graph(G.n - 1, edges)


def connected_components(G):
    """Vertex sets of the components, ordered by smallest member."""
    seen = 0
    comps = []
    for s in range(G.n):
        if seen >> s & 1:
            continue
        comp = 1 << s
        frontier = 1 << s
        while frontier:
            nxt = 0
            for v in _bits(frontier):
                nxt |= G.adj[v]
            frontier = nxt & ~comp
            comp |= frontier
        seen |= comp
        comps.append(sorted(_bits(comp)))
    return comps


def component_count(G):
    return len(connected_components(G))


def is_connected(G):
    return G.n > 0 and component_count(G) == 1


class BlockDecomposition:
    """Biconnected components with at least one edge, plus cut vertices.

    ``b`` counts blocks that are not isolated vertices, so it equals
    ``len(blocks)``.
    """

    __slots__ = ("blocks", "articulation")

    def __init__(self, blocks, articulation):
        self.blocks = blocks
        self.articulation = articulation

    @property
    def b(self):
        return len(self.blocks)

    def __iter__(self):
        return iter((self.blocks, self.articulation))

    def __repr__(self):
        return f"BlockDecomposition(blocks={self.blocks}, articulation={sorted(self.articulation)})"


def blocks(G):
    """Hopcroft-Tarjan biconnected components.

    Blocks are sorted vertex lists ordered by smallest member; isolated
    vertices form no block.
    """
    found, articulation = blocks_of_adj(G.adj)
    return BlockDecomposition(sorted(sorted(_bits(b)) for b in found), articulation)


def blocks_of_adj(adj):
    """Blocks (as vertex bitmasks) and cut vertices of an adjacency-mask tuple.

    Iterative DFS so deep paths do not hit the recursion limit.
    """
    n = len(adj)
    disc = [-1] * n
    low = [0] * n
    found = []
    articulation = set()
    counter = 0
    for root in range(n):
        if disc[root] != -1 or not adj[root]:
            continue
        disc[root] = low[root] = counter
        counter += 1
        root_children = 0
        vstack = []
        stack = [(root, -1, _bits(adj[root]))]
        while stack:
            v, parent, it = stack[-1]
            advanced = False
            for w in it:
                if disc[w] == -1:
                    disc[w] = low[w] = counter
                    counter += 1
                    if v == root:
                        root_children += 1
                    vstack.append(w)
                    stack.append((w, v, _bits(adj[w])))
                    advanced = True
                    break
                if w != parent and disc[w] < low[v]:
                    low[v] = disc[w]
            if advanced:
                continue
            stack.pop()
            if parent == -1:
                continue
            if low[v] < low[parent]:
                low[parent] = low[v]
            if low[v] >= disc[parent]:
                if parent != root:
                    articulation.add(parent)
                comp = 1 << parent
                while True:
                    w = vstack.pop()
                    comp |= 1 << w
                    if w == v:
                        break
                found.append(comp)
        if root_children > 1:
            articulation.add(root)
    return found, articulation


def is_bipartite(G):
    """Return ``(True, colouring)`` or ``(False, odd_cycle)``.

    The colouring is a list of 0/1 per vertex; the odd cycle is a vertex
    list whose consecutive entries (cyclically) are adjacent.
    """
    colour = [-1] * G.n
    parent = [-1] * G.n
    for s in range(G.n):
        if colour[s] != -1:
            continue
        colour[s] = 0
        queue = deque([s])
        while queue:
            v = queue.popleft()
            for w in _bits(G.adj[v]):
                if colour[w] == -1:
                    colour[w] = 1 - colour[v]
                    parent[w] = v
                    queue.append(w)
                elif colour[w] == colour[v]:
                    return False, _odd_cycle(parent, v, w)
    return True, colour


def _odd_cycle(parent, v, w):
    # v, w are adjacent and equidistant-parity in the BFS tree
    def chain(x):
        out = [x]
        while parent[x] != -1:
            x = parent[x]
            out.append(x)
        return out

    pv, pw = chain(v), chain(w)
    ancestors = set(pv)
    meet = next(x for x in pw if x in ancestors)
    left = pv[:pv.index(meet) + 1]
    right = pw[:pw.index(meet)]
    return left + right[::-1]


def local_vertex_connectivity(G, s, t, limit=None):
    """Maximum number of internally vertex-disjoint s-t paths (s, t non-adjacent).

    Unit-capacity augmenting paths on the split-vertex digraph; stops early
    once ``limit`` paths are found.
    """
    if G.has_edge(s, t):
        raise GraphError("local vertex connectivity needs non-adjacent vertices")
    n = G.n
    # node 2v = v_in, 2v+1 = v_out
    cap = {}

    def add(a, b, c):
        cap[(a, b)] = cap.get((a, b), 0) + c
        cap.setdefault((b, a), 0)

    out = [[] for _ in range(2 * n)]
    big = n + 1
    for v in range(n):
        add(2 * v, 2 * v + 1, big if v in (s, t) else 1)
    for u, v in G.edges:
        add(2 * u + 1, 2 * v, big)
        add(2 * v + 1, 2 * u, big)
    for a, b in cap:
        out[a].append(b)
    source, sink = 2 * s + 1, 2 * t
    flow = 0
    while limit is None or flow < limit:
        prev = {source: None}
        queue = deque([source])
        while queue and sink not in prev:
            a = queue.popleft()
            for b in out[a]:
                if b not in prev and cap[(a, b)] > 0:
                    prev[b] = a
                    queue.append(b)
        if sink not in prev:
            break
        b = sink
        while prev[b] is not None:
            a = prev[b]
            cap[(a, b)] -= 1
            cap[(b, a)] += 1
            b = a
        flow += 1
    return flow


def is_k_connected(G, k):
    """True iff G has more than k vertices and no vertex cut of size < k."""
    if k < 1:
        raise GraphError("k must be at least 1")
    if G.n <= k:
        return False
    if not is_connected(G):
        return False
    for s, t in combinations(range(G.n), 2):
        if G.has_edge(s, t):
            continue
        if local_vertex_connectivity(G, s, t, limit=k) < k:
            return False
    return True


def vertex_connectivity(G):
    """Largest k for which :func:`is_k_connected` holds (0 if none)."""
    k = 0
    while is_k_connected(G, k + 1):
        k += 1
    return k


def components_after_removal(G, removed):
    """Number of components of G minus the vertex set ``removed``."""
    mask = 0
    for v in removed:
        mask |= 1 << v
    remaining = ((1 << G.n) - 1) & ~mask
    count = 0
    while remaining:
        low = remaining & -remaining
        comp = frontier = low
        while frontier:
            nxt = 0
            for v in _bits(frontier):
                nxt |= G.adj[v]
            frontier = nxt & remaining & ~comp
            comp |= frontier
        remaining &= ~comp
        count += 1
    return count


def is_independent(G, vertices):
    vs = list(vertices)
    mask = 0
    for v in vs:
        mask |= 1 << v
    return all(not (G.adj[v] & mask) for v in vs)


def independent_toughness_witness(G, max_size):
    """Smallest independent S (by size, then lexicographic) with c(G-S) > |S|.

    Exhaustive over all independent sets with ``1 <= |S| <= max_size``;
    exponential, meant for n up to about 25 with small ``max_size``.
    Returns a sorted tuple or ``None``.
    """
    if max_size > G.n:
        raise GraphError(f"max_size {max_size} exceeds vertex count {G.n}")
    for size in range(1, max_size + 1):
        for S in combinations(range(G.n), size):
            if is_independent(G, S) and components_after_removal(G, S) > size:
                return S
    return None


def hamiltonian_cycle_exists(G, budget=None):
    """Exact backtracking decision with degree and connectivity pruning."""
    n = G.n
    if n < 3:
        return False
    if any(G.degree(v) < 2 for v in range(n)) or not is_connected(G):
        return False
    if blocks(G).articulation:
        return False
    budget = budget if isinstance(budget, Budget) else Budget(budget, "hamiltonian cycle search")
    full = (1 << n) - 1
    start = 0
    adj = G.adj

    def extend(v, visited, count):
        budget.tick()
        if count == n:
            return bool(adj[v] & 1 << start)
        unvisited = full & ~visited
        # every unvisited vertex still needs two usable neighbours
        for w in _bits(unvisited):
            avail = adj[w] & (unvisited | 1 << start | 1 << v)
            if bin(avail).count("1") < 2:
                return False
        for w in _bits(adj[v] & unvisited):
            if extend(w, visited | 1 << w, count + 1):
                return True
        return False

    return extend(start, 1 << start, 1)


def dong_koh_check(G, ordering):
    """True iff ``ordering`` is a hamiltonian path in which every vertex at
    (1-indexed) position ``i > 2`` also has a neighbour among positions
    ``1..i-2``."""
    order = list(ordering)
    if sorted(order) != list(range(G.n)):
        raise GraphError("ordering must be a permutation of all vertices")
    before = 0
    for i, v in enumerate(order):
        if i >= 1 and not G.has_edge(order[i - 1], v):
            return False
        if i >= 2 and not (G.adj[v] & before):
            return False
        if i >= 1:
            before |= 1 << order[i - 1]
    return True


def find_dong_koh_ordering(G, budget=None):
    """Return an ordering satisfying :func:`dong_koh_check`, or ``None``."""
    n = G.n
    if n == 0:
        return None
    if n == 1:
        return [0]
    if not is_connected(G):
        return None
    budget = budget if isinstance(budget, Budget) else Budget(budget, "back-neighbour ordering search")
    adj = G.adj
    full = (1 << n) - 1

    def extend(order, used, older):
        # older: vertices at positions 1..len(order)-1
        budget.tick()
        if len(order) == n:
            return order
        last = order[-1]
        for w in _bits(adj[last] & full & ~used):
            if len(order) >= 2 and not (adj[w] & older):
                continue
            res = extend(order + [w], used | 1 << w, older | 1 << last)
            if res is not None:
                return res
        return None

    for a in range(n):
        for b in _bits(adj[a]):
            res = extend([a, b], 1 << a | 1 << b, 1 << a)
            if res is not None:
                return res
    return None


def dong_koh_ordering_exists(G, budget=None):
    return find_dong_koh_ordering(G, budget) is not None
