"""Chromatic polynomials.

Two independent routes:

* :func:`chromatic_polynomial` -- deletion-contraction with component and
  block factorisation, closed forms for edgeless graphs, trees and
  cliques, and a memo keyed on a canonical form of the graph;
* :func:`chromatic_polynomial_by_interpolation` -- count proper colourings
  at ``k = 0..n`` by backtracking and interpolate.

Internally graphs are tuples of adjacency bitmasks.
"""

from fractions import Fraction

from chromroot.errors import Budget
from chromroot.graph import Graph, _bits, blocks_of_adj
from chromroot.poly import IntPoly, divide_exact, falling_factorial

X = IntPoly.x()

MAX_CACHED_VERTICES = 24
MAX_CACHED_EDGES = 60
CANON_LEAF_LIMIT = 4096


def _popcount(x):
    return bin(x).count("1")


def _edge_count(adj):
    return sum(_popcount(m) for m in adj) // 2


def _induced(adj, mask):
    """Subgraph on the vertices of ``mask``, relabelled in ascending order."""
    vs = list(_bits(mask))
    pos = {v: i for i, v in enumerate(vs)}
    out = []
    for v in vs:
        m = 0
        for w in _bits(adj[v] & mask):
            m |= 1 << pos[w]
        out.append(m)
    return tuple(out)


def _components(adj):
    n = len(adj)
    remaining = (1 << n) - 1
    comps = []
    while remaining:
        comp = frontier = remaining & -remaining
        while frontier:
            nxt = 0
            for v in _bits(frontier):
                nxt |= adj[v]
            frontier = nxt & ~comp
            comp |= frontier
        remaining &= ~comp
        comps.append(comp)
    return comps


def _delete(adj, u, v):
    out = list(adj)
    out[u] &= ~(1 << v)
    out[v] &= ~(1 << u)
    return tuple(out)


def _contract(adj, u, v):
    """Contract edge uv (u < v): merged vertex is u, indices above v shift down."""
    low_mask = (1 << v) - 1
    out = []
    for w, m in enumerate(adj):
        if w == v:
            continue
        if w == u:
            m = (adj[u] | adj[v]) & ~(1 << u) & ~(1 << v)
        elif m >> v & 1:
            m = (m & ~(1 << v)) | (1 << u)
        out.append((m & low_mask) | ((m >> (v + 1)) << v))
    return tuple(out)


# ---------------------------------------------------------- canonical form

def _refine(adj, cells):
    """Equitable refinement; split order depends only on neighbour counts."""
    while True:
        masks = []
        for cell in cells:
            m = 0
            for v in cell:
                m |= 1 << v
            masks.append(m)
        new_cells = []
        for cell in cells:
            if len(cell) == 1:
                new_cells.append(cell)
                continue
            groups = {}
            for v in cell:
                sig = tuple(_popcount(adj[v] & m) for m in masks)
                groups.setdefault(sig, []).append(v)
            for sig in sorted(groups):
                new_cells.append(groups[sig])
        if len(new_cells) == len(cells):
            return new_cells
        cells = new_cells


def _certificate(adj, order):
    pos = [0] * len(adj)
    for i, v in enumerate(order):
        pos[v] = i
    cert = []
    for v in order:
        m = 0
        for w in _bits(adj[v]):
            m |= 1 << pos[w]
        cert.append(m)
    return tuple(cert)


def canonical_form(adj, leaf_limit=CANON_LEAF_LIMIT):
    """Canonical certificate of an adjacency-mask tuple, or ``None``.

    Individualisation-refinement search taking the lexicographically least
    relabelled adjacency.  Branches on twins (vertices whose neighbourhoods
    agree apart from each other) are pruned: swapping twins is an
    automorphism that fixes the current partition.  Returns ``None`` when
    the search would visit more than ``leaf_limit`` leaves.
    """
    n = len(adj)
    by_degree = {}
    for v in range(n):
        by_degree.setdefault(_popcount(adj[v]), []).append(v)
    cells = _refine(adj, [by_degree[d] for d in sorted(by_degree)])
    best = None
    leaves = 0
    stack = [cells]
    while stack:
        cells = stack.pop()
        target = next((i for i, c in enumerate(cells) if len(c) > 1), None)
        if target is None:
            leaves += 1
            if leaves > leaf_limit:
                return None
            cert = _certificate(adj, [c[0] for c in cells])
            if best is None or cert < best:
                best = cert
            continue
        cell = cells[target]
        reps = []
        for v in cell:
            if any((adj[v] & ~(1 << r)) == (adj[r] & ~(1 << v)) for r in reps):
                continue
            reps.append(v)
        for v in reversed(reps):
            rest = [w for w in cell if w != v]
            split = cells[:target] + [[v], rest] + cells[target + 1:]
            stack.append(_refine(adj, split))
    return best


def cache_key(adj, canonical=True):
    """Memo key: ``("C", cert)`` when canonicalised, ``("I", adj)`` otherwise.

    Equal keys always mean isomorphic graphs.
    """
    if canonical:
        cert = canonical_form(adj)
        if cert is not None:
            return ("C", cert)
    return ("I", adj)


# ---------------------------------------------------- deletion-contraction

class ChromaticEngine:
    """Memoised deletion-contraction.

    ``canonical=False`` caches only identical graphs (the differential
    testing fallback); ``use_cache=False`` disables memoisation entirely.
    """

    def __init__(self, use_cache=True, canonical=True, budget=None):
        self.use_cache = use_cache
        self.canonical = canonical
        self.budget_limit = budget
        self.cache = {}
        self.hits = 0

    def clear(self):
        self.cache.clear()
        self.hits = 0

    def polynomial(self, G, budget=None):
        budget = budget if isinstance(budget, Budget) else Budget(
            budget if budget is not None else self.budget_limit, "deletion-contraction")
        adj = G.adj if isinstance(G, Graph) else tuple(G)
        return self._poly(adj, budget)

    def _poly(self, adj, budget):
        n = len(adj)
        if n == 0:
            return IntPoly((1,))
        comps = _components(adj)
        if len(comps) > 1:
            out = IntPoly((1,))
            for comp in comps:
                out = out * self._connected(_induced(adj, comp), budget)
            return out
        return self._connected(adj, budget)

    def _connected(self, adj, budget):
        n = len(adj)
        m = _edge_count(adj)
        if m == 0:
            return X ** n
        if m == n - 1:
            return X * (X - 1) ** (n - 1)
        if m == n * (n - 1) // 2:
            return falling_factorial(n)
        cacheable = self.use_cache and n <= MAX_CACHED_VERTICES and m <= MAX_CACHED_EDGES
        if cacheable:
            key = cache_key(adj, self.canonical)
            hit = self.cache.get(key)
            if hit is not None:
                self.hits += 1
                return hit
        budget.tick()
        found, _ = blocks_of_adj(adj)
        if len(found) > 1:
            out = IntPoly((1,))
            for block in found:
                out = out * self._connected(_induced(adj, block), budget)
            result = divide_exact(out, X ** (len(found) - 1))
        else:
            u, v = choose_edge(adj)
            deleted = self._poly(_delete(adj, u, v), budget)
            contracted = self._poly(_contract(adj, u, v), budget)
            result = deleted - contracted
        if cacheable:
            # setdefault keeps the first stored value if two branches race
            result = self.cache.setdefault(key, result)
        return result


def choose_edge(adj):
    """Edge maximising (larger endpoint degree, smaller endpoint degree);
    ties go to the lexicographically smallest pair."""
    deg = [_popcount(m) for m in adj]
    best = None
    best_score = None
    for u, mask in enumerate(adj):
        for v in _bits(mask >> (u + 1) << (u + 1)):
            du, dv = deg[u], deg[v]
            score = (max(du, dv), min(du, dv))
            if best_score is None or score > best_score:
                best, best_score = (u, v), score
    return best


_default_engine = ChromaticEngine()


def chromatic_polynomial(G, budget=None, use_cache=True, canonical=True):
    """Exact chromatic polynomial of ``G`` by deletion-contraction.

    Uses a shared memo across calls unless ``use_cache`` is false or
    ``canonical`` is false (then a fresh engine is used).
    """
    if use_cache and canonical:
        return _default_engine.polynomial(G, budget)
    return ChromaticEngine(use_cache=use_cache, canonical=canonical).polynomial(G, budget)


# --------------------------------------------------- counting oracle

def _colouring_order(G):
    # BFS from highest-degree vertices so constraints bite early
    order = []
    seen = set()
    for s in sorted(range(G.n), key=lambda v: (-G.degree(v), v)):
        if s in seen:
            continue
        seen.add(s)
        queue = [s]
        while queue:
            v = queue.pop(0)
            order.append(v)
            for w in sorted(G.neighbors(v), key=lambda w: (-G.degree(w), w)):
                if w not in seen:
                    seen.add(w)
                    queue.append(w)
    return order


def count_proper_colourings(G, k, budget=None):
    """Number of proper colourings of ``G`` with colours ``0..k-1``.

    Backtracking in which a vertex either reuses one of the colours already
    placed or opens a new one; opening the j-th new colour stands for the
    ``k - j`` interchangeable unused colours, so every colouring is counted
    exactly once without enumerating colour permutations.
    """
    if k < 0:
        raise ValueError("k must be non-negative")
    if G.n == 0:
        return 1
    budget = budget if isinstance(budget, Budget) else Budget(budget, "colouring count")
    order = _colouring_order(G)
    earlier = []
    placed = set()
    for v in order:
        earlier.append([w for w in G.neighbors(v) if w in placed])
        placed.add(v)
    colour = [0] * G.n

    def rec(i, used):
        budget.tick()
        if i == len(order):
            return 1
        v = order[i]
        banned = {colour[w] for w in earlier[i]}
        total = 0
        for c in range(used):
            if c not in banned:
                colour[v] = c
                total += rec(i + 1, used)
        if used < k:
            colour[v] = used
            total += (k - used) * rec(i + 1, used + 1)
        return total

    return rec(0, 0)


def chromatic_polynomial_by_interpolation(G, budget=None):
    """Interpolate the degree-n polynomial through ``(k, count(G, k))``, k = 0..n.

    Newton forward differences over the rationals; the result must have
    integer coefficients or an ``ArithmeticError`` is raised.
    """
    n = G.n
    budget = budget if isinstance(budget, Budget) else Budget(budget, "colouring count")
    values = [count_proper_colourings(G, k, budget) for k in range(n + 1)]
    diffs = []
    row = values
    while row:
        diffs.append(row[0])
        row = [b - a for a, b in zip(row, row[1:])]
    coeffs = [Fraction(0)] * (n + 1)
    fact = 1
    for j, d in enumerate(diffs):
        if j:
            fact *= j
        basis = falling_factorial(j)
        for i, c in enumerate(basis.coeffs):
            coeffs[i] += Fraction(d * c, fact)
    if any(c.denominator != 1 for c in coeffs):
        raise ArithmeticError("interpolated chromatic polynomial has non-integer coefficients")
    return IntPoly(int(c) for c in coeffs)
