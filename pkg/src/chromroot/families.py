"""The graph families X(s,t), Y(s,t) and K(s,t).

Vertex numbering: 0..4 are the hub vertices v0..v4, then the independent
set S = {5, ..., 4+s}, then T = {5+s, ..., 4+s+t}.  Hub edges are v1v2 and
v3v4 (Y adds v1v4); each S vertex is joined to v0, v1, v3 and each T
vertex to v0, v2, v4.

For X and Y the chromatic polynomial is a sum over colouring types of the
hub: a type is a proper set partition of the hub with ``k`` blocks, and
contributes ``x(x-1)...(x-k+1) * (x-dS)**s * (x-dT)**t`` where ``dS``
(``dT``) is the number of distinct colours that S (T) vertices must avoid.
"""

import re
from dataclasses import dataclass
from itertools import product

from chromroot.chromatic import chromatic_polynomial
from chromroot.errors import VerificationError
from chromroot.graph import Graph
from chromroot.poly import IntPoly, derivative, eval_rat, falling_factorial

HUB = 5
S_ATTACH = (0, 1, 3)
T_ATTACH = (0, 2, 4)
X_HUB_EDGES = ((1, 2), (3, 4))
Y_HUB_EDGES = X_HUB_EDGES + ((1, 4),)

KINDS = ("X", "Y", "Kb")


@dataclass(frozen=True)
class FamilySpec:
    kind: str
    s: int
    t: int

    def __post_init__(self):
        if self.kind not in KINDS:
            raise ValueError(f"unknown family kind {self.kind!r}; expected one of {KINDS}")
        if self.s < 1 or self.t < 1:
            raise ValueError("s and t must be at least 1")

    @classmethod
    def parse(cls, text):
        """Parse ``"X:3,5"``, ``"Y:7,9"`` or ``"Kb:3,4"``."""
        m = re.fullmatch(r"\s*(X|Y|Kb)\s*:\s*(\d+)\s*,\s*(\d+)\s*", text)
        if not m:
            raise ValueError(f"cannot parse family spec {text!r}; expected e.g. 'X:3,5'")
        return cls(m.group(1), int(m.group(2)), int(m.group(3)))

    def __str__(self):
        return f"{self.kind}:{self.s},{self.t}"

    @property
    def n(self):
        return self.s + self.t + (0 if self.kind == "Kb" else HUB)


def hub_edges(kind):
    if kind == "X":
        return X_HUB_EDGES
    if kind == "Y":
        return Y_HUB_EDGES
    raise ValueError(f"family kind {kind!r} has no hub")


def build_family(spec):
    if spec.kind == "Kb":
        return Graph(spec.s + spec.t,
                     [(i, spec.s + j) for i in range(spec.s) for j in range(spec.t)])
    s, t = spec.s, spec.t
    edges = list(hub_edges(spec.kind))
    for v in range(HUB, HUB + s):
        edges += [(h, v) for h in S_ATTACH]
    for v in range(HUB + s, HUB + s + t):
        edges += [(h, v) for h in T_ATTACH]
    return Graph(HUB + s + t, edges)


def X_graph(s, t):
    return build_family(FamilySpec("X", s, t))


def Y_graph(s, t):
    return build_family(FamilySpec("Y", s, t))


def complete_bipartite(s, t):
    return build_family(FamilySpec("Kb", s, t))


@dataclass(frozen=True)
class HubType:
    """A proper colouring type of the hub.

    ``blocks`` is the set partition as a tuple of sorted vertex tuples,
    ordered by smallest member.
    """

    blocks: tuple
    k: int
    dS: int
    dT: int

    @property
    def labels(self):
        """Restricted-growth encoding: block index of v0..v4."""
        out = [0] * HUB
        for i, block in enumerate(self.blocks):
            for v in block:
                out[v] = i
        return tuple(out)

    def term(self, s, t):
        x = IntPoly.x()
        return falling_factorial(self.k) * (x - self.dS) ** s * (x - self.dT) ** t


def _set_partitions(n):
    """Restricted growth strings of length n."""
    def rec(prefix, top):
        if len(prefix) == n:
            yield tuple(prefix)
            return
        for c in range(top + 2):
            yield from rec(prefix + [c], max(top, c))
    if n == 0:
        yield ()
        return
    yield from rec([0], 0)


def enumerate_hub_types(kind):
    """All proper set partitions of the hub, ordered by block count then encoding."""
    edges = hub_edges(kind)
    out = []
    for rgs in _set_partitions(HUB):
        if any(rgs[u] == rgs[v] for u, v in edges):
            continue
        k = max(rgs) + 1
        blocks = tuple(tuple(v for v in range(HUB) if rgs[v] == b) for b in range(k))
        out.append(HubType(blocks, k,
                           len({rgs[v] for v in S_ATTACH}),
                           len({rgs[v] for v in T_ATTACH})))
    out.sort(key=lambda h: (h.k, h.labels))
    return out


_TYPE_CACHE = {}


def hub_types(kind):
    if kind not in _TYPE_CACHE:
        _TYPE_CACHE[kind] = tuple(enumerate_hub_types(kind))
    return _TYPE_CACHE[kind]


def family_chromatic_polynomial(spec):
    """Closed-form chromatic polynomial; K(s,t) falls back to deletion-contraction."""
    if spec.kind == "Kb":
        return chromatic_polynomial(build_family(spec))
    total = IntPoly()
    for h in hub_types(spec.kind):
        total = total + h.term(spec.s, spec.t)
    return total


_HISTOGRAMS = {}


def _hub_histogram(kind, k):
    """Counts of (dS, dT) over all proper hub colourings with k colours.

    Enumerates all ``k**5`` assignments directly; deliberately does not use
    :func:`enumerate_hub_types`.
    """
    key = (kind, k)
    if key not in _HISTOGRAMS:
        edges = hub_edges(kind)
        hist = {}
        for col in product(range(k), repeat=HUB):
            if any(col[u] == col[v] for u, v in edges):
                continue
            ds = len({col[v] for v in S_ATTACH})
            dt = len({col[v] for v in T_ATTACH})
            hist[(ds, dt)] = hist.get((ds, dt), 0) + 1
        _HISTOGRAMS[key] = hist
    return _HISTOGRAMS[key]


def family_eval_bruteforce(spec, k):
    """P(spec, k) by enumerating hub colourings and counting S/T choices."""
    if spec.kind == "Kb":
        raise ValueError("brute-force hub evaluation needs kind X or Y")
    hist = _hub_histogram(spec.kind, k)
    return sum(c * (k - ds) ** spec.s * (k - dt) ** spec.t for (ds, dt), c in hist.items())


def derivative_formula(s, t):
    return 2 * ((-1) ** s + (-1) ** t + (-1) ** (s + t))


def derivative_at_two(spec):
    """``(symbolic, formula)``: P'(2) from the closed form and from the
    parity formula.  Raises :class:`VerificationError` if they differ."""
    if spec.kind not in ("X", "Y"):
        raise ValueError("derivative_at_two needs kind X or Y")
    if spec.s < 2 or spec.t < 2:
        raise ValueError("the derivative identity needs s, t >= 2")
    value = eval_rat(derivative(family_chromatic_polynomial(spec)), 2)
    assert value.denominator == 1
    symbolic = int(value)
    formula = derivative_formula(spec.s, spec.t)
    if symbolic != formula:
        raise VerificationError(
            f"P'({spec}, 2) = {symbolic} but the parity formula gives {formula}")
    return symbolic, formula


def derivative_relevant_types(kind):
    """Hub types whose term can contribute to P'(2): neither dS nor dT is 2."""
    return [h for h in hub_types(kind) if h.dS != 2 and h.dT != 2]
