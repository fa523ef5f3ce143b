from itertools import product

import pytest

from chromroot.chromatic import chromatic_polynomial
from chromroot.errors import VerificationError
from chromroot.families import (FamilySpec, build_family, derivative_at_two,
                                derivative_formula, derivative_relevant_types,
                                enumerate_hub_types, family_chromatic_polynomial,
                                family_eval_bruteforce, hub_edges)
from chromroot.graph import is_bipartite, is_k_connected
from chromroot.poly import IntPoly, eval_rat, isolate_roots, refine_root

x = IntPoly.x()


def brute_force_partitions(kind):
    """Distinct proper hub partitions seen among all 5**5 colourings."""
    edges = hub_edges(kind)
    seen = set()
    for col in product(range(5), repeat=5):
        if any(col[u] == col[v] for u, v in edges):
            continue
        classes = {}
        for v, c in enumerate(col):
            classes.setdefault(c, []).append(v)
        seen.add(frozenset(tuple(b) for b in classes.values()))
    return seen


def test_spec_parsing():
    assert FamilySpec.parse("X:3,5") == FamilySpec("X", 3, 5)
    assert FamilySpec.parse("Kb:3,4") == FamilySpec("Kb", 3, 4)
    assert str(FamilySpec.parse(" Y : 7 , 9 ")) == "Y:7,9"
    for bad in ("Z:3,3", "X:3", "X:0,3", "X3,3"):
        with pytest.raises(ValueError):
            FamilySpec.parse(bad)


def test_build_examples():
    G = build_family(FamilySpec("X", 3, 3))
    assert G.n == 11 and G.m == 20
    Y = build_family(FamilySpec("Y", 3, 3))
    assert Y.m == 21 and Y.edges - G.edges == {(1, 4)}
    K = build_family(FamilySpec("Kb", 3, 4))
    assert K.m == 12 and is_bipartite(K)[0]


def test_build_neighbourhoods():
    G = build_family(FamilySpec("X", 4, 6))
    for v in range(5, 9):
        assert G.neighbors(v) == [0, 1, 3]
    for v in range(9, 15):
        assert G.neighbors(v) == [0, 2, 4]


def test_hub_type_count():
    assert len(enumerate_hub_types("X")) == 27


@pytest.mark.parametrize("kind", ["X", "Y"])
def test_hub_types_match_brute_force(kind):
    types = enumerate_hub_types(kind)
    expected = brute_force_partitions(kind)
    assert len(types) == len(expected)
    assert {frozenset(h.blocks) for h in types} == expected


def test_hub_types_ordering_and_invariants():
    for kind in ("X", "Y"):
        types = enumerate_hub_types(kind)
        assert [(h.k, h.labels) for h in types] == sorted((h.k, h.labels) for h in types)
        for h in types:
            assert 1 <= h.dS <= 3 and 1 <= h.dT <= 3 and max(h.dS, h.dT) <= h.k <= 5
            for u, v in hub_edges(kind):
                assert h.labels[u] != h.labels[v]


def test_displayed_type_present():
    # v0, v1, v3 share a colour; v2, v4 get two further colours
    (h,) = [h for h in enumerate_hub_types("X") if h.blocks == ((0, 1, 3), (2,), (4,))]
    assert (h.k, h.dS, h.dT) == (3, 1, 3)
    s, t = 4, 5
    assert h.term(s, t) == x * (x - 1) * (x - 2) * (x - 1) ** s * (x - 3) ** t


@pytest.mark.parametrize("kind", ["X", "Y"])
@pytest.mark.parametrize("s,t", [(1, 1), (2, 3), (3, 3), (3, 4), (4, 4), (1, 4)])
def test_closed_form_matches_engine(kind, s, t):
    spec = FamilySpec(kind, s, t)
    assert family_chromatic_polynomial(spec) == chromatic_polynomial(build_family(spec))


def test_closed_form_x33_is_printed_polynomial():
    Q = IntPoly.from_descending((1, -17, 137, -677, 2228, -4969, 7284, -6363, 2509))
    assert family_chromatic_polynomial(FamilySpec("X", 3, 3)) == x * (x - 1) * (x - 2) * Q


def test_bruteforce_examples():
    spec = FamilySpec("X", 3, 3)
    assert family_eval_bruteforce(spec, 3) == eval_rat(family_chromatic_polynomial(spec), 3)
    for kind in ("X", "Y"):
        assert family_eval_bruteforce(FamilySpec(kind, 4, 2), 0) == 0
        assert family_eval_bruteforce(FamilySpec(kind, 4, 2), 1) == 0


def test_kb_closed_form_uses_engine():
    assert family_chromatic_polynomial(FamilySpec("Kb", 2, 2)) == x * (x - 1) * (x ** 2 - 3 * x + 3)


def test_derivative_examples():
    assert derivative_at_two(FamilySpec("X", 3, 3)) == (-2, -2)
    assert derivative_at_two(FamilySpec("X", 4, 4)) == (6, 6)
    assert derivative_at_two(FamilySpec("X", 3, 4)) == (-2, -2)
    with pytest.raises(ValueError):
        derivative_at_two(FamilySpec("X", 1, 3))
    with pytest.raises(ValueError):
        derivative_at_two(FamilySpec("Kb", 3, 3))


def test_derivative_parity():
    for s in range(2, 11):
        for t in range(2, 11):
            v = derivative_formula(s, t)
            both_even = s % 2 == 0 and t % 2 == 0
            assert v == (6 if both_even else -2)
            if s % 2 and t % 2:
                assert v == -2


def test_derivative_mismatch_would_raise(monkeypatch):
    import chromroot.families as fam
    monkeypatch.setattr(fam, "derivative_formula", lambda s, t: 99)
    with pytest.raises(VerificationError):
        fam.derivative_at_two(FamilySpec("X", 3, 3))


def five_terms(s, t):
    base = x * (x - 1) * (x - 2)
    return [
        base * (x - 1) ** s * (x - 3) ** t,
        base * (x - 3) ** s * (x - 3) ** t,
        base * (x - 3) ** s * (x - 1) ** t,
        2 * base * (x - 3) * (x - 3) ** s * (x - 3) ** t,
        base * (x - 3) * (x - 4) * (x - 3) ** s * (x - 3) ** t,
    ]


@pytest.mark.parametrize("s", range(2, 7))
@pytest.mark.parametrize("t", range(2, 7))
def test_last_two_terms_collapse(s, t):
    terms = five_terms(s, t)
    assert terms[3] + terms[4] == x * (x - 1) * (x - 2) ** 2 * (x - 3) ** (1 + s + t)


@pytest.mark.parametrize("s,t", [(2, 2), (3, 3), (3, 6), (5, 4)])
def test_relevant_types_are_the_five_terms(s, t):
    relevant = derivative_relevant_types("X")
    total = IntPoly()
    for h in relevant:
        total = total + h.term(s, t)
    assert total == sum(five_terms(s, t), IntPoly())


def test_y33_root():
    P = family_chromatic_polynomial(FamilySpec("Y", 3, 3))
    assert P.degree == 11
    (rec,) = isolate_roots(P, 1, 2)
    assert refine_root(rec, 4).decimal == "1.9131"


@pytest.mark.parametrize("kind", ["X", "Y"])
def test_structure_small_sizes(kind):
    for s in range(3, 7):
        for t in range(3, 7):
            G = build_family(FamilySpec(kind, s, t))
            assert is_k_connected(G, 3)
            assert not is_bipartite(G)[0]
