"""Checks of the sign structure of chromatic polynomials, the root-existence
argument for X(s,t)/Y(s,t), table reproduction, and catalog scanning."""

import csv
import io
import logging
from concurrent.futures import ProcessPoolExecutor
from dataclasses import dataclass, field
from fractions import Fraction
from typing import Optional

from chromroot.chromatic import chromatic_polynomial
from chromroot.errors import BudgetExhausted, VerificationError
from chromroot.families import (FamilySpec, build_family, derivative_at_two,
                                family_chromatic_polynomial)
from chromroot.graph import (blocks, component_count, independent_toughness_witness,
                             is_bipartite, is_k_connected)
from chromroot.graph_io import parse_graph6
from chromroot.poly import (as_rat, cauchy_bound, isolate_roots, refine_root,
                            root_multiplicity, sign_at, sturm_count)

log = logging.getLogger(__name__)

SIGN_THEOREM_UPPER = Fraction(32, 27)
RIGHT_OF_ONE_STEP = Fraction(1, 1024)
TABLE_ODD_VALUES = tuple(range(3, 20, 2))


def _sign_of(exponent):
    return -1 if exponent % 2 else 1


@dataclass
class IntervalCheck:
    name: str
    interval: str
    expected_sign: int
    observed_sign: int
    roots_found: int
    passed: bool


@dataclass
class MultiplicityCheck:
    name: str
    point: int
    expected: int
    observed: int
    passed: bool


@dataclass
class SignReport:
    n: int
    c: int
    b: int
    intervals: list
    multiplicities: list

    @property
    def passed(self):
        return all(r.passed for r in self.intervals) and all(r.passed for r in self.multiplicities)

    def failures(self):
        return [r.name for r in self.intervals + self.multiplicities if not r.passed]

    def to_dict(self):
        return {
            "n": self.n, "c": self.c, "b": self.b, "passed": self.passed,
            "intervals": [vars(r) for r in self.intervals],
            "multiplicities": [vars(r) for r in self.multiplicities],
        }


def verify_sign_theorem(G, poly=None):
    """Check the five sign/multiplicity facts for P(G, x) exactly.

    (a) no roots in (-inf, 0) and sign (-1)^n there;
    (b) root 0 has multiplicity c;
    (c) no roots in (0, 1), sign (-1)^(n+c);
    (d) root 1 has multiplicity b;
    (e) no roots in (1, 32/27], sign (-1)^(n+c+b), endpoint included.

    ``poly`` may be supplied (e.g. from the family closed form) to skip
    deletion-contraction.
    """
    P = chromatic_polynomial(G) if poly is None else poly
    n = G.n
    c = component_count(G)
    b = blocks(G).b
    intervals = []
    multiplicities = []
    if P.degree <= 0:
        # only the null graph; every interval is root-free with sign +1
        for name, iv, e in (("a", "(-B,0)", n), ("c", "(0,1)", n + c), ("e", "(1,32/27]", n + c + b)):
            intervals.append(IntervalCheck(name, iv, _sign_of(e), sign_at(P, 0), 0,
                                           sign_at(P, 0) == _sign_of(e)))
        for name, pt, e in (("b", 0, c), ("d", 1, b)):
            multiplicities.append(MultiplicityCheck(name, pt, e, 0, e == 0))
        return SignReport(n, c, b, intervals, multiplicities)

    bound = cauchy_bound(P)
    roots = sturm_count(P, -bound, 0)
    sgn = sign_at(P, -1)
    intervals.append(IntervalCheck("a", f"(-{bound},0)", _sign_of(n), sgn, roots,
                                   roots == 0 and sgn == _sign_of(n)))
    m0 = root_multiplicity(P, 0)
    multiplicities.append(MultiplicityCheck("b", 0, c, m0, m0 == c))
    roots = sturm_count(P, 0, 1)
    sgn = sign_at(P, Fraction(1, 2))
    intervals.append(IntervalCheck("c", "(0,1)", _sign_of(n + c), sgn, roots,
                                   roots == 0 and sgn == _sign_of(n + c)))
    m1 = root_multiplicity(P, 1)
    multiplicities.append(MultiplicityCheck("d", 1, b, m1, m1 == b))
    roots = sturm_count(P, 1, SIGN_THEOREM_UPPER, closed_hi=True)
    sgn = sign_at(P, SIGN_THEOREM_UPPER)
    intervals.append(IntervalCheck("e", "(1,32/27]", _sign_of(n + c + b), sgn, roots,
                                   roots == 0 and sgn == _sign_of(n + c + b)))
    return SignReport(n, c, b, intervals, multiplicities)


def verify_root_existence_argument(spec):
    """Replay the continuity argument for a root of P(spec) in (1, 2).

    Returns ``(True, trace)``; any failing step raises
    :class:`VerificationError` with the trace so far.
    """
    if spec.kind not in ("X", "Y"):
        raise ValueError("the existence argument applies to kinds X and Y")
    if spec.s < 3 or spec.t < 3 or spec.s % 2 == 0 or spec.t % 2 == 0:
        raise ValueError("the existence argument needs odd s, t >= 3")
    P = family_chromatic_polynomial(spec)
    trace = {"source": str(spec), "n": spec.n}

    def require(ok, what):
        if not ok:
            raise VerificationError(f"{spec}: {what} failed; trace={trace}")

    trace["multiplicity_at_1"] = root_multiplicity(P, 1)
    require(trace["multiplicity_at_1"] == 1, "simple root at x=1")

    symbolic, formula = derivative_at_two(spec)
    trace["P(2)"] = str(P(2))
    trace["derivative_at_2"] = symbolic
    require(P(2) == 0 and symbolic == -2 and formula == -2, "P(2)=0 with P'(2)=-2")

    step = 1 + RIGHT_OF_ONE_STEP
    trace["roots_in_(1,1+1/1024)"] = sturm_count(P, 1, step)
    trace["sign_at_1+1/1024"] = sign_at(P, step)
    require(trace["roots_in_(1,1+1/1024)"] == 0 and trace["sign_at_1+1/1024"] < 0,
            "negative just right of 1")

    # P(2) = 0 and P'(2) < 0 make P positive just left of 2
    trace["sturm_count_(1,2)"] = sturm_count(P, 1, 2)
    require(trace["sturm_count_(1,2)"] >= 1, "root in (1,2)")
    return True, trace


# ------------------------------------------------------------- root reports

@dataclass
class RootReport:
    source: str
    n: int
    polynomial: object
    roots: list
    flags: dict = field(default_factory=dict)
    lo: Fraction = Fraction(1)
    hi: Fraction = Fraction(2)

    def smallest(self):
        return self.roots[0] if self.roots else None

    def to_dict(self):
        return {
            "source": self.source,
            "n": self.n,
            "flags": self.flags,
            "polynomial": [str(c) for c in self.polynomial.coeffs],
            "roots": [r.to_dict() for r in self.roots],
        }


def structural_flags(G):
    return {
        "three_connected": is_k_connected(G, 3),
        "bipartite": is_bipartite(G)[0],
        "odd_order": G.n % 2 == 1,
    }


def roots_report(source, lo=1, hi=2, places=4, poly=None):
    """All real chromatic roots in the open interval (lo, hi), refined to ``places``.

    ``source`` is a :class:`Graph` or a :class:`FamilySpec`.
    """
    lo, hi = as_rat(lo), as_rat(hi)
    if isinstance(source, FamilySpec):
        G = build_family(source)
        P = family_chromatic_polynomial(source) if poly is None else poly
        name = str(source)
    else:
        G = source
        P = chromatic_polynomial(G) if poly is None else poly
        name = f"graph(n={G.n},m={G.m})"
    roots = [refine_root(r, places) for r in isolate_roots(P, lo, hi)] if P.degree > 0 else []
    return RootReport(name, G.n, P, roots, structural_flags(G), lo, hi)


@dataclass
class Conjecture7Report:
    has_root_in_12: bool
    witness: Optional[tuple]
    consistent: bool


def conjecture7_report(G, max_size=None, poly=None, strict=True):
    """Root in (1,2) versus an independent S with c(G-S) > |S|.

    A graph with such a root and no witness is a counterexample; with
    ``strict`` (the default) that raises :class:`VerificationError`.
    """
    P = chromatic_polynomial(G) if poly is None else poly
    has_root = P.degree > 0 and sturm_count(P, 1, 2) > 0
    size = G.n if max_size is None else max_size
    witness = independent_toughness_witness(G, size)
    consistent = (not has_root) or witness is not None
    if not consistent:
        log.error("independent-set toughness condition violated by %r", G)
        if strict:
            raise VerificationError(
                f"graph {G!r} has a chromatic root in (1,2) but no independent S "
                f"of size <= {size} with c(G-S) > |S|")
    return Conjecture7Report(has_root, witness, consistent)


# --------------------------------------------------------------- tables

def _table_cell(args):
    kind, s, t, places = args
    P = family_chromatic_polynomial(FamilySpec(kind, s, t))
    roots = isolate_roots(P, 1, 2)
    if not roots:
        return None
    return refine_root(roots[0], places).decimal


def reproduce_table(kind, s_values=TABLE_ODD_VALUES, t_values=TABLE_ODD_VALUES, places=4, jobs=1):
    """``{(s, t): decimal}`` for s <= t: the smallest root in (1, 2).

    Cells with no root hold ``None``.
    """
    cells = [(kind, s, t, places) for s in s_values for t in t_values if s <= t]
    if jobs > 1:
        with ProcessPoolExecutor(jobs) as pool:
            values = list(pool.map(_table_cell, cells))
    else:
        values = [_table_cell(c) for c in cells]
    return {(s, t): v for (_, s, t, _), v in zip(cells, values)}


ERROR_CELL = "ERR"


def table_to_csv(table, s_values=TABLE_ODD_VALUES, t_values=TABLE_ODD_VALUES):
    """Upper-triangular CSV: header of t values, one row per s."""
    buf = io.StringIO()
    writer = csv.writer(buf, lineterminator="\n")
    writer.writerow(["s\\t"] + list(t_values))
    for s in s_values:
        row = [s]
        for t in t_values:
            if s > t:
                row.append("")
            else:
                v = table.get((s, t))
                row.append(ERROR_CELL if v is None else v)
        writer.writerow(row)
    return buf.getvalue()


# ---------------------------------------------------------- catalog scan

@dataclass
class ScanFilters:
    min_connectivity: int = 0
    non_bipartite: bool = False
    lo: Fraction = Fraction(1)
    hi: Fraction = Fraction(2)
    places: int = 4


def _scan_one(args):
    index, line, filters = args
    try:
        G = parse_graph6(line)
        if filters.min_connectivity and not is_k_connected(G, filters.min_connectivity):
            return None
        if filters.non_bipartite and is_bipartite(G)[0]:
            return None
        P = chromatic_polynomial(G)
        if P.degree <= 0 or sturm_count(P, filters.lo, filters.hi) == 0:
            return None
        report = roots_report(G, filters.lo, filters.hi, filters.places, poly=P)
        report.source = f"{index}:{line}"
        return report.to_dict()
    except BudgetExhausted as exc:
        return {"source": f"{index}:{line}", "error": "budget_exhausted", "detail": str(exc)}
    except ValueError as exc:
        return {"source": f"{index}:{line}", "error": "invalid_input", "detail": str(exc)}


def scan_catalog(lines, filters=None, jobs=1):
    """Yield a report dict for each catalog graph that passes the structural
    filters and has a root in the interval; per-graph errors are yielded
    inline as ``{"source", "error", "detail"}``.  Output order follows
    input order.
    """
    filters = filters or ScanFilters()
    items = ((i, line.strip(), filters) for i, line in enumerate(lines) if line.strip())
    if jobs > 1:
        with ProcessPoolExecutor(jobs) as pool:
            for res in pool.map(_scan_one, items, chunksize=16):
                if res is not None:
                    yield res
    else:
        for item in items:
            res = _scan_one(item)
            if res is not None:
                yield res
