"""Corpus-level studies of total domination polynomials.

Equivalence classes, two-root classification, the integer-root scan, root
bound checks, the cubic order-10 study, and the identity suite.  Every
comparison is exact integer arithmetic; numeric roots enter only the
root-bound check.
"""

from __future__ import annotations

import time
from collections import Counter
from concurrent.futures import ProcessPoolExecutor
from dataclasses import asdict, dataclass, field
from math import comb
from typing import Callable, Iterable, Sequence

from .engine import (
    ENUMERATION_LIMIT, count_containing, gamma_t, is_irrelevant_edge, is_td_covered,
    polynomial,
)
from .errors import ParameterError, TheoremViolation, UndefinedError
from .families import cycle, generalized_petersen, petersen
from .generate import generate_regular
from .graph import (
    Graph, bits, closed_neighborhood, delete_edge, delete_vertex, delete_vertices, disjoint_union,
    is_connected, odot, supports_and_leaves, vertex_connectivity,
)
from .graph6 import encode
from .poly import IntPoly, integer_roots, match_two_root_form, numeric_roots, root_bound_radius
from .symmetry import are_isomorphic, automorphism_orbits, canonical_form

PETERSEN_POLY = IntPoly([0, 0, 0, 0, 10, 72, 140, 110, 45, 10, 1])
ALLOWED_INTEGER_ROOTS = frozenset({-3, -2, -1, 0})


@dataclass
class Finding:
    rule: str
    subject: str
    expected: str
    actual: str


@dataclass(frozen=True)
class CorpusEntry:
    id: str
    graph: Graph
    polynomial: IntPoly


@dataclass
class Corpus:
    entries: list[CorpusEntry]

    def __post_init__(self) -> None:
        ids = [e.id for e in self.entries]
        if len(set(ids)) != len(ids):
            raise ParameterError("corpus ids must be unique")

    def __iter__(self):
        return iter(self.entries)

    def __len__(self) -> int:
        return len(self.entries)


def _poly_task(G: Graph) -> IntPoly:
    return polynomial(G)


def build_corpus(named: Iterable[tuple[str, Graph]], workers: int = 1,
                 compute: Callable[[Graph], IntPoly] = _poly_task) -> Corpus:
    """Attach D_t to each graph.  ``workers > 1`` spreads graphs over processes."""
    named = list(named)
    graphs = [G for _, G in named]
    if workers > 1 and len(graphs) > 1:
        with ProcessPoolExecutor(max_workers=workers) as pool:
            polys = list(pool.map(compute, graphs, chunksize=max(1, len(graphs) // (4 * workers))))
    else:
        polys = [compute(G) for G in graphs]
    return Corpus([CorpusEntry(i, G, p) for (i, G), p in zip(named, polys)])


def graph_id(G: Graph) -> str:
    return encode(G)


# -- equivalence classes --------------------------------------------------------


@dataclass
class EquivClassReport:
    classes: list[list[str]]
    polynomials: list[IntPoly]

    @property
    def unique(self) -> list[str]:
        return [c[0] for c in self.classes if len(c) == 1]

    def class_of(self, entry_id: str) -> list[str]:
        return next(c for c in self.classes if entry_id in c)

    def size_multiset(self) -> list[int]:
        return sorted((len(c) for c in self.classes), reverse=True)

    def to_json(self) -> dict:
        return {
            "classes": [
                {"ids": c, "polynomial": p.to_json(), "unique": len(c) == 1}
                for c, p in zip(self.classes, self.polynomials)
            ]
        }


def partition_by_polynomial(corpus: Corpus) -> EquivClassReport:
    """Group ids by exact equality of D_t.  Largest classes first, then by polynomial."""
    groups: dict[tuple[int, ...], list[str]] = {}
    for e in corpus:
        groups.setdefault(e.polynomial.coeffs, []).append(e.id)
    order = sorted(groups, key=lambda c: (-len(groups[c]), len(c), c))
    return EquivClassReport([groups[c] for c in order], [IntPoly(c) for c in order])


# -- two-root classification ------------------------------------------------------


@dataclass
class TwoRootVerdict:
    root_set: str
    form: tuple[int, int, int] | None
    support_count: int
    kappa: int
    delta: int
    classifier_notes: list[str] = field(default_factory=list)
    findings: list[Finding] = field(default_factory=list)

    def to_json(self) -> dict:
        d = asdict(self)
        d["form"] = None if self.form is None else dict(zip(("alpha", "c", "beta"), self.form))
        return d


_ROOT_SET_NAMES = {1: "{-1,0}", 2: "{-2,0}", 3: "{-3,0}"}


def classify_two_root(G: Graph, p: IntPoly | None = None) -> TwoRootVerdict:
    """Exact two-root form of D_t(G) and the necessary conditions attached to it.

    Any failed condition is recorded as a finding, never dropped.
    """
    if G.has_isolated_vertex() or G.n == 0:
        raise UndefinedError("D_t is identically zero (isolated vertex) or trivial (empty graph)")
    p = polynomial(G) if p is None else p
    form = match_two_root_form(p)
    _, supports = supports_and_leaves(G)
    r = supports.bit_count()
    delta = G.min_degree
    connected = is_connected(G)
    kappa = vertex_connectivity(G)
    root_set = "other"
    notes: list[str] = []
    findings: list[Finding] = []
    if form is not None:
        root_set = _ROOT_SET_NAMES.get(form[1], "{-%d,0}" % form[1])
        c = form[1]
        if c == 1:
            notes.append(f"support vertices: {r}")
            if r < 2:
                findings.append(Finding("two-roots {-1,0} => at least two supports", encode(G), ">= 2", str(r)))
        elif c == 2:
            if connected:
                notes.append(f"connectivity: {kappa}")
                if kappa > 2:
                    findings.append(Finding("two-roots {-2,0} => kappa <= 2", encode(G), "<= 2", str(kappa)))
            else:
                notes.append("disconnected: connectivity condition not applicable")
        elif c == 3:
            if delta >= 2:
                match = next((name for name, H in (("C3", cycle(3)), ("C6", cycle(6)))
                              if are_isomorphic(G, H)), None)
                notes.append(f"min degree >= 2 classifier: {match or 'no match'}")
                if match is None:
                    findings.append(Finding("two-roots {-3,0} and delta >= 2 => C3 or C6",
                                            encode(G), "C3 or C6", encode(G)))
            else:
                notes.append("min degree < 2: classification not applicable")
        else:
            notes.append(f"integer root -{c} outside the studied sets")
    return TwoRootVerdict(root_set, form, r, kappa, delta, notes, findings)


# -- integer roots and root bound -------------------------------------------------


def integer_root_conjecture_scan(corpus: Corpus) -> list[Finding]:
    """Graphs with an integer root outside {-3,-2,-1,0}.

    For graphs with min degree >= 2n/3 this is a theorem, so a violation
    there raises TheoremViolation instead of being listed.
    """
    out = []
    for e in corpus:
        p = e.polynomial
        if p.is_zero():
            continue
        bad = sorted(set(integer_roots(p)) - ALLOWED_INTEGER_ROOTS)
        if not bad:
            continue
        G = e.graph
        if 3 * G.min_degree >= 2 * G.n:
            raise TheoremViolation(f"{e.id}: integer roots {bad} with min degree >= 2n/3")
        out.append(Finding("integer roots in {-3,-2,-1,0}", e.id, "{-3,-2,-1,0}", str(bad)))
    return out


def root_bound_margin(G: Graph, p: IntPoly | None = None, tol_roots: float = 1e-9) -> float:
    """radius - max |z + 1| over the roots of D_t(G); negative means the bound fails."""
    if G.has_isolated_vertex() or G.n == 0:
        raise UndefinedError("no total domination polynomial to bound")
    p = polynomial(G) if p is None else p
    radius = root_bound_radius(G.n, G.min_degree)
    worst = max(abs(z + 1) for z in numeric_roots(p, tol_roots))
    return radius - worst


def root_bound_check(G: Graph, tol: float = 1e-6, p: IntPoly | None = None) -> bool:
    """Every root z of D_t(G) satisfies |z + 1| <= (2^n - 1)^(1/delta) + tol."""
    return root_bound_margin(G, p) >= -tol


# -- cubic graphs of order 10 ------------------------------------------------------


@dataclass
class Cubic10Report:
    graph_count: int
    connected_count: int
    class_sizes: list[int]
    petersen_class: list[str]
    petersen_confirmed: bool
    other_nontrivial_classes: list[list[str]]
    singleton_count: int
    equivalence: EquivClassReport
    findings: list[Finding]
    seconds: float

    def to_json(self) -> dict:
        return {
            "graph_count": self.graph_count,
            "connected_count": self.connected_count,
            "class_sizes": self.class_sizes,
            "petersen_class": self.petersen_class,
            "petersen_polynomial": PETERSEN_POLY.to_json(),
            "petersen_confirmed": self.petersen_confirmed,
            "other_nontrivial_classes": self.other_nontrivial_classes,
            "singleton_count": self.singleton_count,
            "classes": self.equivalence.to_json()["classes"],
            "findings": [asdict(f) for f in self.findings],
        }


def cubic10_study(workers: int = 1) -> Cubic10Report:
    """All 21 cubic graphs of order 10, partitioned by D_t."""
    t0 = time.perf_counter()
    graphs = generate_regular(10, 3)
    if len(graphs) != 21:
        raise TheoremViolation(f"expected 21 cubic graphs of order 10, generated {len(graphs)}")
    corpus = build_corpus(((encode(G), G) for G in graphs), workers=workers)
    report = partition_by_polynomial(corpus)
    connected = sum(is_connected(G) for G in graphs)
    pet_idx = next((i for i, p in enumerate(report.polynomials) if p == PETERSEN_POLY), None)
    if pet_idx is None:
        raise TheoremViolation("no generated cubic graph has the Petersen polynomial")
    pet_class = report.classes[pet_idx]
    pet_key = canonical_form(petersen())
    by_id = {e.id: e.graph for e in corpus}
    confirmed = any(canonical_form(by_id[i]) == pet_key for i in pet_class)
    others = [c for i, c in enumerate(report.classes) if len(c) > 1 and i != pet_idx]
    singles = sum(1 for c in report.classes if len(c) == 1)
    # report where the graph outside the two classes of 3 and 14 singletons falls
    sizes = report.size_multiset()
    if [len(c) for c in others] == [3] and singles == 15:
        status = "D_t-unique: a 15th singleton class"
    else:
        status = f"class sizes {sizes}"
    findings = [Finding("class of the cubic graph outside the listed 20", "cubic order 10", "unstated", status)]
    return Cubic10Report(
        graph_count=len(graphs),
        connected_count=connected,
        class_sizes=sizes,
        petersen_class=pet_class,
        petersen_confirmed=confirmed,
        other_nontrivial_classes=others,
        singleton_count=singles,
        equivalence=report,
        findings=findings,
        seconds=time.perf_counter() - t0,
    )


# -- identity suite -----------------------------------------------------------------


@dataclass
class CheckRecord:
    theorem: str
    subject: str
    parameter: str
    passed: bool
    expected: str = ""
    actual: str = ""


@dataclass
class IdentityReport:
    records: list[CheckRecord]

    @property
    def failures(self) -> list[CheckRecord]:
        return [r for r in self.records if not r.passed]

    @property
    def passed(self) -> bool:
        return not self.failures

    def summary(self) -> dict[str, tuple[int, int]]:
        """theorem -> (checks, failures)."""
        total = Counter(r.theorem for r in self.records)
        bad = Counter(r.theorem for r in self.failures)
        return {t: (total[t], bad[t]) for t in sorted(total)}

    def to_json(self) -> dict:
        return {
            "summary": {t: {"checks": c, "failures": f} for t, (c, f) in self.summary().items()},
            "failures": [asdict(r) for r in self.failures],
        }


IDENTITY_CHECKS = (
    "twin", "vertex", "support-odot", "multiplicativity", "coefficient-n-1",
    "regular-tail", "vertex-transitive",
)
IMPLICATION_CHECKS = ("irrelevant-sufficient=>exact", "covered-sufficient=>exact", "irrelevant=>covered-endpoints")


def _graph_checks(entry: CorpusEntry, checks: Sequence[str], partner: Graph | None) -> list[CheckRecord]:
    G, sid = entry.graph, entry.id
    n = G.n
    p = entry.polynomial
    recs: list[CheckRecord] = []

    def rec(theorem: str, param: str, expected, actual) -> None:
        recs.append(CheckRecord(theorem, sid, param, expected == actual, str(expected), str(actual)))

    minus_edge: dict[tuple[int, int], IntPoly] = {}

    def d_minus_edge(u: int, v: int) -> IntPoly:
        if (u, v) not in minus_edge:
            minus_edge[(u, v)] = polynomial(delete_edge(G, u, v))
        return minus_edge[(u, v)]

    leaves, supports = supports_and_leaves(G)
    if "twin" in checks:
        for u, v in G.edges():
            if closed_neighborhood(G, u) == closed_neighborhood(G, v):
                rest, _ = delete_vertices(G, closed_neighborhood(G, u))
                rec("twin", f"{u}-{v}", p, d_minus_edge(u, v) + polynomial(rest).shift(2))
    if "vertex" in checks:
        for v in range(n):
            rhs = polynomial(delete_vertex(G, v)[0]) + polynomial(odot(G, v)) - polynomial(odot(G, v, True))
            rec("vertex", str(v), p, rhs)
    if "support-odot" in checks:
        for v in bits(supports):
            rec("support-odot", str(v), p, polynomial(odot(G, v)))
    if "multiplicativity" in checks and partner is not None:
        rec("multiplicativity", encode(partner), polynomial(disjoint_union(G, partner)),
            p * polynomial(partner))
    if "coefficient-n-1" in checks and n >= 1 and not G.has_isolated_vertex():
        rec("coefficient-n-1", "", n - supports.bit_count(), p[n - 1])
    if "regular-tail" in checks and n and G.is_regular() and G.degree(0) >= 1:
        k = G.degree(0)
        for i in range(n - k + 1, n + 1):
            rec("regular-tail", f"i={i}", comb(n, i), p[i])
    if "vertex-transitive" in checks and n >= 1 and automorphism_orbits(G).is_vertex_transitive:
        for v in range(n):
            rooted = count_containing(G, v)
            for i in range(n + 1):
                rec("vertex-transitive", f"v={v},i={i}", n * rooted[i], i * p[i])
    if "irrelevant-sufficient=>exact" in checks or "irrelevant=>covered-endpoints" in checks:
        for u, v in G.edges():
            exact = d_minus_edge(u, v) == p
            if "irrelevant-sufficient=>exact" in checks and is_irrelevant_edge(G, (u, v), "sufficient"):
                rec("irrelevant-sufficient=>exact", f"{u}-{v}", True, exact)
            if "irrelevant=>covered-endpoints" in checks and exact:
                H = delete_edge(G, u, v)
                rec("irrelevant=>covered-endpoints", f"{u}-{v}", (True, True),
                    (is_td_covered(H, u), is_td_covered(H, v)))
    if "covered-sufficient=>exact" in checks:
        for v in range(n):
            if is_td_covered(G, v, "sufficient"):
                rec("covered-sufficient=>exact", str(v), True, is_td_covered(G, v, "exact"))
    return recs


def _suite_task(args):
    return _graph_checks(*args)


def verify_identity_suite(corpus: Corpus, checks: Sequence[str] = IDENTITY_CHECKS,
                          partners: Callable[[int, CorpusEntry], Graph | None] | None = None,
                          workers: int = 1) -> IdentityReport:
    """Run the exact identities over the corpus; one record per (theorem, graph, parameter)."""
    unknown = set(checks) - set(IDENTITY_CHECKS) - set(IMPLICATION_CHECKS)
    if unknown:
        raise ParameterError(f"unknown checks {sorted(unknown)}")
    for e in corpus:
        if e.graph.n > ENUMERATION_LIMIT:
            raise ParameterError(f"{e.id}: identity suite needs graphs within the enumeration limit")
    tasks = [(e, tuple(checks), partners(i, e) if partners else None) for i, e in enumerate(corpus)]
    if workers > 1:
        with ProcessPoolExecutor(max_workers=workers) as pool:
            chunks = list(pool.map(_suite_task, tasks, chunksize=max(1, len(tasks) // (4 * workers))))
    else:
        chunks = [_suite_task(t) for t in tasks]
    return IdentityReport([r for c in chunks for r in c])


# -- gamma_t oracles --------------------------------------------------------------


def gamma_oracles(hfamily_ks: Iterable[int] = (2, 3)) -> list[CheckRecord]:
    """Total domination numbers of the extremal families: H_k gives 2k, GP(8,3) gives 8."""
    from .families import h_family

    out = [CheckRecord("gamma_t(Petersen)=4", "petersen", "", gamma_t(petersen()) == 4, "4",
                       str(gamma_t(petersen())))]
    for k in hfamily_ks:
        g = gamma_t(h_family(k))
        out.append(CheckRecord("gamma_t(H_k)=2k", f"H_{k}", f"k={k}", g == 2 * k, str(2 * k), str(g)))
    g = gamma_t(generalized_petersen(8, 3))
    out.append(CheckRecord("gamma_t(GP(8,3))=8", "GP(8,3)", "", g == 8, "8", str(g)))
    return out


# -- irrelevant-edge witnesses ---------------------------------------------------------


def covered_but_relevant_witnesses(graphs: Iterable[Graph]) -> list[tuple[Graph, tuple[int, int]]]:
    """(G, e) where both ends of e are covered in G - e although e is not irrelevant."""
    out = []
    for G in graphs:
        if G.has_isolated_vertex():
            continue
        p = polynomial(G)
        for u, v in G.edges():
            H = delete_edge(G, u, v)
            if polynomial(H) != p and is_td_covered(H, u) and is_td_covered(H, v):
                out.append((G, (u, v)))
    return out


WITNESS_PAIR = (IntPoly([0, 0, 5, 8, 5, 1]), IntPoly([0, 0, 4, 6, 5, 1]))


def witness_pair_search(graphs: Iterable[Graph]) -> list[tuple[Graph, tuple[int, int]]]:
    """Graph/edge pairs realizing x^5+5x^4+8x^3+5x^2 before and x^5+5x^4+6x^3+4x^2 after deleting e."""
    before, after = WITNESS_PAIR
    hits = []
    for G in graphs:
        if G.n != 5 or polynomial(G) != before:
            continue
        for u, v in G.edges():
            if polynomial(delete_edge(G, u, v)) == after:
                hits.append((G, (u, v)))
    return hits

