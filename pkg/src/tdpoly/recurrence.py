"""D_t by reduction rules, memoized on canonical forms.

At each node the first applicable rule wins:

1. empty graph -> 1; isolated vertex -> 0
2. disconnected -> product over components
3. small graph (n <= base_threshold) -> enumeration
4. an edge proved irrelevant by a sufficient rule -> delete it
5. a support vertex with edges inside its open neighborhood -> G⊙v
6. adjacent true twins u, v -> D_t(G - uv) + x^2 D_t(G - N[u])
7. vertex rule D_t(G - v) + D_t(G⊙v) - D_t(G⊛v) on a maximum-degree vertex
   among those with an edge inside N(v)

When nothing applies (triangle-free, no leaves, no twins) the node is a
base case: enumeration within the size limit, otherwise an exact
branching count over "v in D / v not in D".
"""

from __future__ import annotations

from dataclasses import dataclass, field
from functools import lru_cache

from .errors import ConsistencyError
from .engine import ENUMERATION_LIMIT, polynomial, sufficient_irrelevant_rule
from .graph import (
    Graph, bits, closed_neighborhood, components, delete_edge, delete_vertex, delete_vertices,
    induced_subgraph, odot, odot_edges, supports_and_leaves,
)
from .poly import IntPoly
from .symmetry import canonical_form

X2 = IntPoly.monomial(2)
MEMO_CAP = 1 << 20


@dataclass(frozen=True)
class Step:
    """One node of the reduction.  ``children`` are canonical keys of earlier steps."""

    tag: str
    key: bytes
    graph: Graph
    children: tuple[bytes, ...]
    result: IntPoly
    detail: str = ""


@dataclass
class ReductionTrace:
    steps: list[Step] = field(default_factory=list)

    def tags(self) -> dict[str, int]:
        out: dict[str, int] = {}
        for s in self.steps:
            out[s.tag] = out.get(s.tag, 0) + 1
        return out

    def replay(self, verify_leaves: bool = True) -> IntPoly:
        """Recombine the steps in order and return the final polynomial.

        With ``verify_leaves`` base cases and memo hits are recomputed by
        enumeration from their stored graphs instead of trusting the record.
        """
        values: dict[bytes, IntPoly] = {}
        last = IntPoly.one()
        for s in self.steps:
            ch = [values[k] for k in s.children]
            if s.tag in ("base-case", "memo"):
                if verify_leaves:
                    val = _leaf_value(s.graph)
                else:
                    val = s.result
            elif s.tag == "component-split":
                val = IntPoly.one()
                for c in ch:
                    val = val * c
            elif s.tag in ("irrelevant-edge", "support-odot"):
                val = ch[0]
            elif s.tag == "twin":
                val = ch[0] + X2 * ch[1]
            elif s.tag == "vertex-recurrence":
                val = ch[0] + ch[1] - ch[2]
            else:
                raise ConsistencyError(f"unknown step tag {s.tag!r}")
            if val != s.result:
                raise ConsistencyError(f"replay mismatch at {s.tag} step {s.key!r}: {val} != {s.result}")
            values[s.key] = val
            last = val
        return last


def _leaf_value(G: Graph) -> IntPoly:
    if G.n <= ENUMERATION_LIMIT:
        return polynomial(G)
    return branching_polynomial(G)


def branching_polynomial(G: Graph) -> IntPoly:
    """Exact D_t by branching on membership of a vertex that can dominate a hardest target.

    Counts subsets D of the undecided vertices A whose neighborhood covers
    the target set T, memoized on (A, T).
    """
    adj = G.adj

    @lru_cache(maxsize=None)
    def f(A: int, T: int) -> IntPoly:
        if not T:
            return IntPoly.x_plus(1) ** A.bit_count()
        best_c = None
        for t in bits(T):
            c = adj[t] & A
            if best_c is None or c.bit_count() < best_c.bit_count():
                best_c = c
                if not c:
                    return IntPoly.zero()
        w = (best_c & -best_c).bit_length() - 1
        rest = A & ~(1 << w)
        return (f(rest, T & ~adj[w]).shift(1)) + f(rest, T)

    return f(G.full, G.full)


class RecurrenceEngine:
    """Reduction-rule evaluator with a bounded canonical-form memo."""

    def __init__(self, base_threshold: int = 2, max_n: int = ENUMERATION_LIMIT, memo_cap: int = MEMO_CAP):
        self.base_threshold = base_threshold
        self.max_n = max_n
        self.memo_cap = memo_cap
        self.memo: dict[bytes, IntPoly] = {}

    def compute(self, G: Graph) -> tuple[IntPoly, ReductionTrace]:
        trace = ReductionTrace()
        done: dict[bytes, IntPoly] = {}
        p, _ = self._solve(G, trace, done)
        return p, trace

    def _remember(self, key: bytes, p: IntPoly) -> IntPoly:
        if len(self.memo) >= self.memo_cap:
            self.memo.clear()
        return self.memo.setdefault(key, p)

    def _solve(self, G: Graph, trace: ReductionTrace, done: dict[bytes, IntPoly]) -> tuple[IntPoly, bytes]:
        key = canonical_form(G)
        if key in done:
            return done[key], key
        if key in self.memo:
            p = self.memo[key]
            trace.steps.append(Step("memo", key, G, (), p))
            done[key] = p
            return p, key
        tag, detail, parts = self._reduce(G)
        if tag == "base-case":
            p = parts
            children: tuple[bytes, ...] = ()
        else:
            vals, keys = [], []
            for H in parts:
                v, k = self._solve(H, trace, done)
                vals.append(v)
                keys.append(k)
            children = tuple(keys)
            if tag == "component-split":
                p = IntPoly.one()
                for v in vals:
                    p = p * v
            elif tag == "twin":
                p = vals[0] + X2 * vals[1]
            elif tag == "vertex-recurrence":
                p = vals[0] + vals[1] - vals[2]
            else:
                p = vals[0]
        p = self._remember(key, p)
        trace.steps.append(Step(tag, key, G, children, p, detail))
        done[key] = p
        return p, key

    def _reduce(self, G: Graph):
        """Pick the rule for this node: (tag, detail, polynomial or child graphs)."""
        n = G.n
        if n == 0:
            return "base-case", "empty graph", IntPoly.one()
        if G.has_isolated_vertex():
            return "base-case", "isolated vertex", IntPoly.zero()
        comps = components(G)
        if len(comps) > 1:
            return "component-split", f"{len(comps)} components", [induced_subgraph(G, c)[0] for c in comps]
        if n <= self.base_threshold:
            return "base-case", "enumeration", polynomial(G, self.max_n)
        for u, v in G.edges():
            rule = sufficient_irrelevant_rule(G, u, v)
            if rule:
                return "irrelevant-edge", f"{rule} {u}-{v}", [delete_edge(G, u, v)]
        _, supports = supports_and_leaves(G)
        for v in bits(supports):
            if odot_edges(G, v):
                return "support-odot", f"support {v}", [odot(G, v)]
        for u, v in G.edges():
            if closed_neighborhood(G, u) == closed_neighborhood(G, v):
                rest, _ = delete_vertices(G, closed_neighborhood(G, u))
                return "twin", f"twins {u}-{v}", [delete_edge(G, u, v), rest]
        pivots = [v for v in range(n) if odot_edges(G, v)]
        if pivots:
            v = max(pivots, key=lambda w: (G.degree(w), -w))
            return "vertex-recurrence", f"pivot {v}", [
                delete_vertex(G, v)[0], odot(G, v), odot(G, v, drop_v=True)]
        if n <= self.max_n:
            return "base-case", "enumeration", polynomial(G, self.max_n)
        return "base-case", "branching", branching_polynomial(G)


_default_engine = RecurrenceEngine()


def compute_via_recurrence(G: Graph, engine: RecurrenceEngine | None = None) -> tuple[IntPoly, ReductionTrace]:
    return (engine or _default_engine).compute(G)
