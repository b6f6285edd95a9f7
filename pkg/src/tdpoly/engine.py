"""Total domination counts, polynomials and per-graph predicates.

Exhaustive counting walks all 2^n vertex subsets.  The low ``LOW_BITS``
vertices are expanded into a numpy table of N(S) by doubling
(N(S + v) = N(S) | N(v)); the remaining high vertices form prefixes, and for
each prefix the table is OR-ed with the prefix neighborhood and tested
against the full vertex set.  Per-size counts come from a popcount table.
"""

from __future__ import annotations

from dataclasses import dataclass
from functools import lru_cache
from math import comb

import numpy as np

from .errors import ConsistencyError, NotFoundError, ParameterError, PreconditionError, SizeLimitError, UndefinedError
from .families import (
    Firecracker, GeneralizedFirecracker, GraphFamilySpec, H3, Star, validate,
)
from .graph import (
    Graph, VertexSet, bits, closed_neighborhood, delete_edge, delete_vertex, neighborhood,
    supports_and_leaves,
)
from .poly import IntPoly

ENUMERATION_LIMIT = 26
LOW_BITS = 16


@dataclass(frozen=True)
class CountVector:
    """d_t(G, i) for i = 0..n."""

    counts: tuple[int, ...]

    @property
    def n(self) -> int:
        return len(self.counts) - 1

    @property
    def gamma_t(self) -> int | None:
        return next((i for i, c in enumerate(self.counts) if c), None)

    @property
    def total(self) -> int:
        return sum(self.counts)

    def polynomial(self) -> IntPoly:
        return IntPoly(self.counts)

    def __getitem__(self, i: int) -> int:
        return self.counts[i] if 0 <= i < len(self.counts) else 0


def is_total_dominating(G: Graph, D: VertexSet) -> bool:
    return neighborhood(G, D) == G.full


@lru_cache(maxsize=None)
def _popcounts(k: int) -> np.ndarray:
    pc = np.zeros(1 << k, dtype=np.uint8)
    for i in range(k):
        h = 1 << i
        pc[h:2 * h] = pc[:h] + 1
    return pc


def _union_table(rows: list[int], dtype) -> np.ndarray:
    t = np.zeros(1 << len(rows), dtype=dtype)
    for i, r in enumerate(rows):
        h = 1 << i
        t[h:2 * h] = t[:h] | dtype(r)
    return t


def _check_size(G: Graph, max_n: int) -> None:
    if G.n > max_n:
        raise SizeLimitError(
            f"order {G.n} exceeds the enumeration limit {max_n}; use compute_via_recurrence"
        )


def _scan(G: Graph, max_n: int, containing: int | None = None, collect: bool = False):
    """Shared subset walk.  Returns per-size counts, and the TDS masks if ``collect``."""
    _check_size(G, max_n)
    n = G.n
    counts = [0] * (n + 1)
    found: list[int] = []
    if n == 0:
        counts[0] = 1
        return counts, [0] if collect else found
    dtype = np.uint32 if n <= 32 else np.uint64
    lo = min(n, LOW_BITS)
    low_tab = _union_table(list(G.adj[:lo]), dtype)
    low_pc = _popcounts(lo)
    keep = None
    if containing is not None and containing < lo:
        keep = (np.arange(1 << lo) >> containing & 1).astype(bool)
    full = dtype(G.full)
    high_rows = G.adj[lo:]
    hi_union = [0]
    for r in high_rows:
        hi_union += [u | r for u in hi_union]
    for h, hu in enumerate(hi_union):
        if containing is not None and containing >= lo and not h >> (containing - lo) & 1:
            continue
        hit = (low_tab | dtype(hu)) == full
        if keep is not None:
            hit &= keep
        sizes = low_pc[hit].astype(np.int64) + h.bit_count()
        binc = np.bincount(sizes, minlength=n + 1)
        for i in np.flatnonzero(binc):
            counts[int(i)] += int(binc[i])
        if collect:
            found.extend(int(s) | (h << lo) for s in np.flatnonzero(hit))
    return counts, found


def count_all(G: Graph, max_n: int = ENUMERATION_LIMIT) -> CountVector:
    """d_t(G, i) for every i by exhaustive enumeration.

    The empty graph has the single (empty) total dominating set, so its
    polynomial is the constant 1.
    """
    counts, _ = _scan(G, max_n)
    return CountVector(tuple(counts))


def count_containing(G: Graph, v: int, max_n: int = ENUMERATION_LIMIT) -> CountVector:
    """d_t^v(G, i): total dominating sets of size i that contain v."""
    if not 0 <= v < G.n:
        raise NotFoundError(f"vertex {v} not in graph of order {G.n}")
    counts, _ = _scan(G, max_n, containing=v)
    return CountVector(tuple(counts))


def total_dominating_sets(G: Graph, max_n: int = ENUMERATION_LIMIT) -> list[VertexSet]:
    _, found = _scan(G, max_n, collect=True)
    return sorted(found)


def polynomial(G: Graph, max_n: int = ENUMERATION_LIMIT) -> IntPoly:
    """D_t(G, x) by enumeration."""
    return count_all(G, max_n).polynomial()


def gamma_t(G: Graph) -> int:
    """Total domination number by iterative deepening.

    Each branch picks the first vertex still lacking a neighbor in D and
    tries its neighbors as the next member, so only sets that could be
    minimal are explored.
    """
    if G.n == 0:
        return 0
    if G.has_isolated_vertex():
        raise UndefinedError("gamma_t undefined: the graph has an isolated vertex")
    full = G.full
    adj = G.adj

    def search(chosen: VertexSet, dominated: VertexSet, budget: int) -> bool:
        if dominated == full:
            return True
        if budget == 0:
            return False
        missing = full & ~dominated
        v = (missing & -missing).bit_length() - 1
        for u in bits(adj[v] & ~chosen):
            if search(chosen | 1 << u, dominated | adj[u], budget - 1):
                return True
        return False

    _, supports = supports_and_leaves(G)
    forced = supports
    dom = neighborhood(G, forced)
    k0 = forced.bit_count()
    for size in range(max(k0, 2), G.n + 1):
        if search(forced, dom, size - k0):
            return size
    raise ConsistencyError("no total dominating set found although no vertex is isolated")


def polynomial_vertex_transitive(G: Graph, v: int = 0) -> IntPoly:
    """D_t via d_t(G, i) = (n / i) d_t^v(G, i) for one fixed vertex v.

    When G is k-regular the coefficients above n - k are filled in as
    C(n, i) directly.
    """
    from .symmetry import automorphism_orbits

    if G.n == 0 or not automorphism_orbits(G).is_vertex_transitive:
        raise PreconditionError("graph is not vertex-transitive")
    n = G.n
    rooted = count_containing(G, v)
    k = G.degree(0)
    counts = [0] * (n + 1)
    for i in range(1, n + 1):
        if k and i > n - k:
            counts[i] = regular_tail(n, k, i)
            continue
        num = n * rooted[i]
        if num % i:
            raise ConsistencyError(f"n*d_t^v(G,{i}) = {num} is not divisible by {i}")
        counts[i] = num // i
    return IntPoly(counts)


def regular_tail(n: int, k: int, i: int) -> int:
    """d_t(G, i) = C(n, i) for a k-regular graph of order n and i > n - k."""
    if i <= n - k:
        raise PreconditionError(f"regular tail needs i > n - k, got i={i}, n={n}, k={k}")
    return comb(n, i)


# -- predicates ---------------------------------------------------------------


def _tds_family(G: Graph, max_n: int) -> set[VertexSet]:
    return set(total_dominating_sets(G, max_n))


def is_td_covered(G: Graph, v: int, mode: str = "exact", max_n: int = ENUMERATION_LIMIT) -> bool:
    """Whether v is total domination-covered.

    ``exact`` checks the definition by enumeration: the total dominating
    sets of G - v, read in G's labels, are total dominating in G and are
    exactly the total dominating sets of G avoiding v.  ``sufficient`` tests
    for a neighbor u of v with N[u] contained in N[v]; u = v is excluded
    since it would hold vacuously.
    """
    if not 0 <= v < G.n:
        raise NotFoundError(f"vertex {v} not in graph of order {G.n}")
    if mode == "sufficient":
        nv = closed_neighborhood(G, v)
        return any(closed_neighborhood(G, u) & ~nv == 0 for u in bits(G.adj[v]))
    if mode != "exact":
        raise ParameterError(f"unknown mode {mode!r}")
    H, index = delete_vertex(G, v)
    back = {new: old for old, new in index.items()}
    lifted = set()
    for D in total_dominating_sets(H, max_n):
        lifted.add(sum(1 << back[u] for u in bits(D)))
    tds_g = _tds_family(G, max_n)
    avoiding = {D for D in tds_g if not D >> v & 1}
    return lifted <= tds_g and lifted == avoiding


def _support_rule(G: Graph, u: int, v: int, supports: VertexSet) -> bool:
    # u needs a support neighbor other than v, and v one other than u
    return bool(G.adj[u] & supports & ~(1 << v)) and bool(G.adj[v] & supports & ~(1 << u))


def _twin_support_rule(G: Graph, u: int, v: int, leaves: VertexSet) -> bool:
    nu = closed_neighborhood(G, u)
    if nu != closed_neighborhood(G, v):
        return False
    # a support vertex in N[u] whose leaf survives in G - N[u] leaves that leaf isolated
    return any(G.adj[w] & leaves & ~nu for w in bits(nu))


def sufficient_irrelevant_rule(G: Graph, u: int, v: int) -> str | None:
    """Name of the first sufficient rule that proves uv irrelevant, if any."""
    leaves, supports = supports_and_leaves(G)
    if _support_rule(G, u, v, supports):
        return "support-neighbors"
    if _twin_support_rule(G, u, v, leaves):
        return "twin-with-support"
    return None


def is_irrelevant_edge(G: Graph, e: tuple[int, int], mode: str = "exact",
                       max_n: int = ENUMERATION_LIMIT) -> bool:
    u, v = e
    if not G.has_edge(u, v):
        raise NotFoundError(f"edge {u}-{v} not in graph")
    if mode == "sufficient":
        return sufficient_irrelevant_rule(G, u, v) is not None
    if mode != "exact":
        raise ParameterError(f"unknown mode {mode!r}")
    return polynomial(G, max_n) == polynomial(delete_edge(G, u, v), max_n)


def is_essential(G: Graph, v: int, check: bool = __debug__) -> bool:
    """v is essential (D_t(G - v) = 0) exactly when v is a support vertex."""
    if not 0 <= v < G.n:
        raise NotFoundError(f"vertex {v} not in graph of order {G.n}")
    _, supports = supports_and_leaves(G)
    result = bool(supports >> v & 1)
    if check and not G.has_isolated_vertex():
        H, _ = delete_vertex(G, v)
        if H.has_isolated_vertex() != result:
            raise ConsistencyError(f"essential-vertex cross-check failed at vertex {v}")
    return result


# -- closed forms -------------------------------------------------------------


def star_polynomial(k: int) -> IntPoly:
    """D_t(S_k) = x(x+1)^(k-1) - x."""
    x = IntPoly.monomial(1)
    return x * IntPoly.x_plus(1) ** (k - 1) - x


def closed_form(spec: GraphFamilySpec) -> IntPoly | None:
    """Closed-form D_t for families that have one, else None."""
    validate(spec)
    match spec:
        case Firecracker(n, k):
            if k < 3:
                raise PreconditionError(f"firecracker closed form needs k >= 3, got {k}")
            return star_polynomial(k) ** n
        case GeneralizedFirecracker(ks):
            if any(k < 3 for k in ks):
                raise PreconditionError(f"generalized firecracker closed form needs every k_i >= 3, got {ks}")
            out = IntPoly.one()
            for k in ks:
                out = out * star_polynomial(k)
            return out
        case H3(base):
            n = base.n
            return (IntPoly.x_plus(2) ** n).shift(2 * n)
        case Star(k):
            if k < 2:
                raise PreconditionError("star closed form needs k >= 2")
            return star_polynomial(k)
    return None
