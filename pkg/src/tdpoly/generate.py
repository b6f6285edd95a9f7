"""Generation of small graphs up to isomorphism.

Both generators produce labelled candidates by backtracking and reject
isomorphic copies through ``canonical_form``.  Output is sorted by
canonical form so it does not depend on search order.
"""

from __future__ import annotations

from functools import lru_cache
from itertools import combinations

from .graph import Graph, bits, cut_vertices, is_connected
from .symmetry import canonical_form, canonical_graph


def _regular_candidates(n: int, k: int):
    """Labelled k-regular graphs on n vertices, filling the lowest unfinished vertex first.

    Untouched vertices above the current one are interchangeable, so only the
    lowest-numbered untouched vertices are ever chosen among them.
    """
    adj = [0] * n
    deg = [0] * n

    def feasible(v: int) -> bool:
        # every unfinished vertex needs enough possible partners
        for u in range(v, n):
            need = k - deg[u]
            if need <= 0:
                continue
            avail = sum(1 for w in range(v, n) if w != u and deg[w] < k and not adj[u] >> w & 1)
            if avail < need:
                return False
        return True

    def rec(v: int):
        while v < n and deg[v] == k:
            v += 1
        if v == n:
            yield Graph(n, adj)
            return
        need = k - deg[v]
        touched = [u for u in range(v + 1, n) if 0 < deg[u] < k and not adj[v] >> u & 1]
        fresh = [u for u in range(v + 1, n) if deg[u] == 0]
        for t in range(min(need, len(touched)), -1, -1):
            f = need - t
            if f > len(fresh):
                continue
            for chosen in combinations(touched, t):
                picks = list(chosen) + fresh[:f]
                for u in picks:
                    adj[v] |= 1 << u
                    adj[u] |= 1 << v
                    deg[u] += 1
                deg[v] += need
                if feasible(v + 1):
                    yield from rec(v + 1)
                deg[v] -= need
                for u in picks:
                    adj[v] &= ~(1 << u)
                    adj[u] &= ~(1 << v)
                    deg[u] -= 1

    if n * k % 2 or k >= n or k < 0:
        return
    yield from rec(0)


def generate_regular(n: int, k: int, connected_only: bool = False) -> list[Graph]:
    """All pairwise non-isomorphic k-regular graphs of order n, in canonical labelling."""
    if n < 0 or n * k % 2 or k >= max(n, 1) or k < 0:
        return []
    seen: dict[bytes, Graph] = {}
    for G in _regular_candidates(n, k):
        if connected_only and not is_connected(G):
            continue
        key = canonical_form(G)
        if key not in seen:
            seen[key] = canonical_graph(G)
    return [seen[key] for key in sorted(seen)]


@lru_cache(maxsize=None)
def _connected(n: int) -> tuple[Graph, ...]:
    if n <= 0:
        return ()
    if n == 1:
        return (Graph.empty(1),)
    seen: dict[bytes, Graph] = {}
    for P in _connected(n - 1):
        m = n - 1
        for S in range(1, 1 << m):
            adj = list(P.adj)
            for u in bits(S):
                adj[u] |= 1 << m
            adj.append(S)
            G = Graph(n, adj)
            # every connected graph has a non-cut vertex of least degree among
            # non-cut vertices; insist the new vertex is one of those
            d = S.bit_count()
            noncut = G.full & ~cut_vertices(G)
            if any(G.adj[u].bit_count() < d for u in bits(noncut)):
                continue
            key = canonical_form(G)
            if key not in seen:
                seen[key] = canonical_graph(G)
    return tuple(seen[key] for key in sorted(seen))


def generate_connected(n: int) -> list[Graph]:
    """All connected graphs of order n up to isomorphism (vertex augmentation)."""
    return list(_connected(n))


def connected_up_to(max_n: int, min_n: int = 1) -> list[Graph]:
    out = []
    for n in range(min_n, max_n + 1):
        out.extend(_connected(n))
    return out
