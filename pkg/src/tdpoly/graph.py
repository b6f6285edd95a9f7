"""Simple undirected graphs on vertices ``0..n-1`` with bitmask adjacency.

Vertex sets are plain Python ints used as bit vectors: bit ``v`` set means
vertex ``v`` is a member.  This is the currency for D, N(S) and N[S]
throughout the package.
"""

from __future__ import annotations

from collections import deque
from typing import Iterable, Iterator, Sequence

from .errors import NotFoundError, ParameterError

VertexSet = int
Edge = tuple[int, int]


def bits(s: VertexSet) -> Iterator[int]:
    """Yield the members of a vertex set in increasing order."""
    while s:
        low = s & -s
        yield low.bit_length() - 1
        s ^= low


def vertex_set(vertices: Iterable[int]) -> VertexSet:
    s = 0
    for v in vertices:
        s |= 1 << v
    return s


class Graph:
    """Immutable simple graph.  ``adj[v]`` is the bitmask of N(v)."""

    __slots__ = ("n", "adj", "_hash")

    def __init__(self, n: int, adj: Sequence[int]):
        if n < 0 or len(adj) != n:
            raise ParameterError(f"adjacency has {len(adj)} rows for order {n}")
        full = (1 << n) - 1
        adj = tuple(adj)
        for v, row in enumerate(adj):
            if row & ~full:
                raise ParameterError(f"vertex {v} has a neighbor outside 0..{n - 1}")
            if row >> v & 1:
                raise ParameterError(f"loop at vertex {v}")
            for u in bits(row):
                if not adj[u] >> v & 1:
                    raise ParameterError(f"edge {v}-{u} is not symmetric")
        self.n = n
        self.adj = adj
        self._hash = None

    @classmethod
    def from_edges(cls, n: int, edges: Iterable[Edge]) -> "Graph":
        adj = [0] * n
        for u, v in edges:
            if u == v:
                raise ParameterError(f"loop at vertex {u}")
            if not (0 <= u < n and 0 <= v < n):
                raise ParameterError(f"edge {u}-{v} out of range for order {n}")
            adj[u] |= 1 << v
            adj[v] |= 1 << u
        return cls(n, adj)

    @classmethod
    def empty(cls, n: int = 0) -> "Graph":
        return cls(n, [0] * n)

    # -- basic queries -------------------------------------------------

    @property
    def full(self) -> VertexSet:
        return (1 << self.n) - 1

    def degree(self, v: int) -> int:
        return self.adj[v].bit_count()

    def degrees(self) -> list[int]:
        return [row.bit_count() for row in self.adj]

    @property
    def min_degree(self) -> int:
        return min(self.degrees(), default=0)

    @property
    def max_degree(self) -> int:
        return max(self.degrees(), default=0)

    @property
    def num_edges(self) -> int:
        return sum(self.degrees()) // 2

    def neighbors(self, v: int) -> list[int]:
        return list(bits(self.adj[v]))

    def has_edge(self, u: int, v: int) -> bool:
        return 0 <= u < self.n and 0 <= v < self.n and bool(self.adj[u] >> v & 1)

    def edges(self) -> list[Edge]:
        return [(u, v) for u in range(self.n) for v in bits(self.adj[u] >> (u + 1) << (u + 1))]

    def is_regular(self, k: int | None = None) -> bool:
        degs = set(self.degrees())
        if k is None:
            return len(degs) <= 1
        return degs <= {k} if self.n else True

    def has_isolated_vertex(self) -> bool:
        return any(row == 0 for row in self.adj)

    def __eq__(self, other: object) -> bool:
        return isinstance(other, Graph) and self.n == other.n and self.adj == other.adj

    def __hash__(self) -> int:
        if self._hash is None:
            self._hash = hash((self.n, self.adj))
        return self._hash

    def __repr__(self) -> str:
        return f"Graph(n={self.n}, edges={self.edges()})"


def neighborhood(G: Graph, S: VertexSet, closed: bool = False) -> VertexSet:
    """N(S), or N[S] when ``closed``."""
    out = 0
    for v in bits(S):
        out |= G.adj[v]
    return out | S if closed else out


def closed_neighborhood(G: Graph, v: int) -> VertexSet:
    return G.adj[v] | 1 << v


# -- deletions -----------------------------------------------------------


def delete_edge(G: Graph, u: int, v: int) -> Graph:
    """G minus the edge uv.  Vertex numbering is unchanged."""
    if not G.has_edge(u, v):
        raise NotFoundError(f"edge {u}-{v} not in graph")
    adj = list(G.adj)
    adj[u] &= ~(1 << v)
    adj[v] &= ~(1 << u)
    return Graph(G.n, adj)


def delete_vertices(G: Graph, S: VertexSet) -> tuple[Graph, dict[int, int]]:
    """G minus the vertices of S, renumbered order-preservingly.

    Returns the new graph and the old->new index map of surviving vertices.
    """
    if S & ~G.full:
        raise NotFoundError(f"vertex set {S:#x} has members outside 0..{G.n - 1}")
    keep = [v for v in range(G.n) if not S >> v & 1]
    return induced_subgraph(G, keep)


def delete_vertex(G: Graph, v: int) -> tuple[Graph, dict[int, int]]:
    if not 0 <= v < G.n:
        raise NotFoundError(f"vertex {v} not in graph of order {G.n}")
    return delete_vertices(G, 1 << v)


def induced_subgraph(G: Graph, vertices: Sequence[int]) -> tuple[Graph, dict[int, int]]:
    index = {old: new for new, old in enumerate(vertices)}
    adj = []
    for old in vertices:
        row = 0
        for u in bits(G.adj[old]):
            if u in index:
                row |= 1 << index[u]
        adj.append(row)
    return Graph(len(vertices), adj), index


def relabel(G: Graph, perm: Sequence[int]) -> Graph:
    """Graph with vertex ``v`` renamed to ``perm[v]``."""
    adj = [0] * G.n
    for v in range(G.n):
        row = 0
        for u in bits(G.adj[v]):
            row |= 1 << perm[u]
        adj[perm[v]] = row
    return Graph(G.n, adj)


def odot(G: Graph, v: int, drop_v: bool = False) -> Graph:
    """Remove every edge with both ends in N(v); with ``drop_v`` also delete v.

    ``odot(G, v)`` is G⊙v and ``odot(G, v, drop_v=True)`` is G⊛v.
    """
    if not 0 <= v < G.n:
        raise NotFoundError(f"vertex {v} not in graph of order {G.n}")
    nv = G.adj[v]
    adj = [row & ~nv if nv >> u & 1 else row for u, row in enumerate(G.adj)]
    H = Graph(G.n, adj)
    if drop_v:
        H, _ = delete_vertex(H, v)
    return H


def odot_edges(G: Graph, v: int) -> list[Edge]:
    """The edges that ``odot`` would remove."""
    nv = G.adj[v]
    return [(a, b) for a, b in G.edges() if nv >> a & 1 and nv >> b & 1]


def disjoint_union(G: Graph, H: Graph) -> Graph:
    shift = G.n
    return Graph(G.n + H.n, list(G.adj) + [row << shift for row in H.adj])


def complement(G: Graph) -> Graph:
    full = G.full
    return Graph(G.n, [full & ~row & ~(1 << v) for v, row in enumerate(G.adj)])


# -- structure -----------------------------------------------------------


def supports_and_leaves(G: Graph) -> tuple[VertexSet, VertexSet]:
    """Return (leaves, supports): degree-1 vertices and their neighbors."""
    leaves = 0
    supports = 0
    for v, row in enumerate(G.adj):
        if row and not row & (row - 1):
            leaves |= 1 << v
            supports |= row
    return leaves, supports


def components(G: Graph) -> list[list[int]]:
    """Connected components as sorted vertex lists, ordered by smallest vertex."""
    seen = 0
    comps = []
    for s in range(G.n):
        if seen >> s & 1:
            continue
        comp = reach = 1 << s
        while reach:
            nxt = neighborhood(G, reach) & ~comp
            comp |= nxt
            reach = nxt
        seen |= comp
        comps.append(list(bits(comp)))
    return comps


def is_connected(G: Graph, removed: VertexSet = 0) -> bool:
    """Whether G minus ``removed`` is connected (the null graph counts as connected)."""
    alive = G.full & ~removed
    if not alive:
        return True
    start = alive & -alive
    comp = reach = start
    while reach:
        nxt = neighborhood(G, reach) & alive & ~comp
        comp |= nxt
        reach = nxt
    return comp == alive


def cut_vertices(G: Graph) -> VertexSet:
    """Articulation points (Hopcroft-Tarjan)."""
    n = G.n
    disc = [-1] * n
    low = [0] * n
    cut = 0
    timer = 0
    for root in range(n):
        if disc[root] >= 0:
            continue
        disc[root] = low[root] = timer
        timer += 1
        root_children = 0
        stack = [(root, -1, iter(G.neighbors(root)))]
        while stack:
            v, parent, it = stack[-1]
            for u in it:
                if disc[u] < 0:
                    disc[u] = low[u] = timer
                    timer += 1
                    stack.append((u, v, iter(G.neighbors(u))))
                    break
                if u != parent:
                    low[v] = min(low[v], disc[u])
            else:
                stack.pop()
                if parent >= 0:
                    low[parent] = min(low[parent], low[v])
                    if parent == root:
                        root_children += 1
                    elif low[v] >= disc[parent]:
                        cut |= 1 << parent
        if root_children > 1:
            cut |= 1 << root
    return cut


def _local_connectivity(G: Graph, s: int, t: int) -> int:
    """Maximum number of internally vertex-disjoint s-t paths (s, t non-adjacent).

    Unit-capacity max flow on the split graph: vertex x becomes x_in -> x_out.
    """
    n = G.n
    # node 2x = x_in, 2x+1 = x_out
    cap: dict[tuple[int, int], int] = {}
    graph: list[list[int]] = [[] for _ in range(2 * n)]

    def add(a: int, b: int, c: int) -> None:
        if (a, b) not in cap:
            graph[a].append(b)
            graph[b].append(a)
            cap.setdefault((b, a), 0)
        cap[(a, b)] = cap.get((a, b), 0) + c

    big = n
    for x in range(n):
        add(2 * x, 2 * x + 1, big if x in (s, t) else 1)
    for a, b in G.edges():
        add(2 * a + 1, 2 * b, big)
        add(2 * b + 1, 2 * a, big)
    source, sink = 2 * s + 1, 2 * t
    flow = 0
    while True:
        prev = {source: source}
        q = deque([source])
        while q and sink not in prev:
            a = q.popleft()
            for b in graph[a]:
                if b not in prev and cap[(a, b)] > 0:
                    prev[b] = a
                    q.append(b)
        if sink not in prev:
            return flow
        b = sink
        while b != source:
            a = prev[b]
            cap[(a, b)] -= 1
            cap[(b, a)] += 1
            b = a
        flow += 1


def vertex_connectivity(G: Graph) -> int:
    """Vertex connectivity κ(G).

    Disconnected graphs give 0 and complete graphs give n-1.  Otherwise the
    minimum over non-adjacent pairs of the local connectivity; only sources
    among the first κ+1 vertices need to be tried, since one of them lies
    outside any minimum cut.
    """
    n = G.n
    if n <= 1:
        return 0
    if not is_connected(G):
        return 0
    best = n - 1
    for i in range(n):
        if i > best:
            break
        for j in range(n):
            if j == i or G.adj[i] >> j & 1:
                continue
            best = min(best, _local_connectivity(G, i, j))
    return best
