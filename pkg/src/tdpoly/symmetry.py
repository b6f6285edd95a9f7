"""Canonical labelling and automorphism orbits.

A small individualization-refinement search in the style of nauty: refine
the vertex partition to an equitable one, branch on the first non-singleton
cell, and at every discrete leaf compare the relabelled adjacency.  The
largest leaf certificate is the canonical form.  Leaves equal to the first
leaf give automorphisms; those prune sibling branches that lie in the same
orbit of the pointwise stabilizer of the current prefix, which keeps highly
symmetric inputs (K_n, empty graphs) polynomial.

Because every stabilizer orbit along the first path is fully discovered,
the collected automorphisms generate the whole group, so union-find over
them yields exact orbits.
"""

from __future__ import annotations

from dataclasses import dataclass
from functools import lru_cache

from .errors import SizeLimitError
from .graph import Graph, bits, relabel

AUTOMORPHISM_VERTEX_LIMIT = 64


def _refine(adj: tuple[int, ...], cells: list[list[int]]) -> list[list[int]]:
    """Coarsest equitable refinement.  Fragment order depends only on counts."""
    while True:
        masks = []
        for cell in cells:
            m = 0
            for v in cell:
                m |= 1 << v
            masks.append(m)
        out = []
        changed = False
        for cell in cells:
            if len(cell) == 1:
                out.append(cell)
                continue
            groups: dict[tuple[int, ...], list[int]] = {}
            for v in cell:
                row = adj[v]
                groups.setdefault(tuple((row & m).bit_count() for m in masks), []).append(v)
            if len(groups) == 1:
                out.append(cell)
                continue
            changed = True
            for key in sorted(groups):
                out.append(groups[key])
        cells = out
        if not changed:
            return cells


class _UnionFind:
    def __init__(self, n: int):
        self.parent = list(range(n))

    def find(self, x: int) -> int:
        p = self.parent
        while p[x] != x:
            p[x] = p[p[x]]
            x = p[x]
        return x

    def union(self, a: int, b: int) -> None:
        ra, rb = self.find(a), self.find(b)
        if ra != rb:
            if ra < rb:
                self.parent[rb] = ra
            else:
                self.parent[ra] = rb


class _Search:
    def __init__(self, adj: tuple[int, ...]):
        self.adj = adj
        self.n = len(adj)
        self.first_order: list[int] | None = None
        self.first_code: tuple[int, ...] | None = None
        self.first_prefix: list[int] = []
        self.best_order: list[int] | None = None
        self.best_code: tuple[int, ...] | None = None
        self.generators: list[tuple[int, ...]] = []

    def _code(self, order: list[int]) -> tuple[int, ...]:
        pos = [0] * self.n
        for i, v in enumerate(order):
            pos[v] = i
        code = []
        for v in order:
            row = 0
            for u in bits(self.adj[v]):
                row |= 1 << pos[u]
            code.append(row)
        return tuple(code)

    def _automorphism(self, src: list[int], dst: list[int]) -> tuple[int, ...]:
        perm = [0] * self.n
        for a, b in zip(src, dst):
            perm[a] = b
        return tuple(perm)

    def _pruned(self, v: int, explored: list[int], prefix: list[int]) -> bool:
        gens = [g for g in self.generators if all(g[p] == p for p in prefix)]
        if not gens:
            return False
        uf = _UnionFind(self.n)
        for g in gens:
            for a, b in enumerate(g):
                uf.union(a, b)
        root = uf.find(v)
        return any(uf.find(u) == root for u in explored)

    def run(self) -> None:
        if self.n == 0:
            self.best_order = []
            self.best_code = ()
            return
        self._visit(_refine(self.adj, [list(range(self.n))]), [])

    def _visit(self, cells: list[list[int]], prefix: list[int]) -> int | None:
        if len(cells) == self.n:
            return self._leaf([c[0] for c in cells], prefix)
        t = next(i for i, c in enumerate(cells) if len(c) > 1)
        target = sorted(cells[t])
        explored: list[int] = []
        depth = len(prefix)
        for v in target:
            if explored and self._pruned(v, explored, prefix):
                continue
            explored.append(v)
            child = cells[:t] + [[v], [u for u in cells[t] if u != v]] + cells[t + 1:]
            jump = self._visit(_refine(self.adj, child), prefix + [v])
            if jump is not None and jump < depth:
                return jump
        return None

    def _leaf(self, order: list[int], prefix: list[int]) -> int | None:
        code = self._code(order)
        if self.first_code is None:
            self.first_order = self.best_order = order
            self.first_code = self.best_code = code
            self.first_prefix = list(prefix)
            return None
        if code == self.first_code:
            self.generators.append(self._automorphism(self.first_order, order))
            d = 0
            for a, b in zip(prefix, self.first_prefix):
                if a != b:
                    break
                d += 1
            return d
        if code > self.best_code:
            self.best_order, self.best_code = order, code
        elif code == self.best_code:
            self.generators.append(self._automorphism(self.best_order, order))
        return None


@lru_cache(maxsize=1 << 16)
def _search(adj: tuple[int, ...]) -> tuple[tuple[int, ...], tuple[tuple[int, ...], ...]]:
    s = _Search(adj)
    s.run()
    return tuple(s.best_order), tuple(s.generators)


def canonical_labeling(G: Graph) -> list[int]:
    """Permutation ``lab`` with ``relabel(G, lab)`` canonical: vertex v goes to ``lab[v]``."""
    order, _ = _search(G.adj)
    lab = [0] * G.n
    for i, v in enumerate(order):
        lab[v] = i
    return lab


def canonical_graph(G: Graph) -> Graph:
    return relabel(G, canonical_labeling(G))


def canonical_form(G: Graph) -> bytes:
    """Byte string equal for two graphs exactly when they are isomorphic.

    It is the graph6 encoding of the canonically relabelled graph.
    """
    from .graph6 import encode

    return encode(canonical_graph(G)).encode("ascii")


def are_isomorphic(G: Graph, H: Graph) -> bool:
    if G.n != H.n or G.num_edges != H.num_edges or sorted(G.degrees()) != sorted(H.degrees()):
        return False
    return canonical_form(G) == canonical_form(H)


@dataclass(frozen=True)
class OrbitPartition:
    orbits: tuple[tuple[int, ...], ...]
    generators: tuple[tuple[int, ...], ...]

    @property
    def is_vertex_transitive(self) -> bool:
        return len(self.orbits) == 1

    def orbit_of(self, v: int) -> tuple[int, ...]:
        return next(o for o in self.orbits if v in o)


def automorphism_orbits(G: Graph, limit: int = AUTOMORPHISM_VERTEX_LIMIT) -> OrbitPartition:
    """Orbits of Aut(G) together with a generating set of automorphisms."""
    if G.n > limit:
        raise SizeLimitError(f"automorphism search limited to {limit} vertices, got {G.n}")
    _, gens = _search(G.adj)
    uf = _UnionFind(G.n)
    for g in gens:
        for a, b in enumerate(g):
            uf.union(a, b)
    groups: dict[int, list[int]] = {}
    for v in range(G.n):
        groups.setdefault(uf.find(v), []).append(v)
    orbits = tuple(sorted(tuple(o) for o in groups.values()))
    return OrbitPartition(orbits=orbits, generators=gens)


def is_vertex_transitive(G: Graph) -> bool:
    return G.n > 0 and automorphism_orbits(G).is_vertex_transitive
