"""Graph families and their builders.

Vertex numbering per family (all deterministic):

- ``Path(n)``: 0-1-...-(n-1).  ``Cycle(n)``: the path plus (n-1)-0.
- ``Complete(n)``: 0..n-1.  ``Star(n)``: center 0, leaves 1..n-1.
- ``Corona(G, H)``: G keeps 0..|G|-1; the copy of H attached to vertex i
  occupies the block starting at |G| + i*|H|.
- ``Firecracker(n, k)`` and ``GeneralizedFirecracker(k_1..k_n)``: star i is
  a contiguous block; its center is the first vertex of the block, its
  leaves follow, and the first leaf of each star is the one linked to the
  first leaf of the next star.
- ``H3(H)``: base vertex i keeps index i, the middle vertex of its pendant
  P_3 is n+i and the far end is 2n+i.
- ``HFamily(k)``: blocks a_1..a_k, b_1..b_k, c_1..c_k, d_1..d_k.
- ``GeneralizedPetersen(n, k)``: outer u_i = i, inner w_i = n+i.
- ``DisjointUnion(G, H)``: G first, H shifted by |G|.
"""

from __future__ import annotations

from dataclasses import dataclass
from typing import Union

from .errors import ParameterError
from .graph import Graph, disjoint_union


@dataclass(frozen=True)
class Path:
    n: int


@dataclass(frozen=True)
class Cycle:
    n: int


@dataclass(frozen=True)
class Complete:
    n: int


@dataclass(frozen=True)
class Star:
    n: int


@dataclass(frozen=True)
class Corona:
    G: Graph
    H: Graph


@dataclass(frozen=True)
class Firecracker:
    n: int
    k: int


@dataclass(frozen=True)
class GeneralizedFirecracker:
    ks: tuple[int, ...]


@dataclass(frozen=True)
class H3:
    base: Graph


@dataclass(frozen=True)
class HFamily:
    k: int


@dataclass(frozen=True)
class GeneralizedPetersen:
    n: int
    k: int


@dataclass(frozen=True)
class DisjointUnion:
    G: Graph
    H: Graph


GraphFamilySpec = Union[
    Path, Cycle, Complete, Star, Corona, Firecracker, GeneralizedFirecracker,
    H3, HFamily, GeneralizedPetersen, DisjointUnion,
]


def _require(cond: bool, message: str) -> None:
    if not cond:
        raise ParameterError(message)


def validate(spec: GraphFamilySpec) -> None:
    match spec:
        case Path(n) | Complete(n) | Star(n):
            _require(n >= 1, f"{type(spec).__name__} requires n >= 1, got {n}")
        case Cycle(n):
            _require(n >= 3, f"Cycle requires n >= 3, got {n}")
        case Firecracker(n, k):
            _require(n >= 1, f"Firecracker requires n >= 1, got {n}")
            _require(k >= 2, f"Firecracker requires k >= 2, got {k}")
        case GeneralizedFirecracker(ks):
            _require(len(ks) >= 1, "GeneralizedFirecracker requires at least one star")
            _require(all(k >= 2 for k in ks), f"GeneralizedFirecracker requires every k_i >= 2, got {ks}")
        case HFamily(k):
            _require(k >= 2, f"HFamily requires k >= 2, got {k}")
        case GeneralizedPetersen(n, k):
            _require(n >= 3, f"GeneralizedPetersen requires n >= 3, got {n}")
            _require(1 <= k and 2 * k < n, f"GeneralizedPetersen requires 1 <= k < n/2, got k={k}, n={n}")
        case H3(base):
            _require(base.n >= 1, "H3 requires a base graph with at least one vertex")
        case Corona(G, H):
            _require(G.n >= 1 and H.n >= 1, "Corona requires nonempty graphs")
        case DisjointUnion():
            pass
        case _:
            raise ParameterError(f"unknown family spec {spec!r}")


def path(n: int) -> Graph:
    return Graph.from_edges(n, [(i, i + 1) for i in range(n - 1)])


def cycle(n: int) -> Graph:
    return Graph.from_edges(n, [(i, (i + 1) % n) for i in range(n)])


def complete(n: int) -> Graph:
    return Graph.from_edges(n, [(i, j) for i in range(n) for j in range(i + 1, n)])


def star(n: int) -> Graph:
    return Graph.from_edges(n, [(0, i) for i in range(1, n)])


def corona(G: Graph, H: Graph) -> Graph:
    edges = list(G.edges())
    base = G.n
    for i in range(G.n):
        off = base + i * H.n
        edges += [(off + a, off + b) for a, b in H.edges()]
        edges += [(i, off + a) for a in range(H.n)]
    return Graph.from_edges(G.n + G.n * H.n, edges)


def generalized_firecracker(ks: tuple[int, ...]) -> Graph:
    edges = []
    linked = []
    off = 0
    for k in ks:
        edges += [(off, off + j) for j in range(1, k)]
        linked.append(off + 1)
        off += k
    edges += list(zip(linked, linked[1:]))
    return Graph.from_edges(off, edges)


def h3(H: Graph) -> Graph:
    n = H.n
    edges = list(H.edges())
    edges += [(i, n + i) for i in range(n)]
    edges += [(n + i, 2 * n + i) for i in range(n)]
    return Graph.from_edges(3 * n, edges)


def h_family(k: int) -> Graph:
    # blocks A, B, C, D; a_i is A + i - 1 and so on
    A, B, C, D = 0, k, 2 * k, 3 * k
    edges = []
    for i in range(k):
        edges += [(A + i, B + i), (C + i, D + i), (A + i, D + i), (B + i, C + i)]
        if i + 1 < k:
            edges += [(B + i, A + i + 1), (D + i, C + i + 1)]
    edges += [(A, B + k - 1), (C, D + k - 1)]
    return Graph.from_edges(4 * k, edges)


def generalized_petersen(n: int, k: int) -> Graph:
    edges = [(i, (i + 1) % n) for i in range(n)]
    edges += [(i, n + i) for i in range(n)]
    edges += [(n + i, n + (i + k) % n) for i in range(n)]
    return Graph.from_edges(2 * n, edges)


def petersen() -> Graph:
    return generalized_petersen(5, 2)


def build(spec: GraphFamilySpec) -> Graph:
    """Construct the graph described by ``spec``."""
    validate(spec)
    match spec:
        case Path(n):
            return path(n)
        case Cycle(n):
            return cycle(n)
        case Complete(n):
            return complete(n)
        case Star(n):
            return star(n)
        case Corona(G, H):
            return corona(G, H)
        case Firecracker(n, k):
            return generalized_firecracker((k,) * n)
        case GeneralizedFirecracker(ks):
            return generalized_firecracker(tuple(ks))
        case H3(base):
            return h3(base)
        case HFamily(k):
            return h_family(k)
        case GeneralizedPetersen(n, k):
            return generalized_petersen(n, k)
        case DisjointUnion(G, H):
            return disjoint_union(G, H)
    raise ParameterError(f"unknown family spec {spec!r}")
