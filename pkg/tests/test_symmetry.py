import networkx as nx
import pytest
from hypothesis import given
from networkx.algorithms.isomorphism import GraphMatcher

from tdpoly.errors import SizeLimitError
from tdpoly.graph import relabel
from tdpoly.symmetry import (
    are_isomorphic, automorphism_orbits, canonical_form, canonical_graph, canonical_labeling, is_vertex_transitive,
)
from tdpoly import families as fam

from strategies import graphs, permutations
from test_graph import to_nx


@given(graphs(max_n=8), permutations(8))
def test_canonical_form_is_label_invariant(G, perm):
    perm = [p for p in perm if p < G.n]
    H = relabel(G, perm)
    assert canonical_form(G) == canonical_form(H)
    assert canonical_graph(G) == canonical_graph(H)


@given(graphs(max_n=7), graphs(max_n=7))
def test_isomorphism_matches_networkx(G, H):
    expected = G.n == H.n and nx.is_isomorphic(to_nx(G), to_nx(H))
    assert are_isomorphic(G, H) == expected


@given(graphs(max_n=8))
def test_canonical_labeling_is_isomorphism(G):
    lab = canonical_labeling(G)
    assert sorted(lab) == list(range(G.n))
    assert relabel(G, lab) == canonical_graph(G)


def nx_orbits(G):
    N = to_nx(G)
    orbit = {v: {v} for v in N}
    for m in GraphMatcher(N, N).isomorphisms_iter():
        for a, b in m.items():
            orbit[a].add(b)
    return sorted({tuple(sorted(o)) for o in orbit.values()})


@given(graphs(max_n=7))
def test_orbits_match_networkx(G):
    orb = automorphism_orbits(G)
    assert sorted(orb.orbits) == nx_orbits(G)
    for g in orb.generators:
        assert relabel(G, g) == G


def test_known_groups():
    assert is_vertex_transitive(fam.petersen())
    assert is_vertex_transitive(fam.generalized_petersen(8, 3))
    assert not is_vertex_transitive(fam.star(5))
    assert automorphism_orbits(fam.path(5)).orbits == ((0, 4), (1, 3), (2,))
    assert automorphism_orbits(fam.petersen()).orbit_of(3) == tuple(range(10))


def test_orbit_size_limit():
    with pytest.raises(SizeLimitError):
        automorphism_orbits(fam.cycle(10), limit=8)
