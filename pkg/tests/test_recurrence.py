import pytest
from hypothesis import given

from tdpoly import families as fam
from tdpoly.engine import polynomial
from tdpoly.errors import ConsistencyError
from tdpoly.graph import Graph
from tdpoly.poly import IntPoly
from tdpoly.recurrence import RecurrenceEngine, ReductionTrace, Step, branching_polynomial, compute_via_recurrence

from strategies import graphs


@given(graphs(max_n=9))
def test_recurrence_matches_enumeration(G):
    p, trace = RecurrenceEngine().compute(G)
    assert p == polynomial(G)
    assert trace.replay() == p
    assert trace.replay(verify_leaves=False) == p


@given(graphs(max_n=9))
def test_branching_matches_enumeration(G):
    assert branching_polynomial(G) == polynomial(G)


def test_rules_fire():
    engine = RecurrenceEngine()
    _, trace = engine.compute(fam.complete(4))
    assert "twin" in trace.tags()
    _, trace = RecurrenceEngine().compute(fam.corona(fam.path(4), fam.path(1)))
    assert "irrelevant-edge" in trace.tags()
    _, trace = RecurrenceEngine().compute(fam.build(fam.DisjointUnion(fam.cycle(3), fam.cycle(4))))
    assert "component-split" in trace.tags()
    _, trace = RecurrenceEngine().compute(Graph.from_edges(5, [(0, 1), (1, 2), (2, 0), (2, 3), (3, 4), (4, 0)]))
    assert "vertex-recurrence" in trace.tags()


def test_memo_is_reused_across_calls():
    engine = RecurrenceEngine()
    engine.compute(fam.petersen())
    _, trace = engine.compute(fam.petersen())
    assert trace.tags() == {"memo": 1}
    assert trace.replay() == polynomial(fam.petersen())


def test_beyond_enumeration_limit():
    # 30 vertices: recurrence plus branching, checked against the closed form
    spec = fam.Firecracker(6, 5)
    p, trace = compute_via_recurrence(fam.build(spec))
    from tdpoly.engine import closed_form
    assert p == closed_form(spec)
    G = fam.cycle(28)
    p, _ = RecurrenceEngine().compute(G)
    # C_n splits into two interleaved cycles' worth of structure; cross-check by branching
    assert p == branching_polynomial(G)


def test_memo_cap_clears():
    engine = RecurrenceEngine(memo_cap=4)
    for n in range(3, 9):
        engine.compute(fam.cycle(n))
    assert len(engine.memo) <= 4


def test_replay_detects_tampering():
    p, trace = RecurrenceEngine().compute(fam.complete(4))
    s = trace.steps[-1]
    bad = ReductionTrace(trace.steps[:-1] + [Step(s.tag, s.key, s.graph, s.children, s.result + 1, s.detail)])
    with pytest.raises(ConsistencyError):
        bad.replay()
    leaf = ReductionTrace([Step("base-case", b"k", fam.path(2), (), IntPoly([0, 0, 2]))])
    with pytest.raises(ConsistencyError):
        leaf.replay()
