import itertools
import time

import pytest
from hypothesis import HealthCheck, settings

from tdpoly import families as fam
from tdpoly.analysis import build_corpus
from tdpoly.generate import connected_up_to
from tdpoly.graph import Graph
from tdpoly.graph6 import encode

settings.register_profile("default", max_examples=60, deadline=None,
                          suppress_health_check=[HealthCheck.too_slow])
settings.load_profile("default")


# -- shared corpora ---------------------------------------------------------------


def compositions(total, smallest=3):
    """Ordered tuples of parts >= smallest summing to total."""
    if total == 0:
        yield ()
        return
    for k in range(smallest, total + 1):
        for rest in compositions(total - k, smallest):
            yield (k,) + rest


def family_instances():
    """Firecrackers with n*k <= 16, k >= 3; generalized firecrackers with sum <= 16, parts >= 3;
    H3 over every connected base of order <= 5."""
    specs = [fam.Firecracker(n, k) for k in range(3, 17) for n in range(1, 16 // k + 1)]
    specs += [fam.GeneralizedFirecracker(c) for m in range(3, 17) for c in compositions(m)]
    specs += [fam.H3(G) for G in connected_up_to(5)]
    return specs


def spec_label(spec) -> str:
    if isinstance(spec, fam.H3):
        return f"H3({encode(spec.base)})"
    return repr(spec)


@pytest.fixture(scope="session")
def connected8():
    t0 = time.perf_counter()
    graphs = connected_up_to(8)
    return graphs, time.perf_counter() - t0


@pytest.fixture(scope="session")
def connected8_corpus(connected8):
    graphs, _ = connected8
    return build_corpus((encode(G), G) for G in graphs)


@pytest.fixture(scope="session")
def family_specs():
    return family_instances()


@pytest.fixture(scope="session")
def family_corpus(family_specs):
    return build_corpus((spec_label(s), fam.build(s)) for s in family_specs)


SMALL_PARTNERS = [fam.path(2), fam.path(3), fam.cycle(3), fam.star(4), fam.cycle(4)]


def partner_for(i, entry):
    return SMALL_PARTNERS[i % len(SMALL_PARTNERS)]


# -- small graph zoo --------------------------------------------------------------


def all_graphs(n):
    """Every labelled graph on n vertices (n <= 5 keeps this small)."""
    pairs = list(itertools.combinations(range(n), 2))
    for mask in range(1 << len(pairs)):
        yield Graph.from_edges(n, [e for i, e in enumerate(pairs) if mask >> i & 1])


# -- acceptance summary lines -----------------------------------------------------


def pytest_configure(config):
    config.addinivalue_line("markers", "criterion(number, title): acceptance criterion")


@pytest.hookimpl(hookwrapper=True)
def pytest_runtest_makereport(item, call):
    outcome = yield
    rep = outcome.get_result()
    marker = item.get_closest_marker("criterion")
    if marker is None:
        return
    if rep.when == "call" or (rep.when == "setup" and rep.outcome != "passed"):
        results = item.config.stash.setdefault(_RESULTS, {})
        results[marker.args[0]] = (marker.args[1], rep.outcome, rep.duration)


_RESULTS = pytest.StashKey[dict]()


def pytest_terminal_summary(terminalreporter, exitstatus, config):
    results = config.stash.get(_RESULTS, {})
    if not results:
        return
    terminalreporter.section("acceptance criteria")
    for number in sorted(results):
        title, outcome, duration = results[number]
        status = "PASS" if outcome == "passed" else "FAIL"
        terminalreporter.write_line(f"[{status}] criterion {number:2d}: {title} ({duration:.2f}s)")
