import json
import math
from math import comb

import numpy as np
import pytest
from hypothesis import given, strategies as st

from tdpoly.errors import ParameterError, UndefinedError
from tdpoly.poly import (
    IntPoly, X, evaluate, integer_roots, match_two_root_form, numeric_roots, reconstruct_two_root_form,
    root_bound_radius, summarize_roots,
)

coeff_lists = st.lists(st.integers(-10**30, 10**30), max_size=8)
small_lists = st.lists(st.integers(-20, 20), max_size=7)


def naive_mul(a, b):
    if not a or not b:
        return []
    out = [0] * (len(a) + len(b) - 1)
    for i, x in enumerate(a):
        for j, y in enumerate(b):
            out[i + j] += x * y
    return out


def horner(a, t):
    return sum(c * t ** i for i, c in enumerate(a))


@given(coeff_lists, coeff_lists)
def test_ring_operations_match_naive(a, b):
    p, q = IntPoly(a), IntPoly(b)
    assert p * q == IntPoly(naive_mul(a, b))
    assert (p + q) - q == p
    assert p * q == q * p
    for t in (-3, -1, 0, 2, 7):
        assert evaluate(p * q, t) == horner(a, t) * horner(b, t)
        assert p(t) == horner(a, t)


@given(small_lists, st.integers(0, 5))
def test_power_matches_repeated_product(a, k):
    p = IntPoly(a)
    expected = IntPoly.one()
    for _ in range(k):
        expected = expected * p
    assert p ** k == expected


def test_trimming_degree_and_zero():
    assert IntPoly([1, 2, 0, 0]).coeffs == (1, 2)
    assert IntPoly([0, 0]).is_zero() and IntPoly().degree == -1
    assert IntPoly([0, 0, 3]).valuation == 2
    assert IntPoly([5]) == 5
    assert IntPoly([1, 2])[7] == 0


def test_shift_and_deflate():
    p = IntPoly([1, 2, 3])
    assert p.shift(3) == X ** 3 * p
    assert p.shift(3).deflate_x() == (3, p)


@given(small_lists, st.integers(-5, 5))
def test_divide_linear(a, r):
    p = IntPoly(a)
    q, rem = p.divide_linear(r)
    assert q * IntPoly.x_plus(-r) + rem == p
    assert rem == p(r)


@given(coeff_lists)
def test_json_roundtrip(a):
    p = IntPoly(a)
    text = json.dumps(p.to_json())
    assert IntPoly.from_json(json.loads(text)) == p
    assert all(isinstance(c, str) for c in p.to_json())


def test_str():
    assert str(IntPoly([0, 0, 6, 4, 1])) == "x^4 + 4*x^3 + 6*x^2"
    assert str(IntPoly([-1, 0, 1])) == "x^2 - 1"
    assert str(IntPoly()) == "0"


def test_big_coefficients_are_exact():
    p = IntPoly.x_plus(1) ** 200
    assert p[100] == comb(200, 100)


@given(st.dictionaries(st.integers(-6, 6), st.integers(1, 3), max_size=4), st.integers(1, 3),
       st.lists(st.integers(2, 5), max_size=2))
def test_integer_roots_recovered(roots, lead, irreducible):
    p = IntPoly([lead])
    for r, m in roots.items():
        p = p * IntPoly.x_plus(-r) ** m
    for c in irreducible:
        p = p * IntPoly([c, 0, 1])  # x^2 + c has no real roots
    assert integer_roots(p) == roots


def test_integer_roots_of_zero():
    with pytest.raises(UndefinedError):
        integer_roots(IntPoly())


@given(st.lists(st.integers(-30, 30), min_size=2, max_size=8).filter(lambda a: a[-1] != 0))
def test_numeric_roots_match_numpy(a):
    p = IntPoly(a)
    ours = numeric_roots(p, 1e-10)
    assert len(ours) == p.degree
    theirs = np.roots(a[::-1])
    # every root is a near-zero of p, and the multiset matches numpy up to clustering
    scale = sum(abs(c) for c in a)
    for z in ours:
        val = sum(c * z ** i for i, c in enumerate(a))
        assert abs(val) <= 1e-6 * scale * max(1.0, abs(z)) ** p.degree
    assert np.allclose(sorted(np.abs(ours)), sorted(np.abs(theirs)), rtol=1e-3, atol=1e-3)


def test_numeric_roots_exact_integer_part():
    p = IntPoly.monomial(4) * IntPoly.x_plus(3) ** 2
    assert numeric_roots(p) == [-3, -3, 0, 0, 0, 0]
    with pytest.raises(ParameterError):
        numeric_roots(IntPoly([4]))
    with pytest.raises(ParameterError):
        numeric_roots(X, tol=0)


@given(st.integers(1, 4), st.integers(1, 4), st.integers(1, 5))
def test_two_root_form_roundtrip(alpha, c, beta):
    p = reconstruct_two_root_form(alpha, c, beta)
    assert match_two_root_form(p) == (alpha, c, beta)


def test_two_root_form_rejects_others():
    assert match_two_root_form(IntPoly([0, 0, 0, 0, 10, 72, 140, 110, 45, 10, 1])) is None
    assert match_two_root_form(IntPoly([0, 2, 1]) * IntPoly([1, 1])) is None
    assert match_two_root_form(IntPoly()) is None


def test_root_bound_radius():
    assert root_bound_radius(3, 2) == pytest.approx(math.sqrt(7))
    with pytest.raises(UndefinedError):
        root_bound_radius(3, 0)


def test_summarize_roots():
    s = summarize_roots(IntPoly([0, 0, 9, 6, 1]))
    assert s.integer_roots == {0: 2, -3: 2}
    assert s.two_root_form == (2, 3, 2)
    assert s.distinct_set == frozenset({0, -3})
    assert json.loads(json.dumps(s.to_json()))["two_root_form"] == {"alpha": 2, "c": 3, "beta": 2}
