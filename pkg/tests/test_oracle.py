from fractions import Fraction as F

import pytest

from flames import FlameError, RootedDigraph, SizeBoundError, parse_graph
from flames.oracle import (InstanceSpec, brute_independent, brute_lambda,
                           enumerate_flames, gen_instance, instance_text)

from .conftest import load


def test_brute_lambda_fixtures():
    D, c = load("fx1")
    assert brute_lambda(D, c, "v") == 2
    D, c = load("fx5")
    assert brute_lambda(D, c, "v") == F(5, 6)
    D = RootedDigraph(("r", "v"), "r", ())
    assert brute_lambda(D, {}, "v") == 0


def test_brute_lambda_rejects_root_and_large_graphs():
    D, c = load("fx1")
    with pytest.raises(FlameError):
        brute_lambda(D, c, "r")
    big = RootedDigraph.from_arcs("r", [("r", f"x{i}") for i in range(16)])
    with pytest.raises(SizeBoundError):
        brute_lambda(big, {}, "x0")


def test_brute_independent_bound():
    D = RootedDigraph.from_arcs("r", [("r", "v")] * 15)
    with pytest.raises(SizeBoundError):
        brute_independent(D, "v", {0})


def test_enumerate_flames_bound():
    D = RootedDigraph.from_arcs("r", [("r", "v")] * 13)
    with pytest.raises(SizeBoundError):
        enumerate_flames(D)


def test_generator_is_deterministic():
    spec = InstanceSpec(4, 6, "unit", seed=7)
    assert gen_instance(spec) == gen_instance(spec)
    assert instance_text(spec) == instance_text(spec)
    other = gen_instance(InstanceSpec(4, 6, "unit", seed=8))
    assert other != gen_instance(spec)


def test_generator_two_vertices():
    for seed in range(5):
        D, c = gen_instance(InstanceSpec(2, 1, "unit", seed=seed))
        assert [tuple(e) for e in D.edges] == [(0, "r", "v1")]


def test_generator_rational_denominators():
    D, c = gen_instance(InstanceSpec(5, 10, "rational", max_denominator=10, seed=1))
    assert len(D.edges) == 10
    assert all(x.denominator <= 10 and x >= 0 for x in c.values())
    assert all(e.head != D.root and e.tail != e.head for e in D.edges)


def test_generator_text_parses_back():
    spec = InstanceSpec(5, 10, "rational", seed=3)
    D, c = gen_instance(spec)
    D2, c2 = parse_graph(instance_text(spec))
    assert c2 == c
    assert [tuple(e) for e in D2.edges] == [tuple(e) for e in D.edges]
