from fractions import Fraction as F

import pytest
from hypothesis import given, settings, strategies as st

from flames import (Flow, PreconditionError, RootedDigraph, FlameError,
                    all_connectivities, decompose, in_capacity, max_flow,
                    min_cut_maximal, unit_capacity)
from flames.flow import check_flow
from flames.oracle import (InstanceSpec, brute_lambda, brute_lambda_all,
                           brute_tight_sets, gen_instance)

from .conftest import load


def test_diamond_max_flow():
    D, c = load("fx1")
    assert brute_lambda(D, c, "v") == 2
    assert max_flow(D, c, "v").amount == 2


def test_single_edge():
    D = RootedDigraph.from_arcs("r", [("r", "v")])
    x = max_flow(D, unit_capacity(D), "v")
    assert x.amount == 1 and x.values == {0: 1}


def test_fractional_amount():
    D, c = load("fx5")
    assert brute_lambda(D, c, "v") == F(5, 6)
    assert max_flow(D, c, "v").amount == F(5, 6)


def test_sink_must_not_be_root():
    D, c = load("fx1")
    with pytest.raises(PreconditionError):
        max_flow(D, c, "r")


def test_connectivity_tables():
    D, c = load("fx2")
    assert brute_lambda_all(D, c) == {"a": 1, "b": 1, "v": 2}
    assert all_connectivities(D, c) == {"a": 1, "b": 1, "v": 2}
    D, c = load("fx4")
    assert all_connectivities(D, c) == {"v": 2}


def test_vertex_without_in_edges():
    D = RootedDigraph.from_arcs("r", [("r", "a")], vertices=["z"])
    assert all_connectivities(D, unit_capacity(D)) == {"z": 0, "a": 1}


def test_maximal_tight_set_skip_graph():
    D, c = load("fx2")
    assert brute_tight_sets(D, c, "v") == [frozenset("abv")]
    t = min_cut_maximal(D, c, "v")
    assert t.vertices == frozenset("abv") and t.value == 2


def test_maximal_tight_set_lemma_fixture():
    D, _ = load("fx6")
    y = {0: F(1), 1: F(1), 2: F(0)}
    assert set(brute_tight_sets(D, y, "u")) == {frozenset("u"), frozenset("au")}
    t = min_cut_maximal(D, y, "u")
    assert t.vertices == frozenset("au") and t.value == 1


def test_maximal_tight_set_single_edge():
    D = RootedDigraph.from_arcs("r", [("r", "v")])
    t = min_cut_maximal(D, unit_capacity(D), "v")
    assert t.vertices == frozenset("v") and t.value == 1


def test_decompose_diamond():
    D, c = load("fx1")
    dec = decompose(D, Flow("v", dict(c), F(2)))
    assert sorted(dec.paths) == [((0, 2), 1), ((1, 3), 1)]
    assert dec.cycles == ()


def test_decompose_fractional():
    D, c = load("fx5")
    dec = decompose(D, max_flow(D, c, "v"))
    assert sorted(dec.paths) == [((0, 1), F(1, 2)), ((2,), F(1, 3))]


def test_decompose_zero_flow():
    D, c = load("fx2")
    dec = decompose(D, Flow("v", {e: F(0) for e in c}, F(0)))
    assert dec.paths == () and dec.cycles == ()


def test_decompose_with_cycle():
    D = RootedDigraph.from_arcs(
        "r", [("r", "a"), ("a", "v"), ("a", "b"), ("b", "a")])
    x = Flow("v", {0: F(1), 1: F(1), 2: F(2), 3: F(2)}, F(1))
    dec = decompose(D, x)
    assert dec.paths == (((0, 1), 1),)
    assert dec.cycles == (((2, 3), 2),)


def test_decompose_rejects_broken_conservation():
    D, c = load("fx1")
    with pytest.raises(FlameError):
        decompose(D, Flow("v", {0: F(1), 1: F(0), 2: F(0), 3: F(0)}, F(1)))


instances = st.builds(
    InstanceSpec, n=st.integers(2, 7), m=st.integers(0, 18),
    mode=st.sampled_from(["unit", "integral", "rational"]),
    seed=st.integers(0, 10**6))


@settings(max_examples=150)
@given(instances)
def test_flow_matches_brute_force_and_is_valid(spec):
    D, c = gen_instance(spec)
    lam = brute_lambda_all(D, c)
    for v in D.non_root:
        x = max_flow(D, c, v)
        assert x.amount == lam[v]
        assert check_flow(D, x.values, v) == x.amount
        assert all(x.values[e] <= c[e] for e in c)
        if spec.mode != "rational":
            assert all(val.denominator == 1 for val in x.values.values())


@settings(max_examples=150)
@given(instances)
def test_tight_set_is_union_of_all_minimizers(spec):
    D, c = gen_instance(spec)
    for v in D.non_root:
        t = min_cut_maximal(D, c, v)
        union = frozenset().union(*brute_tight_sets(D, c, v))
        assert t.vertices == union
        assert D.root not in t.vertices and v in t.vertices
        assert in_capacity(D, c, t.vertices) == t.value == brute_lambda(D, c, v)


@settings(max_examples=150)
@given(instances)
def test_decomposition_resums_exactly(spec):
    D, c = gen_instance(spec)
    for v in D.non_root:
        x = max_flow(D, c, v)
        dec = decompose(D, x)
        total = dec.total()
        assert all(total.get(e, 0) == x.values[e] for e in x.values)
        assert dec.path_weight == x.amount
        assert dec.cycles == ()  # returned flows are cycle-free
        assert len(dec.paths) <= sum(1 for val in x.values.values() if val)
        for edges, w in dec.paths:
            assert w > 0
            assert D.edge(edges[0]).tail == D.root
            assert D.edge(edges[-1]).head == v


@settings(max_examples=100)
@given(instances, st.integers(1, 5))
def test_decompose_flow_with_circulation(spec, weight):
    from flames.flow import find_cycle
    D, c = gen_instance(spec)
    v = D.non_root[-1]
    x = max_flow(D, c, v)
    inner = set(D.non_root) - {v}
    cycle = find_cycle(D, unit_capacity(D), within=inner)
    values = dict(x.values)
    for e in cycle or ():
        values[e] += weight
    dec = decompose(D, Flow(v, values, x.amount))
    total = dec.total()
    assert all(total.get(e, 0) == values[e] for e in values)
    assert dec.path_weight == x.amount
    assert len(dec.paths) + len(dec.cycles) <= sum(1 for val in values.values() if val)
