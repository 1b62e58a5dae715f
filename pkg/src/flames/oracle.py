"""Naive reference implementations and random instances.

Nothing here touches :mod:`flames.flow`: connectivities come from
enumerating every cut, independence from backtracking over explicit path
systems.  Exponential by design; the bounds below keep them usable.
"""

from __future__ import annotations

import os
import random
from dataclasses import dataclass
from fractions import Fraction
from itertools import combinations
from typing import Iterable, Mapping

from .digraph import Capacity, Edge, RootedDigraph
from .errors import FlameError, SizeBoundError
from .textio import format_graph

MAX_VERTICES = int(os.environ.get("FLAMES_ORACLE_MAX_VERTICES", 16))
MAX_PATH_EDGES = int(os.environ.get("FLAMES_ORACLE_MAX_PATH_EDGES", 14))
MAX_FLAME_EDGES = int(os.environ.get("FLAMES_ORACLE_MAX_FLAME_EDGES", 12))


def _cut_table(D: RootedDigraph, c: Mapping[int, object]) -> tuple[list[str], list[Fraction]]:
    """In-capacity of every subset of the non-root vertices, by bitmask."""
    if len(D.vertices) > MAX_VERTICES:
        raise SizeBoundError("vertex count", len(D.vertices), MAX_VERTICES)
    others = [v for v in D.vertices if v != D.root]
    bit = {v: 1 << i for i, v in enumerate(others)}
    bit[D.root] = 0
    # root never belongs to a cut set, so root-tail edges always cross in
    arcs = [(bit[e.tail], bit[e.head], Fraction(c.get(e.id, 0)))
            for e in D.edges if e.head != D.root]
    table = []
    for W in range(1 << len(others)):
        total = Fraction(0)
        for t, h, x in arcs:
            if W & h and not W & t:
                total += x
        table.append(total)
    return others, table


def brute_lambda_all(D: RootedDigraph,
                     c: Mapping[int, object]) -> dict[str, Fraction]:
    """Minimum in-capacity over all cut sets, for every non-root vertex."""
    others, table = _cut_table(D, c)
    return {v: min(x for W, x in enumerate(table) if W >> i & 1)
            for i, v in enumerate(others)}


def brute_lambda(D: RootedDigraph, c: Mapping[int, object], v: str) -> Fraction:
    if v == D.root or v not in D.vertices:
        raise FlameError(f"invalid target {v!r}")
    return brute_lambda_all(D, c)[v]


def brute_tight_sets(D: RootedDigraph, c: Mapping[int, object],
                     v: str) -> list[frozenset[str]]:
    """Every minimizing cut set containing ``v``."""
    others, table = _cut_table(D, c)
    i = others.index(v)
    best = min(x for W, x in enumerate(table) if W >> i & 1)
    return [frozenset(o for j, o in enumerate(others) if W >> j & 1)
            for W, x in enumerate(table) if W >> i & 1 and x == best]


def _simple_paths(out, start, goal, avoid_vertex, used):
    """Edge lists of simple start->goal paths skipping ``used`` edges."""
    if start == goal:
        yield []
        return
    stack = [(start, [], {start})]
    while stack:
        u, path, seen = stack.pop()
        for e in out.get(u, ()):
            if e.id in used or e.head in seen or e.head == avoid_vertex:
                continue
            if e.head == goal:
                yield path + [e.id]
            else:
                stack.append((e.head, path + [e.id], seen | {e.head}))


def brute_independent(D: RootedDigraph, v: str, edges: Iterable[int]) -> bool:
    """Search for edge-disjoint root->v paths ending exactly in ``edges``."""
    if len(D.edges) > MAX_PATH_EDGES:
        raise SizeBoundError("edge count", len(D.edges), MAX_PATH_EDGES)
    chosen = sorted(set(edges))
    by_id = {e.id: e for e in D.edges}
    for eid in chosen:
        if by_id[eid].head != v:
            raise FlameError(f"edge {eid} does not enter {v!r}")
    out: dict[str, list[Edge]] = {}
    for e in D.edges:
        out.setdefault(e.tail, []).append(e)

    def place(k: int, used: frozenset[int]) -> bool:
        if k == len(chosen):
            return True
        last = by_id[chosen[k]]
        for path in _simple_paths(out, D.root, last.tail, v, used):
            if place(k + 1, used | set(path) | {last.id}):
                return True
        return False

    return place(0, frozenset(chosen))


def brute_is_coloop(D: RootedDigraph, v: str, eid: int) -> bool:
    """Every independent set avoiding ``eid`` stays independent with it."""
    incoming = [e.id for e in D.edges if e.head == v and e.id != eid]
    for k in range(len(incoming) + 1):
        for I in combinations(incoming, k):
            if brute_independent(D, v, I) and not brute_independent(D, v, I + (eid,)):
                return False
    return True


def _is_flame(D: RootedDigraph, keep: Iterable[int]) -> bool:
    keep = set(keep)
    unit = {e.id: Fraction(int(e.id in keep)) for e in D.edges}
    lam = brute_lambda_all(D, unit)
    indeg = {v: 0 for v in lam}
    for e in D.edges:
        if e.id in keep and e.head != D.root:
            indeg[e.head] += 1
    return all(lam[v] == indeg[v] for v in lam)


def enumerate_flames(D: RootedDigraph) -> list[frozenset[int]]:
    """Every edge subset whose spanning subgraph is a flame."""
    if len(D.edges) > MAX_FLAME_EDGES:
        raise SizeBoundError("edge count", len(D.edges), MAX_FLAME_EDGES)
    ids = [e.id for e in D.edges]
    return [frozenset(s) for k in range(len(ids) + 1)
            for s in combinations(ids, k) if _is_flame(D, s)]


def preserving_subsets(D: RootedDigraph, size: int) -> list[frozenset[int]]:
    """Edge subsets of the given size keeping every unit connectivity."""
    if len(D.edges) > MAX_FLAME_EDGES:
        raise SizeBoundError("edge count", len(D.edges), MAX_FLAME_EDGES)
    full = brute_lambda_all(D, {e.id: 1 for e in D.edges})
    found = []
    for s in combinations([e.id for e in D.edges], size):
        keep = set(s)
        unit = {e.id: int(e.id in keep) for e in D.edges}
        if brute_lambda_all(D, unit) == full:
            found.append(frozenset(s))
    return found


UNIT, INTEGER, RATIONAL = "unit", "integral", "rational"


@dataclass(frozen=True)
class InstanceSpec:
    n: int
    m: int
    mode: str = UNIT
    max_value: int = 3
    max_denominator: int = 10
    seed: int = 0


def gen_instance(spec: InstanceSpec) -> tuple[RootedDigraph, Capacity]:
    """Seeded random rooted digraph on ``r, v1, ..., v{n-1}``.

    Arcs are drawn uniformly, with replacement, among ordered pairs that
    are neither loops nor point into the root, so parallel arcs may occur.
    """
    if spec.n < 2:
        raise FlameError("need at least two vertices")
    if spec.mode not in (UNIT, INTEGER, RATIONAL):
        raise FlameError(f"unknown capacity mode {spec.mode!r}")
    rng = random.Random(spec.seed)
    vertices = ["r"] + [f"v{i}" for i in range(1, spec.n)]
    pairs = [(t, h) for t in vertices for h in vertices[1:] if t != h]
    edges, cap = [], {}
    for eid in range(spec.m):
        t, h = rng.choice(pairs)
        edges.append(Edge(eid, t, h))
        if spec.mode == UNIT:
            cap[eid] = Fraction(1)
        elif spec.mode == INTEGER:
            cap[eid] = Fraction(rng.randint(0, spec.max_value))
        else:
            q = rng.randint(1, spec.max_denominator)
            cap[eid] = Fraction(rng.randint(0, spec.max_value * q), q)
    return RootedDigraph(tuple(vertices), "r", tuple(edges)), cap


def instance_text(spec: InstanceSpec) -> str:
    D, c = gen_instance(spec)
    return format_graph(D, c, comment=f"{spec}")
