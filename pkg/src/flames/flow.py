"""Exact maximum flow, maximal minimum cuts, and path/cycle decomposition.

Capacities are rescaled by the lcm of their denominators, so the blocking
flow search runs on Python integers and the result is mapped back to
fractions without rounding.
"""

from __future__ import annotations

import math
from collections import deque
from dataclasses import dataclass
from fractions import Fraction
from typing import Iterable, Mapping

from .digraph import Capacity, RootedDigraph, in_capacity, out_capacity
from .errors import FlameError, PreconditionError

ZERO = Fraction(0)


@dataclass(frozen=True)
class Flow:
    """A root-to-``sink`` flow: conserving, cycle-free when produced here."""

    sink: str
    values: Capacity
    amount: Fraction


@dataclass(frozen=True)
class PathDecomposition:
    paths: tuple[tuple[tuple[int, ...], Fraction], ...]
    cycles: tuple[tuple[tuple[int, ...], Fraction], ...]

    def total(self) -> dict[int, Fraction]:
        """Weighted sum of the characteristic vectors of all pieces."""
        acc: dict[int, Fraction] = {}
        for edges, w in self.paths + self.cycles:
            for eid in edges:
                acc[eid] = acc.get(eid, ZERO) + w
        return acc

    @property
    def path_weight(self) -> Fraction:
        return sum((w for _, w in self.paths), ZERO)


@dataclass(frozen=True)
class TightSet:
    """The inclusion-largest minimum cut set ``U`` around ``target``."""

    vertices: frozenset[str]
    value: Fraction
    target: str


class _Network:
    """Residual network with paired arcs (``a ^ 1`` is the reverse of ``a``)."""

    def __init__(self, n: int):
        self.n = n
        self.head: list[int] = []
        self.cap: list[int] = []
        self.adj: list[list[int]] = [[] for _ in range(n)]

    def add(self, u: int, v: int, cap: int) -> int:
        a = len(self.head)
        self.head += [v, u]
        self.cap += [cap, 0]
        self.adj[u].append(a)
        self.adj[v].append(a + 1)
        return a

    def _levels(self, s: int) -> list[int]:
        level = [-1] * self.n
        level[s] = 0
        queue = deque([s])
        while queue:
            u = queue.popleft()
            for a in self.adj[u]:
                v = self.head[a]
                if self.cap[a] > 0 and level[v] < 0:
                    level[v] = level[u] + 1
                    queue.append(v)
        return level

    def _push(self, u, t, limit, level, it):
        if u == t:
            return limit
        adj = self.adj[u]
        while it[u] < len(adj):
            a = adj[it[u]]
            v = self.head[a]
            if self.cap[a] > 0 and level[v] == level[u] + 1:
                d = self._push(v, t, min(limit, self.cap[a]), level, it)
                if d:
                    self.cap[a] -= d
                    self.cap[a ^ 1] += d
                    return d
            it[u] += 1
        return 0

    def max_flow(self, s: int, t: int) -> int:
        total = 0
        bound = sum(self.cap[a] for a in self.adj[s]) + 1
        while True:
            level = self._levels(s)
            if level[t] < 0:
                return total
            it = [0] * self.n
            while True:
                d = self._push(s, t, bound, level, it)
                if not d:
                    break
                total += d


def _scaled(D: RootedDigraph, c: Mapping[int, Fraction]) -> tuple[dict[int, int], int]:
    values = {}
    for e in D.edges:
        x = Fraction(c.get(e.id, 0))
        if x < 0:
            raise FlameError(f"negative capacity on edge {e.id}")
        values[e.id] = x
    scale = math.lcm(*(x.denominator for x in values.values())) if values else 1
    return {eid: int(x * scale) for eid, x in values.items()}, scale


def find_cycle(D: RootedDigraph, x: Mapping[int, object],
               within: Iterable[str] | None = None) -> list[int] | None:
    """Edge ids of some directed cycle in the positive support of ``x``."""
    allowed = set(D.vertices if within is None else within)
    out: dict[str, list[tuple[int, str]]] = {v: [] for v in allowed}
    for e in D.edges:
        if x.get(e.id, 0) > 0 and e.tail in allowed and e.head in allowed:
            out[e.tail].append((e.id, e.head))
    done: set[str] = set()
    for start in D.vertices:
        if start in done or start not in allowed:
            continue
        # iterative DFS; stack holds (vertex, edge used to enter, iterator)
        pos = {start: 0}
        path_edges: list[int] = []
        stack = [(start, iter(out[start]))]
        while stack:
            u, it = stack[-1]
            for eid, w in it:
                if w in pos:
                    return path_edges[pos[w]:] + [eid]
                if w not in done:
                    pos[w] = len(stack)
                    path_edges.append(eid)
                    stack.append((w, iter(out[w])))
                    break
            else:
                stack.pop()
                del pos[u]
                done.add(u)
                if path_edges:
                    path_edges.pop()
    return None


def _cancel_cycles(D: RootedDigraph, x: dict[int, int]) -> None:
    while (cycle := find_cycle(D, x)) is not None:
        w = min(x[eid] for eid in cycle)
        for eid in cycle:
            x[eid] -= w


def _solve(D: RootedDigraph, c: Mapping[int, Fraction], sink: str
           ) -> tuple[dict[int, Fraction], Fraction]:
    D.check_vertex(sink)
    ints, scale = _scaled(D, c)
    idx = D.index
    net = _Network(len(D.vertices))
    arc_of = {e.id: net.add(idx[e.tail], idx[e.head], ints[e.id])
              for e in D.edges}
    amount = net.max_flow(idx[D.root], idx[sink])
    x = {eid: ints[eid] - net.cap[a] for eid, a in arc_of.items()}
    _cancel_cycles(D, x)
    return ({eid: Fraction(v, scale) for eid, v in x.items()},
            Fraction(amount, scale))


def max_flow(D: RootedDigraph, c: Mapping[int, Fraction], sink: str) -> Flow:
    """Maximum root-to-``sink`` flow under ``c``, with cycles cancelled.

    Integral capacities yield an integral flow.
    """
    if sink == D.root:
        raise PreconditionError("sink must differ from the root")
    values, amount = _solve(D, c, sink)
    return Flow(sink, values, amount)


def local_connectivity(D: RootedDigraph, c: Mapping[int, Fraction],
                       v: str) -> Fraction:
    """Largest amount of a root-to-``v`` flow bounded by ``c``."""
    return max_flow(D, c, v).amount


def all_connectivities(D: RootedDigraph,
                       c: Mapping[int, Fraction]) -> dict[str, Fraction]:
    return {v: local_connectivity(D, c, v) for v in D.non_root}


def _residual_reach(D: RootedDigraph, c: Mapping[int, Fraction],
                    x: Mapping[int, Fraction]) -> set[str]:
    seen = {D.root}
    queue = deque([D.root])
    fwd: dict[str, list[tuple[int, str]]] = {v: [] for v in D.vertices}
    bwd: dict[str, list[tuple[int, str]]] = {v: [] for v in D.vertices}
    for e in D.edges:
        fwd[e.tail].append((e.id, e.head))
        bwd[e.head].append((e.id, e.tail))
    while queue:
        u = queue.popleft()
        for eid, w in fwd[u]:
            if w not in seen and x[eid] < c.get(eid, 0):
                seen.add(w)
                queue.append(w)
        for eid, w in bwd[u]:
            if w not in seen and x[eid] > 0:
                seen.add(w)
                queue.append(w)
    return seen


def min_cut_maximal(D: RootedDigraph, c: Mapping[int, Fraction],
                    v: str) -> TightSet:
    """Largest ``U`` with ``v`` in ``U``, root outside, and in-capacity
    equal to the connectivity of ``v``.

    It is the complement of the residual-reachable set of the root, which is
    the same for every maximum flow.
    """
    flow = max_flow(D, c, v)
    reach = _residual_reach(D, c, flow.values)
    U = frozenset(D.vertices) - reach
    value = in_capacity(D, c, U)
    assert value == flow.amount, "residual cut disagrees with flow amount"
    return TightSet(U, value, v)


def check_flow(D: RootedDigraph, values: Mapping[int, Fraction],
               sink: str) -> Fraction:
    """Validate a root-to-``sink`` flow and return its amount."""
    D.check_vertex(sink)
    for eid, val in values.items():
        D.edge(eid)
        if val < 0:
            raise FlameError(f"negative flow on edge {eid}")
    for u in D.vertices:
        inflow = in_capacity(D, values, u)
        outflow = out_capacity(D, values, u)
        if u == D.root and inflow:
            raise FlameError("flow enters the root")
        if u == sink and outflow:
            raise FlameError("flow leaves the sink")
        if u not in (D.root, sink) and inflow != outflow:
            raise FlameError(f"conservation violated at {u!r}")
    return out_capacity(D, values, D.root)


def decompose(D: RootedDigraph, x: Flow) -> PathDecomposition:
    """Greedy peeling into weighted root-to-sink paths and cycles.

    Walk forward from the root along positive edges.  A repeated vertex
    closes a cycle; reaching the sink closes a path.  The bottleneck weight
    is subtracted, zeroing at least one edge per piece.
    """
    amount = check_flow(D, x.values, x.sink)
    if amount != x.amount:
        raise FlameError(f"flow amount is {amount}, not {x.amount}")
    rest = {e.id: Fraction(x.values.get(e.id, 0)) for e in D.edges}
    out: dict[str, list[int]] = {v: [] for v in D.vertices}
    for e in D.edges:
        out[e.tail].append(e.id)
    paths, cycles = [], []

    def next_edge(u):
        for eid in out[u]:
            if rest[eid] > 0:
                return eid
        return None

    def peel(edges):
        w = min(rest[eid] for eid in edges)
        for eid in edges:
            rest[eid] -= w
        return tuple(edges), w

    while next_edge(D.root) is not None:
        walk, pos, u = [], {D.root: 0}, D.root
        while u != x.sink:
            eid = next_edge(u)
            # conservation guarantees an exit from every inner vertex
            assert eid is not None
            walk.append(eid)
            u = D.edge(eid).head
            if u in pos:
                cycles.append(peel(walk[pos[u]:]))
                break
            pos[u] = len(walk)
        else:
            paths.append(peel(walk))
    while (cycle := find_cycle(D, rest)) is not None:
        cycles.append(peel(cycle))
    return PathDecomposition(tuple(paths), tuple(cycles))
