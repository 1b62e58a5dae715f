"""Rooted multidigraphs and exact capacity vectors.

A capacity vector is a plain ``dict`` mapping edge ids to nonnegative
:class:`~fractions.Fraction` values; a missing key means zero.  The same
representation doubles as a subgraph (its positive support).
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from functools import cached_property
from typing import Iterable, Mapping, NamedTuple

from .errors import FlameError

Capacity = dict[int, Fraction]
VertexSet = frozenset[str]

INTEGRAL = "integral"
FRACTIONAL = "fractional"
MODES = (INTEGRAL, FRACTIONAL)


class Edge(NamedTuple):
    id: int
    tail: str
    head: str


@dataclass(frozen=True)
class RootedDigraph:
    """Finite directed multigraph with a designated root.

    Parallel edges are distinct elements, told apart by their ids.  Loops
    are rejected on construction.  In-edges of the root are tolerated here
    and dropped by :func:`normalize`.
    """

    vertices: tuple[str, ...]
    root: str
    edges: tuple[Edge, ...]

    def __post_init__(self):
        object.__setattr__(self, "vertices", tuple(self.vertices))
        object.__setattr__(
            self, "edges", tuple(Edge(*e) for e in self.edges))
        if len(set(self.vertices)) != len(self.vertices):
            raise FlameError("duplicate vertex ids")
        if self.root not in self.vertices:
            raise FlameError(f"root {self.root!r} is not a vertex")
        known = set(self.vertices)
        seen: set[int] = set()
        for e in self.edges:
            if e.id in seen:
                raise FlameError(f"duplicate edge id {e.id}")
            seen.add(e.id)
            if e.tail not in known or e.head not in known:
                raise FlameError(f"edge {e.id} has an unknown endpoint")
            if e.tail == e.head:
                raise FlameError(f"edge {e.id} is a loop at {e.tail!r}")

    @classmethod
    def from_arcs(cls, root: str, arcs: Iterable[tuple[str, str]],
                  vertices: Iterable[str] = ()) -> RootedDigraph:
        """Build a digraph numbering ``arcs`` 0, 1, 2, ... in order.

        Vertices are ordered root first, then ``vertices``, then by first
        appearance in ``arcs``.
        """
        arcs = list(arcs)
        order = dict.fromkeys([root, *vertices])
        for t, h in arcs:
            order.setdefault(t)
            order.setdefault(h)
        edges = [Edge(i, t, h) for i, (t, h) in enumerate(arcs)]
        return cls(tuple(order), root, tuple(edges))

    @cached_property
    def index(self) -> dict[str, int]:
        """Dense index of each vertex (root is whatever position it holds)."""
        return {v: i for i, v in enumerate(self.vertices)}

    @cached_property
    def _by_id(self) -> dict[int, Edge]:
        return {e.id: e for e in self.edges}

    @property
    def non_root(self) -> tuple[str, ...]:
        return tuple(v for v in self.vertices if v != self.root)

    @property
    def edge_ids(self) -> tuple[int, ...]:
        return tuple(e.id for e in self.edges)

    def edge(self, eid: int) -> Edge:
        try:
            return self._by_id[eid]
        except KeyError:
            raise FlameError(f"unknown edge id {eid}") from None

    def has_edge(self, eid: int) -> bool:
        return eid in self._by_id

    def has_vertex(self, v: str) -> bool:
        return v in self.index

    def in_edges(self, U: str | Iterable[str]) -> list[Edge]:
        """Edges with head in ``U`` and tail outside it."""
        U = _as_set(U)
        return [e for e in self.edges if e.head in U and e.tail not in U]

    def out_edges(self, U: str | Iterable[str]) -> list[Edge]:
        """Edges with tail in ``U`` and head outside it."""
        U = _as_set(U)
        return [e for e in self.edges if e.tail in U and e.head not in U]

    def subgraph(self, edge_ids: Iterable[int]) -> RootedDigraph:
        """Spanning subgraph keeping only ``edge_ids``."""
        keep = set(edge_ids)
        for eid in keep:
            self.edge(eid)
        return RootedDigraph(self.vertices, self.root,
                             tuple(e for e in self.edges if e.id in keep))

    def check_vertex(self, v: str, *, allow_root: bool = False) -> None:
        if v not in self.index:
            raise FlameError(f"unknown vertex {v!r}")
        if v == self.root and not allow_root:
            raise FlameError("vertex must differ from the root")


def _as_set(U: str | Iterable[str]) -> set[str]:
    if isinstance(U, str):
        return {U}
    return set(U)


def as_fraction(value) -> Fraction:
    """Exact conversion; floats are refused to keep arithmetic exact."""
    if isinstance(value, float):
        raise TypeError("floats are not accepted; use Fraction or str")
    return Fraction(value)


def capacity(D: RootedDigraph, values: Mapping[int, object] | None = None,
             default=0) -> Capacity:
    """Validated dense capacity vector over all edges of ``D``.

    Edges missing from ``values`` get ``default``.
    """
    values = dict(values or {})
    out: Capacity = {}
    for eid in values:
        if not D.has_edge(eid):
            raise FlameError(f"capacity given for unknown edge id {eid}")
    for e in D.edges:
        x = as_fraction(values.get(e.id, default))
        if x < 0:
            raise FlameError(f"negative capacity {x} on edge {e.id}")
        out[e.id] = x
    return out


def unit_capacity(D: RootedDigraph,
                  edge_ids: Iterable[int] | None = None) -> Capacity:
    """Indicator vector of ``edge_ids`` (all edges when omitted)."""
    if edge_ids is None:
        return {e.id: Fraction(1) for e in D.edges}
    keep = set(edge_ids)
    return {e.id: Fraction(int(e.id in keep)) for e in D.edges}


def unit_vector(D: RootedDigraph, eid: int) -> Capacity:
    D.edge(eid)
    return {e.id: Fraction(int(e.id == eid)) for e in D.edges}


def support(c: Mapping[int, Fraction]) -> frozenset[int]:
    return frozenset(eid for eid, x in c.items() if x > 0)


def is_integral(c: Mapping[int, Fraction]) -> bool:
    return all(Fraction(x).denominator == 1 for x in c.values())


def in_capacity(D: RootedDigraph, c: Mapping[int, Fraction],
                U: str | Iterable[str]) -> Fraction:
    """Total capacity entering ``U``."""
    return sum((c.get(e.id, Fraction(0)) for e in D.in_edges(U)), Fraction(0))


def out_capacity(D: RootedDigraph, c: Mapping[int, Fraction],
                 U: str | Iterable[str]) -> Fraction:
    """Total capacity leaving ``U``."""
    return sum((c.get(e.id, Fraction(0)) for e in D.out_edges(U)),
               Fraction(0))


class Normalized(NamedTuple):
    graph: RootedDigraph
    capacity: Capacity
    provenance: dict[int, tuple[int, ...]]
    warnings: list[str]


def normalize(D: RootedDigraph, c: Mapping[int, Fraction],
              mode: str = INTEGRAL) -> Normalized:
    """Drop in-edges of the root and, in fractional mode, merge parallels.

    A merged bundle keeps the smallest id of its members and carries the sum
    of their capacities.  ``provenance`` maps every surviving id to the
    original ids it stands for.
    """
    if mode not in MODES:
        raise FlameError(f"unknown mode {mode!r}")
    c = capacity(D, c)
    warnings: list[str] = []
    kept: list[Edge] = []
    for e in D.edges:
        if e.tail == e.head:
            raise FlameError(f"edge {e.id} is a loop")
        if e.head == D.root:
            warnings.append(
                f"dropped edge {e.id} ({e.tail} -> {e.head}) entering the root")
            continue
        kept.append(e)

    if mode == INTEGRAL:
        edges = kept
        cap = {e.id: c[e.id] for e in kept}
        prov = {e.id: (e.id,) for e in kept}
    else:
        bundles: dict[tuple[str, str], list[Edge]] = {}
        for e in kept:
            bundles.setdefault((e.tail, e.head), []).append(e)
        edges, cap, prov = [], {}, {}
        for (t, h), group in bundles.items():
            rep = min(x.id for x in group)
            edges.append(Edge(rep, t, h))
            cap[rep] = sum((c[x.id] for x in group), Fraction(0))
            prov[rep] = tuple(sorted(x.id for x in group))
            if len(group) > 1:
                warnings.append(f"merged parallel edges {prov[rep]} "
                                f"({t} -> {h}) into edge {rep}")
        edges.sort(key=lambda e: e.id)
    graph = RootedDigraph(D.vertices, D.root, tuple(edges))
    return Normalized(graph, cap, prov, warnings)


def contract_set(D: RootedDigraph, c: Mapping[int, Fraction],
                 U: Iterable[str], into: str) -> tuple[RootedDigraph, Capacity]:
    """Identify all vertices of ``U`` with ``into``, deleting inner edges."""
    U = frozenset(U)
    if into not in U:
        raise FlameError("contraction target must belong to the set")
    if D.root in U:
        raise FlameError("cannot contract a set containing the root")
    for v in U:
        D.check_vertex(v)

    def image(x: str) -> str:
        return into if x in U else x

    edges = tuple(Edge(e.id, image(e.tail), image(e.head)) for e in D.edges
                  if not (e.tail in U and e.head in U))
    vertices = tuple(v for v in D.vertices if v not in U or v == into)
    cap = {e.id: Fraction(c.get(e.id, 0)) for e in edges}
    return RootedDigraph(vertices, D.root, edges), cap
