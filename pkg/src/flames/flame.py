"""Flames: capacity vectors whose in-capacity at every non-root vertex
equals the flow-connectivity from the root.

:func:`extract_flame` peels an arbitrary capacity vector down to a flame
with the same connectivities, one vertex at a time: replace the capacities
entering the current vertex by the values of a maximum flow into it.
"""

from __future__ import annotations

from dataclasses import dataclass, field
from fractions import Fraction
from typing import Mapping, Sequence

from .digraph import (Capacity, RootedDigraph, capacity, in_capacity,
                      is_integral, unit_capacity)
from .errors import PreconditionError
from .flow import all_connectivities, max_flow


@dataclass(frozen=True)
class VertexRow:
    reference: Fraction | None   # connectivity under the original capacity
    connectivity: Fraction       # connectivity under f
    in_capacity: Fraction        # total f entering the vertex


@dataclass(frozen=True)
class FlameReport:
    """Per-vertex comparison table; every flag is derived from it."""

    rows: dict[str, VertexRow]
    flame: Capacity
    reference: Capacity | None = None

    @property
    def is_flame(self) -> bool:
        return all(r.connectivity == r.in_capacity for r in self.rows.values())

    @property
    def preserves(self) -> bool | None:
        if self.reference is None:
            return None
        return all(r.connectivity == r.reference for r in self.rows.values())

    @property
    def within_capacity(self) -> bool | None:
        if self.reference is None:
            return None
        return all(x <= self.reference.get(eid, 0)
                   for eid, x in self.flame.items())

    @property
    def integral(self) -> bool:
        return is_integral(self.flame)

    @property
    def ok(self) -> bool:
        """All applicable flags hold."""
        return (self.is_flame and self.preserves is not False
                and self.within_capacity is not False)

    def to_dict(self) -> dict:
        fmt = lambda x: None if x is None else str(x)
        return {
            "vertices": {
                v: {"lambda_c": fmt(r.reference), "lambda_f": fmt(r.connectivity),
                    "rho_f": fmt(r.in_capacity)}
                for v, r in self.rows.items()},
            "is_flame": self.is_flame,
            "preserves": self.preserves,
            "within_capacity": self.within_capacity,
            "integral": self.integral,
        }


def _report(D: RootedDigraph, f: Capacity, c: Capacity | None) -> FlameReport:
    lam_f = all_connectivities(D, f)
    lam_c = all_connectivities(D, c) if c is not None else {}
    rows = {v: VertexRow(lam_c.get(v), lam_f[v], in_capacity(D, f, v))
            for v in D.non_root}
    return FlameReport(rows, f, c)


def is_flame(D: RootedDigraph, f: Mapping[int, object] | None = None
             ) -> tuple[bool, FlameReport]:
    """Flame test; ``f`` defaults to unit capacity on every edge."""
    f = unit_capacity(D) if f is None else capacity(D, f)
    report = _report(D, f, None)
    return report.is_flame, report


def is_flame_fast(D: RootedDigraph, f: Mapping[int, Fraction]) -> bool:
    """Flame test that stops at the first failing vertex."""
    for v in D.non_root:
        rho = in_capacity(D, f, v)
        if rho and max_flow(D, f, v).amount != rho:
            return False
    return True


def verify(D: RootedDigraph, c: Mapping[int, object],
           f: Mapping[int, object]) -> FlameReport:
    """Recompute every connectivity from scratch and compare ``f`` to ``c``."""
    return _report(D, capacity(D, f), capacity(D, c))


@dataclass(frozen=True)
class Step:
    sink: str
    amount: Fraction
    changed: dict[int, tuple[Fraction, Fraction]]


@dataclass(frozen=True)
class ExtractionTrace:
    """Vertex order, per-step flow amounts, and every intermediate vector
    (``snapshots[0]`` is the input, ``snapshots[-1]`` the result)."""

    order: tuple[str, ...]
    steps: tuple[Step, ...]
    snapshots: tuple[Capacity, ...] = field(repr=False)

    def to_dict(self) -> dict:
        return {
            "order": list(self.order),
            "steps": [
                {"sink": s.sink, "amount": str(s.amount),
                 "changed": {str(eid): [str(a), str(b)]
                             for eid, (a, b) in s.changed.items()}}
                for s in self.steps],
        }


def _check_order(D: RootedDigraph, order: Sequence[str] | None) -> tuple[str, ...]:
    if order is None:
        return D.non_root
    order = tuple(order)
    if sorted(order) != sorted(D.non_root):
        raise PreconditionError(
            "order must list every non-root vertex exactly once")
    return order


def trim_step(D: RootedDigraph, c: Capacity, v: str) -> tuple[Capacity, Step]:
    flow = max_flow(D, c, v)
    f = dict(c)
    changed = {}
    for e in D.edges:
        if e.head == v and flow.values[e.id] != c[e.id]:
            changed[e.id] = (c[e.id], flow.values[e.id])
            f[e.id] = flow.values[e.id]
    return f, Step(v, flow.amount, changed)


def trim_unused(D: RootedDigraph, c: Mapping[int, object], v: str) -> Capacity:
    """Lower the capacities entering ``v`` to a maximum flow into ``v``.

    No connectivity from the root changes.
    """
    D.check_vertex(v)
    return trim_step(D, capacity(D, c), v)[0]


def extract_flame(D: RootedDigraph, c: Mapping[int, object],
                  order: Sequence[str] | None = None
                  ) -> tuple[Capacity, ExtractionTrace]:
    """Flame ``f <= c`` with the same connectivities as ``c``.

    Each non-root vertex is trimmed once, in ``order`` (default: vertex
    order of ``D``).  Integral input gives integral output.
    """
    order = _check_order(D, order)
    f = capacity(D, c)
    snapshots, steps = [f], []
    for v in order:
        f, step = trim_step(D, f, v)
        snapshots.append(f)
        steps.append(step)
    return f, ExtractionTrace(order, tuple(steps), tuple(snapshots))


def extract_flame_integral(D: RootedDigraph,
                           c: Mapping[int, object] | None = None,
                           order: Sequence[str] | None = None
                           ) -> tuple[list[int], FlameReport]:
    """Integral extraction returning the kept edges as a multiset.

    An edge appears ``f(e)`` times; with unit capacities this is the edge
    set of a spanning subgraph with as many edges as the sum of all local
    edge-connectivities.
    """
    c = unit_capacity(D) if c is None else capacity(D, c)
    if not is_integral(c):
        raise PreconditionError("capacities must be integral")
    f, _ = extract_flame(D, c, order)
    kept = sorted(eid for eid, x in f.items() for _ in range(int(x)))
    return kept, verify(D, c, f)


def connectivity_sum(D: RootedDigraph, c: Mapping[int, Fraction] | None = None
                     ) -> Fraction:
    c = unit_capacity(D) if c is None else c
    return sum(all_connectivities(D, c).values(), Fraction(0))

