"""Independence and coloop tests for the gammoid on the in-edges of a
vertex, and membership in its fractional analogue (the polygammoid).

The gammoid at ``v`` consists of the sets of last edges of systems of
edge-disjoint root-to-``v`` paths.  All three tests reduce to one or two
max-flow calls.
"""

from __future__ import annotations

from fractions import Fraction
from typing import Iterable, Mapping

from .digraph import RootedDigraph, capacity, unit_capacity
from .errors import FlameError
from .flow import local_connectivity


def _in_edge_ids(D: RootedDigraph, v: str) -> set[int]:
    return {e.id for e in D.edges if e.head == v}


def is_independent(D: RootedDigraph, v: str, edges: Iterable[int]) -> bool:
    """Whether ``edges`` (all entering ``v``) are the last edges of some
    system of edge-disjoint root-to-``v`` paths.

    Deleting the other in-edges of ``v`` leaves ``|edges|`` as an upper
    bound on the connectivity; it is attained exactly when the set is
    independent.
    """
    D.check_vertex(v)
    chosen = set(edges)
    incoming = _in_edge_ids(D, v)
    if not chosen <= incoming:
        raise FlameError(f"edges {sorted(chosen - incoming)} do not enter {v!r}")
    c = unit_capacity(D, (e.id for e in D.edges
                          if e.head != v or e.id in chosen))
    return local_connectivity(D, c, v) == len(chosen)


def is_coloop(D: RootedDigraph, v: str, eid: int) -> bool:
    """Whether ``eid`` lies in every basis of the gammoid at ``v``.

    Uses the rank-drop characterization: deleting a coloop lowers the
    connectivity by exactly one.
    """
    D.check_vertex(v)
    if D.edge(eid).head != v:
        raise FlameError(f"edge {eid} does not enter {v!r}")
    full = local_connectivity(D, unit_capacity(D), v)
    without = unit_capacity(D, (e.id for e in D.edges if e.id != eid))
    return local_connectivity(D, without, v) == full - 1


def polygammoid_member(D: RootedDigraph, c: Mapping[int, Fraction], v: str,
                       s: Mapping[int, object]) -> bool:
    """Whether some root-to-``v`` flow ``x <= c`` restricts to ``s`` on the
    in-edges of ``v`` (missing in-edges count as zero)."""
    D.check_vertex(v)
    incoming = _in_edge_ids(D, v)
    s = {eid: Fraction(val) for eid, val in s.items()}
    if not set(s) <= incoming:
        raise FlameError(f"edges {sorted(set(s) - incoming)} do not enter {v!r}")
    if any(val < 0 for val in s.values()):
        raise FlameError("negative entry in in-edge vector")
    c = capacity(D, c)
    if any(s[eid] > c[eid] for eid in s):
        return False
    # cap in-edges at s: a flow of amount sum(s) must then saturate each one
    bounded = {eid: (s.get(eid, Fraction(0)) if eid in incoming else x)
               for eid, x in c.items()}
    return local_connectivity(D, bounded, v) == sum(s.values(), Fraction(0))
