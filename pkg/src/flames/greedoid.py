"""The flame greedoid: augmentation steps and an exhaustive axiom check.

In the unit-capacity (multigraph) setting, a flame ``H`` whose connectivity
at some ``u`` falls short of the host graph can always be grown by one edge:
take the largest tight set ``U`` around ``u`` in ``H`` and add any host edge
entering ``U`` that ``H`` lacks.  The fractional counterpart adds a positive
amount ``eps`` of capacity to one edge.
"""

from __future__ import annotations

import os
from dataclasses import dataclass
from fractions import Fraction
from itertools import combinations
from typing import Iterable, Mapping

from .digraph import (Capacity, RootedDigraph, capacity, contract_set,
                      in_capacity, unit_capacity)
from .errors import PreconditionError, SizeBoundError
from .flame import is_flame_fast
from .flow import TightSet, all_connectivities, local_connectivity, min_cut_maximal

DEFAULT_MAX_EDGES = int(os.environ.get("FLAMES_MAX_EDGES", 12))


@dataclass(frozen=True)
class AugmentationStep:
    edge: int
    tight_set: TightSet
    deficit_vertex: str
    epsilon: Fraction | None = None   # fractional steps only

    def to_dict(self) -> dict:
        return {
            "edge": self.edge,
            "epsilon": None if self.epsilon is None else str(self.epsilon),
            "deficit_vertex": self.deficit_vertex,
            "tight_set": sorted(self.tight_set.vertices),
            "tight_value": str(self.tight_set.value),
        }


def _edge_set(D: RootedDigraph, H: Iterable[int]) -> frozenset[int]:
    H = frozenset(H)
    for eid in H:
        D.edge(eid)
    return H


def find_augmenting_edge(D: RootedDigraph, H: Iterable[int], u: str
                         ) -> AugmentationStep:
    """Edge of ``D`` whose addition keeps the flame ``H`` a flame.

    The returned edge is the lowest-id edge of ``D`` outside ``H`` entering
    the largest tight set of ``u`` in ``H``; it is a coloop of the gammoid
    at its head once added.
    """
    H = _edge_set(D, H)
    D.check_vertex(u)
    cap_H = unit_capacity(D, H)
    if not is_flame_fast(D, cap_H):
        raise PreconditionError("H is not a flame")
    deficit = local_connectivity(D, unit_capacity(D), u)
    tight = min_cut_maximal(D, cap_H, u)
    if tight.value >= deficit:
        raise PreconditionError(f"no deficit at {u!r}")
    entering = [e.id for e in D.in_edges(tight.vertices) if e.id not in H]
    return AugmentationStep(min(entering), tight, u)


def build_maximal_flame(D: RootedDigraph
                        ) -> tuple[frozenset[int], list[AugmentationStep]]:
    """Grow a flame from the empty set until every connectivity of ``D`` is
    attained, always repairing the lowest-index deficit vertex."""
    target = all_connectivities(D, unit_capacity(D))
    H: frozenset[int] = frozenset()
    steps = []
    while True:
        current = all_connectivities(D, unit_capacity(D, H))
        short = [v for v in D.non_root if current[v] < target[v]]
        if not short:
            return H, steps
        step = find_augmenting_edge(D, H, short[0])
        steps.append(step)
        H = H | {step.edge}


def superset_gap(D: RootedDigraph, y: Mapping[int, Fraction],
                 U: frozenset[str], u: str) -> Fraction | None:
    """``min rho_y(W) - rho_y(U)`` over ``U < W <= V - root``.

    For each vertex ``w`` outside ``U`` the cheapest ``W`` containing
    ``U + w`` is a minimum cut of the graph with ``U + w`` contracted.
    Returns None when ``U`` already holds every non-root vertex.
    """
    base = in_capacity(D, y, U)
    best = None
    for w in D.non_root:
        if w in U:
            continue
        Dc, yc = contract_set(D, y, U | {w}, u)
        value = local_connectivity(Dc, yc, u) - base
        best = value if best is None else min(best, value)
    return best


def fractional_augment(D: RootedDigraph, c: Mapping[int, object],
                       y: Mapping[int, object], u: str
                       ) -> tuple[AugmentationStep, Capacity]:
    """One certified step ``y + eps * chi_e`` toward ``c``.

    ``y <= c`` must be a fractional flame whose connectivity at ``u`` is
    below that of ``c``.  The connectivity at the head of ``e`` rises by
    exactly ``eps`` and the result is again a fractional flame.
    """
    D.check_vertex(u)
    c = capacity(D, c)
    y = capacity(D, y)
    if any(y[eid] > c[eid] for eid in c):
        raise PreconditionError("y exceeds c")
    if not is_flame_fast(D, y):
        raise PreconditionError("y is not a fractional flame")
    tight = min_cut_maximal(D, y, u)
    if tight.value >= local_connectivity(D, c, u):
        raise PreconditionError(f"no deficit at {u!r}")
    slack = [e.id for e in D.in_edges(tight.vertices) if c[e.id] > y[e.id]]
    eid = min(slack)
    eps = c[eid] - y[eid]
    gap = superset_gap(D, y, tight.vertices, u)
    if gap is not None:
        eps = min(eps, gap)
    grown = dict(y)
    grown[eid] += eps
    return AugmentationStep(eid, tight, u, eps), grown


@dataclass(frozen=True)
class GreedoidCheckReport:
    ground_size: int
    family_size: int
    contains_empty: bool
    augmentation: bool
    counterexample: tuple[tuple[int, ...], tuple[int, ...]] | None
    accessible: bool
    downward_closed: bool
    basis_sizes: tuple[int, ...]
    connectivity_sum: Fraction

    @property
    def is_greedoid(self) -> bool:
        return self.contains_empty and self.augmentation

    @property
    def bases_equicardinal(self) -> bool:
        return len(self.basis_sizes) == 1

    def to_dict(self) -> dict:
        return {
            "ground_size": self.ground_size,
            "family_size": self.family_size,
            "contains_empty": self.contains_empty,
            "augmentation": self.augmentation,
            "counterexample": (None if self.counterexample is None
                               else [list(s) for s in self.counterexample]),
            "accessible": self.accessible,
            "downward_closed": self.downward_closed,
            "basis_sizes": list(self.basis_sizes),
            "connectivity_sum": str(self.connectivity_sum),
            "is_greedoid": self.is_greedoid,
        }


def flame_family(D: RootedDigraph, max_edges: int = DEFAULT_MAX_EDGES
                 ) -> list[frozenset[int]]:
    """All edge sets of ``D`` spanning a flame, smallest first."""
    ids = D.edge_ids
    if len(ids) > max_edges:
        raise SizeBoundError("edge count", len(ids), max_edges)
    family = []
    for k in range(len(ids) + 1):
        for subset in combinations(ids, k):
            if is_flame_fast(D, unit_capacity(D, subset)):
                family.append(frozenset(subset))
    return family


def check_greedoid_axioms(D: RootedDigraph,
                          max_edges: int = DEFAULT_MAX_EDGES
                          ) -> GreedoidCheckReport:
    """Exhaustively test the greedoid axioms on the flame family of ``D``."""
    family = flame_family(D, max_edges)
    bit = {eid: 1 << i for i, eid in enumerate(D.edge_ids)}
    masks = [sum(bit[e] for e in F) for F in family]
    members = set(masks)
    full = (1 << len(bit)) - 1
    # addable[F]: edges e outside F with F + e in the family
    addable = {}
    for F in masks:
        add = 0
        rest = full & ~F
        while rest:
            low = rest & -rest
            if F | low in members:
                add |= low
            rest ^= low
        addable[F] = add

    counterexample = None
    by_size = sorted(masks, key=lambda m: m.bit_count())
    for F in by_size:
        for G in by_size:
            if G.bit_count() > F.bit_count() and not (G & ~F & addable[F]):
                counterexample = (F, G)
                break
        if counterexample:
            break

    def removable(F):
        rest = F
        while rest:
            low = rest & -rest
            yield F ^ low
            rest ^= low

    accessible = all(F == 0 or any(G in members for G in removable(F))
                     for F in masks)
    downward_closed = all(all(G in members for G in removable(F))
                          for F in masks)
    bases = {F.bit_count() for F in masks if addable[F] == 0}

    def decode(mask):
        return tuple(eid for eid, b in bit.items() if mask & b)

    return GreedoidCheckReport(
        ground_size=len(bit),
        family_size=len(masks),
        contains_empty=0 in members,
        augmentation=counterexample is None,
        counterexample=(None if counterexample is None
                        else (decode(counterexample[0]),
                              decode(counterexample[1]))),
        accessible=accessible,
        downward_closed=downward_closed,
        basis_sizes=tuple(sorted(bases)),
        connectivity_sum=sum(all_connectivities(D, unit_capacity(D)).values(),
                             Fraction(0)),
    )
