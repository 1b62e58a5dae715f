# Unit capacities: flames as edge sets, and the greedoid they form.

from pathlib import Path

from flames import (PreconditionError, build_maximal_flame,
                    check_greedoid_axioms, extract_flame_integral,
                    find_augmenting_edge, read_graph)
from flames.greedoid import flame_family

FIXTURES = Path(__file__).resolve().parent.parent / "fixtures"

# r->a, a->v, a->b, b->v, r->v : v has three in-edges but connectivity 2.
D, c = read_graph(FIXTURES / "fx2.graph")

# Every edge set spanning a flame.  Note that the family is not closed
# under taking subsets ({a->v} alone is not a flame, since a is unreachable).
for F in flame_family(D):
    print(sorted(F))

report = check_greedoid_axioms(D)
print(report.to_dict())

# Growing a flame one edge at a time: each added edge enters the largest
# tight set of a vertex that is still short of its connectivity.
H = set()
while True:
    try:
        step = find_augmenting_edge(D, H, "v")
    except PreconditionError as exc:
        print("stop:", exc)
        break
    print("add edge", step.edge, "entering", sorted(step.tight_set.vertices))
    H.add(step.edge)

H, steps = build_maximal_flame(D)
print("maximal flame:", sorted(H), "after", len(steps), "steps")

# The peeling algorithm reaches the same size: the sum of connectivities.
kept, report = extract_flame_integral(D, c)
print("peeled:", kept, report.ok)
