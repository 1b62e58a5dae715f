# Peeling a capacitated digraph down to a flame.
#
# A flame keeps every flow-connectivity from the root while the capacity
# entering each vertex is exactly that connectivity: nothing is spare.

from fractions import Fraction

from flames import (all_connectivities, extract_flame, in_capacity,
                    parse_graph, verify)

# A small graph with fractional capacities.  The direct arc r->v and the
# detour through a together give v a connectivity of 1/2 + 1/3.
D, c = parse_graph("""
root r
arc r a 1/2
arc a v 1
arc r v 1/3
""")
print("connectivities:", all_connectivities(D, c))

# Visit a, then v.  At each vertex the in-capacities are replaced by the
# values of a maximum flow into that vertex.
f, trace = extract_flame(D, c, order=["a", "v"])
for step in trace.steps:
    print(f"step {step.sink}: flow {step.amount}, changed {step.changed}")

# The arc a->v had capacity 1 but can only ever carry 1/2.
print("flame:", {e: str(x) for e, x in f.items()})
print("in-capacity at v:", in_capacity(D, f, "v"))

# verify() recomputes every connectivity from scratch.
report = verify(D, c, f)
print(report.to_dict())
assert report.ok

# Any vertex order works; outputs may differ, the guarantees do not.
D, c = parse_graph("""
root r
arc r a 2
arc r b 1
arc a b 2
arc b a 1/2
arc a v 3/2
arc b v 2
arc v a 1
""")
for order in (["a", "b", "v"], ["v", "b", "a"]):
    f, _ = extract_flame(D, c, order)
    print(order, {e: str(x) for e, x in f.items()}, verify(D, c, f).ok)
