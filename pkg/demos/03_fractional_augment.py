# One fractional augmentation step: raise a single edge of a fractional
# flame y by eps, never exceeding the host capacity c, keeping y a flame.

from fractions import Fraction

from flames import (all_connectivities, fractional_augment, parse_graph,
                    verify)
from flames.flame import is_flame_fast

D, c = parse_graph("""
root r
arc r a 1/4
arc a v 1
arc r v 1
""")

y = {e.id: Fraction(0) for e in D.edges}
while True:
    lam_c, lam_y = all_connectivities(D, c), all_connectivities(D, y)
    short = [v for v in D.non_root if lam_y[v] < lam_c[v]]
    if not short:
        break
    step, y = fractional_augment(D, c, y, short[0])
    print(f"deficit at {step.deficit_vertex}: tight set "
          f"{sorted(step.tight_set.vertices)}, edge {step.edge} += {step.epsilon}")
    assert is_flame_fast(D, y)

print("final:", {e: str(x) for e, x in y.items()})
print(verify(D, c, y).to_dict())
