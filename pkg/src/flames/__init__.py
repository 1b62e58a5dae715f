"""Exact computation of flames: sub-capacities of a rooted digraph that keep
every flow-connectivity from the root while carrying no spare in-capacity.
"""

from .digraph import (Edge, RootedDigraph, capacity, contract_set,
                      in_capacity, normalize, out_capacity, unit_capacity,
                      unit_vector)
from .errors import (FlameError, GraphFormatError, PreconditionError,
                     SizeBoundError)
from .flame import (ExtractionTrace, FlameReport, extract_flame,
                    extract_flame_integral, is_flame, trim_unused, verify)
from .flow import (Flow, PathDecomposition, TightSet, all_connectivities,
                   decompose, local_connectivity, max_flow, min_cut_maximal)
from .gammoid import is_coloop, is_independent, polygammoid_member
from .greedoid import (AugmentationStep, GreedoidCheckReport,
                       build_maximal_flame, check_greedoid_axioms,
                       find_augmenting_edge, fractional_augment)
from .textio import format_graph, parse_graph, read_graph

__version__ = "0.1.0"
