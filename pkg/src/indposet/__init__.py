"""Independence posets of finite DAGs.

Tight orthogonal pairs (tops) of a finite directed acyclic graph, the
poset they form under component-wise comparison, rowmotion computed
three equivalent ways, maximal orthogonal pairs (mops) and their
lattice, extremal and trim lattice tests, Galois graphs, and the
bijections between tops and mops on trim instances.
"""

from .digraph import (Dag, dag_new, from_edge_list, from_json, greater_equal,
                      labels_of, linear_extension, mask_of, reverse_all,
                      to_edge_list, to_json, toggle_graph)
from .errors import (AmbiguousPairing, CycleDetected, DuplicateEdge,
                     NoBounds, NotExtremal, NotIndependent, NotLattice,
                     NotOrthogonal, NotTrim, TooLarge, UnknownLabel)
from .extremal import (Mop, closure, cover_labels, enumerate_mops,
                       five_set_witness, galois_graph, irreducible_pairing,
                       is_extremal, is_trim, mop_from_json, mop_lattice,
                       mop_to_json, phi, theta, witness_to_json)
from .poset import (Poset, dual, independence_poset, is_lattice,
                    longest_chain, mobius, poset_isomorphic, poset_to_dot,
                    poset_to_json)
from .tops import (Top, complete_down, complete_up, enumerate_tops, flip,
                   flip_tree, is_independent, is_orthogonal, is_tight,
                   loose_move, max_top, min_top, row, row_orbits,
                   toggle_indep, toggle_top, top_from_json, top_to_json)
