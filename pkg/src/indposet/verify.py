"""Cross-checks of the library's structural claims on many small graphs.

Each property takes one graph and returns None on success or a short
failure description.  The sweep runner feeds every property either all
DAGs up to a size bound or a seeded random sample, reporting the first
counterexample per property; the unit tests and the command line both
drive it.
"""

from __future__ import annotations

import random

from .digraph import (all_dags, digraph_isomorphic, greater_equal,
                      independent_sets_bruteforce, random_dag, reverse_all,
                      toggle_graph)
from .extremal import (enumerate_mops, five_set_witness, galois_graph,
                       is_extremal, is_trim, mop_lattice, mop_to_json, phi,
                       theta)
from .poset import independence_poset, is_lattice
from .tops import (Top, enumerate_tops, flip, is_tight, row, toggle_indep,
                   toggle_top, top_to_json)


def _prop_counting(dag):
    tops = enumerate_tops(dag)
    if len(tops) != len(set(tops)):
        return "enumeration repeats a top"
    indep = independent_sets_bruteforce(dag)
    if len(tops) != len(indep):
        return f"{len(tops)} tops vs {len(indep)} independent sets"
    return None


def _prop_row_methods(dag):
    for t in enumerate_tops(dag):
        target = row(dag, t, method="global")
        for method in ("slow", "deform"):
            if row(dag, t, method=method) != target:
                return f"{method} rowmotion splits on {top_to_json(dag, t)}"
    return None


def _prop_flips(dag):
    for t in enumerate_tops(dag):
        for g in range(dag.n):
            if flip(dag, flip(dag, t, g), g) != t:
                return (f"flip at {dag.labels[g]} is not an involution "
                        f"on {top_to_json(dag, t)}")
            for h in range(g + 1, dag.n):
                if greater_equal(dag, g, h) or greater_equal(dag, h, g):
                    continue
                if flip(dag, flip(dag, t, g), h) != flip(dag, flip(dag, t, h), g):
                    return (f"flips at incomparable {dag.labels[g]}, "
                            f"{dag.labels[h]} do not commute")
    return None


def _prop_five_set(dag):
    witness = five_set_witness(dag)
    lattice = bool(is_lattice(independence_poset(dag)))
    if (witness is None) != lattice:
        state = "absent" if witness is None else "present"
        return f"five-set witness {state} but lattice={lattice}"
    return None


def _prop_trim_chain(dag):
    p = independence_poset(dag)
    if not is_lattice(p):
        return None
    if not is_trim(p):
        return "a lattice of tops that is not trim"
    if not is_extremal(p):
        return "a trim lattice that is not extremal"
    return None


def _prop_cardinality(dag):
    tops = len(enumerate_tops(dag))
    mops = len(enumerate_mops(dag))
    lattice = bool(is_lattice(independence_poset(dag)))
    if tops > mops:
        return f"{tops} tops exceed {mops} mops"
    if (tops == mops) != lattice:
        return f"{tops} tops, {mops} mops, lattice={lattice}"
    return None


def _prop_phi(dag):
    p = independence_poset(dag)
    if not is_lattice(p):
        return None
    lat = mop_lattice(dag)
    images = [phi(dag, mo) for mo in lat.payloads]
    if sorted(images) != sorted(p.payloads):
        return "phi is not a bijection onto the tops"
    index = {t: i for i, t in enumerate(p.payloads)}
    for i in range(lat.m):
        for j in range(lat.m):
            if lat.leq(i, j) != p.leq(index[images[i]], index[images[j]]):
                return "phi does not preserve order both ways"
    for mo, t in zip(lat.payloads, images):
        for order in ("t1_then_t2", "t2_then_t1"):
            if theta(dag, t, order) != mo:
                return f"theta {order} does not invert phi at {mop_to_json(dag, mo)}"
    return None


def _prop_theta_injective(dag):
    for order in ("t1_then_t2", "t2_then_t1"):
        seen = {}
        for t in enumerate_tops(dag):
            mo = theta(dag, t, order)
            if mo in seen:
                return (f"theta {order} collides on {top_to_json(dag, seen[mo])} "
                        f"and {top_to_json(dag, t)}")
            seen[mo] = t
    return None


def _prop_toggles(dag):
    for g in range(dag.n):
        minimal = dag.out[g] == 0
        maximal = dag.inc[g] == 0
        if not (minimal or maximal):
            continue
        toggled = toggle_graph(dag, g)
        if toggle_graph(toggled, g) != dag:
            return f"toggling the graph twice at {dag.labels[g]} drifts"
        for t in enumerate_tops(dag):
            s = toggle_top(dag, t, g)
            if not is_tight(toggled, s.down, s.up):
                return f"toggle at {dag.labels[g]} leaves a loose pair"
            if toggle_top(toggled, s, g) != t:
                return f"toggle at {dag.labels[g]} does not invert"
            if minimal and s.down != toggle_indep(dag, t.down, g):
                return f"D-components at minimal {dag.labels[g]} drift"
            if maximal and s.up != toggle_indep(dag, t.up, g):
                return f"U-components at maximal {dag.labels[g]} drift"
    return None


def _prop_duality(dag):
    p = independence_poset(dag)
    q = independence_poset(reverse_all(dag))
    swapped = {Top(t.up, t.down): i for i, t in enumerate(q.payloads)}
    if p.m != q.m or set(swapped) != set(p.payloads):
        return "reversal does not swap the components of the tops"
    index = {t: i for i, t in enumerate(p.payloads)}
    for s in p.payloads:
        for t in p.payloads:
            if p.leq(index[s], index[t]) != q.leq(swapped[t], swapped[s]):
                return "reversal does not dualize the order"
    return None


def _prop_galois(dag):
    p = independence_poset(dag)
    if not is_lattice(p):
        return None
    if not digraph_isomorphic(galois_graph(p), dag):
        return "galois graph of the top lattice is not the original graph"
    return None


PROPERTIES = (
    ("a", "top count equals independent-set count", _prop_counting),
    ("b", "rowmotion methods agree", _prop_row_methods),
    ("c", "flips are involutions and commute when incomparable", _prop_flips),
    ("d", "five-set witness absent exactly for lattices", _prop_five_set),
    ("e", "lattice implies trim implies extremal", _prop_trim_chain),
    ("f", "tops at most mops, equal only for lattices", _prop_cardinality),
    ("g", "phi is an order isomorphism inverted by theta", _prop_phi),
    ("h", "theta compositions are injective", _prop_theta_injective),
    ("i", "toggles at extremal vertices are consistent", _prop_toggles),
    ("j", "edge reversal dualizes the poset", _prop_duality),
    ("k", "galois graph reconstructs lattice instances", _prop_galois),
)


def check_graph(dag):
    """All property failures on one graph, as (key, detail) pairs."""
    out = []
    for key, _, fn in PROPERTIES:
        detail = fn(dag)
        if detail is not None:
            out.append((key, detail))
    return out


def exhaustive_graphs(max_n):
    """All DAGs on 1..max_n labelled vertices, smallest sizes first."""
    for n in range(1, max_n + 1):
        yield from all_dags(n)


def sample_graphs(max_n, count, seed):
    """count seeded random DAGs, sizes cycling over 5..max_n.

    Sampling exists for sizes past the exhaustive range, so sizes start
    at 5; with max_n below that they cycle over 1..max_n instead.
    """
    rng = random.Random(seed)
    lo = 5 if max_n >= 5 else 1
    sizes = range(lo, max_n + 1)
    for k in range(count):
        yield random_dag(sizes[k % len(sizes)], rng)


def sweep(graphs):
    """Run every property over the graphs.

    Returns (total, failures) where failures maps a property key to its
    first counterexample as (dag, detail); a property keeps running on
    later graphs only until it has failed once.
    """
    failures = {}
    total = 0
    for dag in graphs:
        total += 1
        for key, _, fn in PROPERTIES:
            if key in failures:
                continue
            detail = fn(dag)
            if detail is not None:
                failures[key] = (dag, detail)
    return total, failures
