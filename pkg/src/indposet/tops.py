"""Tight orthogonal pairs and their dynamics.

A top is a pair (D, U) of disjoint independent sets with no edge from D to
U, maximal in the sense that no single element can be added to either side,
no element of D increased, and no element of U decreased.  Completion of an
independent set to the unique top having it as D-component (or U-component),
flips, toggles, and rowmotion all live here.  D and U are bitsets.
"""

from __future__ import annotations

from typing import NamedTuple

from .digraph import (ENUM_LIMIT, bits, linear_extension, mask_of, labels_of,
                      toggle_graph)
from .errors import NotExtremal, NotIndependent, NotOrthogonal, TooLarge


class Top(NamedTuple):
    down: int
    up: int


class RowOrbit(NamedTuple):
    tops: tuple
    length: int


def is_independent(dag, members):
    """True iff no edge (either direction) joins two members."""
    return all(dag.out[v] & members == 0 for v in bits(members))


def _orthogonal(dag, down, up):
    # Disjoint, both independent, and no edge from down to up.
    return (down & up == 0
            and is_independent(dag, down)
            and is_independent(dag, up)
            and all(dag.out[v] & up == 0 for v in bits(down)))


def is_orthogonal(dag, down, up):
    """True iff D, U are disjoint and no edge runs from D to U."""
    if not is_independent(dag, down):
        raise NotIndependent(f"D = {labels_of(dag, down)} is not independent")
    if not is_independent(dag, up):
        raise NotIndependent(f"U = {labels_of(dag, up)} is not independent")
    return down & up == 0 and all(dag.out[v] & up == 0 for v in bits(down))


def is_tight(dag, down, up):
    """Exhaustive single-element perturbation check of tightness.

    Four moves are tried: add a vertex to D, add one to U, replace some
    d in D by a strictly larger vertex, replace some u in U by a strictly
    smaller one (replacements must be new to their set).  The pair is tight
    iff every move breaks orthogonality.  This is the slow literal check;
    the greedy completions below construct tight pairs directly, and tests
    play the two against each other.
    """
    if not is_orthogonal(dag, down, up):
        raise NotOrthogonal(
            f"({labels_of(dag, down)}, {labels_of(dag, up)}) is not orthogonal")
    return loose_move(dag, down, up) is None


def loose_move(dag, down, up):
    """One admissible perturbation of an orthogonal pair, or None if tight.

    Returns a human-readable description of the first move (in the order
    is_tight documents) that keeps the pair orthogonal.
    """
    for x in range(dag.n):
        if (down | up) >> x & 1:
            continue
        if _orthogonal(dag, down | 1 << x, up):
            return f"vertex {dag.labels[x]} can join D"
        if _orthogonal(dag, down, up | 1 << x):
            return f"vertex {dag.labels[x]} can join U"
    for d in bits(down):
        for y in bits(dag.above[d] & ~down):
            if y != d and _orthogonal(dag, down & ~(1 << d) | 1 << y, up):
                return f"{dag.labels[d]} in D can rise to {dag.labels[y]}"
    for u in bits(up):
        for y in bits(dag.below[u] & ~up):
            if y != u and _orthogonal(dag, down, up & ~(1 << u) | 1 << y):
                return f"{dag.labels[u]} in U can drop to {dag.labels[y]}"
    return None


def complete_down(dag, members):
    """The unique top (D, I) whose U-component is the independent set I.

    Greedy over the reverse linear extension: k joins D when it is outside
    I, no element already in D has an edge to k, and k has no edge into I.
    """
    if not is_independent(dag, members):
        raise NotIndependent(f"{labels_of(dag, members)} is not independent")
    down = 0
    for k in linear_extension(dag, reversed=True):
        if members >> k & 1:
            continue
        if dag.inc[k] & down or dag.out[k] & members:
            continue
        down |= 1 << k
    return Top(down, members)


def complete_up(dag, members):
    """The unique top (I, U) whose D-component is the independent set I.

    Greedy over the linear extension: k joins U when it is outside I, no
    element of I has an edge to k, and k has no edge into U.
    """
    if not is_independent(dag, members):
        raise NotIndependent(f"{labels_of(dag, members)} is not independent")
    up = 0
    for k in linear_extension(dag):
        if members >> k & 1:
            continue
        if dag.inc[k] & members or dag.out[k] & up:
            continue
        up |= 1 << k
    return Top(members, up)


def min_top(dag):
    """The minimum of the independence poset, the top of the form (0, U)."""
    return complete_up(dag, 0)


def max_top(dag):
    """The maximum of the independence poset, the top of the form (D, 0)."""
    return complete_down(dag, 0)


def flip(dag, t, g):
    """Flip the top t at vertex g; an involution on tops.

    If g is in neither component the top is returned unchanged.  Otherwise
    the D-elements below g and the U-elements above g are dropped, g
    switches sides, and both components are greedily refilled (D along the
    reverse linear extension, then U along the linear extension), skipping
    vertices comparable to g on the appropriate side.  The growing refilled
    sets themselves constrain later additions.
    """
    down, up = t
    if not (down | up) >> g & 1:
        return t
    down2 = down & ~dag.below[g]
    up2 = up & ~dag.above[g]
    if up >> g & 1:
        down2 |= 1 << g
    else:
        up2 |= 1 << g
    for k in linear_extension(dag, reversed=True):
        if (down2 | up2) >> k & 1 or dag.above[g] >> k & 1:
            continue
        if dag.out[k] & up2 or dag.inc[k] & down2:
            continue
        down2 |= 1 << k
    for k in linear_extension(dag):
        if (down2 | up2) >> k & 1 or dag.below[g] >> k & 1:
            continue
        if dag.inc[k] & down2 or dag.out[k] & up2:
            continue
        up2 |= 1 << k
    return Top(down2, up2)


def flip_tree(dag):
    """Spanning tree of upward flips covering every top exactly once.

    Returns (tops, edges): tops in depth-first order starting from the
    minimum, edges as (parent index, child index, flipped vertex).  From a
    node reached by flipping g, only vertices strictly later than g in the
    linear extension are flipped, which visits each top once.
    """
    if dag.n > ENUM_LIMIT:
        raise TooLarge(f"graph has {dag.n} vertices, limit {ENUM_LIMIT}")
    ext = linear_extension(dag)
    pos = {g: i for i, g in enumerate(ext)}
    tops = []
    edges = []

    def walk(t, parent, last):
        idx = len(tops)
        tops.append(t)
        if parent >= 0:
            edges.append((parent, idx, last))
        for g in sorted(bits(t.up), key=pos.get):
            if last < 0 or pos[g] > pos[last]:
                walk(flip(dag, t, g), idx, g)

    walk(min_top(dag), -1, -1)
    return tops, edges


def enumerate_tops(dag):
    """All tops of the graph, in canonical flip-tree order."""
    return flip_tree(dag)[0]


def toggle_indep(dag, members, g):
    """Toggle the independent set at g: add if addable, else remove, else keep."""
    if not is_independent(dag, members):
        raise NotIndependent(f"{labels_of(dag, members)} is not independent")
    if members >> g & 1:
        return members & ~(1 << g)
    if dag.nbr[g] & members == 0:
        return members | 1 << g
    return members


def toggle_top(dag, t, g):
    """Carry the top t across the graph toggle at the extremal vertex g.

    The result is a top of toggle_graph(dag, g); applying the toggle again
    there returns t.  When g is minimal and sits in U (or maximal and in D)
    it simply changes sides; otherwise g leaves its side and the opposite
    component is recomputed in the toggled graph.
    """
    down, up = t
    if dag.out[g] == 0:
        if up >> g & 1:
            return Top(down | 1 << g, up & ~(1 << g))
        return complete_up(toggle_graph(dag, g), down & ~(1 << g))
    if dag.inc[g] == 0:
        if down >> g & 1:
            return Top(down & ~(1 << g), up | 1 << g)
        return complete_down(toggle_graph(dag, g), up & ~(1 << g))
    raise NotExtremal(f"vertex {dag.labels[g]} is neither minimal nor maximal")


def row(dag, t, method="global"):
    """Rowmotion: the unique top whose U-component is t's D-component.

    Three equivalent computations: "global" completes D downward in one
    pass, "slow" composes flips along the linear extension, and "deform"
    composes toggles along the reverse linear extension (the graph returns
    to the original after the last toggle).
    """
    if method == "global":
        return complete_down(dag, t.down)
    if method == "slow":
        cur = t
        for g in linear_extension(dag):
            cur = flip(dag, cur, g)
        return cur
    if method == "deform":
        cur = t
        graph = dag
        for g in linear_extension(dag, reversed=True):
            cur = toggle_top(graph, cur, g)
            graph = toggle_graph(graph, g)
        assert graph == dag
        return cur
    raise ValueError(f"unknown rowmotion method {method!r}")


def row_orbits(dag):
    """Partition of all tops into rowmotion orbits.

    Orbits are listed by first appearance in canonical top order (so the
    orbit of the minimum comes first), each starting from its first member.
    """
    seen = set()
    orbits = []
    for t in enumerate_tops(dag):
        if t in seen:
            continue
        orbit = [t]
        seen.add(t)
        cur = row(dag, t)
        while cur != t:
            orbit.append(cur)
            seen.add(cur)
            cur = row(dag, cur)
        orbits.append(RowOrbit(tuple(orbit), len(orbit)))
    return orbits


def top_to_json(dag, t):
    """Top JSON object: {"D": [...], "U": [...]} with vertex labels."""
    return {"D": labels_of(dag, t.down), "U": labels_of(dag, t.up)}


def top_from_json(dag, obj):
    """Parse the top JSON form; validity beyond labels is not checked here."""
    if not isinstance(obj, dict) or "D" not in obj or "U" not in obj:
        raise ValueError("top JSON needs 'D' and 'U' keys")
    return Top(mask_of(dag, obj["D"]), mask_of(dag, obj["U"]))
