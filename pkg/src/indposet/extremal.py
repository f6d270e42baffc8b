"""Maximal orthogonal pairs, extremal and trim lattices, and the maps
relating them back to tight orthogonal pairs.

A mop is a pair (X, Y) of disjoint vertex sets with no edge from X to Y,
each maximal given the other; equivalently Y is the right closure of X
and X the left closure of Y.  Ordered by inclusion of X the mops always
form a lattice, the tops inject into it, and the two structures agree
exactly when the top poset is itself a lattice.  X and Y are bitsets.
"""

from __future__ import annotations

import functools

from typing import NamedTuple

from .digraph import ENUM_LIMIT, bits, dag_new, labels_of, linear_extension, mask_of
from .errors import AmbiguousPairing, NotExtremal, NotLattice, NotTrim, TooLarge
from .poset import Poset, irreducibles, is_lattice, longest_chain
from .tops import Top, is_tight

# Vertex bound for the five-set partition search.
WITNESS_LIMIT = 12


class Mop(NamedTuple):
    x: int
    y: int


class FiveSetWitness(NamedTuple):
    x1: int
    x2: int
    x3: int
    x4: int
    z: int


def closure(dag, members, side):
    """Largest vertex set disjoint from members and unreachable in one
    step: no edge members -> result for side "right", none result ->
    members for side "left"."""
    if side == "right":
        rows = dag.out
    elif side == "left":
        rows = dag.inc
    else:
        raise ValueError(f"unknown side {side!r}")
    blocked = members
    for v in bits(members):
        blocked |= rows[v]
    return ((1 << dag.n) - 1) & ~blocked


def _closed(dag, members):
    # The double closure; its fixed points are the X-components of mops.
    return closure(dag, closure(dag, members, "right"), "left")


def enumerate_mops(dag):
    """All maximal orthogonal pairs, ordered by X as an ascending bitset.

    Mops are exactly the pairs (X, right(X)) with X fixed under the
    double closure.  Small graphs sweep every subset; past 15 vertices
    the closed sets are listed lectically instead.  Where both routes are
    cheap they are asserted to agree.
    """
    if dag.n > ENUM_LIMIT:
        raise TooLarge(f"graph has {dag.n} vertices, limit {ENUM_LIMIT}")
    if dag.n <= 15:
        closed = [x for x in range(1 << dag.n) if _closed(dag, x) == x]
        if dag.n <= 5:
            assert sorted(_lectic_closed(dag)) == closed, "lectic walk disagrees"
    else:
        closed = sorted(_lectic_closed(dag))
    return [Mop(x, closure(dag, x, "right")) for x in closed]


def _lectic_closed(dag):
    # Next-closure walk: from one closed set to the lectically next one,
    # visiting each exactly once.  The full vertex set is always closed
    # and comes last.
    full = (1 << dag.n) - 1
    cur = _closed(dag, 0)
    out = [cur]
    while cur != full:
        for i in range(dag.n - 1, -1, -1):
            if cur >> i & 1:
                continue
            prefix = (1 << i) - 1
            cand = _closed(dag, (cur & prefix) | (1 << i))
            if cand & prefix == cur & prefix:
                cur = cand
                break
        out.append(cur)
    return out


def mop_lattice(dag):
    """The lattice of all mops of the graph, ordered by X-inclusion.

    Covers are the transitive reduction of inclusion.  Joins intersect
    the Y components and meets the X components, the other side closing
    back up; both recipes are asserted against the join and meet tables
    of the built poset.
    """
    mops = enumerate_mops(dag)
    m = len(mops)
    above = [0] * m
    for i, a in enumerate(mops):
        for j in range(i + 1, m):
            # Ascending masks: a superset never precedes a subset.
            if a.x & mops[j].x == a.x and a.x != mops[j].x:
                above[i] |= 1 << j
    below = [0] * m
    for i in range(m):
        for j in bits(above[i]):
            below[j] |= 1 << i
    covers = [(i, j) for i in range(m) for j in bits(above[i])
              if above[i] & below[j] == 0]
    lat = Poset(mops, covers)

    check = is_lattice(lat)
    assert check, f"mop inclusion order is not a lattice: {check.witness}"
    if __debug__:
        index = {mop.x: i for i, mop in enumerate(mops)}
        for i in range(m):
            for j in range(i, m):
                meet_x = mops[i].x & mops[j].x
                join_x = closure(dag, mops[i].y & mops[j].y, "left")
                assert check.meet[i][j] == index[meet_x], "meet disagrees"
                assert check.join[i][j] == index[join_x], "join disagrees"
    return lat


def _lattice_or_raise(p):
    if p.minimum is None or p.maximum is None:
        raise NotLattice("poset lacks a unique minimum or maximum")
    check = is_lattice(p)
    if not check:
        kind, x, y, _ = check.witness
        raise NotLattice(f"elements {x} and {y} have no {kind}")
    return check


def is_extremal(p):
    """True iff the longest chain of the lattice is as long as its count
    of join-irreducibles and of meet-irreducibles."""
    _lattice_or_raise(p)
    jirr, mirr = irreducibles(p)
    return longest_chain(p) == len(jirr) == len(mirr)


def _spine_chain(p, from_top=False):
    # A deterministic maximum-length cover chain from bottom to top,
    # taking the smallest index whenever several covers keep the length;
    # the from_top variant walks downward for an independent rebuild.
    height = [0] * p.m
    for x in reversed(p.order):
        for y in p.up_adj[x]:
            height[x] = max(height[x], height[y] + 1)
    if from_top:
        depth = [0] * p.m
        for y in p.order:
            for x in p.down_adj[y]:
                depth[y] = max(depth[y], depth[x] + 1)
        chain = [p.maximum]
        while depth[chain[-1]]:
            want = depth[chain[-1]] - 1
            chain.append(min(x for x in p.down_adj[chain[-1]]
                             if depth[x] == want))
        chain.reverse()
    else:
        chain = [p.minimum]
        while height[chain[-1]]:
            want = height[chain[-1]] - 1
            chain.append(min(y for y in p.up_adj[chain[-1]]
                             if height[y] == want))
    assert len(chain) == longest_chain(p) + 1
    return chain


def _pairing_along(p, chain):
    jirr, mirr = irreducibles(p)
    pairs = []
    for lo, hi in zip(chain, chain[1:]):
        js = [j for j in jirr if p.leq(j, hi) and not p.leq(j, lo)]
        ms = [mm for mm in mirr if p.leq(lo, mm) and not p.leq(hi, mm)]
        if len(js) != 1 or len(ms) != 1:
            raise AmbiguousPairing(
                f"chain step {lo} -> {hi} admits {len(js)} join- and "
                f"{len(ms)} meet-irreducibles")
        pairs.append((js[0], ms[0]))
    return tuple(pairs)


def irreducible_pairing(p):
    """Pair the join- and meet-irreducibles of an extremal lattice.

    Walking a maximum-length chain, step i determines the unique
    join-irreducible newly below its upper end and the unique
    meet-irreducible newly above its lower end; those two are paired.
    Non-uniqueness raises AmbiguousPairing.  The pairing as a set does
    not depend on the chain, which is asserted by rebuilding it along a
    second chain grown from the top; j < its partner m never holds.
    """
    if not is_extremal(p):
        raise NotExtremal(f"{p!r} is not extremal")
    pairs = _pairing_along(p, _spine_chain(p))
    alt = _pairing_along(p, _spine_chain(p, from_top=True))
    assert set(pairs) == set(alt), "pairing depends on the chain"
    assert all(not p.leq(j, mm) for j, mm in pairs), "paired j below its m"
    return pairs


def is_trim(p):
    """Extremal with every cover overlapping.

    A cover x < y overlaps when some paired (j, m) has j <= y and x <= m.
    The equivalent condition, that some maximum-length chain consists of
    left-modular elements, is checked alongside and the verdicts are
    asserted equal.
    """
    check = _lattice_or_raise(p)
    if not is_extremal(p):
        return False
    pairs = irreducible_pairing(p)
    overlapping = all(
        any(p.leq(j, y) and p.leq(x, mm) for j, mm in pairs)
        for x, y in p.covers)
    assert overlapping == _has_left_modular_chain(p, check), \
        "overlap and left-modularity disagree"
    return overlapping


def _has_left_modular_chain(p, check):
    # x is left-modular iff (y v x) ^ z == y v (x ^ z) whenever y <= z.
    # A maximal chain of left-modular elements always has maximum length,
    # so only cover steps dropping the height by exactly one can matter.
    join, meet = check.join, check.meet
    height = [0] * p.m
    for x in reversed(p.order):
        for y in p.up_adj[x]:
            height[x] = max(height[x], height[y] + 1)

    @functools.cache
    def modular(x):
        for y in range(p.m):
            for z in bits(p.above[y]):
                if meet[join[y][x]][z] != join[y][meet[x][z]]:
                    return False
        return True

    @functools.cache
    def climb(x):
        if not modular(x):
            return False
        if height[x] == 0:
            return True
        return any(height[y] == height[x] - 1 and climb(y)
                   for y in p.up_adj[x])

    return climb(p.minimum)


def cover_labels(p):
    """Label sets (D, U) per element, over the irreducible pairing.

    The label of a cover x < y is the index of the unique pair (j, m)
    with j <= y and x <= m; D(y) collects the labels of the covers below
    y and U(x) those of the covers above x.  Labels of distinct covers
    at a shared element never collide, which is asserted.
    """
    if not is_trim(p):
        raise NotTrim(f"{p!r} is not trim")
    pairs = irreducible_pairing(p)
    down = [set() for _ in range(p.m)]
    up = [set() for _ in range(p.m)]
    for x, y in p.covers:
        hits = [g for g, (j, mm) in enumerate(pairs)
                if p.leq(j, y) and p.leq(x, mm)]
        assert len(hits) == 1, f"cover ({x}, {y}) has overlap {hits}"
        down[y].add(hits[0])
        up[x].add(hits[0])
    labels = [(frozenset(d), frozenset(u)) for d, u in zip(down, up)]
    assert all(len(d) == len(p.down_adj[i]) and len(u) == len(p.up_adj[i])
               for i, (d, u) in enumerate(labels)), "cover labels collide"
    return labels


def galois_graph(p):
    """Digraph on the irreducible pairs of an extremal lattice, with an
    edge g -> h (g != h) exactly when j_g is not below m_h.

    Vertices are named "1".."n" in pairing order.  The result is acyclic
    whenever p is trim; otherwise construction may raise CycleDetected.
    """
    pairs = irreducible_pairing(p)
    names = [str(g + 1) for g in range(len(pairs))]
    edges = [(names[g], names[h])
             for g, (j, _) in enumerate(pairs)
             for h, (_, mm) in enumerate(pairs)
             if g != h and not p.leq(j, mm)]
    return dag_new(names, edges)


@functools.lru_cache(maxsize=256)
def _mop_lattice_is_trim(dag):
    return is_trim(mop_lattice(dag))


def phi(dag, mop):
    """The top of a mop, defined when the mop lattice is trim.

    D keeps the members of X that stay independent, scanned along the
    reverse linear extension; U does the same for Y along the forward
    one.  The result is asserted tight, and the induced map is an
    isomorphism from the mop lattice to the top poset.
    """
    if not _mop_lattice_is_trim(dag):
        raise NotTrim("the mop lattice of this graph is not trim")
    down = 0
    for g in linear_extension(dag, reversed=True):
        if mop.x >> g & 1 and dag.nbr[g] & down == 0:
            down |= 1 << g
    up = 0
    for g in linear_extension(dag):
        if mop.y >> g & 1 and dag.nbr[g] & up == 0:
            up |= 1 << g
    assert is_tight(dag, down, up), "greedy selection left a loose pair"
    return Top(down, up)


def theta(dag, t, order="t1_then_t2"):
    """The mop reached from a top by closing the two sides in turn.

    Step t1 adds to Y every vertex outside X with no edge from X; step t2
    adds to X every vertex outside Y with no edge to Y.  Either order
    turns a top (X, Y) = (D, U) into a mop, injectively, and the two
    orders agree whenever the top poset is a lattice.
    """
    x, y = t.down, t.up
    if order == "t1_then_t2":
        y |= closure(dag, x, "right")
        x |= closure(dag, y, "left")
    elif order == "t2_then_t1":
        x |= closure(dag, y, "left")
        y |= closure(dag, x, "right")
    else:
        raise ValueError(f"unknown order {order!r}")
    assert closure(dag, x, "right") == y and closure(dag, y, "left") == x, \
        "closing both sides did not settle on a mop"
    return Mop(x, y)


def five_set_witness(dag):
    """Search for a partition (X1, X2, X3, X4, Z) certifying that the top
    poset is not a lattice; None means it is one.

    X1..X4 must be non-empty, edges from X4 to X2 or X1 and from X3 to X1
    are forbidden, every member of X3 needs an edge from X4 and one to
    X2, every member of X2 one from X3 and one to X1, and every member
    of Z needs an edge from X4 and one to X1.  Vertices are assigned in
    id order trying X1, X2, X3, X4, Z, so the first partition found is
    the lexicographically least witness.
    """
    if dag.n > WITNESS_LIMIT:
        raise TooLarge(f"graph has {dag.n} vertices, limit {WITNESS_LIMIT}")
    n = dag.n
    masks = [0] * 5  # X1, X2, X3, X4, Z

    def fits(v, b):
        # Pairwise exclusions, plus blocks whose membership needs an
        # incoming or outgoing edge the vertex lacks entirely.
        if b == 0:
            return dag.inc[v] & (masks[2] | masks[3]) == 0
        if b == 1:
            return dag.inc[v] & masks[3] == 0 and dag.inc[v] and dag.out[v]
        if b == 2:
            return dag.out[v] & masks[0] == 0 and dag.inc[v] and dag.out[v]
        if b == 3:
            return dag.out[v] & (masks[0] | masks[1]) == 0
        return bool(dag.inc[v] and dag.out[v])

    def place(v):
        if sum(1 for b in range(4) if masks[b] == 0) > n - v:
            return False
        if v == n:
            return _witness_holds(dag, masks)
        for b in range(5):
            if fits(v, b):
                masks[b] |= 1 << v
                if place(v + 1):
                    return True
                masks[b] &= ~(1 << v)
        return False

    if place(0):
        return FiveSetWitness(*masks)
    return None


def _witness_holds(dag, masks):
    x1, x2, x3, x4, z = masks
    if not (x1 and x2 and x3 and x4):
        return False
    return (all(dag.inc[v] & x4 and dag.out[v] & x2 for v in bits(x3))
            and all(dag.inc[v] & x3 and dag.out[v] & x1 for v in bits(x2))
            and all(dag.inc[v] & x4 and dag.out[v] & x1 for v in bits(z)))


def mop_to_json(dag, mop):
    """Mop JSON object: {"X": [...], "Y": [...]} with vertex labels."""
    return {"X": labels_of(dag, mop.x), "Y": labels_of(dag, mop.y)}


def mop_from_json(dag, obj):
    """Parse the mop JSON form; validity beyond labels is not checked here."""
    if not isinstance(obj, dict) or "X" not in obj or "Y" not in obj:
        raise ValueError("mop JSON needs 'X' and 'Y' keys")
    return Mop(mask_of(dag, obj["X"]), mask_of(dag, obj["Y"]))


def witness_to_json(dag, w):
    """Five-set witness JSON object, one labelled list per block."""
    return {"X1": labels_of(dag, w.x1), "X2": labels_of(dag, w.x2),
            "X3": labels_of(dag, w.x3), "X4": labels_of(dag, w.x4),
            "Z": labels_of(dag, w.z)}
