"""Finite acyclic directed graphs with reachability order.

Vertices carry dense ids 0..n-1 internally; string labels appear only at the
boundary (construction, serialization, CLI output).  Vertex sets throughout
the package are Python ints used as bitsets: bit g set means vertex g is in
the set.  An edge g -> h means g > h in G-order, and g >= h holds exactly
when there is a directed path from g to h.
"""

from __future__ import annotations

import functools
import itertools

from .errors import CycleDetected, DuplicateEdge, TooLarge, UnknownLabel

ENUM_LIMIT = 25  # brute-force enumeration guard
ISO_LIMIT = 12  # digraph-isomorphism backtracking guard


def bits(mask):
    """Yield the indices of the set bits of mask, ascending."""
    while mask:
        low = mask & -mask
        yield low.bit_length() - 1
        mask ^= low


class Dag:
    """Immutable acyclic directed graph.

    n       vertex count
    labels  tuple of display strings, index = vertex id
    out     out[g] = bitset of h with an edge g -> h
    inc     inc[g] = bitset of h with an edge h -> g
    nbr     nbr[g] = out[g] | inc[g]
    below   below[g] = bitset of h with g >= h (g included)
    above   above[g] = bitset of h with h >= g (g included)
    ext     canonical linear extension (see linear_extension)
    parent_ids  for subgraphs, tuple mapping local id -> id in the parent

    Construction checks acyclicity and raises CycleDetected otherwise.
    """

    __slots__ = ("n", "labels", "out", "inc", "nbr", "below", "above", "ext",
                 "parent_ids", "_index")

    def __init__(self, labels, out, parent_ids=None):
        n = len(labels)
        self.n = n
        self.labels = tuple(labels)
        self.out = tuple(out)
        self.parent_ids = parent_ids
        self._index = {lab: g for g, lab in enumerate(self.labels)}

        inc = [0] * n
        for g in range(n):
            for h in bits(self.out[g]):
                inc[h] |= 1 << g
        self.inc = tuple(inc)
        self.nbr = tuple(o | i for o, i in zip(self.out, self.inc))

        self.ext = self._canonical_extension()

        # Reachability closures, filled along the extension: a vertex's
        # out-neighbours all precede it in ext, so their below-sets are ready.
        below = [0] * n
        for g in self.ext:
            m = 1 << g
            for h in bits(self.out[g]):
                m |= below[h]
            below[g] = m
        above = [0] * n
        for g in reversed(self.ext):
            m = 1 << g
            for h in bits(self.inc[g]):
                m |= above[h]
            above[g] = m
        self.below = tuple(below)
        self.above = tuple(above)

    def _canonical_extension(self):
        # Repeatedly emit the smallest-id vertex all of whose out-neighbours
        # are already emitted (sinks first).  Doubles as the cycle check.
        n = self.n
        emitted = 0
        order = []
        for _ in range(n):
            for g in range(n):
                if not emitted >> g & 1 and self.out[g] & ~emitted == 0:
                    emitted |= 1 << g
                    order.append(g)
                    break
            else:
                raise CycleDetected(self._find_cycle(emitted))
        return tuple(order)

    def _find_cycle(self, emitted):
        # Every unemitted vertex has an unemitted out-neighbour; walk until
        # a vertex repeats, then trim the tail before the repeat.
        start = next(g for g in range(self.n) if not emitted >> g & 1)
        seen = {}
        walk = []
        g = start
        while g not in seen:
            seen[g] = len(walk)
            walk.append(g)
            g = next(h for h in bits(self.out[g]) if not emitted >> h & 1)
        cycle = walk[seen[g]:]
        return [self.labels[v] for v in cycle]

    def vertex(self, label):
        """Map a label to its vertex id."""
        try:
            return self._index[label]
        except KeyError:
            raise UnknownLabel(f"unknown vertex label {label!r}") from None

    def edges(self):
        """All edges as (g, h) id pairs, sorted."""
        return [(g, h) for g in range(self.n) for h in bits(self.out[g])]

    def __eq__(self, other):
        return (isinstance(other, Dag) and self.labels == other.labels
                and self.out == other.out)

    def __hash__(self):
        return hash((self.labels, self.out))

    def __repr__(self):
        es = ", ".join(f"{self.labels[g]}->{self.labels[h]}"
                       for g, h in self.edges())
        return f"Dag({self.n} vertices; {es})"


def dag_new(labels, edges):
    """Build a validated Dag from labels and (tail, head) label pairs.

    Labels are coerced to strings and must be distinct; vertex ids are
    assigned in input label order.  An edge (u, v) means u -> v, i.e. u > v.
    """
    labels = [str(lab) for lab in labels]
    if len(set(labels)) != len(labels):
        raise ValueError("duplicate vertex label")
    index = {lab: g for g, lab in enumerate(labels)}
    out = [0] * len(labels)
    seen = set()
    for u, v in edges:
        u, v = str(u), str(v)
        if u not in index:
            raise UnknownLabel(f"unknown vertex label {u!r}")
        if v not in index:
            raise UnknownLabel(f"unknown vertex label {v!r}")
        if (u, v) in seen:
            raise DuplicateEdge(f"duplicate edge {u} -> {v}")
        if u == v:
            raise CycleDetected([u])
        seen.add((u, v))
        out[index[u]] |= 1 << index[v]
    return Dag(labels, out)


def greater_equal(d, g, h):
    """True iff g >= h in G-order (a directed path g ~> h; reflexive)."""
    return bool(d.below[g] >> h & 1)


def linear_extension(d, reversed=False):
    """The canonical linear extension of G-order (or its literal reverse).

    In the forward order, the head of every edge precedes its tail; the
    reversed order has the opposite property (sources first).
    """
    return d.ext[::-1] if reversed else d.ext


def mask_of(d, labels):
    """Bitset of the vertices with the given labels."""
    m = 0
    for lab in labels:
        m |= 1 << d.vertex(str(lab))
    return m


def labels_of(d, mask):
    """Labels of the vertices in the bitset, in id order."""
    return [d.labels[g] for g in bits(mask)]


def subgraph_delete(d, g, closed=False):
    """Delete vertex g (closed=False) or g with its whole neighbourhood.

    The result's parent_ids maps each new vertex id to its id in d.
    """
    removed = (1 << g) | (d.nbr[g] if closed else 0)
    keep = [v for v in range(d.n) if not removed >> v & 1]
    pos = {v: i for i, v in enumerate(keep)}
    out = []
    for v in keep:
        m = 0
        for h in bits(d.out[v] & ~removed):
            m |= 1 << pos[h]
        out.append(m)
    return Dag([d.labels[v] for v in keep], out, parent_ids=tuple(keep))


def is_extremal_vertex(d, g):
    """True iff g is minimal (no out-edges) or maximal (no in-edges)."""
    return d.out[g] == 0 or d.inc[g] == 0


@functools.lru_cache(maxsize=1024)
def toggle_graph(d, g):
    """Reverse every edge incident to the extremal vertex g.

    Toggling twice returns the original graph.  Results are cached because
    deformotion toggles the same few graphs once per top.
    """
    from .errors import NotExtremal

    if not is_extremal_vertex(d, g):
        raise NotExtremal(f"vertex {d.labels[g]} is neither minimal nor maximal")
    out = list(d.out)
    for x in bits(d.inc[g]):
        out[x] &= ~(1 << g)
    for y in bits(d.out[g]):
        out[y] |= 1 << g
    out[g] = d.inc[g]
    return Dag(d.labels, out)


def reverse_all(d):
    """The graph G* with every edge reversed."""
    return Dag(d.labels, d.inc)


def independent_sets_bruteforce(d):
    """All bitsets with no edge (either direction) inside, ascending.

    This is the counting oracle: each independent set completes to exactly
    one top as its D-component, so the two families are equinumerous.
    """
    if d.n > ENUM_LIMIT:
        raise TooLarge(f"{d.n} vertices exceeds the enumeration guard {ENUM_LIMIT}")
    nbr = d.nbr
    found = []

    def rec(v, cur, banned):
        if v == d.n:
            found.append(cur)
            return
        rec(v + 1, cur, banned)
        if not banned >> v & 1:
            rec(v + 1, cur | 1 << v, banned | nbr[v])

    rec(0, 0, 0)
    found.sort()
    return found


def _degree_signatures(d):
    # One refinement round over (out-degree, in-degree) is enough pruning
    # at the sizes the guard allows.
    base = [(d.out[g].bit_count(), d.inc[g].bit_count())
            for g in range(d.n)]
    sig = []
    for g in range(d.n):
        outs = sorted(base[h] for h in bits(d.out[g]))
        ins = sorted(base[h] for h in bits(d.inc[g]))
        sig.append((base[g], tuple(outs), tuple(ins)))
    return sig


def digraph_isomorphic(d1, d2):
    """True iff an edge-preserving vertex bijection d1 -> d2 exists."""
    if max(d1.n, d2.n) > ISO_LIMIT:
        raise TooLarge(f"isomorphism guard is {ISO_LIMIT} vertices")
    if d1.n != d2.n:
        return False
    if sum(map(int.bit_count, d1.out)) != sum(map(int.bit_count, d2.out)):
        return False
    sig1 = _degree_signatures(d1)
    sig2 = _degree_signatures(d2)
    if sorted(sig1) != sorted(sig2):
        return False

    n = d1.n
    # Map rare signatures first to fail fast.
    freq = {}
    for s in sig1:
        freq[s] = freq.get(s, 0) + 1
    order = sorted(range(n), key=lambda g: (freq[sig1[g]], g))
    cand = [[h for h in range(n) if sig2[h] == sig1[g]] for g in range(n)]
    img = [-1] * n
    used = [False] * n

    def rec(i):
        if i == n:
            return True
        g = order[i]
        for h in cand[g]:
            if used[h]:
                continue
            ok = True
            for j in range(i):
                u = order[j]
                if (d1.out[u] >> g & 1) != (d2.out[img[u]] >> h & 1):
                    ok = False
                    break
                if (d1.out[g] >> u & 1) != (d2.out[h] >> img[u] & 1):
                    ok = False
                    break
            if ok:
                img[g] = h
                used[h] = True
                if rec(i + 1):
                    return True
                used[h] = False
                img[g] = -1
        return False

    return rec(0)


def all_dags(n):
    """Yield every labeled DAG on n vertices (labels "1".."n").

    Each unordered vertex pair independently carries no edge or one edge in
    either direction; orientations with directed cycles are skipped.  Counts
    follow the labeled-DAG sequence: 1, 1, 3, 25, 543, 29281, ...
    """
    labels = [str(i + 1) for i in range(n)]
    pairs = list(itertools.combinations(range(n), 2))
    for states in itertools.product((0, 1, 2), repeat=len(pairs)):
        out = [0] * n
        for (a, b), s in zip(pairs, states):
            if s == 1:
                out[a] |= 1 << b
            elif s == 2:
                out[b] |= 1 << a
        try:
            yield Dag(labels, out)
        except CycleDetected:
            continue


def random_dag(n, rng):
    """One random labeled DAG on n vertices, deterministic given rng.

    A random vertex order fixes the edge directions; the edge density is
    itself drawn per graph so sparse and dense instances both appear.
    """
    labels = [str(i + 1) for i in range(n)]
    perm = list(range(n))
    rng.shuffle(perm)
    p = rng.random()
    out = [0] * n
    for i in range(n):
        for j in range(i + 1, n):
            if rng.random() < p:
                out[perm[i]] |= 1 << perm[j]
    return Dag(labels, out)


def to_json(d):
    """Graph JSON object: {"vertices": [...], "edges": [["u","v"], ...]}."""
    return {
        "vertices": list(d.labels),
        "edges": [[d.labels[g], d.labels[h]] for g, h in d.edges()],
    }


def from_json(obj):
    """Parse the graph JSON form produced by to_json."""
    if not isinstance(obj, dict) or "vertices" not in obj or "edges" not in obj:
        raise ValueError("graph JSON needs 'vertices' and 'edges' keys")
    edges = []
    for e in obj["edges"]:
        if not isinstance(e, (list, tuple)) or len(e) != 2:
            raise ValueError(f"bad edge entry {e!r}")
        edges.append((e[0], e[1]))
    return dag_new(obj["vertices"], edges)


def from_edge_list(text):
    """Parse a plain-text edge list: one "u v" pair per line.

    Vertices are registered in first-appearance order; lines starting with
    '#' and blank lines are ignored.
    """
    labels = []
    seen = set()
    edges = []
    for lineno, line in enumerate(text.splitlines(), 1):
        line = line.strip()
        if not line or line.startswith("#"):
            continue
        parts = line.split()
        if len(parts) != 2:
            raise ValueError(f"line {lineno}: expected 'u v', got {line!r}")
        for lab in parts:
            if lab not in seen:
                seen.add(lab)
                labels.append(lab)
        edges.append((parts[0], parts[1]))
    return dag_new(labels, edges)


def to_edge_list(d):
    """Edge-list text form (loses isolated vertices; JSON is faithful)."""
    return "".join(f"{d.labels[g]} {d.labels[h]}\n" for g, h in d.edges())
