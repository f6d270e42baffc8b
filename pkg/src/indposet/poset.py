"""Finite poset kernel and the independence-poset builder.

A Poset is built from cover relations over opaque payload values (tops,
maximal orthogonal pairs, plain strings).  The order closure is kept as
bitset rows, which makes join/meet tables, Möbius values, and isomorphism
checks straightforward at desk scale.
"""

from __future__ import annotations

from .digraph import bits
from .errors import NoBounds, TooLarge
from .tops import enumerate_tops, flip

POSET_ISO_LIMIT = 200


class Poset:
    """Immutable finite poset given by its covering relations.

    m         element count
    payloads  tuple of per-element values
    covers    sorted tuple of (x, y) index pairs with x covered by y
    above     above[i] = bitset of j with j >= i (i included)
    below     below[i] = bitset of j with j <= i
    minimum   index of the unique minimum, or None
    maximum   index of the unique maximum, or None

    Construction asserts that the covers are irredundant, i.e. that they
    form the transitive reduction of their own closure.
    """

    __slots__ = ("m", "payloads", "covers", "up_adj", "down_adj",
                 "above", "below", "order", "minimum", "maximum", "_lattice")

    def __init__(self, payloads, covers):
        m = len(payloads)
        self.m = m
        self.payloads = tuple(payloads)
        covers = sorted(set((int(x), int(y)) for x, y in covers))
        self.covers = tuple(covers)
        up_adj = [[] for _ in range(m)]
        down_adj = [[] for _ in range(m)]
        for x, y in covers:
            if not (0 <= x < m and 0 <= y < m) or x == y:
                raise ValueError(f"bad cover ({x}, {y})")
            up_adj[x].append(y)
            down_adj[y].append(x)
        self.up_adj = tuple(map(tuple, up_adj))
        self.down_adj = tuple(map(tuple, down_adj))

        # Topological order over covers; a cycle means the input is no order.
        indeg = [len(down_adj[i]) for i in range(m)]
        order = [i for i in range(m) if indeg[i] == 0]
        for x in order:
            for y in up_adj[x]:
                indeg[y] -= 1
                if indeg[y] == 0:
                    order.append(y)
        if len(order) != m:
            raise ValueError("cover relations contain a cycle")
        self.order = tuple(order)

        above = [0] * m
        for i in reversed(order):
            a = 1 << i
            for j in up_adj[i]:
                a |= above[j]
            above[i] = a
        below = [0] * m
        for i in order:
            b = 1 << i
            for j in down_adj[i]:
                b |= below[j]
            below[i] = b
        self.above = tuple(above)
        self.below = tuple(below)

        for x, y in covers:
            assert above[x] & below[y] == (1 << x) | (1 << y), \
                f"cover ({x}, {y}) is transitively implied"

        full = (1 << m) - 1 if m else 0
        mins = [i for i in range(m) if above[i] == full]
        maxs = [i for i in range(m) if below[i] == full]
        self.minimum = mins[0] if len(mins) == 1 else None
        self.maximum = maxs[0] if len(maxs) == 1 else None
        self._lattice = None

    def leq(self, x, y):
        """True iff x <= y."""
        return bool(self.above[x] >> y & 1)

    def __repr__(self):
        return f"Poset({self.m} elements, {len(self.covers)} covers)"


def independence_poset(dag):
    """The poset of all tops of the graph, ordered by upward flips.

    Elements are in canonical enumeration order; the covers of each top t
    are exactly the flips at the members of its U-component, so no
    transitive reduction is needed (the Poset constructor double-checks).
    """
    tops = enumerate_tops(dag)
    index = {t: i for i, t in enumerate(tops)}
    covers = []
    for i, t in enumerate(tops):
        for g in bits(t.up):
            covers.append((i, index[flip(dag, t, g)]))
    assert len(covers) == len(set(covers)), "duplicate cover from two flips"
    return Poset(tops, covers)


class LatticeCheck:
    """Result of is_lattice: truthy iff every pair has a join and a meet.

    When the poset is a lattice, join and meet hold full m-by-m index
    tables.  Otherwise witness records the first offending pair as
    (kind, x, y, minimal-bound indices).
    """

    __slots__ = ("ok", "join", "meet", "witness")

    def __init__(self, ok, join, meet, witness):
        self.ok = ok
        self.join = join
        self.meet = meet
        self.witness = witness

    def __bool__(self):
        return self.ok


def _bound_table(p, rows, kind):
    # rows = above for joins, below for meets.  Returns (table, witness).
    m = p.m
    table = [[0] * m for _ in range(m)]
    for x in range(m):
        table[x][x] = x
    for x in range(m):
        for y in range(x + 1, m):
            cand = rows[x] & rows[y]
            best = -1
            for z in bits(cand):
                if cand & ~rows[z] == 0:
                    best = z
                    break
            if best < 0:
                opposite = p.below if rows is p.above else p.above
                extremal = [z for z in bits(cand)
                            if opposite[z] & cand == 1 << z]
                return None, (kind, x, y, extremal)
            table[x][y] = table[y][x] = best
    return table, None


def is_lattice(p):
    """Check joins and meets for every pair of elements.

    Returns a LatticeCheck; use it as a bool, or read the join/meet tables
    when it holds.  Requires a unique minimum and maximum.
    """
    if p.minimum is None or p.maximum is None:
        raise NoBounds("poset lacks a unique minimum or maximum")
    if p._lattice is not None:
        return p._lattice
    join, witness = _bound_table(p, p.above, "join")
    if witness is None:
        meet, witness2 = _bound_table(p, p.below, "meet")
    else:
        meet, witness2 = None, None
    result = LatticeCheck(witness is None and witness2 is None, join,
                          meet, witness or witness2)
    if not result.ok:
        result.join = result.meet = None
    p._lattice = result
    return result


def mobius(p):
    """Full Möbius matrix: mu[x][y] for x <= y, zero elsewhere.

    Standard recursion over intervals; the row-sum identity (rows summing
    to zero short of the maximum) is asserted when a maximum exists.
    """
    m = p.m
    mu = [[0] * m for _ in range(m)]
    for x in range(m):
        row = mu[x]
        row[x] = 1
        for y in p.order:
            if y != x and p.leq(x, y):
                interval = p.above[x] & p.below[y] & ~(1 << y)
                row[y] = -sum(row[z] for z in bits(interval))
        if p.maximum is not None:
            total = sum(row[y] for y in bits(p.above[x]))
            assert total == (1 if x == p.maximum else 0), "Möbius row sum"
    return mu


def longest_chain(p):
    """Length (number of covers) of a longest chain."""
    best = [0] * p.m
    for y in p.order:
        for x in p.down_adj[y]:
            if best[x] + 1 > best[y]:
                best[y] = best[x] + 1
    return max(best, default=0)


def dual(p):
    """The same elements with all covers reversed."""
    return Poset(p.payloads, [(y, x) for x, y in p.covers])


def irreducibles(p):
    """Indices of join-irreducibles (cover exactly one element) and
    meet-irreducibles (covered by exactly one), as a pair of lists."""
    jirr = [i for i in range(p.m) if len(p.down_adj[i]) == 1]
    mirr = [i for i in range(p.m) if len(p.up_adj[i]) == 1]
    return jirr, mirr


def _poset_signatures(p):
    sig = [(p.below[i].bit_count(), p.above[i].bit_count(),
            len(p.down_adj[i]), len(p.up_adj[i])) for i in range(p.m)]
    for _ in range(3):
        fresh = [(sig[i],
                  tuple(sorted(sig[j] for j in p.up_adj[i])),
                  tuple(sorted(sig[j] for j in p.down_adj[i])))
                 for i in range(p.m)]
        # Re-hash to keep the tuples from growing round over round.
        canon = {s: k for k, s in enumerate(sorted(set(fresh)))}
        sig = [canon[s] for s in fresh]
    return sig


def poset_isomorphic(p, q):
    """True iff an order-preserving bijection exists between p and q."""
    if max(p.m, q.m) > POSET_ISO_LIMIT:
        raise TooLarge(f"poset isomorphism guard is {POSET_ISO_LIMIT} elements")
    if p.m != q.m or len(p.covers) != len(q.covers):
        return False
    sp = _poset_signatures(p)
    sq = _poset_signatures(q)
    if sorted(sp) != sorted(sq):
        return False

    m = p.m
    freq = {}
    for s in sp:
        freq[s] = freq.get(s, 0) + 1
    todo = sorted(range(m), key=lambda i: (freq[sp[i]], i))
    cand = [[j for j in range(m) if sq[j] == sp[i]] for i in range(m)]
    img = [-1] * m
    used = [False] * m

    def rec(k):
        if k == m:
            return True
        x = todo[k]
        for y in cand[x]:
            if used[y]:
                continue
            if all((p.leq(x, todo[j]) == q.leq(y, img[todo[j]]))
                   and (p.leq(todo[j], x) == q.leq(img[todo[j]], y))
                   for j in range(k)):
                img[x] = y
                used[y] = True
                if rec(k + 1):
                    return True
                used[y] = False
                img[x] = -1
        return False

    return rec(0)


def poset_to_json(p, payload_json):
    """Poset JSON: {"elements": [...], "covers": [[x, y], ...]}.

    payload_json maps each payload to its JSON value.
    """
    return {
        "elements": [payload_json(pl) for pl in p.payloads],
        "covers": [[x, y] for x, y in p.covers],
    }


def poset_to_dot(p, payload_parts):
    """Hasse diagram in DOT, drawn bottom-up.

    payload_parts maps a payload to a (left, right) pair of strings; the
    left half is rendered blue and the right orange, matching the coloring
    of D and U (or X and Y) throughout.
    """
    lines = ["digraph hasse {", "  rankdir=BT;",
             '  node [shape=box, fontname="monospace"];']
    for i, pl in enumerate(p.payloads):
        left, right = payload_parts(pl)
        label = (f'<<font color="blue">{_dot_escape(left)}</font>'
                 f' | <font color="orange">{_dot_escape(right)}</font>>')
        lines.append(f"  n{i} [label={label}];")
    for x, y in p.covers:
        lines.append(f"  n{x} -> n{y};")
    lines.append("}")
    return "\n".join(lines) + "\n"


def _dot_escape(text):
    return (text.replace("&", "&amp;").replace("<", "&lt;")
            .replace(">", "&gt;"))
