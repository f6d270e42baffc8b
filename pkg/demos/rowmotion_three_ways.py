"""Rowmotion computed globally, by flips, and by toggles.

Run as: python3 demos/rowmotion_three_ways.py
"""

from indposet import (labels_of, linear_extension, min_top, row, row_orbits,
                      toggle_top, toggle_graph, flip)
from indposet.catalog import GRID3, P3LIN


def fmt(dag, t):
    def part(mask):
        return "{" + ",".join(labels_of(dag, mask)) + "}"
    return f"(D={part(t.down)}, U={part(t.up)})"


def main():
    print("orbits of rowmotion on the three-vertex path:")
    for orbit in row_orbits(P3LIN):
        chain = " -> ".join(fmt(P3LIN, t) for t in orbit.tops)
        print(f"  length {orbit.length}: {chain}")

    d = GRID3
    start = min_top(d)
    target = row(d, start)
    print(f"\non the 3x3 grid, rowmotion sends\n  {fmt(d, start)}"
          f"\nto\n  {fmt(d, target)}")

    print("\nslow motion reaches the same top by flipping along a "
          "linear extension:")
    cur = start
    for g in linear_extension(d):
        nxt = flip(d, cur, g)
        if nxt != cur:
            print(f"  flip {d.labels[g]}: {fmt(d, nxt)}")
        cur = nxt
    print(f"  slow motion agrees: {cur == target}")

    print("\ndeformotion toggles extremal vertices in the reverse "
          "extension, moving through a chain of graphs:")
    cur, graph = start, d
    for g in reversed(linear_extension(d)):
        cur = toggle_top(graph, cur, g)
        graph = toggle_graph(graph, g)
    print(f"  the graph returns to itself: {graph == d}")
    print(f"  deformotion agrees: {cur == target}")


if __name__ == "__main__":
    main()
