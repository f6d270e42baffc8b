"""Named example graphs used throughout the tests and demos.

Four orientations of the four-vertex path, directed paths on 3 to 6
vertices, a 3x3 grid, a six-vertex graph whose tops form the
fourteen-element Tamari lattice, and a five-vertex graph whose top poset
is self-dual even though the graph itself is not.  CATALOG maps
lowercase names to the graphs.
"""

from .digraph import dag_new


def _path(n):
    labels = [str(i) for i in range(1, n + 1)]
    return dag_new(labels, [(labels[i + 1], labels[i]) for i in range(n - 1)])


P3LIN = _path(3)
P4LIN = _path(4)
P5LIN = _path(5)
P6LIN = _path(6)

P4TR = dag_new(["1", "2", "3", "4"], [("2", "1"), ("3", "2"), ("3", "4")])
P4BL = dag_new(["1", "2", "3", "4"], [("2", "1"), ("2", "3"), ("4", "3")])
P4BR = dag_new(["1", "2", "3", "4"], [("1", "2"), ("3", "2"), ("4", "3")])


def _grid(size):
    labels = [f"({c},{r})" for c in range(size) for r in range(size)]
    edges = []
    for c in range(size):
        for r in range(size):
            if c + 1 < size:
                edges.append((f"({c},{r})", f"({c + 1},{r})"))
            if r - 1 >= 0:
                edges.append((f"({c},{r})", f"({c},{r - 1})"))
    return dag_new(labels, edges)


GRID3 = _grid(3)

TAM6 = dag_new(
    ["1", "2", "3", "4", "5", "6"],
    [("5", "4"), ("5", "2"), ("6", "4"), ("4", "1"), ("2", "1"),
     ("3", "2"), ("4", "2"), ("5", "3"), ("6", "5")],
)

NU5 = dag_new(
    ["1", "2", "3", "4", "5"],
    [("3", "1"), ("3", "2"), ("4", "2"), ("2", "1"), ("4", "3"), ("5", "4")],
)

CATALOG = {
    "p3lin": P3LIN,
    "p4lin": P4LIN,
    "p4tr": P4TR,
    "p4bl": P4BL,
    "p4br": P4BR,
    "p5lin": P5LIN,
    "p6lin": P6LIN,
    "grid3": GRID3,
    "tam6": TAM6,
    "nu5": NU5,
}
