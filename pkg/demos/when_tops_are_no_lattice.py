"""What breaks, and what survives, when the tops do not form a lattice.

Run as: python3 demos/when_tops_are_no_lattice.py
"""

from indposet import (dual, enumerate_mops, enumerate_tops, five_set_witness,
                      independence_poset, is_lattice, labels_of,
                      poset_isomorphic, reverse_all, theta, witness_to_json)
from indposet.catalog import NU5
from indposet.digraph import digraph_isomorphic


def main():
    d = NU5
    print(f"graph: {d.n} vertices, edges " +
          ", ".join(f"{d.labels[a]}->{d.labels[b]}"
                    for a in range(d.n) for b in range(d.n)
                    if d.out[a] >> b & 1))

    p = independence_poset(d)
    check = is_lattice(p)
    print(f"\ntop poset: {p.m} elements, lattice: {bool(check)}")
    kind, x, y, bounds = check.witness
    print(f"  elements {x} and {y} have no {kind}; minimal bounds: {bounds}")

    w = five_set_witness(d)
    print(f"a five-set partition certifies this: {witness_to_json(d, w)}")

    tops = enumerate_tops(d)
    mops = enumerate_mops(d)
    print(f"\n{len(tops)} tops embed into {len(mops)} mops, strictly fewer")
    img1 = {theta(d, t) for t in tops}
    img2 = {theta(d, t, order="t2_then_t1") for t in tops}
    print("the two theta compositions stay injective but disagree here:")
    for mop in sorted(set(mops) - img1):
        print(f"  only t2-then-t1 reaches X={labels_of(d, mop.x)}")
    for mop in sorted(set(mops) - img2):
        print(f"  only t1-then-t2 reaches X={labels_of(d, mop.x)}")

    print(f"\nthe poset is isomorphic to its own dual: "
          f"{poset_isomorphic(p, dual(p))}")
    print(f"yet the graph is not isomorphic to its reversal: "
          f"{not digraph_isomorphic(d, reverse_all(d))}")


if __name__ == "__main__":
    main()
