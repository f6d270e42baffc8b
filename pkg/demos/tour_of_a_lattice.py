"""Walk through the tam6 graph, whose tops form a trim lattice.

Run as: python3 demos/tour_of_a_lattice.py
"""

from indposet import (cover_labels, enumerate_mops, galois_graph,
                      independence_poset, irreducible_pairing, is_lattice,
                      is_trim, labels_of, mop_lattice, phi, theta)
from indposet.catalog import TAM6
from indposet.digraph import digraph_isomorphic


def fmt(dag, mask):
    return "{" + ",".join(labels_of(dag, mask)) + "}"


def main():
    d = TAM6
    print(f"graph: {d.n} vertices, edges " +
          ", ".join(f"{d.labels[a]}->{d.labels[b]}"
                    for a in range(d.n) for b in range(d.n)
                    if d.out[a] >> b & 1))

    p = independence_poset(d)
    print(f"\nits tops form a poset with {p.m} elements "
          f"and {len(p.covers)} covers")
    check = is_lattice(p)
    print(f"every pair has a join and a meet: {bool(check)}")
    print(f"the lattice is trim: {is_trim(p)}")

    mops = enumerate_mops(d)
    print(f"\nmaximal orthogonal pairs: {len(mops)}, "
          f"matching the top count exactly")
    lat = mop_lattice(d)
    for mop in lat.payloads[:3]:
        t = phi(d, mop)
        back = theta(d, t)
        print(f"  phi (X={fmt(d, mop.x)}, Y={fmt(d, mop.y)}) "
              f"-> (D={fmt(d, t.down)}, U={fmt(d, t.up)}), "
              f"theta sends it back: {back == mop}")

    pairs = irreducible_pairing(lat)
    print(f"\nthe {len(pairs)} join-irreducibles pair off with "
          f"the {len(pairs)} meet-irreducibles:")
    for j, m in pairs:
        pj, pm = lat.payloads[j], lat.payloads[m]
        print(f"  X={fmt(d, pj.x)} <-> X={fmt(d, pm.x)}")

    labels = cover_labels(lat)
    dmin, umin = labels[lat.minimum]
    print(f"\ncover labels of the minimum: D={sorted(dmin)}, "
          f"U={sorted(umin)}")

    gg = galois_graph(lat)
    print(f"the galois graph of the lattice has {gg.n} vertices and is "
          f"isomorphic to the original graph: "
          f"{digraph_isomorphic(gg, d)}")


if __name__ == "__main__":
    main()
