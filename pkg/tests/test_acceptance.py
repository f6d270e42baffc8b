"""End-to-end checks of the headline results, one test per claim.

Each test states a concrete expected value and a time budget; run with -v
to get one pass/fail line per claim.
"""

from contextlib import contextmanager
from time import perf_counter

from indposet import (Top, dual, independence_poset, is_lattice, is_trim,
                      longest_chain, mask_of, mobius, poset_isomorphic,
                      reverse_all, row, toggle_graph)
from indposet.catalog import (GRID3, NU5, P3LIN, P4BL, P4BR, P4LIN, P4TR,
                              P5LIN, P6LIN, TAM6)
from indposet.cli import main
from indposet.digraph import digraph_isomorphic
from indposet.extremal import galois_graph
from indposet.tops import enumerate_tops, toggle_top


@contextmanager
def budget(seconds):
    start = perf_counter()
    yield
    assert perf_counter() - start < seconds


def test_path_orientation_profiles():
    with budget(1.0):
        posets = {}
        for name, d in (("lin", P4LIN), ("tr", P4TR), ("bl", P4BL),
                        ("br", P4BR)):
            p = independence_poset(d)
            posets[name] = p
            assert p.m == 8
        assert [bool(is_lattice(posets[k]))
                for k in ("lin", "tr", "bl", "br")] == [False, True, True,
                                                        True]
        for k in ("tr", "bl", "br"):
            assert is_trim(posets[k])

        p = posets["bl"]
        assert longest_chain(p) == 4
        rank = [0] * p.m
        for y in p.order:
            for x in p.down_adj[y]:
                rank[y] = max(rank[y], rank[x] + 1)
        assert all(rank[y] == rank[x] + 1 for x, y in p.covers)
        chk = is_lattice(p)
        for x in range(p.m):
            for y in range(p.m):
                for z in range(p.m):
                    assert chk.meet[x][chk.join[y][z]] \
                        == chk.join[chk.meet[x][y]][chk.meet[x][z]]


def test_longest_chain_on_the_five_path():
    with budget(1.0):
        assert longest_chain(independence_poset(P5LIN)) == 6


def test_mobius_maximum_on_the_six_path():
    with budget(5.0):
        mu = mobius(independence_poset(P6LIN))
        assert max(v for row_ in mu for v in row_) == 4


def test_tamari_tops_trim_and_galois():
    with budget(1.0):
        p = independence_poset(TAM6)
        assert p.m == 14
        assert is_trim(p)
        assert digraph_isomorphic(galois_graph(p), TAM6)


def test_grid_rowmotion_image():
    start = Top(mask_of(GRID3, ["(0,0)", "(0,2)"]),
                mask_of(GRID3, ["(2,0)", "(1,1)", "(2,2)"]))
    want = Top(mask_of(GRID3, ["(1,0)", "(1,2)", "(2,1)"]),
               mask_of(GRID3, ["(0,0)", "(0,2)"]))
    for method in ("global", "slow", "deform"):
        assert row(GRID3, start, method=method) == want


def test_deformotion_letter_permutation():
    def top(downs, ups):
        return Top(mask_of(P3LIN, downs), mask_of(P3LIN, ups))

    letters = {"a": top([], ["1", "3"]), "b": top(["1"], ["2"]),
               "c": top(["2"], ["3"]), "d": top(["3"], ["1"]),
               "e": top(["1", "3"], [])}
    assert set(letters.values()) == set(enumerate_tops(P3LIN))
    want = {"a": "e", "b": "d", "c": "b", "d": "c", "e": "a"}

    graphs = [P3LIN]
    for label in ("3", "2", "1"):
        d = graphs[-1]
        graphs.append(toggle_graph(d, d.labels.index(label)))
    assert graphs[-1] == P3LIN

    for name, t in letters.items():
        cur = t
        for d, label in zip(graphs, ("3", "2", "1")):
            cur = toggle_top(d, cur, d.labels.index(label))
        assert cur == letters[want[name]]


def test_self_dual_poset_on_a_one_way_graph():
    p = independence_poset(NU5)
    assert poset_isomorphic(p, dual(p))
    assert not digraph_isomorphic(NU5, reverse_all(NU5))


def test_exhaustive_sweep_over_all_small_graphs(capsys):
    with budget(60.0):
        assert main(["verify", "--max-n", "4"]) == 0
    out = capsys.readouterr().out
    assert "n=4: 543 graphs" in out
    assert out.rstrip().endswith("all 11 properties pass on 572 graphs")


def test_sampled_sweep_over_larger_graphs(capsys):
    with budget(120.0):
        assert main(["verify", "--max-n", "6", "--sample", "500",
                     "--seed", "0"]) == 0
    out = capsys.readouterr().out
    assert out.rstrip().endswith("all 11 properties pass on 500 graphs")
