import pytest
from hypothesis import given, settings

from conftest import small_dags
from indposet import (NotIndependent, NotOrthogonal, Top, complete_down,
                      complete_up, dag_new, enumerate_tops, flip, flip_tree,
                      is_independent, is_orthogonal, is_tight, loose_move,
                      mask_of, max_top, min_top, row, row_orbits,
                      toggle_indep, toggle_top, top_from_json, top_to_json)
from indposet.catalog import CATALOG, P3LIN, P4LIN, TAM6
from indposet.digraph import independent_sets_bruteforce


def _mask(d, labels):
    return mask_of(d, labels)


def test_is_independent():
    assert is_independent(P4LIN, _mask(P4LIN, ["1", "3"]))
    assert not is_independent(P4LIN, _mask(P4LIN, ["1", "2"]))
    assert is_independent(P4LIN, 0)


def test_is_orthogonal():
    # the edge 3 -> 2 runs from U to D, which orthogonality allows
    assert is_orthogonal(P4LIN, _mask(P4LIN, ["2"]), _mask(P4LIN, ["3"]))
    assert not is_orthogonal(P4LIN, _mask(P4LIN, ["3"]), _mask(P4LIN, ["2"]))
    assert not is_orthogonal(P4LIN, _mask(P4LIN, ["1"]), _mask(P4LIN, ["1"]))
    with pytest.raises(NotIndependent):
        is_orthogonal(P4LIN, _mask(P4LIN, ["1", "2"]), 0)


def test_is_tight():
    assert is_tight(P4LIN, _mask(P4LIN, ["2"]), _mask(P4LIN, ["3"]))
    assert not is_tight(P4LIN, _mask(P4LIN, ["1"]), _mask(P4LIN, ["3"]))
    with pytest.raises(NotOrthogonal):
        is_tight(P4LIN, _mask(P4LIN, ["3"]), _mask(P4LIN, ["2"]))


def test_loose_move_names_the_first_perturbation():
    assert loose_move(P4LIN, _mask(P4LIN, ["1"]), _mask(P4LIN, ["3"])) \
        == "1 in D can rise to 2"
    assert loose_move(P4LIN, 0, _mask(P4LIN, ["1"])) \
        == "vertex 3 can join D"
    assert loose_move(P4LIN, _mask(P4LIN, ["2"]), _mask(P4LIN, ["3"])) is None


@given(small_dags(max_n=5))
def test_enumeration_agrees_with_both_completion_routes(d):
    ind = independent_sets_bruteforce(d)
    tops = set(enumerate_tops(d))
    assert {complete_up(d, members) for members in ind} == tops
    assert {complete_down(d, members) for members in ind} == tops
    assert all(is_tight(d, t.down, t.up) for t in tops)
    # every independent set appears exactly once as a down part and exactly
    # once as an up part
    assert sorted(t.down for t in tops) == sorted(ind)
    assert sorted(t.up for t in tops) == sorted(ind)


def test_tightness_alone_does_not_certify_membership():
    # on this star every single-element move out of (D={1,2}, U={4,5}) is
    # blocked by the opposite component, so the pair passes is_tight, yet
    # it is not a top: its down part completes upward to a different partner
    star = dag_new(["1", "2", "3", "4", "5"],
                   [("3", "1"), ("3", "2"), ("4", "3"), ("5", "3")])
    down = mask_of(star, ["1", "2"])
    up = mask_of(star, ["4", "5"])
    assert is_tight(star, down, up)
    assert Top(down, up) not in set(enumerate_tops(star))
    assert complete_up(star, down) == Top(down, mask_of(star, ["3"]))


@given(small_dags(max_n=5))
def test_completions_produce_tops(d):
    tops = set(enumerate_tops(d))
    for members in independent_sets_bruteforce(d):
        t = complete_up(d, members)
        assert t.down == members and t in tops
        s = complete_down(d, members)
        assert s.up == members and s in tops


def test_min_and_max_top():
    assert min_top(P4LIN) == Top(0, _mask(P4LIN, ["1", "3"]))
    assert max_top(P4LIN) == Top(_mask(P4LIN, ["2", "4"]), 0)


def test_flip_examples():
    bottom = min_top(P3LIN)
    assert flip(P3LIN, bottom, 0) == Top(_mask(P3LIN, ["1"]),
                                         _mask(P3LIN, ["2"]))
    # flipping a vertex in neither component leaves the top alone
    assert flip(P3LIN, bottom, 1) == bottom


@given(small_dags(max_n=5))
def test_flip_is_an_involution(d):
    for t in enumerate_tops(d):
        for g in range(d.n):
            assert flip(d, flip(d, t, g), g) == t


def test_flip_tree_spans_every_top():
    tops, edges = flip_tree(TAM6)
    assert len(tops) == 14 and len(edges) == 13
    assert tops[0] == min_top(TAM6)
    for parent, child, g in edges:
        assert flip(TAM6, tops[parent], g) == tops[child]


def test_toggle_indep():
    # toggling 3 into the set evicts nothing on the path 3 -> 2 -> 1
    assert toggle_indep(P3LIN, 0, 2) == _mask(P3LIN, ["3"])
    # toggling 2 cannot enter while 3 is present
    assert toggle_indep(P3LIN, _mask(P3LIN, ["3"]), 1) == _mask(P3LIN, ["3"])
    # toggling a member removes it
    assert toggle_indep(P3LIN, _mask(P3LIN, ["3"]), 2) == 0


def test_rowmotion_methods_agree_on_the_catalog():
    for d in CATALOG.values():
        if d.n > 6:
            continue
        for t in enumerate_tops(d):
            image = row(d, t)
            assert row(d, t, method="slow") == image
            assert row(d, t, method="deform") == image
    with pytest.raises(ValueError):
        row(P3LIN, min_top(P3LIN), method="sideways")


def test_rowmotion_swaps_components_around():
    t = Top(_mask(P3LIN, ["1"]), _mask(P3LIN, ["2"]))
    assert row(P3LIN, t).up == t.down


def test_row_orbit_lengths():
    frozen = {"p3lin": [2, 3], "p4lin": [5, 3], "p4tr": [5, 3],
              "p4bl": [3, 5], "p4br": [5, 3], "tam6": [2, 8, 4],
              "nu5": [10]}
    for name, lengths in frozen.items():
        d = CATALOG[name]
        orbits = row_orbits(d)
        assert [o.length for o in orbits] == lengths
        covered = [t for o in orbits for t in o.tops]
        assert sorted(covered) == sorted(enumerate_tops(d))


@settings(max_examples=40)
@given(small_dags(max_n=5))
def test_rowmotion_is_a_bijection(d):
    tops = enumerate_tops(d)
    assert sorted(row(d, t) for t in tops) == sorted(tops)


def test_top_json_round_trip():
    for t in enumerate_tops(P4LIN):
        obj = top_to_json(P4LIN, t)
        assert set(obj) == {"D", "U"}
        assert top_from_json(P4LIN, obj) == t
    with pytest.raises(ValueError):
        top_from_json(P4LIN, {"D": []})
