import pytest
from hypothesis import given

from conftest import small_dags
from indposet import (Mop, NotExtremal, NotLattice, NotTrim, Poset, Top,
                      TooLarge, closure, cover_labels, dag_new,
                      enumerate_mops, enumerate_tops, five_set_witness,
                      galois_graph, independence_poset, irreducible_pairing,
                      is_extremal, is_lattice, is_trim, mask_of,
                      mop_from_json, mop_lattice, mop_to_json, phi, theta,
                      witness_to_json)
from indposet.catalog import GRID3, NU5, P4BL, P4BR, P4LIN, P4TR, TAM6
from indposet.digraph import digraph_isomorphic
from indposet.extremal import _closed

PENTAGON = Poset("0abc1", [(0, 1), (1, 2), (0, 3), (2, 4), (3, 4)])
DIAMOND3 = Poset("0abc1", [(0, 1), (0, 2), (0, 3), (1, 4), (2, 4), (3, 4)])


def _mask(d, labels):
    return mask_of(d, labels)


def test_closure():
    assert closure(P4LIN, _mask(P4LIN, ["2"]), "right") \
        == _mask(P4LIN, ["3", "4"])
    assert closure(P4LIN, _mask(P4LIN, ["3", "4"]), "left") \
        == _mask(P4LIN, ["1", "2"])
    assert closure(P4LIN, 0, "right") == _mask(P4LIN, ["1", "2", "3", "4"])
    with pytest.raises(ValueError):
        closure(P4LIN, 0, "up")


def test_enumerate_mops_counts():
    for d, count in ((P4LIN, 9), (P4BL, 8), (TAM6, 14), (NU5, 11),
                     (GRID3, 88)):
        mops = enumerate_mops(d)
        assert len(mops) == count
        full = (1 << d.n) - 1
        assert mops[0] == Mop(0, full) and mops[-1] == Mop(full, 0)
        assert all(a.x < b.x for a, b in zip(mops, mops[1:]))
        for m in mops:
            assert m.y == closure(d, m.x, "right")
            assert m.x == closure(d, m.y, "left")


def test_mops_past_the_subset_sweep():
    # sixteen vertices takes the lectic route; sweep every subset to check
    labels = [str(v + 1) for v in range(16)]
    d = dag_new(labels, [(labels[v + 1], labels[v]) for v in range(15)])
    brute = [x for x in range(1 << 16) if _closed(d, x) == x]
    assert [m.x for m in enumerate_mops(d)] == brute


def test_enumerate_mops_guard():
    d = dag_new([str(v) for v in range(26)], [])
    with pytest.raises(TooLarge):
        enumerate_mops(d)


def test_mop_lattice_shapes():
    for d, m, covers in ((P4LIN, 9, 13), (P4BL, 8, 10), (TAM6, 14, 21),
                         (NU5, 11, 16)):
        lat = mop_lattice(d)
        assert lat.m == m and len(lat.covers) == covers
        full = (1 << d.n) - 1
        assert lat.payloads[lat.minimum] == Mop(0, full)
        assert lat.payloads[lat.maximum] == Mop(full, 0)


def test_extremal_and_trim_verdicts():
    for d, trim in ((P4LIN, False), (P4BL, True), (TAM6, True),
                    (NU5, False), (GRID3, False)):
        lat = mop_lattice(d)
        assert is_extremal(lat)
        assert is_trim(lat) == trim
    assert is_extremal(PENTAGON) and is_trim(PENTAGON)
    assert not is_extremal(DIAMOND3)
    with pytest.raises(NotLattice):
        is_extremal(independence_poset(P4LIN))


def test_irreducible_pairing_on_a_trim_lattice():
    lat = mop_lattice(P4BL)
    pairs = irreducible_pairing(lat)
    assert len(pairs) == 4

    def mop(xs, ys):
        return Mop(_mask(P4BL, xs), _mask(P4BL, ys))

    assert {(lat.payloads[j], lat.payloads[m]) for j, m in pairs} == {
        (mop(["1"], ["2", "3", "4"]), mop(["3", "4"], ["1", "2"])),
        (mop(["3"], ["1", "2", "4"]), mop(["1"], ["2", "3", "4"])),
        (mop(["1", "2", "3"], ["4"]), mop(["1", "3", "4"], ["2"])),
        (mop(["3", "4"], ["1", "2"]), mop(["1", "2", "3"], ["4"])),
    }
    with pytest.raises(NotExtremal):
        irreducible_pairing(DIAMOND3)


def test_cover_labels_match_the_galois_graph_tops():
    for d in (P4BL, TAM6):
        lat = mop_lattice(d)
        labels = cover_labels(lat)
        assert labels[lat.minimum][0] == frozenset()
        assert labels[lat.maximum][1] == frozenset()
        as_masks = {(sum(1 << g for g in dd), sum(1 << g for g in uu))
                    for dd, uu in labels}
        assert as_masks == {(t.down, t.up)
                            for t in enumerate_tops(galois_graph(lat))}
    with pytest.raises(NotTrim):
        cover_labels(mop_lattice(NU5))


def test_galois_graph_recovers_the_graph():
    for d in (P4BL, P4TR, P4BR, TAM6):
        assert digraph_isomorphic(galois_graph(mop_lattice(d)), d)


def test_phi_examples():
    full = _mask(P4BL, ["1", "2", "3", "4"])
    assert phi(P4BL, Mop(0, full)) == Top(0, _mask(P4BL, ["1", "3"]))
    assert phi(P4BL, Mop(_mask(P4BL, ["1"]), _mask(P4BL, ["2", "3", "4"]))) \
        == Top(_mask(P4BL, ["1"]), _mask(P4BL, ["3"]))
    assert phi(P4BL, Mop(_mask(P4BL, ["3"]), _mask(P4BL, ["1", "2", "4"]))) \
        == Top(_mask(P4BL, ["3"]), _mask(P4BL, ["1", "4"]))
    with pytest.raises(NotTrim):
        phi(P4LIN, Mop(0, _mask(P4LIN, ["1", "2", "3", "4"])))


def test_phi_and_theta_invert_on_trim_graphs():
    for d in (P4BL, P4TR, P4BR, TAM6):
        lat = mop_lattice(d)
        tops = enumerate_tops(d)
        assert sorted(phi(d, m) for m in lat.payloads) == sorted(tops)
        for m in lat.payloads:
            assert theta(d, phi(d, m)) == m
        for t in tops:
            assert phi(d, theta(d, t)) == t


def test_theta_orders_disagree_off_lattices():
    tops = enumerate_tops(P4LIN)
    mops = set(enumerate_mops(P4LIN))
    img1 = {theta(P4LIN, t) for t in tops}
    img2 = {theta(P4LIN, t, order="t2_then_t1") for t in tops}
    assert len(img1) == len(img2) == len(tops) == 8
    assert img1 != img2
    assert mops - img1 == {Mop(_mask(P4LIN, ["3", "4"]), _mask(P4LIN, ["1"]))}
    assert mops - img2 == {Mop(_mask(P4LIN, ["4"]), _mask(P4LIN, ["1", "2"]))}
    with pytest.raises(ValueError):
        theta(P4LIN, tops[0], order="sideways")


@given(small_dags(max_n=5))
def test_theta_is_injective_into_the_mops(d):
    tops = enumerate_tops(d)
    mops = set(enumerate_mops(d))
    for order in ("t1_then_t2", "t2_then_t1"):
        image = {theta(d, t, order=order) for t in tops}
        assert len(image) == len(tops) and image <= mops
    if is_lattice(independence_poset(d)):
        assert {theta(d, t) for t in tops} == mops
        assert all(theta(d, t) == theta(d, t, order="t2_then_t1")
                   for t in tops)


def test_five_set_witness_examples():
    assert witness_to_json(P4LIN, five_set_witness(P4LIN)) == {
        "X1": ["1"], "X2": ["2"], "X3": ["3"], "X4": ["4"], "Z": []}
    assert witness_to_json(NU5, five_set_witness(NU5)) == {
        "X1": ["1"], "X2": ["2", "3"], "X3": ["4"], "X4": ["5"], "Z": []}
    assert five_set_witness(P4BL) is None
    assert five_set_witness(TAM6) is None
    with pytest.raises(TooLarge):
        five_set_witness(dag_new([str(v) for v in range(13)], []))


@given(small_dags(max_n=5))
def test_witness_found_exactly_off_lattices(d):
    w = five_set_witness(d)
    assert (w is None) == bool(is_lattice(independence_poset(d)))


def test_mop_json_round_trip():
    mop = Mop(_mask(P4LIN, ["1", "2"]), _mask(P4LIN, ["3", "4"]))
    obj = mop_to_json(P4LIN, mop)
    assert obj == {"X": ["1", "2"], "Y": ["3", "4"]}
    assert mop_from_json(P4LIN, obj) == mop
    with pytest.raises(ValueError):
        mop_from_json(P4LIN, {"X": ["1"]})
