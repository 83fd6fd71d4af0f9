import itertools
from collections import Counter

import pytest

from conftest import half
from grand_antiprism.golden import SIGMA, TAU
from grand_antiprism.icosian import (
    B, C, EDGE_SQ, ClosureDivergedError, NotInGroupError, build_icosian_group, classify_table1,
    conjugacy_classes, default_group, element_order, icosahedron_around_one, icosahedron_of,
    neighbours_at, rewriting_identities, listed_conjugacy_classes,
)
from grand_antiprism.quaternion import E1, E2, E3, Q_ONE, GoldenQuaternion, q_conjugate


def textbook_icosians() -> set:
    """24 Hurwitz units and the 96 even permutations of ½(0, ±1, ±σ, ±τ)."""
    out = set()
    for i in range(4):
        for s in (1, -1):
            v = [0, 0, 0, 0]
            v[i] = s
            out.add(GoldenQuaternion(*v))
    for signs in itertools.product((1, -1), repeat=4):
        out.add(half(*signs))
    base = (0, 1, SIGMA, TAU)
    for perm in itertools.permutations(range(4)):
        inversions = sum(perm[i] > perm[j] for i in range(4) for j in range(i + 1, 4))
        if inversions % 2:
            continue
        for signs in itertools.product((1, -1), repeat=3):
            vals = [base[0], base[1] * signs[0], base[2] * signs[1], base[3] * signs[2]]
            out.add(half(*(vals[perm[k]] for k in range(4))))
    return out


def test_group_equals_textbook_set():
    g = default_group()
    assert len(g) == 120
    assert set(g.elements) == textbook_icosians()
    assert list(g.elements) == sorted(g.elements)


def test_generators():
    assert B == half(TAU, SIGMA, 1, 0) and C == half(TAU, -SIGMA, 1, 0)
    assert B.norm_sq() == 1 and C.norm_sq() == 1
    assert element_order(B) == 10 and element_order(C) == 10


def test_closure_cap():
    with pytest.raises(ClosureDivergedError):
        build_icosian_group(cap=50)
    # a non-unit generator never closes
    with pytest.raises(ClosureDivergedError):
        build_icosian_group(generators=(B.scale(2),), cap=200)


def test_not_in_group():
    g = default_group()
    x = GoldenQuaternion(0, 1, 1, 0)
    assert x not in g
    with pytest.raises(NotInGroupError):
        g.position(x)
    with pytest.raises(NotInGroupError):
        element_order(x)
    with pytest.raises(NotInGroupError):
        icosahedron_of(x)


def test_classes_by_real_part():
    table = classify_table1()
    assert [c.size for c in table.classes] == [1, 1, 12, 12, 12, 12, 20, 20, 30]
    assert [c.order for c in table.classes] == [1, 2, 10, 5, 10, 5, 6, 3, 4]
    assert table.by_label("30(1)").real_part == 0
    assert table.by_real_part(TAU / 2).label == "12(1)+"
    assert table.label_of(default_group().position(Q_ONE)) == "1"
    with pytest.raises(KeyError):
        table.by_label("nope")


def test_real_part_blocks_are_conjugacy_classes():
    table = classify_table1()
    assert {c.members for c in table.classes} == set(conjugacy_classes())


def test_literal_class_list():
    g = default_group()
    table = classify_table1()
    lit = listed_conjugacy_classes()
    for label, (order, members) in lit.items():
        assert len(set(members)) == len(members)
        cls = table.by_label(label)
        assert {g.position(q) for q in members} == cls.members
        assert cls.order == order


def test_class_orders_by_brute_force():
    g = default_group()
    orders = Counter(element_order(q) for q in g)
    assert orders == {1: 1, 2: 1, 3: 20, 4: 30, 5: 24, 6: 20, 10: 24}


def test_rewriting_identities():
    ids = rewriting_identities()
    assert len(ids) == 5 and all(ids.values())


def test_icosahedron_around_one():
    ico = icosahedron_around_one()
    assert ico == icosahedron_of(Q_ONE) == set(neighbours_at(Q_ONE, default_group()))
    assert len(ico) == 12
    assert q_conjugate(B) in ico and E1 not in ico


def test_every_vertex_has_twelve_neighbours():
    g = default_group()
    assert EDGE_SQ == SIGMA * SIGMA
    for q in g:
        nb = neighbours_at(q, g)
        assert len(nb) == 12
        assert set(nb) == icosahedron_of(q)


def test_e_units_are_order_four():
    for e in (E1, E2, E3):
        assert element_order(e) == 4
