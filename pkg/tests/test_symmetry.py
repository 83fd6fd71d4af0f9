import itertools

import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from grand_antiprism.golden import ZERO
from grand_antiprism.icosian import B, C, default_group
from grand_antiprism.quaternion import E1, E2, E3, Q_ONE, GoldenQuaternion, q_conjugate, q_scalar_product
from grand_antiprism.symmetry import (
    IDENTITY, CapExceededError, FiniteGroup, Isometry, NonUnitRootError, NotInvariantError, aut_set_form,
    decompose_under_subgroup, group_closure, h2_roots, isometry_apply, orbit_of, orbit_partition,
    preserves_scalar_products, reflection_from_root, stabilizer_of,
)

BASIS = (Q_ONE, E1, E2, E3)
icosians = st.sampled_from(default_group().elements)
isometries = st.builds(Isometry, icosians, icosians, st.booleans())


def matrix(g: Isometry):
    """Columns are the images of the standard basis."""
    cols = [isometry_apply(g, e).coords for e in BASIS]
    return [[cols[j][i] for j in range(4)] for i in range(4)]


def matmul(a, b):
    return [[sum((a[i][k] * b[k][j] for k in range(4)), ZERO) for j in range(4)] for i in range(4)]


def test_actions():
    x = GoldenQuaternion(1, 2, 3, 4)
    assert Isometry(E1, Q_ONE)(x) == E1 * x
    assert Isometry(Q_ONE, E2, True)(x) == q_conjugate(x) * E2
    assert Isometry(-B, -C) == Isometry(B, C)
    assert Isometry(-B, -C).left == B
    assert Isometry(B, C).kind == "plain" and Isometry(B, C, True).kind == "star"


def test_reflection():
    r = reflection_from_root(E1)
    assert r(E1) == -E1 and r(E2) == E2 and r(Q_ONE) == Q_ONE
    assert r.order() == 2
    with pytest.raises(NonUnitRootError):
        reflection_from_root(E1 * 2)
    with pytest.raises(NonUnitRootError):
        Isometry.checked(E1 * 2, Q_ONE)


@settings(max_examples=60)
@given(isometries, isometries)
def test_composition_matches_matrix_product(g, h):
    assert matrix(g @ h) == matmul(matrix(g), matrix(h))
    assert g @ g.inverse() == IDENTITY
    assert (g ** 3) @ (g ** -3) == IDENTITY
    assert preserves_scalar_products(g, itertools.combinations(BASIS, 2))


def test_standard_group_orders(ctx):
    orders = {k: v.order for k, v in ctx.groups.items()}
    assert orders == {"W(H2)": 10, "W(H2')": 10, "C4": 4, "W(H2)xW(H2')": 100,
                      "Aut(H2+H2')": 400, "W(H3)": 120, "W(H4)": 14400}


def test_aut_equals_set_form(ctx):
    assert len(aut_set_form()) == 400
    assert ctx.aut.elements == aut_set_form()


def test_small_groups_are_closed(ctx):
    for name in ("W(H2)", "W(H2')", "C4", "W(H3)"):
        assert ctx.groups[name].is_closed()


def test_w_h3_fixes_the_real_axis(ctx):
    g = ctx.groups["W(H3)"]
    assert all(isometry_apply(h, Q_ONE) == Q_ONE for h in g.elements)
    assert stabilizer_of(ctx.groups["W(H4)"], Q_ONE).order == 120


def test_h2_roots():
    roots = h2_roots()
    assert len(set(roots)) == 20
    assert all(q_scalar_product(r, s) == 0 for r in roots[:10] for s in roots[10:])


def test_cap():
    with pytest.raises(CapExceededError):
        group_closure([Isometry(B, Q_ONE), Isometry(Q_ONE, C)], cap=20)


def test_orbits_and_partition(ctx):
    orb = orbit_of(ctx.aut, Q_ONE)
    assert len(orb) == 20 and orb.points == set(h2_roots())
    with pytest.raises(NotInvariantError):
        orbit_partition([Q_ONE, E1], ctx.aut.generators)
    assert decompose_under_subgroup(default_group().elements, ctx.aut) == [20, 100]


def test_conjugate_group(ctx):
    w = ctx.groups["W(H2)"]
    g = Isometry(E3, Q_ONE)
    conj = w.conjugate_by(g)
    assert conj.order == 10 and conj.is_closed()
    assert isinstance(conj, FiniteGroup)
