import pytest
from hypothesis import given

from conftest import goldens, quaternions
from grand_antiprism.golden import ONE, SQRT5, TAU, ZERO
from grand_antiprism.linalg import (
    Hyperplane, SingularMatrixError, affine_rank, hyperplane_through, null_space, rank, rref, solve,
)
from grand_antiprism.quaternion import E1, E2, E3, Q_ONE, Q_ZERO, GoldenQuaternion


def test_rref_and_rank():
    m = [[1, 2, 3], [2, 4, 6], [TAU, 0, 1]]
    rows, piv = rref(m)
    assert piv == [0, 1]
    assert rank(m) == 2
    assert rows[2] == [ZERO, ZERO, ZERO]
    assert rref([]) == ([], [])


def test_null_space_annihilates():
    m = [[1, TAU, 0, SQRT5], [0, 1, 1, 1]]
    ns = null_space(m)
    assert len(ns) == 2
    for v in ns:
        for row in m:
            assert sum((a * b for a, b in zip(row, v)), ZERO) == 0
    assert len(null_space([], 3)) == 3


def test_solve():
    m = [[TAU, 1], [1, -TAU]]
    x = solve(m, [1, 0])
    assert m[0][0] * x[0] + m[0][1] * x[1] == 1
    assert m[1][0] * x[0] + m[1][1] * x[1] == 0
    with pytest.raises(SingularMatrixError):
        solve([[1, TAU], [TAU, TAU + 1]], [1, 1])


def test_affine_rank():
    assert affine_rank([]) == 0 and affine_rank([E1]) == 0
    assert affine_rank([Q_ONE, E1, E2, E3]) == 3
    assert affine_rank([Q_ONE, E1, E1 * 2 - Q_ONE]) == 1


def test_hyperplane_canonical_keeps_orientation():
    h = Hyperplane.make(GoldenQuaternion(-2, 2, 0, 0), 4)
    assert h.normal == GoldenQuaternion(-1, 1, 0, 0) and h.offset == 2
    assert h.flipped().normal == GoldenQuaternion(1, -1, 0, 0)
    assert h.side(Q_ZERO) == -1 and h.side(E1 * 2) == 0
    with pytest.raises(ValueError):
        Hyperplane.make(Q_ZERO, 1)


def test_hyperplane_through():
    h = hyperplane_through([Q_ONE, E1, E2, E3])
    for p in (Q_ONE, E1, E2, E3):
        assert h.value(p) == 0
    assert hyperplane_through([Q_ONE, E1, E2]) is None
    h2 = hyperplane_through([Q_ONE, E1, E2], extra_directions=[E3])
    assert h2.normal in (GoldenQuaternion(1, 1, 1, 0), GoldenQuaternion(-1, -1, -1, 0))
    assert hyperplane_through([Q_ONE, E1], extra_directions=[E2]) is None


@given(quaternions, goldens)
def test_hyperplane_scaling_invariant(n, c):
    if n:
        assert Hyperplane.make(n, c) == Hyperplane.make(n * TAU, c * TAU)
        assert Hyperplane.make(n, c) != Hyperplane.make(-n, -c)
        lead = next(x for x in Hyperplane.make(n, c).normal.coords if x)
        assert lead in (ONE, -ONE)
