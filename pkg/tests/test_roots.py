import pytest

from grand_antiprism.golden import TAU
from grand_antiprism.quaternion import GoldenQuaternion, q_scalar_product
from grand_antiprism.roots import (
    EXPECTED_WEIGHT_ORBITS, NonGenericFunctionalError, appendix_multiset, reflect, root_system_machinery, weyl_orbit,
)

# parabolic subgroup orders for the node sets of the chain 1 -5- 2 - 3 - 4
PARABOLIC = {
    (): 1, (0,): 2, (1,): 2, (2,): 2, (3,): 2,
    (0, 1): 10, (1, 2): 6, (2, 3): 6, (0, 2): 4, (0, 3): 4, (1, 3): 4,
    (0, 1, 2): 120, (1, 2, 3): 24, (0, 1, 3): 20, (0, 2, 3): 12,
}


def test_root_counts(ctx):
    data = ctx.roots
    assert len(data.roots) == 120
    assert len(data.positive) == 60
    assert len(data.simple_roots) == 4
    assert all(r.norm_sq() == 1 for r in data.simple_roots)


def test_cartan_is_h4(ctx):
    m = ctx.roots.cartan
    want = [[2, -TAU, 0, 0], [-TAU, 2, -1, 0], [0, -1, 2, -1], [0, 0, -1, 2]]
    assert [list(r) for r in m] == want


def test_weights_are_dual(ctx):
    data = ctx.roots
    for i, w in enumerate(data.weights):
        for k, a in enumerate(data.simple_roots):
            assert 2 * q_scalar_product(w, a) / q_scalar_product(a, a) == (1 if i == k else 0)


def test_reflect():
    a = GoldenQuaternion(0, 1, 0, 0)
    assert reflect(a, a) == -a
    assert reflect(a, GoldenQuaternion(1, 0, 0, 0)) == GoldenQuaternion(1, 0, 0, 0)


def test_non_generic_functional():
    with pytest.raises(NonGenericFunctionalError):
        root_system_machinery((1, 0, 0, 0))


def test_other_functional_gives_same_cartan():
    data = root_system_machinery((13, 7, 3, 1))
    assert len(data.positive) == 60
    assert data.cartan[0][1] == -TAU


def test_orbit_sizes_from_parabolics(ctx):
    for line in ctx.appendix:
        complement = tuple(i for i in range(4) if i not in line.subset)
        assert line.orbit_size == 14400 // PARABOLIC[complement]


def test_decompositions_sum_to_orbit_size(ctx):
    for line in ctx.appendix:
        assert sum(k * v for k, v in line.decomposition.items()) == line.orbit_size
    for size, dec in EXPECTED_WEIGHT_ORBITS:
        assert sum(k * v for k, v in dec.items()) == size


def test_appendix_multiset(ctx):
    assert len(ctx.appendix) == 15
    assert appendix_multiset(ctx.appendix) == appendix_multiset(EXPECTED_WEIGHT_ORBITS)


def test_weyl_orbit_of_root_is_all_roots(ctx):
    data = ctx.roots
    assert weyl_orbit(data.simple_roots[0], data.simple_roots) == set(data.roots)
