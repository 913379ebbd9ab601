import pytest
from hypothesis import given, strategies as st

from nashblowup.eta import EtaSequence, j_of_eta
from nashblowup.multiindex import enumerate_lambda
from nashblowup.nashfan import (
    Fan2D,
    PointCloud,
    c_vector,
    canonical_order,
    dual_generators,
    family_points,
    fan_rays_contain,
    in_sigma,
    is_in_S,
    l_determinant,
    l_matrix,
    minimal_resolution_fan,
    newton_fan,
    ord_value,
    primitive,
    ray_present,
    refines,
    sigma_generators,
    validate_fan,
)

# exhaustive n = 1 ideal: three members of S, one point each
N1_POINTS = [(2, 1), (2, 2), (2, 3)]


def test_cone_generators():
    assert sigma_generators(3) == ((0, 1), (4, -3))
    assert dual_generators(3) == ((1, 0), (3, 4))
    assert in_sigma(3, (1, 0)) and in_sigma(3, (4, -3))
    assert not in_sigma(3, (1, -1))
    assert not in_sigma(3, (1, -2))


def test_primitive():
    assert primitive((6, -4)) == (3, -2)
    assert primitive((0, 5)) == (0, 1)
    with pytest.raises(ValueError):
        primitive((0, 0))


def test_c_vectors_n1():
    assert c_vector(1, (0, 0, 1)) == (2, 1)
    assert c_vector(1, (0, 1, 0)) == (1, 1)
    assert c_vector(1, (1, 0, 0)) == (0, 1)


def test_l_matrix_rows_follow_canonical_order():
    J = [(1, 0, 0), (0, 0, 1)]
    assert canonical_order(1, J) == ((0, 0, 1), (1, 0, 0))
    assert l_matrix(1, J).tolist() == [[2, 1], [0, 1]]
    with pytest.raises(ValueError):
        l_matrix(1, [(1, 0, 0)])


def test_membership_n1():
    lam = enumerate_lambda(3, 1)
    pairs = [(a, b) for i, a in enumerate(lam) for b in lam[i + 1 :]]
    assert all(is_in_S(1, J) for J in pairs)


def test_j_eta_member_n2():
    J = j_of_eta(2, EtaSequence.parse("1,0,2"))
    assert l_determinant(2, J) == 1
    assert is_in_S(2, J) and is_in_S(2, J, fast=True)


@given(st.randoms(use_true_random=False))
def test_membership_invariant_under_reordering(rnd):
    J = list(j_of_eta(3, EtaSequence.parse("0,0,1,2")))
    rnd.shuffle(J)
    assert is_in_S(3, J)
    assert abs(l_determinant(3, J)) == abs(l_determinant(3, sorted(J)))


def test_singular_subset_rejected():
    # first subset in lex order that the oracle excludes at n = 2
    J = [(0, 0, 1), (0, 1, 0), (1, 0, 0), (0, 2, 0), (1, 0, 1)]
    assert l_determinant(2, J) == 0
    assert not is_in_S(2, J) and not is_in_S(2, J, fast=True)


def test_ord_value():
    assert ord_value(N1_POINTS, (1, 0)) == (2, [(2, 1), (2, 2), (2, 3)])
    assert ord_value(N1_POINTS, (0, 1)) == (1, [(2, 1)])
    with pytest.raises(ValueError):
        ord_value([], (1, 0))


@given(
    st.lists(st.tuples(st.integers(0, 30), st.integers(0, 30)), min_size=1, max_size=12),
    st.tuples(st.integers(-5, 5), st.integers(-5, 5)),
    st.integers(1, 7),
)
def test_ord_homogeneous(points, v, lam):
    a, _ = ord_value(points, v)
    b, _ = ord_value(points, (lam * v[0], lam * v[1]))
    assert b == lam * a


def test_point_cloud():
    c = PointCloud.from_points(1, N1_POINTS)
    c.add((2, 1), "again")
    assert c.points == [(2, 1), (2, 2), (2, 3)]
    assert (2, 2) in c and len(c) == 3
    with pytest.raises(ValueError):
        c.add((-1, 0))
    with pytest.raises(ValueError):
        c.union(PointCloud(2))


def test_newton_fan_n1():
    fan = newton_fan(N1_POINTS, n=1)
    assert fan.rays == ((0, 1), (1, 0), (2, -1))
    assert [c.m for c in fan.cones] == [(2, 1), (2, 3)]
    validate_fan(fan)
    assert refines(fan, minimal_resolution_fan(1))


def test_two_point_fan():
    fan = newton_fan([(0, 1), (1, 0)], n=1)
    assert (1, 1) in fan.rays


def test_single_point_fan_is_trivial():
    fan = newton_fan([(3, 3)], n=2)
    assert fan.rays == sigma_generators(2)
    assert len(fan.cones) == 1


def test_minimal_resolution():
    fan = minimal_resolution_fan(3)
    assert fan.rays == ((0, 1), (1, 0), (2, -1), (3, -2), (4, -3))
    validate_fan(fan)
    assert refines(fan, fan)


def test_refines_rejects_mismatched_n():
    with pytest.raises(ValueError):
        refines(minimal_resolution_fan(2), minimal_resolution_fan(3))


def test_coarse_does_not_refine_fine():
    coarse = newton_fan([(3, 3)], n=2)
    assert not refines(coarse, minimal_resolution_fan(2))
    assert refines(minimal_resolution_fan(2), coarse)


def test_json_roundtrip():
    fan = newton_fan(family_points(3))
    again = Fan2D.from_json(fan.to_json())
    assert again.to_json() == fan.to_json()


def test_ray_present():
    ok, mins = ray_present(N1_POINTS, 1, n=1)
    assert ok and mins == ((2, 1), (2, 3))


@pytest.mark.parametrize("n", range(1, 7))
def test_family_fan_refines_minimal_resolution(n):
    fan = newton_fan(family_points(n))
    validate_fan(fan)
    assert fan_rays_contain(fan, [(k, 1 - k) for k in range(1, n + 1)])
    assert refines(fan, minimal_resolution_fan(n))
