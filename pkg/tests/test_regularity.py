import pytest
from hypothesis import given, settings, strategies as st

import oracles
from conftest import FIELDS, complexes, fields
from facering.complex import (
    cone, from_facets, link, points, rp2_6, simplex, simplex_boundary, star,
)
from facering.face_ring import monomial_basis
from facering.linalg import GF2, GF3, QQ
from facering.regularity import (
    ambient_quotient_dims, default_d_max, expected_quotient_series, freeness_check,
    image_dims_of_vertex, koszul_tor_dims, pd_check, quotient_algebra, socle_dims, theta_system,
)


def test_default_d_max():
    assert default_d_max(3) == 9
    assert default_d_max(0) == 0


def test_theta_examples():
    th = theta_system(points(4), QQ)
    assert th.n == 1 and th.as_polynomial(1) == {e: 1 for e in monomial_basis(points(4), 1)}
    th = theta_system(simplex_boundary(2), QQ)
    assert th.n == 2
    assert set(th.as_polynomial(2)) == {(1, 1, 0), (1, 0, 1), (0, 1, 1)}
    th = theta_system(simplex(3), GF2)
    assert th.n == 3 and th.as_polynomial(3) == {(1, 1, 1): 1}


@pytest.mark.parametrize("m", range(1, 7))
def test_points_quotient(m):
    for F in FIELDS:
        assert quotient_algebra(points(m), F).dims == ((1,) if m == 1 else (1, m - 1))


def test_small_quotients():
    assert quotient_algebra(simplex_boundary(2), QQ).dims == (1, 2, 2, 1)
    assert quotient_algebra(simplex(3), QQ).dims == (1, 2, 2, 1)
    assert quotient_algebra(from_facets(0, []), QQ).dims == (1,)


def test_projective_plane_quotient():
    R = rp2_6()
    assert quotient_algebra(R, GF2).dims == (1, 5, 14, 19, 15, 6, 1)
    assert quotient_algebra(R, GF3).dims == (1, 5, 14, 19, 15, 6)
    free, wit = freeness_check(R, GF2)
    assert not free and wit == 6
    assert freeness_check(R, QQ) == (True, None)


def test_freeness_examples():
    K = simplex_boundary(2)
    assert expected_quotient_series(K) == (1, 2, 2, 1)
    assert freeness_check(K, GF2) == (True, None)
    assert freeness_check(from_facets(0, []), QQ) == (True, None)
    # two disjoint edges: disconnected, not CM
    assert not freeness_check(from_facets(4, [(1, 2), (3, 4)]), QQ)[0]


def test_socle_examples():
    assert socle_dims(simplex_boundary(2), QQ) == (0, 0, 0, 1)
    assert socle_dims(points(3), QQ) == (0, 2)
    assert socle_dims(points(2), QQ) == (0, 1)


def test_pd_examples():
    assert pd_check(simplex_boundary(2), QQ) == (True, 3)
    assert pd_check(points(3), QQ) == (False, 1)
    assert pd_check(from_facets(0, []), QQ) == (True, 0)


def test_tor_examples():
    T = koszul_tor_dims(simplex_boundary(3), GF2)
    assert T.d_max == 9 and T.higher_vanish()
    T = koszul_tor_dims(rp2_6(), GF2, 9)
    assert any(T.row(1))
    assert koszul_tor_dims(rp2_6(), QQ, 9).higher_vanish()
    E = koszul_tor_dims(from_facets(0, []), QQ)
    assert E.dims == {(0, 0): 1}
    with pytest.raises(ValueError):
        koszul_tor_dims(points(2), QQ, -1)


def test_ambient_examples():
    K = simplex_boundary(2)
    assert ambient_quotient_dims(K, K, QQ) == quotient_algebra(K, QQ).dims
    assert ambient_quotient_dims(K, star(K, (1,)), QQ) == (1, 2, 1)
    with pytest.raises(ValueError):
        ambient_quotient_dims(star(K, (1,)), K, QQ)


def test_image_of_vertex_on_circle():
    K = simplex_boundary(2)
    A = quotient_algebra(K, QQ)
    img = image_dims_of_vertex(A, 1)
    amb = ambient_quotient_dims(K, star(K, (1,)), QQ)
    assert img == (0,) + amb


def test_image_of_vertex_with_ghosts():
    K = from_facets(4, [(3,), (4,)])
    A = quotient_algebra(K, GF2)
    assert A.dims == (1, 1)
    assert image_dims_of_vertex(A, 3) == (0, 1)
    assert image_dims_of_vertex(A, 1) == (0, 0)


def test_socle_lift_substitutes():
    # lift the top class of A(boundary of the 2-simplex) back to F(K)_3 and project again
    K = simplex_boundary(2)
    A = quotient_algebra(K, QQ)
    P = A.projection_matrix(3)
    x = P.solve([1])
    assert x is not None and P @ x == [1]


def test_cone_is_not_reduced_but_gorenstein():
    C = cone(simplex_boundary(2))
    A = quotient_algebra(C, QQ)
    assert freeness_check(C, QQ, A)[0]
    assert sum(socle_dims(C, QQ, A)) == 1


@given(complexes(max_m=4), fields)
def test_quotient_matches_macaulay_oracle(K, F):
    A = quotient_algebra(K, F)
    assert A.dims == oracles.quotient_dims(set(K.faces), K.m, F.p, max_d=A.top_degree + 2)


@settings(max_examples=15)
@given(complexes(max_m=4), fields)
def test_socle_matches_oracle(K, F):
    A = quotient_algebra(K, F)
    assert socle_dims(K, F, A) == oracles.socle_dims(set(K.faces), K.m, F.p, A.top_degree)


@given(complexes(max_m=5), fields)
def test_multiplicity_bound_and_free_iff_equal(K, F):
    A = quotient_algebra(K, F)
    exp = expected_quotient_series(K)
    assert sum(A.dims) >= sum(exp)
    assert freeness_check(K, F, A)[0] == (tuple(A.dims) == tuple(exp))


@given(complexes(max_m=5), fields)
def test_pd_iff_socle_one(K, F):
    A = quotient_algebra(K, F)
    assert pd_check(K, F, A)[0] == (sum(socle_dims(K, F, A)) == 1)


@given(complexes(max_m=4), fields)
def test_koszul_tor0_and_euler_characteristic(K, F):
    A = quotient_algebra(K, F)
    d_max = A.top_degree + K.n + 1
    T = koszul_tor_dims(K, F, d_max)
    assert T.row(0)[: len(A.dims)] == A.dims
    assert all(v == 0 for v in T.row(0)[len(A.dims):])
    exp = expected_quotient_series(K)
    for d in range(d_max + 1):
        euler = sum((-1) ** j * T.dims[(j, d)] for j in range(T.n + 1))
        assert euler == (exp[d] if d < len(exp) else 0)
    # free iff no higher Tor (within the bound)
    assert freeness_check(K, F, A)[0] == T.higher_vanish()


@given(complexes(max_m=5), fields)
def test_quotient_multiplications_commute(K, F):
    A = quotient_algebra(K, F)
    for d in range(A.top_degree):
        for a in K.vertices:
            for b in K.vertices:
                x = A.multiplication_matrix(b, d + 1) @ A.multiplication_matrix(a, d)
                y = A.multiplication_matrix(a, d + 1) @ A.multiplication_matrix(b, d)
                assert x == y


@given(complexes(max_m=4), fields, st.integers(0, 3))
def test_projection_is_onto_and_kills_theta(K, F, d):
    A = quotient_algebra(K, F)
    P = A.projection_matrix(d)
    assert P.rank() == A.dim(d)
    _, rows = oracles.theta_ideal_rows(set(K.faces), K.m, d)
    basis = monomial_basis(K, d)
    obasis = oracles.face_ring_basis(set(K.faces), K.m, d)
    perm = [obasis.index(b) for b in basis]
    for r in rows:
        v = [r[i] for i in perm]
        assert all(x == 0 for x in P @ v)


@given(complexes(max_m=4), fields)
def test_ambient_with_whole_complex(K, F):
    assert ambient_quotient_dims(K, K, F) == quotient_algebra(K, F).dims


@given(complexes(max_m=4), fields)
def test_link_quotients_are_well_defined(K, F):
    for sigma in K.faces:
        L = link(K, sigma)
        assert quotient_algebra(L, F).dims[0] == 1
