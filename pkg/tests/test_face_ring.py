import pytest
from hypothesis import given, strategies as st

import oracles
from conftest import complexes, fields
from facering.complex import from_facets, full_subcomplex, join, points, simplex, simplex_boundary, star
from facering.face_ring import (
    HilbertSeries, hilbert_series, monomial_basis, multiplication_matrix, poly_mul,
)
from facering.linalg import GF2, QQ


def test_monomial_basis_examples():
    K = simplex_boundary(2)
    assert len(monomial_basis(K, 2)) == 6
    assert monomial_basis(K, 0) == ((0, 0, 0),)
    B3 = monomial_basis(K, 3)
    assert len(B3) == 9 and (1, 1, 1) not in B3
    with pytest.raises(ValueError):
        monomial_basis(K, -1)


def test_hilbert_series_examples():
    H = hilbert_series(simplex_boundary(2))
    assert H == HilbertSeries((1, 1, 1), 2)
    assert H.coefficients(5) == [1, 3, 6, 9, 12, 15]
    assert hilbert_series(simplex(2)) == HilbertSeries((1,), 2)
    P = hilbert_series(points(3))
    assert P == HilbertSeries((1, 2), 1)
    assert P.coefficients(4) == [1, 3, 3, 3, 3]


def test_series_equality_is_rational():
    assert HilbertSeries((1,), 1) == HilbertSeries((1, -1), 2)
    assert HilbertSeries((1,), 1) != HilbertSeries((1,), 2)


def test_multiplication_examples():
    K = simplex_boundary(2)
    assert multiplication_matrix(K, 1, 0, QQ).tolist() == [[1], [0], [0]]
    M = multiplication_matrix(K, 1, 2, QQ)
    assert M.shape == (9, 6) and M.rank() == 5
    src = monomial_basis(K, 2)
    col = src.index((0, 1, 1))
    assert all(M[i, col] == 0 for i in range(9))
    ghost = from_facets(3, [(1, 2)])
    assert multiplication_matrix(ghost, 3, 1, GF2).is_zero()


@given(complexes(max_m=4), st.integers(0, 4))
def test_basis_matches_enumeration(K, d):
    got = set(monomial_basis(K, d))
    assert got == set(oracles.face_ring_basis(set(K.faces), K.m, d))


@given(complexes(max_m=4))
def test_series_matches_counting(K):
    assert hilbert_series(K).coefficients(5) == oracles.hilbert_counts(set(K.faces), K.m, 5)


@given(complexes(max_m=3), complexes(max_m=3))
def test_join_multiplies_series(K, L):
    assert hilbert_series(join(K, L)) == hilbert_series(K) * hilbert_series(L)


@given(complexes(max_m=4))
def test_vertex_exact_sequence(K):
    # 0 -> F(st i)(-1) -> F(K) -> F(K_i) -> 0
    H = hilbert_series(K)
    for i in K.vertices:
        rhs = hilbert_series(full_subcomplex(K, (i,))) + hilbert_series(star(K, (i,))).shift(1)
        assert H == rhs


@given(complexes(max_m=4), fields, st.integers(0, 3))
def test_multiplications_commute(K, F, d):
    V = K.vertices
    for a in V:
        for b in V:
            ab = multiplication_matrix(K, b, d + 1, F) @ multiplication_matrix(K, a, d, F)
            ba = multiplication_matrix(K, a, d + 1, F) @ multiplication_matrix(K, b, d, F)
            assert ab == ba


def test_poly_mul():
    assert poly_mul((1, 1), (1, -1)) == (1, 0, -1)
