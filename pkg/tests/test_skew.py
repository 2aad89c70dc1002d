# -*- coding: utf-8 -*-
import pytest

from core import linalg
from core.errors import TowerMismatch
from core.skew import (
    ThetaPoly,
    compose,
    dickson,
    endo_matrix,
    error_from_factors,
    evaluate,
    moore_matrix,
    random_rank_error,
    rank,
    trace_operator,
)


def _random_poly(frame, rng):
    L = frame.tower
    return ThetaPoly.from_coeffs(frame, [L.random(rng) for _ in range(frame.order)])


def test_identity_composition(kummer235, rng):
    identity = ThetaPoly.monomial(kummer235, 0)
    A = _random_poly(kummer235, rng)
    assert compose(identity, A) == A
    assert compose(A, identity) == A


@pytest.mark.parametrize("fixture", ["kummer235", "gf64", "as_t_t3"])
def test_composition_is_matrix_product(fixture, request, rng):
    L = request.getfixturevalue(fixture)
    for _ in range(3):
        A, B = _random_poly(L, rng), _random_poly(L, rng)
        expected = linalg.matmul(L.base, endo_matrix(A), endo_matrix(B))
        assert endo_matrix(compose(A, B)) == expected


def test_evaluation(kummer235, rng):
    L = kummer235
    theta1 = ThetaPoly.monomial(L, 1)
    sqrt2 = L.basis_element(1)
    assert evaluate(theta1, sqrt2) == -sqrt2
    assert theta1(L.basis_element(2)) == L.basis_element(2)

    A = _random_poly(L, rng)
    x, y = L.random(rng), L.random(rng)
    c = L.base.random(rng)
    assert A(x + y) == A(x) + A(y)
    assert A(L.scale(c, x)) == L.scale(c, A(x))


def test_degree(gf64):
    L = gf64
    assert ThetaPoly.zero(L).degree is None
    assert ThetaPoly.zero(L).has_degree_at_most(0)
    # φ⁻¹(5) = (2, 1)
    assert ThetaPoly.monomial(L, 5).degree == 3
    assert ThetaPoly.monomial(L, 3).degree == 1
    assert not ThetaPoly.monomial(L, 4).has_degree_at_most(1)


def test_rank_examples(kummer235, gf64):
    for L in (kummer235, gf64):
        assert rank(ThetaPoly.monomial(L, 0)) == L.degree
        assert rank(trace_operator(L, L.one())) == 1
        assert rank(ThetaPoly.zero(L)) == 0


@pytest.mark.parametrize("fixture", ["kummer235", "gf64", "as_t_t3"])
def test_rank_equals_dickson_rank(fixture, request, rng):
    L = request.getfixturevalue(fixture)
    for t in range(L.degree + 1):
        E = random_rank_error(L, t, rng)
        assert rank(E) == t
        assert dickson(E).rank() == t


def test_dickson_of_scalar_is_diagonal(kummer235, rng):
    L = kummer235
    c = L.random_nonzero(rng)
    D = dickson(ThetaPoly.monomial(L, 0, c))
    for i in range(L.order):
        for j in range(L.order):
            expected = L.apply(j, c) if i == j else L.zero()
            assert D.entries[i][j] == expected


def test_dickson_moore_factorization(gf64, kummer23, rng):
    for L in (gf64, kummer23):
        t = 2
        alphas = [L.random_nonzero(rng) for _ in range(t)]
        betas = [L.random_nonzero(rng) for _ in range(t)]
        E = error_from_factors(L, alphas, betas)
        product = linalg.matmul(L, moore_matrix(L, betas), linalg.transpose(moore_matrix(L, alphas)))
        assert dickson(E).entries == product


def test_consecutive_minor_is_nonsingular(gf128, rng):
    L = gf128
    for t in range(1, 5):
        E = random_rank_error(L, t, rng)
        D = dickson(E)
        window = list(range(t))
        assert not L.is_zero(linalg.det(L, D.submatrix(window, window)))
        if t < L.order:
            assert L.is_zero(linalg.det(L, D.entries))


def test_errors(kummer235, kummer23, rng):
    with pytest.raises(ValueError):
        ThetaPoly.from_coeffs(kummer235, [kummer235.one()])
    with pytest.raises(ValueError):
        random_rank_error(kummer23, 5, rng)
    with pytest.raises(TowerMismatch):
        compose(ThetaPoly.monomial(kummer235, 0), ThetaPoly.monomial(kummer23, 0))
    with pytest.raises(TowerMismatch):
        evaluate(ThetaPoly.monomial(kummer235, 0), kummer23.one())


def test_relative_frame_rank(kummer235, rng):
    frame = kummer235.frame(2)
    for t in range(frame.order + 1):
        E = random_rank_error(frame, t, rng)
        assert rank(E) == t
        assert dickson(E).rank() == t
