# -*- coding: utf-8 -*-
from fractions import Fraction

import pytest

from core import linalg
from core.errors import SingularMatrix
from core.kfield import PrimeField, RationalField, RationalFunctionField2

Q = RationalField()


def _random_matrix(field, rng, rows, cols):
    return [[field.random(rng) for _ in range(cols)] for _ in range(rows)]


def test_rank_and_rref():
    M = [[Fraction(1), Fraction(2), Fraction(3)],
         [Fraction(2), Fraction(4), Fraction(6)],
         [Fraction(0), Fraction(1), Fraction(1)]]
    assert linalg.rank(Q, M) == 2
    R, pivots = linalg.rref(Q, M)
    assert pivots == [0, 1]
    assert R == [[1, 0, 1], [0, 1, 1]]


def test_solve_and_inverse(rng):
    for _ in range(20):
        A = _random_matrix(Q, rng, 4, 4)
        if linalg.rank(Q, A) < 4:
            continue
        x = [Q.random(rng) for _ in range(4)]
        b = linalg.matvec(Q, A, x)
        assert linalg.solve(Q, A, b) == x
        assert linalg.matmul(Q, A, linalg.inverse(Q, A)) == linalg.identity(Q, 4)


def test_singular_system():
    A = [[Fraction(1), Fraction(1)], [Fraction(2), Fraction(2)]]
    with pytest.raises(SingularMatrix):
        linalg.solve(Q, A, [Fraction(1), Fraction(3)])
    with pytest.raises(SingularMatrix):
        linalg.solve(Q, A, [Fraction(1), Fraction(2)])
    with pytest.raises(SingularMatrix):
        linalg.inverse(Q, A)


def test_nullspace(rng):
    A = _random_matrix(Q, rng, 3, 6)
    kernel = linalg.nullspace(Q, A)
    assert len(kernel) == 6 - linalg.rank(Q, A)
    for v in kernel:
        assert all(x == 0 for x in linalg.matvec(Q, A, v))


@pytest.mark.parametrize("field", [Q, PrimeField(7), RationalFunctionField2()], ids=str)
def test_bareiss_matches_gauss(field, rng):
    for n in range(1, 5):
        M = _random_matrix(field, rng, n, n)
        assert linalg.det_bareiss(field, M) == linalg.det_gauss(field, M)


def test_det_of_singular_is_zero():
    M = [[Fraction(1), Fraction(2)], [Fraction(3), Fraction(6)]]
    assert linalg.det_bareiss(Q, M) == 0
    assert linalg.det_gauss(Q, M) == 0
    assert linalg.det(Q, [[Fraction(0), Fraction(1)], [Fraction(1), Fraction(0)]]) == -1
