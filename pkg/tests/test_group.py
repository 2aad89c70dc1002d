# -*- coding: utf-8 -*-
import itertools

import pytest

from core.errors import OutOfRange, ShapeMismatch
from core.group import (
    GroupIndex,
    group_add,
    group_order,
    group_sub,
    group_table,
    is_carry_free,
    phi,
    phi_inv,
    revlex_cmp,
    sigma_inverse,
)

SHAPES = [(2, 2, 2), (3, 3), (3, 2), (7, 7), (5, 3), (4, 2, 2), (2, 2, 2, 2, 2, 2)]


def test_phi_examples():
    assert phi(GroupIndex((1, 0, 1), (2, 2, 2))) == 5
    assert phi_inv(3, (3, 3)).exponents == (0, 1)
    assert phi(GroupIndex((0, 0, 0), (4, 2, 2))) == 0


@pytest.mark.parametrize("shape", SHAPES)
def test_phi_round_trip_and_monotone(shape):
    N = group_order(shape)
    indices = [phi_inv(x, shape) for x in range(N)]
    assert [phi(i) for i in indices] == list(range(N))
    for a, b in itertools.combinations(range(N), 2):
        assert revlex_cmp(indices[a], indices[b]) == -1
        assert revlex_cmp(indices[b], indices[a]) == 1


def test_phi_inv_out_of_range():
    with pytest.raises(OutOfRange):
        phi_inv(9, (3, 3))
    with pytest.raises(OutOfRange):
        phi_inv(-1, (3, 3))
    with pytest.raises(OutOfRange):
        GroupIndex((3, 0), (3, 3))


def test_revlex_examples():
    shape = (3, 3)
    assert revlex_cmp(GroupIndex((2, 0), shape), GroupIndex((0, 1), shape)) == -1
    assert revlex_cmp(GroupIndex((1, 1), shape), GroupIndex((1, 1), shape)) == 0
    with pytest.raises(ShapeMismatch):
        revlex_cmp(GroupIndex((1, 1), shape), GroupIndex((1, 0, 0), (2, 2, 2)))


def test_revlex_random_pairs(rng):
    shape = (5, 3, 2)
    N = group_order(shape)
    for _ in range(1000):
        x, y = (int(v) for v in rng.integers(0, N, size=2))
        expected = (x > y) - (x < y)
        assert revlex_cmp(phi_inv(x, shape), phi_inv(y, shape)) == expected


def test_group_add_examples():
    shape = (3, 3)
    k, carry_free = group_add(GroupIndex((1, 0), shape), GroupIndex((1, 0), shape))
    assert k.exponents == (2, 0) and carry_free
    assert phi(k) == 2
    k, carry_free = group_add(GroupIndex((2, 0), shape), GroupIndex((1, 0), shape))
    assert k.exponents == (0, 0) and not carry_free


def test_group_add_carry_free_exhaustive():
    shape = (3, 2)
    N = group_order(shape)
    for x, y in itertools.product(range(N), repeat=2):
        k, carry_free = group_add(phi_inv(x, shape), phi_inv(y, shape))
        assert carry_free == (phi(k) == x + y)
        assert carry_free == is_carry_free(x, y, shape)


def test_group_add_commutative_associative():
    shape = (4, 2, 2)
    N = group_order(shape)
    elements = [phi_inv(x, shape) for x in range(N)]
    for a, b in itertools.product(elements, repeat=2):
        assert group_add(a, b)[0] == group_add(b, a)[0]
    for a, b, c in itertools.islice(itertools.product(elements, repeat=3), 500):
        left = group_add(group_add(a, b)[0], c)[0]
        right = group_add(a, group_add(b, c)[0])[0]
        assert left == right


def test_sigma_inverse():
    shape = (3, 3)
    assert sigma_inverse(3, 4, shape) == 1
    for i in range(9):
        assert sigma_inverse(0, i, shape) == i
    shape = (2, 2, 2)
    table = group_table(shape)
    for i, j in itertools.product(range(8), repeat=2):
        k = sigma_inverse(j, i, shape)
        assert table.add(j, k) == i
        assert group_sub(phi_inv(i, shape), phi_inv(j, shape)) == phi_inv(k, shape)


def test_degree_and_low_degree():
    table = group_table((7, 7))
    assert len(table.low_degree(4)) == 15
    assert phi_inv(28, (7, 7)).degree == 4
    assert table.neg(1) == 6
