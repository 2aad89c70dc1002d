# -*- coding: utf-8 -*-
import itertools
from fractions import Fraction

import pytest

from core import linalg
from core.errors import (
    DependentExtensions,
    DependentRadicands,
    NonCoprimeShape,
    TowerMismatch,
    ZeroInverse,
)
from core.group import GroupIndex
from core.tower import (
    build_artin_schreier_tower,
    build_finite_tower,
    build_kummer_tower,
    build_tower,
    is_artin_schreier_value,
)

from conftest import T, T3


def _matrix(rows):
    return [[Fraction(v) for v in row] for row in rows]


# Q(√2, √3, √5), 기저 (1, √2, √3, √6, √5, √10, √15, √30)
MUL_SQRT2 = _matrix([
    [0, 2, 0, 0, 0, 0, 0, 0],
    [1, 0, 0, 0, 0, 0, 0, 0],
    [0, 0, 0, 2, 0, 0, 0, 0],
    [0, 0, 1, 0, 0, 0, 0, 0],
    [0, 0, 0, 0, 0, 2, 0, 0],
    [0, 0, 0, 0, 1, 0, 0, 0],
    [0, 0, 0, 0, 0, 0, 0, 2],
    [0, 0, 0, 0, 0, 0, 1, 0],
])
MUL_SQRT3 = _matrix([
    [0, 0, 3, 0, 0, 0, 0, 0],
    [0, 0, 0, 3, 0, 0, 0, 0],
    [1, 0, 0, 0, 0, 0, 0, 0],
    [0, 1, 0, 0, 0, 0, 0, 0],
    [0, 0, 0, 0, 0, 0, 3, 0],
    [0, 0, 0, 0, 0, 0, 0, 3],
    [0, 0, 0, 0, 1, 0, 0, 0],
    [0, 0, 0, 0, 0, 1, 0, 0],
])
MUL_SQRT5 = _matrix([
    [0, 0, 0, 0, 5, 0, 0, 0],
    [0, 0, 0, 0, 0, 5, 0, 0],
    [0, 0, 0, 0, 0, 0, 5, 0],
    [0, 0, 0, 0, 0, 0, 0, 5],
    [1, 0, 0, 0, 0, 0, 0, 0],
    [0, 1, 0, 0, 0, 0, 0, 0],
    [0, 0, 1, 0, 0, 0, 0, 0],
    [0, 0, 0, 1, 0, 0, 0, 0],
])


def _diag(values):
    return _matrix([[v if i == j else 0 for j in range(len(values))] for i, v in enumerate(values)])


AUT_X = _diag([1, -1, 1, -1, 1, -1, 1, -1])
AUT_Y = _diag([1, 1, -1, -1, 1, 1, -1, -1])
AUT_Z = _diag([1, 1, 1, 1, -1, -1, -1, -1])


def test_running_example_matrices(kummer235):
    L = kummer235
    assert L.basis_labels == ["1", "√2", "√3", "√6", "√5", "√10", "√15", "√30"]
    assert L.mul_table(1) == MUL_SQRT2
    assert L.mul_table(2) == MUL_SQRT3
    assert L.mul_table(4) == MUL_SQRT5
    assert L.generator_matrix(0) == AUT_X
    assert L.generator_matrix(1) == AUT_Y
    assert L.generator_matrix(2) == AUT_Z


def test_kummer_products(kummer235):
    L = kummer235
    sqrt2, sqrt3 = L.basis_element(1), L.basis_element(2)
    assert L.alg_ops(sqrt2, sqrt3, "mul") == L.basis_element(3)
    assert sqrt2 * sqrt2 == L.from_base(Fraction(2))
    assert L.apply_aut(GroupIndex((1, 0, 0), (2, 2, 2)), sqrt2) == -sqrt2


def test_kummer_errors():
    with pytest.raises(DependentRadicands):
        build_kummer_tower([2, 8])
    with pytest.raises(DependentRadicands):
        build_kummer_tower([4])
    with pytest.raises(DependentRadicands):
        build_kummer_tower([2, 3, 6])


def test_single_quadratic(kummer2):
    sqrt2 = kummer2.basis_element(1)
    assert kummer2.degree == 2
    assert kummer2.apply(1, sqrt2) == -sqrt2


def test_finite_tower_generators(gf64):
    L = gf64
    assert L.degree == 6
    identity = linalg.identity(L.base, 6)
    theta1, theta2 = L.generator_matrix(0), L.generator_matrix(1)
    square = linalg.matmul(L.base, theta1, theta1)
    assert square != identity
    assert linalg.matmul(L.base, square, theta1) == identity
    assert theta2 != identity
    assert linalg.matmul(L.base, theta2, theta2) == identity
    distinct = {tuple(tuple(row) for row in L.aut_matrix(g)) for g in range(6)}
    assert len(distinct) == 6


def test_finite_tower_frobenius_oracle(gf64, rng):
    L = gf64
    theta1 = GroupIndex((1, 0), (3, 2))
    theta2 = GroupIndex((0, 1), (3, 2))
    for _ in range(10):
        x = L.random(rng)
        assert L.apply_aut(theta1, x) == L.power(x, 4)
        assert L.apply_aut(theta2, x) == L.power(x, 8)
        assert L.alg_ops(x, op="apply_aut", g=0) == x


def test_finite_tower_errors():
    with pytest.raises(NonCoprimeShape):
        build_finite_tower(2, (2, 2))
    with pytest.raises(NonCoprimeShape):
        build_finite_tower(2, (3, 1))


def test_cyclic_tower(gf128):
    assert gf128.shape == (7,)
    x = gf128.basis_element(1)
    assert gf128.apply(1, x) == gf128.power(x, 2)


def test_artin_schreier_towers(as_t_t3):
    L = as_t_t3
    assert L.degree == 4
    alpha1 = L.generator(0)
    assert L.apply(1, alpha1) == alpha1 + L.one()
    assert alpha1 * alpha1 == alpha1 + L.from_base((T, 1))
    distinct = {tuple(tuple(row) for row in L.aut_matrix(g)) for g in range(4)}
    assert len(distinct) == 4
    assert build_artin_schreier_tower([(T, 1)]).degree == 2
    # a = 1 은 상수체 확장 F_4(t) 를 주며 허용
    assert build_artin_schreier_tower([(1, 1)]).degree == 2


def test_artin_schreier_dependency():
    # t² + t ∈ ℘(F_2(t))
    assert is_artin_schreier_value((0b110, 1))
    assert not is_artin_schreier_value((T, 1))
    assert not is_artin_schreier_value((T3, 1))
    with pytest.raises(DependentExtensions):
        build_artin_schreier_tower([(T, 1), (T3, 1), (T ^ T3, 1)])


def test_automorphisms_are_homomorphisms(kummer235, as_t_t3, gf64, rng):
    for L in (kummer235, as_t_t3, gf64):
        for _ in range(20):
            x, y = L.random(rng), L.random(rng)
            g = int(rng.integers(0, L.order))
            assert L.apply(g, x * y) == L.apply(g, x) * L.apply(g, y)
            assert L.apply(g, x + y) == L.apply(g, x) + L.apply(g, y)
            assert L.trace(L.apply(g, x)) == L.trace(x)


def test_inverse_round_trip(kummer235, as_t_t3, gf64, rng):
    for L in (kummer235, as_t_t3, gf64):
        for _ in range(10):
            x, y = L.random(rng), L.random_nonzero(rng)
            assert (x * y) * L.alg_ops(y, op="inv") == x
        with pytest.raises(ZeroInverse):
            L.inv(L.zero())


def test_trace_and_dual_basis(kummer235, as_t_t3, gf64):
    L = kummer235
    assert L.trace(L.one()) == 8
    assert L.trace(L.basis_element(1)) == 0
    for L in (kummer235, as_t_t3, gf64):
        _, dual = L.trace_and_dual_basis()
        f = L.base
        for i, j in itertools.product(range(L.degree), repeat=2):
            value = L.trace(L.basis_element(i) * dual[j])
            assert value == (f.one() if i == j else f.zero())


def test_exp_basis(kummer235, rng):
    L = kummer235
    assert L.exp_basis(L.basis()) == linalg.identity(L.base, 8)
    x = L.random(rng)
    assert L.exp_basis([x]) == [[c] for c in x.coords]

    vector = [L.random(rng) for _ in range(3)]
    vector.append(vector[0] + vector[1])
    assert L.rank(vector) == 3
    change = [[L.base.random(rng) for _ in range(8)] for _ in range(8)]
    if linalg.rank(L.base, change) == 8:
        changed = linalg.matmul(L.base, change, L.exp_basis(vector))
        assert linalg.rank(L.base, changed) == 3


def test_tower_mismatch(kummer235, kummer23):
    with pytest.raises(TowerMismatch):
        kummer235.one() + kummer23.one()


@pytest.mark.parametrize("fixture", ["kummer235", "as_t_t3", "gf64"])
def test_descriptor_round_trip(fixture, request):
    L = request.getfixturevalue(fixture)
    rebuilt = build_tower(L.descriptor())
    assert rebuilt.descriptor() == L.descriptor()
    assert rebuilt.mul_table(1) == L.mul_table(1)
    x = L.basis_element(1) + L.one()
    assert rebuilt.parse_element(L.format_element(x)).coords == x.coords


def test_relative_frame(kummer235, rng):
    L = kummer235
    frame = L.frame(2)
    assert frame is L.frame(2)
    assert frame.lower() is L.frame(1)
    assert frame.order == 4 and frame.shape == (2, 2)
    # √5 ∈ K' = Q(√5) 이므로 K'-랭크 1
    assert frame.rank([L.basis_element(4), L.one()]) == 1
    assert frame.rank([L.basis_element(1), L.one()]) == 2
    values = [L.random(rng) for _ in range(4)]
    assert frame.evaluate(frame.interpolate(values)) == values


def test_op_counter_tracks_both_units(gf64):
    x = gf64.one()
    gf64.ops.reset()
    gf64.mul(x, x)
    gf64.add(x, x)
    gf64.inv(x)
    assert gf64.ops.total == 36 + 6 + 1 + 216
    assert gf64.ops.field_total == 3
    assert gf64.ops.snapshot() == {"add": 6, "mul": 36 + 216, "inv": 1, "field": 3}
