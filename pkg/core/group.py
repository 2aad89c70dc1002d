# -*- coding: utf-8 -*-
"""
Λ(n) = [0,n_1-1] × … × [0,n_m-1] 인덱스 조합론

φ 는 혼합 기수 표현 i ↦ i_1 + i_2·n_1 + i_3·n_1·n_2 + … 이며,
역사전식(revlex) 순서와 정수 순서를 일치시킵니다.
"""

import math
from dataclasses import dataclass
from functools import lru_cache

from core.errors import OutOfRange, ShapeMismatch


@dataclass(frozen=True)
class GroupIndex:
    """지수 벡터 (i_1, …, i_m), 0 ≤ i_k < n_k"""

    exponents: tuple
    shape: tuple

    def __post_init__(self):
        if len(self.exponents) != len(self.shape):
            raise ShapeMismatch(f"지수 길이 {len(self.exponents)} != shape 길이 {len(self.shape)}")
        for e, n in zip(self.exponents, self.shape):
            if not 0 <= e < n:
                raise OutOfRange(f"지수 {self.exponents} 가 shape {self.shape} 범위를 벗어남")

    @property
    def degree(self):
        """|i| = i_1 + … + i_m"""
        return sum(self.exponents)

    def support(self):
        """0 이 아닌 성분의 위치 집합"""
        return frozenset(k for k, e in enumerate(self.exponents) if e)

    def __str__(self):
        return "(" + ",".join(str(e) for e in self.exponents) + ")"


def group_order(shape):
    return math.prod(shape)


def phi(i):
    """φ(i): 혼합 기수 인코딩"""
    x, radix = 0, 1
    for e, n in zip(i.exponents, i.shape):
        x += e * radix
        radix *= n
    return x


def phi_inv(x, shape):
    """φ⁻¹(x): [0, N-1] → Λ(n)"""
    shape = tuple(shape)
    if not 0 <= x < group_order(shape):
        raise OutOfRange(f"{x} 는 [0, {group_order(shape) - 1}] 밖입니다")
    return GroupIndex(_digits(x, shape), shape)


def _digits(x, shape):
    digits = []
    for n in shape:
        x, e = divmod(x, n)
        digits.append(e)
    return tuple(digits)


def revlex_cmp(i, j):
    """
    역사전식 비교: 마지막으로 다른 좌표에서 비교

    Returns:
        int: -1 (i ≺ j), 0, 1 (i ≻ j)
    """
    if i.shape != j.shape:
        raise ShapeMismatch(f"{i.shape} 와 {j.shape} 비교")
    for a, b in zip(reversed(i.exponents), reversed(j.exponents)):
        if a != b:
            return -1 if a < b else 1
    return 0


def group_add(i, j):
    """
    성분별 mod-n 덧셈과 올림 없음 여부

    Returns:
        tuple: (GroupIndex k, carry_free)
    """
    if i.shape != j.shape:
        raise ShapeMismatch(f"{i.shape} 와 {j.shape} 덧셈")
    carry_free = all(a + b < n for a, b, n in zip(i.exponents, j.exponents, i.shape))
    k = tuple((a + b) % n for a, b, n in zip(i.exponents, j.exponents, i.shape))
    return GroupIndex(k, i.shape), carry_free


def group_sub(i, j):
    """성분별 mod-n 뺄셈 i - j"""
    if i.shape != j.shape:
        raise ShapeMismatch(f"{i.shape} 와 {j.shape} 뺄셈")
    k = tuple((a - b) % n for a, b, n in zip(i.exponents, j.exponents, i.shape))
    return GroupIndex(k, i.shape)


def sigma_inverse(j, i, shape):
    """γ_j·γ_k = γ_i 를 만족하는 k (φ⁻¹(k) = φ⁻¹(i) - φ⁻¹(j) mod n)"""
    return group_table(tuple(shape)).sigma_inv[i][j]


def is_carry_free(x, y, shape):
    """φ⁻¹(x) + φ⁻¹(y) 가 올림 없이 더해지는지"""
    table = group_table(tuple(shape))
    return all(a + b < n for a, b, n in zip(table.digits[x], table.digits[y], shape))


class GroupTable:
    """shape 별로 한 번 계산해 두는 인덱스 표"""

    def __init__(self, shape):
        self.shape = shape
        self.order = group_order(shape)
        self.digits = [_digits(x, shape) for x in range(self.order)]
        self.degrees = [sum(d) for d in self.digits]
        self.radix = [math.prod(shape[:k]) for k in range(len(shape))]
        self.sigma_inv = [[self.encode_sub(i, j) for j in range(self.order)] for i in range(self.order)]

    def encode(self, digits):
        return sum(e * r for e, r in zip(digits, self.radix))

    def encode_sub(self, i, j):
        return self.encode(tuple((a - b) % n for a, b, n in
                                 zip(self.digits[i], self.digits[j], self.shape)))

    def add(self, x, y):
        return self.encode(tuple((a + b) % n for a, b, n in
                                 zip(self.digits[x], self.digits[y], self.shape)))

    def neg(self, x):
        return self.encode(tuple((-a) % n for a, n in zip(self.digits[x], self.shape)))

    def low_degree(self, r):
        """|i| ≤ r 인 인덱스 (φ 순서)"""
        return [x for x in range(self.order) if self.degrees[x] <= r]


@lru_cache(maxsize=64)
def group_table(shape):
    return GroupTable(tuple(shape))
