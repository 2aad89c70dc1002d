# -*- coding: utf-8 -*-
"""
θ-Reed–Muller 부호 RM_{L/K}(r, n)

부호어는 θ-차수 ≤ r 인 θ-다항식 C 의 평가 벡터 (C(β_0), …, C(β_{N-1})) 입니다.
이진 계열((2,…,2) 모양의 Kummer/Artin–Schreier 타워)은 생성행렬과 쌍대 생성행렬의
2×2 블록 재귀 구조를 함께 제공합니다.
"""

import logging
import math
from dataclasses import dataclass
from functools import cached_property

from core import linalg
from core.errors import InvalidShape, LengthMismatch, NotBinaryShape, OrderOutOfRange
from core.group import group_table
from core.skew import ThetaPoly, evaluate_at_points

logger = logging.getLogger(__name__)


@dataclass(frozen=True)
class CodeParams:
    N: int
    k: int
    d: int
    s: int
    ell: int

    @property
    def radius(self):
        """복호 반경 ⌊(d-1)/2⌋"""
        return (self.d - 1) // 2


def validate_shape(shape):
    shape = tuple(int(n) for n in shape)
    if not shape:
        raise InvalidShape("shape 가 비어 있습니다")
    if any(n < 2 for n in shape):
        raise InvalidShape(f"모든 n_i 는 2 이상이어야 합니다: {shape}")
    if any(a < b for a, b in zip(shape, shape[1:])):
        raise InvalidShape(f"shape 는 비증가여야 합니다: {shape}")
    return shape


def max_order(shape):
    return sum(n - 1 for n in shape)


def decompose_order(shape, r):
    """
    r = Σ_{i>s} (n_i - 1) + ℓ, 0 ≤ ℓ < n_s 인 (s, ℓ) (가장 큰 s, 1-기준)
    """
    m = len(shape)
    tail = 0
    for s in range(m, 0, -1):
        ell = r - tail
        if 0 <= ell < shape[s - 1]:
            return s, ell
        tail += shape[s - 1] - 1
    raise OrderOutOfRange(f"r={r} 을 분해할 수 없습니다 (shape={shape})")


def code_params(shape, r):
    """(N, k, d, s, ℓ)"""
    shape = validate_shape(shape)
    if not 0 <= r <= max_order(shape):
        raise OrderOutOfRange(f"r={r} 는 [0, {max_order(shape)}] 밖입니다")
    s, ell = decompose_order(shape, r)
    N = math.prod(shape)
    k = len(group_table(shape).low_degree(r))
    d = (shape[s - 1] - ell) * math.prod(shape[:s - 1])
    return CodeParams(N, k, d, s, ell)


@dataclass(frozen=True, eq=False)
class CodeSpec:
    """
    부호 인스턴스

    Attributes:
        frame: 평가 프레임 (ExtensionTower 또는 RelativeTower)
        r: 차수
        params: (N, k, d, s, ℓ)
        indices: θ-차수 ≤ r 인 단항식 인덱스 (φ 순서)
    """

    frame: object
    r: int
    params: CodeParams
    indices: tuple

    @classmethod
    def create(cls, frame, r):
        params = code_params(frame.shape, r)
        indices = tuple(group_table(tuple(frame.shape)).low_degree(r))
        return cls(frame, r, params, indices)

    @property
    def tower(self):
        return self.frame.tower

    @property
    def shape(self):
        return tuple(self.frame.shape)

    @property
    def N(self):
        return self.params.N

    @property
    def k(self):
        return self.params.k

    @property
    def d(self):
        return self.params.d

    @property
    def radius(self):
        return self.params.radius

    @property
    def is_binary(self):
        return all(n == 2 for n in self.shape) and self.tower.family in ("kummer", "artin_schreier")

    @cached_property
    def dual(self):
        """쌍대 생성행렬 H, 이 인스턴스가 살아 있는 동안만 보관"""
        return _compute_dual_generator(self)

    def describe(self):
        return f"RM(r={self.r}, n={self.shape}) [N={self.N}, k={self.k}, d={self.d}]"


def encode_poly(spec, message):
    """메시지를 θ-차수 ≤ r 단항식 계수로 배치"""
    if len(message) != spec.k:
        raise LengthMismatch(f"메시지 길이 {len(message)} != k={spec.k}")
    L = spec.tower
    coeffs = [L.zero()] * spec.N
    for g, m in zip(spec.indices, message):
        coeffs[g] = m
    return ThetaPoly(spec.frame, tuple(coeffs))


def encode(spec, message):
    """
    부호화

    Returns:
        tuple: (C: ThetaPoly, 평가 벡터)
    """
    C = encode_poly(spec, message)
    return C, evaluate_at_points(C)


def extract_message(spec, C):
    """부호어 θ-다항식에서 메시지 복원"""
    return [C.coeffs[g] for g in spec.indices]


def random_message(spec, rng):
    L = spec.tower
    return [L.random(rng) for _ in range(spec.k)]


def generator_matrix(spec):
    """단위 메시지 부호화를 쌓은 k × N 생성행렬 (행 순서 = φ 순서)"""
    frame = spec.frame
    points = frame.points()
    return [[frame.apply(g, p) for p in points] for g in spec.indices]


def _require_binary(frame, m):
    tower = frame.tower
    if tower.family not in ("kummer", "artin_schreier") or any(n != 2 for n in frame.shape):
        raise NotBinaryShape(f"이진 모양 전용 연산입니다: {tower.family}, shape={frame.shape}")
    if not 0 <= m <= frame.depth:
        raise NotBinaryShape(f"m={m} 이 프레임 깊이 {frame.depth} 를 넘습니다")


def binary_generator(frame, r, m=None):
    """
    블록 재귀로 만든 G(r, m)

    Kummer: [[G(r,m-1), α_m G(r,m-1)], [G(r-1,m-1), -α_m G(r-1,m-1)]]
    Artin–Schreier: 아래 블록이 (α_m + 1) G(r-1,m-1)
    """
    m = frame.depth if m is None else m
    _require_binary(frame, m)
    return _binary_generator(frame.tower, r, m)


def _binary_generator(L, r, m):
    if r < 0:
        return []
    if m == 0:
        return [[L.one()]]
    i = m - 1
    upper = _binary_generator(L, r, m - 1)
    lower = _binary_generator(L, r - 1, m - 1)
    rows = [row + [L.mul_by_generator(v, i) for v in row] for row in upper]
    for row in lower:
        if L.family == "kummer":
            rows.append(row + [L.neg(L.mul_by_generator(v, i)) for v in row])
        else:
            rows.append(row + [L.add(L.mul_by_generator(v, i), v) for v in row])
    return rows


def binary_dual_generator(frame, s, m=None):
    """
    블록 재귀로 만든 쌍대 생성행렬 G*(s, m) (행 |y| ≤ s)

    Kummer: [[G*(s,m-1), -α_m⁻¹ G*(s,m-1)], [G*(s-1,m-1), α_m⁻¹ G*(s-1,m-1)]]
    Artin–Schreier: [[α_m G*(s,m-1), G*(s,m-1)], [(α_m+1) G*(s-1,m-1), G*(s-1,m-1)]]
    s ≥ m 이면 모든 행을 포함합니다.
    """
    m = frame.depth if m is None else m
    _require_binary(frame, m)
    return _binary_dual(frame.tower, s, m)


def _binary_dual(L, s, m):
    if s < 0:
        return []
    if m == 0:
        return [[L.one()]]
    i = m - 1
    upper = _binary_dual(L, s, m - 1)
    lower = _binary_dual(L, s - 1, m - 1)
    rows = []
    if L.family == "kummer":
        for row in upper:
            rows.append(row + [L.neg(L.div_by_generator(v, i)) for v in row])
        for row in lower:
            rows.append(row + [L.div_by_generator(v, i) for v in row])
    else:
        for row in upper:
            rows.append([L.mul_by_generator(v, i) for v in row] + row)
        for row in lower:
            rows.append([L.add(L.mul_by_generator(v, i), v) for v in row] + row)
    return rows


def dual_generator(spec):
    """(N-k) × N 쌍대 생성행렬 H (spec.dual 캐시)"""
    return spec.dual


def _compute_dual_generator(spec):
    """
    (N-k) × N 쌍대 생성행렬 H, G·Hᵀ = 0

    이진 계열은 블록 재귀 G*(m-r-1, m), 그 밖에는 L 위의 영공간입니다.
    """
    frame = spec.frame
    if spec.is_binary:
        return binary_dual_generator(frame, frame.depth - spec.r - 1)
    if spec.k == spec.N:
        return []
    H = linalg.nullspace(spec.tower, generator_matrix(spec))
    logger.debug(f"쌍대 생성행렬 계산: {len(H)} × {spec.N}")
    return H


def syndrome(spec, y):
    if len(y) != spec.N:
        raise LengthMismatch(f"벡터 길이 {len(y)} != N={spec.N}")
    return linalg.matvec(spec.tower, dual_generator(spec), y)


def is_codeword(spec, y):
    """H·yᵀ = 0 여부"""
    L = spec.tower
    return all(L.is_zero(v) for v in syndrome(spec, y))


def code_spec(frame, r):
    """프레임·차수마다 한 번만 만드는 CodeSpec, 캐시는 프레임에 붙어 함께 사라집니다"""
    specs = frame.code_specs
    spec = specs.get(r)
    if spec is None:
        spec = specs.setdefault(r, CodeSpec.create(frame, r))
    return spec
