# -*- coding: utf-8 -*-
"""
θ-다항식 (비틀린 군대수 L[G]) 연산

θ-다항식 P = Σ_g a_g γ_g 는 x ↦ Σ_g a_g γ_g(x) 로 L 위의 K-선형사상이 됩니다.
합성은 (a γ_g)∘(b γ_h) = (a γ_g(b)) γ_{g+h} 입니다.
"""

import logging
from dataclasses import dataclass

from core import linalg
from core.errors import InternalError, TowerMismatch
from core.group import group_table

logger = logging.getLogger(__name__)

DEFAULT_RETRY_BUDGET = 32


@dataclass(frozen=True, eq=False)
class ThetaPoly:
    """
    θ-다항식

    Attributes:
        frame: 프레임 (ExtensionTower 또는 RelativeTower)
        coeffs: φ 순서의 계수 튜플, coeffs[g] 는 γ_g 의 계수
    """

    frame: object
    coeffs: tuple

    def __post_init__(self):
        if len(self.coeffs) != self.frame.order:
            raise ValueError(f"계수 {len(self.coeffs)} 개, {self.frame.order} 개 필요")

    @property
    def tower(self):
        return self.frame.tower

    @classmethod
    def zero(cls, frame):
        return cls(frame, tuple(frame.tower.zero() for _ in range(frame.order)))

    @classmethod
    def monomial(cls, frame, index, coeff=None):
        L = frame.tower
        coeffs = [L.zero()] * frame.order
        coeffs[index] = L.one() if coeff is None else coeff
        return cls(frame, tuple(coeffs))

    @classmethod
    def from_coeffs(cls, frame, coeffs):
        return cls(frame, tuple(coeffs))

    def nonzero(self):
        L = self.tower
        return [(g, c) for g, c in enumerate(self.coeffs) if not L.is_zero(c)]

    def is_zero(self):
        return not self.nonzero()

    @property
    def degree(self):
        """θ-차수; 0 다항식은 None"""
        support = self.nonzero()
        if not support:
            return None
        degrees = group_table(self.frame.shape).degrees
        return max(degrees[g] for g, _ in support)

    def has_degree_at_most(self, r):
        deg = self.degree
        return deg is None or deg <= r

    def _same_frame(self, other):
        if other.frame is not self.frame:
            raise TowerMismatch("서로 다른 프레임의 θ-다항식")

    def __add__(self, other):
        self._same_frame(other)
        L = self.tower
        return ThetaPoly(self.frame, tuple(L.add(a, b) for a, b in zip(self.coeffs, other.coeffs)))

    def __sub__(self, other):
        self._same_frame(other)
        L = self.tower
        return ThetaPoly(self.frame, tuple(L.sub(a, b) for a, b in zip(self.coeffs, other.coeffs)))

    def __eq__(self, other):
        if not isinstance(other, ThetaPoly):
            return NotImplemented
        return self.frame is other.frame and self.coeffs == other.coeffs

    def __hash__(self):
        return hash((id(self.frame), self.coeffs))

    def __call__(self, x):
        return evaluate(self, x)


def compose(A, B):
    """A∘B: 단항식 곱을 쌍선형으로 확장"""
    A._same_frame(B)
    frame = A.frame
    L = frame.tower
    table = group_table(frame.shape)
    out = [L.zero()] * frame.order
    for i, a in A.nonzero():
        for j, b in B.nonzero():
            k = table.add(i, j)
            out[k] = L.add(out[k], L.mul(a, frame.apply(i, b)))
    return ThetaPoly(frame, tuple(out))


def evaluate(A, x):
    """A(x) = Σ_g a_g γ_g(x)"""
    L = A.tower
    if x.tower is not L:
        raise TowerMismatch("다른 타워의 원소에서 평가")
    acc = L.zero()
    for g, a in A.nonzero():
        acc = L.add(acc, L.mul(a, A.frame.apply(g, x)))
    return acc


def evaluate_at_points(A):
    """프레임 기저점에서의 평가 벡터 (A(β_0), …, A(β_{n-1}))"""
    return [evaluate(A, p) for p in A.frame.points()]


def endo_matrix(A):
    """열 j 가 A(β_j) 의 기저체 좌표인 행렬"""
    return A.frame.coordinate_matrix(evaluate_at_points(A))


def rank(A):
    """A 가 유도하는 K-선형사상의 랭크"""
    return A.frame.rank(evaluate_at_points(A))


@dataclass(frozen=True)
class DicksonMatrix:
    """G-Dickson 행렬 D[i][j] = γ_j(a_{σ_j⁻¹(i)})"""

    frame: object
    entries: list

    def submatrix(self, rows, cols):
        return [[self.entries[i][j] for j in cols] for i in rows]

    def rank(self):
        return linalg.rank(self.frame.tower, self.entries)


def dickson_entry(frame, coeffs, i, j):
    k = group_table(frame.shape).sigma_inv[i][j]
    return frame.apply(j, coeffs[k])


def dickson(A):
    """A 의 G-Dickson 행렬"""
    frame = A.frame
    n = frame.order
    entries = [[dickson_entry(frame, A.coeffs, i, j) for j in range(n)] for i in range(n)]
    return DicksonMatrix(frame, entries)


def moore_matrix(frame, vectors):
    """Moore 행렬 M[g][k] = γ_g(v_k)"""
    return [[frame.apply(g, v) for v in vectors] for g in range(frame.order)]


def trace_operator(frame, beta):
    """T_β(x) = Tr(βx) 의 θ-다항식 Σ_g γ_g(β) γ_g"""
    return ThetaPoly(frame, tuple(frame.apply(g, beta) for g in range(frame.order)))


def _independent_sample(frame, t, rng, retry_budget):
    L = frame.tower
    for attempt in range(retry_budget):
        sample = [L.random_nonzero(rng) for _ in range(t)]
        if frame.rank(sample) == t:
            return sample
        logger.debug(f"독립이 아닌 표본 재추출 ({attempt + 1}/{retry_budget})")
    raise InternalError(f"{retry_budget} 회 안에 독립인 원소 {t} 개를 뽑지 못했습니다")


def random_rank_error(frame, t, rng, retry_budget=DEFAULT_RETRY_BUDGET):
    """
    랭크가 정확히 t 인 θ-다항식 E = Σ_k α_k T_{β_k}

    Args:
        frame: 프레임
        t: 목표 랭크 (0 ≤ t ≤ 프레임 차수)
        rng: numpy.random.Generator
        retry_budget: 독립 표본 재추출 한도

    Returns:
        ThetaPoly: 랭크 t 의 오류
    """
    if not 0 <= t <= frame.order:
        raise ValueError(f"랭크 {t} 는 [0, {frame.order}] 밖입니다")
    if t == 0:
        return ThetaPoly.zero(frame)
    alphas = _independent_sample(frame, t, rng, retry_budget)
    betas = _independent_sample(frame, t, rng, retry_budget)
    return error_from_factors(frame, alphas, betas)


def error_from_factors(frame, alphas, betas):
    """E = Σ_k α_k T_{β_k}, 계수 e_g = Σ_k α_k γ_g(β_k)"""
    L = frame.tower
    coeffs = []
    for g in range(frame.order):
        acc = L.zero()
        for a, b in zip(alphas, betas):
            acc = L.add(acc, L.mul(a, frame.apply(g, b)))
        coeffs.append(acc)
    return ThetaPoly(frame, tuple(coeffs))
