# -*- coding: utf-8 -*-
"""
고전 부호의 특수화: Gabidulin 부호와 순환 Reed–Solomon 부호

Gabidulin 복호는 순환 모양 (N,) 의 θ-RM 복호에서 매 윈도우를 한 행 위로
옮기는 일정입니다. RS 복호는 다항식 e(X) 의 순환행렬 Mat(e) 가 랭크
w_H(ev(e)) 를 갖는다는 사실을 이용해 같은 소행렬식 소거로 e 의 낮은
계수를 복원합니다. GF(q) 산술은 galois 배열로 처리합니다.
"""

import logging

import galois
import numpy as np

from core.decode_dickson import decode_with_trace
from core.errors import CofactorSearchExhausted, DecodingFailure, LengthMismatch
from core.rmcode import CodeSpec

logger = logging.getLogger(__name__)


# ---------------------------------------------------------------------------
# Gabidulin
# ---------------------------------------------------------------------------

def gabidulin_spec(tower, k):
    if len(tower.shape) != 1:
        raise DecodingFailure(f"Gabidulin 복호는 순환 타워가 필요합니다: shape={tower.shape}")
    return CodeSpec.create(tower, k - 1)


def gabidulin_decode_with_trace(tower, k, Y):
    """윈도우 기록을 포함한 Gabidulin 복호 (DecodeResult)"""
    spec = gabidulin_spec(tower, k)
    return decode_with_trace(spec, Y, schedule="gabidulin")


def gabidulin_decode(tower, k, Y):
    """
    Gabidulin 부호 Gab[N, k] 복호

    Returns:
        tuple: (C, E) θ-다항식
    """
    result = gabidulin_decode_with_trace(tower, k, Y)
    return result.C, result.E


# ---------------------------------------------------------------------------
# Reed–Solomon (n = q - 1)
# ---------------------------------------------------------------------------

def rs_field(q):
    """(GF(q), 원시원 α, 평가점 α^0..α^{n-1})"""
    GF = galois.GF(q)
    alpha = GF.primitive_element
    points = alpha ** np.arange(q - 1)
    return GF, alpha, points


def circulant(coeffs, GF=None):
    """
    순환행렬 Mat(P): 열 j 는 계수 벡터를 j 칸 아래로 순환 이동한 것

    Returns:
        galois.FieldArray: n × n, M[i][j] = P_{(i-j) mod n}
    """
    if GF is not None:
        coeffs = GF(coeffs)
    n = len(coeffs)
    idx = (np.arange(n)[:, None] - np.arange(n)[None, :]) % n
    return coeffs[idx]


def evaluate_poly(coeffs, points):
    """ev(P) = (P(x_0), …, P(x_{n-1})), 계수는 오름차순"""
    GF = type(points)
    powers = points[:, None] ** np.arange(len(coeffs))[None, :]
    return powers @ GF(coeffs)


def interpolate_poly(values, points):
    """ev 의 역: y_j = y(α^j) 를 만족하는 차수 < n 다항식 계수"""
    GF = type(points)
    n = len(points)
    V = points[:, None] ** np.arange(n)[None, :]
    return np.linalg.solve(V, GF(values))


def hamming_weight(v):
    return int(np.count_nonzero(v))


def rs_encode(q, k, message):
    """메시지 (f_0, …, f_{k-1}) → (f(α^0), …, f(α^{n-1}))"""
    if len(message) != k:
        raise LengthMismatch(f"메시지 길이 {len(message)} != k={k}")
    GF, _, points = rs_field(q)
    return evaluate_poly(GF(message), points)


def random_rs_error(q, weight, rng):
    """무게가 정확히 weight 인 오류 벡터"""
    GF = galois.GF(q)
    n = q - 1
    e = GF.Zeros(n)
    positions = rng.choice(n, size=weight, replace=False)
    e[positions] = GF(rng.integers(1, q, size=weight))
    return e


def _greedy_rows(M, pool, cols, t):
    """pool 에서 M[rows][:, cols] 가 정칙이 되도록 t 행을 탐욕적으로 선택"""
    chosen = []
    for i in pool:
        trial = chosen + [i]
        if np.linalg.matrix_rank(M[np.ix_(trial, cols)]) == len(trial):
            chosen = trial
            if len(chosen) == t:
                return chosen
    return None


def _rs_solve(e_coeffs, k, t, n):
    """고정된 t 로 e_{k-1}, …, e_0 복원"""
    e = e_coeffs.copy()
    cols = list(range(t + 1))
    for omega in range(k - 1, -1, -1):
        if t == 0:
            e[omega] = 0
            continue
        M = circulant(e)
        pool = list(range(omega + t + 1, n))
        chosen = _greedy_rows(M, pool, cols[:t], t)
        if chosen is None:
            raise CofactorSearchExhausted(f"e_{omega}: 정칙 {t}×{t} 여인수 행을 찾지 못했습니다")
        rows = [omega + t] + chosen
        W = M[np.ix_(rows, cols)]
        W[0, t] = 0
        minor = W[1:, :t]
        a = np.linalg.det(minor)
        if t % 2:
            a = -a
        if a == 0:
            raise CofactorSearchExhausted(f"e_{omega}: 여인수가 0 입니다")
        b = np.linalg.det(W)
        e[omega] = -b / a
    return e


def rs_decode(q, k, y):
    """
    순환 RS 부호 RS[q-1, k] 복호 (순환행렬 소행렬식 소거)

    Args:
        q: 체의 크기
        k: 차원
        y: 길이 q-1 수신 벡터

    Returns:
        tuple: (c, e) GF(q) 배열

    Raises:
        DecodingFailure: w_H(e) > (n-k)/2
        CofactorSearchExhausted: 정칙 여인수를 찾지 못함
    """
    GF, _, points = rs_field(q)
    n = q - 1
    y = GF(y)
    if len(y) != n:
        raise LengthMismatch(f"수신 벡터 길이 {len(y)} != n={n}")
    t_max = (n - k) // 2
    y_coeffs = interpolate_poly(y, points)
    e_top = GF.Zeros(n)
    e_top[k:] = y_coeffs[k:]

    t_est = 0
    if t_max > 0:
        block = circulant(e_top)[k + t_max - 1:, :t_max]
        t_est = int(np.linalg.matrix_rank(block))
    logger.debug(f"RS 오류 무게 추정: {t_est} (t_max={t_max})")

    last_error = None
    for t in range(t_est, t_max + 1):
        try:
            e_coeffs = _rs_solve(e_top, k, t, n)
        except CofactorSearchExhausted as e:
            last_error = e
            continue
        e = evaluate_poly(e_coeffs, points)
        if hamming_weight(e) <= t_max:
            return y - e, e
        logger.debug(f"t={t} 해의 무게 {hamming_weight(e)} > {t_max}, 다음 t 시도")
    if last_error is not None:
        raise last_error
    raise DecodingFailure(f"무게 {t_max} 이하의 오류를 찾지 못했습니다")


def welch_berlekamp_decode(q, k, y):
    """
    Welch–Berlekamp 복호 (독립 기준 구현)

    Q(x_j) = y_j·E(x_j), deg Q < k + t, deg E ≤ t 의 0 이 아닌 해로 f = Q/E.
    """
    GF, _, points = rs_field(q)
    n = q - 1
    y = GF(y)
    t = (n - k) // 2
    VQ = points[:, None] ** np.arange(k + t)[None, :]
    VE = points[:, None] ** np.arange(t + 1)[None, :]
    system = np.hstack([VQ, -(y[:, None] * VE)])
    kernel = system.null_space()
    if kernel.shape[0] == 0:
        raise DecodingFailure("Welch–Berlekamp 선형계의 해가 없습니다")
    solution = kernel[0]
    Q = galois.Poly(solution[:k + t][::-1])
    E = galois.Poly(solution[k + t:][::-1])
    f, remainder = divmod(Q, E)
    if np.any(remainder.coeffs != 0) or f.degree >= k:
        raise DecodingFailure("Q 가 E 로 나누어떨어지지 않습니다 (오류 과다)")
    c = f(points)
    e = y - c
    if hamming_weight(e) > t:
        raise DecodingFailure(f"오류 무게 {hamming_weight(e)} > {t}")
    return c, e
