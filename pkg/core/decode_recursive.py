# -*- coding: utf-8 -*-
"""
이진 θ-RM 부호의 재귀 복호

RM(r, m) 의 부호어는 (P + Q, α_m·P + μ·Q) 꼴로 나뉩니다. 여기서 P 는
RM(r, m-1), Q 는 RM(r-1, m-1) 의 부호어이고 μ 는 Kummer 에서 -α_m,
Artin–Schreier 에서 α_m + 1 입니다.

한 단계는 다음 순서로 진행합니다.

    1. 수신어를 두 번 접어(fold) Q 의 성분만 남긴 두 벡터를 만든다
    2. 두 벡터를 RM(r-1, m-1) 로 재귀 복호해 Q 를 복원한다
    3. Q 를 빼고 압축(squeeze)한 벡터에서, 접힌 오류의 행공간을 이용해
       남은 오류 f_0 를 선형계로 구하고 P 를 복원한다

접힌 오류의 랭크가 원래 오류의 랭크와 같다는 가정이 깨지면 결과가 틀릴 수
있으므로, 단계마다 접힌 랭크를 AssumptionReport 에 기록합니다.
"""

import logging
import threading
from concurrent.futures import ThreadPoolExecutor, as_completed
from dataclasses import dataclass, field

from core import linalg
from core.decode_dickson import decode_with_trace
from core.errors import (
    AssumptionViolated,
    DecodingError,
    DecodingFailure,
    NotBinaryShape,
    OddDimension,
    RankDeficientSystem,
    SingularMatrix,
)
from core.rmcode import binary_dual_generator, code_spec
from core.skew import ThetaPoly, evaluate_at_points

logger = logging.getLogger(__name__)


# ---------------------------------------------------------------------------
# 벡터 보조 연산
# ---------------------------------------------------------------------------

def _vadd(L, u, v):
    return [L.add(a, b) for a, b in zip(u, v)]


def _vsub(L, u, v):
    return [L.sub(a, b) for a, b in zip(u, v)]


def _vscale(L, c, v):
    return [L.scale(c, a) for a in v]


def _mul_alpha(L, v, i):
    return [L.mul_by_generator(a, i) for a in v]


def _div_alpha(L, v, i):
    return [L.div_by_generator(a, i) for a in v]


def _mul_mu(L, v, i):
    """μ·v (Kummer: -α_i, Artin–Schreier: α_i + 1)"""
    if L.family == "kummer":
        return [L.neg(L.mul_by_generator(a, i)) for a in v]
    return [L.add(L.mul_by_generator(a, i), a) for a in v]


def _div_mu(L, v, i):
    """v / μ; Artin–Schreier 에서는 (α+1)⁻¹ = α / a"""
    if L.family == "kummer":
        return [L.neg(L.div_by_generator(a, i)) for a in v]
    a_inv = L.base.inv(L.radicands[i])
    return [L.scale(a_inv, L.mul_by_generator(x, i)) for x in v]


def _halves(y):
    half = len(y) // 2
    return y[:half], y[half:]


def _require_binary_frame(frame):
    tower = frame.tower
    if tower.family not in ("kummer", "artin_schreier") or any(n != 2 for n in frame.shape):
        raise NotBinaryShape(f"재귀 복호는 이진 모양 전용입니다: {tower.family}, shape={frame.shape}")


# ---------------------------------------------------------------------------
# 행렬 블록 분할 (K-행렬 수준)
# ---------------------------------------------------------------------------

@dataclass
class BlockSplit:
    """
    N × N 의 K-행렬을 네 개의 (N/2) × (N/2) 블록 성분으로 나눈 결과

    Kummer:         [[A0 + B0, a(A1 - B1)], [A1 + B1, A0 - B0]]
    Artin–Schreier: [[A0 + B0, a(A1 + B1) + B0], [A1 + B1, A0 + A1 + B0]]

    행은 α_m 을 포함하지 않는/포함하는 기저 좌표, 열은 위치의 앞/뒤 절반입니다.
    """

    A0: list
    A1: list
    B0: list
    B1: list
    family: str
    radicand: object


def _quadrants(M):
    n = len(M)
    if n % 2 or any(len(row) != n for row in M):
        raise OddDimension(f"블록 분할에는 짝수 차 정사각 행렬이 필요합니다: {n}")
    h = n // 2
    return ([row[:h] for row in M[:h]], [row[h:] for row in M[:h]],
            [row[:h] for row in M[h:]], [row[h:] for row in M[h:]])


def _madd(f, A, B):
    return [[f.add(a, b) for a, b in zip(ra, rb)] for ra, rb in zip(A, B)]


def _msub(f, A, B):
    return [[f.sub(a, b) for a, b in zip(ra, rb)] for ra, rb in zip(A, B)]


def _mscale(f, c, A):
    return [[f.mul(c, a) for a in row] for row in A]


def block_split(tower, Y):
    """
    부호어의 K-행렬 Y 를 (A0, A1, B0, B1) 로 분해

    Args:
        tower: 이진 타워 (기저체 연산과 a_m 을 제공)
        Y: N × N K-행렬

    Raises:
        OddDimension: 행렬 차수가 홀수일 때
    """
    f = tower.base
    a = tower.radicands[-1]
    TL, TR, BL, BR = _quadrants(Y)
    if tower.family == "kummer":
        half = f.inv(f.from_int(2))
        A0 = _mscale(f, half, _madd(f, TL, BR))
        B0 = _mscale(f, half, _msub(f, TL, BR))
        TR_a = _mscale(f, f.inv(a), TR)
        A1 = _mscale(f, half, _madd(f, BL, TR_a))
        B1 = _mscale(f, half, _msub(f, BL, TR_a))
    else:
        B0 = _msub(f, TR, _mscale(f, a, BL))
        A0 = _msub(f, TL, B0)
        A1 = _msub(f, _msub(f, BR, A0), B0)
        B1 = _msub(f, BL, A1)
    return BlockSplit(A0, A1, B0, B1, tower.family, a)


def reassemble(tower, split):
    """block_split 의 역: 네 블록으로 N × N K-행렬 구성"""
    f = tower.base
    a = split.radicand
    A0, A1, B0, B1 = split.A0, split.A1, split.B0, split.B1
    if split.family == "kummer":
        TL, TR = _madd(f, A0, B0), _mscale(f, a, _msub(f, A1, B1))
        BL, BR = _madd(f, A1, B1), _msub(f, A0, B0)
    else:
        TL = _madd(f, A0, B0)
        TR = _madd(f, _mscale(f, a, _madd(f, A1, B1)), B0)
        BL = _madd(f, A1, B1)
        BR = _madd(f, _madd(f, A0, A1), B0)
    top = [r1 + r2 for r1, r2 in zip(TL, TR)]
    bottom = [r1 + r2 for r1, r2 in zip(BL, BR)]
    return top + bottom


def vector_to_matrix(tower, vector):
    """평가 벡터 → 열 j 가 y_j 의 K-좌표인 N × N 행렬"""
    return tower.coordinate_matrix(vector)


def matrix_to_vector(tower, M):
    """vector_to_matrix 의 역"""
    N = len(M)
    return [tower.element([M[row][j] for row in range(N)]) for j in range(len(M[0]))]


# ---------------------------------------------------------------------------
# 빠른 신드롬
# ---------------------------------------------------------------------------

def _fast(L, s, m, y):
    """{마스크: 값}, |마스크| ≤ s 인 H(s, m) 의 행과 y 의 곱"""
    if s < 0:
        return {}
    if m == 0:
        return {0: y[0]}
    i = m - 1
    bit = 1 << i
    y0, y1 = _halves(y)
    u0 = _fast(L, s, m - 1, y0)
    u1 = _fast(L, s, m - 1, y1)
    out = {}
    for mask, a in u0.items():
        b = u1[mask]
        lower = bin(mask).count("1") <= s - 1
        if L.family == "kummer":
            b_div = L.div_by_generator(b, i)
            out[mask] = L.sub(a, b_div)
            if lower:
                out[mask | bit] = L.add(a, b_div)
        else:
            a_mul = L.mul_by_generator(a, i)
            out[mask] = L.add(a_mul, b)
            if lower:
                out[mask | bit] = L.add(L.add(a_mul, a), b)
    return out


def fast_syndrome(tower, s, m, y):
    """
    쌍대 생성행렬 G*(s, m) 과 y 의 곱을 나비(butterfly) 재귀로 계산

    행 순서는 rmcode.binary_dual_generator 와 같습니다 (|마스크| ≤ s 인 마스크의
    오름차순). 각 단계가 α_m 곱셈/나눗셈만 쓰므로 조밀 행렬 곱보다 훨씬 적은
    K-연산이 듭니다.

    Args:
        tower: 이진 타워
        s: 쌍대 차수 (s < 0 이면 빈 결과)
        m: 깊이, len(y) == 2^m
        y: L 원소 벡터
    """
    if len(y) != 1 << m:
        raise DecodingFailure(f"벡터 길이 {len(y)} != 2^{m}")
    values = _fast(tower, s, m, y)
    return [values[mask] for mask in sorted(values)]


def naive_syndrome(tower, s, m, y):
    """비교용 조밀 행렬 곱 G*(s, m)·y"""
    H = binary_dual_generator(tower.frame(m), s, m)
    return linalg.matvec(tower, H, y)


# ---------------------------------------------------------------------------
# 접기 / 압축
# ---------------------------------------------------------------------------

def fold(frame, y):
    """
    수신 벡터를 두 번 접어 Q 성분만 남김

    Kummer:         w1 = y_lo/α - y_hi/a = (2/α)B0 + 2B1 + (오류)
                    w2 = -θ(y_lo)/α - θ(y_hi)/a = 2B1 - (2/α)B0 + (오류)
    Artin–Schreier: w1 = y_lo + y_hi/α = B0/α + B1 + (오류)
                    w2 = θ(y_lo) + θ(y_hi)/(α+1) = B0/(α+1) + B1 + (오류)

    Returns:
        tuple: (w1, w2) 길이 N/2 벡터
    """
    _require_binary_frame(frame)
    if frame.depth == 0:
        raise OddDimension("깊이 0 프레임은 접을 수 없습니다")
    L = frame.tower
    i = frame.depth - 1
    y_lo, y_hi = _halves(list(y))
    theta = 1 << i
    t_lo = [L.apply(theta, v) for v in y_lo]
    t_hi = [L.apply(theta, v) for v in y_hi]
    if L.family == "kummer":
        a_inv = L.base.inv(L.radicands[i])
        w1 = _vsub(L, _div_alpha(L, y_lo, i), _vscale(L, a_inv, y_hi))
        w2 = _vsub(L, [L.neg(v) for v in _div_alpha(L, t_lo, i)], _vscale(L, a_inv, t_hi))
    else:
        w1 = _vadd(L, y_lo, _div_alpha(L, y_hi, i))
        w2 = _vadd(L, t_lo, _div_mu(L, t_hi, i))
    return w1, w2


def fold_matrix(tower, Y):
    """K-행렬 수준의 접기: 결과는 K(α_m) 위의 (N/2) × (N/2) 좌표 행렬"""
    w1, w2 = fold(tower.frame(tower.m), matrix_to_vector(tower, Y))
    lower = tower.frame(tower.m - 1)
    return lower.coordinate_matrix(w1), lower.coordinate_matrix(w2)


def recover_B(frame, c1, c2):
    """두 접힌 부호어에서 Q = B0 + α·B1 복원, (B0, B1, Q) 반환"""
    L = frame.tower
    i = frame.depth - 1
    f = L.base
    if L.family == "kummer":
        quarter = f.inv(f.from_int(4))
        B1 = _vscale(L, quarter, _vadd(L, c1, c2))
        B0 = _mul_alpha(L, _vscale(L, quarter, _vsub(L, c1, c2)), i)
    else:
        B0 = _vscale(L, L.radicands[i], _vadd(L, c1, c2))
        B1 = _vsub(L, c1, _div_alpha(L, B0, i))
    Q = _vadd(L, B0, _mul_alpha(L, B1, i))
    return B0, B1, Q


def squeeze(frame, y_lo, y_hi):
    """
    Q 를 뺀 두 절반을 한 벡터로 압축

    T(z) 를 α_m 을 포함하지 않는 좌표만 남긴 부분이라 하면
    ỹ0 = T(y_lo) - T(y_hi)/α 이고, 오류가 없을 때 ỹ0 = θ_m(P) 입니다.
    """
    L = frame.tower
    i = frame.depth - 1
    low_lo = [L.split_by_generator(v, i)[0] for v in y_lo]
    low_hi = [L.split_by_generator(v, i)[0] for v in y_hi]
    return _vsub(L, low_lo, _div_alpha(L, low_hi, i))


def _split_P(frame, P0):
    """θ_m(P) 의 평가에서 P = A0 + α·A1 의 (A0, A1)"""
    L = frame.tower
    i = frame.depth - 1
    A0, A1 = [], []
    for v in P0:
        u, w = L.split_by_generator(v, i)
        if L.family == "kummer":
            A0.append(u)
            A1.append(L.neg(w))
        else:
            A0.append(L.add(u, w))
            A1.append(w)
    return A0, A1


def _row_basis(lower, e1, rng=None, sample=None):
    """Mat(e1) 의 K''-행공간 기저 (RREF). sample 이 주어지면 무작위 행 결합 sample 개만 사용"""
    L = lower.tower
    M = lower.coordinate_matrix(e1)
    if sample is not None and rng is not None and sample < len(M):
        f = L.base
        combos = []
        for _ in range(sample):
            weights = [L.from_base(f.random(rng)) for _ in M]
            row = [L.zero()] * len(M[0])
            for w, r in zip(weights, M):
                row = [L.add(x, L.mul(w, v)) for x, v in zip(row, r)]
            combos.append(row)
        M = combos
    R, _ = linalg.rref(L, M)
    return R


def _solve_f0(lower, r, y0, R):
    L = lower.tower
    if not R:
        return [L.zero()] * len(y0)
    s = lower.depth - r - 1
    rhs = fast_syndrome(L, s, lower.depth, y0)
    if not rhs:
        raise RankDeficientSystem("쌍대 행이 없어 오류 행공간을 풀 수 없습니다")
    columns = [fast_syndrome(L, s, lower.depth, row) for row in R]
    system = [[col[k] for col in columns] for k in range(len(rhs))]
    try:
        x = linalg.solve(L, system, rhs)
    except SingularMatrix as e:
        raise RankDeficientSystem(f"f_0 선형계가 유일해를 갖지 않습니다 (행공간 차원 {len(R)})") from e
    f0 = [L.zero()] * len(y0)
    for xk, row in zip(x, R):
        f0 = [L.add(acc, L.mul(xk, v)) for acc, v in zip(f0, row)]
    return f0


def recover_A(frame, r, y0, e1, rng=None, las_vegas=False, rank_hint=None):
    """
    압축 벡터 ỹ0 에서 P 의 성분 복원

    접힌 오류 e1 의 K''-행공간 R 이 ỹ0 의 오류 f_0 의 행공간을 포함한다는
    사실을 이용해, 하위 부호 RM(r, m-1) 의 쌍대 행렬 H 로 (H Rᵀ) x = H ỹ0 를
    풀고 f_0 = Σ x_k R_k 를 얻습니다.

    Args:
        frame: 현재 단계 프레임 (깊이 m')
        r: 현재 단계 차수
        y0: 압축 벡터 (길이 2^{m'-1})
        e1: 첫 번째 접힌 오류
        rng: Las Vegas 표본용 numpy.random.Generator
        las_vegas: True 이면 무작위 행 결합 rank_hint+2 개로 먼저 시도
        rank_hint: 예상 오류 랭크 상한

    Returns:
        tuple: (A0, A1, f0)

    Raises:
        RankDeficientSystem: 선형계가 유일해를 갖지 않을 때
    """
    lower = frame.lower()
    R = None
    if las_vegas and rng is not None:
        sample = (rank_hint or 0) + 2
        R = _row_basis(lower, e1, rng, sample)
        try:
            f0 = _solve_f0(lower, r, y0, R)
        except RankDeficientSystem:
            logger.debug("Las Vegas 표본 행공간이 부족해 전체 행공간으로 재시도")
            R = None
    if R is None:
        R = _row_basis(lower, e1)
        f0 = _solve_f0(lower, r, y0, R)
    P0 = _vsub(lower.tower, y0, f0)
    A0, A1 = _split_P(frame, P0)
    return A0, A1, f0


# ---------------------------------------------------------------------------
# 가정 기록
# ---------------------------------------------------------------------------

@dataclass
class FoldRecord:
    """한 단계의 접힌 오류 랭크 (K(α_{m'}, …) 위)"""

    depth: int
    r: int
    ranks: tuple
    sampled: bool = False


@dataclass
class AssumptionReport:
    """
    단계별 접힌 랭크 기록

    error_rank 는 최종 오류의 K-랭크이며 복호가 실패하면 None 입니다.
    """

    levels: list = field(default_factory=list)
    error_rank: int = None
    failure: str = None

    def violations(self):
        bad = []
        for record in self.levels:
            ranks = [v for v in record.ranks if v is not None]
            if self.error_rank is None:
                if len(set(ranks)) > 1:
                    bad.append(record)
            elif any(v != self.error_rank for v in ranks):
                bad.append(record)
        return bad

    @property
    def clean(self):
        return self.error_rank is not None and not self.violations()

    def to_dict(self):
        return {
            "error_rank": self.error_rank,
            "clean": self.clean,
            "failure": self.failure,
            "levels": [
                {"depth": rec.depth, "r": rec.r, "ranks": list(rec.ranks), "sampled": rec.sampled}
                for rec in self.levels
            ],
        }


@dataclass
class RecursiveResult:
    C: ThetaPoly
    E: ThetaPoly
    t: int
    report: AssumptionReport
    fallback_used: bool = False

    @property
    def codeword(self):
        return evaluate_at_points(self.C)


@dataclass
class _Context:
    tower: object
    top_depth: int
    radius: int
    report: AssumptionReport
    rng: object = None
    las_vegas: bool = False
    parallel: bool = False
    lock: threading.Lock = field(default_factory=threading.Lock)

    def record(self, rec):
        with self.lock:
            self.report.levels.append(rec)


# ---------------------------------------------------------------------------
# 재귀
# ---------------------------------------------------------------------------

def _decode_base(frame, r, y):
    spec = code_spec(frame, r)
    result = decode_with_trace(spec, y)
    c = evaluate_at_points(result.C)
    return c, _vsub(frame.tower, y, c)


def _decode_children(ctx, lower, r, w1, w2, parallel):
    if not parallel:
        return _decode_level(ctx, lower, r, w1), _decode_level(ctx, lower, r, w2)
    results = {}
    with ThreadPoolExecutor(max_workers=2) as executor:
        future_to_fold = {
            executor.submit(_decode_level, ctx, lower, r, w): name
            for name, w in (("first", w1), ("second", w2))
        }
        for future in as_completed(future_to_fold):
            results[future_to_fold[future]] = future.result()
    return results["first"], results["second"]


def _decode_level(ctx, frame, r, y):
    """(부호어 벡터, 오류 벡터)"""
    L = ctx.tower
    m = frame.depth
    if r == 0:
        return _decode_base(frame, r, y)
    if all(L.is_zero(v) for v in fast_syndrome(L, m - r - 1, m, y)):
        return list(y), [L.zero()] * len(y)

    i = m - 1
    lower = frame.lower()
    w1, w2 = fold(frame, y)
    parallel = ctx.parallel and m == ctx.top_depth
    (c1, e1), (c2, e2) = _decode_children(ctx, lower, r - 1, w1, w2, parallel)

    if ctx.las_vegas:
        ranks = (None, None)
    else:
        ranks = (lower.rank(e1), lower.rank(e2))
    ctx.record(FoldRecord(m, r, ranks, sampled=ctx.las_vegas))

    _, _, Q = recover_B(frame, c1, c2)
    y_lo, y_hi = _halves(list(y))
    y_lo = _vsub(L, y_lo, Q)
    y_hi = _vsub(L, y_hi, _mul_mu(L, Q, i))
    y0 = squeeze(frame, y_lo, y_hi)
    A0, A1, _ = recover_A(frame, r, y0, e1, ctx.rng, ctx.las_vegas, ctx.radius)

    P = _vadd(L, A0, _mul_alpha(L, A1, i))
    c_lo = _vadd(L, P, Q)
    c_hi = _vadd(L, _mul_alpha(L, P, i), _mul_mu(L, Q, i))
    c = c_lo + c_hi
    return c, _vsub(L, list(y), c)


def _as_vector(spec, Y):
    if isinstance(Y, ThetaPoly):
        if Y.frame is not spec.frame:
            raise DecodingFailure("수신 θ-다항식의 프레임이 부호와 다릅니다")
        return evaluate_at_points(Y)
    if len(Y) != spec.N:
        raise DecodingFailure(f"수신 벡터 길이 {len(Y)} != N={spec.N}")
    return list(Y)


def decode_recursive(spec, Y, fallback=False, las_vegas=False, parallel=False, rng=None):
    """
    이진 θ-RM 부호의 재귀 복호

    Args:
        spec: 이진 모양 CodeSpec
        Y: 평가 벡터 또는 ThetaPoly
        fallback: 재귀 경로가 실패하면 Dickson 소행렬식 복호로 다시 시도
        las_vegas: A 복원의 행공간을 무작위 표본으로 먼저 구함
        parallel: 최상위 두 접힌 복호를 스레드로 동시에 실행
        rng: numpy.random.Generator (las_vegas 용)

    Returns:
        RecursiveResult: 접힌 랭크 가정이 깨진 단계가 있어도 결과가 검증을 통과하면
            (θ-차수 ≤ r, 오류 랭크 ≤ 반경) 그대로 반환하고, 위반은 report.clean = False
            와 report.violations() 로만 알립니다. 반경 안의 검증된 결과는 유일합니다.

    Raises:
        AssumptionViolated: 접힌 랭크 가정이 깨진 상태에서 복호 실패 (검증 실패 포함)
        DecodingFailure: 그 밖의 복호 실패
    """
    _require_binary_frame(spec.frame)
    L = spec.tower
    y = _as_vector(spec, Y)
    top = L.frame(spec.frame.depth)
    report = AssumptionReport()
    ctx = _Context(L, top.depth, spec.radius, report, rng, las_vegas, parallel)

    try:
        c, e = _decode_level(ctx, top, spec.r, y)
        C = ThetaPoly(spec.frame, tuple(spec.frame.interpolate(c)))
        E = ThetaPoly(spec.frame, tuple(spec.frame.interpolate(e)))
        if not C.has_degree_at_most(spec.r):
            raise DecodingFailure("복원된 부호어의 θ-차수가 r 을 넘습니다")
        t = spec.frame.rank(e)
        if t > spec.radius:
            raise DecodingFailure(f"오류 랭크 {t} 가 복호 반경 {spec.radius} 를 넘습니다")
    except DecodingError as exc:
        report.failure = str(exc)
        report.levels.sort(key=lambda rec: -rec.depth)
        if fallback:
            logger.info(f"재귀 복호 실패 ({exc}), Dickson 복호로 대체")
            result = decode_with_trace(spec, y)
            report.error_rank = result.t
            return RecursiveResult(result.C, result.E, result.t, report, fallback_used=True)
        if report.violations():
            raise AssumptionViolated(f"접힌 랭크 가정 위반: {exc}", report) from exc
        raise

    report.error_rank = t
    report.levels.sort(key=lambda rec: -rec.depth)
    if not report.clean:
        logger.debug(f"접힌 랭크 가정 위반 단계: {[rec.depth for rec in report.violations()]}")
    return RecursiveResult(C, E, t, report)
