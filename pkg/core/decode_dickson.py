# -*- coding: utf-8 -*-
"""
G-Dickson 행렬 소행렬식 소거에 의한 θ-RM 복호

수신어 Y = C + E 에서 θ-차수 > r 인 E 의 계수는 Y 에서 그대로 읽히고,
나머지 미지 계수 e_ω 는 φ 내림차순으로 하나씩 복원합니다. 각 단계에서
D(E) 의 (t+1)×(t+1) 윈도우는 미지 원소 하나를 제외하고 모두 이미 알려진
계수의 켤레이며, 랭크가 t 이므로 윈도우의 행렬식이 0 이라는 1차 방정식
a·x + b = 0 으로 x = γ_{p_1}(e_ω) 를 얻습니다.
"""

import logging
from dataclasses import dataclass, field

from core import linalg
from core.errors import DecodingFailure, NoCaseMatched, NotBinaryShape, OrderOutOfRange, SingularCofactor
from core.group import group_table, phi_inv
from core.skew import ThetaPoly, evaluate_at_points

logger = logging.getLogger(__name__)

SCHEDULES = ("general", "binary", "gabidulin")


@dataclass(frozen=True)
class MinorWindow:
    """
    Dickson 행렬의 정사각 윈도우

    Attributes:
        rows, cols: 행/열 인덱스 (같은 길이)
        unknown: 미지 원소의 (행, 열) 위치 (D 의 인덱스)
        target: 복원할 계수 인덱스 ω
        case: 윈도우를 고른 규칙 이름
    """

    rows: tuple
    cols: tuple
    unknown: tuple
    target: int
    case: str = "initial"

    @property
    def order(self):
        return len(self.rows)

    @property
    def conjugator(self):
        """미지 원소 = γ_g(e_ω) 인 g (= 미지 원소의 열)"""
        return self.unknown[1]


@dataclass
class DecodeResult:
    C: ThetaPoly
    E: ThetaPoly
    t: int
    windows: list = field(default_factory=list)
    retries: int = 0
    window_ops: int = 0
    window_field_ops: int = 0

    @property
    def codeword(self):
        return evaluate_at_points(self.C)


class PartialDickson:
    """계수가 일부만 알려진 D(E) (원소를 지연 계산해 캐시)"""

    def __init__(self, frame, known):
        self.frame = frame
        self.known = dict(known)
        self._table = group_table(tuple(frame.shape))
        self._cache = {}

    def coefficient_index(self, i, j):
        return self._table.sigma_inv[i][j]

    def is_known(self, i, j):
        return self.coefficient_index(i, j) in self.known

    def entry(self, i, j):
        key = (i, j)
        if key not in self._cache:
            k = self.coefficient_index(i, j)
            self._cache[key] = self.frame.apply(j, self.known[k])
        return self._cache[key]

    def set_coefficient(self, k, value):
        self.known[k] = value

    def submatrix(self, rows, cols):
        return [[self.entry(i, j) for j in cols] for i in rows]


def furthest_index(spec):
    """가장 먼 미지 계수 인덱스 N - d"""
    N, d = spec.N, spec.d
    s, ell = spec.params.s, spec.params.ell
    shape = spec.shape
    expected = tuple([0] * (s - 1) + [ell] + [n - 1 for n in shape[s:]])
    if phi_inv(N - d, shape).exponents != expected:
        raise NoCaseMatched(f"φ⁻¹(N-d) = {phi_inv(N - d, shape)} != {expected}")
    return N - d


def unknown_indices(spec):
    """미지 계수 인덱스 (φ 내림차순)"""
    return sorted(spec.indices, reverse=True)


def _is_known_index(spec, k, omega):
    return k > omega or group_table(spec.shape).degrees[k] > spec.r


def window_is_valid(spec, window):
    """미지 원소는 e_ω 의 켤레이고, 나머지는 모두 이미 알려진 계수의 켤레인지 확인"""
    table = group_table(spec.shape)
    omega = window.target
    if len(window.rows) != len(window.cols):
        return False
    for i in window.rows:
        for j in window.cols:
            k = table.sigma_inv[i][j]
            if (i, j) == window.unknown:
                if k != omega:
                    return False
            elif not _is_known_index(spec, k, omega):
                return False
    return window.unknown[0] in window.rows and window.unknown[1] in window.cols


def initial_window(spec, t):
    """
    가장 먼 계수 e_{N-d} 의 윈도우

    행 [N-d+p, N-d+p+t], 열 [p-t, p], 미지 원소는 오른쪽 위 (N-d+p, p), p = ⌊d/2⌋
    """
    if not 0 <= t <= spec.radius:
        raise ValueError(f"t={t} 는 [0, {spec.radius}] 밖입니다")
    omega = furthest_index(spec)
    p = spec.d // 2
    rows = tuple(range(omega + p, omega + p + t + 1))
    cols = tuple(range(p - t, p + 1))
    return MinorWindow(rows, cols, (omega + p, p), omega, "initial")


def _case_candidates(spec, omega):
    """
    next_window 의 네 가지 경우 분석: (경우 이름, p_1 후보 목록)

    φ⁻¹(N-d) = (0,…,0,ℓ,n_{s+1}-1,…,n_m-1), ℓ < n_s - 1 로 정규화한 (s, ℓ) 과
    φ⁻¹(N-d+p) = (a_1,…,a_s,n_{s+1}-1,…) 을 기준으로 c = φ⁻¹(ω) 를 나눕니다.
    """
    shape = spec.shape
    table = group_table(shape)
    c = table.digits[omega]
    s, ell = spec.params.s, spec.params.ell
    if ell == shape[s - 1] - 1 and s > 1:
        s, ell = s - 1, 0
    s0 = s - 1
    m = len(shape)
    p = spec.d // 2
    a = list(table.digits[p])
    a[s0] += ell
    # φ(a_1, …, a_s, 0, …, 0)
    top = p + ell * table.radix[s0]

    for u in range(s0 + 1, m):
        if c[u] < shape[u] - 2:
            return "case1", [table.radix[u]]

    high = [u for u in range(s0 + 1, m) if c[u] != shape[u] - 1]
    if high:
        # c_u = n_u - 2, c_i = n_i - 1 (i > u)
        u = high[-1]
        unit = table.radix[u]
        lower = [q for q in range(u) if c[q]]
        candidates = []
        if not lower:
            candidates.append(top + unit)
        elif len(lower) == 1 and c[lower[0]] == 1:
            q = lower[0]
            if q > s0:
                candidates.append(top + unit)
            elif a[q] > 0:
                candidates.append(top - table.radix[q] + unit)
            else:
                candidates.append(top)
        # 하위 자리가 a 를 넘지 않으므로 e_u 만 더해도 N-d+p 이하
        candidates.append(unit)
        return "case2", candidates

    # c_i = n_i - 1 (i > s) 이면 ω ≺ N-d 에서 c_s ≤ ℓ - 1
    if ell >= 2 and c[s0] <= ell - 2:
        return "case3", [(a[s0] - ell + 1) * table.radix[s0]]
    if ell >= 1 and c[s0] == ell - 1:
        lower = [q for q in range(s0) if c[q]]
        if not lower:
            return "case4", [p]
        if len(lower) == 1 and c[lower[0]] == 1:
            q = lower[0]
            if a[q] == 0:
                return "case4", [p]
            return "case4", [p - table.radix[q] + table.radix[s0]]
    return "none", []


def _window_at(spec, omega, p1, t, case):
    rows = tuple(range(omega + p1, omega + p1 + t + 1))
    cols = tuple(range(p1 - t, p1 + 1))
    return MinorWindow(rows, cols, (omega + p1, p1), omega, case)


def _candidate_ok(spec, omega, p1, t):
    N, d = spec.N, spec.d
    p = d // 2
    if p1 < p or omega + p1 > N - d + p:
        return False
    if p1 - t < 0 or omega + p1 + t > N - 1:
        return False
    table = group_table(spec.shape)
    return all(a + b < n for a, b, n in zip(table.digits[omega], table.digits[p1], spec.shape))


def next_window(spec, omega, t):
    """
    e_ω 복원 윈도우: 행 [ω+p_1, ω+p_1+t], 열 [p_1-t, p_1], 미지 원소 (ω+p_1, p_1)

    p_1 은 네 경우 분석의 후보에서 고릅니다. 후보가 모두 윈도우 조건을 어기면
    NoCaseMatched 입니다 (경우 분석은 ω ≺ N-d 인 모든 ω 를 덮습니다).
    """
    case, candidates = _case_candidates(spec, omega)
    for p1 in candidates:
        if _candidate_ok(spec, omega, p1, t):
            window = _window_at(spec, omega, p1, t, case)
            if window_is_valid(spec, window):
                return window
    raise NoCaseMatched(f"ω={omega}, t={t}: {case} 후보 {candidates} 가 모두 유효하지 않습니다 "
                        f"({spec.describe()})")


def gabidulin_window(spec, omega, t):
    """순환 모양: 직전 윈도우를 한 행 위로 민 윈도우 (p_1 = p 고정)"""
    p = spec.d // 2
    window = _window_at(spec, omega, p, t, "gabidulin")
    if not window_is_valid(spec, window):
        raise NoCaseMatched(f"Gabidulin 윈도우가 유효하지 않습니다: ω={omega}, t={t}")
    return window


def binary_window(spec, gamma, t=None):
    """
    (Z/2Z)^m 전용 지지집합 윈도우

    A = supp(γ), B ⊇ A 는 A 밖의 가장 큰 인덱스로 채운 크기 r 집합, t' = max(Bᶜ).
    행 I' = {g : supp(g) ⊇ B∪{t'}}, 열 J' = {g ≠ 0 : supp(g) ⊆ (B∪{t'})ᶜ} ∪ {g'},
    supp(g') = (B\\A)∪{t'}. 미지 원소는 (B∪{t'}, g') 입니다.
    """
    if any(n != 2 for n in spec.shape):
        raise NotBinaryShape(f"이진 모양 전용 윈도우입니다: {spec.shape}")
    m, r = len(spec.shape), spec.r
    if r >= m:
        raise OrderOutOfRange(f"이진 윈도우는 r < m 에서만 정의됩니다: r={r}, m={m}")
    omega = gamma if isinstance(gamma, int) else sum(e << k for k, e in enumerate(gamma.exponents))
    A = {k for k in range(m) if (omega >> k) & 1}
    if len(A) > r:
        raise ValueError(f"|supp(γ)| = {len(A)} > r = {r}")
    B = set(A)
    for k in range(m - 1, -1, -1):
        if len(B) >= r:
            break
        if k not in B:
            B.add(k)
    t_prime = max(k for k in range(m) if k not in B)
    top = B | {t_prime}
    top_mask = sum(1 << k for k in top)
    rest_mask = ((1 << m) - 1) & ~top_mask
    g_prime = sum(1 << k for k in (B - A) | {t_prime})
    rows = [g for g in range(1 << m) if g & top_mask == top_mask]
    others = [g for g in range(1, 1 << m) if g & ~rest_mask == 0]
    full = len(rows)
    t = full - 1 if t is None else t
    if not 0 <= t <= full - 1:
        raise ValueError(f"t={t} 는 [0, {full - 1}] 밖입니다")
    row_list = [top_mask] + [g for g in rows if g != top_mask][:t]
    col_list = others[:t] + [g_prime]
    return MinorWindow(tuple(row_list), tuple(col_list), (top_mask, g_prime), omega, "binary")


def estimate_error_rank(spec, D):
    """
    초기 윈도우에서 미지 원소의 행과 열을 지운 완전히 알려진 부분행렬의 랭크

    Rk(E) ≤ ⌊(d-1)/2⌋ 이면 Rk(E) 와 같습니다.
    """
    t_max = spec.radius
    if t_max == 0:
        return 0
    omega = furthest_index(spec)
    p = spec.d // 2
    rows = range(omega + p + 1, omega + p + t_max + 1)
    cols = range(p - t_max, p)
    M = D.submatrix(rows, cols)
    t = linalg.rank(spec.tower, M)
    logger.debug(f"오류 랭크 추정: t={t} (t_max={t_max})")
    return t


def solve_minor(ops, W, unknown_pos):
    """
    한 원소만 미지인 정사각 행렬 W 에서 det(W) = 0 을 만족하는 미지 원소

    det(W) = a·x + b (a 는 여인수) 이므로 x = -b/a.
    """
    ui, uj = unknown_pos
    n = len(W)
    minor = [[W[i][j] for j in range(n) if j != uj] for i in range(n) if i != ui]
    a = linalg.det(ops, minor)
    if (ui + uj) % 2:
        a = ops.neg(a)
    if ops.is_zero(a):
        raise SingularCofactor(f"{n - 1}×{n - 1} 여인수가 특이합니다")
    zeroed = [list(row) for row in W]
    zeroed[ui][uj] = ops.zero()
    b = linalg.det(ops, zeroed)
    return ops.neg(ops.div(b, a))


def solve_window(spec, D, window):
    """윈도우를 풀어 e_ω = γ_{p_1}⁻¹(x) 를 반환"""
    L = spec.tower
    frame = spec.frame
    rows, cols = window.rows, window.cols
    ui = rows.index(window.unknown[0])
    uj = cols.index(window.unknown[1])
    W = []
    for a, i in enumerate(rows):
        row = []
        for b, j in enumerate(cols):
            row.append(L.zero() if (a, b) == (ui, uj) else D.entry(i, j))
        W.append(row)
    x = solve_minor(L, W, (ui, uj))
    g = window.conjugator
    inverse = group_table(spec.shape).neg(g)
    return frame.apply(inverse, x)


def _as_poly(spec, Y):
    if isinstance(Y, ThetaPoly):
        if Y.frame is not spec.frame:
            raise DecodingFailure("수신 θ-다항식의 프레임이 부호와 다릅니다")
        return Y
    if len(Y) != spec.N:
        raise DecodingFailure(f"수신 벡터 길이 {len(Y)} != N={spec.N}")
    return ThetaPoly(spec.frame, tuple(spec.frame.interpolate(list(Y))))


def _window_for(spec, omega, t, schedule, first):
    if schedule == "binary":
        return binary_window(spec, omega, t)
    if first:
        return initial_window(spec, t)
    if schedule == "gabidulin":
        return gabidulin_window(spec, omega, t)
    return next_window(spec, omega, t)


def decode_with_trace(spec, Y, schedule="general"):
    """
    복호 (윈도우 기록 포함)

    Args:
        spec: CodeSpec
        Y: 평가 벡터 또는 ThetaPoly
        schedule: "general" | "binary" | "gabidulin"

    Returns:
        DecodeResult

    Raises:
        DecodingFailure: 검증 실패 (반경 초과 오류 등)
    """
    if schedule not in SCHEDULES:
        raise ValueError(f"알 수 없는 윈도우 일정: {schedule}")
    L = spec.tower
    Ypoly = _as_poly(spec, Y)
    table = group_table(spec.shape)
    known = {g: c for g, c in enumerate(Ypoly.coeffs) if table.degrees[g] > spec.r}
    D = PartialDickson(spec.frame, known)

    t = estimate_error_rank(spec, D)
    windows = []
    retries = 0
    ops_start = L.ops.total
    field_start = L.ops.field_total
    order = unknown_indices(spec)
    for position, omega in enumerate(order):
        while True:
            window = _window_for(spec, omega, t, schedule, position == 0)
            try:
                value = solve_window(spec, D, window)
                break
            except SingularCofactor:
                if t == 0:
                    raise
                retries += 1
                logger.debug(f"ω={omega}: 여인수 특이, t 를 {t} → {t - 1} 로 줄여 재시도")
                t -= 1
        logger.debug(f"e_{omega} 복원 (윈도우 {window.case}, 행 {window.rows}, 열 {window.cols})")
        D.set_coefficient(omega, value)
        windows.append(window)
    window_ops = L.ops.total - ops_start
    window_field_ops = L.ops.field_total - field_start

    E = ThetaPoly(spec.frame, tuple(D.known.get(g, L.zero()) for g in range(spec.N)))
    C = Ypoly - E
    if not C.has_degree_at_most(spec.r):
        raise DecodingFailure("복원된 부호어의 θ-차수가 r 을 넘습니다")
    rank_E = spec.frame.rank(evaluate_at_points(E))
    if rank_E > spec.radius:
        raise DecodingFailure(f"오류 랭크 {rank_E} 가 복호 반경 {spec.radius} 를 넘습니다")
    return DecodeResult(C, E, rank_E, windows, retries, window_ops, window_field_ops)


def decode(spec, Y, schedule="general"):
    """
    복호

    Returns:
        tuple: (C: ThetaPoly, E: ThetaPoly)
    """
    result = decode_with_trace(spec, Y, schedule)
    return result.C, result.E
