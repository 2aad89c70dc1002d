# -*- coding: utf-8 -*-
"""
확장체 타워 L/K

L 은 기저 B = (β_0, …, β_{N-1}) 와 구조 상수로 주어진 K-대수로 표현합니다.
세 가지 계열을 지원합니다.

    - 유한체:        F_{p^N}/F_p, θ_i 는 Frobenius 의 거듭제곱
    - Kummer:        Q(√a_1, …, √a_m)/Q, θ_i 는 √a_i 의 부호 반전
    - Artin–Schreier: F_2(t)(α_1, …, α_m)/F_2(t), α_i² = α_i + a_i, θ_i(α_i) = α_i + 1

모든 계열은 같은 원소 연산, 같은 자기동형 작용, 같은 트레이스/쌍대기저 코드를
공유합니다. 자기동형 인덱스 g 는 Λ(n) 의 φ 인코딩(정수)입니다.

GaloisFrame: ExtensionTower 와 RelativeTower 가 공통으로 제공하는 프레임 인터페이스
(order, shape, points, apply, rank, interpolate, evaluate)로, 복호기는 이 인터페이스만
사용합니다. RelativeTower 는 이진 계열 타워를 중간체 K' = K(α_{d+1}, …, α_m) 위에서
바라본 것입니다.
"""

import logging
import math
import threading
from dataclasses import dataclass
from fractions import Fraction
from itertools import combinations

import galois
import numpy as np

from core import linalg
from core.errors import (
    DegenerateTraceForm,
    DependentExtensions,
    DependentRadicands,
    InvalidTower,
    NoIrreducibleFound,
    NonCoprimeShape,
    ReducibleArtinSchreier,
    SingularMatrix,
    TowerMismatch,
    ZeroInverse,
)
from core.group import group_table, phi
from core.kfield import (
    PrimeField,
    RationalField,
    RationalFunctionField2,
    is_rational_square,
    poly_is_square,
    poly_mul,
    poly_sqrt,
    poly_to_galois,
)

logger = logging.getLogger(__name__)

IRREDUCIBLE_BUDGET_FACTOR = 64


class OpCounter:
    """
    스레드별 연산 카운터

    K-연산 (L-연산을 K-연산 수로 환산한 값) 과 L-연산 횟수를 함께 셉니다.
    L-연산 하나는 덧셈, 곱셈, 역원, 자기동형 작용 한 번입니다.
    """

    def __init__(self):
        self._local = threading.local()

    @staticmethod
    def _fresh():
        return {"add": 0, "mul": 0, "inv": 0, "field": 0}

    def _counts(self):
        counts = getattr(self._local, "counts", None)
        if counts is None:
            counts = self._fresh()
            self._local.counts = counts
        return counts

    def add(self, kind, amount=1, field_op=True):
        counts = self._counts()
        counts[kind] += amount
        if field_op:
            counts["field"] += 1

    def reset(self):
        self._local.counts = self._fresh()

    def snapshot(self):
        return dict(self._counts())

    @property
    def total(self):
        """K-연산 합계"""
        counts = self._counts()
        return counts["add"] + counts["mul"] + counts["inv"]

    @property
    def field_total(self):
        return self._counts()["field"]


@dataclass(frozen=True, eq=False)
class AlgebraElement:
    """L 의 원소: 기저 B 에 대한 K-좌표 (표현 수준 payload 튜플)"""

    tower: object
    coords: tuple

    def _other(self, other):
        if isinstance(other, AlgebraElement):
            if other.tower is not self.tower:
                raise TowerMismatch("서로 다른 타워의 원소")
            return other
        return self.tower.from_base(self.tower.base.normalize(other))

    def __add__(self, other):
        return self.tower.add(self, self._other(other))

    def __radd__(self, other):
        return self.tower.add(self._other(other), self)

    def __sub__(self, other):
        return self.tower.sub(self, self._other(other))

    def __rsub__(self, other):
        return self.tower.sub(self._other(other), self)

    def __mul__(self, other):
        return self.tower.mul(self, self._other(other))

    def __rmul__(self, other):
        return self.tower.mul(self._other(other), self)

    def __truediv__(self, other):
        return self.tower.div(self, self._other(other))

    def __neg__(self):
        return self.tower.neg(self)

    def __eq__(self, other):
        if not isinstance(other, AlgebraElement):
            return NotImplemented
        return self.tower is other.tower and self.coords == other.coords

    def __hash__(self):
        return hash((id(self.tower), self.coords))

    def is_zero(self):
        return self.tower.is_zero(self)

    def inverse(self):
        return self.tower.inv(self)

    def __str__(self):
        return self.tower.format_element(self)


class FrameMixin:
    """쌍대기저를 이용한 보간/평가 (ExtensionTower, RelativeTower 공용)"""

    def _init_frame_cache(self):
        self._frame_lock = threading.Lock()
        self._dual = None
        self._interp = None
        # 차수 r → CodeSpec (rmcode.code_spec)
        self.code_specs = {}

    def dual_basis(self):
        """Tr(β_i β*_j) = δ_ij 를 만족하는 쌍대기저 B* (프레임의 기저체에 대한 트레이스)"""
        with self._frame_lock:
            if self._dual is None:
                self._dual = self._compute_dual_basis()
            return self._dual

    def interpolation_matrix(self):
        """W[h][j] = γ_h(β*_j); 계수 c_h = Σ_j Y_j·W[h][j]"""
        dual = self.dual_basis()
        with self._frame_lock:
            if self._interp is None:
                self._interp = [[self.apply(h, b) for b in dual] for h in range(self.order)]
            return self._interp

    def interpolate(self, values):
        """평가 벡터 (C(β_0), …, C(β_{n-1})) 로부터 θ-다항식 계수 복원"""
        if len(values) != self.order:
            raise ValueError(f"평가 벡터 길이 {len(values)} != {self.order}")
        W = self.interpolation_matrix()
        L = self.tower
        coeffs = []
        for h in range(self.order):
            acc = L.zero()
            for y, w in zip(values, W[h]):
                if not L.is_zero(y):
                    acc = L.add(acc, L.mul(y, w))
            coeffs.append(acc)
        return coeffs

    def evaluate(self, coeffs):
        """계수 벡터를 프레임의 기저점에서 평가"""
        L = self.tower
        values = []
        for point in self.points():
            acc = L.zero()
            for g, c in enumerate(coeffs):
                if not L.is_zero(c):
                    acc = L.add(acc, L.mul(c, self.apply(g, point)))
            values.append(acc)
        return values


class ExtensionTower(FrameMixin):
    """
    구조 상수 K-대수로 표현한 Galois 확장 L/K

    Attributes:
        family: "finite" | "kummer" | "artin_schreier"
        base: 기저체 (core.kfield)
        shape: 군 모양 n = (n_1, …, n_m)
        degree: N = Π n_i
        basis_labels: 기저 원소 이름
    """

    family = "abstract"

    def __init__(self, base, shape, basis_labels, table, generator_matrices, descriptor):
        self.base = base
        self.shape = tuple(shape)
        self.degree = math.prod(self.shape)
        self.order = self.degree
        self.depth = len(self.shape)
        self.basis_labels = list(basis_labels)
        self._table = table
        self._generators = generator_matrices
        self._descriptor = dict(descriptor)
        self.ops = OpCounter()
        self.prefers_bareiss = base.kind != "prime"
        self._group = group_table(self.shape)
        self._aut_dense = self._composite_matrices()
        self._aut_cols = [self._sparse_columns(M) for M in self._aut_dense]
        self._trace_table = None
        self._init_frame_cache()

    # --- 구성 보조 -------------------------------------------------------------

    def _sparse_columns(self, M):
        f = self.base
        N = self.degree
        return [[(k, M[k][j]) for k in range(N) if not f.is_zero(M[k][j])] for j in range(N)]

    def _composite_matrices(self):
        """모든 g ∈ Λ(n) 에 대한 합성 자기동형 행렬 θ^g (φ 순서)"""
        f = self.base
        N = self.degree
        powers = []
        for i, n_i in enumerate(self.shape):
            seq = [linalg.identity(f, N)]
            for _ in range(1, n_i):
                seq.append(linalg.matmul(f, self._generators[i], seq[-1]))
            powers.append(seq)
        composites = []
        for g in range(N):
            M = linalg.identity(f, N)
            for i, e in enumerate(self._group.digits[g]):
                if e:
                    M = linalg.matmul(f, powers[i][e], M)
            composites.append(M)
        return composites

    # --- 원소 생성 -------------------------------------------------------------

    def element(self, coords):
        if len(coords) != self.degree:
            raise ValueError(f"좌표 길이 {len(coords)} != {self.degree}")
        return AlgebraElement(self, tuple(self.base.normalize(c) for c in coords))

    def _wrap(self, coords):
        return AlgebraElement(self, tuple(coords))

    def zero(self):
        return self._wrap([self.base.zero()] * self.degree)

    def one(self):
        return self.basis_element(0)

    def basis_element(self, j):
        f = self.base
        coords = [f.zero()] * self.degree
        coords[j] = f.one()
        return self._wrap(coords)

    def basis(self):
        return [self.basis_element(j) for j in range(self.degree)]

    def from_base(self, c):
        coords = [self.base.zero()] * self.degree
        coords[0] = c
        return self._wrap(coords)

    def random(self, rng):
        return self._wrap([self.base.random(rng) for _ in range(self.degree)])

    def random_nonzero(self, rng):
        while True:
            x = self.random(rng)
            if not self.is_zero(x):
                return x

    # --- 산술 (linalg 연산자 인터페이스) -----------------------------------------

    def _check(self, *elements):
        for x in elements:
            if x.tower is not self:
                raise TowerMismatch("다른 타워의 원소입니다")

    def is_zero(self, x):
        f = self.base
        return all(f.is_zero(c) for c in x.coords)

    def add(self, x, y):
        self.ops.add("add", self.degree)
        f = self.base
        return self._wrap([f.add(a, b) for a, b in zip(x.coords, y.coords)])

    def sub(self, x, y):
        self.ops.add("add", self.degree)
        f = self.base
        return self._wrap([f.sub(a, b) for a, b in zip(x.coords, y.coords)])

    def neg(self, x):
        f = self.base
        return self._wrap([f.neg(a) for a in x.coords])

    def scale(self, c, x):
        """K-스칼라 배"""
        self.ops.add("mul", self.degree)
        f = self.base
        return self._wrap([f.mul(c, a) for a in x.coords])

    def mul(self, x, y):
        self.ops.add("mul", self.degree * self.degree)
        return self._wrap(self._mul_coords(x.coords, y.coords))

    def _mul_coords(self, a, b):
        f = self.base
        N = self.degree
        out = [f.zero()] * N
        for i, ai in enumerate(a):
            if f.is_zero(ai):
                continue
            row = self._table[i]
            for j, bj in enumerate(b):
                if f.is_zero(bj):
                    continue
                c = f.mul(ai, bj)
                for k, s in row[j]:
                    out[k] = f.add(out[k], f.mul(c, s))
        return out

    def multiplication_matrix(self, x):
        """x 에 의한 곱셈의 K-행렬 (열 j = x·β_j 의 좌표)"""
        f = self.base
        N = self.degree
        M = linalg.zeros(f, N, N)
        for j in range(N):
            unit = [f.zero()] * N
            unit[j] = f.one()
            col = self._mul_coords(x.coords, unit)
            for k in range(N):
                M[k][j] = col[k]
        return M

    def mul_table(self, j):
        """β_j 에 의한 곱셈 행렬"""
        return self.multiplication_matrix(self.basis_element(j))

    def inv(self, x):
        if self.is_zero(x):
            raise ZeroInverse("0 은 역원이 없습니다")
        N = self.degree
        self.ops.add("inv", 1)
        self.ops.add("mul", N * N * N, field_op=False)
        f = self.base
        rhs = [f.zero()] * N
        rhs[0] = f.one()
        try:
            z = linalg.solve(f, self.multiplication_matrix(x), rhs)
        except SingularMatrix as e:
            raise InvalidTower(f"0 이 아닌 원소 {self.format_element(x)} 가 가역이 아님: 타워가 체가 아닙니다") from e
        return self._wrap(z)

    def div(self, x, y):
        return self.mul(x, self.inv(y))

    def power(self, x, e):
        result = self.one()
        base = x
        while e:
            if e & 1:
                result = self.mul(result, base)
            base = self.mul(base, base)
            e >>= 1
        return result

    # --- 자기동형 ---------------------------------------------------------------

    def apply(self, g, x):
        """θ^g(x), g 는 φ 인덱스"""
        if g == 0:
            return x
        cols = self._aut_cols[g]
        f = self.base
        out = [f.zero()] * self.degree
        count = 0
        for j, xj in enumerate(x.coords):
            if f.is_zero(xj):
                continue
            for k, c in cols[j]:
                out[k] = f.add(out[k], f.mul(xj, c))
                count += 1
        self.ops.add("mul", count)
        return self._wrap(out)

    def apply_aut(self, g, x):
        """GroupIndex 또는 φ 인덱스 g 의 작용"""
        if not isinstance(g, int):
            if tuple(g.shape) != self.shape:
                raise TowerMismatch(f"인덱스 shape {g.shape} != 타워 shape {self.shape}")
            g = phi(g)
        self._check(x)
        return self.apply(g, x)

    def aut_matrix(self, g):
        """합성 자기동형 θ^g 의 K-행렬"""
        return linalg.copy_matrix(self._aut_dense[g])

    def generator_matrix(self, i):
        """생성원 θ_i (0-기준) 의 K-행렬"""
        return linalg.copy_matrix(self._generators[i])

    def inverse_index(self, g):
        return self._group.neg(g)

    def alg_ops(self, x, y=None, op="add", g=None):
        """
        원소 연산 디스패처

        Args:
            op: "add" | "mul" | "inv" | "apply_aut"
            g: apply_aut 의 군 원소 (GroupIndex 또는 φ 인덱스)
        """
        self._check(x)
        if op == "add":
            self._check(y)
            return self.add(x, y)
        if op == "mul":
            self._check(y)
            return self.mul(x, y)
        if op == "inv":
            return self.inv(x)
        if op == "apply_aut":
            return self.apply_aut(g, x)
        raise ValueError(f"지원하지 않는 연산: {op}")

    # --- 트레이스와 쌍대기저 ------------------------------------------------------

    def trace_table(self):
        """Tr(β_j) ∈ K 의 표"""
        if self._trace_table is None:
            table = []
            for j in range(self.degree):
                total = self.zero()
                b = self.basis_element(j)
                for g in range(self.order):
                    total = self.add(total, self.apply(g, b))
                if any(not self.base.is_zero(c) for c in total.coords[1:]):
                    raise InvalidTower(f"Tr(β_{j}) 가 K 에 속하지 않습니다")
                table.append(total.coords[0])
            self._trace_table = table
        return self._trace_table

    def trace(self, x):
        f = self.base
        acc = f.zero()
        for c, t in zip(x.coords, self.trace_table()):
            if not f.is_zero(c) and not f.is_zero(t):
                acc = f.add(acc, f.mul(c, t))
        return acc

    def gram_matrix(self):
        basis = self.basis()
        return [[self.trace(self.mul(bi, bj)) for bj in basis] for bi in basis]

    def _compute_dual_basis(self):
        f = self.base
        try:
            G_inv = linalg.inverse(f, self.gram_matrix())
        except SingularMatrix as e:
            raise DegenerateTraceForm("트레이스 Gram 행렬이 특이합니다") from e
        N = self.degree
        return [self._wrap([G_inv[k][j] for k in range(N)]) for j in range(N)]

    def trace_and_dual_basis(self):
        """(트레이스 표, 쌍대기저 B*)"""
        return self.trace_table(), self.dual_basis()

    # --- 프레임 인터페이스 ----------------------------------------------------------

    @property
    def tower(self):
        return self

    def points(self):
        return self.basis()

    def exp_basis(self, vector):
        """Exp_B: 열 j 가 v_j 의 좌표인 N × n K-행렬"""
        for v in vector:
            self._check(v)
        N = self.degree
        return [[v.coords[k] for v in vector] for k in range(N)]

    coordinate_matrix = exp_basis

    def rank(self, vector):
        """벡터의 K-랭크 (좌표 span 의 차원)"""
        if not vector:
            return 0
        return linalg.rank(self.base, self.exp_basis(vector))

    # --- 검증 -------------------------------------------------------------------

    def validate(self):
        """자기동형 준동형성, 위수, 가환성, 합성 자기동형의 서로 다름을 확인"""
        N = self.degree
        basis = self.basis()
        identity = linalg.identity(self.base, N)
        for i, n_i in enumerate(self.shape):
            g = self._group.encode(tuple(1 if k == i else 0 for k in range(self.depth)))
            for a in range(N):
                for b in range(a, N):
                    lhs = self.apply(g, self.mul(basis[a], basis[b]))
                    rhs = self.mul(self.apply(g, basis[a]), self.apply(g, basis[b]))
                    if lhs != rhs:
                        raise InvalidTower(f"θ_{i + 1} 이 곱을 보존하지 않습니다 (β_{a}, β_{b})")
            M = identity
            for e in range(1, n_i + 1):
                M = linalg.matmul(self.base, self._generators[i], M)
                if (M == identity) != (e == n_i):
                    raise InvalidTower(f"θ_{i + 1} 의 위수가 {n_i} 가 아닙니다")
            for j in range(i + 1, self.depth):
                A, B = self._generators[i], self._generators[j]
                if linalg.matmul(self.base, A, B) != linalg.matmul(self.base, B, A):
                    raise InvalidTower(f"θ_{i + 1}, θ_{j + 1} 이 가환이 아닙니다")
        distinct = {tuple(tuple(row) for row in M) for M in self._aut_dense}
        if len(distinct) != N:
            self._raise_dependent(f"합성 자기동형 {N} 개 중 {len(distinct)} 개만 서로 다릅니다")
        logger.debug(f"타워 검증 완료: {self}")
        return True

    def _raise_dependent(self, message):
        raise InvalidTower(message)

    # --- 표현 -------------------------------------------------------------------

    def descriptor(self):
        return dict(self._descriptor)

    def format_element(self, x):
        return " ".join(self.base.format(c) for c in x.coords)

    def parse_element(self, text):
        parts = text.split()
        if len(parts) != self.degree:
            raise ValueError(f"좌표 {len(parts)} 개, {self.degree} 개 필요")
        return self._wrap([self.base.parse(p) for p in parts])

    def __str__(self):
        return f"{self.family} tower over {self.base}, shape={self.shape}"

    def __repr__(self):
        return f"<{type(self).__name__} shape={self.shape}>"


# ---------------------------------------------------------------------------
# 유한체 타워
# ---------------------------------------------------------------------------

class FiniteTower(ExtensionTower):
    """F_{p^N} = F_p[x]/(f), 다항식 기저 x^i"""

    family = "finite"

    def __init__(self, p, shape, modulus, seed):
        base = PrimeField(p)
        N = math.prod(shape)
        self.p = p
        self.degree = N
        self.modulus = [int(c) for c in modulus]
        self.seed = seed
        self._xpow = self._reduction_table(p, N, self.modulus)
        table = [[self._xpow[i + j] for j in range(N)] for i in range(N)]
        frob = self._frobenius_matrix(p, N)
        generators = []
        for n_i in shape:
            generators.append(_matrix_power(base, frob, N // n_i))
        labels = ["1"] + [f"x^{i}" if i > 1 else "x" for i in range(1, N)]
        descriptor = {"family": "finite", "p": p, "shape": list(shape),
                      "modulus": list(modulus), "seed": seed}
        super().__init__(base, shape, labels, table, generators, descriptor)

    @staticmethod
    def _reduction_table(p, N, modulus):
        """x^s mod f (0 ≤ s ≤ 2N-2) 의 희소 좌표"""
        current = [0] * N
        current[0] = 1
        table = []
        for _ in range(2 * N - 1):
            table.append([(k, c) for k, c in enumerate(current) if c])
            top = current[-1]
            shifted = [0] + current[:-1]
            if top:
                shifted = [(s - top * modulus[k]) % p for k, s in enumerate(shifted)]
            current = shifted
        return table

    def _mul_coords(self, a, b):
        p, N = self.p, self.degree
        conv = [0] * (2 * N - 1)
        for i, ai in enumerate(a):
            if ai:
                for j, bj in enumerate(b):
                    if bj:
                        conv[i + j] += ai * bj
        out = conv[:N]
        for s in range(N, 2 * N - 1):
            c = conv[s] % p
            if c:
                for k, v in self._xpow[s]:
                    out[k] += c * v
        return [x % p for x in out]

    def _frobenius_matrix(self, p, N):
        x = [0] * N
        x[1] = 1
        xp = _power_coords(self, x, p, N)
        columns = [[1] + [0] * (N - 1)]
        for _ in range(1, N):
            columns.append(self._mul_coords(columns[-1], xp))
        return [[columns[j][k] for j in range(N)] for k in range(N)]

    def frobenius(self, x):
        """x ↦ x^p (곱셈 오라클)"""
        return self.power(x, self.p)


def _power_coords(tower, coords, e, N):
    result = [1] + [0] * (N - 1)
    base = list(coords)
    while e:
        if e & 1:
            result = tower._mul_coords(result, base)
        base = tower._mul_coords(base, base)
        e >>= 1
    return result


def _matrix_power(field, M, e):
    result = linalg.identity(field, len(M))
    for _ in range(e):
        result = linalg.matmul(field, M, result)
    return result


def find_irreducible(p, N, seed=0, budget_factor=IRREDUCIBLE_BUDGET_FACTOR):
    """
    F_p 위 N 차 모닉 기약다항식 무작위 탐색 (시드 고정 시 결정적)

    Returns:
        list: 오름차순 계수 [c_0, …, c_{N-1}, 1]
    """
    GF = galois.GF(p)
    rng = np.random.default_rng(seed)
    budget = budget_factor * N
    for attempt in range(budget):
        lower = [int(c) for c in rng.integers(0, p, size=N, dtype=np.uint64)]
        if lower[0] == 0:
            continue
        poly = galois.Poly([1] + lower[::-1], field=GF)
        if poly.is_irreducible():
            logger.debug(f"기약다항식 발견 (시도 {attempt + 1}/{budget}): {poly}")
            return lower + [1]
    raise NoIrreducibleFound(f"F_{p} 위 {N} 차 기약다항식을 {budget} 회 안에 찾지 못했습니다")


def build_finite_tower(p, shape, seed=0, modulus=None, budget_factor=IRREDUCIBLE_BUDGET_FACTOR):
    """
    유한체 타워 F_{p^N}/F_p, θ_i = Frob^{N/n_i}

    Args:
        p: 소수
        shape: 서로소인 n_i 들
        seed: 기약다항식 탐색 시드
        modulus: 직접 지정할 기약다항식 (오름차순 계수, 선택)
    """
    shape = tuple(int(n) for n in shape)
    base = PrimeField(p)
    if any(n < 2 for n in shape):
        raise NonCoprimeShape(f"n_i 는 2 이상이어야 합니다: {shape}")
    for a, b in combinations(shape, 2):
        if math.gcd(a, b) != 1:
            raise NonCoprimeShape(f"shape {shape} 의 {a}, {b} 가 서로소가 아닙니다")
    N = math.prod(shape)
    if modulus is None:
        modulus = find_irreducible(base.p, N, seed=seed, budget_factor=budget_factor)
    tower = FiniteTower(base.p, shape, modulus, seed)
    tower.validate()
    logger.info(f"유한체 타워 생성: F_{p}^{N}, shape={shape}")
    return tower


# ---------------------------------------------------------------------------
# 이진 계열 (Kummer / Artin–Schreier)
# ---------------------------------------------------------------------------

def _popcount(x):
    return bin(x).count("1")


class BinaryTower(ExtensionTower):
    """기저가 α_i 의 부분곱 β_x (x 는 비트마스크) 인 (Z/2Z)^m 타워"""

    def __init__(self, base, radicands, table, generators, labels, descriptor):
        self.radicands = list(radicands)
        self.m = len(radicands)
        self._frames = {}
        self._frames_lock = threading.Lock()
        super().__init__(base, (2,) * self.m, labels, table, generators, descriptor)

    def generator(self, i):
        """α_{i+1} = β_{2^i}"""
        return self.basis_element(1 << i)

    def frame(self, depth):
        """깊이 depth 의 상대 프레임 (타워마다 한 번 생성)"""
        with self._frames_lock:
            if depth not in self._frames:
                self._frames[depth] = RelativeTower(self, depth)
            return self._frames[depth]

    def lower(self):
        return self.frame(self.m - 1)

    def split_by_generator(self, z, i):
        """z = u + α_i·v 인 (u, v); u, v 는 α_i 를 포함하지 않는 기저 원소로만 전개"""
        f, bit = self.base, 1 << i
        u = [f.zero()] * self.degree
        v = [f.zero()] * self.degree
        for s, c in enumerate(z.coords):
            if s & bit:
                v[s ^ bit] = c
            else:
                u[s] = c
        return self._wrap(u), self._wrap(v)

    def mul_by_generator(self, x, i):
        raise NotImplementedError

    def div_by_generator(self, x, i):
        raise NotImplementedError


class KummerTower(BinaryTower):
    """Q(√a_1, …, √a_m), β_x β_y = (Π_{i∈x∩y} a_i) β_{x⊕y}"""

    family = "kummer"

    def __init__(self, radicands):
        base = RationalField()
        radicands = [Fraction(a) for a in radicands]
        m = len(radicands)
        N = 1 << m
        table = [[[(x ^ y, _subset_product(radicands, x & y))] for y in range(N)] for x in range(N)]
        generators = []
        for i in range(m):
            M = linalg.zeros(base, N, N)
            for x in range(N):
                M[x][x] = Fraction(-1) if (x >> i) & 1 else Fraction(1)
            generators.append(M)
        labels = [_kummer_label(radicands, x) for x in range(N)]
        descriptor = {"family": "kummer", "radicands": [str(a) for a in radicands],
                      "shape": [2] * m}
        super().__init__(base, radicands, table, generators, labels, descriptor)

    def _raise_dependent(self, message):
        raise DependentRadicands(message)

    def mul_by_generator(self, x, i):
        """α_i·x 를 O(N) 좌표 치환으로 계산"""
        bit, a = 1 << i, self.radicands[i]
        out = [Fraction(0)] * self.degree
        for s, c in enumerate(x.coords):
            if c:
                if s & bit:
                    out[s ^ bit] += a * c
                else:
                    out[s | bit] += c
        self.ops.add("mul", self.degree)
        return self._wrap(out)

    def div_by_generator(self, x, i):
        """x / α_i = α_i·x / a_i"""
        y = self.mul_by_generator(x, i)
        return self.scale(1 / self.radicands[i], y)


class ArtinSchreierTower(BinaryTower):
    """F_2(t)(α_1, …, α_m), α_i² = α_i + a_i"""

    family = "artin_schreier"

    def __init__(self, radicands):
        base = RationalFunctionField2()
        radicands = [base.normalize(a) for a in radicands]
        m = len(radicands)
        N = 1 << m
        table = [[self._product_terms(base, radicands, x, y) for y in range(N)] for x in range(N)]
        generators = []
        for i in range(m):
            bit = 1 << i
            M = linalg.zeros(base, N, N)
            for x in range(N):
                M[x][x] = base.one()
                if x & bit:
                    M[x ^ bit][x] = base.one()
            generators.append(M)
        labels = ["1"] + ["".join(f"α{i + 1}" for i in range(m) if (x >> i) & 1) for x in range(1, N)]
        descriptor = {"family": "artin_schreier",
                      "radicands": [base.format(a) for a in radicands], "shape": [2] * m}
        super().__init__(base, radicands, table, generators, labels, descriptor)

    @staticmethod
    def _product_terms(base, radicands, x, y):
        """β_x β_y = Σ_{U⊆x∩y} (Π_{(x∩y)\\U} a_i) β_{U∪(x⊕y)}"""
        common, sym = x & y, x ^ y
        terms = {}
        u = common
        while True:
            coeff = base.one()
            rest = common & ~u
            for i, a in enumerate(radicands):
                if (rest >> i) & 1:
                    coeff = base.mul(coeff, a)
            k = u | sym
            terms[k] = base.add(terms.get(k, base.zero()), coeff)
            if u == 0:
                break
            u = (u - 1) & common
        return [(k, c) for k, c in sorted(terms.items()) if not base.is_zero(c)]

    def _raise_dependent(self, message):
        raise DependentExtensions(message)

    def mul_by_generator(self, x, i):
        """α_i·x: 비트가 있으면 β_x + a_i β_{x\\i}, 없으면 β_{x∪i}"""
        f, bit, a = self.base, 1 << i, self.radicands[i]
        out = [f.zero()] * self.degree
        for s, c in enumerate(x.coords):
            if f.is_zero(c):
                continue
            if s & bit:
                out[s] = f.add(out[s], c)
                out[s ^ bit] = f.add(out[s ^ bit], f.mul(a, c))
            else:
                out[s | bit] = f.add(out[s | bit], c)
        self.ops.add("mul", self.degree)
        return self._wrap(out)

    def div_by_generator(self, x, i):
        """x / α_i = (α_i + 1)·x / a_i"""
        y = self.add(self.mul_by_generator(x, i), x)
        return self.scale(self.base.inv(self.radicands[i]), y)


def _subset_product(values, mask):
    result = Fraction(1)
    for i, a in enumerate(values):
        if (mask >> i) & 1:
            result *= a
    return result


def _kummer_label(radicands, x):
    if x == 0:
        return "1"
    value = _subset_product(radicands, x)
    text = str(value.numerator) if value.denominator == 1 else f"({value})"
    return f"√{text}"


def build_kummer_tower(radicands):
    """
    Kummer 타워 Q(√a_1, …, √a_m)

    Raises:
        DependentRadicands: 0 이거나, 공집합이 아닌 부분곱이 유리수의 제곱일 때
    """
    radicands = [Fraction(a) for a in radicands]
    if not radicands:
        raise DependentRadicands("근호가 하나 이상 필요합니다")
    m = len(radicands)
    for mask in range(1, 1 << m):
        product = _subset_product(radicands, mask)
        if product == 0 or is_rational_square(product):
            chosen = [str(radicands[i]) for i in range(m) if (mask >> i) & 1]
            raise DependentRadicands(f"부분곱 {'·'.join(chosen)} = {product} 가 제곱수입니다")
    tower = KummerTower(radicands)
    tower.validate()
    logger.info(f"Kummer 타워 생성: radicands={[str(a) for a in radicands]}")
    return tower


def _poly_divisors(n):
    """F_2[t] 다항식 n 의 모든 약수 (비트마스크)"""
    if n == 1:
        return [1]
    factors, multiplicities = poly_to_galois(n).factors()
    divisors = [1]
    for factor, mult in zip(factors, multiplicities):
        f = int(factor)
        extended = []
        for d in divisors:
            power = 1
            for _ in range(int(mult) + 1):
                extended.append(poly_mul(d, power))
                power = poly_mul(power, f)
        divisors = extended
    return divisors


def is_artin_schreier_value(a):
    """
    a ∈ ℘(F_2(t)) = {r² + r} 판정 (X² + X + a 가 근을 가짐)

    r = u/v (기약, v 모닉) 이면 r² + r = u(u+v)/v² 이고 기약이므로
    분모가 제곱 v² 이어야 하며 분자의 약수 u 가 u(u+v) = 분자를 만족해야 합니다.
    """
    num, den = a
    if num == 0:
        return True
    if not poly_is_square(den):
        return False
    v = poly_sqrt(den)
    for u in _poly_divisors(num):
        if poly_mul(u, u ^ v) == num:
            return True
    return False


def build_artin_schreier_tower(radicands):
    """
    Artin–Schreier 타워 F_2(t)(α_1, …, α_m)

    Raises:
        ReducibleArtinSchreier: X² + X + a_i 가 가약
        DependentExtensions: 공집합이 아닌 부분합이 ℘(F_2(t)) 에 속함
    """
    field = RationalFunctionField2()
    radicands = [field.normalize(a) for a in radicands]
    if not radicands:
        raise ReducibleArtinSchreier("radicand 가 하나 이상 필요합니다")
    for a in radicands:
        if is_artin_schreier_value(a):
            raise ReducibleArtinSchreier(f"X² + X + {field.format(a)} 가 가약입니다")
    m = len(radicands)
    for mask in range(1, 1 << m):
        if _popcount(mask) < 2:
            continue
        total = field.zero()
        for i in range(m):
            if (mask >> i) & 1:
                total = field.add(total, radicands[i])
        if is_artin_schreier_value(total):
            raise DependentExtensions(f"부분합 {field.format(total)} 이 ℘(F_2(t)) 에 속합니다")
    tower = ArtinSchreierTower(radicands)
    tower.validate()
    logger.info(f"Artin–Schreier 타워 생성: radicands={[field.format(a) for a in radicands]}")
    return tower


def build_tower(descriptor, budget_factor=IRREDUCIBLE_BUDGET_FACTOR):
    """타워 기술자(JSON 딕셔너리)로부터 타워 생성"""
    family = descriptor.get("family")
    if family == "finite":
        return build_finite_tower(int(descriptor["p"]), descriptor["shape"],
                                  seed=int(descriptor.get("seed", 0)),
                                  modulus=descriptor.get("modulus"),
                                  budget_factor=budget_factor)
    if family == "kummer":
        return build_kummer_tower([Fraction(a) for a in descriptor["radicands"]])
    if family == "artin_schreier":
        field = RationalFunctionField2()
        return build_artin_schreier_tower([field.parse(str(a)) for a in descriptor["radicands"]])
    raise InvalidTower(f"알 수 없는 타워 계열: {family!r}")


# ---------------------------------------------------------------------------
# 상대 프레임
# ---------------------------------------------------------------------------

class RelativeTower(FrameMixin):
    """
    이진 타워 L 을 K' = K(α_{d+1}, …, α_m) 위에서 본 프레임 (d = depth)

    기저점은 β_x (x < 2^d), 군은 θ_1, …, θ_d 로 생성됩니다. 원소 z 의
    K'-좌표는 z'_S = Σ_T z_{S∪T} β_T (T 는 상위 비트 부분집합) 입니다.
    """

    def __init__(self, tower, depth):
        if not isinstance(tower, BinaryTower):
            raise InvalidTower("상대 프레임은 Kummer/Artin–Schreier 타워에서만 지원됩니다")
        if not 0 <= depth <= tower.m:
            raise InvalidTower(f"깊이 {depth} 는 [0, {tower.m}] 밖입니다")
        self._tower = tower
        self.depth = depth
        self.shape = (2,) * depth
        self.order = 1 << depth
        self.prefers_bareiss = tower.prefers_bareiss
        self._init_frame_cache()

    @property
    def tower(self):
        return self._tower

    @property
    def family(self):
        return self._tower.family

    def points(self):
        return [self._tower.basis_element(x) for x in range(self.order)]

    def apply(self, g, x):
        return self._tower.apply(g, x)

    def inverse_index(self, g):
        return g

    def generator(self, i):
        return self._tower.generator(i)

    def lower(self):
        return self._tower.frame(self.depth - 1)

    def relative_coordinates(self, z):
        """K'-좌표 (각 좌표는 K' ⊂ L 의 원소)"""
        L = self._tower
        f = L.base
        N = L.degree
        coords = []
        for S in range(self.order):
            values = [f.zero()] * N
            for T in range(0, N, self.order):
                values[T] = z.coords[S | T]
            coords.append(L._wrap(values))
        return coords

    def coordinate_matrix(self, vector):
        """행 S (K'-기저), 열 위치 j 인 K'-값 행렬"""
        columns = [self.relative_coordinates(v) for v in vector]
        return [[col[S] for col in columns] for S in range(self.order)]

    def rank(self, vector):
        """벡터의 K'-랭크"""
        if not vector:
            return 0
        return linalg.rank(self._tower, self.coordinate_matrix(vector))

    def relative_trace(self, z):
        L = self._tower
        total = L.zero()
        for g in range(self.order):
            total = L.add(total, L.apply(g, z))
        return total

    def _compute_dual_basis(self):
        L = self._tower
        points = self.points()
        gram = [[self.relative_trace(L.mul(a, b)) for b in points] for a in points]
        try:
            G_inv = linalg.inverse(L, gram)
        except SingularMatrix as e:
            raise DegenerateTraceForm("상대 트레이스 Gram 행렬이 특이합니다") from e
        dual = []
        for j in range(self.order):
            acc = L.zero()
            for k, b in enumerate(points):
                acc = L.add(acc, L.mul(G_inv[k][j], b))
            dual.append(acc)
        return dual

    def __str__(self):
        return f"relative frame depth={self.depth} of {self._tower}"
