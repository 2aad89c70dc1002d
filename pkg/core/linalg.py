# -*- coding: utf-8 -*-
"""
정확 선형대수 (가우스 소거, RREF, 영공간, Bareiss 행렬식)

모든 함수는 첫 인자로 연산자 묶음 ops 를 받습니다. ops 는
zero/one/add/sub/mul/div/neg/is_zero 를 제공하는 객체로, 기저체
(core.kfield 의 체 객체, 표현 수준)와 확장체 타워(core.tower, AlgebraElement
수준) 모두 이 인터페이스를 만족합니다. 행렬은 리스트의 리스트입니다.
"""

from core.errors import SingularMatrix


def copy_matrix(M):
    return [list(row) for row in M]


def zeros(ops, rows, cols):
    return [[ops.zero() for _ in range(cols)] for _ in range(rows)]


def identity(ops, n):
    M = zeros(ops, n, n)
    for i in range(n):
        M[i][i] = ops.one()
    return M


def transpose(M):
    return [list(col) for col in zip(*M)] if M else []


def matmul(ops, A, B):
    """행렬 곱 A·B"""
    if not A:
        return []
    inner = len(B)
    cols = len(B[0]) if B else 0
    out = zeros(ops, len(A), cols)
    for i, row in enumerate(A):
        for k in range(inner):
            a = row[k]
            if ops.is_zero(a):
                continue
            b_row = B[k]
            out_row = out[i]
            for j in range(cols):
                if not ops.is_zero(b_row[j]):
                    out_row[j] = ops.add(out_row[j], ops.mul(a, b_row[j]))
    return out


def matvec(ops, A, v):
    """행렬-벡터 곱 A·v"""
    out = []
    for row in A:
        acc = ops.zero()
        for a, x in zip(row, v):
            if not ops.is_zero(a) and not ops.is_zero(x):
                acc = ops.add(acc, ops.mul(a, x))
        out.append(acc)
    return out


def is_zero_matrix(ops, M):
    return all(ops.is_zero(x) for row in M for x in row)


def row_echelon(ops, M, rhs=None):
    """
    제자리 행 사다리꼴 변환

    Args:
        M: 변환할 행렬 (수정됨)
        rhs: 함께 변환할 우변 벡터 (선택, 수정됨)

    Returns:
        list: 피벗 열 목록
    """
    n_rows = len(M)
    n_cols = len(M[0]) if M else 0
    pivots = []
    piv_r = 0
    for piv_c in range(n_cols):
        if piv_r >= n_rows:
            break
        for i_row in range(piv_r, n_rows):
            if not ops.is_zero(M[i_row][piv_c]):
                break
        else:
            continue
        if i_row != piv_r:
            M[piv_r], M[i_row] = M[i_row], M[piv_r]
            if rhs is not None:
                rhs[piv_r], rhs[i_row] = rhs[i_row], rhs[piv_r]
        fp = M[piv_r][piv_c]
        for r in range(piv_r + 1, n_rows):
            fr = M[r][piv_c]
            if ops.is_zero(fr):
                continue
            frp = ops.div(fr, fp)
            row_r, row_p = M[r], M[piv_r]
            for c in range(piv_c, n_cols):
                if not ops.is_zero(row_p[c]):
                    row_r[c] = ops.sub(row_r[c], ops.mul(row_p[c], frp))
            if rhs is not None:
                rhs[r] = ops.sub(rhs[r], ops.mul(rhs[piv_r], frp))
        pivots.append(piv_c)
        piv_r += 1
    return pivots


def rank(ops, M):
    """정확 가우스 소거에 의한 랭크"""
    if not M:
        return 0
    return len(row_echelon(ops, copy_matrix(M)))


def rref(ops, M):
    """
    기약 행 사다리꼴

    Returns:
        tuple: (0 이 아닌 행만 남긴 RREF 행렬, 피벗 열 목록)
    """
    R = copy_matrix(M)
    pivots = row_echelon(ops, R)
    R = R[:len(pivots)]
    for r in range(len(pivots) - 1, -1, -1):
        c = pivots[r]
        inv = ops.div(ops.one(), R[r][c])
        R[r] = [ops.mul(x, inv) for x in R[r]]
        for above in range(r):
            f = R[above][c]
            if ops.is_zero(f):
                continue
            R[above] = [ops.sub(x, ops.mul(f, y)) for x, y in zip(R[above], R[r])]
    return R, pivots


def solve(ops, A, b):
    """
    A·x = b 의 유일해

    Raises:
        SingularMatrix: 해가 없거나 유일하지 않을 때
    """
    M = copy_matrix(A)
    t = list(b)
    pivots = row_echelon(ops, M, t)
    n_cols = len(A[0]) if A else 0
    for r in range(len(pivots), len(M)):
        if not ops.is_zero(t[r]):
            raise SingularMatrix("선형계가 모순입니다")
    if len(pivots) != n_cols:
        raise SingularMatrix(f"해가 유일하지 않습니다 (랭크 {len(pivots)} < {n_cols})")
    x = [ops.zero()] * n_cols
    for r in range(len(pivots) - 1, -1, -1):
        c = pivots[r]
        s = t[r]
        for cc in range(c + 1, n_cols):
            if not ops.is_zero(M[r][cc]):
                s = ops.sub(s, ops.mul(M[r][cc], x[cc]))
        x[c] = ops.div(s, M[r][c])
    return x


def inverse(ops, A):
    """정사각 행렬의 역행렬 (가우스-조르단)"""
    n = len(A)
    aug = [list(row) + e for row, e in zip(A, identity(ops, n))]
    R, pivots = rref(ops, aug)
    if pivots[:n] != list(range(n)) or len(pivots) < n:
        raise SingularMatrix("역행렬이 존재하지 않습니다")
    return [row[n:] for row in R]


def nullspace(ops, A):
    """A·x = 0 의 해공간 기저 (열 벡터들의 리스트)"""
    n_cols = len(A[0]) if A else 0
    R, pivots = rref(ops, A)
    free = [c for c in range(n_cols) if c not in pivots]
    basis = []
    for f in free:
        v = [ops.zero()] * n_cols
        v[f] = ops.one()
        for r, c in enumerate(pivots):
            v[c] = ops.neg(R[r][f])
        basis.append(v)
    return basis


def det_gauss(ops, M):
    """나눗셈을 쓰는 가우스 소거 행렬식"""
    n = len(M)
    if n == 0:
        return ops.one()
    A = copy_matrix(M)
    det = ops.one()
    for k in range(n):
        pivot = next((i for i in range(k, n) if not ops.is_zero(A[i][k])), None)
        if pivot is None:
            return ops.zero()
        if pivot != k:
            A[k], A[pivot] = A[pivot], A[k]
            det = ops.neg(det)
        det = ops.mul(det, A[k][k])
        for i in range(k + 1, n):
            if ops.is_zero(A[i][k]):
                continue
            f = ops.div(A[i][k], A[k][k])
            for j in range(k + 1, n):
                if not ops.is_zero(A[k][j]):
                    A[i][j] = ops.sub(A[i][j], ops.mul(f, A[k][j]))
    return det


def det_bareiss(ops, M):
    """분수 없는 Bareiss 행렬식 (각 단계 나눗셈이 정확히 떨어짐)"""
    n = len(M)
    if n == 0:
        return ops.one()
    if n == 1:
        return M[0][0]
    A = copy_matrix(M)
    sign = False
    prev = ops.one()
    for k in range(n - 1):
        if ops.is_zero(A[k][k]):
            swap = next((i for i in range(k + 1, n) if not ops.is_zero(A[i][k])), None)
            if swap is None:
                return ops.zero()
            A[k], A[swap] = A[swap], A[k]
            sign = not sign
        for i in range(k + 1, n):
            for j in range(k + 1, n):
                num = ops.sub(ops.mul(A[i][j], A[k][k]), ops.mul(A[i][k], A[k][j]))
                A[i][j] = ops.div(num, prev)
        prev = A[k][k]
    det = A[n - 1][n - 1]
    return ops.neg(det) if sign else det


def det(ops, M):
    """ops 가 권하는 방식(bareiss/gauss)으로 행렬식 계산"""
    if getattr(ops, "prefers_bareiss", False):
        return det_bareiss(ops, M)
    return det_gauss(ops, M)
