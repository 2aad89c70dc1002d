# -*- coding: utf-8 -*-
"""
θ-RM 라이브러리 예외 계층

모든 예외는 ThetaRMError 를 루트로 하며, 모듈별 하위 계층으로 나뉩니다.
CLI 단계(steps/)는 이 계층을 기준으로 종료 코드를 결정합니다.
"""


class ThetaRMError(Exception):
    """라이브러리 공통 루트 예외"""


# --- kfield -----------------------------------------------------------------

class FieldError(ThetaRMError):
    """기저체(K) 연산 오류"""


class DivisionByZero(FieldError, ZeroDivisionError):
    """0 으로 나누기"""


class FieldMismatch(FieldError):
    """서로 다른 체의 원소끼리 연산"""


class InvalidPrime(FieldError, ValueError):
    """소수가 아니거나 64비트 범위를 벗어난 p"""


class ScalarParseError(FieldError, ValueError):
    """스칼라 텍스트 표현 파싱 실패"""


# --- group ------------------------------------------------------------------

class GroupError(ThetaRMError):
    """Λ(n) 인덱스 오류"""


class OutOfRange(GroupError, IndexError):
    """φ⁻¹ 입력이 [0, N-1] 밖"""


class ShapeMismatch(GroupError):
    """서로 다른 shape 의 인덱스 비교/연산"""


# --- linalg ----------------------------------------------------------------

class SingularMatrix(ThetaRMError, ArithmeticError):
    """정칙이 아닌 행렬의 역행렬/해 요청"""


# --- tower ------------------------------------------------------------------

class TowerError(ThetaRMError):
    """확장체 타워 구성/연산 오류"""


class NonCoprimeShape(TowerError):
    """유한체 타워의 n_i 가 서로소가 아님"""


class NoIrreducibleFound(TowerError):
    """기약다항식 탐색 예산 소진"""


class DependentRadicands(TowerError):
    """Kummer 근호들의 부분곱이 제곱수"""


class ReducibleArtinSchreier(TowerError):
    """X² + X + a 가 F_2(t) 위에서 가약"""


class DependentExtensions(TowerError):
    """Artin–Schreier 확장들이 독립이 아님"""


class ZeroInverse(TowerError, ZeroDivisionError):
    """0 원소의 역원 요청"""


class DegenerateTraceForm(TowerError):
    """트레이스 Gram 행렬이 특이함 (타워 구성 오류)"""


class TowerMismatch(TowerError):
    """서로 다른 타워의 원소끼리 연산"""


class InvalidTower(TowerError):
    """검증(준동형, 위수, 가환성, 서로 다른 합성 자기동형) 실패"""


# --- skew -------------------------------------------------------------------

class InternalError(ThetaRMError):
    """재시도 예산 소진 등 내부 불변식 위반"""


# --- rmcode -----------------------------------------------------------------

class CodeError(ThetaRMError):
    """부호 파라미터/입력 오류"""


class InvalidShape(CodeError, ValueError):
    """shape 가 비증가가 아니거나 n_i < 2"""


class OrderOutOfRange(CodeError, ValueError):
    """차수 r 이 [0, Σ(n_i-1)] 밖"""


class LengthMismatch(CodeError, ValueError):
    """메시지/벡터 길이 불일치"""


class NotBinaryShape(CodeError):
    """n = (2,…,2) 가 아닌 shape 에 이진 전용 연산 요청"""


# --- decoders ---------------------------------------------------------------

class DecodingError(ThetaRMError):
    """복호 공통 예외 (CLI 종료 코드 2)"""


class DecodingFailure(DecodingError):
    """복호 결과 검증 실패"""


class SingularCofactor(DecodingError):
    """소행렬 여인수가 특이함 (랭크 추정 과대)"""


class NoCaseMatched(DecodingError):
    """다음 윈도우를 찾지 못함 (구현 버그 신호)"""


class CofactorSearchExhausted(DecodingError):
    """RS 여인수 행 탐색 실패"""


class AssumptionViolated(DecodingError):
    """재귀 복호의 접힘 랭크 가정 위반"""

    def __init__(self, message, report=None):
        super().__init__(message)
        self.report = report


class RankDeficientSystem(DecodingError):
    """A 복원 선형계가 유일해를 갖지 않음"""


class OddDimension(DecodingError, ValueError):
    """블록 분할 대상 행렬의 차수가 홀수"""


# --- formats ----------------------------------------------------------------

class FormatError(ThetaRMError):
    """파일 형식 오류 (CLI 종료 코드 3)"""


class ParseError(FormatError, ValueError):
    """파일 파싱 실패 (경로와 줄 번호 포함)"""

    def __init__(self, message, path=None, line=None):
        location = ""
        if path is not None:
            location = f"{path}"
            if line is not None:
                location += f":{line}"
            location += ": "
        super().__init__(f"{location}{message}")
        self.path = path
        self.line = line
