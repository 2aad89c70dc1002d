# -*- coding: utf-8 -*-
"""
기저체 K 의 정확 연산

지원하는 체:
    - PrimeField(p): 소수체 F_p, 표현은 [0, p-1] 의 정수
    - RationalField(): 유리수체 Q, 표현은 fractions.Fraction
    - RationalFunctionField2(): F_2(t), 표현은 (분자, 분모) 비트마스크 쌍

체 객체는 표현(payload) 수준의 연산을 제공하고, FieldScalar 는 사용자용
값 객체입니다. 행렬 연산(core.linalg)은 체 객체를 연산자 묶음으로 사용합니다.
"""

import logging
import math
from dataclasses import dataclass
from fractions import Fraction

import galois
from mpyc.gfpx import GFpX

from core.errors import DivisionByZero, FieldMismatch, InvalidPrime, ScalarParseError

logger = logging.getLogger(__name__)

# F_2[t], 원소 값은 비트마스크 정수
gf2x = GFpX(2)


class BaseField:
    """표현 수준 연산 인터페이스"""

    kind = "abstract"
    characteristic = 0

    def zero(self):
        raise NotImplementedError

    def one(self):
        raise NotImplementedError

    def add(self, a, b):
        raise NotImplementedError

    def sub(self, a, b):
        raise NotImplementedError

    def mul(self, a, b):
        raise NotImplementedError

    def neg(self, a):
        raise NotImplementedError

    def inv(self, a):
        raise NotImplementedError

    def div(self, a, b):
        return self.mul(a, self.inv(b))

    def is_zero(self, a):
        return a == self.zero()

    def eq(self, a, b):
        return a == b

    def from_int(self, n):
        raise NotImplementedError

    def normalize(self, a):
        raise NotImplementedError

    def random(self, rng):
        raise NotImplementedError

    def parse(self, text):
        raise NotImplementedError

    def format(self, a):
        raise NotImplementedError

    def descriptor(self):
        raise NotImplementedError

    def scalar(self, value):
        """표현을 정규화하여 FieldScalar 로 감쌉니다."""
        return FieldScalar(self, self.normalize(value))


@dataclass(frozen=True)
class PrimeField(BaseField):
    """소수체 F_p (p < 2^64, 생성 시 소수 판정)"""

    p: int
    kind = "prime"

    def __post_init__(self):
        if not isinstance(self.p, int) or self.p < 2 or self.p >= 1 << 64:
            raise InvalidPrime(f"p 는 2 이상 2^64 미만이어야 합니다: {self.p}")
        if not galois.is_prime(self.p):
            raise InvalidPrime(f"소수가 아닙니다: {self.p}")

    @property
    def characteristic(self):
        return self.p

    def zero(self):
        return 0

    def one(self):
        return 1

    def add(self, a, b):
        return (a + b) % self.p

    def sub(self, a, b):
        return (a - b) % self.p

    def mul(self, a, b):
        return (a * b) % self.p

    def neg(self, a):
        return (-a) % self.p

    def inv(self, a):
        if a % self.p == 0:
            raise DivisionByZero(f"F_{self.p} 에서 0 의 역원")
        return pow(a, -1, self.p)

    def is_zero(self, a):
        return a == 0

    def from_int(self, n):
        return n % self.p

    def normalize(self, a):
        return int(a) % self.p

    def random(self, rng):
        return int(rng.integers(0, self.p, dtype="uint64"))

    def parse(self, text):
        try:
            return int(text.strip()) % self.p
        except ValueError as e:
            raise ScalarParseError(f"F_{self.p} 스칼라 파싱 실패: {text!r}") from e

    def format(self, a):
        return str(a)

    def descriptor(self):
        return {"kind": self.kind, "p": self.p}

    def __str__(self):
        return f"F_{self.p}"


@dataclass(frozen=True)
class RationalField(BaseField):
    """유리수체 Q (임의 정밀도)"""

    kind = "rational"
    characteristic = 0

    def zero(self):
        return Fraction(0)

    def one(self):
        return Fraction(1)

    def add(self, a, b):
        return a + b

    def sub(self, a, b):
        return a - b

    def mul(self, a, b):
        return a * b

    def div(self, a, b):
        if b == 0:
            raise DivisionByZero("Q 에서 0 으로 나누기")
        return a / b

    def neg(self, a):
        return -a

    def inv(self, a):
        if a == 0:
            raise DivisionByZero("Q 에서 0 의 역원")
        return 1 / a

    def is_zero(self, a):
        return a == 0

    def from_int(self, n):
        return Fraction(n)

    def normalize(self, a):
        return Fraction(a)

    def random(self, rng):
        num = int(rng.integers(-9, 10))
        den = int(rng.integers(1, 6))
        return Fraction(num, den)

    def parse(self, text):
        try:
            return Fraction(text.strip())
        except (ValueError, ZeroDivisionError) as e:
            raise ScalarParseError(f"Q 스칼라 파싱 실패: {text!r}") from e

    def format(self, a):
        return f"{a.numerator}/{a.denominator}"

    def descriptor(self):
        return {"kind": self.kind}

    def __str__(self):
        return "Q"


def poly_mul(a, b):
    """F_2[t] 곱 (비트마스크)"""
    return int(gf2x.mul(a, b))


def poly_divmod(a, b):
    """F_2[t] 나눗셈 (몫, 나머지)"""
    q, r = gf2x.divmod(a, b)
    return int(q), int(r)


def poly_gcd(a, b):
    return int(gf2x.gcd(a, b))


def poly_degree(a):
    return gf2x.deg(a)


def poly_is_square(a):
    """F_2[t] 에서 a 가 제곱인지 (홀수 차수 계수가 모두 0)"""
    return all(not (a >> i) & 1 for i in range(1, a.bit_length(), 2))


def poly_sqrt(a):
    """제곱 다항식의 제곱근 (짝수 비트만 추림)"""
    root = 0
    for i in range(0, a.bit_length(), 2):
        if (a >> i) & 1:
            root |= 1 << (i // 2)
    return root


def poly_to_galois(a):
    """비트마스크를 galois.Poly(GF(2)) 로 변환"""
    return galois.Poly.Int(a, field=galois.GF(2))


@dataclass(frozen=True)
class RationalFunctionField2(BaseField):
    """F_2(t): (분자, 분모) 기약 분수, 분모는 모닉(이진에서는 자동)"""

    kind = "ratfunc2"
    characteristic = 2

    def zero(self):
        return (0, 1)

    def one(self):
        return (1, 1)

    def normalize(self, a):
        if isinstance(a, int):
            return (a, 1)
        num, den = a
        if den == 0:
            raise DivisionByZero("F_2(t) 분모가 0")
        if num == 0:
            return (0, 1)
        g = poly_gcd(num, den)
        if g != 1:
            num = poly_divmod(num, g)[0]
            den = poly_divmod(den, g)[0]
        return (num, den)

    def add(self, a, b):
        (an, ad), (bn, bd) = a, b
        if ad == bd:
            return self.normalize((an ^ bn, ad))
        return self.normalize((poly_mul(an, bd) ^ poly_mul(bn, ad), poly_mul(ad, bd)))

    sub = add

    def mul(self, a, b):
        (an, ad), (bn, bd) = a, b
        if an == 0 or bn == 0:
            return (0, 1)
        return self.normalize((poly_mul(an, bn), poly_mul(ad, bd)))

    def neg(self, a):
        return a

    def inv(self, a):
        if a[0] == 0:
            raise DivisionByZero("F_2(t) 에서 0 의 역원")
        return (a[1], a[0])

    def is_zero(self, a):
        return a[0] == 0

    def from_int(self, n):
        return (n & 1, 1)

    def random(self, rng):
        num = int(rng.integers(0, 16))
        den = int(rng.integers(1, 8))
        return self.normalize((num, den))

    def parse(self, text):
        text = text.strip()
        try:
            if "/" in text:
                num_text, den_text = text.split("/", 1)
                return self.normalize((int(num_text, 16), int(den_text, 16)))
            return (int(text, 16), 1)
        except (ValueError, ZeroDivisionError) as e:
            raise ScalarParseError(f"F_2(t) 스칼라 파싱 실패: {text!r}") from e

    def format(self, a):
        return f"{a[0]:x}/{a[1]:x}"

    def descriptor(self):
        return {"kind": self.kind}

    def __str__(self):
        return "F_2(t)"

    def t(self):
        """부정원 t"""
        return (0b10, 1)


def field_from_descriptor(desc):
    """JSON 기술자에서 체 생성"""
    kind = desc.get("kind")
    if kind == "prime":
        return PrimeField(int(desc["p"]))
    if kind == "rational":
        return RationalField()
    if kind == "ratfunc2":
        return RationalFunctionField2()
    raise ScalarParseError(f"알 수 없는 체 종류: {kind!r}")


def is_rational_square(value):
    """유리수가 완전제곱인지 판정"""
    value = Fraction(value)
    if value < 0:
        return False
    num, den = value.numerator, value.denominator
    return math.isqrt(num) ** 2 == num and math.isqrt(den) ** 2 == den


@dataclass(frozen=True)
class FieldScalar:
    """기저체 원소 (불변 값 객체)"""

    field: BaseField
    value: object

    def _check(self, other):
        if not isinstance(other, FieldScalar):
            return FieldScalar(self.field, self.field.normalize(other))
        if other.field != self.field:
            raise FieldMismatch(f"{self.field} 와 {other.field} 원소의 연산")
        return other

    def __add__(self, other):
        return field_ops(self, self._check(other), "add")

    def __sub__(self, other):
        return field_ops(self, self._check(other), "sub")

    def __mul__(self, other):
        return field_ops(self, self._check(other), "mul")

    def __truediv__(self, other):
        return field_ops(self, self._check(other), "div")

    __radd__ = __add__
    __rmul__ = __mul__

    def __neg__(self):
        return FieldScalar(self.field, self.field.neg(self.value))

    def inverse(self):
        return FieldScalar(self.field, self.field.inv(self.value))

    def is_zero(self):
        return self.field.is_zero(self.value)

    def __str__(self):
        return self.field.format(self.value)


_OPS = {"add", "sub", "mul", "div"}


def field_ops(a, b, op):
    """
    같은 체의 두 원소에 대한 사칙연산

    Args:
        a, b: FieldScalar
        op: "add" | "sub" | "mul" | "div"

    Returns:
        FieldScalar: 정규형 결과
    """
    if a.field != b.field:
        raise FieldMismatch(f"{a.field} 와 {b.field} 원소의 연산")
    if op not in _OPS:
        raise ValueError(f"지원하지 않는 연산: {op}")
    field = a.field
    if op == "div" and field.is_zero(b.value):
        raise DivisionByZero(f"{field} 에서 0 으로 나누기")
    return FieldScalar(field, getattr(field, op)(a.value, b.value))
