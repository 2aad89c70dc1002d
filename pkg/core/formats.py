# -*- coding: utf-8 -*-
"""
파일 형식

    - 타워 기술자 / 부호 명세: JSON
    - 벡터 파일: 한 줄에 원소 하나, 좌표는 공백 구분 (# 주석, 빈 줄 무시)
    - θ-다항식 파일: "인덱스: c_0 … c_{N-1}" (0 이 아닌 계수만)
    - RS 벡터: 정수 q-1 개 한 줄
    - TrialRecord: JSON Lines (추가 전용)
    - CSV: rho,ours,prior / t,ops,millis
"""

import csv
import json
import logging
import os
from dataclasses import asdict, dataclass, field

from core.errors import FormatError, ParseError, ThetaRMError
from core.rmcode import CodeSpec
from core.skew import ThetaPoly
from core.tower import build_tower
from core.utils import now_iso

logger = logging.getLogger(__name__)


def _read_text(path):
    try:
        with open(path, "r", encoding="utf-8") as f:
            return f.read()
    except OSError as e:
        raise FormatError(f"파일을 읽을 수 없습니다: {path} ({e})") from e


def _ensure_parent(path):
    parent = os.path.dirname(os.path.abspath(path))
    os.makedirs(parent, exist_ok=True)


def _content_lines(text):
    """(줄 번호, 내용) - 주석과 빈 줄 제외"""
    for number, raw in enumerate(text.splitlines(), start=1):
        line = raw.split("#", 1)[0].strip()
        if line:
            yield number, line


# ---------------------------------------------------------------------------
# 타워 / 부호 명세
# ---------------------------------------------------------------------------

def load_json(path):
    text = _read_text(path)
    try:
        return json.loads(text)
    except json.JSONDecodeError as e:
        raise ParseError(f"JSON 파싱 실패: {e.msg}", path, e.lineno) from e


def save_json(path, data):
    _ensure_parent(path)
    with open(path, "w", encoding="utf-8") as f:
        json.dump(data, f, ensure_ascii=False, indent=2)
        f.write("\n")


def spec_descriptor(spec):
    descriptor = spec.tower.descriptor()
    descriptor["order"] = spec.r
    return descriptor


def save_code_spec(path, spec):
    save_json(path, spec_descriptor(spec))
    logger.debug(f"부호 명세 저장: {path}")


def code_spec_from_descriptor(descriptor, budget_factor=64, path=None):
    """기술자 딕셔너리 → CodeSpec (order 가 없으면 ParseError)"""
    if "order" not in descriptor:
        raise ParseError("부호 명세에 'order' 가 없습니다", path)
    try:
        tower = build_tower(descriptor, budget_factor)
        return CodeSpec.create(tower, int(descriptor["order"]))
    except (KeyError, TypeError) as e:
        raise ParseError(f"부호 명세 항목 오류: {e}", path) from e
    except ValueError as e:
        if isinstance(e, ThetaRMError):
            raise
        raise ParseError(f"부호 명세 값 오류: {e}", path) from e


def load_code_spec(path, budget_factor=64):
    return code_spec_from_descriptor(load_json(path), budget_factor, path)


# ---------------------------------------------------------------------------
# 벡터 / θ-다항식
# ---------------------------------------------------------------------------

def parse_vector(tower, text, path=None):
    vector = []
    for number, line in _content_lines(text):
        try:
            vector.append(tower.parse_element(line))
        except ValueError as e:
            raise ParseError(str(e), path, number) from e
    return vector


def load_vector(path, tower, length=None):
    """
    벡터 파일 읽기

    Raises:
        ParseError: 좌표 파싱 실패 또는 길이 불일치
    """
    vector = parse_vector(tower, _read_text(path), path)
    if length is not None and len(vector) != length:
        raise ParseError(f"원소 {len(vector)} 개, {length} 개 필요", path)
    return vector


def format_vector(tower, vector):
    return "".join(tower.format_element(v) + "\n" for v in vector)


def save_vector(path, tower, vector, header=None):
    _ensure_parent(path)
    with open(path, "w", encoding="utf-8") as f:
        if header:
            f.write(f"# {header}\n")
        f.write(format_vector(tower, vector))


def parse_theta_poly(frame, text, path=None):
    L = frame.tower
    coeffs = [L.zero()] * frame.order
    for number, line in _content_lines(text):
        index_text, sep, body = line.partition(":")
        if not sep:
            raise ParseError("'인덱스: 좌표…' 형식이 아닙니다", path, number)
        try:
            index = int(index_text)
            if not 0 <= index < frame.order:
                raise ValueError(f"인덱스 {index} 는 [0, {frame.order}) 밖입니다")
            coeffs[index] = L.parse_element(body)
        except ValueError as e:
            raise ParseError(str(e), path, number) from e
    return ThetaPoly(frame, tuple(coeffs))


def load_theta_poly(path, frame):
    return parse_theta_poly(frame, _read_text(path), path)


def format_theta_poly(A):
    L = A.tower
    return "".join(f"{g}: {L.format_element(c)}\n" for g, c in A.nonzero())


def save_theta_poly(path, A, header=None):
    _ensure_parent(path)
    with open(path, "w", encoding="utf-8") as f:
        if header:
            f.write(f"# {header}\n")
        f.write(format_theta_poly(A))


# ---------------------------------------------------------------------------
# RS 벡터
# ---------------------------------------------------------------------------

def load_rs_vector(path, q):
    numbers = []
    for number, line in _content_lines(_read_text(path)):
        for token in line.split():
            try:
                value = int(token)
            except ValueError as e:
                raise ParseError(f"정수가 아닙니다: {token!r}", path, number) from e
            if not 0 <= value < q:
                raise ParseError(f"{value} 는 GF({q}) 원소가 아닙니다", path, number)
            numbers.append(value)
    if len(numbers) != q - 1:
        raise ParseError(f"원소 {len(numbers)} 개, {q - 1} 개 필요", path)
    return numbers


def save_rs_vector(path, values):
    _ensure_parent(path)
    with open(path, "w", encoding="utf-8") as f:
        f.write(" ".join(str(int(v)) for v in values) + "\n")


# ---------------------------------------------------------------------------
# TrialRecord
# ---------------------------------------------------------------------------

@dataclass
class TrialRecord:
    """시행 하나의 결과 (JSON Lines 한 줄)"""

    config: str
    seed: int
    t: int
    algorithm: str
    success: bool
    elapsed_ms: float = 0.0
    k_ops: int = 0
    assumption_report: dict = None
    fallback_used: bool = False
    error: str = None
    timestamp: str = field(default_factory=now_iso)

    def to_json(self):
        return json.dumps(asdict(self), ensure_ascii=False)


def append_records(path, records):
    """추가 전용 기록"""
    _ensure_parent(path)
    with open(path, "a", encoding="utf-8") as f:
        for record in records:
            f.write(record.to_json() + "\n")
    logger.debug(f"TrialRecord {len(records)} 건 기록: {path}")


def load_records(path):
    records = []
    for number, line in _content_lines(_read_text(path)):
        try:
            records.append(TrialRecord(**json.loads(line)))
        except (json.JSONDecodeError, TypeError) as e:
            raise ParseError(f"TrialRecord 파싱 실패: {e}", path, number) from e
    return records


# ---------------------------------------------------------------------------
# CSV
# ---------------------------------------------------------------------------

def write_csv(path, header, rows):
    _ensure_parent(path)
    with open(path, "w", encoding="utf-8", newline="") as f:
        writer = csv.writer(f)
        writer.writerow(header)
        writer.writerows(rows)
