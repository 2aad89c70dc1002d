# -*- coding: utf-8 -*-
"""
CLI 단계 공용 도구: 설정 로드, 종료 코드, 복호기 선택
"""

import logging
import os
import sys

PROJECT_ROOT = os.path.dirname(os.path.dirname(os.path.abspath(__file__)))
if PROJECT_ROOT not in sys.path:
    sys.path.insert(0, PROJECT_ROOT)

from core.decode_classical import gabidulin_decode_with_trace  # noqa: E402
from core.decode_dickson import decode_with_trace  # noqa: E402
from core.decode_recursive import decode_recursive  # noqa: E402
from core.errors import DecodingError, FormatError, ThetaRMError  # noqa: E402
from core.utils import configure_from_settings, console, load_settings  # noqa: E402

logger = logging.getLogger(__name__)

EXIT_OK = 0
EXIT_ERROR = 1
EXIT_DECODING = 2
EXIT_FORMAT = 3

ALGORITHMS = ("dickson", "recursive", "gabidulin", "rs")


def add_common_arguments(parser):
    parser.add_argument("--config", help="설정 파일 경로 (기본: config.yaml 또는 THETA_RM_CONFIG)")
    parser.add_argument("--log-level", help="로그 레벨 (DEBUG, INFO, WARNING, …)")


def parse_int_list(text):
    """"7,7" → (7, 7)"""
    try:
        return tuple(int(v) for v in text.replace(" ", "").split(",") if v)
    except ValueError as e:
        raise FormatError(f"정수 목록이 아닙니다: {text!r}") from e


def prepare(args):
    """설정을 읽고 로깅을 초기화"""
    settings = load_settings(getattr(args, "config", None))
    configure_from_settings(settings, getattr(args, "log_level", None))
    return settings


def run_guarded(run, args):
    """
    단계 실행 후 종료 코드 반환

    DecodingError → 2, FormatError → 3, 그 밖의 ThetaRMError/OSError → 1
    """
    try:
        settings = prepare(args)
        return run(args, settings)
    except DecodingError as e:
        logger.error(f"복호 실패: {e}")
        console.print(f"[error]복호 실패: {e}[/]")
        return EXIT_DECODING
    except FormatError as e:
        logger.error(f"형식 오류: {e}")
        console.print(f"[error]형식 오류: {e}[/]")
        return EXIT_FORMAT
    except (ThetaRMError, OSError, ValueError) as e:
        logger.error(f"오류: {e}")
        console.print(f"[error]오류: {e}[/]")
        return EXIT_ERROR
    except Exception:
        console.print_exception()
        return EXIT_ERROR


def decoding_options(args, settings):
    """명령행 플래그가 config.yaml 의 decoding 섹션을 덮어씀"""
    cfg = settings.get("decoding", {})
    return {
        "algo": getattr(args, "algo", None) or cfg.get("algo", "dickson"),
        "fallback": bool(getattr(args, "fallback", False) or cfg.get("fallback", False)),
        "las_vegas": bool(getattr(args, "las_vegas", False) or cfg.get("las_vegas", False)),
        "parallel": bool(getattr(args, "parallel", False) or cfg.get("parallel", False)),
    }


def run_decoder(spec, y, options, rng=None):
    """
    선택한 알고리즘으로 θ-RM 수신어 복호

    Returns:
        DecodeResult 또는 RecursiveResult (공통 필드 C, E, t)
    """
    algo = options["algo"]
    if algo == "dickson":
        return decode_with_trace(spec, y)
    if algo == "gabidulin":
        return gabidulin_decode_with_trace(spec.tower, spec.k, y)
    if algo == "recursive":
        return decode_recursive(spec, y, fallback=options["fallback"],
                                las_vegas=options["las_vegas"],
                                parallel=options["parallel"], rng=rng)
    raise ValueError(f"θ-RM 부호에 쓸 수 없는 알고리즘: {algo}")


def add_tower_arguments(parser):
    group = parser.add_argument_group("타워")
    group.add_argument("--family", choices=("finite", "kummer", "artin_schreier"),
                       help="타워 계열")
    group.add_argument("--p", type=int, default=2, help="유한체 표수 (finite)")
    group.add_argument("--radicands",
                       help="쉼표 구분 a_i (kummer: 유리수, artin_schreier: 16진 비트마스크 '분자/분모')")
    group.add_argument("--tower-seed", type=int, default=None, help="기약다항식 탐색 시드 (finite)")


def tower_descriptor_from_args(args, shape, settings):
    """명령행 타워 옵션 → 타워 기술자 딕셔너리"""
    if args.family == "finite":
        seed = args.tower_seed
        if seed is None:
            seed = settings.get("tower", {}).get("seed", 0)
        return {"family": "finite", "p": args.p, "shape": list(shape), "seed": int(seed)}
    if not args.radicands:
        raise FormatError(f"{args.family} 타워에는 --radicands 가 필요합니다")
    radicands = [v.strip() for v in args.radicands.split(",") if v.strip()]
    if len(radicands) != len(shape) or any(n != 2 for n in shape):
        raise FormatError(f"radicands {len(radicands)} 개와 shape {tuple(shape)} 가 맞지 않습니다 (모두 2 여야 함)")
    return {"family": args.family, "radicands": radicands, "shape": list(shape)}
