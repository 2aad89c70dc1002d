# -*- coding: utf-8 -*-
"""
Step 4: 복호

수신어를 선택한 알고리즘으로 복호해 부호어와 오류를 저장하고, 시행 결과를
TrialRecord JSON Lines 파일에 한 줄씩 덧붙입니다. 복호 실패는 종료 코드 2 입니다.
"""

import argparse
import logging
import os
import sys
import time

sys.path.insert(0, os.path.dirname(os.path.dirname(os.path.abspath(__file__))))

import numpy as np  # noqa: E402

from core.decode_classical import rs_decode  # noqa: E402
from core.errors import DecodingError  # noqa: E402
from core.formats import (  # noqa: E402
    TrialRecord,
    append_records,
    load_code_spec,
    load_rs_vector,
    load_vector,
    save_rs_vector,
    save_vector,
)
from core.skew import evaluate_at_points  # noqa: E402
from core.utils import console  # noqa: E402
from steps.common import (  # noqa: E402
    ALGORITHMS,
    EXIT_DECODING,
    EXIT_OK,
    add_common_arguments,
    decoding_options,
    run_decoder,
    run_guarded,
)

logger = logging.getLogger(__name__)


def _record_path(args):
    if args.record:
        return args.record
    stem, _ = os.path.splitext(args.out)
    return f"{stem}.trial.jsonl"


def _run_rs(args):
    y = load_rs_vector(args.input, args.q)
    start = time.perf_counter()
    try:
        c, e = rs_decode(args.q, args.k, y)
    except DecodingError as exc:
        record = TrialRecord(f"rs q={args.q} k={args.k}", args.seed or 0, -1, "rs", False,
                             elapsed_ms=(time.perf_counter() - start) * 1000, error=str(exc))
        append_records(_record_path(args), [record])
        raise
    elapsed = (time.perf_counter() - start) * 1000
    save_rs_vector(args.out, c)
    if args.error_out:
        save_rs_vector(args.error_out, e)
    weight = int(np.count_nonzero(e))
    record = TrialRecord(f"rs q={args.q} k={args.k}", args.seed or 0, weight, "rs", True, elapsed_ms=elapsed)
    append_records(_record_path(args), [record])
    console.print(f"[success]RS 복호 완료: 오류 무게 {weight}[/] → {args.out}")
    return EXIT_OK


def run(args, settings):
    options = decoding_options(args, settings)
    if options["algo"] == "rs":
        return _run_rs(args)
    if not args.spec:
        raise ValueError("--spec 이 필요합니다")

    budget = settings.get("tower", {}).get("irreducible_budget_factor", 64)
    spec = load_code_spec(args.spec, budget)
    L = spec.tower
    y = load_vector(args.input, L, spec.N)
    rng = np.random.default_rng(args.seed) if args.seed is not None else None

    L.ops.reset()
    start = time.perf_counter()
    record = TrialRecord(spec.describe(), args.seed or 0, -1, options["algo"], False)
    try:
        result = run_decoder(spec, y, options, rng)
    except DecodingError as exc:
        record.elapsed_ms = (time.perf_counter() - start) * 1000
        record.k_ops = L.ops.total
        record.error = str(exc)
        report = getattr(exc, "report", None)
        if report is not None:
            record.assumption_report = report.to_dict()
        append_records(_record_path(args), [record])
        logger.error(f"복호 실패: {exc}")
        console.print(f"[error]복호 실패: {exc}[/]")
        return EXIT_DECODING

    record.elapsed_ms = (time.perf_counter() - start) * 1000
    record.k_ops = L.ops.total
    record.t = result.t
    record.success = True
    report = getattr(result, "report", None)
    if report is not None:
        record.assumption_report = report.to_dict()
        record.fallback_used = result.fallback_used
        if not report.clean:
            logger.warning("접힌 랭크 가정이 성립하지 않은 단계가 있습니다")

    codeword = evaluate_at_points(result.C)
    save_vector(args.out, L, codeword, header=f"decoded codeword ({options['algo']})")
    if args.error_out:
        save_vector(args.error_out, L, [L.sub(a, b) for a, b in zip(y, codeword)],
                    header=f"error rank={result.t}")
    append_records(_record_path(args), [record])
    console.print(f"[success]복호 완료[/]: 오류 랭크 {result.t}, {record.elapsed_ms:.1f} ms, "
                  f"K-연산 {record.k_ops} → {args.out}")
    return EXIT_OK


def add_arguments(parser):
    parser.add_argument("--spec", help="부호 명세 JSON (θ-RM)")
    parser.add_argument("--in", dest="input", required=True, help="수신어 파일")
    parser.add_argument("--out", required=True, help="복호된 부호어 출력 경로")
    parser.add_argument("--error-out", help="오류 벡터 출력 경로")
    parser.add_argument("--record", help="TrialRecord JSON Lines 누적 경로 (기본: <out>.trial.jsonl)")
    parser.add_argument("--algo", choices=ALGORITHMS, help="복호 알고리즘 (기본: config.yaml)")
    parser.add_argument("--fallback", action="store_true", help="재귀 복호 실패 시 Dickson 복호로 재시도")
    parser.add_argument("--las-vegas", action="store_true", help="재귀 복호의 A 복원에서 무작위 표본 사용")
    parser.add_argument("--parallel", action="store_true", help="재귀 복호의 형제 호출을 병렬 실행")
    parser.add_argument("--seed", type=int, help="Las Vegas 난수 시드")
    parser.add_argument("--q", type=int, default=16, help="RS 체 크기")
    parser.add_argument("--k", type=int, default=7, help="RS 차원")
    add_common_arguments(parser)


def main(argv=None):
    """메인 함수"""
    parser = argparse.ArgumentParser(description="θ-RM / RS 복호")
    add_arguments(parser)
    args = parser.parse_args(argv)
    return run_guarded(run, args)


if __name__ == "__main__":
    sys.exit(main())
