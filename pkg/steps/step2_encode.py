# -*- coding: utf-8 -*-
"""
Step 2: 메시지 부호화

메시지 파일(원소 k 개) 또는 --random --seed 로 만든 메시지를 부호화해
평가 벡터(부호어)를 저장합니다.
"""

import argparse
import logging
import os
import sys

sys.path.insert(0, os.path.dirname(os.path.dirname(os.path.abspath(__file__))))

import numpy as np  # noqa: E402

from core.formats import load_code_spec, load_vector, save_theta_poly, save_vector  # noqa: E402
from core.rmcode import encode, random_message  # noqa: E402
from core.utils import console  # noqa: E402
from steps.common import EXIT_ERROR, EXIT_OK, add_common_arguments, run_guarded  # noqa: E402

logger = logging.getLogger(__name__)


def run(args, settings):
    budget = settings.get("tower", {}).get("irreducible_budget_factor", 64)
    spec = load_code_spec(args.spec, budget)
    L = spec.tower
    if args.message:
        message = load_vector(args.message, L, spec.k)
    else:
        if args.seed is None:
            console.print("[error]--message 가 없으면 --seed 가 필요합니다[/]")
            return EXIT_ERROR
        message = random_message(spec, np.random.default_rng(args.seed))

    C, codeword = encode(spec, message)
    save_vector(args.out, L, codeword, header=f"codeword {spec.describe()}")
    if args.poly_out:
        save_theta_poly(args.poly_out, C, header="message θ-polynomial")
    logger.info(f"부호화 완료: {spec.describe()} → {args.out}")
    console.print(f"[success]부호어 저장: {args.out}[/] ({spec.describe()})")
    return EXIT_OK


def add_arguments(parser):
    parser.add_argument("--spec", required=True, help="부호 명세 JSON")
    parser.add_argument("--message", help="메시지 벡터 파일 (원소 k 개)")
    parser.add_argument("--seed", type=int, help="무작위 메시지 시드")
    parser.add_argument("--out", required=True, help="부호어 벡터 출력 경로")
    parser.add_argument("--poly-out", help="θ-다항식 출력 경로")
    add_common_arguments(parser)


def main(argv=None):
    """메인 함수"""
    parser = argparse.ArgumentParser(description="θ-RM 부호화")
    add_arguments(parser)
    args = parser.parse_args(argv)
    return run_guarded(run, args)


if __name__ == "__main__":
    sys.exit(main())
