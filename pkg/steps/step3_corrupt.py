# -*- coding: utf-8 -*-
"""
Step 3: 랭크 t 오류 삽입

θ-RM 부호어에는 E = Σ_k α_k T_{β_k} 꼴의 랭크 t 오류를, RS 벡터(--algo rs)에는
해밍 무게 t 오류를 더합니다. 모든 무작위성은 --seed 에서 나옵니다.
"""

import argparse
import logging
import os
import sys

sys.path.insert(0, os.path.dirname(os.path.dirname(os.path.abspath(__file__))))

import numpy as np  # noqa: E402

from core.decode_classical import random_rs_error, rs_field  # noqa: E402
from core.formats import (  # noqa: E402
    load_code_spec,
    load_rs_vector,
    load_vector,
    save_rs_vector,
    save_theta_poly,
    save_vector,
)
from core.skew import evaluate_at_points, random_rank_error  # noqa: E402
from core.utils import console  # noqa: E402
from steps.common import EXIT_OK, add_common_arguments, run_guarded  # noqa: E402

logger = logging.getLogger(__name__)


def corrupt_codeword(spec, codeword, t, rng, retry_budget=32):
    """(수신어, 오류 θ-다항식)"""
    L = spec.tower
    E = random_rank_error(spec.frame, t, rng, retry_budget)
    error = evaluate_at_points(E)
    return [L.add(c, e) for c, e in zip(codeword, error)], E


def _run_rs(args, rng):
    GF, _, _ = rs_field(args.q)
    y = GF(load_rs_vector(args.input, args.q))
    e = random_rs_error(args.q, args.rank, rng)
    save_rs_vector(args.out, y + e)
    console.print(f"[success]무게 {args.rank} 오류 삽입: {args.out}[/]")
    return EXIT_OK


def run(args, settings):
    rng = np.random.default_rng(args.seed)
    if args.algo == "rs":
        return _run_rs(args, rng)
    if not args.spec:
        raise ValueError("--spec 이 필요합니다")
    budget = settings.get("tower", {}).get("irreducible_budget_factor", 64)
    retry_budget = settings.get("sampling", {}).get("retry_budget", 32)
    spec = load_code_spec(args.spec, budget)
    codeword = load_vector(args.input, spec.tower, spec.N)
    if args.rank > spec.radius:
        logger.warning(f"랭크 {args.rank} 가 복호 반경 {spec.radius} 를 넘습니다")
    received, E = corrupt_codeword(spec, codeword, args.rank, rng, retry_budget)
    save_vector(args.out, spec.tower, received, header=f"received rank={args.rank} seed={args.seed}")
    if args.error_out:
        save_theta_poly(args.error_out, E, header=f"planted error rank={args.rank}")
    console.print(f"[success]랭크 {args.rank} 오류 삽입: {args.out}[/]")
    return EXIT_OK


def add_arguments(parser):
    parser.add_argument("--spec", help="부호 명세 JSON (θ-RM)")
    parser.add_argument("--in", dest="input", required=True, help="부호어 파일")
    parser.add_argument("--out", required=True, help="수신어 출력 경로")
    parser.add_argument("--rank", type=int, required=True, help="오류 랭크 (RS 는 해밍 무게)")
    parser.add_argument("--seed", type=int, required=True, help="난수 시드")
    parser.add_argument("--error-out", help="삽입한 오류 θ-다항식 출력 경로")
    parser.add_argument("--algo", choices=("rank", "rs"), default="rank", help="오류 종류")
    parser.add_argument("--q", type=int, default=16, help="RS 체 크기")
    add_common_arguments(parser)


def main(argv=None):
    """메인 함수"""
    parser = argparse.ArgumentParser(description="오류 삽입")
    add_arguments(parser)
    args = parser.parse_args(argv)
    return run_guarded(run, args)


if __name__ == "__main__":
    sys.exit(main())
