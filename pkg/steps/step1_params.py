# -*- coding: utf-8 -*-
"""
Step 1: 부호 매개변수 계산과 부호 명세 파일 생성

    python steps/step1_params.py --shape 7,7 --order 4
    python steps/step1_params.py --shape 2,2,2 --order 1 --family kummer --radicands 2,3,5 --out spec.json
"""

import argparse
import logging
import os
import sys

sys.path.insert(0, os.path.dirname(os.path.dirname(os.path.abspath(__file__))))

from rich.table import Table  # noqa: E402

from core.formats import code_spec_from_descriptor, save_code_spec  # noqa: E402
from core.rmcode import code_params, max_order  # noqa: E402
from core.utils import console  # noqa: E402
from steps.common import (  # noqa: E402
    EXIT_OK,
    add_common_arguments,
    add_tower_arguments,
    parse_int_list,
    run_guarded,
    tower_descriptor_from_args,
)

logger = logging.getLogger(__name__)


def params_table(shape, orders):
    table = Table(title=f"θ-RM 부호 매개변수 (shape={tuple(shape)})")
    table.add_column("r", justify="right", style="cyan")
    table.add_column("N", justify="right")
    table.add_column("k", justify="right")
    table.add_column("d", justify="right")
    table.add_column("반경", justify="right", style="green")
    table.add_column("(s, ℓ)", justify="center")
    for r in orders:
        p = code_params(shape, r)
        table.add_row(str(r), str(p.N), str(p.k), str(p.d), str(p.radius), f"({p.s}, {p.ell})")
    return table


def run(args, settings):
    shape = parse_int_list(args.shape)
    orders = range(max_order(shape) + 1) if args.order is None else [args.order]
    for r in orders:
        p = code_params(shape, r)
        console.print(f"r={r} N={p.N} k={p.k} d={p.d}")
    if args.table:
        console.print(params_table(shape, orders))

    if args.out:
        if args.order is None or args.family is None:
            console.print("[warning]--out 에는 --order 와 --family 가 필요합니다[/]")
            return EXIT_OK
        descriptor = tower_descriptor_from_args(args, shape, settings)
        descriptor["order"] = args.order
        budget = settings.get("tower", {}).get("irreducible_budget_factor", 64)
        spec = code_spec_from_descriptor(descriptor, budget)
        save_code_spec(args.out, spec)
        console.print(f"[success]부호 명세 저장: {args.out}[/] {spec.describe()}")
    return EXIT_OK


def add_arguments(parser):
    parser.add_argument("--shape", required=True, help="군 모양 n (예: 7,7)")
    parser.add_argument("--order", type=int, help="차수 r (생략하면 가능한 모든 r)")
    parser.add_argument("--table", action="store_true", help="rich 표로 출력")
    parser.add_argument("--out", help="부호 명세 JSON 출력 경로")
    add_tower_arguments(parser)
    add_common_arguments(parser)


def main(argv=None):
    """메인 함수"""
    parser = argparse.ArgumentParser(description="θ-RM 부호 매개변수")
    add_arguments(parser)
    args = parser.parse_args(argv)
    return run_guarded(run, args)


if __name__ == "__main__":
    sys.exit(main())
