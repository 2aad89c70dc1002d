# -*- coding: utf-8 -*-
"""
복호 반경 비교 데이터

정규화 차수 ρ ∈ [0, 1] 에 대해 N = n² 으로 나눈 반경 곡선 두 개를 내보냅니다.

    ours(ρ)  = (1 - ρ) / 2
    prior(ρ) = 2 - ρ - √(3 - 2ρ)

이산 비교는 주어진 (shape, r) 의 ⌊(d-1)/2⌋ 와, 알려진 경우 기존 방법의 반경을
표로 보여 줍니다. 부동소수점은 이 출력에서만 씁니다.
"""

import argparse
import logging
import os
import sys

sys.path.insert(0, os.path.dirname(os.path.dirname(os.path.abspath(__file__))))

import numpy as np  # noqa: E402
from rich.table import Table  # noqa: E402

from core.formats import write_csv  # noqa: E402
from core.rmcode import code_params  # noqa: E402
from core.utils import console  # noqa: E402
from steps.common import EXIT_OK, add_common_arguments, parse_int_list, run_guarded  # noqa: E402

logger = logging.getLogger(__name__)

# (shape, r) → 기존 방법이 보장하는 반경
PRIOR_RADIUS = {
    ((7, 7), 4): 6,
}


def ours_radius(rho):
    return (1.0 - np.asarray(rho, dtype=float)) / 2.0


def prior_radius(rho):
    rho = np.asarray(rho, dtype=float)
    return 2.0 - rho - np.sqrt(3.0 - 2.0 * rho)


def radius_grid(points=21):
    """[(ρ, ours, prior)], ρ 는 0 부터 1 까지 균등"""
    rho = np.linspace(0.0, 1.0, points)
    return list(zip(rho.tolist(), ours_radius(rho).tolist(), prior_radius(rho).tolist()))


def discrete_point(shape, r):
    """(우리 반경, 기존 반경 또는 None)"""
    params = code_params(shape, r)
    return params.radius, PRIOR_RADIUS.get((tuple(shape), r))


def run(args, settings):
    points = args.points or settings.get("radius", {}).get("points", 21)
    rows = radius_grid(points)
    if args.csv:
        write_csv(args.csv, ["rho", "ours", "prior"],
                  [[f"{rho:.6f}", f"{o:.12f}", f"{p:.12f}"] for rho, o, p in rows])
        console.print(f"[info]CSV 저장: {args.csv}[/] ({len(rows)} 점)")
    else:
        for rho, o, p in rows:
            console.print(f"{rho:.3f},{o:.12f},{p:.12f}")

    shape = parse_int_list(args.shape)
    ours, prior = discrete_point(shape, args.order)
    params = code_params(shape, args.order)
    table = Table(title="이산 반경 비교")
    table.add_column("shape", style="cyan")
    table.add_column("r", justify="right")
    table.add_column("(N, k, d)", justify="center")
    table.add_column("⌊(d-1)/2⌋", justify="right", style="green")
    table.add_column("기존 방법", justify="right")
    table.add_row(str(shape), str(args.order), f"({params.N}, {params.k}, {params.d})",
                  str(ours), "-" if prior is None else str(prior))
    console.print(table)
    return EXIT_OK


def add_arguments(parser):
    parser.add_argument("--points", type=int, help="ρ 격자 점 수 (기본: config.yaml)")
    parser.add_argument("--csv", help="rho,ours,prior CSV 출력 경로")
    parser.add_argument("--shape", default="7,7", help="이산 비교 shape")
    parser.add_argument("--order", type=int, default=4, help="이산 비교 차수 r")
    add_common_arguments(parser)


def main(argv=None):
    """메인 함수"""
    parser = argparse.ArgumentParser(description="복호 반경 비교")
    add_arguments(parser)
    args = parser.parse_args(argv)
    return run_guarded(run, args)


if __name__ == "__main__":
    sys.exit(main())
