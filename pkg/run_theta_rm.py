# -*- coding: utf-8 -*-
"""
θ-RM 부호 명령행 진입점

    python run_theta_rm.py params --shape 7,7 --order 4
    python run_theta_rm.py encode --spec spec.json --seed 1 --out c.txt
    python run_theta_rm.py corrupt --spec spec.json --in c.txt --rank 1 --seed 2 --out y.txt
    python run_theta_rm.py decode --spec spec.json --in y.txt --out c_hat.txt --algo dickson
    python run_theta_rm.py bench --spec spec.json --seed 3 --trials 200
    python run_theta_rm.py radius --csv radius.csv
    python run_theta_rm.py pipeline --workdir work --shape 2,2,2 --order 1 --family kummer --radicands 2,3,5 --rank 1
"""

import argparse
import os
import sys

from core.formats import load_code_spec, load_vector
from core.utils import console
from steps import step1_params, step2_encode, step3_corrupt, step4_decode, step5_bench
from steps.common import EXIT_ERROR, EXIT_OK, add_tower_arguments, run_guarded
from tools import radius_plot

COMMANDS = {
    "params": (step1_params, "부호 매개변수 / 부호 명세 생성"),
    "encode": (step2_encode, "부호화"),
    "corrupt": (step3_corrupt, "랭크 t 오류 삽입"),
    "decode": (step4_decode, "복호"),
    "bench": (step5_bench, "벤치마크"),
    "radius": (radius_plot, "복호 반경 비교 데이터"),
}


def verify_step_result(step_name, paths):
    """각 단계의 결과물 검증"""
    try:
        if step_name == "params":
            load_code_spec(paths["spec"])
            return True, "부호 명세 확인 완료"
        spec = load_code_spec(paths["spec"])
        if step_name in ("encode", "corrupt", "decode"):
            load_vector(paths[step_name], spec.tower, spec.N)
            return True, f"{step_name} 결과 벡터 확인 완료"
        return True, "검증 단계 없음"
    except Exception as e:
        return False, f"결과 검증 중 오류 발생: {e}"


def run_pipeline(args, settings):
    """params → encode → corrupt → decode 를 작업 폴더에서 차례로 실행"""
    os.makedirs(args.workdir, exist_ok=True)
    paths = {
        "spec": os.path.join(args.workdir, "spec.json"),
        "encode": os.path.join(args.workdir, "codeword.txt"),
        "corrupt": os.path.join(args.workdir, "received.txt"),
        "decode": os.path.join(args.workdir, "decoded.txt"),
    }
    tower_args = ["--family", args.family, "--p", str(args.p)]
    if args.radicands:
        tower_args += ["--radicands", args.radicands]
    steps = [
        ("params", step1_params.main,
         ["--shape", args.shape, "--order", str(args.order), "--out", paths["spec"]] + tower_args),
        ("encode", step2_encode.main,
         ["--spec", paths["spec"], "--seed", str(args.seed), "--out", paths["encode"]]),
        ("corrupt", step3_corrupt.main,
         ["--spec", paths["spec"], "--in", paths["encode"], "--rank", str(args.rank),
          "--seed", str(args.seed + 1), "--out", paths["corrupt"]]),
        ("decode", step4_decode.main,
         ["--spec", paths["spec"], "--in", paths["corrupt"], "--out", paths["decode"],
          "--algo", args.algo] + (["--fallback"] if args.fallback else [])),
    ]
    for number, (name, step_main, argv) in enumerate(steps, start=1):
        console.print(f"\n[phase]Step {number}: {name}[/]")
        code = step_main(argv)
        if code != EXIT_OK:
            console.print(f"[error]Step {number} 실패 (종료 코드: {code})[/]")
            return code
        success, message = verify_step_result(name, paths)
        if not success:
            console.print(f"[error]Step {number} 결과물 검증 실패: {message}[/]")
            return EXIT_ERROR
        console.print(f"[success]✓ {message}[/]")

    spec = load_code_spec(paths["spec"])
    original = load_vector(paths["encode"], spec.tower, spec.N)
    decoded = load_vector(paths["decode"], spec.tower, spec.N)
    if original != decoded:
        console.print("[error]복호된 부호어가 원래 부호어와 다릅니다[/]")
        return EXIT_ERROR
    console.print("\n[success]✅ 모든 단계가 성공적으로 완료되었습니다![/]")
    return EXIT_OK


def build_parser():
    parser = argparse.ArgumentParser(description="θ-Reed–Muller 랭크 메트릭 부호 도구")
    subparsers = parser.add_subparsers(dest="command", required=True)
    for name, (module, help_text) in COMMANDS.items():
        sub = subparsers.add_parser(name, help=help_text)
        module.add_arguments(sub)
        sub.set_defaults(handler=module.run)

    pipeline = subparsers.add_parser("pipeline", help="params → encode → corrupt → decode 일괄 실행")
    pipeline.add_argument("--workdir", default="work", help="작업 폴더")
    pipeline.add_argument("--shape", required=True, help="군 모양 n")
    pipeline.add_argument("--order", type=int, required=True, help="차수 r")
    pipeline.add_argument("--rank", type=int, default=1, help="삽입할 오류 랭크")
    pipeline.add_argument("--seed", type=int, default=0, help="시드")
    pipeline.add_argument("--algo", default="dickson", choices=("dickson", "recursive", "gabidulin"))
    pipeline.add_argument("--fallback", action="store_true", help="재귀 복호 실패 시 Dickson 복호로 재시도")
    pipeline.add_argument("--config", help="설정 파일 경로")
    pipeline.add_argument("--log-level", help="로그 레벨")
    add_tower_arguments(pipeline)
    pipeline.set_defaults(handler=run_pipeline)
    return parser


def main(argv=None):
    """메인 실행 함수"""
    parser = build_parser()
    args = parser.parse_args(argv)
    if args.command == "pipeline" and not args.family:
        parser.error("pipeline 에는 --family 가 필요합니다")
    return run_guarded(args.handler, args)


if __name__ == "__main__":
    sys.exit(main())
