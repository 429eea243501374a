"""命令行入口

退出码：0 全部通过；1 有检查失败或领域错误；2 用法、配置、夹具或素数错误。
"""
import argparse
import json
import sys
from typing import Dict, List, Optional, Sequence

from .algebra.cyclotomic import CycNum
from .algebra.symbol import slot_move_S, slot_move_T, slot_power_scalar
from .core.filtration import base_points, orbit_jacobian_rank
from .core.lifting import lift_skew_pair, lift_unit_pair
from .core.pairs import act_S_on_pair, act_T_on_pair, phi, phi_inverse, torus_S, torus_T
from .data.fixtures import (
    basis_fixture,
    decode_basis,
    decode_lift,
    decode_poly,
    decode_symbol_pair,
    decode_unit_pair,
    dump_fixture,
    lifted_fixture,
    load_fixture,
    pair_fixture,
    read_fixture,
    symbol_pair_fixture,
)
from .models.certificate import OrbitSpec
from .models.report import REPORT_SCHEMA, SuiteReport
from .suites.runner import run_suite
from .utils.config import AppConfig, load_config, parse_primes
from .utils.exceptions import ConfigError, FixtureError, SkewPairError, UnsupportedPrime
from .utils.logger import configure_logging, get_logger
from .utils.sampling import derive_seed
from .utils.validators import PrimeValidator

logger = get_logger("cli")

EXIT_OK = 0
EXIT_FAIL = 1
EXIT_USAGE = 2

PAIRS_SUITE = "pairs,tori"


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="skewpair",
        description="Q(ρ_p) 上斜交换对、环面作用与提升的精确验证工具",
    )
    common = argparse.ArgumentParser(add_help=False)
    common.add_argument("--config", help="YAML 配置文件（默认 config/config.yaml）")
    common.add_argument("--output", "-o", help="输出文件（默认 stdout）")
    common.add_argument("--quiet", "-q", action="store_true", help="关闭进度条和控制台日志")
    sub = parser.add_subparsers(dest="command", required=True)

    def suite_flags(sp: argparse.ArgumentParser) -> None:
        sp.add_argument("--p", help="素数或逗号分隔的素数列表（默认取配置）")
        sp.add_argument("--seed", type=int, help="根种子")
        sp.add_argument("--format", choices=["json", "text"], help="报告格式")
        sp.add_argument("--trials", type=int, help="每项检查的随机样本数")
        sp.add_argument("--workers", type=int, help="线程数")
        sp.add_argument("--sequential", action="store_true", help="串行执行")
        sp.add_argument("--timings", action="store_true", help="报告中包含耗时")

    report = sub.add_parser("report", parents=[common], help="运行验证套件并输出报告")
    suite_flags(report)
    report.add_argument("--suite", default="all",
                        help="all / extended / 模块名或检查名（逗号分隔）")

    pairs = sub.add_parser("pairs-verify", parents=[common], help="只运行 pairs 与 tori 的检查")
    suite_flags(pairs)

    dims = sub.add_parser("dims", parents=[common], help="计算滤链各层的 Jacobian 秩证书")
    dims.add_argument("--p", type=int, required=True)
    dims.add_argument("--seed", type=int)
    dims.add_argument("--depth", type=int, help="只计算这一层（默认 2..p+1）")

    lift = sub.add_parser("lift", parents=[common], help="平方零提升（输入 lift 夹具）")
    lift.add_argument("input", nargs="?", help="夹具文件，缺省读 stdin")
    lift.add_argument("--unit", action="store_true", help="同时把 p 次幂修正为单位")

    slot = sub.add_parser("slot", parents=[common], help="符号代数中的槽移动（输入 symbol_pair 夹具）")
    slot.add_argument("input", nargs="?")
    slot.add_argument("--poly", required=True, help="poly 夹具文件")
    slot.add_argument("--move", choices=["T", "S"], default="T")

    phi_cmd = sub.add_parser("phi", parents=[common], help="基 → 单位斜交换对")
    phi_cmd.add_argument("input", nargs="?")

    phi_inv = sub.add_parser("phi-inverse", parents=[common], help="单位斜交换对 → 基")
    phi_inv.add_argument("input", nargs="?")

    torus = sub.add_parser("torus", parents=[common], help="环面作用（输入 basis 或 unit_pair 夹具）")
    torus.add_argument("input", nargs="?")
    torus.add_argument("--poly", required=True, help="poly 夹具文件")
    torus.add_argument("--kind", choices=["T", "S"], default="T")
    return parser


# ----------------------------------------------------------------------
# 工具
# ----------------------------------------------------------------------
def _emit(text: str, output: Optional[str]) -> None:
    if output:
        with open(output, "w", encoding="utf-8") as f:
            f.write(text)
        logger.info(f"output written: {output}")
    else:
        sys.stdout.write(text)


def _input(path: Optional[str]) -> Dict:
    return load_fixture(path) if path else read_fixture(sys.stdin)


def _apply_overrides(config: AppConfig, args: argparse.Namespace) -> None:
    if getattr(args, "trials", None):
        config.suite.trials = args.trials
    if getattr(args, "workers", None):
        config.suite.workers = args.workers
    if getattr(args, "sequential", False):
        config.suite.sequential = True
    if getattr(args, "format", None):
        config.report.format = args.format
    if getattr(args, "timings", False):
        config.report.timings = True
    if getattr(args, "seed", None) is not None:
        config.suite.seed = args.seed


def render_reports(reports: List[SuiteReport], fmt: str, timings: bool) -> str:
    """
    单个素数输出报告对象；多个素数输出 {"schema", "seed", "suite", "status", "reports"}

    Args:
        reports: 报告列表
        fmt: json 或 text
        timings: 是否包含耗时

    Returns:
        输出文本（以换行结尾）
    """
    if fmt == "text":
        return "\n".join(r.get_summary() for r in reports) + "\n"
    if len(reports) == 1:
        data = reports[0].to_dict(timings)
    else:
        data = {
            "schema": REPORT_SCHEMA,
            "seed": reports[0].seed,
            "suite": reports[0].suite,
            "status": "fail" if any(not r.passed for r in reports) else "pass",
            "reports": [r.to_dict(timings) for r in reports],
        }
    return json.dumps(data, indent=2, ensure_ascii=False) + "\n"


# ----------------------------------------------------------------------
# 子命令
# ----------------------------------------------------------------------
def cmd_report(args: argparse.Namespace, config: AppConfig, suite: str) -> int:
    primes = parse_primes(args.p) if args.p else list(config.suite.primes)
    for p in primes:
        PrimeValidator.validate(p)
    reports = [
        run_suite(p, config.suite.seed, suite, config, progress=not args.quiet) for p in primes
    ]
    _emit(render_reports(reports, config.report.format, config.report.timings), args.output)
    return EXIT_OK if all(r.passed for r in reports) else EXIT_FAIL


def cmd_dims(args: argparse.Namespace, config: AppConfig) -> int:
    p = PrimeValidator.validate(args.p, config.filtration.max_prime)
    root = config.suite.seed
    depths = [args.depth] if args.depth else list(range(2, p + 2))
    base = base_points(p)[0]
    certs = [
        orbit_jacobian_rank(OrbitSpec(base, depth), derive_seed(root, f"dims/{depth}"),
                            config.filtration.coefficient_bound, config.filtration.max_retries)
        for depth in depths
    ]
    data = {"p": p, "seed": root, "certificates": [c.to_dict() for c in certs]}
    _emit(json.dumps(data, indent=2, ensure_ascii=False) + "\n", args.output)
    return EXIT_OK if all(c.valid for c in certs) else EXIT_FAIL


def cmd_lift(args: argparse.Namespace) -> int:
    prob = decode_lift(_input(args.input))
    PrimeValidator.validate(prob.p)
    alpha, beta = lift_unit_pair(prob) if args.unit else lift_skew_pair(prob)
    _emit(dump_fixture(lifted_fixture(alpha, beta)), args.output)
    return EXIT_OK


def cmd_slot(args: argparse.Namespace) -> int:
    alpha, beta = decode_symbol_pair(_input(args.input))
    f = decode_poly(load_fixture(args.poly))
    if args.move == "T":
        moved = slot_move_T((alpha, beta), f)
        scalar: CycNum = slot_power_scalar(alpha, f)
    else:
        moved = slot_move_S((alpha, beta), f)
        scalar = slot_power_scalar(beta, f)
    data = symbol_pair_fixture(*moved)
    data["slot_scalar"] = scalar.to_json()
    _emit(dump_fixture(data), args.output)
    return EXIT_OK


def cmd_phi(args: argparse.Namespace) -> int:
    b = decode_basis(_input(args.input))
    PrimeValidator.validate(b.p)
    _emit(dump_fixture(pair_fixture(phi(b))), args.output)
    return EXIT_OK


def cmd_phi_inverse(args: argparse.Namespace) -> int:
    q = decode_unit_pair(_input(args.input))
    PrimeValidator.validate(q.p)
    _emit(dump_fixture(basis_fixture(phi_inverse(q))), args.output)
    return EXIT_OK


def cmd_torus(args: argparse.Namespace) -> int:
    data = _input(args.input)
    g = decode_poly(load_fixture(args.poly))
    if data.get("kind") == "unit_pair":
        q = decode_unit_pair(data)
        moved = act_T_on_pair(q, g) if args.kind == "T" else act_S_on_pair(q, g)
        out = pair_fixture(moved)
    else:
        b = decode_basis(data)
        out = basis_fixture(torus_T(b, g) if args.kind == "T" else torus_S(b, g))
    _emit(dump_fixture(out), args.output)
    return EXIT_OK


def main(argv: Optional[Sequence[str]] = None) -> int:
    parser = build_parser()
    try:
        args = parser.parse_args(argv)
    except SystemExit as e:
        return EXIT_USAGE if e.code else EXIT_OK

    try:
        config = load_config(args.config)
        _apply_overrides(config, args)
        configure_logging(config.logging.level, config.logging.dir,
                          config.logging.console and not args.quiet)

        if args.command == "report":
            return cmd_report(args, config, args.suite)
        if args.command == "pairs-verify":
            return cmd_report(args, config, PAIRS_SUITE)
        if args.command == "dims":
            return cmd_dims(args, config)
        handlers = {
            "lift": cmd_lift,
            "slot": cmd_slot,
            "phi": cmd_phi,
            "phi-inverse": cmd_phi_inverse,
            "torus": cmd_torus,
        }
        return handlers[args.command](args)
    except (UnsupportedPrime, FixtureError, ConfigError) as e:
        print(f"error: {e}", file=sys.stderr)
        return EXIT_USAGE
    except SkewPairError as e:
        print(f"error: {type(e).__name__}: {e}", file=sys.stderr)
        return EXIT_FAIL
    except ValueError as e:
        print(f"error: {e}", file=sys.stderr)
        return EXIT_USAGE


if __name__ == "__main__":
    sys.exit(main())
