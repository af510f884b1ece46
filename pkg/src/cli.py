"""命令行入口。

退出码：0 全部检查通过；1 发现违例；2 用法或输入错误。

使用示例
--------
    lelcheck enum --n 10 --dump trees10.txt
    lelcheck invariants --n 8 --out n8.csv --format csv
    lelcheck verify order --n 10 --slack 1e-9
    lelcheck --jobs 4 verify identities --n-max 16
    lelcheck hunt lee --n-min 6 --n-max 15
    lelcheck probe closure --mu 4,1,1 --steps 20
"""
from __future__ import annotations

import argparse
import logging
import sys
from collections.abc import Sequence

from .config import (
    DEFAULT_MIN_GAP,
    DEFAULT_SEED,
    DEFAULT_SLACK,
    FULL_PAIR_SCAN_MAX,
)
from .errors import LelCheckError
from .harness import (
    closure_probe,
    coefficient_table,
    hunt_lee_violations,
    records_frame,
    verify_bipartite,
    verify_extremal,
    verify_identities,
    verify_spectral_roundtrip,
    verify_theorem1,
)
from .report import CheckReport, emit, frame_to_text, report_to_text, write_lines
from .sampling import verify_gradient, verify_jacobian, verify_lemmas
from .treeenum import format_tree_dump, free_tree_level_sequences, prufer_census

logger = logging.getLogger(__name__)

LOG_FORMAT = "%(asctime)s [%(levelname)s] %(name)s: %(message)s"

EXIT_OK = 0
EXIT_VIOLATION = 1
EXIT_USAGE = 2


# ============================================================================
# 参数解析
# ============================================================================

def _float_list(text: str) -> list[float]:
    try:
        return [float(v) for v in text.split(",") if v.strip()]
    except ValueError as exc:
        raise argparse.ArgumentTypeError(f"需要逗号分隔的数值列表: {text!r}") from exc


def _common_options(defaults: bool) -> argparse.ArgumentParser:
    """全局选项；叶子命令上重复一份，默认值为 SUPPRESS，只在显式给出时覆盖。"""
    parser = argparse.ArgumentParser(add_help=False)
    suppress = argparse.SUPPRESS
    parser.add_argument('--jobs', type=int, default=1 if defaults else suppress,
                        help="并行进程数（默认 1）")
    parser.add_argument('--format', choices=('csv', 'json'), default=None if defaults else suppress,
                        help="输出格式；invariants 默认 csv，其余默认 json")
    parser.add_argument('--quiet', action='store_true', default=False if defaults else suppress,
                        help="只输出 WARNING 及以上的日志")
    parser.add_argument('--out', default=None if defaults else suppress,
                        help="输出文件，缺省写到标准输出")
    return parser


def build_parser() -> argparse.ArgumentParser:
    common = _common_options(defaults=False)
    parser = argparse.ArgumentParser(
        prog='lelcheck',
        description="树的拉普拉斯系数、LEL/LEE 不变量与 Vieta 映射的验证工具",
        parents=[_common_options(defaults=True)],
    )
    sub = parser.add_subparsers(dest='command', required=True)

    p = sub.add_parser('enum', parents=[common], help="枚举 n 阶自由树")
    p.add_argument('--n', type=int, required=True)
    p.add_argument('--dump', default=None, help="把层序列逐行写入文件")
    p.set_defaults(handler=_cmd_enum)

    p = sub.add_parser('invariants', parents=[common], help="n 阶全部树的系数与不变量表")
    p.add_argument('--n', type=int, required=True)
    p.set_defaults(handler=_cmd_invariants)

    p = sub.add_parser('prufer', parents=[common], help="Prüfer 普查（独立计数）")
    p.add_argument('--n', type=int, required=True)
    p.set_defaults(handler=_cmd_prufer)

    verify = sub.add_parser('verify', help="验证类检查").add_subparsers(dest='check', required=True)

    p = verify.add_parser('jacobian', parents=[common])
    p.add_argument('--n-min', type=int, default=2)
    p.add_argument('--n-max', type=int, default=8)
    p.add_argument('--samples', type=int, default=200)
    p.add_argument('--min-gap', type=float, default=DEFAULT_MIN_GAP)
    p.add_argument('--tol', type=float, default=1e-7)
    p.add_argument('--seed', type=int, default=DEFAULT_SEED)
    p.set_defaults(handler=lambda a: verify_jacobian(a.n_min, a.n_max, a.samples, a.min_gap,
                                                     a.tol, a.seed))

    p = verify.add_parser('lemmas', parents=[common])
    p.add_argument('--n-min', type=int, default=2)
    p.add_argument('--n-max', type=int, default=8)
    p.add_argument('--samples', type=int, default=200)
    p.add_argument('--tol', type=float, default=1e-9)
    p.add_argument('--seed', type=int, default=DEFAULT_SEED)
    p.set_defaults(handler=lambda a: verify_lemmas(a.n_min, a.n_max, a.samples, a.tol, a.seed))

    p = verify.add_parser('identities', parents=[common])
    p.add_argument('--n-max', type=int, default=16)
    p.set_defaults(handler=lambda a: verify_identities(a.n_max, a.jobs))

    p = verify.add_parser('extremal', parents=[common])
    p.add_argument('--n-max', type=int, default=14)
    p.set_defaults(handler=lambda a: verify_extremal(a.n_max, a.jobs))

    p = verify.add_parser('order', parents=[common])
    p.add_argument('--n', type=int, required=True)
    p.add_argument('--slack', type=float, default=DEFAULT_SLACK)
    p.set_defaults(handler=lambda a: verify_theorem1(a.n, a.slack, a.jobs))

    p = verify.add_parser('gradient', parents=[common])
    p.add_argument('--samples', type=int, default=500)
    p.add_argument('--fd-step', type=float, default=1e-6)
    p.add_argument('--tol', type=float, default=1e-4)
    p.add_argument('--seed', type=int, default=DEFAULT_SEED)
    p.set_defaults(handler=lambda a: verify_gradient(a.samples, a.fd_step, a.tol, a.seed))

    p = verify.add_parser('bipartite', parents=[common])
    p.add_argument('--n-max', type=int, default=10)
    p.add_argument('--tol', type=float, default=1e-8)
    p.set_defaults(handler=lambda a: verify_bipartite(a.n_max, a.tol))

    p = verify.add_parser('roundtrip', parents=[common])
    p.add_argument('--n-max', type=int, default=12)
    p.add_argument('--tol', type=float, default=1e-8)
    p.set_defaults(handler=lambda a: verify_spectral_roundtrip(a.n_max, a.tol))

    hunt = sub.add_parser('hunt', help="反例搜索").add_subparsers(dest='target', required=True)
    p = hunt.add_parser('lee', parents=[common])
    p.add_argument('--n-min', type=int, default=6)
    p.add_argument('--n-max', type=int, default=15)
    p.add_argument('--slack', type=float, default=DEFAULT_SLACK)
    p.add_argument('--full-scan-max', type=int, default=FULL_PAIR_SCAN_MAX)
    p.set_defaults(handler=lambda a: hunt_lee_violations(a.n_min, a.n_max, a.slack,
                                                         a.full_scan_max, a.jobs))

    probe = sub.add_parser('probe', help="数值探测").add_subparsers(dest='target', required=True)
    p = probe.add_parser('closure', parents=[common])
    p.add_argument('--mu', type=_float_list, required=True, help="逗号分隔，恰含一对重合值")
    p.add_argument('--steps', type=int, default=20)
    p.set_defaults(handler=lambda a: closure_probe(a.mu, a.steps))

    return parser


# ============================================================================
# 子命令
# ============================================================================

def _cmd_enum(args) -> int:
    if args.dump is not None:
        count = write_lines((format_tree_dump(ls) for ls in free_tree_level_sequences(args.n)), args.dump)
        logger.info(f"已写入 {count} 棵树到 {args.dump}")
    else:
        count = sum(1 for _ in free_tree_level_sequences(args.n))
    emit(f"{args.n} {count}\n", args.out)
    return EXIT_OK


def _cmd_invariants(args) -> int:
    records = coefficient_table(args.n, args.jobs)
    emit(frame_to_text(records_frame(records), args.format or 'csv'), args.out)
    failed = [r.tree_id for r in records if not r.identities_passed]
    if failed:
        logger.error(f"{len(failed)} 棵树的系数恒等式不成立: {failed[:5]}")
        return EXIT_VIOLATION
    return EXIT_OK


def _cmd_prufer(args) -> int:
    emit(f"{args.n} {prufer_census(args.n, args.jobs)}\n", args.out)
    return EXIT_OK


def _run_check(args) -> int:
    report: CheckReport = args.handler(args)
    emit(report_to_text(report, args.format or 'json'), args.out)
    if report.passed:
        logger.info(f"{report.check}: pass（{report.cases_checked} 个用例）")
        return EXIT_OK
    logger.warning(f"{report.check}: fail（{len(report.violations)} 条违例）")
    return EXIT_VIOLATION


def main(argv: Sequence[str] | None = None) -> int:
    parser = build_parser()
    args = parser.parse_args(argv)
    logging.basicConfig(level=logging.WARNING if args.quiet else logging.INFO,
                        format=LOG_FORMAT, stream=sys.stderr)
    try:
        if args.handler in (_cmd_enum, _cmd_invariants, _cmd_prufer):
            return args.handler(args)
        return _run_check(args)
    except (LelCheckError, ValueError, OSError) as exc:
        logger.error(f"{type(exc).__name__}: {exc}")
        return EXIT_USAGE


if __name__ == '__main__':
    sys.exit(main())
