"""验证套件运行器"""
import sys
from concurrent.futures import ThreadPoolExecutor, as_completed
from typing import Dict, List, Optional

from tqdm import tqdm

from ..models.report import CheckRecord, SuiteReport
from ..utils.config import AppConfig
from ..utils.logger import get_logger
from ..utils.validators import PrimeValidator
from . import checks  # noqa: F401  注册全部检查
from .base import REGISTRY, VerificationCheck

logger = get_logger("runner")

SUITE_ALL = "all"
SUITE_EXTENDED = "extended"


def select_checks(suite: str = SUITE_ALL) -> List[VerificationCheck]:
    """
    按选择器挑出检查，保持注册顺序

    Args:
        suite: "all"（不含扩展检查）、"extended"（全部），
               或逗号分隔的模块名 / 检查名

    Returns:
        检查列表
    """
    if suite == SUITE_ALL:
        return [c for c in REGISTRY.values() if not c.extended]
    if suite == SUITE_EXTENDED:
        return list(REGISTRY.values())

    wanted = [s.strip() for s in suite.split(",") if s.strip()]
    groups = {c.group for c in REGISTRY.values()}
    unknown = [w for w in wanted if w not in REGISTRY and w not in groups]
    if unknown or not wanted:
        raise ValueError(f"unknown suite selector: {', '.join(unknown) or suite!r}")
    return [c for c in REGISTRY.values() if c.name in wanted or c.group in wanted]


def run_suite(p: int, seed: int, suite: str = SUITE_ALL, config: Optional[AppConfig] = None,
              workers: Optional[int] = None, sequential: Optional[bool] = None,
              progress: bool = True) -> SuiteReport:
    """
    在素数 p 上运行一套检查

    Args:
        p: 奇素数（≤ 13）
        seed: 根种子
        suite: 套件选择器
        config: 配置，None 时使用默认值
        workers: 线程数，None 时取配置
        sequential: 强制串行，None 时取配置
        progress: 是否显示进度条（stderr 不是终端时自动关闭）

    Returns:
        SuiteReport，检查按注册顺序排列
    """
    PrimeValidator.validate(p)
    config = config or AppConfig()
    workers = workers or config.suite.workers
    sequential = config.suite.sequential if sequential is None else sequential
    selected = select_checks(suite)
    logger.info(f"Running {len(selected)} checks at p={p}, seed={seed}, suite={suite}")

    records: Dict[str, CheckRecord] = {}
    bar = tqdm(total=len(selected), desc=f"p={p}", file=sys.stderr,
               disable=not progress or not sys.stderr.isatty(), leave=False)
    try:
        if sequential or workers == 1:
            for chk in selected:
                records[chk.name] = chk.execute(p, seed, config)
                bar.update(1)
        else:
            with ThreadPoolExecutor(max_workers=workers) as executor:
                future_to_name = {
                    executor.submit(chk.execute, p, seed, config): chk.name for chk in selected
                }
                for future in as_completed(future_to_name):
                    records[future_to_name[future]] = future.result()
                    bar.update(1)
    finally:
        bar.close()

    report = SuiteReport(p, seed, suite, [records[chk.name] for chk in selected])
    logger.info(f"p={p}: {report.count('pass')} passed, {report.count('fail')} failed, "
                f"{report.count('skip')} skipped")
    return report


def run_suites(primes: List[int], seed: int, suite: str = SUITE_ALL,
               config: Optional[AppConfig] = None, **kwargs) -> List[SuiteReport]:
    """对多个素数依次运行 run_suite"""
    return [run_suite(p, seed, suite, config, **kwargs) for p in primes]
