"""检查基类"""
import time
from abc import ABC, abstractmethod
from dataclasses import dataclass, field
from typing import Callable, Dict, Optional, Tuple

import numpy as np

from ..models.report import FAIL, PASS, SKIP, CheckRecord
from ..utils.config import AppConfig
from ..utils.logger import get_logger
from ..utils.sampling import derive_seed, make_rng

logger = get_logger("suite")

Witness = Dict[str, object]


@dataclass
class CheckContext:
    """单项检查的运行环境"""

    p: int
    seed: int
    config: AppConfig = field(default_factory=AppConfig)
    rng: np.random.Generator = field(init=False)

    def __post_init__(self):
        self.rng = make_rng(self.seed)

    @property
    def trials(self) -> int:
        return self.config.suite.trials

    def sub_seed(self, label: str) -> int:
        return derive_seed(self.seed, label)


class VerificationCheck(ABC):
    """一项可独立重跑的验证"""

    def __init__(self, name: str, group: str, anchor: str,
                 primes: Tuple[int, ...], extended: bool = False):
        """
        Args:
            name: 检查名（group.xxx）
            group: 所属模块
            anchor: 对应的命题/引理
            primes: 允许运行的素数
            extended: 是否只在扩展套件中运行
        """
        self.name = name
        self.group = group
        self.anchor = anchor
        self.primes = primes
        self.extended = extended

    @abstractmethod
    def verify(self, ctx: CheckContext) -> Tuple[bool, Witness]:
        """
        执行检查

        Returns:
            (是否通过, 证据数据)
        """

    def applies_to(self, p: int) -> bool:
        return p in self.primes

    def execute(self, p: int, root_seed: int, config: AppConfig) -> CheckRecord:
        """
        以派生种子运行检查，异常记为失败

        Args:
            p: 素数
            root_seed: 根种子
            config: 配置

        Returns:
            CheckRecord
        """
        seed = derive_seed(root_seed, self.name)
        if not self.applies_to(p):
            return CheckRecord(self.name, self.group, self.anchor, SKIP, seed,
                               {"reason": f"p={p} outside {list(self.primes)}"})

        start = time.perf_counter()
        try:
            ok, witness = self.verify(CheckContext(p, seed, config))
            status = PASS if ok else FAIL
        except Exception as e:
            logger.exception(f"{self.name} raised at p={p}")
            ok, witness, status = False, {"error": f"{type(e).__name__}: {e}"}, FAIL
        elapsed = (time.perf_counter() - start) * 1000

        if status == FAIL:
            logger.error(f"✗ {self.name} failed at p={p}: {witness}")
        else:
            logger.info(f"✓ {self.name} passed at p={p} ({elapsed:.0f} ms)")
        return CheckRecord(self.name, self.group, self.anchor, status, seed, witness, elapsed)


class FunctionCheck(VerificationCheck):
    """用普通函数实现的检查"""

    def __init__(self, func: Callable[[CheckContext], Tuple[bool, Witness]], **kwargs):
        super().__init__(**kwargs)
        self.func = func

    def verify(self, ctx: CheckContext) -> Tuple[bool, Witness]:
        return self.func(ctx)


REGISTRY: Dict[str, VerificationCheck] = {}

ALL_PRIMES = (3, 5, 7, 11, 13)


def check(name: str, anchor: str, primes: Tuple[int, ...] = ALL_PRIMES,
          extended: bool = False) -> Callable:
    """注册检查的装饰器，group 取 name 的前缀"""
    def decorator(func: Callable[[CheckContext], Tuple[bool, Witness]]):
        if name in REGISTRY:
            raise ValueError(f"duplicate check name: {name}")
        REGISTRY[name] = FunctionCheck(func, name=name, group=name.split(".")[0],
                                       anchor=anchor, primes=tuple(primes), extended=extended)
        return func
    return decorator


def get_check(name: str) -> Optional[VerificationCheck]:
    return REGISTRY.get(name)
