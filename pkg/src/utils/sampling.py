"""确定性随机数"""
import hashlib

import numpy as np


def derive_seed(root_seed: int, name: str) -> int:
    """
    从根种子和检查名派生子种子

    子种子 = sha256("{root_seed}/{name}") 前 8 字节（大端）。
    """
    digest = hashlib.sha256(f"{root_seed}/{name}".encode("utf-8")).digest()
    return int.from_bytes(digest[:8], "big")


def make_rng(seed: int) -> np.random.Generator:
    """创建 numpy 随机数生成器"""
    return np.random.default_rng(seed)


def small_ints(rng: np.random.Generator, count: int, bound: int) -> list:
    """在 [-bound, bound] 中取 count 个整数（Python int）"""
    return [int(v) for v in rng.integers(-bound, bound + 1, size=count)]
