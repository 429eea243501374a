"""测试公共夹具"""
import sys
from pathlib import Path

import numpy as np
import pytest

# 添加项目根目录到Python路径
project_root = Path(__file__).parent.parent
sys.path.insert(0, str(project_root))

from src.algebra.cyclotomic import CycNum  # noqa: E402
from src.algebra.linalg import Mat  # noqa: E402
from src.models.pair import Basis  # noqa: E402
from src.utils.config import AppConfig  # noqa: E402


def pytest_configure(config):
    config.addinivalue_line("markers", "slow: p = 7 certificates and other long runs")


@pytest.fixture
def rng():
    return np.random.default_rng(20240611)


@pytest.fixture
def small_config():
    """试验次数压低的配置，保证套件测试很快"""
    config = AppConfig()
    config.suite.trials = 3
    config.suite.psi_trials = 4
    config.suite.lift_trials = 6
    config.suite.workers = 2
    return config


def _upper_basis(p: int) -> Basis:
    return Basis(Mat(p, [[1 if j >= i else 0 for j in range(p)] for i in range(p)]))


def _mixed_basis(p: int) -> Basis:
    rows = [[CycNum.rho(p, i * j) + (1 if i == j else 0) for j in range(p)] for i in range(p)]
    return Basis(Mat(p, rows))


@pytest.fixture
def upper_basis():
    """上三角全 1 矩阵构成的基"""
    return _upper_basis


@pytest.fixture
def mixed_basis():
    """R' + I：各列带不同 ρ 幂次的可逆矩阵"""
    return _mixed_basis
