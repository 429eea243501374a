"""轨道维数证书模型"""
from dataclasses import dataclass, field
from typing import List

from ..algebra.cycpoly import CycPoly
from .pair import Basis


@dataclass(frozen=True, eq=False)
class OrbitSpec:
    """
    轨道描述：基点 A 和深度 i

    第 k 个因子（从 1 开始）k 为奇数时是 T̂，偶数时是 Ŝ。
    """

    base: Basis
    depth: int

    def __post_init__(self):
        p = self.base.p
        if not 1 <= self.depth <= p + 2:
            raise ValueError(f"orbit depth must lie in 1..{p + 2}, got {self.depth}")

    @property
    def p(self) -> int:
        return self.base.p

    @property
    def pattern(self) -> List[str]:
        return ["T" if k % 2 == 1 else "S" for k in range(1, self.depth + 1)]


@dataclass
class DimCertificate:
    """Jacobian 秩证书"""

    p: int
    depth: int
    rank: int
    params: List[CycPoly]
    seed: int
    attempts: int = 1
    pattern: List[str] = field(default_factory=list)

    @property
    def expected(self) -> int:
        return min(self.depth * (self.p - 1), self.p * self.p - 1)

    @property
    def valid(self) -> bool:
        return self.rank == self.expected

    def to_dict(self) -> dict:
        """转换为字典（参数点一并输出，便于独立复核）"""
        return {
            'p': self.p,
            'depth': self.depth,
            'rank': self.rank,
            'expected': self.expected,
            'valid': self.valid,
            'seed': self.seed,
            'attempts': self.attempts,
            'pattern': ''.join(self.pattern),
            'params': [g.to_json() for g in self.params],
        }

    def __repr__(self) -> str:
        return f"DimCertificate(p={self.p}, depth={self.depth}, rank={self.rank}/{self.expected})"
