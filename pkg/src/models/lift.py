"""平方零提升问题模型"""
from dataclasses import dataclass

from ..algebra.cyclotomic import CycNum
from ..algebra.linalg import DualMat, Mat
from ..utils.exceptions import InvalidPair


@dataclass(frozen=True, eq=False)
class LiftProblem:
    """K[ε]/(ε²) 上的近似提升 (α₀, β₀)，主体部分构成斜交换对"""

    alpha0: DualMat
    beta0: DualMat

    def __post_init__(self):
        a, b = self.alpha0.body, self.beta0.body
        if a @ b != (b @ a) * CycNum.rho(a.p):
            raise InvalidPair("lift problem bodies do not satisfy αβ = ρβα")

    @property
    def p(self) -> int:
        return self.alpha0.p

    def defect(self) -> Mat:
        """z = α₀β₀ - ρβ₀α₀ 的 ε 部分（主体部分恒为 0）"""
        ab = self.alpha0 @ self.beta0
        ba = self.beta0 @ self.alpha0
        return ab.slope - ba.slope * CycNum.rho(self.p)

    def to_dict(self) -> dict:
        return {"p": self.p, "alpha0": self.alpha0.to_json(), "beta0": self.beta0.to_json()}

    @classmethod
    def from_dict(cls, data: dict) -> "LiftProblem":
        p = int(data["p"])
        return cls(DualMat.from_json(p, data["alpha0"]), DualMat.from_json(p, data["beta0"]))
