"""基与斜交换对模型"""
from dataclasses import dataclass, field
from typing import List

from ..algebra.cyclotomic import CycNum
from ..algebra.linalg import Mat
from ..utils.exceptions import InvalidPair, Singular


def _first_nonzero(m: Mat) -> CycNum:
    """按列优先找第一个非零元素"""
    rows, cols = m.shape
    for j in range(cols):
        for i in range(rows):
            v = m.array[i, j]
            if not v.is_zero():
                return v
    raise Singular("zero matrix has no projective normal form")


def projective_normal(m: Mat) -> Mat:
    """把矩阵缩放到第一个非零元素（列优先）为 1"""
    return m * _first_nonzero(m).inverse()


@dataclass(frozen=True, eq=False)
class Basis:
    """有序基 (v_0, ..., v_{p-1})，按列存放，只在相差标量意义下确定"""

    matrix: Mat
    p: int = field(init=False)

    def __post_init__(self):
        if not self.matrix.is_square():
            raise Singular(f"basis matrix must be square, got {self.matrix.shape}")
        if self.matrix.det().is_zero():
            raise Singular("basis matrix is singular")
        object.__setattr__(self, "p", self.matrix.p)
        # 第 0 列的第一个非零元素缩放为 1
        object.__setattr__(self, "matrix", projective_normal(self.matrix))

    @property
    def vectors(self) -> List[Mat]:
        return self.matrix.columns()

    def __eq__(self, other) -> bool:
        if not isinstance(other, Basis):
            return NotImplemented
        return self.matrix == other.matrix

    __hash__ = None

    def to_dict(self) -> dict:
        return {"p": self.p, "matrix": self.matrix.to_json()}

    @classmethod
    def from_dict(cls, data: dict) -> "Basis":
        p = int(data["p"])
        return cls(Mat.from_json(p, data["matrix"]))

    def __repr__(self) -> str:
        return f"Basis(p={self.p})"


@dataclass(frozen=True, eq=False)
class SkewPair:
    """可逆矩阵对 (α, β)，αβ = ρβα"""

    alpha: Mat
    beta: Mat

    def __post_init__(self):
        self._validate()

    def _validate(self) -> None:
        a, b = self.alpha, self.beta
        if a.p != b.p or a.shape != b.shape or not a.is_square():
            raise InvalidPair(f"incompatible matrices {a.shape} / {b.shape}")
        if a.det().is_zero() or b.det().is_zero():
            raise InvalidPair("pair members must be invertible")
        if a @ b != (b @ a) * CycNum.rho(a.p):
            raise InvalidPair("pair does not satisfy αβ = ρβα")

    @property
    def p(self) -> int:
        return self.alpha.p

    def __eq__(self, other) -> bool:
        if not isinstance(other, SkewPair):
            return NotImplemented
        return self.alpha == other.alpha and self.beta == other.beta

    __hash__ = None

    def to_dict(self) -> dict:
        return {"p": self.p, "alpha": self.alpha.to_json(), "beta": self.beta.to_json()}

    @classmethod
    def from_dict(cls, data: dict) -> "SkewPair":
        p = int(data["p"])
        return cls(Mat.from_json(p, data["alpha"]), Mat.from_json(p, data["beta"]))

    def __repr__(self) -> str:
        return f"{type(self).__name__}(p={self.p})"


@dataclass(frozen=True, eq=False)
class UnitSkewPair(SkewPair):
    """α^p = β^p = I 的斜交换对（P̂ 中的点）"""

    def _validate(self) -> None:
        super()._validate()
        ident = Mat.identity(self.p, self.alpha.shape[0])
        if self.alpha.power(self.p) != ident or self.beta.power(self.p) != ident:
            raise InvalidPair("unit pair requires α^p = β^p = I")


def same_in_pbar(q1: SkewPair, q2: SkewPair) -> bool:
    """在 P̄ 中相等：α 和 β 分别只差一个标量"""
    return (projective_normal(q1.alpha) == projective_normal(q2.alpha)
            and projective_normal(q1.beta) == projective_normal(q2.beta))
