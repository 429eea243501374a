"""符号代数 (x, y)_p

由 γ, δ 生成，满足 γ^p = x, δ^p = y, γδ = ρδγ。元素在基 γ^iδ^j 上
用 p×p 系数网格表示。由关系可得 δ^jγ^k = ρ^{-jk}γ^kδ^j，
指数越界时按 γ^p = x、δ^p = y 乘上参数。
"""
from dataclasses import dataclass
from typing import List, Tuple

import numpy as np

from ..utils.exceptions import (
    InvalidPair,
    NotScalar,
    ParamMismatch,
    Singular,
    SlotSingular,
)
from ..utils.logger import get_logger
from .cyclotomic import CycNum
from .cycpoly import CycPoly
from .linalg import LinearSolver, Mat, mat_inv

logger = get_logger("symbol")


@dataclass(frozen=True)
class SymParams:
    """符号代数参数"""
    p: int
    x: CycNum
    y: CycNum

    def __post_init__(self):
        if self.x.is_zero() or self.y.is_zero():
            raise ValueError("symbol algebra parameters x, y must be nonzero")
        if self.x.p != self.p or self.y.p != self.p:
            raise ValueError("parameters must lie in Q(ρ_p) for the same p")

    def to_dict(self) -> dict:
        return {"p": self.p, "x": self.x.to_json(), "y": self.y.to_json()}

    @classmethod
    def from_dict(cls, data: dict) -> "SymParams":
        p = int(data["p"])
        return cls(p, CycNum.from_json(p, data["x"]), CycNum.from_json(p, data["y"]))


class SymElem:
    """符号代数中的元素"""

    __slots__ = ("params", "_c")

    def __init__(self, params: SymParams, coeffs):
        """
        Args:
            params: 代数参数
            coeffs: p×p 网格，coeffs[i][j] 是 γ^iδ^j 的系数
        """
        p = params.p
        grid = np.empty((p, p), dtype=object)
        for i in range(p):
            for j in range(p):
                v = coeffs[i][j]
                grid[i, j] = v if isinstance(v, CycNum) else CycNum.from_rational(p, v)
        grid.setflags(write=False)
        object.__setattr__(self, "params", params)
        object.__setattr__(self, "_c", grid)

    def __setattr__(self, key, value):
        raise AttributeError("SymElem is immutable")

    @property
    def p(self) -> int:
        return self.params.p

    @property
    def coeffs(self) -> np.ndarray:
        return self._c

    @classmethod
    def monomial(cls, params: SymParams, i: int, j: int, c=1) -> "SymElem":
        """c·γ^iδ^j（0 ≤ i, j < p）"""
        p = params.p
        grid = [[0] * p for _ in range(p)]
        grid[i][j] = c
        return cls(params, grid)

    @classmethod
    def scalar(cls, params: SymParams, c) -> "SymElem":
        return cls.monomial(params, 0, 0, c)

    def __add__(self, other: "SymElem") -> "SymElem":
        _check_params(self, other)
        return SymElem(self.params, self._c + other._c)

    def __sub__(self, other: "SymElem") -> "SymElem":
        _check_params(self, other)
        return SymElem(self.params, self._c - other._c)

    def __neg__(self) -> "SymElem":
        return SymElem(self.params, -self._c)

    def __mul__(self, other):
        if isinstance(other, SymElem):
            return sym_mul(self, other)
        if isinstance(other, (CycNum, int)):
            return SymElem(self.params, self._c * other)
        return NotImplemented

    def __rmul__(self, other):
        if isinstance(other, (CycNum, int)):
            return SymElem(self.params, self._c * other)
        return NotImplemented

    def __pow__(self, k: int) -> "SymElem":
        return sym_pow(self, k)

    def __eq__(self, other) -> bool:
        if not isinstance(other, SymElem):
            return NotImplemented
        return self.params == other.params and all(
            a == b for a, b in zip(self._c.flat, other._c.flat)
        )

    __hash__ = None

    def is_scalar(self) -> bool:
        """只在 (0,0) 处有非零系数"""
        p = self.p
        return all(self._c[i, j].is_zero() for i in range(p) for j in range(p) if (i, j) != (0, 0))

    def scalar_part(self) -> CycNum:
        if not self.is_scalar():
            raise NotScalar("symbol algebra element is not central scalar")
        return self._c[0, 0]

    def vec(self) -> List[CycNum]:
        return list(self._c.flat)

    def to_dict(self) -> dict:
        data = self.params.to_dict()
        data["coeffs"] = [[v.to_json() for v in row] for row in self._c]
        return data

    @classmethod
    def from_dict(cls, data: dict) -> "SymElem":
        params = SymParams.from_dict(data)
        p = params.p
        return cls(params, [[CycNum.from_json(p, v) for v in row] for row in data["coeffs"]])

    def __repr__(self) -> str:
        terms = [f"({self._c[i, j]})γ^{i}δ^{j}" for i in range(self.p) for j in range(self.p)
                 if not self._c[i, j].is_zero()]
        return f"SymElem(p={self.p}, {' + '.join(terms) or '0'})"


def _check_params(a: SymElem, b: SymElem) -> None:
    if a.params != b.params:
        raise ParamMismatch(f"symbol algebra parameters differ: {a.params} vs {b.params}")


def gamma(params: SymParams) -> SymElem:
    return SymElem.monomial(params, 1, 0)


def delta(params: SymParams) -> SymElem:
    return SymElem.monomial(params, 0, 1)


def one(params: SymParams) -> SymElem:
    return SymElem.scalar(params, 1)


def _monomial_product(params: SymParams, i: int, j: int, k: int, l: int) -> Tuple[int, int, CycNum]:
    """(γ^iδ^j)(γ^kδ^l) = c·γ^aδ^b，返回 (a, b, c)"""
    p = params.p
    c = CycNum.rho(p, -j * k)
    a, b = i + k, j + l
    if a >= p:
        a -= p
        c = c * params.x
    if b >= p:
        b -= p
        c = c * params.y
    return a, b, c


def sym_mul(a: SymElem, b: SymElem) -> SymElem:
    """结构常数乘法"""
    _check_params(a, b)
    p = a.p
    params = a.params
    out = np.empty((p, p), dtype=object)
    out.fill(CycNum.zero(p))
    left = [(i, j, a.coeffs[i, j]) for i in range(p) for j in range(p) if not a.coeffs[i, j].is_zero()]
    right = [(k, l, b.coeffs[k, l]) for k in range(p) for l in range(p) if not b.coeffs[k, l].is_zero()]
    for i, j, u in left:
        for k, l, v in right:
            s, t, c = _monomial_product(params, i, j, k, l)
            out[s, t] = out[s, t] + u * v * c
    return SymElem(params, out)


def sym_pow(a: SymElem, k: int) -> SymElem:
    if k < 0:
        return sym_pow(sym_inv(a), -k)
    result = one(a.params)
    base = a
    while k:
        if k & 1:
            result = sym_mul(result, base)
        base = sym_mul(base, base)
        k >>= 1
    return result


def sym_trace(a: SymElem) -> CycNum:
    """约化迹 = p·c_00"""
    return a.coeffs[0, 0] * a.p


def regular_rep(a: SymElem) -> Mat:
    """左乘 a 在系数空间（γ^kδ^l ↦ 下标 k·p + l）上的 p²×p² 矩阵"""
    p = a.p
    params = a.params
    n = p * p
    arr = np.empty((n, n), dtype=object)
    arr.fill(CycNum.zero(p))
    for k in range(p):
        for l in range(p):
            col = k * p + l
            for i in range(p):
                for j in range(p):
                    u = a.coeffs[i, j]
                    if u.is_zero():
                        continue
                    s, t, c = _monomial_product(params, i, j, k, l)
                    arr[s * p + t, col] = arr[s * p + t, col] + u * c
    return Mat(p, arr)


def is_invertible(a: SymElem) -> bool:
    return not regular_rep(a).det().is_zero()


def sym_inv(a: SymElem) -> SymElem:
    """通过左乘矩阵求逆（Singular 表示不可逆）"""
    p = a.p
    inv = mat_inv(regular_rep(a))
    column = inv.col(0)
    return SymElem(a.params, [[column.array[i * p + j, 0] for j in range(p)] for i in range(p)])


def poly_at(f: CycPoly, a: SymElem) -> SymElem:
    """f(a)，Horner 法"""
    acc = SymElem.scalar(a.params, 0)
    for c in reversed(f.coeffs):
        acc = sym_mul(acc, a) + SymElem.scalar(a.params, c)
    return acc


def skew_commutes(alpha: SymElem, beta: SymElem) -> bool:
    """αβ = ρβα"""
    rho = CycNum.rho(alpha.p)
    return sym_mul(alpha, beta) == sym_mul(beta, alpha) * rho


def _require_pair(alpha: SymElem, beta: SymElem) -> None:
    _check_params(alpha, beta)
    if not skew_commutes(alpha, beta):
        raise InvalidPair("symbol algebra pair does not satisfy αβ = ρβα")


def _require_unit(a: SymElem, what: str) -> None:
    if not is_invertible(a):
        raise SlotSingular(f"{what} is not invertible in the symbol algebra")


def slot_move_T(pair: Tuple[SymElem, SymElem], f: CycPoly) -> Tuple[SymElem, SymElem]:
    """
    𝒯((α, β), f) = (α, f(α)β)

    Args:
        pair: 满足 αβ = ρβα 的元素对
        f: K[x]/(x^p-1) 中的多项式

    Returns:
        新的元素对，依然斜交换
    """
    alpha, beta = pair
    _require_pair(alpha, beta)
    fa = poly_at(f, alpha)
    _require_unit(fa, "f(α)")
    return alpha, sym_mul(fa, beta)


def slot_move_S(pair: Tuple[SymElem, SymElem], f: CycPoly) -> Tuple[SymElem, SymElem]:
    """𝒮((α, β), f) = (f(β)α, β)"""
    alpha, beta = pair
    _require_pair(alpha, beta)
    fb = poly_at(f, beta)
    _require_unit(fb, "f(β)")
    return sym_mul(fb, alpha), beta


def slot_power_scalar(alpha: SymElem, f: CycPoly) -> CycNum:
    """
    N = ∏_{i=0}^{p-1} f(ρ^i α)

    对任意与 α 满足 αβ = ρβα 的 β，有 (f(α)β)^p = N·β^p。

    Args:
        alpha: α^p 为标量的元素
        f: 多项式，f(α) 需可逆

    Returns:
        标量 N
    """
    p = alpha.p
    if not sym_pow(alpha, p).is_scalar():
        raise NotScalar("α^p is not a scalar")
    _require_unit(poly_at(f, alpha), "f(α)")
    prod = one(alpha.params)
    for i in range(p):
        prod = sym_mul(prod, poly_at(f, alpha * CycNum.rho(p, i)))
    if not prod.is_scalar():
        raise NotScalar("product of the conjugates f(ρ^i α) is not scalar")
    logger.debug(f"slot power scalar computed for p={p}")
    return prod.scalar_part()


def polynomial_in(u: SymElem, alpha: SymElem) -> CycPoly:
    """把 u 写成 α 的幂次组合 Σ c_i α^i（要求 1, α, ..., α^{p-1} 线性无关）"""
    p = alpha.p
    powers = [one(alpha.params)]
    for _ in range(1, p):
        powers.append(sym_mul(powers[-1], alpha))
    system = Mat.from_columns(p, [Mat.column(p, w.vec()) for w in powers])
    solution = LinearSolver(system).solve(Mat.column(p, u.vec()))
    return CycPoly(p, [solution.array[i, 0] for i in range(p)])


def norm_one_poly(h: CycPoly, alpha: SymElem) -> CycPoly:
    """
    构造 f 使 f(α) = h(α)·h(ρα)^{-1}

    ∏_i f(ρ^i α) 逐项相消，因此 f 的槽范数为 1。
    """
    p = alpha.p
    ha = poly_at(h, alpha)
    h_shift = poly_at(h, alpha * CycNum.rho(p))
    try:
        u = sym_mul(ha, sym_inv(h_shift))
    except Singular as e:
        raise SlotSingular("h(ρα) is not invertible") from e
    return polynomial_in(u, alpha)

