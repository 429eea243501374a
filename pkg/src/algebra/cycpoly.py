"""环 K[x]/(x^p - 1)

两个环面作用的系数环。提供自同构 τ / τ'，环范数 n(f)，
求值同构 Θ 以及范数商映射 Ψ / Ψ'。环中的除法通过 Θ 逐分量求逆实现。
"""
from fractions import Fraction
from typing import Iterable, List, Sequence, Union

import numpy as np

from ..utils.exceptions import FieldMismatch, InternalError, NotInvertible
from .cyclotomic import CycNum, Rational, random_cyc


class CycPoly:
    """K[x]/(x^p - 1) 中的元素，系数 a_0, ..., a_{p-1}"""

    __slots__ = ("p", "coeffs")

    def __init__(self, p: int, coeffs: Iterable[Union[CycNum, Rational]]):
        """
        Args:
            p: 奇素数
            coeffs: x 的幂次系数，长度任意（按 x^p = 1 折叠）
        """
        folded = [CycNum.zero(p)] * p
        for i, c in enumerate(coeffs):
            if not isinstance(c, CycNum):
                c = CycNum.from_rational(p, c)
            elif c.p != p:
                raise FieldMismatch(f"coefficient over Q(ρ_{c.p}) in a p={p} polynomial")
            folded[i % p] = folded[i % p] + c
        object.__setattr__(self, "p", p)
        object.__setattr__(self, "coeffs", tuple(folded))

    def __setattr__(self, key, value):
        raise AttributeError("CycPoly is immutable")

    @classmethod
    def constant(cls, p: int, c: Union[CycNum, Rational]) -> "CycPoly":
        return cls(p, [c])

    @classmethod
    def x_power(cls, p: int, i: int = 1, c: Union[CycNum, Rational] = 1) -> "CycPoly":
        """c·x^i"""
        coeffs: List[Union[CycNum, Rational]] = [0] * p
        coeffs[i % p] = c
        return cls(p, coeffs)

    def _check(self, other: "CycPoly") -> None:
        if other.p != self.p:
            raise FieldMismatch(f"cannot combine p={self.p} and p={other.p} polynomials")

    def __add__(self, other: "CycPoly") -> "CycPoly":
        self._check(other)
        return CycPoly(self.p, [a + b for a, b in zip(self.coeffs, other.coeffs)])

    def __sub__(self, other: "CycPoly") -> "CycPoly":
        self._check(other)
        return CycPoly(self.p, [a - b for a, b in zip(self.coeffs, other.coeffs)])

    def __neg__(self) -> "CycPoly":
        return CycPoly(self.p, [-a for a in self.coeffs])

    def __mul__(self, other):
        if isinstance(other, CycPoly):
            return poly_mul(self, other)
        if isinstance(other, (CycNum, int, Fraction)) and not isinstance(other, bool):
            return CycPoly(self.p, [a * other for a in self.coeffs])
        return NotImplemented

    __rmul__ = __mul__

    def __eq__(self, other) -> bool:
        if not isinstance(other, CycPoly):
            return NotImplemented
        return self.p == other.p and self.coeffs == other.coeffs

    def __hash__(self) -> int:
        return hash((self.p, self.coeffs))

    def is_constant(self) -> bool:
        return all(c.is_zero() for c in self.coeffs[1:])

    def support(self) -> List[int]:
        """非零系数的下标"""
        return [i for i, c in enumerate(self.coeffs) if not c.is_zero()]

    def evaluate(self, z: CycNum) -> CycNum:
        """在 z 处求值（Horner）"""
        acc = CycNum.zero(self.p)
        for c in reversed(self.coeffs):
            acc = acc * z + c
        return acc

    def to_json(self) -> List[List[str]]:
        return [c.to_json() for c in self.coeffs]

    @classmethod
    def from_json(cls, p: int, data: Sequence[Sequence[str]]) -> "CycPoly":
        if len(data) != p:
            raise ValueError(f"expected {p} coefficients, got {len(data)}")
        return cls(p, [CycNum.from_json(p, c) for c in data])

    def __repr__(self) -> str:
        terms = [f"({c})·x^{i}" for i, c in enumerate(self.coeffs) if not c.is_zero()]
        return f"CycPoly(p={self.p}, {' + '.join(terms) or '0'})"


def poly_mul(f: CycPoly, g: CycPoly) -> CycPoly:
    """循环卷积（x^p = 1）"""
    f._check(g)
    p = f.p
    out = [CycNum.zero(p)] * p
    for i, a in enumerate(f.coeffs):
        if a.is_zero():
            continue
        for j, b in enumerate(g.coeffs):
            if not b.is_zero():
                out[(i + j) % p] = out[(i + j) % p] + a * b
    return CycPoly(p, out)


def tau(f: CycPoly) -> CycPoly:
    """τ(x) = ρ^{-1}x：a_i ↦ a_i ρ^{-i}"""
    return CycPoly(f.p, [c.mul_rho_power(-i) for i, c in enumerate(f.coeffs)])


def tau_prime(f: CycPoly) -> CycPoly:
    """τ'(x) = ρx：a_i ↦ a_i ρ^{i}"""
    return CycPoly(f.p, [c.mul_rho_power(i) for i, c in enumerate(f.coeffs)])


def theta(f: CycPoly) -> List[CycNum]:
    """Θ(f) = (f(1), f(ρ), ..., f(ρ^{p-1}))"""
    p = f.p
    out = []
    for k in range(p):
        acc = CycNum.zero(p)
        for i, c in enumerate(f.coeffs):
            if not c.is_zero():
                acc = acc + c.mul_rho_power(i * k)
        out.append(acc)
    return out


def theta_inv(values: Sequence[CycNum]) -> CycPoly:
    """Θ 的逆：a_i = (1/p) Σ_k v_k ρ^{-ik}"""
    p = len(values)
    coeffs = []
    for i in range(p):
        acc = CycNum.zero(p)
        for k, v in enumerate(values):
            acc = acc + v.mul_rho_power(-i * k)
        coeffs.append(acc / p)
    return CycPoly(p, coeffs)


def ring_norm(f: CycPoly) -> CycNum:
    """n(f) = ∏_{i=0}^{p-1} τ^i(f)，结果必为常数"""
    prod = f
    g = f
    for _ in range(1, f.p):
        g = tau(g)
        prod = poly_mul(prod, g)
    if not prod.is_constant():
        raise InternalError(f"ring norm of {f!r} is not constant")
    return prod.coeffs[0]


def is_invertible(f: CycPoly) -> bool:
    return all(not v.is_zero() for v in theta(f))


def poly_inverse(f: CycPoly) -> CycPoly:
    """通过 Θ 逐分量求逆"""
    values = theta(f)
    if any(v.is_zero() for v in values):
        raise NotInvertible(f"{f!r} vanishes at a p-th root of unity")
    return theta_inv([v.inverse() for v in values])


def psi(g: CycPoly) -> CycPoly:
    """Ψ(g) = g / τ(g)"""
    return poly_mul(g, poly_inverse(tau(g)))


def psi_prime(g: CycPoly) -> CycPoly:
    """Ψ'(g) = g / τ'(g)"""
    return poly_mul(g, poly_inverse(tau_prime(g)))


def random_poly(p: int, rng: np.random.Generator, bound: int = 3,
                invertible: bool = False, integral: bool = False) -> CycPoly:
    """
    随机多项式

    Args:
        p: 素数
        rng: 随机数生成器
        bound: 系数坐标范围
        invertible: 拒绝 Θ 有零分量的样本
        integral: 系数取有理整数（维数证书用，控制位数增长）
    """
    while True:
        if integral:
            coeffs = [int(v) for v in rng.integers(-bound, bound + 1, size=p)]
            f = CycPoly(p, coeffs)
        else:
            f = CycPoly(p, [random_cyc(p, rng, bound) for _ in range(p)])
        if all(c.is_zero() for c in f.coeffs):
            continue
        if not invertible or is_invertible(f):
            return f
