"""分圆域 K = Q(ρ_p) 的精确算术

元素表示为 Q[t]/Φ_p(t) 中次数 ≤ p-2 的多项式，系数用
整数分子 + 公共正分母存储（约分到最简）。p ≤ 13，稠密表示即可。
"""
from fractions import Fraction
from math import gcd
from typing import Iterable, List, Sequence, Tuple, Union

import numpy as np

from ..utils.exceptions import BadExponent, FieldMismatch, InternalError, ZeroInversion
from ..utils.sampling import small_ints
from ..utils.validators import PrimeValidator

Rational = Union[int, Fraction]


def _lcm(a: int, b: int) -> int:
    return a // gcd(a, b) * b


def _reduce(p: int, raw: Sequence[int]) -> List[int]:
    """把任意长度的整数系数向量约化到 1, ρ, ..., ρ^{p-2} 基上"""
    folded = [0] * p
    for k, c in enumerate(raw):
        if c:
            folded[k % p] += c
    top = folded[p - 1]
    if top:
        return [c - top for c in folded[: p - 1]]
    return folded[: p - 1]


class CycNum:
    """Q(ρ_p) 中的元素（不可变）"""

    __slots__ = ("p", "_num", "_den")

    def __init__(self, p: int, coeffs: Iterable[Rational] = ()):
        """
        Args:
            p: 奇素数
            coeffs: ρ 的幂次系数，长度任意（自动按 ρ^p = 1 和 Φ_p 约化）
        """
        PrimeValidator.validate(p)
        coeffs = list(coeffs)
        if any(isinstance(c, (float, np.floating)) for c in coeffs):
            raise TypeError("CycNum coordinates must be int or Fraction, not float")
        values = [Fraction(c) for c in coeffs]
        den = 1
        for v in values:
            den = _lcm(den, v.denominator)
        nums = _reduce(p, [int(v * den) for v in values])
        self._set(p, nums, den)

    def _set(self, p: int, nums: List[int], den: int) -> None:
        g = den
        for n in nums:
            if n:
                g = gcd(g, n)
        if all(n == 0 for n in nums):
            g, den = 1, 1
        object.__setattr__(self, "p", p)
        object.__setattr__(self, "_num", tuple(n // g for n in nums))
        object.__setattr__(self, "_den", den // g)

    @classmethod
    def _raw(cls, p: int, nums: Sequence[int], den: int) -> "CycNum":
        """内部构造：nums 已约化到长度 p-1"""
        obj = cls.__new__(cls)
        if den < 0:
            nums, den = [-n for n in nums], -den
        obj._set(p, list(nums), den)
        return obj

    def __setattr__(self, key, value):
        raise AttributeError("CycNum is immutable")

    # ------------------------------------------------------------------
    # 构造
    # ------------------------------------------------------------------
    @classmethod
    def zero(cls, p: int) -> "CycNum":
        return cls._raw(p, [0] * (p - 1), 1)

    @classmethod
    def one(cls, p: int) -> "CycNum":
        return cls.from_rational(p, 1)

    @classmethod
    def from_rational(cls, p: int, q: Rational) -> "CycNum":
        if isinstance(q, (float, np.floating)):
            raise TypeError("rational constants must be int or Fraction, not float")
        q = Fraction(q)
        PrimeValidator.validate(p)
        return cls._raw(p, [q.numerator] + [0] * (p - 2), q.denominator)

    @classmethod
    def rho(cls, p: int, k: int = 1) -> "CycNum":
        """ρ^k"""
        PrimeValidator.validate(p)
        raw = [0] * p
        raw[k % p] = 1
        return cls._raw(p, _reduce(p, raw), 1)

    # ------------------------------------------------------------------
    # 访问
    # ------------------------------------------------------------------
    @property
    def coeffs(self) -> Tuple[Fraction, ...]:
        """1, ρ, ..., ρ^{p-2} 上的有理坐标"""
        return tuple(Fraction(n, self._den) for n in self._num)

    def is_zero(self) -> bool:
        return not any(self._num)

    def __bool__(self) -> bool:
        return not self.is_zero()

    def is_rational(self) -> bool:
        return not any(self._num[1:])

    def rational_value(self) -> Fraction:
        if not self.is_rational():
            raise InternalError(f"{self!r} is not rational")
        return Fraction(self._num[0], self._den)

    def weight(self) -> int:
        """非零坐标个数加上分母位数，用作主元选择的代价"""
        return sum(1 for n in self._num if n) + self._den.bit_length()

    # ------------------------------------------------------------------
    # 算术
    # ------------------------------------------------------------------
    def _coerce(self, other) -> "CycNum":
        if isinstance(other, CycNum):
            if other.p != self.p:
                raise FieldMismatch(f"cannot combine elements of Q(ρ_{self.p}) and Q(ρ_{other.p})")
            return other
        if isinstance(other, (int, Fraction)) and not isinstance(other, bool):
            return CycNum.from_rational(self.p, other)
        if isinstance(other, (np.integer,)):
            return CycNum.from_rational(self.p, int(other))
        return NotImplemented

    def __add__(self, other):
        other = self._coerce(other)
        if other is NotImplemented:
            return NotImplemented
        den = _lcm(self._den, other._den)
        fa, fb = den // self._den, den // other._den
        return CycNum._raw(self.p, [a * fa + b * fb for a, b in zip(self._num, other._num)], den)

    __radd__ = __add__

    def __neg__(self) -> "CycNum":
        return CycNum._raw(self.p, [-n for n in self._num], self._den)

    def __sub__(self, other):
        other = self._coerce(other)
        if other is NotImplemented:
            return NotImplemented
        return self + (-other)

    def __rsub__(self, other):
        other = self._coerce(other)
        if other is NotImplemented:
            return NotImplemented
        return other + (-self)

    def __mul__(self, other):
        other = self._coerce(other)
        if other is NotImplemented:
            return NotImplemented
        if self.is_zero() or other.is_zero():
            return CycNum.zero(self.p)
        a, b = self._num, other._num
        raw = [0] * (2 * len(a) - 1)
        for i, x in enumerate(a):
            if x:
                for j, y in enumerate(b):
                    if y:
                        raw[i + j] += x * y
        return CycNum._raw(self.p, _reduce(self.p, raw), self._den * other._den)

    __rmul__ = __mul__

    def __truediv__(self, other):
        other = self._coerce(other)
        if other is NotImplemented:
            return NotImplemented
        return self * other.inverse()

    def __rtruediv__(self, other):
        other = self._coerce(other)
        if other is NotImplemented:
            return NotImplemented
        return other * self.inverse()

    def __pow__(self, k: int) -> "CycNum":
        if k < 0:
            return self.inverse() ** (-k)
        result = CycNum.one(self.p)
        base = self
        while k:
            if k & 1:
                result = result * base
            base = base * base
            k >>= 1
        return result

    def mul_rho_power(self, k: int) -> "CycNum":
        """乘以 ρ^k（系数循环移位）"""
        p = self.p
        full = list(self._num) + [0]
        raw = [0] * p
        for i, c in enumerate(full):
            raw[(i + k) % p] = c
        return CycNum._raw(p, _reduce(p, raw), self._den)

    def conj(self, k: int) -> "CycNum":
        """Galois 共轭 ρ ↦ ρ^k"""
        p = self.p
        if k % p == 0:
            raise BadExponent(f"Galois exponent must be prime to p={p}, got {k}")
        raw = [0] * p
        for i, c in enumerate(self._num):
            raw[(i * k) % p] += c
        return CycNum._raw(p, _reduce(p, raw), self._den)

    def norm(self) -> Fraction:
        """域范数 N_{K/Q}"""
        if self.is_zero():
            return Fraction(0)
        prod = self
        for k in range(2, self.p):
            prod = prod * self.conj(k)
        if not prod.is_rational():
            raise InternalError(f"norm of {self!r} is not rational")
        return prod.rational_value()

    def inverse(self) -> "CycNum":
        """乘法逆：其余共轭之积除以范数"""
        if self.is_zero():
            raise ZeroInversion(f"cannot invert zero in Q(ρ_{self.p})")
        if self.is_rational():
            return CycNum.from_rational(self.p, 1 / self.rational_value())
        adj = CycNum.one(self.p)
        for k in range(2, self.p):
            adj = adj * self.conj(k)
        n = (self * adj).rational_value()
        return CycNum._raw(self.p, [c * n.denominator for c in adj._num], adj._den * n.numerator)

    # ------------------------------------------------------------------
    # 比较 / 序列化
    # ------------------------------------------------------------------
    def __eq__(self, other) -> bool:
        if isinstance(other, CycNum):
            return self.p == other.p and self._num == other._num and self._den == other._den
        if isinstance(other, (int, Fraction)) and not isinstance(other, bool):
            return self.is_rational() and self.rational_value() == other
        return NotImplemented

    def __ne__(self, other) -> bool:
        eq = self.__eq__(other)
        return eq if eq is NotImplemented else not eq

    def __hash__(self) -> int:
        # 与相等的 int / Fraction 同哈希
        if self.is_rational():
            return hash(self.rational_value())
        return hash((self.p, self._num, self._den))

    def to_json(self) -> List[str]:
        """长度 p-1 的 "分子/分母" 字符串数组"""
        return [f"{c.numerator}/{c.denominator}" for c in self.coeffs]

    @classmethod
    def from_json(cls, p: int, data: Sequence[str]) -> "CycNum":
        if len(data) != p - 1:
            raise ValueError(f"expected {p - 1} coordinates, got {len(data)}")
        return cls(p, [Fraction(str(s)) for s in data])

    def __repr__(self) -> str:
        terms = []
        for i, c in enumerate(self.coeffs):
            if c:
                terms.append(str(c) if i == 0 else f"{c}*ρ^{i}")
        return f"CycNum(p={self.p}, {' + '.join(terms) or '0'})"


# ----------------------------------------------------------------------
# 函数式接口
# ----------------------------------------------------------------------
def cyc_add(a: CycNum, b: CycNum) -> CycNum:
    return a + b


def cyc_sub(a: CycNum, b: CycNum) -> CycNum:
    return a - b


def cyc_neg(a: CycNum) -> CycNum:
    return -a


def cyc_mul(a: CycNum, b: CycNum) -> CycNum:
    return a * b


def cyc_inv(a: CycNum) -> CycNum:
    return a.inverse()


def cyc_conj(a: CycNum, k: int) -> CycNum:
    return a.conj(k)


def cyc_norm(a: CycNum) -> Fraction:
    return a.norm()


def random_cyc(p: int, rng: np.random.Generator, bound: int = 3, nonzero: bool = False) -> CycNum:
    """
    随机元素，坐标为 [-bound, bound] 的整数

    Args:
        p: 素数
        rng: numpy 随机数生成器
        bound: 坐标范围
        nonzero: 是否拒绝零元
    """
    while True:
        value = CycNum(p, small_ints(rng, p - 1, bound))
        if not (nonzero and value.is_zero()):
            return value
