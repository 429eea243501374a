"""异常定义

所有代数运算错误都继承自 SkewPairError（它本身是 ValueError），
调用方既可以按具体类型捕获，也可以统一捕获。
"""


class SkewPairError(ValueError):
    """库内所有错误的基类"""


class UnsupportedPrime(SkewPairError):
    """p 不是 3 到 13 之间的奇素数"""


class FieldMismatch(SkewPairError):
    """两个元素属于不同的分圆域 Q(ρ_p)"""


class ZeroInversion(SkewPairError):
    """对零元求逆"""


class BadExponent(SkewPairError):
    """Galois 指数 k ≡ 0 (mod p)"""


class InternalError(SkewPairError):
    """算术不变量被破坏（说明实现有bug）"""


class NotInvertible(SkewPairError):
    """K[x]/(x^p-1) 中的多项式不可逆"""


class Singular(SkewPairError):
    """矩阵奇异"""


class Inconsistent(SkewPairError):
    """线性方程组无解"""


class NoSolution(SkewPairError):
    """提升问题的线性系统无解"""


class DegeneratePair(SkewPairError):
    """α 的特征值 1 的特征空间不是一维的"""


class InvalidPair(SkewPairError):
    """不满足 αβ = ρβα（或 α^p = β^p = 1）"""


class ParamMismatch(SkewPairError):
    """两个符号代数元素的参数 (p, x, y) 不同"""


class SlotSingular(SkewPairError):
    """f(α) 在符号代数中不可逆"""


class NotScalar(SkewPairError):
    """期望为标量的元素不是标量"""


class FixtureError(SkewPairError):
    """JSON fixture 无法解析或格式不对"""


class ConfigError(SkewPairError):
    """配置文件无效"""
