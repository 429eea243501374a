"""K 上以及对偶数 K[ε]/(ε²) 上的精确稠密线性代数

矩阵用 numpy object 数组承载 CycNum，行变换直接用数组切片运算。
消元时在候选主元中选"最简单"的元素（非零坐标最少、分母最短），
以控制系数膨胀。
"""
from typing import Iterable, List, Optional, Sequence, Tuple

import numpy as np

from ..utils.exceptions import FieldMismatch, Inconsistent, NotScalar, Singular
from ..utils.logger import get_logger
from .cyclotomic import CycNum
from .cycpoly import CycPoly

logger = get_logger("linalg")


def _as_cyc(p: int, value) -> CycNum:
    if isinstance(value, CycNum):
        if value.p != p:
            raise FieldMismatch(f"entry over Q(ρ_{value.p}) in a p={p} matrix")
        return value
    return CycNum.from_rational(p, value)


def _object_array(p: int, rows: Sequence[Sequence]) -> np.ndarray:
    data = [[_as_cyc(p, v) for v in row] for row in rows]
    arr = np.empty((len(data), len(data[0]) if data else 0), dtype=object)
    for i, row in enumerate(data):
        for j, v in enumerate(row):
            arr[i, j] = v
    return arr


def _is_zero_vector(v: np.ndarray) -> bool:
    return all(x.is_zero() for x in v)


class Mat:
    """K 上的矩阵（不可变，行列下标从 0 开始）"""

    __slots__ = ("p", "_a")

    def __init__(self, p: int, entries):
        """
        Args:
            p: 奇素数
            entries: 二维序列或 numpy object 数组，元素为 CycNum / int / Fraction
        """
        if isinstance(entries, np.ndarray) and entries.dtype == object and entries.ndim == 2:
            arr = entries.copy()
            for idx, v in np.ndenumerate(arr):
                if not isinstance(v, CycNum):
                    arr[idx] = _as_cyc(p, v)
        else:
            arr = _object_array(p, entries)
        arr.setflags(write=False)
        object.__setattr__(self, "p", p)
        object.__setattr__(self, "_a", arr)

    def __setattr__(self, key, value):
        raise AttributeError("Mat is immutable")

    @classmethod
    def _wrap(cls, p: int, arr: np.ndarray) -> "Mat":
        obj = cls.__new__(cls)
        arr.setflags(write=False)
        object.__setattr__(obj, "p", p)
        object.__setattr__(obj, "_a", arr)
        return obj

    # ------------------------------------------------------------------
    # 构造
    # ------------------------------------------------------------------
    @classmethod
    def zeros(cls, p: int, rows: int, cols: Optional[int] = None) -> "Mat":
        cols = rows if cols is None else cols
        arr = np.empty((rows, cols), dtype=object)
        zero = CycNum.zero(p)
        arr.fill(zero)
        return cls._wrap(p, arr)

    @classmethod
    def identity(cls, p: int, n: Optional[int] = None) -> "Mat":
        n = p if n is None else n
        return cls.diag(p, [1] * n)

    @classmethod
    def diag(cls, p: int, values: Sequence) -> "Mat":
        n = len(values)
        arr = np.empty((n, n), dtype=object)
        arr.fill(CycNum.zero(p))
        for i, v in enumerate(values):
            arr[i, i] = _as_cyc(p, v)
        return cls._wrap(p, arr)

    @classmethod
    def column(cls, p: int, values: Sequence) -> "Mat":
        return cls(p, [[v] for v in values])

    @classmethod
    def from_columns(cls, p: int, columns: Sequence["Mat"]) -> "Mat":
        return cls._wrap(p, np.hstack([c._a for c in columns]))

    @classmethod
    def from_vector(cls, p: int, values: Sequence, rows: int) -> "Mat":
        """按行优先把长度 rows*cols 的向量还原成矩阵"""
        arr = np.array(list(values), dtype=object).reshape(rows, -1)
        return cls(p, arr)

    # ------------------------------------------------------------------
    # 访问
    # ------------------------------------------------------------------
    @property
    def shape(self) -> Tuple[int, int]:
        return self._a.shape

    @property
    def array(self) -> np.ndarray:
        """只读的底层 object 数组"""
        return self._a

    def __getitem__(self, idx):
        item = self._a[idx]
        if isinstance(item, np.ndarray):
            return Mat._wrap(self.p, item.reshape(1, -1) if item.ndim == 1 else item.copy())
        return item

    def col(self, j: int) -> "Mat":
        return Mat._wrap(self.p, self._a[:, j:j + 1].copy())

    def columns(self) -> List["Mat"]:
        return [self.col(j) for j in range(self.shape[1])]

    def vec(self) -> np.ndarray:
        """按行优先展平"""
        return self._a.reshape(-1).copy()

    def transpose(self) -> "Mat":
        return Mat._wrap(self.p, self._a.T.copy())

    @property
    def T(self) -> "Mat":
        return self.transpose()

    def is_zero(self) -> bool:
        return all(v.is_zero() for v in self._a.flat)

    def is_square(self) -> bool:
        return self.shape[0] == self.shape[1]

    def is_diagonal(self) -> bool:
        n, m = self.shape
        return all(self._a[i, j].is_zero() for i in range(n) for j in range(m) if i != j)

    def support(self, j: int) -> frozenset:
        """第 j 列的非零行下标"""
        return frozenset(i for i in range(self.shape[0]) if not self._a[i, j].is_zero())

    # ------------------------------------------------------------------
    # 算术
    # ------------------------------------------------------------------
    def _check(self, other: "Mat") -> None:
        if other.p != self.p:
            raise FieldMismatch(f"cannot combine p={self.p} and p={other.p} matrices")

    def __matmul__(self, other: "Mat") -> "Mat":
        self._check(other)
        if self.shape[1] != other.shape[0]:
            raise ValueError(f"shape mismatch {self.shape} @ {other.shape}")
        return Mat._wrap(self.p, mat_mul_array(self.p, self._a, other._a))

    def __add__(self, other: "Mat") -> "Mat":
        self._check(other)
        return Mat._wrap(self.p, self._a + other._a)

    def __sub__(self, other: "Mat") -> "Mat":
        self._check(other)
        return Mat._wrap(self.p, self._a - other._a)

    def __neg__(self) -> "Mat":
        return Mat._wrap(self.p, -self._a)

    def __mul__(self, scalar) -> "Mat":
        if isinstance(scalar, Mat):
            return NotImplemented
        return Mat._wrap(self.p, self._a * _as_cyc(self.p, scalar))

    __rmul__ = __mul__

    def __eq__(self, other) -> bool:
        if not isinstance(other, Mat):
            return NotImplemented
        return self.p == other.p and self.shape == other.shape and all(
            a == b for a, b in zip(self._a.flat, other._a.flat)
        )

    __hash__ = None

    def trace(self) -> CycNum:
        acc = CycNum.zero(self.p)
        for i in range(min(self.shape)):
            acc = acc + self._a[i, i]
        return acc

    def power(self, k: int) -> "Mat":
        if k < 0:
            return self.inv().power(-k)
        result = Mat.identity(self.p, self.shape[0])
        base = self
        while k:
            if k & 1:
                result = result @ base
            base = base @ base
            k >>= 1
        return result

    def inv(self) -> "Mat":
        return mat_inv(self)

    def det(self) -> CycNum:
        return det(self)

    def rank(self) -> int:
        return rank(self)

    def to_json(self) -> List[List[List[str]]]:
        return [[v.to_json() for v in row] for row in self._a]

    @classmethod
    def from_json(cls, p: int, data) -> "Mat":
        return cls(p, [[CycNum.from_json(p, v) for v in row] for row in data])

    def __repr__(self) -> str:
        return f"Mat(p={self.p}, shape={self.shape})"


def mat_mul_array(p: int, a: np.ndarray, b: np.ndarray) -> np.ndarray:
    """object 数组乘法，跳过零元素"""
    n, k = a.shape
    m = b.shape[1]
    zero = CycNum.zero(p)
    out = np.empty((n, m), dtype=object)
    for i in range(n):
        row = [(t, a[i, t]) for t in range(k) if not a[i, t].is_zero()]
        for j in range(m):
            acc = zero
            for t, x in row:
                y = b[t, j]
                if not y.is_zero():
                    acc = acc + x * y
            out[i, j] = acc
    return out


def mat_mul(a: Mat, b: Mat) -> Mat:
    return a @ b


# ----------------------------------------------------------------------
# 消元
# ----------------------------------------------------------------------
def _eliminate(arr: np.ndarray, pivot_limit: Optional[int] = None,
               full: bool = True) -> Tuple[np.ndarray, List[int], CycNum]:
    """
    高斯(-约当)消元

    Args:
        arr: object 数组（会被复制）
        pivot_limit: 只在前 pivot_limit 列中找主元（增广矩阵用）
        full: True 时消去主元上下两侧并把主元归一（RREF），False 时只做前向消元

    Returns:
        (消元结果, 主元列, 行列式因子 = ±主元之积)
    """
    a = arr.copy()
    rows, cols = a.shape
    limit = cols if pivot_limit is None else pivot_limit
    p = a[0, 0].p if a.size else 3
    factor = CycNum.one(p)
    pivots: List[int] = []
    r = 0
    for c in range(limit):
        if r == rows:
            break
        candidates = [i for i in range(r, rows) if not a[i, c].is_zero()]
        if not candidates:
            continue
        best = min(candidates, key=lambda i: a[i, c].weight())
        if best != r:
            a[[r, best]] = a[[best, r]]
            factor = -factor
        piv = a[r, c]
        factor = factor * piv
        if full:
            a[r, c:] = a[r, c:] * piv.inverse()
            targets = range(rows)
        else:
            targets = range(r + 1, rows)
        inv_piv = None if full else piv.inverse()
        for i in targets:
            if i == r or a[i, c].is_zero():
                continue
            m = a[i, c] if full else a[i, c] * inv_piv
            a[i, c:] = a[i, c:] - m * a[r, c:]
        pivots.append(c)
        r += 1
    return a, pivots, factor


def rref(m: Mat) -> Tuple[Mat, List[int]]:
    """最简行阶梯形及主元列"""
    if m.shape[0] == 0:
        return m, []
    a, pivots, _ = _eliminate(m.array)
    return Mat._wrap(m.p, a), pivots


def rank(m: Mat) -> int:
    if m.shape[0] == 0 or m.shape[1] == 0:
        return 0
    _, pivots, _ = _eliminate(m.array, full=False)
    return len(pivots)


def det(m: Mat) -> CycNum:
    if not m.is_square():
        raise ValueError(f"det of non-square matrix {m.shape}")
    _, pivots, factor = _eliminate(m.array, full=False)
    if len(pivots) < m.shape[0]:
        return CycNum.zero(m.p)
    return factor


def mat_inv(m: Mat) -> Mat:
    """逆矩阵，奇异时抛出 Singular"""
    if not m.is_square():
        raise Singular(f"non-square matrix {m.shape} has no inverse")
    n = m.shape[0]
    aug = np.hstack([m.array, Mat.identity(m.p, n).array])
    a, pivots, _ = _eliminate(aug, pivot_limit=n)
    if len(pivots) < n:
        raise Singular(f"matrix of shape {m.shape} is singular (rank {len(pivots)})")
    return Mat._wrap(m.p, a[:, n:].copy())


def kernel(m: Mat) -> List[Mat]:
    """零空间的一组基（列向量），自由变量逐个置 1"""
    rows, cols = m.shape
    reduced, pivots = rref(m)
    a = reduced.array
    free = [j for j in range(cols) if j not in pivots]
    basis = []
    for f in free:
        values = [CycNum.zero(m.p)] * cols
        values[f] = CycNum.one(m.p)
        for k, c in enumerate(pivots):
            values[c] = -a[k, f]
        basis.append(Mat.column(m.p, values))
    return basis


class LinearSolver:
    """对同一个系数矩阵反复求解 Mx = b"""

    def __init__(self, m: Mat):
        """
        Args:
            m: 系数矩阵（任意形状）
        """
        self.p = m.p
        self.rows, self.cols = m.shape
        aug = np.hstack([m.array, Mat.identity(m.p, self.rows).array])
        a, self.pivots, _ = _eliminate(aug, pivot_limit=self.cols)
        self._reduced = a[:, : self.cols]
        self._transform = a[:, self.cols:]
        self.rank = len(self.pivots)
        logger.debug(f"LinearSolver initialized: shape=({self.rows}, {self.cols}), rank={self.rank}")

    def solve(self, b: Mat) -> Mat:
        """
        求一个特解（自由变量取 0）

        Args:
            b: 右端列向量

        Returns:
            解向量（列）
        """
        if b.shape != (self.rows, 1):
            raise ValueError(f"right-hand side must have shape ({self.rows}, 1), got {b.shape}")
        y = mat_mul_array(self.p, self._transform, b.array)
        for k in range(self.rank, self.rows):
            if not y[k, 0].is_zero():
                raise Inconsistent("linear system has no solution")
        values = [CycNum.zero(self.p)] * self.cols
        for k, c in enumerate(self.pivots):
            values[c] = y[k, 0]
        return Mat.column(self.p, values)


def solve(m: Mat, b: Mat) -> Mat:
    return LinearSolver(m).solve(b)


# ----------------------------------------------------------------------
# 特征多项式 / 特征空间
# ----------------------------------------------------------------------
def charpoly(m: Mat) -> List[CycNum]:
    """
    Faddeev-LeVerrier 递推求特征多项式

    Returns:
        升幂系数 [c_0, c_1, ..., c_n]，c_n = 1
    """
    if not m.is_square():
        raise ValueError(f"charpoly of non-square matrix {m.shape}")
    n = m.shape[0]
    p = m.p
    coeffs = [CycNum.zero(p)] * (n + 1)
    coeffs[n] = CycNum.one(p)
    ident = Mat.identity(p, n)
    mk = Mat.zeros(p, n)
    for k in range(1, n + 1):
        mk = m @ mk + ident * coeffs[n - k + 1]
        coeffs[n - k] = -(m @ mk).trace() / k
    return coeffs


def poly_at_matrix(f, m: Mat) -> Mat:
    """
    Horner 法计算 f(m)

    Args:
        f: CycPoly 或升幂系数列表
        m: 方阵
    """
    coeffs = f.coeffs if isinstance(f, CycPoly) else list(f)
    n = m.shape[0]
    acc = Mat.zeros(m.p, n)
    ident = Mat.identity(m.p, n)
    for c in reversed(coeffs):
        acc = acc @ m + ident * c
    return acc


def eigenspace(m: Mat, lam: CycNum) -> List[Mat]:
    """m 关于特征值 lam 的特征空间基"""
    return kernel(m - Mat.identity(m.p, m.shape[0]) * lam)


def scalar_value(m: Mat) -> CycNum:
    """m = c·I 时返回 c，否则抛出 NotScalar"""
    c = m.array[0, 0]
    if not m.is_diagonal() or any(m.array[i, i] != c for i in range(m.shape[0])):
        raise NotScalar("matrix is not a scalar multiple of the identity")
    return c


class SpanBasis:
    """增量维护的行阶梯基，用于张成空间维数"""

    def __init__(self, p: int, dim: int):
        self.p = p
        self.dim = dim
        self._rows: List[Tuple[int, np.ndarray]] = []

    def __len__(self) -> int:
        return len(self._rows)

    def reduce(self, vector: Iterable[CycNum]) -> np.ndarray:
        v = np.array(list(vector), dtype=object)
        for col, row in self._rows:
            if not v[col].is_zero():
                v = v - v[col] * row
        return v

    def add(self, vector: Iterable[CycNum]) -> bool:
        """加入向量，线性无关时返回 True"""
        v = self.reduce(vector)
        for j, x in enumerate(v):
            if not x.is_zero():
                self._rows.append((j, v * x.inverse()))
                return True
        return False

    def is_full(self) -> bool:
        return len(self._rows) >= self.dim


# ----------------------------------------------------------------------
# 对偶数矩阵
# ----------------------------------------------------------------------
class DualMat:
    """body + ε·slope，ε² = 0"""

    __slots__ = ("body", "slope")

    def __init__(self, body: Mat, slope: Optional[Mat] = None):
        if slope is None:
            slope = Mat.zeros(body.p, *body.shape)
        if body.shape != slope.shape:
            raise ValueError(f"body {body.shape} and slope {slope.shape} differ in shape")
        object.__setattr__(self, "body", body)
        object.__setattr__(self, "slope", slope)

    def __setattr__(self, key, value):
        raise AttributeError("DualMat is immutable")

    @property
    def p(self) -> int:
        return self.body.p

    @classmethod
    def identity(cls, p: int, n: Optional[int] = None) -> "DualMat":
        return cls(Mat.identity(p, n))

    def __matmul__(self, other: "DualMat") -> "DualMat":
        return dual_mul(self, other)

    def __add__(self, other: "DualMat") -> "DualMat":
        return DualMat(self.body + other.body, self.slope + other.slope)

    def __sub__(self, other: "DualMat") -> "DualMat":
        return DualMat(self.body - other.body, self.slope - other.slope)

    def __mul__(self, scalar) -> "DualMat":
        return DualMat(self.body * scalar, self.slope * scalar)

    __rmul__ = __mul__

    def __eq__(self, other) -> bool:
        if not isinstance(other, DualMat):
            return NotImplemented
        return self.body == other.body and self.slope == other.slope

    __hash__ = None

    def inv(self) -> "DualMat":
        return dual_inv(self)

    def power(self, k: int) -> "DualMat":
        if k < 0:
            return self.inv().power(-k)
        result = DualMat.identity(self.p, self.body.shape[0])
        for _ in range(k):
            result = result @ self
        return result

    def to_json(self) -> dict:
        return {"body": self.body.to_json(), "slope": self.slope.to_json()}

    @classmethod
    def from_json(cls, p: int, data: dict) -> "DualMat":
        return cls(Mat.from_json(p, data["body"]), Mat.from_json(p, data["slope"]))

    def __repr__(self) -> str:
        return f"DualMat(p={self.p}, shape={self.body.shape})"


def dual_mul(a: DualMat, b: DualMat) -> DualMat:
    """(A + εB)(C + εD) = AC + ε(AD + BC)"""
    return DualMat(a.body @ b.body, a.body @ b.slope + a.slope @ b.body)


def dual_inv(m: DualMat) -> DualMat:
    """(A + εB)^{-1} = A^{-1} - εA^{-1}BA^{-1}"""
    inv_body = mat_inv(m.body)
    return DualMat(inv_body, -(inv_body @ m.slope @ inv_body))
