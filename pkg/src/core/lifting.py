"""平方零提升、特征多项式坍缩与 R_1 矩阵

对 α' = α₀(1 + εx)、β' = β₀(1 + εy) 展开 α'β' - ρβ'α'，
ε 部分为 z + ab·L(x, y)，其中 a, b 为主体，
L(x, y) = b^{-1}xb - x + y - a^{-1}ya。
于是提升等价于线性方程 L(x, y) = -(ab)^{-1}z。
"""
from typing import Dict, List, Optional, Sequence, Tuple

import numpy as np

from ..algebra.cyclotomic import CycNum, random_cyc
from ..algebra.linalg import (
    DualMat,
    LinearSolver,
    Mat,
    charpoly,
    det,
    mat_inv,
    scalar_value,
)
from ..models.lift import LiftProblem
from ..models.pair import SkewPair
from ..utils.exceptions import Inconsistent, InternalError, InvalidPair, NoSolution
from ..utils.logger import get_logger

logger = get_logger("lifting")


def _unit(p: int, n: int, a: int, b: int) -> Mat:
    return Mat(p, [[1 if (i, j) == (a, b) else 0 for j in range(n)] for i in range(n)])


def phi_adjust_map(q: SkewPair) -> Mat:
    """
    L(x, y) = β^{-1}xβ - x + y - α^{-1}yα 的矩阵（n² × 2n²）

    前 n² 列对应 x 的矩阵单位 E_ab（行优先），后 n² 列对应 y。
    """
    p = q.p
    n = q.alpha.shape[0]
    a, b = q.alpha, q.beta
    a_inv, b_inv = mat_inv(a), mat_inv(b)
    columns = []
    for i in range(n):
        for j in range(n):
            e = _unit(p, n, i, j)
            columns.append(Mat.column(p, list((b_inv @ e @ b - e).vec())))
    for i in range(n):
        for j in range(n):
            e = _unit(p, n, i, j)
            columns.append(Mat.column(p, list((e - a_inv @ e @ a).vec())))
    return Mat.from_columns(p, columns)


def apply_adjust(q: SkewPair, x: Mat, y: Mat) -> Mat:
    """直接计算 L(x, y)"""
    a, b = q.alpha, q.beta
    return mat_inv(b) @ x @ b - x + y - mat_inv(a) @ y @ a


class PhiAdjustSolver:
    """同一组主体 (a, b) 上反复求解 L(x, y) = rhs"""

    def __init__(self, q: SkewPair):
        """
        Args:
            q: 主体构成的斜交换对
        """
        self.q = q
        self.n = q.alpha.shape[0]
        self.matrix = phi_adjust_map(q)
        self._solver = LinearSolver(self.matrix)
        logger.debug(f"PhiAdjustSolver initialized: p={q.p}, rank={self._solver.rank}")

    @property
    def rank(self) -> int:
        return self._solver.rank

    def solve(self, rhs: Mat) -> Tuple[Mat, Mat]:
        """
        Args:
            rhs: n×n 矩阵

        Returns:
            (x, y)
        """
        p, n = self.q.p, self.n
        try:
            sol = self._solver.solve(Mat.column(p, list(rhs.vec())))
        except Inconsistent as e:
            raise NoSolution("no (x, y) with L(x, y) = rhs; rhs must be trace zero") from e
        values = [sol.array[k, 0] for k in range(2 * n * n)]
        return Mat.from_vector(p, values[: n * n], n), Mat.from_vector(p, values[n * n:], n)


def normalized_defect(prob: LiftProblem) -> Mat:
    """ẑ = (ab)^{-1}z，提升方程的右端为 -ẑ"""
    a, b = prob.alpha0.body, prob.beta0.body
    return mat_inv(a @ b) @ prob.defect()


def lift_skew_pair(prob: LiftProblem, solver: PhiAdjustSolver = None) -> Tuple[DualMat, DualMat]:
    """
    求 α' = α₀(1 + εx), β' = β₀(1 + εy) 使 α'β' = ρβ'α'（模 ε²）

    Args:
        prob: 提升问题
        solver: 可复用的 PhiAdjustSolver（主体相同的问题共用）

    Returns:
        (α', β')
    """
    p = prob.p
    z_hat = normalized_defect(prob)
    if not z_hat.trace().is_zero():
        raise NoSolution("normalized defect (ab)^{-1}z is not trace zero")
    if z_hat.is_zero():
        return prob.alpha0, prob.beta0

    if solver is None:
        solver = PhiAdjustSolver(SkewPair(prob.alpha0.body, prob.beta0.body))
    x, y = solver.solve(-z_hat)

    n = prob.alpha0.body.shape[0]
    one = DualMat.identity(p, n)
    alpha1 = prob.alpha0 @ (one + DualMat(Mat.zeros(p, n), x))
    beta1 = prob.beta0 @ (one + DualMat(Mat.zeros(p, n), y))

    residual = alpha1 @ beta1 - (beta1 @ alpha1) * CycNum.rho(p)
    if not (residual.body.is_zero() and residual.slope.is_zero()):
        raise InternalError("lifted pair does not skew-commute")
    return alpha1, beta1


def _unit_correction(m: DualMat) -> DualMat:
    """m^p = I + εs（s 为标量）时返回 m·(I - εs/p)"""
    p = m.p
    power = m.power(p)
    n = m.body.shape[0]
    if power.body != Mat.identity(p, n):
        raise InvalidPair("body p-th power is not the identity")
    s = scalar_value(power.slope)
    return m @ DualMat(Mat.identity(p, n), Mat.identity(p, n) * (-s / p))


def lift_unit_pair(prob: LiftProblem, solver: PhiAdjustSolver = None) -> Tuple[DualMat, DualMat]:
    """
    单位对的提升：先做斜交换提升，再把 p 次幂修正为单位

    Returns:
        (α'', β'')，满足斜交换关系且 p 次幂为 I
    """
    p = prob.p
    ident = Mat.identity(p, prob.alpha0.body.shape[0])
    if prob.alpha0.body.power(p) != ident or prob.beta0.body.power(p) != ident:
        raise InvalidPair("unit lifting requires α^p = β^p = I on the bodies")
    alpha1, beta1 = lift_skew_pair(prob, solver)
    return _unit_correction(alpha1), _unit_correction(beta1)


def is_skew_dual(alpha: DualMat, beta: DualMat) -> bool:
    res = alpha @ beta - (beta @ alpha) * CycNum.rho(alpha.p)
    return res.body.is_zero() and res.slope.is_zero()


def is_unit_dual(m: DualMat) -> bool:
    return m.power(m.p) == DualMat.identity(m.p, m.body.shape[0])


def perturbation_problem(q: SkewPair, rng: np.random.Generator, bound: int = 3) -> LiftProblem:
    """在主体 q 上加随机 ε 扰动"""
    p = q.p
    n = q.alpha.shape[0]

    def rand_mat() -> Mat:
        return Mat(p, [[random_cyc(p, rng, bound) for _ in range(n)] for _ in range(n)])

    return LiftProblem(DualMat(q.alpha, rand_mat()), DualMat(q.beta, rand_mat()))


def conjugate_problem(prob: LiftProblem, g: Mat) -> LiftProblem:
    """(gα₀g^{-1}, gβ₀g^{-1})，g 为 K 上可逆矩阵"""
    g_dual, g_inv = DualMat(g), DualMat(mat_inv(g))
    return LiftProblem(g_dual @ prob.alpha0 @ g_inv, g_dual @ prob.beta0 @ g_inv)


def naturality_check(prob: LiftProblem, g: Mat) -> Dict[str, object]:
    """
    共轭后提升再共轭回来，与直接提升只差 ker L 中的元素

    记直接提升为 α₀(1 + εx)、β₀(1 + εy)，共轭回来的提升为 α₀(1 + εx̃)、β₀(1 + εỹ)，
    要求主体不变且 L(x̃ - x, ỹ - y) = 0。

    Args:
        prob: 提升问题
        g: 可逆共轭矩阵

    Returns:
        {"bodies_fixed": bool, "skew": bool, "difference_in_kernel": bool}
    """
    a, b = prob.alpha0.body, prob.beta0.body
    direct_a, direct_b = lift_skew_pair(prob)
    moved_a, moved_b = lift_skew_pair(conjugate_problem(prob, g))
    g_dual, g_inv = DualMat(g), DualMat(mat_inv(g))
    back_a, back_b = g_inv @ moved_a @ g_dual, g_inv @ moved_b @ g_dual

    bodies_fixed = back_a.body == a and back_b.body == b
    # α₀(1 + εx) 的 ε 部分为 α₀.slope + a·x
    dx = mat_inv(a) @ (back_a.slope - direct_a.slope)
    dy = mat_inv(b) @ (back_b.slope - direct_b.slope)
    in_kernel = apply_adjust(SkewPair(a, b), dx, dy).is_zero()
    return {
        "bodies_fixed": bodies_fixed,
        "skew": is_skew_dual(back_a, back_b),
        "difference_in_kernel": in_kernel,
    }


# ----------------------------------------------------------------------
# 特征多项式坍缩 / R_1
# ----------------------------------------------------------------------
def charpoly_collapse_check(q: SkewPair) -> Dict[str, object]:
    """
    charpoly(α) = t^p - c，c 为标量 α^p，中间系数全为 0；β 同理

    Returns:
        {"alpha": bool, "beta": bool, "alpha_power": json, "beta_power": json}
    """
    report: Dict[str, object] = {}
    for name, m in (("alpha", q.alpha), ("beta", q.beta)):
        p = m.p
        coeffs = charpoly(m)
        c = scalar_value(m.power(p))
        ok = len(coeffs) == p + 1 and coeffs[0] == -c and all(v.is_zero() for v in coeffs[1:p])
        report[name] = ok
        report[f"{name}_power"] = c.to_json()
    return report


def r1_matrix(p: int) -> Mat:
    """R_1 = (ρ^{ij} - 1)，i, j = 1..p-1"""
    return Mat(p, [[CycNum.rho(p, i * j) - 1 for j in range(1, p)] for i in range(1, p)])


def r1_determinant(p: int) -> CycNum:
    return det(r1_matrix(p))


def trace_zero_image_check(q: SkewPair) -> Dict[str, object]:
    """
    L 的像恰为迹零子空间：秩 n² - 1，且每一列迹为 0

    Returns:
        {"rank": int, "expected": int, "columns_trace_zero": bool}
    """
    n = q.alpha.shape[0]
    m = phi_adjust_map(q)
    diag_idx: List[int] = [i * n + i for i in range(n)]
    columns_trace_zero = all(
        sum((m.array[k, col] for k in diag_idx), CycNum.zero(q.p)).is_zero()
        for col in range(m.shape[1])
    )
    return {"rank": m.rank(), "expected": n * n - 1, "columns_trace_zero": columns_trace_zero}


# ----------------------------------------------------------------------
# K[ε]/(ε^n) 上逐阶提升
# ----------------------------------------------------------------------
def truncated_mul(a: Sequence[Mat], b: Sequence[Mat]) -> List[Mat]:
    """ε 的幂级数矩阵乘法，截断到 len(a) 项"""
    n = len(a)
    out = []
    for k in range(n):
        acc = a[0] @ b[k]
        for i in range(1, k + 1):
            acc = acc + a[i] @ b[k - i]
        out.append(acc)
    return out


def truncated_defect(alpha: Sequence[Mat], beta: Sequence[Mat]) -> List[Mat]:
    """αβ - ρβα 的各阶系数"""
    rho = CycNum.rho(alpha[0].p)
    ab, ba = truncated_mul(alpha, beta), truncated_mul(beta, alpha)
    return [x - y * rho for x, y in zip(ab, ba)]


def lift_truncated(alpha: Sequence[Mat], beta: Sequence[Mat],
                   solver: Optional[PhiAdjustSolver] = None) -> Tuple[List[Mat], List[Mat]]:
    """
    把 K[ε]/(ε^n) 上的近似对逐阶修正为斜交换对

    第 k 阶用 α(1 + ε^k x)、β(1 + ε^k y) 消去 ε^k 系数，
    k ≥ 1 时交叉项落在 ε^{2k} 之后，因此每一阶都是同一个线性方程组。

    Args:
        alpha: α 的系数 [α_0, α_1, ..., α_{n-1}]
        beta: β 的系数，长度与 alpha 相同
        solver: 主体上的 PhiAdjustSolver

    Returns:
        修正后的 (α, β) 系数列表
    """
    if len(alpha) != len(beta) or not alpha:
        raise ValueError("alpha and beta need the same positive number of terms")
    a, b = alpha[0], beta[0]
    if a @ b != (b @ a) * CycNum.rho(a.p):
        raise InvalidPair("bodies do not satisfy αβ = ρβα")
    p, n = a.p, len(alpha)
    size = a.shape[0]
    alpha, beta = list(alpha), list(beta)
    ab_inv = mat_inv(a @ b)

    for k in range(1, n):
        z = truncated_defect(alpha, beta)[k]
        if z.is_zero():
            continue
        if solver is None:
            solver = PhiAdjustSolver(SkewPair(a, b))
        x, y = solver.solve(-(ab_inv @ z))
        step_x = [Mat.identity(p, size)] + [Mat.zeros(p, size)] * (n - 1)
        step_y = list(step_x)
        step_x[k], step_y[k] = x, y
        alpha, beta = truncated_mul(alpha, step_x), truncated_mul(beta, step_y)
        logger.debug(f"order {k} corrected")

    if any(not m.is_zero() for m in truncated_defect(alpha, beta)):
        raise InternalError("truncated lift does not skew-commute")
    return alpha, beta
