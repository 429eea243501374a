"""滤链 B_2 ⊂ ... ⊂ B_{p+1}：轨道点与 Jacobian 秩证书"""
from typing import Dict, List, Optional, Sequence, Tuple

import numpy as np

from ..algebra.cyclotomic import CycNum
from ..algebra.cycpoly import CycPoly, is_invertible, random_poly, tau, theta
from ..algebra.linalg import LinearSolver, Mat, SpanBasis, mat_inv, poly_at_matrix
from ..models.certificate import DimCertificate, OrbitSpec
from ..models.pair import Basis, UnitSkewPair, projective_normal
from ..utils.exceptions import Inconsistent, NoSolution, NotInvertible
from ..utils.logger import get_logger
from ..utils.sampling import make_rng
from .pairs import (
    diag_rho_matrix,
    s_matrix,
    s_matrix_from_eigenvalues,
    shift_matrix,
    shift_vector,
    sigma_matrix,
    t_matrix,
    t_matrix_of,
)

logger = get_logger("filtration")


def factor_matrix(kind: str, g: CycPoly) -> Mat:
    """第 k 个环面因子：T 为 T_{Θ(g)}，S 为循环矩阵 S_g"""
    if not is_invertible(g):
        raise NotInvertible(f"orbit parameter {g!r} is not invertible")
    return t_matrix_of(g) if kind == "T" else s_matrix(g)


def orbit_point(spec: OrbitSpec, params: Sequence[CycPoly]) -> Basis:
    """
    A·T_{Θ(g_1)}·S_{g_2}·T_{Θ(g_3)}·...

    Args:
        spec: 轨道描述
        params: spec.depth 个可逆多项式

    Returns:
        𝓑 中的点
    """
    if len(params) != spec.depth:
        raise ValueError(f"expected {spec.depth} parameters, got {len(params)}")
    m = spec.base.matrix
    for kind, g in zip(spec.pattern, params):
        m = m @ factor_matrix(kind, g)
    return Basis(m)


def jacobian_rank(base: Basis, kinds: Sequence[str], params: Sequence[CycPoly]) -> int:
    """
    轨道映射在参数点处的 Jacobian 秩（射影意义）

    每个因子对系数线性，第 m 个坐标方向的偏导是 D^m（T）或 P^m（S）。
    偏导左平移到单位元：N_k^{-1} M_k^{-1} E_m N_k，其中 N_k = M_{k+1}...M_i。
    加入单位阵吸收整体缩放后，返回张成维数减 1。
    """
    p = base.p
    factors = [factor_matrix(kind, g) for kind, g in zip(kinds, params)]
    d, shift = diag_rho_matrix(p), shift_matrix(p)
    directions = {"T": [d.power(m) for m in range(p)], "S": [shift.power(m) for m in range(p)]}

    span = SpanBasis(p, p * p)
    span.add(Mat.identity(p).vec())
    suffix = Mat.identity(p)
    for kind, factor in reversed(list(zip(kinds, factors))):
        suffix_inv = mat_inv(suffix)
        left = suffix_inv @ mat_inv(factor)
        for e in directions[kind]:
            span.add((left @ e @ suffix).vec())
        suffix = factor @ suffix
        if span.is_full():
            break
    return len(span) - 1


def random_orbit_params(p: int, depth: int, rng: np.random.Generator, bound: int = 9) -> List[CycPoly]:
    """系数取 [-bound, bound] 整数的可逆多项式"""
    return [random_poly(p, rng, bound, invertible=True, integral=True) for _ in range(depth)]


def orbit_jacobian_rank(spec: OrbitSpec, seed: int, coefficient_bound: int = 9,
                        max_retries: int = 5) -> DimCertificate:
    """
    在随机有理参数点计算 Jacobian 秩并生成维数证书

    秩在特殊点只会偏低，因此达到 i(p-1) 即是证明；
    偏低时换种子重试，最多 max_retries 次。

    Args:
        spec: 轨道描述
        seed: 随机种子
        coefficient_bound: 参数系数范围
        max_retries: 重试次数

    Returns:
        DimCertificate
    """
    p = spec.p
    rng = make_rng(seed)
    cert: Optional[DimCertificate] = None
    for attempt in range(1, max_retries + 2):
        params = random_orbit_params(p, spec.depth, rng, coefficient_bound)
        achieved = jacobian_rank(spec.base, spec.pattern, params)
        cert = DimCertificate(p, spec.depth, achieved, params, seed, attempt, spec.pattern)
        if cert.valid:
            break
        logger.warning(f"p={p} depth={spec.depth}: rank {achieved} < {cert.expected}, resampling")
    logger.info(f"Certificate: {cert!r}")
    return cert


def base_points(p: int) -> List[Basis]:
    """两个不同的基点：I 与一个上三角单位矩阵"""
    upper = Mat(p, [[1 if j >= i else 0 for j in range(p)] for i in range(p)])
    return [Basis(Mat.identity(p)), Basis(upper)]


# ----------------------------------------------------------------------
# 稳定子恒等式
# ----------------------------------------------------------------------
def stabilizer_identity_checks(p: int, rng: np.random.Generator, trials: int = 20) -> Dict[str, bool]:
    """
    以矩阵恒等式核对：
      1. r ∈ T̂（参数 g = x）且 σ ∈ Ŝ（参数 x^{p-1}）；r^p 射影为单位；
      2. r^{-1}S_g r = S_{τ(g)}（特征值参数下即 σ(z)），σ^{-1}T_z σ = T_{σ(z)}；
      3. T_g 与 T_{g'} 射影相等当且仅当 Θ(g)/Θ(g') 为常数。

    Returns:
        各项检查名到结果的字典
    """
    d = diag_rho_matrix(p)
    sigma = sigma_matrix(p)
    d_inv = mat_inv(d)
    sigma_inv = mat_inv(sigma)
    x = CycPoly.x_power(p, 1)
    results = {
        "r_in_T": t_matrix_of(x) == d,
        "sigma_in_S": s_matrix(CycPoly.x_power(p, p - 1)) == sigma,
        "r_order_p": d.power(p) == Mat.identity(p),
    }

    normalizes_s, normalizes_s_eig, normalizes_t, fiber = True, True, True, True
    for _ in range(trials):
        g = random_poly(p, rng, 3, invertible=True)
        normalizes_s &= d_inv @ s_matrix(g) @ d == s_matrix(tau(g))
        z = theta(g)
        normalizes_s_eig &= (d_inv @ s_matrix_from_eigenvalues(z) @ d
                             == s_matrix_from_eigenvalues(shift_vector(z)))
        normalizes_t &= sigma_inv @ t_matrix(z) @ sigma == t_matrix(shift_vector(z))

        c = CycNum.rho(p, int(rng.integers(0, p))) * (int(rng.integers(1, 5)))
        k = int(rng.integers(1, p))
        same = projective_normal(t_matrix_of(g * c)) == projective_normal(t_matrix_of(g))
        moved = projective_normal(t_matrix_of(g * CycPoly.x_power(p, k))) == projective_normal(t_matrix_of(g))
        fiber &= same and not moved

    results.update({
        "r_normalizes_S": normalizes_s,
        "r_normalizes_S_eigen": normalizes_s_eig,
        "sigma_normalizes_T": normalizes_t,
        "fiber_scalar_only": fiber,
    })
    return results


# ----------------------------------------------------------------------
# P_2 的一次纤维
# ----------------------------------------------------------------------
def _coefficients_over_powers(target: Mat, m: Mat) -> CycPoly:
    """把 target 写成 Σ c_i m^i（0 ≤ i < p）"""
    p = m.p
    powers = [Mat.identity(p)]
    for _ in range(1, p):
        powers.append(powers[-1] @ m)
    system = Mat.from_columns(p, [Mat.column(p, list(w.vec())) for w in powers])
    try:
        sol = LinearSolver(system).solve(Mat.column(p, list(target.vec())))
    except Inconsistent as e:
        raise NoSolution("target is not a polynomial in the given matrix") from e
    return CycPoly(p, [sol.array[i, 0] for i in range(p)])


def p2_image(q: UnitSkewPair, f: CycPoly, h: CycPoly) -> Tuple[Mat, Mat]:
    """(h(f(α)β)·α, f(α)β)"""
    beta1 = poly_at_matrix(f, q.alpha) @ q.beta
    return poly_at_matrix(h, beta1) @ q.alpha, beta1


def p2_fiber_recover(q: UnitSkewPair, image: Tuple[Mat, Mat]) -> Tuple[CycPoly, CycPoly]:
    """
    由像 (α', β') = (h(f(α)β)α, f(α)β) 解出 (f, h)

    f(α) = β'β^{-1}，h(β') = α'α^{-1}，两次都是关于幂基的线性方程组，
    解唯一，因此参数到像是一对一的。
    """
    alpha1, beta1 = image
    f = _coefficients_over_powers(beta1 @ mat_inv(q.beta), q.alpha)
    h = _coefficients_over_powers(alpha1 @ mat_inv(q.alpha), beta1)
    return f, h
