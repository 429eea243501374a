"""分裂情形：基 𝓑 与单位斜交换对 P̂

约定（全部用精确矩阵恒等式核对过）：
  - D = diag(1, ρ, ..., ρ^{p-1}) 是 r 作用的矩阵；
  - σ[i][i+1] = 1（下标 mod p），于是 Aσ = (v_{p-1}, v_0, ..., v_{p-2})；
  - P = σ^T 满足 P e_i = e_{i+1}，Φ(A) = (A D A^{-1}, A P A^{-1})；
  - S_g 是循环矩阵 S[k][i] = g_{(k-i) mod p}，即 S_g = g(P)，第 0 列是 g 的系数；
  - T_g := diag(Θ(g)) = g(D)，且 S_g·R = R·T_{Θ(g)}，R = (ρ^{-ij})。
"""
from typing import List, Sequence

from ..algebra.cyclotomic import CycNum
from ..algebra.cycpoly import CycPoly, is_invertible, psi, psi_prime, theta, theta_inv
from ..algebra.linalg import Mat, eigenspace, mat_inv, poly_at_matrix
from ..models.pair import Basis, SkewPair, UnitSkewPair
from ..utils.exceptions import DegeneratePair, NotInvertible
from ..utils.logger import get_logger

logger = get_logger("pairs")


# ----------------------------------------------------------------------
# 常用矩阵
# ----------------------------------------------------------------------
def diag_rho_matrix(p: int) -> Mat:
    """D = diag(1, ρ, ..., ρ^{p-1})，即 r 的矩阵"""
    return Mat.diag(p, [CycNum.rho(p, i) for i in range(p)])


def sigma_matrix(p: int) -> Mat:
    """σ[i][(i+1) mod p] = 1"""
    rows = [[1 if j == (i + 1) % p else 0 for j in range(p)] for i in range(p)]
    return Mat(p, rows)


def shift_matrix(p: int) -> Mat:
    """P e_i = e_{i+1}，P = σ^T = σ^{-1}"""
    return sigma_matrix(p).transpose()


def r_matrix(p: int) -> Mat:
    """R = (ρ^{-ij})"""
    return Mat(p, [[CycNum.rho(p, -i * j) for j in range(p)] for i in range(p)])


def r_prime_matrix(p: int) -> Mat:
    """R' = (ρ^{ij})，RR' = pI"""
    return Mat(p, [[CycNum.rho(p, i * j) for j in range(p)] for i in range(p)])


def t_matrix(values: Sequence[CycNum]) -> Mat:
    """T_z = diag(z)"""
    return Mat.diag(values[0].p, list(values))


def t_matrix_of(g: CycPoly) -> Mat:
    """T_{Θ(g)} = g(D)"""
    return t_matrix(theta(g))


def s_matrix(g: CycPoly) -> Mat:
    """循环矩阵 S_g，S[k][i] = g_{(k-i) mod p}"""
    p = g.p
    return Mat(p, [[g.coeffs[(k - i) % p] for i in range(p)] for k in range(p)])


def s_matrix_from_eigenvalues(z: Sequence[CycNum]) -> Mat:
    """R·T_z·R^{-1}，等于 S_{Θ^{-1}(z)}"""
    return s_matrix(theta_inv(z))


def shift_vector(z: Sequence[CycNum]) -> List[CycNum]:
    """σ(z) = (z_{p-1}, z_0, ..., z_{p-2})"""
    z = list(z)
    return [z[-1]] + z[:-1]


# ----------------------------------------------------------------------
# Φ 与 Φ^{-1}
# ----------------------------------------------------------------------
def standard_pair(p: int) -> UnitSkewPair:
    """Φ(I) = (D, P)"""
    return UnitSkewPair(diag_rho_matrix(p), shift_matrix(p))


def phi(b: Basis) -> UnitSkewPair:
    """
    Φ(A) = (α̂, β̂)，α̂(v_i) = ρ^i v_i，β̂(v_i) = v_{i+1}

    Args:
        b: 有序基

    Returns:
        P̂ 中的点
    """
    a = b.matrix
    a_inv = mat_inv(a)
    p = b.p
    return UnitSkewPair(a @ diag_rho_matrix(p) @ a_inv, a @ shift_matrix(p) @ a_inv)


def phi_inverse(q: UnitSkewPair) -> Basis:
    """
    取 α̂ 的特征值 1 的特征向量作 v_0，再令 v_i = β̂^i(v_0)

    Args:
        q: P̂ 中的点

    Returns:
        射影意义下唯一的基
    """
    p = q.p
    space = eigenspace(q.alpha, CycNum.one(p))
    if len(space) != 1:
        raise DegeneratePair(f"λ=1 eigenspace of α has dimension {len(space)}, expected 1")
    columns = [space[0]]
    for _ in range(1, p):
        columns.append(q.beta @ columns[-1])
    return Basis(Mat.from_columns(p, columns))


# ----------------------------------------------------------------------
# σ / r
# ----------------------------------------------------------------------
def act_sigma(b: Basis) -> Basis:
    """σ(A) = Aσ"""
    return Basis(b.matrix @ sigma_matrix(b.p))


def act_r(b: Basis) -> Basis:
    """r(A) = A·D"""
    return Basis(b.matrix @ diag_rho_matrix(b.p))


def sigma_pair(q: UnitSkewPair) -> UnitSkewPair:
    """σ 在 P̂ 上：(α̂, β̂) ↦ (ρα̂, β̂)"""
    return UnitSkewPair(q.alpha * CycNum.rho(q.p), q.beta)


def r_pair(q: UnitSkewPair) -> UnitSkewPair:
    """r 在 P̂ 上：(α̂, β̂) ↦ (α̂, ρβ̂)"""
    return UnitSkewPair(q.alpha, q.beta * CycNum.rho(q.p))


# ----------------------------------------------------------------------
# 环面 T̂ / Ŝ
# ----------------------------------------------------------------------
def _require_invertible(g: CycPoly) -> None:
    if not is_invertible(g):
        raise NotInvertible(f"{g!r} vanishes at a p-th root of unity")


def torus_T(b: Basis, g: CycPoly) -> Basis:
    """𝒯̂(A, g) = A·T_{Θ(g)}"""
    _require_invertible(g)
    return Basis(b.matrix @ t_matrix_of(g))


def torus_S(b: Basis, g: CycPoly) -> Basis:
    """𝒮̂(A, g) = A·S_g"""
    _require_invertible(g)
    return Basis(b.matrix @ s_matrix(g))


def act_T_on_pair(q: UnitSkewPair, g: CycPoly) -> UnitSkewPair:
    """𝒯̂((α̂, β̂), g) = (α̂, Ψ(g)(α̂)·β̂) = (α̂, g(α̂)β̂g(α̂)^{-1})"""
    _require_invertible(g)
    return UnitSkewPair(q.alpha, poly_at_matrix(psi(g), q.alpha) @ q.beta)


def act_S_on_pair(q: UnitSkewPair, g: CycPoly) -> UnitSkewPair:
    """𝒮̂((α̂, β̂), g) = (Ψ'(g)(β̂)·α̂, β̂) = (g(β̂)α̂g(β̂)^{-1}, β̂)"""
    _require_invertible(g)
    return UnitSkewPair(poly_at_matrix(psi_prime(g), q.beta) @ q.alpha, q.beta)


def conjugate_T_on_pair(q: UnitSkewPair, g: CycPoly) -> UnitSkewPair:
    """共轭形式 (α̂, g(α̂)β̂g(α̂)^{-1})"""
    _require_invertible(g)
    ga = poly_at_matrix(g, q.alpha)
    return UnitSkewPair(q.alpha, ga @ q.beta @ mat_inv(ga))


def conjugate_S_on_pair(q: UnitSkewPair, g: CycPoly) -> UnitSkewPair:
    """共轭形式 (g(β̂)α̂g(β̂)^{-1}, β̂)"""
    _require_invertible(g)
    gb = poly_at_matrix(g, q.beta)
    return UnitSkewPair(gb @ q.alpha @ mat_inv(gb), q.beta)


# ----------------------------------------------------------------------
# P 上的移动
# ----------------------------------------------------------------------
def move_T(q: SkewPair, f: CycPoly) -> SkewPair:
    """𝒯((α, β), f) = (α, f(α)β)"""
    return SkewPair(q.alpha, poly_at_matrix(f, q.alpha) @ q.beta)


def move_S(q: SkewPair, f: CycPoly) -> SkewPair:
    """𝒮((α, β), f) = (f(β)α, β)"""
    return SkewPair(poly_at_matrix(f, q.beta) @ q.alpha, q.beta)


def w_basis(b: Basis) -> Basis:
    """AR = (w_0, ..., w_{p-1})，w_j = Σ_i ρ^{-ij} v_i"""
    return Basis(b.matrix @ r_matrix(b.p))
