"""全部验证检查

每个检查返回 (ok, witness)。witness 只放可序列化的小数据，
保证同一 (p, seed) 的报告逐字节一致。
"""
import json
from typing import List, Optional, Tuple

import numpy as np

from ..algebra.cyclotomic import CycNum, random_cyc
from ..algebra.cycpoly import (
    CycPoly,
    is_invertible,
    poly_mul,
    psi,
    psi_prime,
    random_poly,
    ring_norm,
    tau,
    tau_prime,
    theta,
    theta_inv,
)
from ..algebra.linalg import (
    DualMat,
    Mat,
    charpoly,
    det,
    dual_inv,
    eigenspace,
    mat_inv,
    poly_at_matrix,
    rank,
)
from ..algebra.symbol import (
    SymElem,
    SymParams,
    delta,
    gamma,
    norm_one_poly,
    one,
    poly_at,
    regular_rep,
    skew_commutes,
    slot_move_S,
    slot_move_T,
    slot_power_scalar,
    sym_mul,
    sym_pow,
    sym_trace,
)
from ..algebra.symbol import is_invertible as sym_is_invertible
from ..core.filtration import (
    base_points,
    jacobian_rank,
    orbit_jacobian_rank,
    orbit_point,
    p2_fiber_recover,
    p2_image,
    random_orbit_params,
    stabilizer_identity_checks,
)
from ..core.lifting import (
    PhiAdjustSolver,
    apply_adjust,
    charpoly_collapse_check,
    is_skew_dual,
    is_unit_dual,
    lift_skew_pair,
    lift_truncated,
    lift_unit_pair,
    naturality_check,
    normalized_defect,
    perturbation_problem,
    r1_determinant,
    trace_zero_image_check,
    truncated_defect,
)
from ..core.pairs import (
    act_r,
    act_S_on_pair,
    act_sigma,
    act_T_on_pair,
    conjugate_T_on_pair,
    diag_rho_matrix,
    move_S,
    move_T,
    phi,
    phi_inverse,
    r_matrix,
    r_pair,
    r_prime_matrix,
    s_matrix,
    s_matrix_from_eigenvalues,
    shift_matrix,
    shift_vector,
    sigma_matrix,
    sigma_pair,
    standard_pair,
    t_matrix,
    torus_S,
    torus_T,
    w_basis,
)
from ..core.tori import (
    coordinate_images,
    coordinate_subspace_violations,
    is_monomial,
    lie_closure_dimension,
    normalizes_diagonal,
)
from ..models.certificate import OrbitSpec
from ..models.lift import LiftProblem
from ..models.pair import Basis, SkewPair, same_in_pbar
from ..utils.sampling import small_ints
from .base import REGISTRY, CheckContext, Witness, check

SMALL = (3, 5, 7)
TINY = (3, 5)
LIFTS_PER_BODY = 20


# ----------------------------------------------------------------------
# 采样工具
# ----------------------------------------------------------------------
def random_matrix(p: int, rng: np.random.Generator, bound: int = 2, n: Optional[int] = None) -> Mat:
    n = p if n is None else n
    return Mat(p, [[random_cyc(p, rng, bound) for _ in range(n)] for _ in range(n)])


def random_basis(p: int, rng: np.random.Generator, bound: int = 1) -> Basis:
    while True:
        m = Mat(p, [small_ints(rng, p, bound) for _ in range(p)])
        if not m.det().is_zero():
            return Basis(m @ Mat.diag(p, [random_cyc(p, rng, 1, nonzero=True) for _ in range(p)]))


def random_skew_pair(p: int, rng: np.random.Generator) -> SkewPair:
    """Φ(b) 经 𝒯 移动并把 α 乘上随机标量，一般不再是单位对"""
    q = phi(random_basis(p, rng))
    f = random_poly(p, rng, 1, invertible=True)
    moved = move_T(q, f)
    return SkewPair(moved.alpha * random_cyc(p, rng, 2, nonzero=True), moved.beta)


def random_params(p: int, rng: np.random.Generator) -> SymParams:
    return SymParams(p, random_cyc(p, rng, 2, nonzero=True), random_cyc(p, rng, 2, nonzero=True))


def random_sym(params: SymParams, rng: np.random.Generator, bound: int = 1) -> SymElem:
    p = params.p
    return SymElem(params, [[int(v) for v in rng.integers(-bound, bound + 1, size=p)] for _ in range(p)])


def _tally(results: List[bool]) -> Witness:
    return {"trials": len(results), "failures": sum(1 for r in results if not r)}


# ----------------------------------------------------------------------
# cyclotomic
# ----------------------------------------------------------------------
@check("cyclotomic.field_axioms", "ground field Q(ρ_p)")
def check_field_axioms(ctx: CheckContext) -> Tuple[bool, Witness]:
    p, rng = ctx.p, ctx.rng
    results = []
    for _ in range(ctx.trials):
        a, b, c = (random_cyc(p, rng) for _ in range(3))
        k = int(rng.integers(1, p))
        ok = (a * b) * c == a * (b * c) and a * (b + c) == a * b + a * c
        ok &= (a * b).conj(k) == a.conj(k) * b.conj(k)
        if not a.is_zero():
            ok &= a * a.inverse() == 1
        results.append(ok)
    rho = CycNum.rho(p)
    ok_fixed = rho ** p == 1 and rho.inverse() == CycNum.rho(p, p - 1)
    witness = _tally(results)
    witness["rho_order_p"] = ok_fixed
    return all(results) and ok_fixed, witness


@check("cyclotomic.norm_multiplicative", "field norm to Q")
def check_norm(ctx: CheckContext) -> Tuple[bool, Witness]:
    p, rng = ctx.p, ctx.rng
    results = []
    for _ in range(ctx.trials):
        a, b = random_cyc(p, rng), random_cyc(p, rng)
        results.append((a * b).norm() == a.norm() * b.norm() and (a.norm() == 0) == a.is_zero())
    one_minus_rho = 1 - CycNum.rho(p)
    witness = _tally(results)
    witness["norm_1_minus_rho"] = str(one_minus_rho.norm())
    return all(results) and one_minus_rho.norm() == p, witness


@check("cyclotomic.root_sum_zero", "Σ ρ^i = 0")
def check_root_sum(ctx: CheckContext) -> Tuple[bool, Witness]:
    p = ctx.p
    total = sum((CycNum.rho(p, i) for i in range(p)), CycNum.zero(p))
    prod = CycNum.one(p)
    for k in range(1, p):
        prod = prod * (1 - CycNum.rho(p, k))
    return total.is_zero() and prod == p, {"sum_zero": total.is_zero(), "product": prod.to_json()}


# ----------------------------------------------------------------------
# cycpoly
# ----------------------------------------------------------------------
@check("cycpoly.theta_isomorphism", "evaluation isomorphism Θ")
def check_theta(ctx: CheckContext) -> Tuple[bool, Witness]:
    p, rng = ctx.p, ctx.rng
    results = []
    for _ in range(ctx.trials):
        f, g = random_poly(p, rng), random_poly(p, rng)
        pointwise = [a * b for a, b in zip(theta(f), theta(g))]
        results.append(theta(poly_mul(f, g)) == pointwise and theta_inv(theta(f)) == f)
    x = CycPoly.x_power(p, 1)
    ok_fixed = (theta(CycPoly.constant(p, 1)) == [CycNum.one(p)] * p
                and theta(x) == [CycNum.rho(p, k) for k in range(p)]
                and not is_invertible(CycPoly(p, [1] * p))
                and not is_invertible(x - CycPoly.constant(p, 1)))
    witness = _tally(results)
    witness["fixed_examples"] = ok_fixed
    return all(results) and ok_fixed, witness


@check("cycpoly.tau_automorphisms", "automorphisms τ, τ' and the ring norm", SMALL)
def check_tau(ctx: CheckContext) -> Tuple[bool, Witness]:
    p, rng = ctx.p, ctx.rng
    results = []
    for _ in range(ctx.trials):
        f, g = random_poly(p, rng, 2), random_poly(p, rng, 2)
        h = f
        for _ in range(p):
            h = tau(h)
        ok = h == f and tau(tau_prime(f)) == f and tau(poly_mul(f, g)) == poly_mul(tau(f), tau(g))
        ok &= ring_norm(poly_mul(f, g)) == ring_norm(f) * ring_norm(g)
        results.append(ok)
    c = random_cyc(p, rng, 2, nonzero=True)
    ok_fixed = (ring_norm(CycPoly.x_power(p, 1)) == 1
                and ring_norm(CycPoly.constant(p, c)) == c ** p)
    if p == 3:
        ok_fixed &= ring_norm(CycPoly(p, [1, 1])) == 2
    witness = _tally(results)
    witness["fixed_examples"] = ok_fixed
    return all(results) and ok_fixed, witness


@check("cycpoly.psi_contracts", "Ψ proposition: norm one and fibers", SMALL)
def check_psi(ctx: CheckContext) -> Tuple[bool, Witness]:
    p, rng = ctx.p, ctx.rng
    results = []
    for _ in range(ctx.config.suite.psi_trials):
        g = random_poly(p, rng, 2, invertible=True)
        c = random_cyc(p, rng, 2, nonzero=True)
        i = int(rng.integers(0, p))
        moved = poly_mul(CycPoly.x_power(p, i, c), g)
        ok = ring_norm(psi(g)) == 1 and ring_norm(psi_prime(g)) == 1
        ok &= psi(moved) == psi(g) * CycNum.rho(p, i)
        ok &= psi(g * c) == psi(g)
        results.append(ok)
    ok_fixed = (psi(CycPoly.x_power(p, 1)) == CycPoly.constant(p, CycNum.rho(p))
                and psi(CycPoly.constant(p, 5)) == CycPoly.constant(p, 1))
    witness = _tally(results)
    witness["fixed_examples"] = ok_fixed
    return all(results) and ok_fixed, witness


# ----------------------------------------------------------------------
# linalg
# ----------------------------------------------------------------------
@check("linalg.elimination", "exact Gaussian elimination over K", SMALL)
def check_elimination(ctx: CheckContext) -> Tuple[bool, Witness]:
    p, rng = ctx.p, ctx.rng
    results = []
    for _ in range(ctx.trials):
        a, b = random_matrix(p, rng), random_matrix(p, rng)
        ok = det(a @ b) == det(a) * det(b)
        if not det(a).is_zero():
            ok &= a @ mat_inv(a) == Mat.identity(p)
        low = Mat(p, random_matrix(p, rng).array[:, :2]) @ Mat(p, random_matrix(p, rng).array[:2, :])
        perm = sigma_matrix(p)
        if not det(b).is_zero():
            ok &= rank(low) == rank(perm @ low @ perm.T) == rank(b @ low) == rank(low @ b)
        ok &= poly_at_matrix(charpoly(a), a).is_zero()
        results.append(ok)
    ones = Mat(p, [[1] * p for _ in range(p)])
    shift = shift_matrix(p)
    t_p_minus_1 = [CycNum.from_rational(p, -1)] + [CycNum.zero(p)] * (p - 1) + [CycNum.one(p)]
    ones_vec = Mat.column(p, [1] * p)
    eig = eigenspace(shift, CycNum.one(p))
    ok_fixed = (rank(ones) == 1 and charpoly(shift) == t_p_minus_1
                and len(eig) == 1 and eig[0] == ones_vec
                and eigenspace(Mat.identity(p), CycNum.rho(p)) == [])
    witness = _tally(results)
    witness["fixed_examples"] = ok_fixed
    return all(results) and ok_fixed, witness


@check("linalg.dual_inverse", "square-zero inverse", SMALL)
def check_dual(ctx: CheckContext) -> Tuple[bool, Witness]:
    p, rng = ctx.p, ctx.rng
    results = []
    ident = DualMat.identity(p)
    for _ in range(ctx.trials):
        body = random_basis(p, rng).matrix
        m = DualMat(body, random_matrix(p, rng))
        results.append(m @ dual_inv(m) == ident and dual_inv(m) @ m == ident)
    b = random_matrix(p, rng)
    ok_fixed = dual_inv(DualMat(Mat.identity(p), b)) == DualMat(Mat.identity(p), -b)
    witness = _tally(results)
    witness["fixed_examples"] = ok_fixed
    return all(results) and ok_fixed, witness


@check("linalg.r1_determinant", "R_1 = (ρ^{ij} - 1) is invertible")
def check_r1(ctx: CheckContext) -> Tuple[bool, Witness]:
    p = ctx.p
    d = r1_determinant(p)
    ok = not d.is_zero()
    if p == 3:
        ok &= d == CycNum(3, [-3, -6])
    return ok, {"det": d.to_json()}


# ----------------------------------------------------------------------
# pairs
# ----------------------------------------------------------------------
@check("pairs.r_r_prime", "RR' = pI")
def check_r_r_prime(ctx: CheckContext) -> Tuple[bool, Witness]:
    p = ctx.p
    r, rp = r_matrix(p), r_prime_matrix(p)
    product_ok = r @ rp == Mat.identity(p) * p
    border_ok = all(r.array[0, j] == 1 and r.array[j, 0] == 1 for j in range(p))
    return product_ok and border_ok, {"product": product_ok, "border_ones": border_ok}


@check("pairs.torus_bridge", "R·T̂·R^{-1} = Ŝ", SMALL)
def check_torus_bridge(ctx: CheckContext) -> Tuple[bool, Witness]:
    p, rng = ctx.p, ctx.rng
    r = r_matrix(p)
    r_inv = mat_inv(r)
    results = []
    for _ in range(ctx.trials):
        g = random_poly(p, rng, 2)
        y = [sum((g.coeffs[i] * CycNum.rho(p, i * k) for i in range(p)), CycNum.zero(p)) for k in range(p)]
        ok = y == theta(g) and r @ t_matrix(y) @ r_inv == s_matrix(g)
        ok &= s_matrix_from_eigenvalues(y) == s_matrix(g)
        results.append(ok)
    sigma_ok = s_matrix(CycPoly.x_power(p, p - 1)) == sigma_matrix(p)
    witness = _tally(results)
    witness["sigma_is_circulant"] = sigma_ok
    return all(results) and sigma_ok, witness


@check("pairs.phi_round_trip", "Φ: 𝓑 ≅ P̂", SMALL)
def check_phi_round_trip(ctx: CheckContext) -> Tuple[bool, Witness]:
    p, rng = ctx.p, ctx.rng
    results = []
    for _ in range(ctx.trials):
        b = random_basis(p, rng)
        q = phi(b)
        c = random_cyc(p, rng, 2, nonzero=True)
        ok = phi_inverse(q) == b and phi(phi_inverse(q)) == q
        ok &= phi(Basis(b.matrix * c)) == q
        results.append(ok)
    std = standard_pair(p)
    ok_fixed = phi(Basis(Mat.identity(p))) == std and phi_inverse(std) == Basis(Mat.identity(p))
    witness = _tally(results)
    witness["standard_pair"] = ok_fixed
    return all(results) and ok_fixed, witness


@check("pairs.phi_equivariance", "σ(α̂) = ρα̂, r(β̂) = ρβ̂", SMALL)
def check_phi_equivariance(ctx: CheckContext) -> Tuple[bool, Witness]:
    p, rng = ctx.p, ctx.rng
    results = []
    for _ in range(ctx.trials):
        b = random_basis(p, rng)
        q = phi(b)
        ok = phi(act_sigma(b)) == sigma_pair(q) and phi(act_r(b)) == r_pair(q)
        ok &= act_sigma(act_r(b)) == act_r(act_sigma(b))
        results.append(ok)

    b = random_basis(p, rng)
    cols = b.matrix.columns()
    shifted = Basis(Mat.from_columns(p, [cols[-1]] + cols[:-1]))
    orbit_sigma, orbit_r = b, b
    for _ in range(p):
        orbit_sigma, orbit_r = act_sigma(orbit_sigma), act_r(orbit_r)
    ok_fixed = act_sigma(b) == shifted and orbit_sigma == b and orbit_r == b
    witness = _tally(results)
    witness["order_p_and_shift"] = ok_fixed
    return all(results) and ok_fixed, witness


@check("pairs.toral_w_basis", "β̂(w_j) = ρ^j w_j, α̂(w_j) = w_{j-1}", SMALL)
def check_w_basis(ctx: CheckContext) -> Tuple[bool, Witness]:
    p, rng = ctx.p, ctx.rng
    results = []
    for _ in range(ctx.trials):
        b = random_basis(p, rng)
        q = phi(b)
        w = (b.matrix @ r_matrix(p)).columns()
        ok = all(q.beta @ w[j] == w[j] * CycNum.rho(p, j) for j in range(p))
        ok &= all(q.alpha @ w[j] == w[(j - 1) % p] for j in range(p))
        v_sum = b.matrix @ Mat.column(p, [1] * p)
        ok &= w[0] == v_sum and w_basis(b) == Basis(b.matrix @ r_matrix(p))
        results.append(ok)
    return all(results), _tally(results)


@check("pairs.matrix_equivariance", "σ(AT_z) = σ(A)T_{σ(z)}, r(AS_z) = r(A)S_{σ(z)}", SMALL)
def check_matrix_equivariance(ctx: CheckContext) -> Tuple[bool, Witness]:
    p, rng = ctx.p, ctx.rng
    sigma, d = sigma_matrix(p), diag_rho_matrix(p)
    d_inv = mat_inv(d)
    results = []
    for _ in range(ctx.trials):
        a = random_basis(p, rng).matrix
        z = [random_cyc(p, rng, 2, nonzero=True) for _ in range(p)]
        sz = shift_vector(z)
        g = random_poly(p, rng, 2)
        ok = a @ t_matrix(z) @ sigma == (a @ sigma) @ t_matrix(sz)
        ok &= a @ s_matrix_from_eigenvalues(z) @ d == (a @ d) @ s_matrix_from_eigenvalues(sz)
        ok &= d_inv @ s_matrix(g) @ d == s_matrix(tau(g))
        results.append(ok)
    return all(results), _tally(results)


@check("pairs.toral_actions", "𝒯̂ and 𝒮̂ on P̂", SMALL)
def check_toral_actions(ctx: CheckContext) -> Tuple[bool, Witness]:
    p, rng = ctx.p, ctx.rng
    results = []
    for _ in range(ctx.trials):
        b = random_basis(p, rng)
        q = phi(b)
        g = random_poly(p, rng, 2, invertible=True)
        t_q = act_T_on_pair(q, g)
        ok = t_q == conjugate_T_on_pair(q, g)
        ok &= phi(torus_T(b, g)) == t_q and phi(torus_S(b, g)) == act_S_on_pair(q, g)
        ok &= t_q.beta.power(p) == Mat.identity(p)
        results.append(ok)
    b = random_basis(p, rng)
    q = phi(b)
    c = CycPoly.constant(p, 3)
    ok_fixed = (act_T_on_pair(q, c) == q and act_S_on_pair(q, c) == q
                and torus_T(b, c) == b and torus_S(b, CycPoly.x_power(p, p - 1)) == act_sigma(b))
    witness = _tally(results)
    witness["fixed_examples"] = ok_fixed
    return all(results) and ok_fixed, witness


@check("pairs.tau_equivariance", "τ-equivariance of 𝒯̂ and 𝒮̂", SMALL)
def check_tau_equivariance(ctx: CheckContext) -> Tuple[bool, Witness]:
    p, rng = ctx.p, ctx.rng
    results = []
    for _ in range(ctx.trials):
        q = phi(random_basis(p, rng))
        g = random_poly(p, rng, 2, invertible=True)
        ok = sigma_pair(act_T_on_pair(q, g)) == act_T_on_pair(sigma_pair(q), tau(g))
        ok &= r_pair(act_S_on_pair(q, g)) == act_S_on_pair(r_pair(q), tau(g))
        ok &= r_pair(act_T_on_pair(q, g)) == act_T_on_pair(r_pair(q), g)
        ok &= sigma_pair(act_S_on_pair(q, g)) == act_S_on_pair(sigma_pair(q), g)
        results.append(ok)
    return all(results), _tally(results)


@check("pairs.qtoral", "P̂-level actions project to P-level moves with Ψ", SMALL)
def check_qtoral(ctx: CheckContext) -> Tuple[bool, Witness]:
    p, rng = ctx.p, ctx.rng
    results = []
    for _ in range(ctx.trials):
        b = random_basis(p, rng)
        q = phi(b)
        g = random_poly(p, rng, 2, invertible=True)
        ok = same_in_pbar(phi(torus_T(b, g)), move_T(q, psi(g)))
        ok &= same_in_pbar(phi(torus_S(b, g)), move_S(q, psi_prime(g)))
        results.append(ok)
    return all(results), _tally(results)


@check("pairs.galois_orbit", "⟨σ, r⟩ acts with p² points over one point of P̄", SMALL)
def check_galois_orbit(ctx: CheckContext) -> Tuple[bool, Witness]:
    p, rng = ctx.p, ctx.rng
    b = random_basis(p, rng)
    q = phi(b)
    keys = set()
    same = True
    row = b
    for _ in range(p):
        point = row
        for _ in range(p):
            image = phi(point)
            keys.add(tuple(image.alpha.array.flat) + tuple(image.beta.array.flat))
            same &= same_in_pbar(image, q)
            point = act_r(point)
        row = act_sigma(row)
    return len(keys) == p * p and same, {"distinct_points": len(keys), "single_pbar_point": same}


# ----------------------------------------------------------------------
# tori
# ----------------------------------------------------------------------
def _non_monomial(p: int, rng: np.random.Generator) -> CycPoly:
    while True:
        g = random_poly(p, rng, 2, invertible=True)
        if len(g.support()) >= 2:
            return g


@check("tori.normalizer", "N̂ ∩ Ŝ is generated by σ", SMALL)
def check_normalizer(ctx: CheckContext) -> Tuple[bool, Witness]:
    p, rng = ctx.p, ctx.rng
    results = []
    for _ in range(ctx.trials):
        g = _non_monomial(p, rng)
        d = [CycNum.from_rational(p, k + 1) for k in range(p)]
        m = CycPoly.x_power(p, int(rng.integers(0, p)), random_cyc(p, rng, 2, nonzero=True))
        results.append(not normalizes_diagonal(g, d) and is_monomial(m) and normalizes_diagonal(m, d))
    return all(results), _tally(results)


@check("tori.coordinate_subspaces", "no common invariant subspaces, part 1")
def check_coordinate_subspaces(ctx: CheckContext) -> Tuple[bool, Witness]:
    p = ctx.p
    violations = coordinate_subspace_violations(p)
    nonzero = all(not v.is_zero() for v in r_matrix(p).array.flat)
    return not violations and nonzero, {"subspaces": 2 ** p - 2, "violations": len(violations)}


@check("tori.coordinate_images", "no common invariant subspaces, part 2", TINY)
def check_coordinate_images(ctx: CheckContext) -> Tuple[bool, Witness]:
    p, rng = ctx.p, ctx.rng
    results = []
    for _ in range(ctx.trials):
        results.append(coordinate_images(_non_monomial(p, rng)) == [])
    monomial_hits = len(coordinate_images(CycPoly.x_power(p, 1)))
    witness = _tally(results)
    witness["monomial_hits"] = monomial_hits
    return all(results) and monomial_hits == 2 ** p - 2, witness


@check("tori.lie_closure", "Zariski closure of ⟨T̂, Ŝ⟩ is PGL_p (Lie algebra)", SMALL)
def check_lie_closure(ctx: CheckContext) -> Tuple[bool, Witness]:
    dim = lie_closure_dimension(ctx.p)
    return dim == ctx.p ** 2, {"dimension": dim, "expected": ctx.p ** 2}


# ----------------------------------------------------------------------
# symbol
# ----------------------------------------------------------------------
@check("symbol.relations", "γ^p = x, δ^p = y, γδ = ρδγ", TINY)
def check_symbol_relations(ctx: CheckContext) -> Tuple[bool, Witness]:
    p, rng = ctx.p, ctx.rng
    params = random_params(p, rng)
    g, d = gamma(params), delta(params)
    rho = CycNum.rho(p)
    ok_fixed = (sym_mul(g, d) == sym_mul(d, g) * rho
                and sym_mul(d, g) == SymElem.monomial(params, 1, 1, CycNum.rho(p, p - 1))
                and sym_mul(sym_pow(g, p - 1), g) == SymElem.scalar(params, params.x)
                and sym_pow(d, p) == SymElem.scalar(params, params.y)
                and sym_trace(one(params)) == p and sym_trace(g).is_zero()
                and regular_rep(one(params)) == Mat.identity(p, p * p))
    results = []
    for k in range(ctx.trials):
        a, b, c = (random_sym(params, rng) for _ in range(3))
        ok = sym_mul(sym_mul(a, b), c) == sym_mul(a, sym_mul(b, c))
        ok &= sym_trace(sym_mul(a, b)) == sym_trace(sym_mul(b, a))
        if k < 3:
            ok &= regular_rep(sym_mul(a, b)) == regular_rep(a) @ regular_rep(b)
        results.append(ok)
    witness = _tally(results)
    witness["fixed_examples"] = ok_fixed
    return all(results) and ok_fixed, witness


def _slot_poly(params: SymParams, rng: np.random.Generator, element: SymElem) -> CycPoly:
    while True:
        f = random_poly(params.p, rng, 1)
        if sym_is_invertible(poly_at(f, element)):
            return f


@check("symbol.slot_laws", "(f(γ)δ)^p = N(f(γ))δ^p", TINY)
def check_slot_laws(ctx: CheckContext) -> Tuple[bool, Witness]:
    p, rng = ctx.p, ctx.rng
    results = []
    for _ in range(ctx.trials):
        params = random_params(p, rng)
        g, d = gamma(params), delta(params)
        f = _slot_poly(params, rng, g)
        n_gamma = slot_power_scalar(g, f)
        alpha1, beta1 = slot_move_T((g, d), f)
        power = sym_pow(beta1, p)
        ok = skew_commutes(alpha1, beta1) and power.is_scalar()
        ok &= power == SymElem.scalar(params, n_gamma * params.y)

        h = _slot_poly(params, rng, d)
        n_delta = slot_power_scalar(d, h)
        alpha2, beta2 = slot_move_S((g, d), h)
        ok &= skew_commutes(alpha2, beta2)
        ok &= sym_pow(alpha2, p) == SymElem.scalar(params, n_delta * params.x)
        results.append(ok)

    params = random_params(p, rng)
    g, d = gamma(params), delta(params)
    x_poly = CycPoly.x_power(p, 1)
    ok_fixed = (slot_power_scalar(g, CycPoly.constant(p, 1)) == 1
                and slot_power_scalar(g, x_poly) == params.x
                and slot_move_T((g, d), CycPoly.constant(p, 1)) == (g, d)
                and sym_pow(slot_move_T((g, d), x_poly)[1], p) == SymElem.scalar(params, params.x * params.y))
    witness = _tally(results)
    witness["fixed_examples"] = ok_fixed
    return all(results) and ok_fixed, witness


@check("symbol.norm_one_moves", "norm-one moves keep p-th powers", TINY)
def check_norm_one(ctx: CheckContext) -> Tuple[bool, Witness]:
    p, rng = ctx.p, ctx.rng
    results = []
    for _ in range(ctx.trials):
        params = random_params(p, rng)
        g, d = gamma(params), delta(params)
        while True:
            h = random_poly(p, rng, 1)
            if sym_is_invertible(poly_at(h, g * CycNum.rho(p))) and sym_is_invertible(poly_at(h, g)):
                break
        f = norm_one_poly(h, g)
        _, beta1 = slot_move_T((g, d), f)
        results.append(slot_power_scalar(g, f) == 1 and sym_pow(beta1, p) == sym_pow(d, p))
    return all(results), _tally(results)


@check("symbol.regular_rep_charpoly", "reduced characteristic polynomial of γ", (3,))
def check_regular_charpoly(ctx: CheckContext) -> Tuple[bool, Witness]:
    p, rng = ctx.p, ctx.rng
    params = random_params(p, rng)
    x = params.x
    coeffs = charpoly(regular_rep(gamma(params)))
    zero = CycNum.zero(p)
    expected = [zero] * (p * p + 1)
    expected[0], expected[3], expected[6], expected[9] = -(x ** 3), x * x * 3, -x * 3, CycNum.one(p)
    unit = SymParams(p, CycNum.one(p), CycNum.one(p))
    det_ok = det(regular_rep(gamma(unit))) == 1
    return coeffs == expected and det_ok, {"charpoly": coeffs == expected, "unit_det": det_ok}


# ----------------------------------------------------------------------
# filtration
# ----------------------------------------------------------------------
@check("filtration.orbit_point", "B_2 = (AT̂)Ŝ", SMALL)
def check_orbit_point(ctx: CheckContext) -> Tuple[bool, Witness]:
    p, rng = ctx.p, ctx.rng
    base = random_basis(p, rng)
    ones = [CycPoly.constant(p, 1)] * 2
    ok = orbit_point(OrbitSpec(base, 2), ones) == base
    results = []
    for _ in range(ctx.trials):
        g, h = random_orbit_params(p, 2, rng, ctx.config.filtration.coefficient_bound)
        point = orbit_point(OrbitSpec(base, 2), [g, h])
        r = point == torus_S(torus_T(base, g), h)
        absorbed = orbit_point(OrbitSpec(base, 2), [g, poly_mul(h, CycPoly.x_power(p, p - 1))])
        r &= Basis(point.matrix @ sigma_matrix(p)) == absorbed
        results.append(r)
    witness = _tally(results)
    witness["identity_params"] = ok
    return all(results) and ok, witness


def _certify(ctx: CheckContext) -> Tuple[bool, Witness]:
    p = ctx.p
    cfg = ctx.config.filtration
    ranks = {}
    attempts = {}
    ok = True
    for label, base in zip(("identity", "upper"), base_points(p)):
        ranks[label] = []
        attempts[label] = []
        for depth in range(2, p + 2):
            cert = orbit_jacobian_rank(OrbitSpec(base, depth), ctx.sub_seed(f"{label}/{depth}"),
                                       cfg.coefficient_bound, cfg.max_retries)
            ranks[label].append(cert.rank)
            attempts[label].append(cert.attempts)
            ok &= cert.valid
        increments = [b - a for a, b in zip(ranks[label], ranks[label][1:])]
        ok &= all(inc == p - 1 for inc in increments)
        ok &= ranks[label][-1] == p * p - 1

    rng = np.random.default_rng(ctx.sub_seed("saturation"))
    depth = p + 2
    params = random_orbit_params(p, depth, rng, cfg.coefficient_bound)
    spec = OrbitSpec(base_points(p)[0], depth)
    saturated = jacobian_rank(spec.base, spec.pattern, params)
    ok &= saturated == p * p - 1
    ok &= ranks["identity"] == ranks["upper"]
    return ok, {"ranks": ranks, "attempts": attempts, "saturated_rank": saturated}


@check("filtration.dimension_certificates", "dim P̄_i = i(p-1), P̄_{p+1} = P̄", TINY)
def check_dimensions(ctx: CheckContext) -> Tuple[bool, Witness]:
    return _certify(ctx)


@check("filtration.dimension_certificates_extended", "dim P̄_i = i(p-1), P̄_{p+1} = P̄", (7,), extended=True)
def check_dimensions_extended(ctx: CheckContext) -> Tuple[bool, Witness]:
    return _certify(ctx)


@check("filtration.stabilizers", "stabilizers generated by r / σ", SMALL)
def check_stabilizers(ctx: CheckContext) -> Tuple[bool, Witness]:
    results = stabilizer_identity_checks(ctx.p, ctx.rng, ctx.trials)
    return all(results.values()), results


@check("filtration.p2_fiber", "P_2 is rational: degree-one fibers", SMALL)
def check_p2_fiber(ctx: CheckContext) -> Tuple[bool, Witness]:
    p, rng = ctx.p, ctx.rng
    results = []
    for _ in range(ctx.trials):
        q = phi(random_basis(p, rng))
        f = random_poly(p, rng, 2, invertible=True)
        h = random_poly(p, rng, 2, invertible=True)
        image = p2_image(q, f, h)
        ok = p2_fiber_recover(q, image) == (f, h)
        other = p2_image(q, f + CycPoly.constant(p, 1), h) if is_invertible(f + CycPoly.constant(p, 1)) else None
        if other is not None:
            ok &= other[1] != image[1]
        results.append(ok)
    return all(results), _tally(results)


# ----------------------------------------------------------------------
# lifting
# ----------------------------------------------------------------------
@check("lifting.trace_zero_image", "every trace-zero element is in the image of L", TINY)
def check_trace_zero_image(ctx: CheckContext) -> Tuple[bool, Witness]:
    p, rng = ctx.p, ctx.rng
    results = []
    ranks = set()
    for _ in range(ctx.trials):
        q = random_skew_pair(p, rng)
        report = trace_zero_image_check(q)
        ranks.add(report["rank"])
        x, y = random_matrix(p, rng), random_matrix(p, rng)
        results.append(report["rank"] == report["expected"] and report["columns_trace_zero"]
                       and apply_adjust(q, x, y).trace().is_zero())
    zero_ok = apply_adjust(standard_pair(p), Mat.zeros(p, p), Mat.zeros(p, p)).is_zero()
    witness = _tally(results)
    witness["ranks"] = sorted(ranks)
    return all(results) and zero_ok, witness


def _lift_trials(ctx: CheckContext, unit: bool) -> Tuple[bool, Witness]:
    p, rng = ctx.p, ctx.rng
    total = ctx.config.suite.lift_trials
    bound = ctx.config.lifting.perturbation_bound
    results = []
    defect_traces = []
    for k in range(total):
        if k % LIFTS_PER_BODY == 0:
            q = phi(random_basis(p, rng)) if unit else random_skew_pair(p, rng)
            solver = PhiAdjustSolver(q)
        prob = perturbation_problem(q, rng, bound)
        defect_traces.append(normalized_defect(prob).trace().is_zero())
        if unit:
            alpha1, beta1 = lift_unit_pair(prob, solver)
            ok = is_unit_dual(alpha1) and is_unit_dual(beta1)
        else:
            alpha1, beta1 = lift_skew_pair(prob, solver)
            ok = True
        ok &= is_skew_dual(alpha1, beta1)
        ok &= alpha1.body == prob.alpha0.body and beta1.body == prob.beta0.body
        results.append(ok)

    zero = LiftProblem(DualMat(q.alpha), DualMat(q.beta))
    lifted = lift_unit_pair(zero) if unit else lift_skew_pair(zero)
    fixed = lifted == (zero.alpha0, zero.beta0)
    witness = _tally(results)
    witness["defect_trace_zero"] = all(defect_traces)
    witness["zero_defect_fixed"] = fixed
    return all(results) and all(defect_traces) and fixed, witness


@check("lifting.skew_lifts", "square-zero lifts of skew pairs exist", TINY)
def check_skew_lifts(ctx: CheckContext) -> Tuple[bool, Witness]:
    return _lift_trials(ctx, unit=False)


@check("lifting.unit_lifts", "square-zero lifts of unit pairs exist", TINY)
def check_unit_lifts(ctx: CheckContext) -> Tuple[bool, Witness]:
    ok, witness = _lift_trials(ctx, unit=True)
    p = ctx.p
    s = random_cyc(p, ctx.rng, 3)
    ident = Mat.identity(p)
    correction = DualMat(ident, ident * (-s / p)).power(p)
    binomial = DualMat(ident, ident * s) @ correction == DualMat.identity(p)
    witness["binomial"] = binomial
    return ok and binomial, witness


@check("lifting.naturality", "lifting commutes with conjugation", TINY)
def check_naturality(ctx: CheckContext) -> Tuple[bool, Witness]:
    p, rng = ctx.p, ctx.rng
    g = random_basis(p, rng).matrix
    results = []
    in_kernel = []
    for _ in range(ctx.trials):
        prob = perturbation_problem(random_skew_pair(p, rng), rng)
        report = naturality_check(prob, g)
        in_kernel.append(report["difference_in_kernel"])
        results.append(all(report.values()))
    witness = _tally(results)
    witness["difference_in_kernel"] = all(in_kernel)
    return all(results), witness


@check("lifting.truncated_lifts", "order-by-order lifts over K[ε]/(ε^3)", TINY, extended=True)
def check_truncated_lifts(ctx: CheckContext) -> Tuple[bool, Witness]:
    p, rng = ctx.p, ctx.rng
    bound = ctx.config.lifting.perturbation_bound
    order = 3
    results = []
    for _ in range(ctx.trials):
        q = random_skew_pair(p, rng)
        alpha = [q.alpha] + [random_matrix(p, rng, bound) for _ in range(order - 1)]
        beta = [q.beta] + [random_matrix(p, rng, bound) for _ in range(order - 1)]
        alpha1, beta1 = lift_truncated(alpha, beta)
        ok = all(m.is_zero() for m in truncated_defect(alpha1, beta1))
        ok &= alpha1[0] == q.alpha and beta1[0] == q.beta
        results.append(ok)
    return all(results), _tally(results)


@check("lifting.charpoly_collapse", "canonical equation α^p + s_p = 0", SMALL)
def check_charpoly_collapse(ctx: CheckContext) -> Tuple[bool, Witness]:
    p, rng = ctx.p, ctx.rng
    results = []
    for _ in range(ctx.trials):
        report = charpoly_collapse_check(random_skew_pair(p, rng))
        results.append(bool(report["alpha"] and report["beta"]))
    std = charpoly(standard_pair(p).alpha)
    std_ok = std == [CycNum.from_rational(p, -1)] + [CycNum.zero(p)] * (p - 1) + [CycNum.one(p)]
    witness = _tally(results)
    witness["standard_pair"] = std_ok
    return all(results) and std_ok, witness


# ----------------------------------------------------------------------
# determinism
# ----------------------------------------------------------------------
@check("determinism.rerun", "identical seed gives identical records")
def check_determinism(ctx: CheckContext) -> Tuple[bool, Witness]:
    target = REGISTRY["pairs.torus_bridge"] if ctx.p <= 7 else REGISTRY["pairs.r_r_prime"]
    first = target.execute(ctx.p, ctx.seed, ctx.config).to_dict()
    second = target.execute(ctx.p, ctx.seed, ctx.config).to_dict()
    same = json.dumps(first, sort_keys=True) == json.dumps(second, sort_keys=True)
    return same, {"target": target.name, "identical": same}
