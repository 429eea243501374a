"""平方零提升与逐阶提升"""
import pytest

from src.algebra.cyclotomic import random_cyc
from src.algebra.linalg import DualMat, Mat
from src.core.lifting import (
    PhiAdjustSolver,
    apply_adjust,
    charpoly_collapse_check,
    conjugate_problem,
    is_skew_dual,
    is_unit_dual,
    lift_skew_pair,
    lift_truncated,
    lift_unit_pair,
    naturality_check,
    normalized_defect,
    perturbation_problem,
    trace_zero_image_check,
    truncated_defect,
)
from src.core.pairs import diag_rho_matrix, phi, sigma_matrix
from src.models.lift import LiftProblem
from src.models.pair import SkewPair
from src.utils.exceptions import InvalidPair, NoSolution


def _random_mat(p, rng):
    return Mat(p, [[random_cyc(p, rng, 2) for _ in range(p)] for _ in range(p)])


@pytest.mark.parametrize("p", [3, 5])
def test_image_is_trace_zero_subspace(p, mixed_basis):
    result = trace_zero_image_check(phi(mixed_basis(p)))
    assert result["rank"] == result["expected"] == p * p - 1
    assert result["columns_trace_zero"]


def test_solver_rejects_nonzero_trace(mixed_basis):
    q = phi(mixed_basis(3))
    with pytest.raises(NoSolution):
        PhiAdjustSolver(q).solve(Mat.identity(3))


@pytest.mark.parametrize("p", [3, 5])
def test_skew_lift(p, rng, mixed_basis):
    q = phi(mixed_basis(p))
    solver = PhiAdjustSolver(q)
    for _ in range(3):
        prob = perturbation_problem(q, rng)
        assert normalized_defect(prob).trace().is_zero()
        x, y = solver.solve(-normalized_defect(prob))
        assert apply_adjust(q, x, y) == -normalized_defect(prob)
        alpha, beta = lift_skew_pair(prob, solver)
        assert is_skew_dual(alpha, beta)
        assert alpha.body == q.alpha and beta.body == q.beta


@pytest.mark.parametrize("p", [3, 5])
def test_unit_lift(p, rng, upper_basis):
    q = phi(upper_basis(p))
    prob = perturbation_problem(q, rng)
    alpha, beta = lift_unit_pair(prob)
    assert is_skew_dual(alpha, beta)
    assert is_unit_dual(alpha) and is_unit_dual(beta)


def test_exact_pair_is_returned_unchanged():
    p = 3
    alpha = DualMat(diag_rho_matrix(p))
    beta = DualMat(sigma_matrix(p).transpose())
    lifted = lift_skew_pair(LiftProblem(alpha, beta))
    assert lifted[0] == alpha and lifted[1] == beta


def test_invalid_lift_inputs():
    p = 3
    with pytest.raises(InvalidPair):
        LiftProblem(DualMat(Mat.identity(p)), DualMat(sigma_matrix(p)))
    # 主体斜交换，但 α^p = 8I 不是单位
    prob = LiftProblem(DualMat(diag_rho_matrix(p) * 2), DualMat(sigma_matrix(p).transpose()))
    with pytest.raises(InvalidPair):
        lift_unit_pair(prob)


@pytest.mark.parametrize("p", [3, 5])
def test_lift_is_natural_under_conjugation(p, rng, mixed_basis, upper_basis):
    prob = perturbation_problem(phi(mixed_basis(p)), rng)
    g = upper_basis(p).matrix
    moved = conjugate_problem(prob, g)
    assert moved.alpha0.body != prob.alpha0.body
    report = naturality_check(prob, g)
    assert report == {"bodies_fixed": True, "skew": True, "difference_in_kernel": True}


def test_conjugating_by_identity_gives_the_same_lift(rng, mixed_basis):
    prob = perturbation_problem(phi(mixed_basis(3)), rng)
    moved = conjugate_problem(prob, Mat.identity(3))
    assert lift_skew_pair(moved) == lift_skew_pair(prob)
    assert all(naturality_check(prob, Mat.identity(3)).values())


def test_lift_problem_dict_round_trip(rng, mixed_basis):
    prob = perturbation_problem(phi(mixed_basis(3)), rng)
    again = LiftProblem.from_dict(prob.to_dict())
    assert again.alpha0 == prob.alpha0 and again.beta0 == prob.beta0


@pytest.mark.parametrize("terms", [2, 3, 4])
def test_truncated_lift(terms, rng, mixed_basis):
    p = 3
    q = phi(mixed_basis(p))
    alpha = [q.alpha] + [_random_mat(p, rng) for _ in range(terms - 1)]
    beta = [q.beta] + [_random_mat(p, rng) for _ in range(terms - 1)]
    lifted_a, lifted_b = lift_truncated(alpha, beta)
    assert len(lifted_a) == terms
    assert lifted_a[0] == q.alpha and lifted_b[0] == q.beta
    assert all(m.is_zero() for m in truncated_defect(lifted_a, lifted_b))


def test_truncated_lift_validation(mixed_basis):
    q = phi(mixed_basis(3))
    with pytest.raises(ValueError):
        lift_truncated([q.alpha], [q.beta, q.beta])
    with pytest.raises(ValueError):
        lift_truncated([], [])
    with pytest.raises(InvalidPair):
        lift_truncated([q.alpha, q.alpha], [q.alpha, q.alpha])


@pytest.mark.parametrize("p", [3, 5])
def test_charpoly_collapse(p, mixed_basis):
    q = phi(mixed_basis(p))
    report = charpoly_collapse_check(q)
    assert report["alpha"] and report["beta"]
    scaled = SkewPair(q.alpha * 2, q.beta)
    assert charpoly_collapse_check(scaled)["alpha"]
