"""核心算法模块"""
from .pairs import (
    phi, phi_inverse, standard_pair, act_sigma, act_r, sigma_pair, r_pair,
    r_matrix, r_prime_matrix, sigma_matrix, shift_matrix, diag_rho_matrix,
    t_matrix, t_matrix_of, s_matrix, s_matrix_from_eigenvalues, shift_vector,
    torus_T, torus_S, act_T_on_pair, act_S_on_pair, conjugate_T_on_pair, conjugate_S_on_pair,
    move_T, move_S, w_basis,
)
from .tori import (
    is_monomial, normalizes_diagonal, coordinate_subspace_violations, coordinate_images,
    lie_closure_dimension,
)
from .filtration import (
    orbit_point, jacobian_rank, orbit_jacobian_rank, base_points,
    stabilizer_identity_checks, p2_image, p2_fiber_recover,
)
from .lifting import (
    phi_adjust_map, apply_adjust, PhiAdjustSolver, normalized_defect,
    lift_skew_pair, lift_unit_pair, lift_truncated, charpoly_collapse_check,
    r1_matrix, r1_determinant, trace_zero_image_check, conjugate_problem, naturality_check,
)

__all__ = [
    'phi', 'phi_inverse', 'standard_pair', 'act_sigma', 'act_r', 'sigma_pair', 'r_pair',
    'r_matrix', 'r_prime_matrix', 'sigma_matrix', 'shift_matrix', 'diag_rho_matrix',
    't_matrix', 't_matrix_of', 's_matrix', 's_matrix_from_eigenvalues', 'shift_vector',
    'torus_T', 'torus_S', 'act_T_on_pair', 'act_S_on_pair', 'conjugate_T_on_pair',
    'conjugate_S_on_pair', 'move_T', 'move_S', 'w_basis',
    'is_monomial', 'normalizes_diagonal', 'coordinate_subspace_violations', 'coordinate_images',
    'lie_closure_dimension',
    'orbit_point', 'jacobian_rank', 'orbit_jacobian_rank', 'base_points',
    'stabilizer_identity_checks', 'p2_image', 'p2_fiber_recover',
    'phi_adjust_map', 'apply_adjust', 'PhiAdjustSolver', 'normalized_defect',
    'lift_skew_pair', 'lift_unit_pair', 'lift_truncated', 'charpoly_collapse_check',
    'r1_matrix', 'r1_determinant', 'trace_zero_image_check', 'conjugate_problem',
    'naturality_check',
]
