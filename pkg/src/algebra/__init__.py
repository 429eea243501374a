"""代数值类型"""
from .cyclotomic import CycNum, cyc_add, cyc_sub, cyc_neg, cyc_mul, cyc_inv, cyc_conj, cyc_norm
from .cycpoly import (
    CycPoly, poly_mul, tau, tau_prime, ring_norm, theta, theta_inv,
    is_invertible, poly_inverse, psi, psi_prime,
)
from .linalg import (
    Mat, DualMat, LinearSolver, SpanBasis, mat_mul, mat_inv, det, rank, kernel,
    rref, solve, charpoly, eigenspace, poly_at_matrix, scalar_value, dual_mul, dual_inv,
)
from .symbol import (
    SymParams, SymElem, sym_mul, sym_trace, sym_inv, sym_pow, regular_rep,
    slot_move_T, slot_move_S, slot_power_scalar, norm_one_poly,
)

__all__ = [
    'CycNum', 'cyc_add', 'cyc_sub', 'cyc_neg', 'cyc_mul', 'cyc_inv', 'cyc_conj', 'cyc_norm',
    'CycPoly', 'poly_mul', 'tau', 'tau_prime', 'ring_norm', 'theta', 'theta_inv',
    'is_invertible', 'poly_inverse', 'psi', 'psi_prime',
    'Mat', 'DualMat', 'LinearSolver', 'SpanBasis', 'mat_mul', 'mat_inv', 'det', 'rank',
    'kernel', 'rref', 'solve', 'charpoly', 'eigenspace', 'poly_at_matrix', 'scalar_value',
    'dual_mul', 'dual_inv',
    'SymParams', 'SymElem', 'sym_mul', 'sym_trace', 'sym_inv', 'sym_pow', 'regular_rep',
    'slot_move_T', 'slot_move_S', 'slot_power_scalar', 'norm_one_poly',
]
