"""K 上的精确线性代数与对偶数矩阵"""
import pytest

from src.algebra.cyclotomic import CycNum, random_cyc
from src.algebra.cycpoly import CycPoly
from src.algebra.linalg import (
    DualMat,
    LinearSolver,
    Mat,
    SpanBasis,
    charpoly,
    det,
    dual_inv,
    eigenspace,
    kernel,
    mat_inv,
    poly_at_matrix,
    rank,
    scalar_value,
    solve,
)
from src.core.lifting import r1_determinant
from src.core.pairs import diag_rho_matrix, shift_matrix
from src.utils.exceptions import Inconsistent, NotScalar, Singular


def _random(p, rng, n=None):
    n = n or p
    return Mat(p, [[random_cyc(p, rng, 2) for _ in range(n)] for _ in range(n)])


@pytest.mark.parametrize("p", [3, 5])
def test_det_is_multiplicative_and_inverse_exact(p, rng):
    for _ in range(3):
        a, b = _random(p, rng), _random(p, rng)
        assert det(a @ b) == det(a) * det(b)
        if not det(a).is_zero():
            assert a @ mat_inv(a) == Mat.identity(p)
            assert mat_inv(a) @ a == Mat.identity(p)


def test_singular_matrix():
    p = 3
    m = Mat(p, [[1, 2, 3], [2, 4, 6], [0, 1, 1]])
    assert det(m).is_zero()
    assert rank(m) == 2
    with pytest.raises(Singular):
        mat_inv(m)


def test_rank_of_all_ones():
    assert rank(Mat(5, [[1] * 5 for _ in range(5)])) == 1
    assert rank(Mat.zeros(5, 5)) == 0
    assert rank(Mat.identity(7)) == 7


def test_kernel_spans_null_space():
    p = 3
    m = Mat(p, [[1, CycNum.rho(p), 0], [0, 0, 1]])
    basis = kernel(m)
    assert len(basis) == 1
    assert (m @ basis[0]).is_zero()


def test_solve_and_inconsistent():
    p = 5
    m = Mat(p, [[1, 1], [1, 1]])
    x = solve(m, Mat.column(p, [2, 2]))
    assert m @ x == Mat.column(p, [2, 2])
    with pytest.raises(Inconsistent):
        solve(m, Mat.column(p, [1, 2]))


def test_linear_solver_reuse(rng):
    p = 3
    m = _random(p, rng)
    solver = LinearSolver(m)
    for _ in range(3):
        b = Mat.column(p, [random_cyc(p, rng) for _ in range(p)])
        if solver.rank == p:
            assert m @ solver.solve(b) == b


def test_charpoly_of_shift_and_diag():
    p = 5
    expected = [CycNum.from_rational(p, -1)] + [CycNum.zero(p)] * (p - 1) + [CycNum.one(p)]
    assert charpoly(shift_matrix(p)) == expected
    assert charpoly(diag_rho_matrix(p)) == expected


@pytest.mark.parametrize("p", [3, 5])
def test_cayley_hamilton(p, rng):
    m = _random(p, rng)
    assert poly_at_matrix(charpoly(m), m).is_zero()
    coeffs = charpoly(m)
    assert coeffs[0] == det(m) * (-1) ** p
    assert coeffs[p - 1] == -m.trace()


def test_eigenspaces_of_shift():
    p = 5
    shift = shift_matrix(p)
    ones = eigenspace(shift, CycNum.one(p))
    assert ones == [Mat.column(p, [1] * p)]
    for k in range(1, p):
        space = eigenspace(shift, CycNum.rho(p, k))
        assert len(space) == 1
        assert shift @ space[0] == space[0] * CycNum.rho(p, k)
    assert eigenspace(Mat.identity(p), CycNum.rho(p)) == []


def test_poly_at_matrix_matches_circulant():
    p = 3
    f = CycPoly(p, [1, 2, 3])
    shift = shift_matrix(p)
    assert poly_at_matrix(f, shift) == Mat.identity(p) + shift * 2 + shift @ shift * 3


def test_scalar_value():
    p = 3
    c = CycNum(p, [1, 4])
    assert scalar_value(Mat.identity(p) * c) == c
    with pytest.raises(NotScalar):
        scalar_value(diag_rho_matrix(p))


def test_span_basis():
    p = 3
    span = SpanBasis(p, 3)

    def vec(*values):
        return Mat.column(p, list(values)).vec()

    assert span.add(vec(1, 0, 0))
    assert not span.add(vec(2, 0, 0))
    assert span.add(vec(1, 1, 0))
    assert not span.is_full()
    assert span.add(vec(0, 0, CycNum.rho(p)))
    assert span.is_full()
    assert len(span) == 3


@pytest.mark.parametrize("p", [3, 5])
def test_dual_inverse(p, rng):
    body = Mat.identity(p) + shift_matrix(p) * 2
    m = DualMat(body, _random(p, rng))
    ident = DualMat.identity(p)
    assert m @ dual_inv(m) == ident
    assert dual_inv(m) @ m == ident
    slope = _random(p, rng)
    assert dual_inv(DualMat(Mat.identity(p), slope)) == DualMat(Mat.identity(p), -slope)


def test_dual_square_zero():
    p = 3
    eps = DualMat(Mat.zeros(p, p), Mat.identity(p))
    assert (eps @ eps) == DualMat(Mat.zeros(p, p))


def test_r1_determinant_p3():
    assert r1_determinant(3) == CycNum(3, [-3, -6])


@pytest.mark.parametrize("p", [3, 5, 7, 11, 13])
def test_r1_determinant_nonzero(p):
    assert not r1_determinant(p).is_zero()


def test_immutable():
    m = Mat.identity(3)
    with pytest.raises(AttributeError):
        m.p = 5
