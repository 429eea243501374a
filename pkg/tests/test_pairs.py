"""Φ / Φ⁻¹、σ 与 r、环面 T̂ 与 Ŝ"""
import pytest

from src.algebra.cyclotomic import CycNum
from src.algebra.cycpoly import CycPoly, psi, psi_prime, random_poly, tau, theta
from src.algebra.linalg import Mat, mat_inv
from src.core.pairs import (
    act_r,
    act_S_on_pair,
    act_sigma,
    act_T_on_pair,
    conjugate_S_on_pair,
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
    shift_vector,
    sigma_matrix,
    sigma_pair,
    standard_pair,
    t_matrix,
    t_matrix_of,
    torus_S,
    torus_T,
    w_basis,
)
from src.models.pair import Basis, SkewPair, UnitSkewPair, same_in_pbar
from src.utils.exceptions import DegeneratePair, InvalidPair, NotInvertible, Singular


@pytest.mark.parametrize("p", [3, 5, 7, 11, 13])
def test_r_times_r_prime_is_p(p):
    r, rp = r_matrix(p), r_prime_matrix(p)
    assert r @ rp == Mat.identity(p) * p
    assert all(r.array[0, j] == 1 and r.array[j, 0] == 1 for j in range(p))


def test_phi_of_identity_is_standard_pair():
    p = 5
    q = phi(Basis(Mat.identity(p)))
    assert q == standard_pair(p)
    assert q.alpha == diag_rho_matrix(p)


@pytest.mark.parametrize("p", [3, 5, 7])
def test_phi_round_trip(p, mixed_basis, upper_basis):
    for b in (mixed_basis(p), upper_basis(p), Basis(Mat.identity(p))):
        q = phi(b)
        assert phi_inverse(q) == b
        assert phi(phi_inverse(q)) == q


def test_phi_ignores_scaling(mixed_basis):
    p = 5
    b = mixed_basis(p)
    scaled = Basis(b.matrix * CycNum(p, [3, 0, 1]))
    assert scaled == b
    assert phi(scaled) == phi(b)


def test_phi_inverse_rejects_repeated_eigenvalue():
    p = 3
    alpha = Mat.diag(p, [1, 1, CycNum.rho(p)])
    with pytest.raises((DegeneratePair, InvalidPair)):
        phi_inverse(UnitSkewPair(alpha, sigma_matrix(p).transpose()))


def test_singular_basis_rejected():
    with pytest.raises(Singular):
        Basis(Mat(3, [[1, 1, 0], [1, 1, 0], [0, 0, 1]]))


@pytest.mark.parametrize("p", [3, 5, 7])
def test_sigma_and_r_equivariance(p, mixed_basis):
    b = mixed_basis(p)
    q = phi(b)
    assert phi(act_sigma(b)) == sigma_pair(q)
    assert phi(act_r(b)) == r_pair(q)
    assert act_sigma(act_r(b)) == act_r(act_sigma(b))


def test_sigma_shifts_columns(upper_basis):
    p = 5
    b = upper_basis(p)
    cols = b.matrix.columns()
    assert act_sigma(b) == Basis(Mat.from_columns(p, [cols[-1]] + cols[:-1]))


@pytest.mark.parametrize("p", [3, 5])
def test_sigma_and_r_have_order_p(p, mixed_basis):
    b = mixed_basis(p)
    s, r = b, b
    for _ in range(p):
        s, r = act_sigma(s), act_r(r)
    assert s == b and r == b


@pytest.mark.parametrize("p", [3, 5, 7])
def test_w_basis_eigenvectors(p, mixed_basis):
    b = mixed_basis(p)
    q = phi(b)
    w = w_basis(b).matrix.columns()
    raw = (b.matrix @ r_matrix(p)).columns()
    for j in range(p):
        assert q.beta @ raw[j] == raw[j] * CycNum.rho(p, j)
        assert q.alpha @ raw[j] == raw[(j - 1) % p]
    assert len(w) == p


@pytest.mark.parametrize("p", [3, 5, 7])
def test_torus_bridge(p, rng):
    r = r_matrix(p)
    for _ in range(3):
        g = random_poly(p, rng, 2)
        assert r @ t_matrix_of(g) @ mat_inv(r) == s_matrix(g)
        assert s_matrix_from_eigenvalues(theta(g)) == s_matrix(g)
    assert s_matrix(CycPoly.x_power(p, p - 1)) == sigma_matrix(p)


@pytest.mark.parametrize("p", [3, 5])
def test_normalizing_identities(p, rng):
    d, sigma = diag_rho_matrix(p), sigma_matrix(p)
    g = random_poly(p, rng, 2)
    z = theta(g)
    assert mat_inv(d) @ s_matrix(g) @ d == s_matrix(tau(g))
    assert mat_inv(sigma) @ t_matrix(z) @ sigma == t_matrix(shift_vector(z))
    assert (mat_inv(d) @ s_matrix_from_eigenvalues(z) @ d
            == s_matrix_from_eigenvalues(shift_vector(z)))


@pytest.mark.parametrize("p", [3, 5, 7])
def test_toral_actions_commute_with_phi(p, rng, mixed_basis):
    b = mixed_basis(p)
    q = phi(b)
    for _ in range(3):
        g = random_poly(p, rng, 2, invertible=True)
        assert phi(torus_T(b, g)) == act_T_on_pair(q, g)
        assert phi(torus_S(b, g)) == act_S_on_pair(q, g)
        assert act_T_on_pair(q, g) == conjugate_T_on_pair(q, g)
        assert act_S_on_pair(q, g) == conjugate_S_on_pair(q, g)


@pytest.mark.parametrize("p", [3, 5])
def test_tau_equivariance(p, rng, mixed_basis):
    q = phi(mixed_basis(p))
    g = random_poly(p, rng, 2, invertible=True)
    assert sigma_pair(act_T_on_pair(q, g)) == act_T_on_pair(sigma_pair(q), tau(g))
    assert r_pair(act_S_on_pair(q, g)) == act_S_on_pair(r_pair(q), tau(g))
    assert r_pair(act_T_on_pair(q, g)) == act_T_on_pair(r_pair(q), g)
    assert sigma_pair(act_S_on_pair(q, g)) == act_S_on_pair(sigma_pair(q), g)


@pytest.mark.parametrize("p", [3, 5])
def test_qtoral_projection(p, rng, upper_basis):
    b = upper_basis(p)
    q = phi(b)
    g = random_poly(p, rng, 2, invertible=True)
    assert same_in_pbar(phi(torus_T(b, g)), move_T(q, psi(g)))
    assert same_in_pbar(phi(torus_S(b, g)), move_S(q, psi_prime(g)))


def test_torus_rejects_non_invertible():
    p = 3
    with pytest.raises(NotInvertible):
        torus_T(Basis(Mat.identity(p)), CycPoly(p, [1, 1, 1]))


def test_torus_by_constants_is_trivial(mixed_basis):
    p = 5
    b = mixed_basis(p)
    c = CycPoly.constant(p, 4)
    assert torus_T(b, c) == b
    assert torus_S(b, c) == b
    assert torus_S(b, CycPoly.x_power(p, p - 1)) == act_sigma(b)
    assert torus_T(b, CycPoly.x_power(p, 1)) == act_r(b)


def test_galois_orbit_has_p_squared_points(mixed_basis):
    p = 3
    b = mixed_basis(p)
    q = phi(b)
    keys = set()
    row = b
    for _ in range(p):
        point = row
        for _ in range(p):
            image = phi(point)
            keys.add(tuple(image.alpha.array.flat) + tuple(image.beta.array.flat))
            assert same_in_pbar(image, q)
            point = act_r(point)
        row = act_sigma(row)
    assert len(keys) == p * p


def test_skew_pair_validation():
    p = 3
    with pytest.raises(InvalidPair):
        SkewPair(Mat.identity(p), sigma_matrix(p))
    with pytest.raises(InvalidPair):
        UnitSkewPair(diag_rho_matrix(p) * 2, sigma_matrix(p).transpose())
    SkewPair(diag_rho_matrix(p) * 2, sigma_matrix(p).transpose())
