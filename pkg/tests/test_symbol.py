"""符号代数与槽移动"""
import pytest

from src.algebra.cyclotomic import CycNum
from src.algebra.cycpoly import CycPoly
from src.algebra.linalg import charpoly
from src.algebra.symbol import (
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
    sym_inv,
    sym_mul,
    sym_pow,
    sym_trace,
)
from src.utils.exceptions import InvalidPair, ParamMismatch, SlotSingular


def _params(p=3, x=2, y=None):
    y = CycNum(p, [1, 1]) if y is None else y
    x = x if isinstance(x, CycNum) else CycNum.from_rational(p, x)
    return SymParams(p, x, y)


@pytest.mark.parametrize("p", [3, 5])
def test_defining_relations(p):
    params = _params(p)
    g, d = gamma(params), delta(params)
    assert sym_pow(g, p) == SymElem.scalar(params, params.x)
    assert sym_pow(d, p) == SymElem.scalar(params, params.y)
    assert g * d == (d * g) * CycNum.rho(p)
    assert skew_commutes(g, d)
    assert sym_trace(one(params)) == p
    assert sym_trace(g).is_zero()


def test_monomial_product_sign():
    # δγ = ρ^{-1}γδ
    params = _params()
    g, d = gamma(params), delta(params)
    assert d * g == SymElem.monomial(params, 1, 1, CycNum.rho(3, -1))


def test_inverse():
    params = _params()
    g = gamma(params)
    assert sym_mul(sym_inv(g), g) == one(params)
    assert sym_inv(g) == SymElem.monomial(params, 2, 0, params.x.inverse())
    assert sym_pow(g, -1) == sym_inv(g)


def test_regular_rep_charpoly_p3():
    params = _params(x=2)
    coeffs = charpoly(regular_rep(gamma(params)))
    # (t³ - x)³
    expected = {0: -8, 3: 12, 6: -6, 9: 1}
    assert len(coeffs) == 10
    for k, c in enumerate(coeffs):
        assert c == expected.get(k, 0)


def test_slot_move_T_scales_the_pth_power():
    params = _params(x=2)
    g, d = gamma(params), delta(params)
    f = CycPoly(3, [1, 1])
    alpha, beta = slot_move_T((g, d), f)
    assert alpha == g
    assert skew_commutes(alpha, beta)
    n = slot_power_scalar(g, f)
    # ∏(1 + ρ^i γ) = 1 + γ³
    assert n == 3
    assert sym_pow(beta, 3) == SymElem.scalar(params, n * params.y)


def test_slot_move_S_scales_the_pth_power():
    params = _params(x=2)
    g, d = gamma(params), delta(params)
    f = CycPoly(3, [2, 1])
    alpha, beta = slot_move_S((g, d), f)
    assert beta == d
    assert skew_commutes(alpha, beta)
    n = slot_power_scalar(d, f)
    assert n == params.y + 8
    assert sym_pow(alpha, 3) == SymElem.scalar(params, n * params.x)


def test_slot_moves_with_rational_parameters():
    # x = 2, y = 3, f = 1 + x：乘积公式与直接三次幂两种算法一致
    params = _params(x=2, y=CycNum.from_rational(3, 3))
    g, d = gamma(params), delta(params)
    f = CycPoly(3, [1, 1])

    _, beta = slot_move_T((g, d), f)
    n_t = slot_power_scalar(g, f)
    assert n_t == 3
    assert beta == sym_mul(poly_at(f, g), d)
    assert sym_pow(beta, 3) == SymElem.scalar(params, 9)

    alpha, _ = slot_move_S((g, d), f)
    n_s = slot_power_scalar(d, f)
    assert n_s == 4
    assert alpha == sym_mul(poly_at(f, d), g)
    assert sym_pow(alpha, 3) == SymElem.scalar(params, 8)


def test_slot_move_rejects_singular_multiplier():
    params = _params(x=-1)
    with pytest.raises(SlotSingular):
        slot_move_T((gamma(params), delta(params)), CycPoly(3, [1, 1]))


def test_slot_move_rejects_bad_pairs():
    params = _params()
    g = gamma(params)
    with pytest.raises(InvalidPair):
        slot_move_T((g, g), CycPoly(3, [2]))
    other = gamma(_params(x=5))
    with pytest.raises(ParamMismatch):
        slot_move_T((g, other), CycPoly(3, [2]))
    with pytest.raises(ParamMismatch):
        g + other


def test_norm_one_moves_keep_pth_power():
    params = _params(x=2)
    g, d = gamma(params), delta(params)
    h = CycPoly(3, [2, 1])
    f = norm_one_poly(h, g)
    shifted = poly_at(h, g * CycNum.rho(3))
    assert poly_at(f, g) == sym_mul(poly_at(h, g), sym_inv(shifted))
    assert slot_power_scalar(g, f) == 1
    _, beta = slot_move_T((g, d), f)
    assert sym_pow(beta, 3) == sym_pow(d, 3)


def test_params_validation():
    with pytest.raises(ValueError):
        SymParams(3, CycNum.zero(3), CycNum.one(3))
    with pytest.raises(ValueError):
        SymParams(3, CycNum.one(5), CycNum.one(3))


def test_dict_round_trip_and_immutability():
    params = _params()
    e = SymElem.monomial(params, 1, 2, CycNum(3, [1, -2])) + one(params)
    assert SymElem.from_dict(e.to_dict()) == e
    with pytest.raises(AttributeError):
        e.params = params
