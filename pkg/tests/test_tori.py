"""环面的正规化子、坐标子空间与 Lie 闭包"""
import pytest

from src.algebra.cycpoly import CycPoly, theta
from src.core.tori import (
    coordinate_images,
    coordinate_subspace_violations,
    is_monomial,
    lie_closure_dimension,
    normalizes_diagonal,
    proper_subsets,
)


def test_proper_subsets_count():
    for p in (3, 5):
        subsets = list(proper_subsets(p))
        assert len(subsets) == 2 ** p - 2
        assert len(set(subsets)) == len(subsets)
        assert frozenset(range(p)) not in subsets


@pytest.mark.parametrize("p", [3, 5])
def test_only_monomials_normalize_the_diagonal(p):
    d = theta(CycPoly.x_power(p, 1))
    for k in range(p):
        g = CycPoly.x_power(p, k, 3)
        assert is_monomial(g)
        assert normalizes_diagonal(g, d)
    g = CycPoly(p, [1, 1])
    assert not is_monomial(g)
    assert not normalizes_diagonal(g, d)


@pytest.mark.parametrize("p", [3, 5, 7, 11])
def test_no_w_column_in_a_coordinate_subspace(p):
    assert coordinate_subspace_violations(p) == []


def test_coordinate_images():
    p = 5
    # 置换矩阵把每个坐标子空间都映成坐标子空间
    assert len(coordinate_images(CycPoly.x_power(p, 2))) == 2 ** p - 2
    assert coordinate_images(CycPoly(p, [1, 1])) == []
    assert coordinate_images(CycPoly(p, [2, 0, 1])) == []


@pytest.mark.parametrize("p", [3, 5])
def test_lie_closure_is_full(p):
    assert lie_closure_dimension(p) == p * p


@pytest.mark.slow
def test_lie_closure_is_full_p7():
    assert lie_closure_dimension(7) == 49
