"""环面 T̂ / Ŝ 的结构检查：正规化子、坐标子空间、Lie 代数闭包"""
from itertools import combinations
from typing import Iterator, List, Sequence

from ..algebra.cyclotomic import CycNum
from ..algebra.cycpoly import CycPoly
from ..algebra.linalg import Mat, SpanBasis, mat_inv
from ..utils.logger import get_logger
from .pairs import r_matrix, s_matrix, t_matrix

logger = get_logger("tori")


def is_monomial(g: CycPoly) -> bool:
    """恰有一个非零系数"""
    return len(g.support()) == 1


def normalizes_diagonal(g: CycPoly, d: Sequence[CycNum]) -> bool:
    """S_g·diag(d)·S_g^{-1} 是否仍为对角阵"""
    s = s_matrix(g)
    return (s @ t_matrix(d) @ mat_inv(s)).is_diagonal()


def proper_subsets(p: int) -> Iterator[frozenset]:
    """{0..p-1} 的所有非空真子集，共 2^p - 2 个"""
    for size in range(1, p):
        for combo in combinations(range(p), size):
            yield frozenset(combo)


def coordinate_subspace_violations(p: int) -> List[tuple]:
    """
    不变子空间命题第一部分

    R 的每个元素都非零，因此没有 w_j 落在真坐标子空间里。
    逐一检查所有 2^p - 2 个真坐标子空间 V_J 和所有列 w_j。

    Returns:
        违反的 (J, j) 列表，正常应为空
    """
    r = r_matrix(p)
    supports = [r.support(j) for j in range(p)]
    violations = []
    for subset in proper_subsets(p):
        for j, supp in enumerate(supports):
            if supp <= subset:
                violations.append((sorted(subset), j))
    logger.debug(f"p={p}: checked {2 ** p - 2} coordinate subspaces, {len(violations)} violations")
    return violations


def coordinate_images(g: CycPoly) -> List[List[int]]:
    """
    不变子空间命题第二部分

    S_g 把 V_J 映成坐标子空间当且仅当 J 中各列支撑的并集大小等于 |J|。

    Returns:
        被映成坐标子空间的真子集 J 的列表
    """
    p = g.p
    s = s_matrix(g)
    supports = [s.support(i) for i in range(p)]
    hits = []
    for subset in proper_subsets(p):
        union = frozenset().union(*(supports[i] for i in subset))
        if len(union) == len(subset):
            hits.append(sorted(subset))
    return hits


def bracket(a: Mat, b: Mat) -> Mat:
    return a @ b - b @ a


def lie_closure_dimension(p: int) -> int:
    """
    对角矩阵与 R·diag·R^{-1} 在括号运算下生成的 Lie 代数的维数

    广度优先：每个新加入的基元素与全部生成元做括号，张成满 p² 维即停止。
    """
    r = r_matrix(p)
    r_inv = mat_inv(r)
    units = [Mat.diag(p, [1 if k == i else 0 for k in range(p)]) for i in range(p)]
    generators = units + [r @ e @ r_inv for e in units]

    span = SpanBasis(p, p * p)
    frontier: List[Mat] = []
    for gen in generators:
        if span.add(gen.vec()):
            frontier.append(gen)

    while frontier and not span.is_full():
        new_frontier: List[Mat] = []
        for elem in frontier:
            for gen in generators:
                br = bracket(gen, elem)
                if not br.is_zero() and span.add(br.vec()):
                    new_frontier.append(br)
                    if span.is_full():
                        break
            if span.is_full():
                break
        frontier = new_frontier
        logger.debug(f"p={p}: Lie closure span now {len(span)}")

    logger.info(f"p={p}: Lie closure dimension {len(span)} of {p * p}")
    return len(span)
