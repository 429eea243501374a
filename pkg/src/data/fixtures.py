"""JSON 夹具读写

每个夹具是一个对象，"kind" 字段说明类型，其余字段与模型的 to_dict 相同。
有理数一律写成 "n/d" 字符串。
"""
import json
from pathlib import Path
from typing import Any, Callable, Dict, TextIO, Tuple, Union

from ..algebra.cycpoly import CycPoly
from ..algebra.linalg import DualMat
from ..algebra.symbol import SymElem, SymParams
from ..models.lift import LiftProblem
from ..models.pair import Basis, SkewPair, UnitSkewPair
from ..utils.exceptions import FixtureError
from ..utils.logger import get_logger

logger = get_logger("fixtures")

PathLike = Union[str, Path]


def parse_fixture(text: str, source: str = "<input>") -> Dict[str, Any]:
    """
    解析 JSON 文本

    Args:
        text: JSON 文本
        source: 出错时显示的来源

    Returns:
        顶层对象
    """
    try:
        data = json.loads(text)
    except json.JSONDecodeError as e:
        raise FixtureError(f"{source}:{e.lineno}:{e.colno}: {e.msg}") from e
    if not isinstance(data, dict):
        raise FixtureError(f"{source}: fixture must be a JSON object")
    return data


def load_fixture(path: PathLike) -> Dict[str, Any]:
    path = Path(path)
    if not path.exists():
        raise FixtureError(f"fixture not found: {path}")
    with open(path, "r", encoding="utf-8") as f:
        return parse_fixture(f.read(), str(path))


def read_fixture(stream: TextIO, source: str = "<stdin>") -> Dict[str, Any]:
    return parse_fixture(stream.read(), source)


def dump_fixture(data: Dict[str, Any]) -> str:
    """规范化输出：键排序、两空格缩进、结尾换行"""
    return json.dumps(data, indent=2, sort_keys=True, ensure_ascii=False) + "\n"


def save_fixture(data: Dict[str, Any], path: PathLike) -> None:
    path = Path(path)
    path.parent.mkdir(parents=True, exist_ok=True)
    with open(path, "w", encoding="utf-8") as f:
        f.write(dump_fixture(data))
    logger.debug(f"fixture written: {path}")


# ----------------------------------------------------------------------
# 编码
# ----------------------------------------------------------------------
def basis_fixture(b: Basis) -> Dict[str, Any]:
    return {"kind": "basis", **b.to_dict()}


def pair_fixture(q: SkewPair) -> Dict[str, Any]:
    kind = "unit_pair" if isinstance(q, UnitSkewPair) else "pair"
    return {"kind": kind, **q.to_dict()}


def poly_fixture(f: CycPoly) -> Dict[str, Any]:
    return {"kind": "poly", "p": f.p, "coeffs": f.to_json()}


def lift_fixture(prob: LiftProblem) -> Dict[str, Any]:
    return {"kind": "lift", **prob.to_dict()}


def lifted_fixture(alpha: DualMat, beta: DualMat) -> Dict[str, Any]:
    return {"kind": "lifted_pair", "p": alpha.p, "alpha": alpha.to_json(), "beta": beta.to_json()}


def symbol_pair_fixture(alpha: SymElem, beta: SymElem) -> Dict[str, Any]:
    return {"kind": "symbol_pair", **alpha.params.to_dict(),
            "alpha": alpha.to_dict()["coeffs"], "beta": beta.to_dict()["coeffs"]}


# ----------------------------------------------------------------------
# 解码
# ----------------------------------------------------------------------
def _structural(kind: str, builder: Callable[[Dict[str, Any]], Any]) -> Callable[[Dict[str, Any]], Any]:
    """键缺失、类型错误等结构问题统一转为 FixtureError，领域错误原样抛出"""
    def decode(data: Dict[str, Any]) -> Any:
        found = data.get("kind", kind)
        if found != kind:
            raise FixtureError(f"expected a {kind!r} fixture, got {found!r}")
        try:
            return builder(data)
        except (KeyError, TypeError, IndexError) as e:
            raise FixtureError(f"malformed {kind} fixture: {type(e).__name__}: {e}") from e
        except ValueError as e:
            if type(e) is ValueError:
                raise FixtureError(f"malformed {kind} fixture: {e}") from e
            raise
    return decode


decode_basis = _structural("basis", Basis.from_dict)
decode_pair = _structural("pair", SkewPair.from_dict)
decode_unit_pair = _structural("unit_pair", UnitSkewPair.from_dict)
decode_poly = _structural("poly", lambda d: CycPoly.from_json(int(d["p"]), d["coeffs"]))
decode_lift = _structural("lift", LiftProblem.from_dict)


def _lifted(data: Dict[str, Any]) -> Tuple[DualMat, DualMat]:
    p = int(data["p"])
    return DualMat.from_json(p, data["alpha"]), DualMat.from_json(p, data["beta"])


def _symbol_pair(data: Dict[str, Any]) -> Tuple[SymElem, SymElem]:
    params = SymParams.from_dict(data)
    alpha = SymElem.from_dict({**params.to_dict(), "coeffs": data["alpha"]})
    beta = SymElem.from_dict({**params.to_dict(), "coeffs": data["beta"]})
    return alpha, beta


decode_lifted = _structural("lifted_pair", _lifted)
decode_symbol_pair = _structural("symbol_pair", _symbol_pair)


def decode_any_pair(data: Dict[str, Any]) -> SkewPair:
    """unit_pair 或 pair 都接受"""
    if data.get("kind") == "unit_pair":
        return decode_unit_pair(data)
    return decode_pair(data)

