"""验证报告模型"""
from dataclasses import dataclass, field
from typing import Any, Dict, List, Optional

REPORT_SCHEMA = "skewpair-report/1"

PASS = "pass"
FAIL = "fail"
SKIP = "skip"


@dataclass
class CheckRecord:
    """单项检查结果"""

    name: str
    group: str
    anchor: str
    status: str
    seed: int
    witness: Dict[str, Any] = field(default_factory=dict)
    wall_time_ms: Optional[float] = None

    @property
    def passed(self) -> bool:
        return self.status != FAIL

    def to_dict(self, timings: bool = False) -> dict:
        """转换为字典"""
        data = {
            'name': self.name,
            'group': self.group,
            'anchor': self.anchor,
            'status': self.status,
            'seed': self.seed,
            'witness': self.witness,
        }
        if timings and self.wall_time_ms is not None:
            data['wall_time_ms'] = round(self.wall_time_ms, 3)
        return data

    def __repr__(self) -> str:
        return f"CheckRecord({self.name}, {self.status})"


@dataclass
class SuiteReport:
    """一个素数 p 上的整套验证报告"""

    p: int
    seed: int
    suite: str
    checks: List[CheckRecord] = field(default_factory=list)

    @property
    def status(self) -> str:
        return FAIL if any(c.status == FAIL for c in self.checks) else PASS

    @property
    def passed(self) -> bool:
        return self.status == PASS

    def count(self, status: str) -> int:
        return sum(1 for c in self.checks if c.status == status)

    def to_dict(self, timings: bool = False) -> dict:
        """转换为字典（字段顺序固定）"""
        return {
            'schema': REPORT_SCHEMA,
            'p': self.p,
            'seed': self.seed,
            'suite': self.suite,
            'status': self.status,
            'checks': [c.to_dict(timings) for c in self.checks],
        }

    def get_summary(self) -> str:
        """获取文本摘要"""
        lines = [
            '=' * 60,
            f"验证报告 - p = {self.p}, seed = {self.seed}, suite = {self.suite}",
            '=' * 60,
        ]
        for c in self.checks:
            mark = {PASS: '✓', FAIL: '✗', SKIP: '-'}[c.status]
            lines.append(f"  {mark} {c.name:<34} [{c.group}] {c.anchor}")
            if c.status == FAIL and 'error' in c.witness:
                lines.append(f"      {c.witness['error']}")
        lines += [
            '',
            f"  通过: {self.count(PASS)}  失败: {self.count(FAIL)}  跳过: {self.count(SKIP)}",
            f"  总体: {'✓ 通过' if self.passed else '✗ 失败'}",
            '=' * 60,
        ]
        return '\n'.join(lines)

    def __repr__(self) -> str:
        return f"SuiteReport(p={self.p}, seed={self.seed}, {self.status})"
