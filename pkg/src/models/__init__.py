"""数据模型模块"""
from .pair import Basis, SkewPair, UnitSkewPair, same_in_pbar, projective_normal
from .lift import LiftProblem
from .certificate import OrbitSpec, DimCertificate
from .report import CheckRecord, SuiteReport, REPORT_SCHEMA, PASS, FAIL, SKIP

__all__ = [
    'Basis', 'SkewPair', 'UnitSkewPair', 'same_in_pbar', 'projective_normal',
    'LiftProblem', 'OrbitSpec', 'DimCertificate',
    'CheckRecord', 'SuiteReport', 'REPORT_SCHEMA', 'PASS', 'FAIL', 'SKIP',
]
