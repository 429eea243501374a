"""验证套件"""
from .base import REGISTRY, CheckContext, VerificationCheck, check, get_check
from .runner import SUITE_ALL, SUITE_EXTENDED, run_suite, run_suites, select_checks

__all__ = [
    'REGISTRY',
    'CheckContext',
    'VerificationCheck',
    'check',
    'get_check',
    'SUITE_ALL',
    'SUITE_EXTENDED',
    'run_suite',
    'run_suites',
    'select_checks',
]
