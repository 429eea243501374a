"""验证套件：注册表、运行器与报告"""
import json

import pytest

from src.models.report import FAIL, PASS, SKIP
from src.suites import (
    REGISTRY,
    SUITE_ALL,
    SUITE_EXTENDED,
    VerificationCheck,
    get_check,
    run_suite,
    run_suites,
    select_checks,
)
from src.utils.config import AppConfig
from src.utils.exceptions import UnsupportedPrime
from src.utils.sampling import derive_seed

QUICK = "cyclotomic,cycpoly,pairs.r_r_prime,pairs.torus_bridge"


class _Boom(VerificationCheck):
    def verify(self, ctx):
        raise RuntimeError("boom")


class _Reject(VerificationCheck):
    def verify(self, ctx):
        return False, {"p": ctx.p}


def test_registry_groups():
    groups = {c.group for c in REGISTRY.values()}
    assert {"cyclotomic", "cycpoly", "linalg", "pairs", "tori",
            "symbol", "filtration", "lifting", "determinism"} <= groups
    for name, chk in REGISTRY.items():
        assert name.startswith(chk.group + ".")
        assert chk.anchor
    assert get_check("pairs.phi_round_trip") is REGISTRY["pairs.phi_round_trip"]
    assert get_check("missing") is None


def test_selectors():
    everything = select_checks(SUITE_EXTENDED)
    default = select_checks(SUITE_ALL)
    assert len(everything) == len(REGISTRY)
    assert all(not c.extended for c in default)
    assert "lifting.truncated_lifts" in {c.name for c in everything} - {c.name for c in default}
    picked = select_checks("tori,lifting.skew_lifts")
    assert {c.group for c in picked} == {"tori", "lifting"}
    assert [c.name for c in picked] == [c.name for c in everything if c in picked]
    with pytest.raises(ValueError):
        select_checks("nope")
    with pytest.raises(ValueError):
        select_checks(" , ")


def test_full_suite_passes_at_p3(small_config):
    report = run_suite(3, 42, config=small_config, progress=False)
    failed = [c.to_dict() for c in report.checks if c.status == FAIL]
    assert report.passed, failed
    assert report.count(PASS) == len(select_checks(SUITE_ALL))


def test_records_follow_registry_order_and_seeds(small_config):
    report = run_suite(3, 11, QUICK, small_config, progress=False)
    assert [c.name for c in report.checks] == [c.name for c in select_checks(QUICK)]
    for record in report.checks:
        assert record.seed == derive_seed(11, record.name)


def test_same_seed_same_bytes_across_workers(small_config):
    first = run_suite(5, 7, QUICK, small_config, workers=1, progress=False)
    second = run_suite(5, 7, QUICK, small_config, workers=3, progress=False)
    assert json.dumps(first.to_dict()) == json.dumps(second.to_dict())
    other = run_suite(5, 8, QUICK, small_config, sequential=True, progress=False)
    assert other.checks[0].seed != first.checks[0].seed


def test_out_of_range_checks_are_skipped(small_config):
    report = run_suite(7, 42, "symbol.relations", small_config, progress=False)
    assert report.checks[0].status == SKIP
    assert "reason" in report.checks[0].witness
    assert report.passed


def test_unsupported_prime():
    for p in (2, 4, 17):
        with pytest.raises(UnsupportedPrime):
            run_suite(p, 42, progress=False)


def test_run_suites_and_report_dict(small_config):
    reports = run_suites([3, 5], 42, "cyclotomic", small_config, progress=False)
    assert [r.p for r in reports] == [3, 5]
    data = reports[0].to_dict()
    assert list(data) == ["schema", "p", "seed", "suite", "status", "checks"]
    assert "wall_time_ms" not in data["checks"][0]
    assert "wall_time_ms" in reports[0].to_dict(timings=True)["checks"][0]
    assert "验证报告" in reports[0].get_summary()


def test_exceptions_become_failures():
    config = AppConfig()
    record = _Boom("x.boom", "x", "anchor", (3,)).execute(3, 1, config)
    assert record.status == FAIL
    assert record.witness["error"] == "RuntimeError: boom"
    rejected = _Reject("x.reject", "x", "anchor", (3, 5)).execute(5, 1, config)
    assert rejected.status == FAIL and rejected.witness == {"p": 5}
