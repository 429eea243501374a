"""配置、素数校验与种子派生"""
import pytest

from src.utils.config import AppConfig, load_config, parse_primes
from src.utils.exceptions import ConfigError, SkewPairError, UnsupportedPrime
from src.utils.sampling import derive_seed, make_rng, small_ints
from src.utils.validators import PrimeValidator


def test_default_config_file(monkeypatch):
    monkeypatch.delenv("SKEWPAIR_PRIMES", raising=False)
    config = load_config()
    assert config.suite.primes == [3, 5]
    assert config.suite.seed == 42
    assert config.filtration.max_prime == 7
    assert config.report.format == "json"


def test_env_overrides_primes(monkeypatch):
    monkeypatch.setenv("SKEWPAIR_PRIMES", "5, 7")
    assert load_config().suite.primes == [5, 7]


def test_invalid_config(tmp_path):
    path = tmp_path / "bad.yaml"
    path.write_text("suite:\n  trials: 0\n", encoding="utf-8")
    with pytest.raises(ConfigError):
        load_config(path)
    path.write_text("report:\n  format: xml\n", encoding="utf-8")
    with pytest.raises(ConfigError):
        load_config(path)
    with pytest.raises(ConfigError):
        load_config(tmp_path / "absent.yaml")


def test_partial_config_keeps_defaults(tmp_path, monkeypatch):
    monkeypatch.delenv("SKEWPAIR_PRIMES", raising=False)
    path = tmp_path / "partial.yaml"
    path.write_text("suite:\n  seed: 9\n", encoding="utf-8")
    config = load_config(path)
    assert config.suite.seed == 9
    assert config.suite.trials == AppConfig().suite.trials


def test_parse_primes():
    assert parse_primes("3,5,,7") == [3, 5, 7]
    with pytest.raises(ConfigError):
        parse_primes("3,five")


def test_prime_validator():
    for p in (3, 5, 7, 11, 13):
        assert PrimeValidator.validate(p) == p
    for p in (2, 9, 17, True, 3.0):
        assert not PrimeValidator.is_supported(p)
    with pytest.raises(UnsupportedPrime):
        PrimeValidator.validate(11, max_prime=7)
    assert issubclass(UnsupportedPrime, SkewPairError)
    assert issubclass(SkewPairError, ValueError)


def test_derived_seeds():
    assert derive_seed(42, "pairs.phi_round_trip") == derive_seed(42, "pairs.phi_round_trip")
    assert derive_seed(42, "a") != derive_seed(42, "b")
    assert derive_seed(42, "a") != derive_seed(43, "a")
    assert 0 <= derive_seed(0, "x") < 2 ** 64
    values = small_ints(make_rng(1), 50, 3)
    assert all(isinstance(v, int) and -3 <= v <= 3 for v in values)
    assert values == small_ints(make_rng(1), 50, 3)
