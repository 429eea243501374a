"""工具模块"""
from .logger import get_logger, configure_logging
from .config import AppConfig, load_config
from .validators import PrimeValidator, SUPPORTED_PRIMES
from .sampling import derive_seed, make_rng, small_ints
from . import exceptions

__all__ = [
    'get_logger', 'configure_logging', 'AppConfig', 'load_config',
    'PrimeValidator', 'SUPPORTED_PRIMES', 'derive_seed', 'make_rng', 'small_ints', 'exceptions',
]
