"""参数验证工具"""
from .exceptions import UnsupportedPrime
from .logger import get_logger

logger = get_logger("validators")

SUPPORTED_PRIMES = (3, 5, 7, 11, 13)


class PrimeValidator:
    """素数参数验证器"""

    @staticmethod
    def is_supported(p: int) -> bool:
        """
        判断 p 是否是支持的奇素数

        Args:
            p: 待检查的整数

        Returns:
            是否支持
        """
        return isinstance(p, int) and not isinstance(p, bool) and p in SUPPORTED_PRIMES

    @staticmethod
    def validate(p: int, max_prime: int = 13) -> int:
        """
        验证 p，不合法时抛出 UnsupportedPrime

        Args:
            p: 素数
            max_prime: 允许的上界（维数证书只到 7）

        Returns:
            p 本身
        """
        if not PrimeValidator.is_supported(p) or p > max_prime:
            logger.error(f"Unsupported prime: {p} (allowed: odd primes <= {max_prime})")
            raise UnsupportedPrime(f"p must be an odd prime <= {max_prime}, got {p}")
        return p
