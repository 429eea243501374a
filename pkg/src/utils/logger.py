"""日志工具"""
import sys
import threading
from pathlib import Path
from typing import Optional

from loguru import logger

_CONSOLE_FORMAT = (
    "<green>{time:YYYY-MM-DD HH:mm:ss}</green> | <level>{level: <8}</level> | "
    "<cyan>{extra[component]}</cyan>:<cyan>{function}</cyan>:<cyan>{line}</cyan> - <level>{message}</level>"
)
_FILE_FORMAT = "{time:YYYY-MM-DD HH:mm:ss} | {level: <8} | {extra[component]}:{function}:{line} - {message}"

_lock = threading.Lock()
_configured = False


def configure_logging(
    level: str = "WARNING",
    log_dir: Optional[str] = None,
    console: bool = True,
) -> None:
    """
    安装日志输出（每个进程调用一次即可，重复调用会覆盖之前的设置）

    stdout 留给报告和 fixture 输出，日志只写 stderr 和文件。

    Args:
        level: 控制台日志级别
        log_dir: 日志目录，为 None 时不写文件
        console: 是否输出到 stderr
    """
    global _configured
    with _lock:
        logger.remove()
        logger.configure(extra={"component": "skewpair"})

        if console:
            logger.add(sys.stderr, format=_CONSOLE_FORMAT, level=level, colorize=True)

        if log_dir:
            log_path = Path(log_dir)
            log_path.mkdir(parents=True, exist_ok=True)

            # 文件输出 - 所有级别
            logger.add(
                log_path / "app.log",
                format=_FILE_FORMAT,
                level="DEBUG",
                rotation="10 MB",
                retention="30 days",
                compression="zip",
                encoding="utf-8",
                enqueue=True,
            )

            # 错误日志单独文件
            logger.add(
                log_path / "error.log",
                format=_FILE_FORMAT,
                level="ERROR",
                rotation="10 MB",
                retention="90 days",
                compression="zip",
                encoding="utf-8",
                enqueue=True,
            )

        _configured = True


def get_logger(name: Optional[str] = None):
    """
    获取带组件名的logger

    Args:
        name: 组件名称（可选）

    Returns:
        绑定了 component 字段的logger实例
    """
    if not _configured:
        configure_logging()
    return logger.bind(component=name or "skewpair")
