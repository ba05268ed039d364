"""
Loguru sinks of a CLI run.

Records go to stderr, since stdout carries the reports, and optionally to a
rotating file. Each record carries the run ID and the emitting component.
"""

import contextvars
import os
import sys
from typing import Any, Optional

from loguru import logger

from app.config.settings import settings

LOG_LEVELS = ("TRACE", "DEBUG", "INFO", "SUCCESS", "WARNING", "ERROR", "CRITICAL")

run_id_var = contextvars.ContextVar[Optional[str]]("run_id", default=None)

text_format = (
    "<green>{time:YYYY-MM-DD HH:mm:ss}</green> | "
    "<level>{level: <8}</level> | "
    "<cyan>{extra[run_id]}</cyan> | "
    "<blue>{extra[context]}</blue> | "
    "<level>{message}</level>"
)

json_format = (
    "{{"
    '"timestamp": "{time:YYYY-MM-DD HH:mm:ss}", '
    '"level": "{level}", '
    '"run_id": "{extra[run_id]}", '
    '"context": "{extra[context]}", '
    '"message": "{message}"'
    "}}"
)


def _stderr_sink(message: Any) -> None:
    # looked up per record, so a replaced sys.stderr still receives it
    sys.stderr.write(message)


def configure_logger(level: Optional[str] = None) -> str:
    """
    Replace every sink with the stderr sink (and the file sink when enabled).

    Args:
        level: Minimum level; ``settings.LOG_LEVEL`` when None

    Returns:
        The level the sinks were installed with
    """
    logger.remove()
    log_format = json_format if settings.LOG_FORMAT_JSON else text_format
    log_level = (level or settings.LOG_LEVEL).upper()

    logger.add(_stderr_sink, format=log_format, level=log_level, colorize=not settings.LOG_FORMAT_JSON)
    if settings.LOG_TO_FILE and settings.LOG_FILE_PATH:
        os.makedirs(os.path.dirname(settings.LOG_FILE_PATH) or ".", exist_ok=True)
        logger.add(
            settings.LOG_FILE_PATH,
            format=log_format,
            level=log_level,
            rotation="10 MB",
            retention="30 days",
            compression="zip",
        )
    return log_level


configure_logger()


def set_run_id(id_value: Optional[str]) -> None:
    if id_value:
        run_id_var.set(id_value)


def get_run_id() -> Optional[str]:
    return run_id_var.get()


def get_logger(name: Optional[str] = None) -> Any:
    """Logger bound to ``name`` and the current run ID"""
    return logger.bind(context=name, run_id=get_run_id() or "no-run-id")
