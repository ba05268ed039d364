"""
Run identifiers and context-bound loggers.

Every CLI invocation gets a run ID; fuzz harnesses additionally bind the
case index so a failing case can be found in the log.
"""
import uuid
from typing import TYPE_CHECKING, Any, Optional

from app.utils.logger import get_logger, set_run_id

if TYPE_CHECKING:
    from loguru import Logger


def generate_run_id() -> str:
    """
    Generate a unique run ID using UUID4.

    Returns:
        A string containing a unique run ID
    """
    return str(uuid.uuid4())


class _TraceLogger:
    """Resolves the run ID when a record is emitted, not when the module is imported."""

    def __init__(self, name: Optional[str]) -> None:
        self._name = name

    def bind(self, **kwargs: Any) -> "Logger":
        return get_logger(self._name).bind(**kwargs)

    def __getattr__(self, item: str) -> Any:
        return getattr(get_logger(self._name), item)


def get_trace_logger(name: Optional[str] = None) -> "Logger":
    """
    Get a logger that includes the current run ID.

    Module-level loggers are created at import time, before any run ID is
    set, so the returned proxy binds the ID on every call.

    Args:
        name: The logger name (e.g., component name)

    Returns:
        A logger proxy with the run ID bound per record
    """
    return _TraceLogger(name)  # type: ignore[return-value]


def set_trace_context(run_id: Optional[str] = None) -> str:
    """
    Set the tracing context for one CLI invocation.

    Args:
        run_id: An explicit run ID, or None to generate one

    Returns:
        The run ID that was set
    """
    run_id = run_id or generate_run_id()
    set_run_id(run_id)
    return run_id
