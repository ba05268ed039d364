"""
Central CLI exception handler.

This module provides a single exception_handler(exc) function used by the
entry point to turn any exception into an error line and an exit code.
"""

import traceback

from app.config.constants import EXIT_FAILURE
from app.exceptions import AppException, ParseException
from app.schemas.common import ErrorDetail, ReportBuilder
from app.utils.i18n import __
from app.utils.logger import get_run_id
from app.utils.tracing import get_trace_logger

logger = get_trace_logger("exception-handler")


def exception_handler(exc: Exception) -> ErrorDetail:
    """
    Central exception handler.

    Application exceptions keep their own exit code (1 for validation, 2 for
    parse and usage errors); anything else is logged with its traceback and
    reported as exit 1.
    """
    run_id = get_run_id()

    if isinstance(exc, AppException):
        family = "Parse" if isinstance(exc, ParseException) else "Validation"
        logger.warning(f"{family} Exception [{run_id}]: {type(exc).__name__} - {exc.message} {exc.details}")
        return ReportBuilder.error(message=exc.message, exit_code=exc.exit_code, details=exc.details, run_id=run_id)

    logger.error(f"Unhandled Exception [{run_id}]: {str(exc)}\n{traceback.format_exc()}")
    return ReportBuilder.error(
        message=__("general.unexpected_error", error=str(exc)), exit_code=EXIT_FAILURE, run_id=run_id
    )
