"""
Common schemas package.

This package contains shared schemas and utilities used across the application.
"""

from .base_schema import BaseSchema
from .report import CheckReport, CheckResult, CommandResult, ErrorDetail, ReportBuilder

__all__ = [
    "BaseSchema",
    "CheckResult",
    "CheckReport",
    "CommandResult",
    "ErrorDetail",
    "ReportBuilder",
]
