"""
Schemas package.

This package provides organized access to all application schemas.
"""

# Algebra schemas
from .algebras import AlgebraSpecFile, DecompositionReport, FrobeniusSpecFile, SummandReport

# Common schemas
from .common import BaseSchema, CheckReport, CheckResult, CommandResult, ErrorDetail, ReportBuilder

# TQFT schemas
from .tqft import CounterexampleReport, FuzzFailure, FuzzReport, InvariantTable, OperatorReport

__all__ = [
    # Common
    "BaseSchema",
    "CheckResult",
    "CheckReport",
    "CommandResult",
    "ErrorDetail",
    "ReportBuilder",
    # Algebra schemas
    "AlgebraSpecFile",
    "FrobeniusSpecFile",
    "DecompositionReport",
    "SummandReport",
    # TQFT schemas
    "OperatorReport",
    "InvariantTable",
    "CounterexampleReport",
    "FuzzFailure",
    "FuzzReport",
]
