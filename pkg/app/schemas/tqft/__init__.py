"""
TQFT report schemas.
"""

from .reports import CounterexampleReport, FuzzFailure, FuzzReport, InvariantTable, OperatorReport

__all__ = [
    "OperatorReport",
    "InvariantTable",
    "CounterexampleReport",
    "FuzzFailure",
    "FuzzReport",
]
