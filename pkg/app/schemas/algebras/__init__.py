"""
Algebra schemas package.

Spec file documents and the decomposition report. Conversion to and from the
domain values lives in ``app.schemas.algebras.converters``, which depends on
the services and is imported directly by the controllers.
"""

from .decomposition import DecompositionReport, SummandReport
from .spec_file import AlgebraSpecFile, FrobeniusSpecFile

__all__ = [
    "AlgebraSpecFile",
    "FrobeniusSpecFile",
    "DecompositionReport",
    "SummandReport",
]
