"""
Services package.

One service class per area of the library with a module-level singleton:
algebras, Frobenius structures, decomposition, cobordism words, the TQFT
evaluator and the fuzz harnesses.
"""

from app.services.algebra_service import AlgebraService, algebra_service
from app.services.cobordism_service import CobordismService, cobordism_service
from app.services.decomposition_service import DecompositionService, decomposition_service
from app.services.frobenius_service import FrobeniusService, frobenius_service
from app.services.fuzz_service import FuzzService, fuzz_service
from app.services.tqft_service import TqftService, tqft_service

__all__ = [
    "AlgebraService",
    "algebra_service",
    "FrobeniusService",
    "frobenius_service",
    "DecompositionService",
    "decomposition_service",
    "CobordismService",
    "cobordism_service",
    "TqftService",
    "tqft_service",
    "FuzzService",
    "fuzz_service",
]
