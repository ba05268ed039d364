"""
Immutable domain values shared by the services.
"""

from app.models.algebra import Algebra, Subspace
from app.models.base_model import BaseModel
from app.models.cobordism import (
    CerfMove,
    ClosedComponent,
    CobordismWord,
    Generator,
    MoveKind,
    NormalForm,
    OpenComponent,
)
from app.models.decomposition import (
    Classification,
    DecompositionResult,
    Nilpotent,
    Simple,
    SimpleFieldExtension,
    Summand,
)
from app.models.frobenius import FrobeniusAlgebra
from app.models.operator import LinearOperator

__all__ = [
    "BaseModel",
    "Algebra",
    "Subspace",
    "FrobeniusAlgebra",
    "Classification",
    "Simple",
    "Nilpotent",
    "SimpleFieldExtension",
    "Summand",
    "DecompositionResult",
    "Generator",
    "CobordismWord",
    "OpenComponent",
    "ClosedComponent",
    "NormalForm",
    "MoveKind",
    "CerfMove",
    "LinearOperator",
]
