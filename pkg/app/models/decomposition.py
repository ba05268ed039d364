"""
Indecomposable summands and their classification.
"""

from dataclasses import dataclass
from typing import Tuple, Union

import numpy as np

from app.models.base_model import BaseModel
from app.models.frobenius import FrobeniusAlgebra
from app.utils.fields import Scalar

TAG_SIMPLE = "simple"
TAG_NILPOTENT = "nilpotent"
TAG_FIELD_EXTENSION = "simple_field_extension"

# summand ordering
TAG_ORDER = {TAG_SIMPLE: 0, TAG_NILPOTENT: 1, TAG_FIELD_EXTENSION: 2}


@dataclass(frozen=True, repr=False)
class Simple(BaseModel):
    """S_lambda: the field itself with mu(x) = x / lambda."""

    lam: Scalar
    tag: str = TAG_SIMPLE


@dataclass(frozen=True, eq=False, repr=False)
class Nilpotent(BaseModel):
    """A local algebra with a one-dimensional socle; s is normalized by mu(s) = 1."""

    dim: int
    socle_generator: np.ndarray
    nilpotency_index: int
    tag: str = TAG_NILPOTENT


@dataclass(frozen=True, repr=False)
class SimpleFieldExtension(BaseModel):
    """A summand whose residue field is a proper extension of the base field."""

    degree: int
    tag: str = TAG_FIELD_EXTENSION


Classification = Union[Simple, Nilpotent, SimpleFieldExtension]


@dataclass(frozen=True, eq=False, repr=False)
class Summand(BaseModel):
    """
    One block p_i A of a decomposition.

    ``embedding`` has the component's basis vectors as rows, written in the
    coordinates of the decomposed algebra.
    """

    idempotent: np.ndarray
    component: FrobeniusAlgebra
    classification: Classification
    embedding: np.ndarray


@dataclass(frozen=True, eq=False, repr=False)
class DecompositionResult(BaseModel):
    summands: Tuple[Summand, ...]

    def __len__(self) -> int:
        return len(self.summands)
