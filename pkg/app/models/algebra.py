"""
Finite-dimensional commutative algebras given by structure constants.
"""

from dataclasses import dataclass
from functools import cached_property
from typing import List, Tuple

import numpy as np

from app.models.base_model import BaseModel
from app.utils import linalg
from app.utils.fields import BaseField


@dataclass(frozen=True, eq=False, repr=False)
class Algebra(BaseModel):
    """
    A commutative unital algebra.

    ``structure[i, j, k]`` is the k-th coordinate of a_i a_j and ``unit`` the
    coordinates of 1. Instances are only built through the algebra service,
    which validates the axioms.
    """

    field: BaseField
    basis_names: Tuple[str, ...]
    structure: np.ndarray
    unit: np.ndarray

    @property
    def dim(self) -> int:
        return len(self.basis_names)

    @cached_property
    def mult_matrix(self) -> np.ndarray:
        """The product A (x) A -> A as a dim x dim^2 matrix."""
        d = self.dim
        return self.structure.reshape(d * d, d).T

    def left_matrix(self, x: np.ndarray) -> np.ndarray:
        """L_x with L_x[k, j] = (x a_j)_k."""
        return np.tensordot(x, self.structure, axes=([0], [0])).T

    def product(self, x: np.ndarray, y: np.ndarray) -> np.ndarray:
        return linalg.dot(self.left_matrix(x), y, self.field)

    def basis_vector(self, i: int) -> np.ndarray:
        return linalg.unit_vector(self.dim, i, self.field)


@dataclass(frozen=True, eq=False, repr=False)
class Subspace(BaseModel):
    """A subspace held by its canonical (reduced row echelon) basis, one vector per row."""

    basis: np.ndarray
    ambient_dim: int
    field: BaseField

    @property
    def dim(self) -> int:
        return int(self.basis.shape[0])

    @property
    def is_zero(self) -> bool:
        return self.dim == 0

    def vectors(self) -> List[np.ndarray]:
        return [self.basis[i, :] for i in range(self.dim)]

    def contains(self, v: np.ndarray) -> bool:
        return linalg.in_span(self.basis, v, self.field)

    def annihilator(self) -> np.ndarray:
        """Rows spanning the functionals that vanish on this subspace."""
        if self.is_zero:
            return linalg.identity(self.ambient_dim, self.field)
        return linalg.nullspace(self.basis, self.field)

    def __eq__(self, other: object) -> bool:
        return (
            isinstance(other, Subspace)
            and other.ambient_dim == self.ambient_dim
            and linalg.equal(other.basis, self.basis)
        )

    def __hash__(self) -> int:
        return hash((self.ambient_dim, self.dim))


def subspace(vectors: List[np.ndarray], ambient_dim: int, field: BaseField) -> Subspace:
    return Subspace(linalg.span_basis(vectors, ambient_dim, field), ambient_dim, field)
