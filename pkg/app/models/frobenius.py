from dataclasses import dataclass
from functools import cached_property
from typing import List

import numpy as np

from app.models.algebra import Algebra
from app.models.base_model import BaseModel
from app.utils.fields import BaseField, Scalar


@dataclass(frozen=True, eq=False, repr=False)
class FrobeniusAlgebra(BaseModel):
    """
    An algebra with a functional mu whose pairing mu(ab) is nondegenerate.

    ``dual_matrix`` is the inverse Gram matrix; its j-th column holds the
    coordinates of b_j, the mu-dual of a_j. ``handle`` is H = sum_i a_i b_i.
    """

    algebra: Algebra
    mu: np.ndarray
    gram: np.ndarray
    dual_matrix: np.ndarray
    handle: np.ndarray

    @property
    def field(self) -> BaseField:
        return self.algebra.field

    @property
    def dim(self) -> int:
        return self.algebra.dim

    @property
    def dual_basis(self) -> List[np.ndarray]:
        return [self.dual_matrix[:, j] for j in range(self.dim)]

    def counit(self, x: np.ndarray) -> Scalar:
        return np.dot(self.mu, x)

    @cached_property
    def comul_matrix(self) -> np.ndarray:
        """x -> sum_i x a_i (x) b_i as a dim^2 x dim matrix."""
        d = self.dim
        # t[m, p, q] = sum_i c[m, i, p] B[q, i]
        t = np.tensordot(self.algebra.structure, self.dual_matrix, axes=([1], [1]))
        return t.transpose(1, 2, 0).reshape(d * d, d)

    @cached_property
    def copairing(self) -> np.ndarray:
        """sum_i a_i (x) b_i, flattened with the first factor slowest."""
        return self.dual_matrix.T.reshape(self.dim * self.dim)
