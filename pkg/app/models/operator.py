from dataclasses import dataclass

import numpy as np

from app.models.base_model import BaseModel
from app.utils import linalg
from app.utils.fields import BaseField


@dataclass(frozen=True, eq=False, repr=False)
class LinearOperator(BaseModel):
    """
    An exact map A^{(x) in_width} -> A^{(x) out_width}.

    Rows and columns index tensor-power basis vectors, flattened row-major
    with tensor factor 0 slowest.
    """

    matrix: np.ndarray
    in_width: int
    out_width: int
    dim: int
    field: BaseField

    @property
    def rows(self) -> int:
        return int(self.matrix.shape[0])

    @property
    def cols(self) -> int:
        return int(self.matrix.shape[1])

    def __eq__(self, other: object) -> bool:
        return (
            isinstance(other, LinearOperator)
            and other.in_width == self.in_width
            and other.out_width == self.out_width
            and linalg.equal(other.matrix, self.matrix)
        )

    def __hash__(self) -> int:
        return hash((self.in_width, self.out_width, self.dim))
