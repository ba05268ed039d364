"""
Algebra spec file schemas.

An algebra spec file is a JSON document with the base field, the basis names,
the unit, the multiplication table and, for Frobenius algebras, the
functional mu. Scalars are integers or "p/q" strings on input and are always
written back as strings.
"""

from typing import Any, List, Optional

from pydantic import Field, field_validator

from app.schemas.common.base_schema import BaseSchema

ScalarText = str


def _scalar_text(value: Any) -> str:
    if isinstance(value, bool) or not isinstance(value, (int, str)):
        raise ValueError(f"scalar must be an integer or a 'p/q' string, got {value!r}")
    return str(value).strip()


def _items(value: Any, what: str) -> List[Any]:
    if not isinstance(value, list):
        raise ValueError(f"{what} must be a list, got {value!r}")
    return value


class AlgebraSpecFile(BaseSchema):
    """Commutative algebra given by structure constants"""

    field: str = Field(..., description='"Q" or "Fp:<p>"')
    dim: int = Field(..., ge=1)
    basis: List[str] = Field(..., description="Basis names a_0 .. a_{dim-1}")
    unit: List[ScalarText] = Field(..., description="Coordinates of the identity")
    mult: List[List[List[ScalarText]]] = Field(..., description="mult[i][j] is the coordinate vector of a_i a_j")
    mu: Optional[List[ScalarText]] = Field(None, description="Frobenius functional on the basis")

    @field_validator("unit", "mu", mode="before")  # type: ignore[misc]
    @classmethod
    def vector_scalars(cls, v: Any) -> Any:
        if v is None:
            return v
        return [_scalar_text(x) for x in _items(v, "vector")]

    @field_validator("mult", mode="before")  # type: ignore[misc]
    @classmethod
    def table_scalars(cls, v: Any) -> Any:
        return [
            [[_scalar_text(x) for x in _items(entry, "table entry")] for entry in _items(row, "table row")]
            for row in _items(v, "table")
        ]


class FrobeniusSpecFile(AlgebraSpecFile):
    """Spec file of a Frobenius algebra with its derived data"""

    mu: List[ScalarText]
    gram: List[List[ScalarText]] = Field(default_factory=list, description="G[i][j] = mu(a_i a_j)")
    dual_basis: List[List[ScalarText]] = Field(default_factory=list, description="b_j with mu(a_i b_j) = delta_ij")
    handle: List[ScalarText] = Field(default_factory=list, description="H = sum_i a_i b_i")
