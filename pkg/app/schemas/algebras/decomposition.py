"""
Decomposition report: one entry per indecomposable summand, in decomposition order.
"""

import json
from typing import List, Optional

from pydantic import ConfigDict, Field

from app.schemas.common.base_schema import BaseSchema


class SummandReport(BaseSchema):
    model_config = ConfigDict(populate_by_name=True)

    idempotent: List[str] = Field(..., description="Primitive idempotent in the input basis")
    dim: int
    classification: str = Field(..., description="simple, nilpotent or simple_field_extension")
    lambda_: Optional[str] = Field(None, alias="lambda", description="lambda of S_lambda")
    socle: Optional[List[str]] = Field(None, description="Socle generator with mu(s) = 1, input basis")
    nilpotency_index: Optional[int] = None
    socle_dim: int = Field(..., description="Dimension of the socle of the block")
    degree: Optional[int] = Field(None, description="Residue degree of a field extension block")


class DecompositionReport(BaseSchema):
    summands: List[SummandReport] = Field(default_factory=list)

    def render(self) -> str:
        documents = [s.model_dump(by_alias=True, exclude_none=True) for s in self.summands]
        return json.dumps(documents, indent=2, ensure_ascii=False)
