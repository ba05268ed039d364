"""
Algebra schema conversion utilities.

This module converts between spec file documents (text on disk) and the
validated domain values built by the services.
"""

import json
from pathlib import Path
from typing import Union

from pydantic import ValidationError

from app.exceptions import DimensionMismatchException, SpecFormatException
from app.models.algebra import Algebra
from app.models.decomposition import DecompositionResult, Nilpotent, Simple, SimpleFieldExtension
from app.models.frobenius import FrobeniusAlgebra
from app.schemas.algebras.decomposition import DecompositionReport, SummandReport
from app.schemas.algebras.spec_file import AlgebraSpecFile, FrobeniusSpecFile
from app.services.algebra_service import algebra_service
from app.services.frobenius_service import frobenius_service
from app.utils import linalg
from app.utils.fields import format_vector, parse_field
from app.utils.i18n import __
from app.utils.tracing import get_trace_logger

logger = get_trace_logger("spec-file")


def parse_spec_text(text: str, source: str = "<text>") -> AlgebraSpecFile:
    """Parse a spec document; malformed JSON or fields raise SpecFormatException"""
    try:
        document = json.loads(text)
    except json.JSONDecodeError as e:
        raise SpecFormatException(__("spec.invalid_json", path=source, error=str(e)), details={"path": source})
    try:
        return AlgebraSpecFile.model_validate(document)
    except ValidationError as e:
        first = e.errors()[0]
        location = ".".join(str(part) for part in first["loc"])
        error = f"{location}: {first['msg']}"
        raise SpecFormatException(__("spec.invalid_document", path=source, error=error), details={"path": source})


def load_spec_file(path: Union[str, Path]) -> AlgebraSpecFile:
    file_path = Path(path)
    if not file_path.is_file():
        raise SpecFormatException(__("spec.file_not_found", path=str(path)), details={"path": str(path)})
    logger.debug(f"Reading algebra file {file_path}")
    try:
        text = file_path.read_text(encoding="utf-8")
    except (OSError, UnicodeDecodeError) as e:
        raise SpecFormatException(__("spec.unreadable", path=str(path), error=str(e)), details={"path": str(path)})
    return parse_spec_text(text, str(path))


def convert_spec_to_algebra(spec: AlgebraSpecFile) -> Algebra:
    """Build the validated algebra described by a spec file"""
    field = parse_field(spec.field)
    if len(spec.basis) != spec.dim:
        raise DimensionMismatchException("basis", spec.dim, len(spec.basis))
    unit = [field.parse(x) for x in spec.unit]
    mult = [[[field.parse(x) for x in entry] for entry in row] for row in spec.mult]
    return algebra_service.build_algebra(field, spec.basis, mult, unit)


def convert_spec_to_frobenius(spec: AlgebraSpecFile, source: str = "<text>") -> FrobeniusAlgebra:
    """Build the Frobenius algebra of a spec file; mu is required"""
    if spec.mu is None:
        raise SpecFormatException(__("spec.missing_mu", path=source), details={"path": source})
    algebra = convert_spec_to_algebra(spec)
    return frobenius_service.attach_functional(algebra, [algebra.field.parse(x) for x in spec.mu])


def load_frobenius(path: Union[str, Path]) -> FrobeniusAlgebra:
    return convert_spec_to_frobenius(load_spec_file(path), str(path))


def convert_algebra_to_spec(algebra: Algebra) -> AlgebraSpecFile:
    field = algebra.field
    d = algebra.dim
    return AlgebraSpecFile(
        field=field.descriptor,
        dim=d,
        basis=list(algebra.basis_names),
        unit=list(format_vector(field, algebra.unit)),
        mult=[[list(format_vector(field, algebra.structure[i, j, :])) for j in range(d)] for i in range(d)],
    )


def convert_frobenius_to_spec(frobenius: FrobeniusAlgebra) -> FrobeniusSpecFile:
    """Spec document of a Frobenius algebra, derived fields included"""
    field = frobenius.field
    base = convert_algebra_to_spec(frobenius.algebra)
    return FrobeniusSpecFile(
        **base.model_dump(exclude={"mu"}),
        mu=list(format_vector(field, frobenius.mu)),
        gram=[list(format_vector(field, row)) for row in frobenius.gram],
        dual_basis=[list(format_vector(field, b)) for b in frobenius.dual_basis],
        handle=list(format_vector(field, frobenius.handle)),
    )


def dump_spec(spec: AlgebraSpecFile) -> str:
    """Deterministic JSON text: declaration field order, two-space indent"""
    return json.dumps(spec.model_dump(exclude_none=True), indent=2, ensure_ascii=False) + "\n"


def convert_decomposition_to_report(result: DecompositionResult) -> DecompositionReport:
    summands = []
    for summand in result.summands:
        component = summand.component
        field = component.field
        kind = summand.classification
        entry = SummandReport(
            idempotent=list(format_vector(field, summand.idempotent)),
            dim=component.dim,
            classification=kind.tag,
            socle_dim=algebra_service.socle(component.algebra).dim,
        )
        if isinstance(kind, Simple):
            entry.lambda_ = field.format(kind.lam)
        elif isinstance(kind, Nilpotent):
            # block coordinates back to the decomposed algebra's basis
            ambient = linalg.dot(summand.embedding.T, kind.socle_generator, field)
            entry.socle = list(format_vector(field, ambient))
            entry.nilpotency_index = kind.nilpotency_index
        elif isinstance(kind, SimpleFieldExtension):
            entry.degree = kind.degree
        summands.append(entry)
    return DecompositionReport(summands=summands)
