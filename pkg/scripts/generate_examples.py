"""
Regenerate the shipped example algebras under algebras/ from the library builders.

Usage:
    python scripts/generate_examples.py [--output-dir algebras]
"""
import argparse
import os
import sys
from pathlib import Path
from typing import Dict

# Add the project root to the path if needed
sys.path.append(os.path.abspath(os.path.join(os.path.dirname(__file__), "..")))

from app.config.constants import EXAMPLES_DIR  # noqa: E402
from app.models.frobenius import FrobeniusAlgebra  # noqa: E402
from app.schemas.algebras.converters import convert_frobenius_to_spec, dump_spec  # noqa: E402
from app.schemas.algebras.spec_file import AlgebraSpecFile  # noqa: E402
from app.services.algebra_service import algebra_service  # noqa: E402
from app.services.frobenius_service import frobenius_service  # noqa: E402
from app.utils import linalg  # noqa: E402
from app.utils.fields import QQ_FIELD  # noqa: E402
from app.utils.tracing import get_trace_logger  # noqa: E402

logger = get_trace_logger("generate-examples")


def build_examples() -> Dict[str, FrobeniusAlgebra]:
    """Every shipped algebra, keyed by file name"""
    dual_numbers = algebra_service.truncated_polynomial_algebra(QQ_FIELD, [2])
    quartic = algebra_service.truncated_polynomial_algebra(QQ_FIELD, [4])
    square = algebra_service.truncated_polynomial_algebra(QQ_FIELD, [2, 2])
    # S_1 + S_3 written in the basis a = p1 + p2, b = p1 - p2
    block_sum = frobenius_service.direct_sum(frobenius_service.build_simple(1), frobenius_service.build_simple(3))
    mixed = frobenius_service.change_basis(block_sum, linalg.matrix([[1, 1], [1, -1]], QQ_FIELD))
    return {
        "s2.alg": frobenius_service.build_simple(2),
        "n2.alg": frobenius_service.rename(frobenius_service.build_nilpotent(dual_numbers, [0, 1]), ["e", "n"]),
        "qx4.alg": frobenius_service.build_nilpotent(quartic, [0, 0, 0, 1]),
        "qxy.alg": frobenius_service.build_nilpotent(square, [0, 0, 0, 1]),
        "sum13.alg": frobenius_service.rename(mixed, ["a", "b"]),
    }


def shipped_document(frobenius: FrobeniusAlgebra) -> AlgebraSpecFile:
    """The input fields only; derived data is recomputed on load"""
    spec = convert_frobenius_to_spec(frobenius)
    return AlgebraSpecFile(**spec.model_dump(include={"field", "dim", "basis", "unit", "mult", "mu"}))


def main() -> int:
    parser = argparse.ArgumentParser(description="Regenerate the shipped example algebras")
    parser.add_argument("--output-dir", default=EXAMPLES_DIR, help="Directory to write the .alg files to")
    args = parser.parse_args()

    output = Path(args.output_dir)
    output.mkdir(parents=True, exist_ok=True)
    for name, frobenius in build_examples().items():
        (output / name).write_text(dump_spec(shipped_document(frobenius)), encoding="utf-8")
        logger.info(f"Wrote {output / name}")
        print(f"  - {output / name}")
    return 0


if __name__ == "__main__":
    sys.exit(main())
