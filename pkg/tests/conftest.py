"""
Test configuration and fixtures for the Frobenius algebra and TQFT library.
"""
from pathlib import Path
from typing import Dict

import pytest

from app.config.constants import EXAMPLE_FILES, EXAMPLES_DIR
from app.models.frobenius import FrobeniusAlgebra
from app.schemas.algebras.converters import load_frobenius
from app.utils.fields import QQ_FIELD, BaseField, PrimeField
from app.utils.i18n import set_current_language

ROOT = Path(__file__).resolve().parent.parent


@pytest.fixture(autouse=True)
def english_messages() -> None:
    """Every test reads messages from the English catalog."""
    set_current_language("en")


@pytest.fixture
def qq() -> BaseField:
    return QQ_FIELD


@pytest.fixture
def f5() -> BaseField:
    return PrimeField(5)


@pytest.fixture
def examples_dir() -> Path:
    return ROOT / EXAMPLES_DIR


@pytest.fixture(scope="session")
def shipped() -> Dict[str, FrobeniusAlgebra]:
    """The shipped example algebras keyed by file stem (s2, n2, qx4, qxy, sum13)."""
    return {Path(name).stem: load_frobenius(ROOT / EXAMPLES_DIR / name) for name in EXAMPLE_FILES}


@pytest.fixture
def s2(shipped: Dict[str, FrobeniusAlgebra]) -> FrobeniusAlgebra:
    return shipped["s2"]


@pytest.fixture
def n2(shipped: Dict[str, FrobeniusAlgebra]) -> FrobeniusAlgebra:
    return shipped["n2"]


@pytest.fixture
def qx4(shipped: Dict[str, FrobeniusAlgebra]) -> FrobeniusAlgebra:
    return shipped["qx4"]


@pytest.fixture
def qxy(shipped: Dict[str, FrobeniusAlgebra]) -> FrobeniusAlgebra:
    return shipped["qxy"]


@pytest.fixture
def sum13(shipped: Dict[str, FrobeniusAlgebra]) -> FrobeniusAlgebra:
    return shipped["sum13"]
