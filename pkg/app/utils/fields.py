"""
Exact base fields.

Two fields are supported: the rationals (``Fraction`` scalars) and prime
fields F_p (elements of sympy's ``GF(p)`` domain). Scalars never leave their
field; every array built by ``app.utils.linalg`` holds scalars of a single
field in an object-dtype numpy array.
"""

import re
from abc import ABC, abstractmethod
from fractions import Fraction
from typing import Any, Tuple, Union

from sympy import Integer, Rational, isprime
from sympy.polys.domains import GF, QQ
from sympy.polys.domains.domain import Domain

from app.config.constants import PRIME_FIELD_PREFIX, RATIONAL_FIELD
from app.exceptions import FieldUnsupportedException, ScalarParseException, SpecFormatException
from app.utils.i18n import __

Scalar = Any
ScalarLike = Union[int, Fraction, str, Any]

_SCALAR_PATTERN = re.compile(r"^[+-]?\d+(/\d+)?$")


class BaseField(ABC):
    """Common interface of the exact fields scalars live in."""

    descriptor: str

    @property
    @abstractmethod
    def zero(self) -> Scalar:
        ...

    @property
    @abstractmethod
    def one(self) -> Scalar:
        ...

    @abstractmethod
    def convert(self, value: ScalarLike) -> Scalar:
        """Coerce an int, a Fraction or a scalar of this field into the field."""

    @abstractmethod
    def format(self, x: Scalar) -> str:
        """Render a scalar as an integer or "p/q" string."""

    @abstractmethod
    def sort_key(self, x: Scalar) -> Any:
        ...

    @abstractmethod
    def sympy_domain(self) -> Domain:
        ...

    @abstractmethod
    def to_sympy(self, x: Scalar) -> Any:
        ...

    @abstractmethod
    def from_sympy(self, c: Any) -> Scalar:
        ...

    def to_domain(self, x: Scalar) -> Any:
        """The scalar as an element of ``sympy_domain()``, for DomainMatrix arithmetic."""
        return x

    def from_domain(self, c: Any) -> Scalar:
        return c

    @property
    def characteristic(self) -> int:
        return 0

    def parse(self, text: str) -> Scalar:
        """Parse an integer or "p/q" scalar."""
        cleaned = str(text).strip()
        if not _SCALAR_PATTERN.match(cleaned):
            raise ScalarParseException(str(text), self.descriptor)
        try:
            return self.convert(Fraction(cleaned))
        except ZeroDivisionError:
            raise ScalarParseException(str(text), self.descriptor)

    def is_zero(self, x: Scalar) -> bool:
        return bool(x == self.zero)

    def inv(self, x: Scalar) -> Scalar:
        if self.is_zero(x):
            raise ZeroDivisionError(__("scalar.division_by_zero", field=self.descriptor))
        return self.one / x

    def power(self, x: Scalar, k: int) -> Scalar:
        """x**k for any integer k; negative k needs x != 0."""
        if k < 0:
            return self.power(self.inv(x), -k)
        result = self.one
        for _ in range(k):
            result = result * x
        return result

    def __eq__(self, other: object) -> bool:
        return isinstance(other, BaseField) and other.descriptor == self.descriptor

    def __hash__(self) -> int:
        return hash(self.descriptor)

    def __repr__(self) -> str:
        return f"{type(self).__name__}({self.descriptor!r})"


class RationalField(BaseField):
    """The field of rational numbers."""

    descriptor = RATIONAL_FIELD

    @property
    def zero(self) -> Fraction:
        return Fraction(0)

    @property
    def one(self) -> Fraction:
        return Fraction(1)

    def convert(self, value: ScalarLike) -> Fraction:
        if isinstance(value, str):
            return self.parse(value)  # type: ignore[no-any-return]
        return Fraction(value)

    def format(self, x: Scalar) -> str:
        return str(Fraction(x))

    def sort_key(self, x: Scalar) -> Fraction:
        return Fraction(x)

    def sympy_domain(self) -> Domain:
        return QQ

    def to_sympy(self, x: Scalar) -> Any:
        return Rational(x.numerator, x.denominator)

    def from_sympy(self, c: Any) -> Fraction:
        return Fraction(int(c.p), int(c.q))

    def to_domain(self, x: Scalar) -> Any:
        return QQ(x.numerator, x.denominator)

    def from_domain(self, c: Any) -> Fraction:
        return Fraction(int(QQ.numer(c)), int(QQ.denom(c)))


class PrimeField(BaseField):
    """The prime field F_p, elements stored as sympy GF(p) residues."""

    def __init__(self, p: int):
        if p < 2 or not isprime(p):
            raise FieldUnsupportedException(f"{PRIME_FIELD_PREFIX}{p}", __("field.not_prime", p=p))
        self.p = p
        self.descriptor = f"{PRIME_FIELD_PREFIX}{p}"
        self._domain = GF(p, symmetric=False)

    @property
    def zero(self) -> Scalar:
        return self._domain(0)

    @property
    def one(self) -> Scalar:
        return self._domain(1)

    @property
    def characteristic(self) -> int:
        return self.p

    def convert(self, value: ScalarLike) -> Scalar:
        if isinstance(value, str):
            return self.parse(value)
        if isinstance(value, Fraction):
            if value.denominator % self.p == 0:
                raise ZeroDivisionError(__("scalar.division_by_zero", field=self.descriptor))
            return self._domain(value.numerator) / self._domain(value.denominator)
        if isinstance(value, int):
            return self._domain(value)
        return self._domain(int(value))

    def format(self, x: Scalar) -> str:
        return str(int(x) % self.p)

    def sort_key(self, x: Scalar) -> int:
        return int(x) % self.p

    def sympy_domain(self) -> Domain:
        return self._domain

    def to_sympy(self, x: Scalar) -> Any:
        return Integer(int(x) % self.p)

    def from_sympy(self, c: Any) -> Scalar:
        return self._domain(int(c) % self.p)


def parse_field(text: str) -> BaseField:
    """Build a field from its descriptor: "Q" or "Fp:<p>"."""
    cleaned = str(text).strip()
    if cleaned == RATIONAL_FIELD:
        return RationalField()
    if cleaned.startswith(PRIME_FIELD_PREFIX):
        digits = cleaned[len(PRIME_FIELD_PREFIX) :]
        if digits.isdigit():
            return PrimeField(int(digits))
    raise SpecFormatException(__("field.unknown_descriptor", text=cleaned), details={"field": cleaned})


def format_vector(field: BaseField, values: Any) -> Tuple[str, ...]:
    return tuple(field.format(v) for v in values)


QQ_FIELD = RationalField()
