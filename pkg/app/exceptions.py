"""
Application-specific exceptions.

This module defines custom exception classes for the errors the library and
the CLI can raise. Every exception carries an exit code for the command line
and a ``details`` dict with the structured witness (indices, vectors) so that
callers and tests do not have to parse messages.
"""

from typing import Any, Dict, Optional, Sequence

from app.config.constants import EXIT_FAILURE, EXIT_USAGE
from app.utils.i18n import __


class AppException(Exception):
    """Base exception for application-specific errors"""

    def __init__(
        self,
        message: str,
        exit_code: int = EXIT_FAILURE,
        details: Optional[Dict[str, Any]] = None,
    ):
        self.message = message
        self.exit_code = exit_code
        self.details = details or {}
        super().__init__(self.message)


class ValidationException(AppException):
    """Exception for mathematical validation failures (exit 1)"""

    def __init__(self, message: str, details: Optional[Dict[str, Any]] = None):
        super().__init__(message=message, exit_code=EXIT_FAILURE, details=details)


class ParseException(AppException):
    """Exception for usage and parse errors (exit 2)"""

    def __init__(self, message: str, details: Optional[Dict[str, Any]] = None):
        super().__init__(message=message, exit_code=EXIT_USAGE, details=details)


# ===== INPUT FORMAT =====


class SpecFormatException(ParseException):
    """Raised when an algebra spec file cannot be read or is malformed"""


class ScalarParseException(ParseException):
    """Raised when a scalar is not an integer or a "p/q" fraction of the field"""

    def __init__(self, text: str, field: str):
        super().__init__(__("scalar.invalid", text=text, field=field), details={"text": text, "field": field})


class WordSyntaxException(ParseException):
    """Raised when a cobordism word does not follow the grammar"""

    def __init__(self, line: int, col: int, found: str):
        super().__init__(
            __("word.syntax_error", line=line, col=col, found=found),
            details={"line": line, "col": col, "found": found},
        )
        self.line = line
        self.col = col


class WidthMismatchException(ParseException):
    """Raised when a layer consumes a different number of circles than the previous layer produced"""

    def __init__(self, layer: int, expected: int, got: int):
        super().__init__(
            __("word.width_mismatch", layer=layer, expected=expected, got=got),
            details={"layer": layer, "expected": expected, "got": got},
        )
        self.layer = layer
        self.expected = expected
        self.got = got


# ===== ALGEBRA =====


class DimensionMismatchException(ValidationException):
    """Raised when vectors, tables or matrices have inconsistent sizes"""

    def __init__(self, what: str, expected: Any, got: Any):
        super().__init__(
            __("algebra.dimension_mismatch", what=what, expected=expected, got=got),
            details={"what": what, "expected": expected, "got": got},
        )


class NonCommutativeException(ValidationException):
    """Raised when a_i a_j != a_j a_i"""

    def __init__(self, i: int, j: int):
        super().__init__(__("algebra.non_commutative", i=i, j=j), details={"i": i, "j": j})
        self.i = i
        self.j = j


class NonAssociativeException(ValidationException):
    """Raised when (a_i a_j) a_k != a_i (a_j a_k)"""

    def __init__(self, i: int, j: int, k: int, left: Sequence[str], right: Sequence[str]):
        super().__init__(
            __("algebra.non_associative", i=i, j=j, k=k),
            details={"i": i, "j": j, "k": k, "left": list(left), "right": list(right)},
        )
        self.i = i
        self.j = j
        self.k = k


class BadUnitException(ValidationException):
    """Raised when u a_i != a_i"""

    def __init__(self, i: int):
        super().__init__(__("algebra.bad_unit", i=i), details={"i": i})
        self.i = i


class FieldUnsupportedException(ValidationException):
    """Raised when an operation is not available over the given field"""

    def __init__(self, field: str, reason: str):
        super().__init__(
            __("algebra.field_unsupported", field=field, reason=reason),
            details={"field": field, "reason": reason},
        )


class NotNilpotentTypeException(ValidationException):
    """Raised when the ideal chain is requested for an algebra without a one-dimensional socle"""

    def __init__(self, socle_dim: int, nilradical_dim: int):
        super().__init__(
            __("algebra.not_nilpotent_type", socle_dim=socle_dim, nilradical_dim=nilradical_dim),
            details={"socle_dim": socle_dim, "nilradical_dim": nilradical_dim},
        )


# ===== FROBENIUS =====


class DegeneratePairingException(ValidationException):
    """Raised when the Gram matrix of mu is singular"""

    def __init__(self, witness: Sequence[str]):
        super().__init__(
            __("frobenius.degenerate_pairing", witness=", ".join(witness)),
            details={"witness": list(witness)},
        )


class ZeroLambdaException(ValidationException):
    """Raised when a simple theory is requested with lambda = 0"""

    def __init__(self) -> None:
        super().__init__(__("frobenius.zero_lambda"))


class SocleNotOneDimException(ValidationException):
    """Raised when a nilpotent theory is requested on an algebra whose socle is not a line"""

    def __init__(self, socle_dim: int):
        super().__init__(__("frobenius.socle_not_one_dim", socle_dim=socle_dim), details={"socle_dim": socle_dim})


class MuVanishesOnSocleException(ValidationException):
    """Raised when mu is zero on the socle generator"""

    def __init__(self, socle: Sequence[str]):
        super().__init__(
            __("frobenius.mu_vanishes_on_socle", socle=", ".join(socle)),
            details={"socle": list(socle)},
        )


class SemisimpleInputException(ValidationException):
    """Raised when a nilpotent theory is requested on an algebra without nilpotents"""

    def __init__(self) -> None:
        super().__init__(__("frobenius.semisimple_input"))


class FieldMismatchException(ValidationException):
    """Raised when combining algebras over different fields"""

    def __init__(self, left: str, right: str):
        super().__init__(__("frobenius.field_mismatch", left=left, right=right), details={"left": left, "right": right})


class NotLocalException(ValidationException):
    """Raised when the algebra is not spanned by the identity and nilpotents"""

    def __init__(self, dim: int, nilradical_dim: int):
        super().__init__(
            __("frobenius.not_local", dim=dim, nilradical_dim=nilradical_dim),
            details={"dim": dim, "nilradical_dim": nilradical_dim},
        )


# ===== DECOMPOSITION =====


class NotIndecomposableException(ValidationException):
    """Raised when classify receives an algebra with more than one primitive idempotent"""

    def __init__(self, count: int):
        super().__init__(__("decompose.not_indecomposable", count=count), details={"count": count})


# ===== COBORDISMS AND EVALUATION =====


class PatternMismatchException(ValidationException):
    """Raised when a Cerf move is applied where its local pattern does not match"""

    def __init__(self, move: str, layer: int, offset: int):
        super().__init__(
            __("cobordism.pattern_mismatch", move=move, layer=layer, offset=offset),
            details={"move": move, "layer": layer, "offset": offset},
        )


class SizeLimitExceededException(ValidationException):
    """Raised when an evaluation would build a matrix larger than the configured cap"""

    def __init__(self, entries: int, cap: int):
        super().__init__(__("tqft.size_limit", entries=entries, cap=cap), details={"entries": entries, "cap": cap})


class NotConnectedException(ValidationException):
    """Raised when the componentwise direct-sum check is requested on a disconnected word"""

    def __init__(self, components: int):
        super().__init__(__("tqft.not_connected", components=components), details={"components": components})
