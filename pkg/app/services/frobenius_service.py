from typing import List, Optional, Sequence

import numpy as np

from app.exceptions import (
    DegeneratePairingException,
    DimensionMismatchException,
    FieldMismatchException,
    FieldUnsupportedException,
    MuVanishesOnSocleException,
    NotLocalException,
    SemisimpleInputException,
    SocleNotOneDimException,
    ValidationException,
    ZeroLambdaException,
)
from app.models.algebra import Algebra
from app.models.frobenius import FrobeniusAlgebra
from app.schemas.common.report import CheckReport, ReportBuilder
from app.services.algebra_service import algebra_service
from app.utils import linalg
from app.utils.fields import QQ_FIELD, BaseField, RationalField, Scalar, ScalarLike, format_vector
from app.utils.i18n import __
from app.utils.tracing import get_trace_logger

logger = get_trace_logger("frobenius-service")


class FrobeniusService:
    """Frobenius structures: functional, pairing, dual basis, handle element"""

    def attach_functional(self, algebra: Algebra, mu: Sequence[ScalarLike]) -> FrobeniusAlgebra:
        """
        Attach mu to an algebra and precompute the Gram matrix, the dual basis
        and the handle element.

        Raises:
            DimensionMismatchException: mu has the wrong length
            DegeneratePairingException: mu(ab) is degenerate, with a kernel witness
        """
        field = algebra.field
        d = algebra.dim
        if len(mu) != d:
            raise DimensionMismatchException("mu", d, len(mu))
        functional = linalg.vector(mu, field)
        # G[i, j] = mu(a_i a_j)
        gram = np.tensordot(algebra.structure, functional, axes=([2], [0]))
        try:
            dual = linalg.inverse(gram, field)
        except ZeroDivisionError:
            witness = linalg.nullspace(gram, field)[0]
            logger.warning(f"Degenerate pairing, witness {format_vector(field, witness)}")
            raise DegeneratePairingException(format_vector(field, witness))
        handle = np.tensordot(dual.T, algebra.structure, axes=([0, 1], [0, 1]))
        return FrobeniusAlgebra(algebra=algebra, mu=functional, gram=gram, dual_matrix=dual, handle=handle)

    def build_simple(self, lam: ScalarLike, field: BaseField = QQ_FIELD) -> FrobeniusAlgebra:
        """S_lambda: the one-dimensional algebra with mu(1) = 1 / lambda"""
        value = field.convert(lam)
        if field.is_zero(value):
            raise ZeroLambdaException()
        algebra = algebra_service.build_algebra(field, ["1"], [[[1]]], [1])
        return self.attach_functional(algebra, [field.inv(value)])

    def build_nilpotent(self, algebra: Algebra, mu: Sequence[ScalarLike]) -> FrobeniusAlgebra:
        """
        N_{A, mu}: a local algebra with one-dimensional socle and mu nonzero on it.

        Raises:
            SemisimpleInputException: no nilpotents
            SocleNotOneDimException: socle is not a line
            MuVanishesOnSocleException: mu(s) = 0
        """
        field = algebra.field
        radical = algebra_service.nilradical(algebra)
        if radical.is_zero:
            raise SemisimpleInputException()
        soc = algebra_service.socle(algebra, radical)
        if soc.dim != 1:
            raise SocleNotOneDimException(soc.dim)
        generator = soc.basis[0]
        if field.is_zero(np.dot(linalg.vector(mu, field), generator)):
            raise MuVanishesOnSocleException(format_vector(field, generator))
        return self.attach_functional(algebra, mu)

    def pairing(self, frobenius: FrobeniusAlgebra, x: np.ndarray, y: np.ndarray) -> Scalar:
        return frobenius.counit(algebra_service.multiply(frobenius.algebra, x, y))

    def copairing(self, frobenius: FrobeniusAlgebra) -> np.ndarray:
        return frobenius.copairing

    def dual_basis_of(self, frobenius: FrobeniusAlgebra, basis: Sequence[np.ndarray]) -> List[np.ndarray]:
        """mu-dual of an arbitrary basis, in the algebra's coordinates"""
        field = frobenius.field
        d = frobenius.dim
        p = linalg.zeros((d, d), field)
        for j, v in enumerate(basis):
            p[:, j] = v
        # Gram in the new basis is P^T G P, so the duals are the columns of P (P^T G P)^-1
        local_gram = linalg.dot(linalg.dot(p.T, frobenius.gram, field), p, field)
        coefficients = linalg.dot(p, linalg.inverse(local_gram, field), field)
        return [coefficients[:, j] for j in range(d)]

    def change_basis(self, frobenius: FrobeniusAlgebra, p: np.ndarray) -> FrobeniusAlgebra:
        """Transport the structure to the basis given by the columns of p"""
        algebra = algebra_service.change_basis(frobenius.algebra, p)
        mu = linalg.dot(frobenius.mu, p, frobenius.field)
        return self.attach_functional(algebra, list(mu))

    def direct_sum(self, left: FrobeniusAlgebra, right: FrobeniusAlgebra) -> FrobeniusAlgebra:
        """
        Block-diagonal sum; mu is concatenated and the unit is u1 + u2.

        Raises:
            FieldMismatchException: the summands live over different fields
        """
        if left.field != right.field:
            raise FieldMismatchException(left.field.descriptor, right.field.descriptor)
        field = left.field
        d1, d2 = left.dim, right.dim
        d = d1 + d2
        structure = linalg.zeros((d, d, d), field)
        structure[:d1, :d1, :d1] = left.algebra.structure
        structure[d1:, d1:, d1:] = right.algebra.structure
        names1, names2 = left.algebra.basis_names, right.algebra.basis_names
        if set(names1) & set(names2):
            names1 = tuple(f"{n}_1" for n in names1)
            names2 = tuple(f"{n}_2" for n in names2)
        unit = np.concatenate((left.algebra.unit, right.algebra.unit))
        mult = [[list(structure[i, j, :]) for j in range(d)] for i in range(d)]
        algebra = algebra_service.build_algebra(field, names1 + names2, mult, list(unit))
        return self.attach_functional(algebra, list(np.concatenate((left.mu, right.mu))))

    def direct_sum_all(self, summands: Sequence[FrobeniusAlgebra]) -> FrobeniusAlgebra:
        """Left fold of direct_sum; names get the summand index when any two collide"""
        names = [n for s in summands for n in s.algebra.basis_names]
        items = list(summands)
        if len(set(names)) != len(names):
            items = [self.rename(s, [f"{n}_{i + 1}" for n in s.algebra.basis_names]) for i, s in enumerate(items)]
        result = items[0]
        for item in items[1:]:
            result = self.direct_sum(result, item)
        return result

    def rename(self, frobenius: FrobeniusAlgebra, basis_names: Sequence[str]) -> FrobeniusAlgebra:
        a = frobenius.algebra
        algebra = Algebra(a.field, tuple(basis_names), a.structure, a.unit)
        return FrobeniusAlgebra(algebra, frobenius.mu, frobenius.gram, frobenius.dual_matrix, frobenius.handle)

    def augmentation(self, frobenius: FrobeniusAlgebra) -> np.ndarray:
        """
        The functional f with f(1) = 1 and f(N) = 0.

        Raises:
            NotLocalException: A is not spanned by the identity and nilpotents
        """
        algebra = frobenius.algebra
        field = algebra.field
        radical = algebra_service.nilradical(algebra)
        if radical.dim != algebra.dim - 1:
            raise NotLocalException(algebra.dim, radical.dim)
        system = np.vstack([algebra.unit.reshape(1, -1)] + [v.reshape(1, -1) for v in radical.vectors()])
        rhs = linalg.unit_vector(algebra.dim, 0, field)
        return linalg.solve(system, rhs, field)  # type: ignore[return-value]

    def check_positive_definite(self, frobenius: FrobeniusAlgebra) -> bool:
        """
        True iff the Gram form is positive definite (leading principal minors > 0).

        Raises:
            FieldUnsupportedException: base field is not the rationals
        """
        if not isinstance(frobenius.field, RationalField):
            raise FieldUnsupportedException(frobenius.field.descriptor, __("frobenius.positivity_needs_rationals"))
        return all(m > 0 for m in linalg.leading_minors(frobenius.gram, frobenius.field))

    def verify_axioms(self, frobenius: FrobeniusAlgebra) -> CheckReport:
        """
        Every axiom of a commutative Frobenius algebra as a named check,
        including the Frobenius relation at operator level.
        """
        from app.services.tqft_service import tqft_service

        algebra = frobenius.algebra
        field = frobenius.field
        d = frobenius.dim
        identity = linalg.identity(d, field)
        report = ReportBuilder.report(f"frobenius algebra of dim {d} over {field.descriptor}")

        try:
            algebra_service.validate(algebra)
            report.checks.append(ReportBuilder.check("commutative, unital and associative", True))
        except ValidationException as exc:
            report.checks.append(ReportBuilder.check("commutative, unital and associative", False, exc.message))

        gram = frobenius.gram
        inverse_holds = linalg.equal(linalg.dot(gram, frobenius.dual_matrix, field), identity)
        report.checks.append(ReportBuilder.check("gram matrix symmetric", linalg.equal(gram, gram.T)))
        report.checks.append(ReportBuilder.check("gram matrix invertible", inverse_holds))
        duality = all(
            self.pairing(frobenius, algebra.basis_vector(i), b) == (field.one if i == j else field.zero)
            for i in range(d)
            for j, b in enumerate(frobenius.dual_basis)
        )
        report.checks.append(ReportBuilder.check("mu(a_i b_j) = delta_ij", duality))
        cap = frobenius.mu.reshape(1, d)
        snake = linalg.dot(linalg.kron(cap, identity), frobenius.comul_matrix, field)
        report.checks.append(ReportBuilder.check("counit law (mu (x) 1) comul = 1", linalg.equal(snake, identity)))
        report.extend(tqft_service.frobenius_relation_check(frobenius))
        logger.info(f"Axiom check: {len(report.failures)} failures out of {len(report.checks)}")
        return report

    def socle_generator(self, frobenius: FrobeniusAlgebra) -> Optional[np.ndarray]:
        """The socle element s with mu(s) = 1, or None when the socle is not a line"""
        soc = algebra_service.socle(frobenius.algebra)
        if soc.dim != 1:
            return None
        generator = soc.basis[0]
        return generator * frobenius.field.inv(frobenius.counit(generator))


frobenius_service = FrobeniusService()
