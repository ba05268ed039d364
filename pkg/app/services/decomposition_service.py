from typing import List, Optional

import numpy as np
from sympy import Poly

from app.config.settings import settings
from app.exceptions import FieldUnsupportedException, NotIndecomposableException
from app.models.algebra import Algebra, Subspace
from app.models.decomposition import (
    TAG_ORDER,
    Classification,
    DecompositionResult,
    Nilpotent,
    Simple,
    SimpleFieldExtension,
    Summand,
)
from app.models.frobenius import FrobeniusAlgebra
from app.services.algebra_service import algebra_service
from app.services.frobenius_service import frobenius_service
from app.utils import linalg, polynomials
from app.utils.fields import format_vector
from app.utils.i18n import __
from app.utils.tracing import get_trace_logger

logger = get_trace_logger("decomposition-service")


class DecompositionService:
    """Splitting a Frobenius algebra into indecomposable blocks and naming them"""

    def primitive_idempotents(self, frobenius: FrobeniusAlgebra) -> List[np.ndarray]:
        """
        Complete list of primitive orthogonal idempotents, summing to 1.

        Idempotents are split in A itself: for an idempotent e, the residue
        degree dim(eA) - dim(eN) certifies primitivity when it is 1; otherwise
        minimal polynomials of elements of eA are factored and the
        Chinese-remainder idempotents of a reducible one split e.

        Raises:
            FieldUnsupportedException: unsupported characteristic, or no splitting element found
        """
        algebra = frobenius.algebra
        field = algebra.field
        radical = algebra_service.nilradical(algebra)
        queue = [algebra.unit.copy()]
        primitive: List[np.ndarray] = []
        while queue:
            e = queue.pop()
            degree = self._residue_degree(algebra, radical, e)
            if degree == 1:
                primitive.append(e)
                continue
            parts = self._split(algebra, e, degree)
            if parts is None:
                primitive.append(e)
            else:
                logger.debug(f"Split idempotent {format_vector(field, e)} into {len(parts)} parts")
                queue.extend(parts)
        # descending lexicographic order: block idempotents of a direct sum come in block order
        primitive.sort(key=lambda v: tuple(field.sort_key(x) for x in v), reverse=True)
        return primitive

    def _residue_degree(self, algebra: Algebra, radical: Subspace, e: np.ndarray) -> int:
        le = algebra.left_matrix(e)
        if radical.is_zero:
            return linalg.rank(le, algebra.field)
        field = algebra.field
        return linalg.rank(le, field) - linalg.rank(linalg.dot(le, radical.basis.T, field), field)

    def _candidates(self, algebra: Algebra) -> List[np.ndarray]:
        field = algebra.field
        d = algebra.dim
        found = [algebra.basis_vector(j) for j in range(d)]
        for k in range(1, settings.SPLIT_ATTEMPTS + 1):
            found.append(linalg.vector([k**j for j in range(d)], field))
        return found

    def _split(self, algebra: Algebra, e: np.ndarray, degree: int) -> Optional[List[np.ndarray]]:
        """Orthogonal idempotents summing to e, or None when e is certified primitive"""
        field = algebra.field
        for x in self._candidates(algebra):
            y = algebra.product(e, x)
            minimal = self._minimal_polynomial(algebra, e, y)
            factors = polynomials.factor(minimal)
            if len(factors) > 1:
                return [self._evaluate(algebra, e, y, q) for q in polynomials.crt_idempotents(minimal)]
            if factors and factors[0][0].degree() == degree:
                return None
        raise FieldUnsupportedException(field.descriptor, __("algebra.no_splitting_element"))

    def _minimal_polynomial(self, algebra: Algebra, e: np.ndarray, y: np.ndarray) -> Poly:
        """Minimal polynomial of y in the algebra eA, whose unit is e"""
        field = algebra.field
        d = algebra.dim
        powers = [e]
        while True:
            following = algebra.product(powers[-1], y)
            basis = linalg.zeros((d, len(powers)), field)
            for j, v in enumerate(powers):
                basis[:, j] = v
            combination = linalg.solve(basis, following, field)
            if combination is not None:
                coeffs = [-c for c in combination] + [field.one]
                return polynomials.to_poly(coeffs, field)
            powers.append(following)

    def _evaluate(self, algebra: Algebra, e: np.ndarray, y: np.ndarray, poly: Poly) -> np.ndarray:
        """q(y) in eA, with y^0 = e"""
        field = algebra.field
        result = linalg.zeros((algebra.dim,), field)
        for c in reversed(polynomials.from_poly(poly, field)):
            result = algebra.product(result, y) + e * c
        return result

    def restrict(self, frobenius: FrobeniusAlgebra, p: np.ndarray) -> Summand:
        """
        The block pA with induced product, unit p and mu restricted.

        The block's basis is the canonical basis of the column space of L_p.
        """
        algebra = frobenius.algebra
        field = algebra.field
        lp = algebra.left_matrix(p)
        embedding = linalg.span_basis([lp[:, j] for j in range(algebra.dim)], algebra.dim, field)
        r = embedding.shape[0]
        coordinates = embedding.T

        def local(v: np.ndarray) -> np.ndarray:
            return linalg.solve(coordinates, v, field)  # type: ignore[return-value]

        mult = [
            [list(local(algebra.product(embedding[a], embedding[b]))) for b in range(r)] for a in range(r)
        ]
        names = [f"w{k}" for k in range(r)]
        block = algebra_service.build_algebra(field, names, mult, list(local(p)))
        mu = [frobenius.counit(embedding[a]) for a in range(r)]
        component = frobenius_service.attach_functional(block, mu)
        return Summand(
            idempotent=p, component=component, classification=self._classify_block(component), embedding=embedding
        )

    def decompose(self, frobenius: FrobeniusAlgebra) -> DecompositionResult:
        """Blocks p_i A for every primitive idempotent, classified and sorted"""
        field = frobenius.field
        summands = [self.restrict(frobenius, p) for p in self.primitive_idempotents(frobenius)]
        summands.sort(
            key=lambda s: (
                s.component.dim,
                TAG_ORDER[s.classification.tag],
                tuple(-field.sort_key(x) for x in s.idempotent),
            )
        )
        logger.info(f"Decomposed algebra of dim {frobenius.dim} into {len(summands)} blocks")
        return DecompositionResult(tuple(summands))

    def classify(self, frobenius: FrobeniusAlgebra) -> Classification:
        """
        Classify an indecomposable Frobenius algebra.

        Raises:
            NotIndecomposableException: more than one primitive idempotent
        """
        idempotents = self.primitive_idempotents(frobenius)
        if len(idempotents) != 1:
            raise NotIndecomposableException(len(idempotents))
        return self._classify_block(frobenius)

    def _classify_block(self, frobenius: FrobeniusAlgebra) -> Classification:
        algebra = frobenius.algebra
        field = algebra.field
        if algebra.dim == 1:
            return Simple(lam=field.inv(frobenius.counit(algebra.unit)))
        radical = algebra_service.nilradical(algebra)
        residue = algebra.dim - radical.dim
        if not radical.is_zero and residue == 1:
            generator = frobenius_service.socle_generator(frobenius)
            return Nilpotent(
                dim=algebra.dim,
                socle_generator=generator,
                nilpotency_index=algebra_service.nilpotency_index(algebra, radical),
            )
        return SimpleFieldExtension(degree=residue)


decomposition_service = DecompositionService()
