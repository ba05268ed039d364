from itertools import product
from typing import List, Optional, Sequence, Tuple

import numpy as np

from app.exceptions import (
    BadUnitException,
    DimensionMismatchException,
    FieldUnsupportedException,
    NonAssociativeException,
    NonCommutativeException,
    NotNilpotentTypeException,
)
from app.models.algebra import Algebra, Subspace, subspace
from app.utils import linalg
from app.utils.fields import BaseField, ScalarLike, format_vector
from app.utils.i18n import __
from app.utils.tracing import get_trace_logger

logger = get_trace_logger("algebra-service")


class AlgebraService:
    """Construction of validated algebras and their radical/socle machinery"""

    def build_algebra(
        self,
        field: BaseField,
        basis_names: Sequence[str],
        mult: Sequence[Sequence[Sequence[ScalarLike]]],
        unit: Sequence[ScalarLike],
    ) -> Algebra:
        """
        Build an algebra from its structure constants and check every axiom.

        Args:
            field: Base field
            basis_names: One name per basis vector
            mult: mult[i][j] is the coordinate vector of a_i a_j
            unit: Coordinates of the identity

        Raises:
            DimensionMismatchException: Inconsistent sizes (or dim 0)
            NonCommutativeException: a_i a_j != a_j a_i
            BadUnitException: u a_i != a_i
            NonAssociativeException: (a_i a_j) a_k != a_i (a_j a_k)
        """
        d = len(basis_names)
        if d == 0:
            raise DimensionMismatchException("basis", ">= 1", 0)
        if len(unit) != d:
            raise DimensionMismatchException("unit", d, len(unit))
        if len(mult) != d:
            raise DimensionMismatchException("mult", d, len(mult))
        structure = linalg.zeros((d, d, d), field)
        for i, row in enumerate(mult):
            if len(row) != d:
                raise DimensionMismatchException(f"mult[{i}]", d, len(row))
            for j, entry in enumerate(row):
                if len(entry) != d:
                    raise DimensionMismatchException(f"mult[{i}][{j}]", d, len(entry))
                for k, value in enumerate(entry):
                    structure[i, j, k] = field.convert(value)

        algebra = Algebra(field, tuple(basis_names), structure, linalg.vector(unit, field))
        self.validate(algebra)
        logger.debug(f"Built algebra of dim {d} over {field.descriptor}")
        return algebra

    def validate(self, algebra: Algebra) -> None:
        """Check commutativity, the unit law and associativity on all basis tuples"""
        d = algebra.dim
        field = algebra.field
        c = algebra.structure
        for i in range(d):
            for j in range(i + 1, d):
                if not linalg.equal(c[i, j, :], c[j, i, :]):
                    raise NonCommutativeException(i, j)

        unit_matrix = algebra.left_matrix(algebra.unit)
        for i in range(d):
            if not linalg.equal(unit_matrix[:, i], algebra.basis_vector(i)):
                raise BadUnitException(i)

        # left[i, j, k] = (a_i a_j) a_k; with commutativity a_i (a_j a_k) = left[j, k, i]
        left = linalg.matmul(c.reshape(d * d, d), c.reshape(d, d * d), field).reshape(d, d, d, d)
        right = np.moveaxis(left, 2, 0)
        for i, j, k in np.ndindex(d, d, d):
            if not linalg.equal(left[i, j, k], right[i, j, k]):
                raise NonAssociativeException(
                    i, j, k, format_vector(field, left[i, j, k]), format_vector(field, right[i, j, k])
                )

    def _check_vector(self, algebra: Algebra, x: np.ndarray, what: str = "vector") -> None:
        if x.shape != (algebra.dim,):
            raise DimensionMismatchException(what, algebra.dim, x.shape[0] if x.ndim else 0)

    def multiply(self, algebra: Algebra, x: np.ndarray, y: np.ndarray) -> np.ndarray:
        self._check_vector(algebra, x)
        self._check_vector(algebra, y)
        return algebra.product(x, y)

    def mult_operator(self, algebra: Algebra, x: np.ndarray) -> np.ndarray:
        """The regular representation L_x as a dim x dim matrix"""
        self._check_vector(algebra, x)
        return algebra.left_matrix(x)

    def power(self, algebra: Algebra, x: np.ndarray, k: int) -> np.ndarray:
        self._check_vector(algebra, x)
        result = algebra.unit.copy()
        for _ in range(k):
            result = algebra.product(result, x)
        return result

    def is_nilpotent(self, algebra: Algebra, x: np.ndarray) -> bool:
        """x is nilpotent iff L_x^dim = 0"""
        self._check_vector(algebra, x)
        lx = algebra.left_matrix(x)
        acc = linalg.identity(algebra.dim, algebra.field)
        for _ in range(algebra.dim):
            acc = linalg.dot(acc, lx, algebra.field)
        return linalg.is_zero(acc, algebra.field)

    def nilradical(self, algebra: Algebra) -> Subspace:
        """
        The ideal of nilpotent elements, as the kernel of the trace form
        T(x, y) = trace(L_{xy}).

        Raises:
            FieldUnsupportedException: characteristic p <= dim
        """
        field = algebra.field
        p = field.characteristic
        if p and p <= algebra.dim:
            raise FieldUnsupportedException(field.descriptor, __("algebra.char_too_small"))
        d = algebra.dim
        traces = linalg.vector(
            [np.trace(algebra.left_matrix(algebra.basis_vector(k))) for k in range(d)], field
        )
        form = np.tensordot(algebra.structure, traces, axes=([2], [0]))
        kernel = linalg.nullspace(form, field)
        logger.debug(f"Nilradical has dim {kernel.shape[0]}")
        return Subspace(kernel, d, field)

    def socle(self, algebra: Algebra, nilradical: Optional[Subspace] = None) -> Subspace:
        """Elements killed by every nilpotent; the whole space when there are none"""
        radical = nilradical if nilradical is not None else self.nilradical(algebra)
        d = algebra.dim
        if radical.is_zero:
            return Subspace(linalg.identity(d, algebra.field), d, algebra.field)
        stacked = np.vstack([algebra.left_matrix(v) for v in radical.vectors()])
        return Subspace(linalg.nullspace(stacked, algebra.field), d, algebra.field)

    def ideal_chain(self, algebra: Algebra) -> Tuple[List[Subspace], List[np.ndarray]]:
        """
        The chain socle = N_1 < N_2 < ... < N_n = A, where N_k is the preimage of
        the socle of A / N_{k-1}, and a basis adapted to it (socle first).

        Raises:
            NotNilpotentTypeException: zero nilradical or socle of dim != 1
        """
        field = algebra.field
        d = algebra.dim
        radical = self.nilradical(algebra)
        soc = self.socle(algebra, radical)
        if radical.is_zero or soc.dim != 1:
            raise NotNilpotentTypeException(soc.dim, radical.dim)

        multipliers = [algebra.left_matrix(v) for v in radical.vectors()]
        chain = [soc]
        while chain[-1].dim < d:
            previous = chain[-1]
            projection = previous.annihilator()
            # x is in N_k iff v x lies in N_{k-1} for every nilpotent v
            stacked = np.vstack([linalg.dot(projection, lv, field) for lv in multipliers])
            following = Subspace(linalg.nullspace(stacked, field), d, field)
            if following.dim <= previous.dim:
                raise NotNilpotentTypeException(soc.dim, radical.dim)
            chain.append(following)

        adapted: List[np.ndarray] = []
        for level in chain:
            for v in level.vectors():
                candidate = adapted + [v]
                if linalg.span_basis(candidate, d, field).shape[0] == len(candidate):
                    adapted.append(v)
        logger.debug(f"Ideal chain dims: {[s.dim for s in chain]}")
        return chain, adapted

    def power_chain(self, algebra: Algebra, radical: Optional[Subspace] = None) -> List[Subspace]:
        """N, N^2, ... up to the first zero power (included)"""
        radical = radical if radical is not None else self.nilradical(algebra)
        d = algebra.dim
        chain = [radical]
        while not chain[-1].is_zero:
            products = [algebra.product(v, w) for v in chain[-1].vectors() for w in radical.vectors()]
            chain.append(subspace(products, d, algebra.field))
        return chain

    def nilpotency_index(self, algebra: Algebra, radical: Optional[Subspace] = None) -> int:
        """Smallest k >= 1 with N^k = 0 (1 for an algebra without nilpotents)"""
        return len(self.power_chain(algebra, radical))

    def change_basis(self, algebra: Algebra, p: np.ndarray, basis_names: Optional[Sequence[str]] = None) -> Algebra:
        """
        Rewrite the algebra in the basis given by the columns of p.

        Raises:
            DimensionMismatchException: p has the wrong shape or is singular
        """
        d = algebra.dim
        field = algebra.field
        if p.shape != (d, d):
            raise DimensionMismatchException("change of basis", (d, d), p.shape)
        try:
            p_inv = linalg.inverse(p, field)
        except ZeroDivisionError:
            raise DimensionMismatchException("change of basis", "invertible", "singular")
        c = algebra.structure
        # sum_ij p[i, a] p[j, b] c[i, j, :], then p^-1 on the result, one index at a time
        first = linalg.matmul(p.T, c.reshape(d, d * d), field).reshape(d, d, d)
        second = linalg.matmul(first.transpose(0, 2, 1).reshape(d * d, d), p, field).reshape(d, d, d)
        structure = linalg.matmul(second.transpose(0, 2, 1).reshape(d * d, d), p_inv.T, field).reshape(d, d, d)
        names = tuple(basis_names) if basis_names is not None else tuple(f"v{i}" for i in range(d))
        return Algebra(field, names, structure, linalg.dot(p_inv, algebra.unit, field))

    def truncated_polynomial_algebra(self, field: BaseField, exponents: Sequence[int]) -> Algebra:
        """
        F[x_1, ..., x_r] / (x_1^k_1, ..., x_r^k_r) in the monomial basis,
        monomials in lexicographic exponent order.
        """
        letters = "xyzwuv"
        monomials = list(product(*[range(k) for k in exponents]))
        index = {m: i for i, m in enumerate(monomials)}
        d = len(monomials)

        def name(m: Tuple[int, ...]) -> str:
            parts = [letters[i] + (f"^{e}" if e > 1 else "") for i, e in enumerate(m) if e]
            return "".join(parts) or "1"

        mult = []
        for m1 in monomials:
            row = []
            for m2 in monomials:
                entry = [0] * d
                s = tuple(a + b for a, b in zip(m1, m2))
                if s in index:
                    entry[index[s]] = 1
                row.append(entry)
            mult.append(row)
        unit = [1] + [0] * (d - 1)
        return self.build_algebra(field, [name(m) for m in monomials], mult, unit)


algebra_service = AlgebraService()
