"""
Utility functions for testing: indecomposable building blocks, random
direct sums and random changes of basis.
"""
import random
from fractions import Fraction
from typing import Callable, List, Tuple, Union

import numpy as np

from app.models.decomposition import Nilpotent, Simple
from app.models.frobenius import FrobeniusAlgebra
from app.services.algebra_service import algebra_service
from app.services.frobenius_service import frobenius_service
from app.utils import linalg
from app.utils.fields import QQ_FIELD, BaseField

# (dim, classification tag, lambda text or nilpotency index)
Signature = Tuple[int, str, Union[str, int]]


def truncated(exponents: List[int], field: BaseField = QQ_FIELD) -> FrobeniusAlgebra:
    """F[x_1..x_r]/(x_i^k_i) with mu = coefficient of the top monomial."""
    algebra = algebra_service.truncated_polynomial_algebra(field, exponents)
    mu = [0] * (algebra.dim - 1) + [1]
    return frobenius_service.build_nilpotent(algebra, mu)


def indecomposable_pool() -> List[Tuple[Callable[[], FrobeniusAlgebra], Signature]]:
    """The building blocks of the decomposition round trip with their expected signatures."""
    pool: List[Tuple[Callable[[], FrobeniusAlgebra], Signature]] = []
    for lam in (Fraction(1), Fraction(2), Fraction(3), Fraction(1, 2)):
        pool.append((lambda lam=lam: frobenius_service.build_simple(lam), (1, "simple", str(lam))))
    pool.append((lambda: truncated([2]), (2, "nilpotent", 2)))
    pool.append((lambda: truncated([3]), (3, "nilpotent", 3)))
    pool.append((lambda: truncated([4]), (4, "nilpotent", 4)))
    pool.append((lambda: truncated([2, 2]), (4, "nilpotent", 3)))
    return pool


def random_invertible(rng: random.Random, dim: int, field: BaseField = QQ_FIELD) -> np.ndarray:
    """A random matrix with small integer entries and nonzero determinant."""
    while True:
        p = linalg.matrix([[rng.randint(-2, 2) for _ in range(dim)] for _ in range(dim)], field)
        if not field.is_zero(linalg.determinant(p, field)):
            return p


def random_direct_sum(
    seed: int, max_summands: int = 4, max_dim: int = 16
) -> Tuple[FrobeniusAlgebra, List[Signature]]:
    """A direct sum of 1..max_summands random blocks under a random change of basis."""
    rng = random.Random(seed)
    pool = indecomposable_pool()
    while True:
        picks = [rng.choice(pool) for _ in range(rng.randint(1, max_summands))]
        if sum(sig[0] for _, sig in picks) <= max_dim:
            break
    total = frobenius_service.direct_sum_all([build() for build, _ in picks])
    mixed = frobenius_service.change_basis(total, random_invertible(rng, total.dim))
    return mixed, sorted(sig for _, sig in picks)


def signature_of(classification: Union[Simple, Nilpotent], dim: int, field: BaseField = QQ_FIELD) -> Signature:
    if isinstance(classification, Simple):
        return (dim, classification.tag, field.format(classification.lam))
    return (dim, classification.tag, classification.nilpotency_index)
