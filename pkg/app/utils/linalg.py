"""
Exact dense linear algebra over a ``BaseField``.

Matrices and vectors are numpy arrays with ``dtype=object`` whose entries are
scalars of one field. Row reduction and large products go through sympy's sparse
``DomainMatrix``; all results are exact. Scalars are always multiplied from the right of an array
(``row * c``), since sympy residues do not broadcast over numpy arrays.
"""

from typing import Any, Dict, Iterable, List, Optional, Sequence, Tuple

import numpy as np
from sympy.polys.matrices.domainmatrix import DomainMatrix

from app.utils.fields import BaseField, ScalarLike


def zeros(shape: Tuple[int, ...], field: BaseField) -> np.ndarray:
    return np.full(shape, field.zero, dtype=object)


def identity(n: int, field: BaseField) -> np.ndarray:
    """Construct an identity matrix I."""
    out = zeros((n, n), field)
    for i in range(n):
        out[i, i] = field.one
    return out


def vector(values: Iterable[ScalarLike], field: BaseField) -> np.ndarray:
    items = [field.convert(v) for v in values]
    out = zeros((len(items),), field)
    for i, v in enumerate(items):
        out[i] = v
    return out


def matrix(rows: Sequence[Sequence[ScalarLike]], field: BaseField, ncols: Optional[int] = None) -> np.ndarray:
    """Build a matrix from nested rows; ``ncols`` fixes the width of an empty matrix."""
    width = ncols if ncols is not None else (len(rows[0]) if rows else 0)
    out = zeros((len(rows), width), field)
    for i, row in enumerate(rows):
        for j, v in enumerate(row):
            out[i, j] = field.convert(v)
    return out


def unit_vector(n: int, i: int, field: BaseField) -> np.ndarray:
    out = zeros((n,), field)
    out[i] = field.one
    return out


def is_zero(a: np.ndarray, field: BaseField) -> bool:
    return all(field.is_zero(x) for x in a.flat)


def equal(a: np.ndarray, b: np.ndarray) -> bool:
    return a.shape == b.shape and all(x == y for x, y in zip(a.flat, b.flat))


def dot(a: np.ndarray, b: np.ndarray, field: BaseField) -> np.ndarray:
    """Matrix or vector product that stays in the field when an inner dimension is empty."""
    if a.shape[-1] == 0:
        shape = a.shape[:-1] + b.shape[1:]
        return zeros(shape, field)
    return np.dot(a, b)


def to_domain_matrix(m: np.ndarray, field: BaseField) -> DomainMatrix:
    """Sparse ``DomainMatrix`` over ``field.sympy_domain()`` holding the nonzero entries of ``m``."""
    rows: Dict[int, Dict[int, Any]] = {}
    for (i, j), x in np.ndenumerate(m):
        if not field.is_zero(x):
            rows.setdefault(int(i), {})[int(j)] = field.to_domain(x)
    return DomainMatrix(rows, m.shape, field.sympy_domain())


def from_domain_matrix(dm: DomainMatrix, field: BaseField) -> np.ndarray:
    out = zeros(dm.shape, field)
    for i, row in dm.to_sparse().rep.items():
        for j, c in row.items():
            out[i, j] = field.from_domain(c)
    return out


def matmul(a: np.ndarray, b: np.ndarray, field: BaseField) -> np.ndarray:
    """Product of two matrices through sparse ``DomainMatrix`` arithmetic; for large, mostly-zero operands."""
    if a.shape[1] == 0:
        return zeros((a.shape[0], b.shape[1]), field)
    return from_domain_matrix(to_domain_matrix(a, field).matmul(to_domain_matrix(b, field)), field)


def rref(m: np.ndarray, field: BaseField) -> Tuple[np.ndarray, List[int]]:
    """
    Reduced row echelon form.

    Returns:
        The reduced matrix and the list of pivot columns.
    """
    if m.size == 0:
        return m.copy(), []
    reduced, pivots = to_domain_matrix(m, field).rref()
    return from_domain_matrix(reduced, field), list(pivots)


def rank(m: np.ndarray, field: BaseField) -> int:
    if m.size == 0:
        return 0
    return len(rref(m, field)[1])


def nullspace(m: np.ndarray, field: BaseField) -> np.ndarray:
    """
    Basis of {x : m x = 0}, returned as the rows of a matrix in canonical form.
    """
    cols = m.shape[1]
    if m.shape[0] == 0:
        return identity(cols, field)
    r, pivots = rref(m, field)
    free = [c for c in range(cols) if c not in pivots]
    basis = []
    for f in free:
        v = zeros((cols,), field)
        v[f] = field.one
        for row, p in enumerate(pivots):
            v[p] = -r[row, f]
        basis.append(v)
    return span_basis(basis, cols, field)


def span_basis(vectors: Iterable[np.ndarray], dim: int, field: BaseField) -> np.ndarray:
    """Canonical basis (nonzero RREF rows) of the span of the given vectors."""
    items = list(vectors)
    if not items:
        return zeros((0, dim), field)
    stacked = zeros((len(items), dim), field)
    for i, v in enumerate(items):
        stacked[i, :] = v
    r, pivots = rref(stacked, field)
    return r[: len(pivots), :]


def in_span(basis: np.ndarray, v: np.ndarray, field: BaseField) -> bool:
    if basis.shape[0] == 0:
        return is_zero(v, field)
    return solve(basis.T, v, field) is not None


def inverse(m: np.ndarray, field: BaseField) -> np.ndarray:
    """
    Calculate the inverse of a square matrix.

    If m is non-square, a ValueError will be raised.
    If m is singular (non-invertible), a ZeroDivisionError will be raised.
    """
    if m.ndim != 2 or m.shape[0] != m.shape[1]:
        raise ValueError("matrix is not square (shape = {})".format(m.shape))
    n = m.shape[0]
    augmented = np.hstack((m, identity(n, field)))
    r, pivots = rref(augmented, field)
    if pivots[:n] != list(range(n)):
        raise ZeroDivisionError("matrix is singular")
    return r[:, n:]


def solve(m: np.ndarray, b: np.ndarray, field: BaseField) -> Optional[np.ndarray]:
    """One solution of m x = b, or None when the system is inconsistent."""
    rows, cols = m.shape
    if cols == 0:
        return zeros((0,), field) if is_zero(b, field) else None
    augmented = np.hstack((m, b.reshape(rows, 1)))
    r, pivots = rref(augmented, field)
    if cols in pivots:
        return None
    x = zeros((cols,), field)
    for row, p in enumerate(pivots):
        x[p] = r[row, cols]
    return x


def determinant(m: np.ndarray, field: BaseField) -> object:
    """Determinant by Gaussian elimination, exact in the field."""
    n = m.shape[0]
    a = m.copy()
    det = field.one
    for col in range(n):
        pivot = next((i for i in range(col, n) if not field.is_zero(a[i, col])), None)
        if pivot is None:
            return field.zero
        if pivot != col:
            a[[col, pivot]] = a[[pivot, col]]
            det = -det
        det = det * a[col, col]
        inv = field.inv(a[col, col])
        for i in range(col + 1, n):
            if not field.is_zero(a[i, col]):
                a[i, :] = a[i, :] - a[col, :] * (a[i, col] * inv)
    return det


def leading_minors(m: np.ndarray, field: BaseField) -> List[object]:
    return [determinant(m[:k, :k], field) for k in range(1, m.shape[0] + 1)]


def intersect(a: np.ndarray, b: np.ndarray, field: BaseField) -> np.ndarray:
    """Intersection of two row spaces, in canonical form."""
    dim = a.shape[1]
    if a.shape[0] == 0 or b.shape[0] == 0:
        return zeros((0, dim), field)
    # x a = y b  <=>  [a; -b]^T [x; y] = 0
    stacked = np.vstack((a, b * -field.one)).T
    kernel = nullspace(stacked, field)
    vectors = [dot(k[: a.shape[0]], a, field) for k in kernel]
    return span_basis(vectors, dim, field)


def kron(a: np.ndarray, b: np.ndarray) -> np.ndarray:
    """Kronecker product of two matrices, first factor slowest."""
    r1, c1 = a.shape
    r2, c2 = b.shape
    return np.multiply.outer(a, b).transpose(0, 2, 1, 3).reshape(r1 * r2, c1 * c2)
