"""
Unit tests for exact linear algebra over object-dtype arrays.
"""
from fractions import Fraction

import numpy as np
import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from app.utils import linalg
from app.utils.fields import QQ_FIELD, PrimeField

square_matrices = st.lists(st.lists(st.integers(-3, 3), min_size=3, max_size=3), min_size=3, max_size=3)


@pytest.mark.unit
class TestLinalg:
    """Test cases for the exact linear algebra helpers"""

    def test_rref_and_rank(self, qq):
        """Test row reduction on a rank-deficient matrix"""
        m = linalg.matrix([[1, 2, 3], [2, 4, 6], [1, 0, 1]], qq)
        r, pivots = linalg.rref(m, qq)
        assert pivots == [0, 1]
        assert linalg.rank(m, qq) == 2
        assert linalg.equal(r[2], linalg.zeros((3,), qq))

    def test_nullspace_is_canonical(self, qq):
        """Test that the kernel comes back in reduced form and is annihilated"""
        m = linalg.matrix([[1, 2, 3], [2, 4, 6]], qq)
        kernel = linalg.nullspace(m, qq)
        assert kernel.shape == (2, 3)
        assert linalg.is_zero(linalg.dot(m, kernel.T, qq), qq)
        assert kernel[0, 0] == 1 and kernel[1, 1] == 1

    def test_inverse(self, qq):
        """Test exact inversion"""
        m = linalg.matrix([[2, 1], [1, 1]], qq)
        inv = linalg.inverse(m, qq)
        assert linalg.equal(linalg.dot(m, inv, qq), linalg.identity(2, qq))
        assert inv[0, 0] == Fraction(1)

    def test_inverse_of_singular_matrix(self, qq):
        with pytest.raises(ZeroDivisionError):
            linalg.inverse(linalg.matrix([[1, 2], [2, 4]], qq), qq)

    def test_solve_consistent_and_inconsistent(self, qq):
        """Test that solve returns a solution or None"""
        m = linalg.matrix([[1, 1], [1, -1]], qq)
        x = linalg.solve(m, linalg.vector([3, 1], qq), qq)
        assert list(x) == [2, 1]
        singular = linalg.matrix([[1, 1], [1, 1]], qq)
        assert linalg.solve(singular, linalg.vector([1, 2], qq), qq) is None

    def test_determinant_and_minors(self, qq):
        m = linalg.matrix([[2, 1], [1, 3]], qq)
        assert linalg.determinant(m, qq) == 5
        assert linalg.leading_minors(m, qq) == [2, 5]

    def test_intersection_of_subspaces(self, qq):
        """Test that span(e0, e1) and span(e1, e2) meet in span(e1)"""
        a = linalg.matrix([[1, 0, 0], [0, 1, 0]], qq)
        b = linalg.matrix([[0, 1, 0], [0, 0, 1]], qq)
        meet = linalg.intersect(a, b, qq)
        assert meet.shape[0] == 1
        assert linalg.in_span(meet, linalg.unit_vector(3, 1, qq), qq)

    def test_kron_orders_first_factor_slowest(self, qq):
        """Test that kron(a, b)[i*n + k, j*m + l] = a[i, j] b[k, l]"""
        a = linalg.matrix([[1, 2], [3, 4]], qq)
        b = linalg.matrix([[0, 1], [1, 0]], qq)
        k = linalg.kron(a, b)
        assert k.shape == (4, 4)
        assert k[1, 0] == 1 and k[0, 1] == 1 and k[2, 1] == 3 and k[3, 3] == 0

    def test_dot_with_empty_inner_dimension(self, qq):
        """Test that an empty product is a zero matrix of field scalars"""
        out = linalg.dot(linalg.zeros((2, 0), qq), linalg.zeros((0, 3), qq), qq)
        assert out.shape == (2, 3)
        assert all(isinstance(x, Fraction) for x in out.flat)

    def test_prime_field_elimination(self):
        """Test that a matrix singular mod 3 loses rank in F_3"""
        f3 = PrimeField(3)
        m = linalg.matrix([[1, 2], [2, 1]], f3)
        assert linalg.rank(m, f3) == 1
        f5 = PrimeField(5)
        assert linalg.rank(linalg.matrix([[1, 2], [2, 1]], f5), f5) == 2

    def test_equal_compares_shape(self, qq):
        assert not linalg.equal(linalg.zeros((2,), qq), linalg.zeros((3,), qq))
        assert isinstance(linalg.identity(2, qq), np.ndarray)

    def test_rref_keeps_field_scalars(self, qq, f5):
        r, pivots = linalg.rref(linalg.matrix([[2, 1, 1], [0, 0, 3]], qq), qq)
        assert pivots == [0, 2]
        assert [[qq.format(x) for x in row] for row in r] == [["1", "1/2", "0"], ["0", "0", "1"]]
        assert all(isinstance(x, Fraction) for x in r.flat)
        r, _ = linalg.rref(linalg.matrix([[2, 1]], f5), f5)
        assert [f5.format(x) for x in r[0]] == ["1", "3"]

    def test_matmul_matches_dot(self, qq, f5):
        for field in (qq, f5):
            a = linalg.matrix([[1, 0, 2], [0, 0, 0], ["1/2" if field is qq else 3, 1, 0]], field)
            b = linalg.matrix([[0, 1], [4, 0], [1, 1]], field)
            assert linalg.equal(linalg.matmul(a, b, field), linalg.dot(a, b, field))
        empty = linalg.matmul(linalg.zeros((2, 0), qq), linalg.zeros((0, 3), qq), qq)
        assert empty.shape == (2, 3)


@pytest.mark.unit
@settings(max_examples=40, deadline=None)
@given(rows=square_matrices)
def test_rank_nullity_and_inverse(rows):
    """Property: rank + nullity = n, and invertible matrices invert exactly"""
    m = linalg.matrix(rows, QQ_FIELD)
    kernel = linalg.nullspace(m, QQ_FIELD)
    assert linalg.rank(m, QQ_FIELD) + kernel.shape[0] == 3
    if QQ_FIELD.is_zero(linalg.determinant(m, QQ_FIELD)):
        assert kernel.shape[0] > 0
    else:
        assert linalg.equal(linalg.dot(m, linalg.inverse(m, QQ_FIELD), QQ_FIELD), linalg.identity(3, QQ_FIELD))
