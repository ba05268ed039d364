"""
Univariate polynomials over the supported fields, via sympy ``Poly``.

Coefficient lists are ordered from the constant term upwards and hold field
scalars; sympy only sees the converted domain elements.
"""

from typing import List, Sequence, Tuple

from sympy import Poly, Symbol

from app.utils.fields import BaseField, Scalar

_X = Symbol("x")


def to_poly(coeffs: Sequence[Scalar], field: BaseField) -> Poly:
    domain = field.sympy_domain()
    rep = [field.to_sympy(c) for c in reversed(list(coeffs))]
    return Poly(rep, _X, domain=domain)


def from_poly(poly: Poly, field: BaseField) -> List[Scalar]:
    return [field.from_sympy(c) for c in reversed(poly.all_coeffs())]


def factor(poly: Poly) -> List[Tuple[Poly, int]]:
    """Monic irreducible factors with multiplicities, in sympy's order."""
    _, factors = poly.factor_list()
    return [(f.monic(), k) for f, k in factors]


def crt_idempotents(poly: Poly) -> List[Poly]:
    """
    Idempotents of F[x]/(poly) for its primary decomposition.

    For poly = g_1 ... g_r with pairwise coprime primary factors g_i, returns
    q_i with q_i = 1 mod g_i and q_i = 0 mod g_j (j != i). The q_i sum to 1
    modulo poly.
    """
    primaries = [f**k for f, k in factor(poly)]
    if len(primaries) < 2:
        return [Poly(1, _X, domain=poly.domain)]
    idempotents = []
    for g in primaries:
        h = poly.exquo(g)
        s, _, _ = h.gcdex(g)
        idempotents.append((s * h).rem(poly))
    return idempotents
