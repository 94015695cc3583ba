"""Exact arithmetic: rationals, polynomials, rational functions, Laurent algebra."""

from .laurent import LaurentElement
from .multipoly import XYZS, MultiPoly, NotHomogeneous, weighted_degree, weighted_degree_check
from .ratfunc import RationalFunction
from .unipoly import (
    ONE,
    T,
    UniPoly,
    coprime_basis,
    coprime_refine,
    format_scalar,
    is_squarefree,
    poly_gcd,
    rational_roots,
    squarefree_decompose,
)


def compose_power(q: UniPoly, d: int) -> UniPoly:
    """The polynomial ``q(s^d)``."""
    return q.compose_power(d)


__all__ = [
    "LaurentElement",
    "MultiPoly",
    "NotHomogeneous",
    "ONE",
    "RationalFunction",
    "T",
    "UniPoly",
    "XYZS",
    "compose_power",
    "coprime_basis",
    "coprime_refine",
    "format_scalar",
    "is_squarefree",
    "poly_gcd",
    "rational_roots",
    "squarefree_decompose",
    "weighted_degree",
    "weighted_degree_check",
]
