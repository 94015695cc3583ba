"""Weighted projective hypersurface embeddings compiled from normal forms.

For normal-form data ``(d, e_+, e_-, k, Q)`` the surface is (the
normalization of) ``D_+(z)`` on the hypersurface ``F = 0`` in
``P(e_+, k e_- + d deg Q, d, 1)`` with

    F = x^k y - s^(k(e_+ + e_-)) * Q(s^d / z) * z^(deg Q).

Setting ``z = 1`` gives the affine relation of the d-fold cyclic cover,
which the oracles here check by direct substitution.
"""

from __future__ import annotations

import itertools
from dataclasses import dataclass, field
from math import gcd
from typing import Sequence

from .algebra import (
    LaurentElement,
    MultiPoly,
    RationalFunction,
    UniPoly,
    is_squarefree,
    weighted_degree,
    weighted_degree_check,
)
from .dpd import NormalFormData, is_toric

XYS = ("x", "y", "s")


@dataclass(frozen=True)
class EmbeddingFlags:
    all_weights_positive: bool
    normality_certified: bool
    toric: bool
    alpha_used: int = 0

    def to_json(self) -> dict:
        return {
            "all_weights_positive": self.all_weights_positive,
            "normality_certified": self.normality_certified,
            "toric": self.toric,
            "alpha_used": self.alpha_used,
        }


@dataclass(frozen=True)
class EmbeddingData:
    F: MultiPoly
    weights: tuple
    degree: int
    flags: EmbeddingFlags
    nf: NormalFormData = field(repr=False, compare=False, default=None)

    @property
    def ambient(self) -> tuple:
        return self.weights

    def ambient_str(self) -> str:
        return format_ambient(self.weights)

    def statement(self) -> str:
        core = f"D_+(z) in V_+({self.F}) in {self.ambient_str()}"
        if self.flags.normality_certified:
            return core
        return f"normalization of {core}"


def format_ambient(weights: Sequence[int]) -> str:
    return "P(" + ",".join(str(w) for w in weights) + ")"


def _subtrahend(nf: NormalFormData, alpha: int) -> MultiPoly:
    """``s^(k(e_+ + e_-)) * sum_j q_j s^(dj) z^(deg Q + alpha - j)``."""
    top = nf.deg_q + alpha
    base = nf.k * nf.e_sum
    terms = {}
    for j, q in enumerate(nf.Q.coeffs):
        if q:
            terms[(0, 0, top - j, base + nf.d * j)] = q
    return MultiPoly(("x", "y", "z", "s"), terms)


def _build(nf: NormalFormData, alpha: int) -> EmbeddingData:
    head = MultiPoly.monomial({"x": nf.k, "y": 1})
    F = head - _subtrahend(nf, alpha)
    weights = (nf.e_plus, nf.k * nf.e_minus + nf.d * (nf.deg_q + alpha), nf.d, 1)
    degree = nf.k * nf.e_sum + nf.d * (nf.deg_q + alpha)
    flags = EmbeddingFlags(
        all_weights_positive=all(w > 0 for w in weights),
        normality_certified=normality_flags(nf).certified,
        toric=is_toric(nf),
        alpha_used=alpha,
    )
    return EmbeddingData(F, weights, degree, flags, nf)


def build_embedding(nf: NormalFormData) -> EmbeddingData:
    return _build(nf, 0)


def minimal_alpha(nf: NormalFormData) -> int:
    alpha = 0
    while nf.k * nf.e_minus + nf.d * (nf.deg_q + alpha) <= 0:
        alpha += 1
    return alpha


def positive_weight_embedding(nf: NormalFormData) -> EmbeddingData:
    """Same affine model with the ``y`` weight pushed positive by ``z^alpha``."""
    return _build(nf, minimal_alpha(nf))


@dataclass(frozen=True)
class NormalityFlags:
    k_eq_1: bool
    zero_sum_reduced: bool

    @property
    def certified(self) -> bool:
        return self.k_eq_1 or self.zero_sum_reduced

    def to_json(self) -> dict:
        return {"k_eq_1": self.k_eq_1, "zero_sum_reduced": self.zero_sum_reduced, "certified": self.certified}


def normality_flags(nf: NormalFormData) -> NormalityFlags:
    # Q = 1 (D_0 = 0) counts as reduced.
    return NormalityFlags(nf.k == 1, nf.e_sum == 0 and is_squarefree(nf.Q))


def toric_replacement(nf: NormalFormData) -> EmbeddingData | None:
    """The ``k = 1`` model ``x y' - s^(e_+ + e_-)`` in ``P(e_+, e_-, d, 1)``."""
    if not is_toric(nf):
        return None
    variables = ("x", "y'", "z", "s")
    F = MultiPoly(variables, {(1, 1, 0, 0): 1, (0, 0, 0, nf.e_sum): -1})
    weights = (nf.e_plus, nf.e_minus, nf.d, 1)
    flags = EmbeddingFlags(
        all_weights_positive=all(w > 0 for w in weights),
        normality_certified=True,
        toric=True,
    )
    return EmbeddingData(F, weights, nf.e_sum, flags, nf)


@dataclass(frozen=True)
class CoveringPresentation:
    relation: MultiPoly
    action_exponents: tuple
    order: int

    def to_json(self) -> dict:
        return {"relation": str(self.relation), "action": list(self.action_exponents), "order": self.order}


def dehomogenize(E: EmbeddingData) -> CoveringPresentation:
    """``F(x, y, 1, s)`` with the E_d characters of ``x, y, s``."""
    nf = E.nf
    relation = E.F.specialize("z", 1)
    exps = (nf.e_plus % nf.d, (nf.k * nf.e_minus) % nf.d, 1 % nf.d)
    return CoveringPresentation(relation, exps, nf.d)


def covering_relation(nf: NormalFormData) -> MultiPoly:
    """``x^k y - s^(k(e_+ + e_-)) Q(s^d)`` assembled directly."""
    head = MultiPoly.monomial({"x": nf.k, "y": 1}, variables=XYS)
    q = MultiPoly.from_unipoly(nf.Q.compose_power(nf.d), "s", XYS)
    return head - MultiPoly.monomial({"s": nf.k * nf.e_sum}, variables=XYS) * q


def parametrization_values(nf: NormalFormData) -> dict:
    """``x = s^e_+ u`` and ``y = s^(k e_-) Q(s^d) u^-k`` as Laurent elements over Q(s)."""
    s = RationalFunction(UniPoly([0, 1]))
    x = LaurentElement({1: s**nf.e_plus}, var="s")
    y = LaurentElement({-nf.k: s ** (nf.k * nf.e_minus) * nf.Q.compose_power(nf.d)}, var="s")
    return {"x": x, "y": y, "s": LaurentElement.scalar(s, var="s")}


def parametrization_check(nf: NormalFormData, relation: MultiPoly | None = None) -> bool:
    """The relation vanishes identically on the parametrization."""
    if relation is None:
        relation = dehomogenize(build_embedding(nf)).relation
    value = relation.substitute(parametrization_values(nf), LaurentElement.scalar(1, var="s"))
    return value.is_zero()


def character_check(nf: NormalFormData, relation: MultiPoly | None = None) -> bool:
    """Every monomial carries the same E_d character."""
    if relation is None:
        relation = dehomogenize(build_embedding(nf)).relation
    chars = (nf.e_plus, nf.k * nf.e_minus, 1)
    seen = {weighted_degree(e, chars) % nf.d for e in relation.terms}
    return len(seen) <= 1


def homogeneity_check(E: EmbeddingData) -> bool:
    return weighted_degree_check(E.F, E.weights) == E.degree


@dataclass(frozen=True)
class ReducedPresentation:
    """``D_+(G)`` in the weighted projective space with ``z`` removed."""

    G: MultiPoly
    weights: tuple

    @property
    def all_weights_positive(self) -> bool:
        return all(w > 0 for w in self.weights)

    def __str__(self) -> str:
        return f"D_+({self.G}) in {format_ambient(self.weights)}"


def eliminate_z(E: EmbeddingData) -> ReducedPresentation | None:
    """Solve ``F = 0`` for ``z`` when ``z`` occurs once, linearly, with constant coefficient."""
    zi = E.F.variables.index("z")
    with_z = [(e, c) for e, c in E.F.terms.items() if e[zi]]
    if len(with_z) != 1:
        return None
    exps, c = with_z[0]
    if exps[zi] != 1 or any(x for i, x in enumerate(exps) if i != zi):
        return None
    rest = MultiPoly(E.F.variables, {e: v for e, v in E.F.terms.items() if e != exps})
    G = (rest / c).specialize("z", 0)
    weights = tuple(w for i, w in enumerate(E.weights) if i != zi)
    return ReducedPresentation(G, weights)


@dataclass(frozen=True)
class UniversalCover:
    equation: MultiPoly
    action_exponents: tuple
    order: int

    def to_json(self) -> dict:
        return {"equation": str(self.equation), "action": list(self.action_exponents), "order": self.order}


def universal_cover_form(e: int, d: int, k: int) -> UniversalCover:
    """``x^k y - (s^d - 1)`` with ``zeta.(x, y, s) = (zeta x, zeta^-k y, zeta^e s)``."""
    if d < 1 or e < 1:
        raise ValueError("e and d must be positive")
    if gcd(e, d) != 1:
        raise ValueError(f"gcd(e, d) = gcd({e}, {d}) must be 1")
    if k <= 1:
        raise ValueError(f"k must exceed 1, got {k}")
    eq = MultiPoly(XYS, {(k, 1, 0): 1, (0, 0, d): -1, (0, 0, 0): 1})
    return UniversalCover(eq, (1 % d, (-k) % d, e % d), d)


def cover_invariance_check(cover: UniversalCover) -> bool:
    """The defining equation is E_d-invariant."""
    chars = {weighted_degree(e, cover.action_exponents) % cover.order for e in cover.equation.terms}
    return chars == {0}


def invariant_monomials(weights: Sequence[int], d: int, bound: int) -> list[tuple]:
    """Exponent vectors of total degree <= bound and weighted degree divisible by d."""
    if d < 1:
        raise ValueError("d must be positive")
    if bound < 0:
        raise ValueError("bound must be nonnegative")
    out = []
    for exps in itertools.product(range(bound + 1), repeat=len(weights)):
        if sum(exps) <= bound and weighted_degree(exps, weights) % d == 0:
            out.append(exps)
    return sorted(out, key=lambda e: (sum(e), tuple(-x for x in e)))


def localized_degree_zero_count(e: int, d: int, bound: int) -> int:
    """Count ``x^a y^b z^-j`` of degree 0 in ``Q[x, y, z, 1/z]`` with weights (1, e, d).

    Enumerates by the power of ``z`` rather than by residues.
    """
    count = 0
    j = 0
    while j * d <= bound * max(1, e):
        for b in range(bound + 1):
            a = j * d - e * b
            if a >= 0 and a + b <= bound:
                count += 1
        j += 1
    return count


def report(E: EmbeddingData) -> dict:
    """Report object for one embedding, in the documented JSON shape."""
    nf = E.nf
    return {
        "F": str(E.F),
        "weights": list(E.weights),
        "ambient": E.ambient_str(),
        "degree": E.degree,
        "flags": E.flags.to_json(),
        "checks": {
            "homogeneous": homogeneity_check(E),
            "parametrization": parametrization_check(nf),
            "character": character_check(nf),
        },
    }
