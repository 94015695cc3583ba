"""DPD pairs of Q-divisors on the affine line and their normal form.

A pair ``(D_+, D_-)`` with ``D_+ + D_- <= 0`` describes the graded ring
``A = Q[t][D_+, D_-]`` inside ``Q(t)[u, u^-1]``: the degree ``i >= 0`` piece
is ``{f : div f + i D_+ >= 0} u^i`` and symmetrically for ``D_-``.
"""

from __future__ import annotations

import math
from dataclasses import dataclass, field
from fractions import Fraction

from .algebra import RationalFunction, UniPoly, is_squarefree, rational_roots
from .divisors import QDivisor, common_refinement, div_of
from .errors import InvalidPairError, NormalizationError


@dataclass(frozen=True)
class DPDPair:
    plus: QDivisor
    minus: QDivisor

    def __post_init__(self):
        if self.plus.var != self.minus.var:
            raise InvalidPairError("D_+ and D_- live on different lines")

    @property
    def var(self) -> str:
        return self.plus.var

    def interchange(self) -> "DPDPair":
        return DPDPair(self.minus, self.plus)

    def shift(self, D: QDivisor) -> "DPDPair":
        """``(D_+ - D, D_- + D)``; equivalent to self when ``D`` is principal."""
        return DPDPair(self.plus - D, self.minus + D)

    def affine_transport(self, alpha, beta) -> "DPDPair":
        return DPDPair(self.plus.affine_transport(alpha, beta), self.minus.affine_transport(alpha, beta))

    def __str__(self) -> str:
        return f"({self.plus}; {self.minus})"


def check_pair(p: DPDPair) -> list[str]:
    """Violated invariants, empty when the pair is valid."""
    problems = []
    total = p.plus + p.minus
    for poly, c in total.entries:
        if c > 0:
            problems.append(
                f"D_+ + D_- has coefficient {c} > 0 on div({poly.format(p.var)})"
            )
    return problems


def require_valid(p: DPDPair):
    problems = check_pair(p)
    if problems:
        raise InvalidPairError("; ".join(problems))


def are_equivalent(p1: DPDPair, p2: DPDPair) -> RationalFunction | None:
    """A witness ``f`` with ``D_+ = D'_+ + div f`` and ``D_- = D'_- - div f``."""
    if p1.var != p2.var:
        return None
    delta = p1.plus - p2.plus
    if not delta.is_integral():
        return None
    if p1.minus - p2.minus != -delta:
        return None
    return delta.to_function()


def interchange(p: DPDPair) -> DPDPair:
    return p.interchange()


# -- normal form -------------------------------------------------------


@dataclass(frozen=True)
class NormalFormData:
    """``D_+ = -(e_plus/d)[0]``, ``D_- = -(e_minus/d)[0] - (1/k) div(Q)``."""

    d: int
    e_plus: int
    e_minus: int
    k: int
    Q: UniPoly = field(default_factory=lambda: UniPoly([1]))

    def __post_init__(self):
        if self.d < 1:
            raise ValueError(f"d must be positive, got {self.d}")
        if not 0 < self.e_plus <= self.d:
            raise ValueError(f"need 0 < e_plus <= d, got e_plus={self.e_plus}, d={self.d}")
        if self.k < 1:
            raise ValueError(f"k must be positive, got {self.k}")
        if not self.Q.is_monic():
            raise ValueError(f"Q must be monic, got {self.Q}")
        if self.Q(0) == 0:
            raise ValueError("Q(0) must be nonzero")
        if self.e_plus + self.e_minus < 0:
            raise ValueError("e_plus + e_minus must be nonnegative")

    @property
    def deg_q(self) -> int:
        return self.Q.degree

    @property
    def e_sum(self) -> int:
        return self.e_plus + self.e_minus

    def D0(self, var: str = "t") -> QDivisor:
        return QDivisor.of(self.Q, 1, var)

    def to_pair(self, var: str = "t") -> DPDPair:
        plus = QDivisor.point(0, Fraction(-self.e_plus, self.d), var)
        minus = QDivisor.point(0, Fraction(-self.e_minus, self.d), var) + self.D0(var).scale(
            Fraction(-1, self.k)
        )
        return DPDPair(plus, minus)

    def to_json(self) -> dict:
        return {"d": self.d, "e_plus": self.e_plus, "e_minus": self.e_minus, "k": self.k, "Q": str(self.Q)}

    @classmethod
    def from_json(cls, obj: dict) -> "NormalFormData":
        from .parsing import parse_unipoly

        return cls(int(obj["d"]), int(obj["e_plus"]), int(obj["e_minus"]), int(obj["k"]), parse_unipoly(obj["Q"]))


@dataclass(frozen=True)
class Transcript:
    """How the input was moved to normal form.

    Apply ``interchanged``, then ``affine_transport(alpha, beta)``; the result
    equals the normal-form pair shifted by ``div(witness)``.
    """

    interchanged: bool
    alpha: Fraction
    beta: Fraction
    witness: RationalFunction

    def replay(self, p: DPDPair) -> DPDPair:
        q = p.interchange() if self.interchanged else p
        return q.affine_transport(self.alpha, self.beta)

    def to_json(self) -> dict:
        return {
            "interchanged": self.interchanged,
            "affine_map": [str(self.alpha), str(self.beta)],
            "witness": str(self.witness),
        }


def _fractional_point(D: QDivisor) -> tuple[str, Fraction | None]:
    """Locate the support of the fractional part of ``D``.

    Returns ``("empty", None)``, ``("point", p)`` or a failure reason.
    """
    frac = D.fractional_part()
    if frac.is_zero():
        return "empty", None
    support = frac.support()
    roots = rational_roots(support)
    if support.degree == 1:
        return "point", roots[0]
    if roots:
        return "multi_point", None
    return "irrational_locus", None


def to_normal_form(p: DPDPair) -> tuple[NormalFormData, Transcript]:
    require_valid(p)
    status, p0 = _fractional_point(p.plus)
    interchanged = False
    if status not in ("empty", "point"):
        status_m, p0_m = _fractional_point(p.minus)
        if status_m == "point":
            interchanged, status, p0 = True, status_m, p0_m
        else:
            raise NormalizationError(
                status,
                f"the fractional part of D_+ = {p.plus} is not concentrated at one rational point"
                + (" (several points)" if status == "multi_point" else " (non-rational locus)"),
            )
    if p0 is None:
        p0 = Fraction(0)
    q = p.interchange() if interchanged else p
    q = q.affine_transport(1, p0)
    var = q.var

    at0 = q.plus.eval_at(0)
    n = math.floor(at0) + 1
    away = q.plus - QDivisor.point(0, at0, var)
    shift = away + QDivisor.point(0, n, var)
    q = q.shift(shift)

    plus0 = q.plus.eval_at(0)
    minus0 = q.minus.eval_at(0)
    d = math.lcm(plus0.denominator, minus0.denominator)
    e_plus = -plus0 * d
    e_minus = -minus0 * d
    if e_plus.denominator != 1 or e_minus.denominator != 1:
        raise NormalizationError("denominator_mismatch", f"denominators at 0 do not divide d = {d}")

    rest = q.minus - QDivisor.point(0, minus0, var)
    if not rest.is_leq_zero():
        raise NormalizationError(
            "not_effective", f"D_- away from the special point must be <= 0, got {rest}"
        )
    k = 1
    for c in rest.coefficients():
        k = math.lcm(k, c.denominator)
    Q = rest.scale(-k).to_function().as_poly()
    nf = NormalFormData(d, int(e_plus), int(e_minus), k, Q)
    return nf, Transcript(interchanged, Fraction(1), Fraction(p0), shift.to_function())


# -- graded pieces -----------------------------------------------------


def section_generator(p: DPDPair, i: int) -> RationalFunction:
    """Generator ``g_i`` of ``A_i`` as a ``Q[t]``-module: ``prod P^(-floor(|i| c))``."""
    if i == 0:
        return RationalFunction(1)
    D = p.plus if i > 0 else p.minus
    n = abs(i)
    num, den = UniPoly([1]), UniPoly([1])
    for poly, c in D.entries:
        e = -math.floor(n * c)
        if e > 0:
            num = num * poly**e
        elif e < 0:
            den = den * poly ** (-e)
    return RationalFunction(num, den)


def contains(p: DPDPair, f: RationalFunction, i: int) -> bool:
    """Whether ``f u^i`` lies in ``A_i``."""
    if f.is_zero():
        raise ValueError("membership is tested for nonzero f")
    return (f / section_generator(p, i)).is_polynomial()


def generator_bound_holds(p: DPDPair, g: RationalFunction, i: int) -> bool:
    """``div(g) + |i| D_± >= 0`` evaluated on divisors."""
    D = p.plus if i >= 0 else p.minus
    return (div_of(g, p.var) + D.scale(abs(i))).is_effective()


def ring_closure_check(p: DPDPair, N: int) -> bool:
    """``g_i g_j`` is a polynomial multiple of ``g_{i+j}`` for all small degrees."""
    require_valid(p)
    # the atoms of a canonical divisor are pairwise coprime, so divisibility of
    # g_i g_j by g_{i+j} is read off exponents atom by atom
    atoms = common_refinement([p.plus, p.minus])
    plus = [p.plus.coefficient_on(a) for a in atoms]
    minus = [p.minus.coefficient_on(a) for a in atoms]

    def expo(i):
        cs = plus if i >= 0 else minus
        return [-math.floor(abs(i) * c) for c in cs]

    ex = {i: expo(i) for i in range(-N, N + 1)}
    for i in range(-N, N + 1):
        for j in range(-N, N + 1):
            if abs(i + j) > N:
                continue
            if any(a + b < c for a, b, c in zip(ex[i], ex[j], ex[i + j])):
                return False
    return True


# -- criteria ----------------------------------------------------------


def is_toric(nf: NormalFormData) -> bool:
    return nf.Q.is_one()


@dataclass(frozen=True)
class SmoothnessFlags:
    literal: bool
    pointwise: bool

    @property
    def agree(self) -> bool:
        return self.literal == self.pointwise


def _local_criterion(c_plus: Fraction, c_minus: Fraction) -> bool:
    return -c_plus.denominator * c_minus.denominator * (c_plus + c_minus) == 1


def smoothness_check(p: DPDPair) -> SmoothnessFlags:
    """Two readings of the smoothness criterion.

    ``literal`` tests ``-m_+ m_- (D_+(0) + D_-(0)) = 1`` at the
    special point only; ``pointwise`` tests it at every locus where
    ``D_+ + D_- < 0``.  Both also require ``D_0`` reduced.
    """
    nf, tr = to_normal_form(p)
    q = nf.to_pair(p.var)
    reduced = is_squarefree(nf.Q)
    literal = reduced and _local_criterion(q.plus.eval_at(0), q.minus.eval_at(0))
    pointwise = reduced
    for atom in common_refinement([q.plus, q.minus]):
        cp, cm = q.plus.coefficient_on(atom), q.minus.coefficient_on(atom)
        if cp + cm < 0 and not _local_criterion(cp, cm):
            pointwise = False
    return SmoothnessFlags(literal, pointwise)
