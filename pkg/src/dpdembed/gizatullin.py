"""Gizatullin surfaces with finite divisor class group.

Toric case: ``V_{d,e} = A^2 / E_d`` is ``D_+(z)`` in ``P(1, e, d)``.
Non-toric case, pair ``(-(e/m)[p], (e/m)[p] - c[q])``: ``D_+(f)`` in
``P(a, b, c)`` with ``f = u'_+ u'_- - tau^m``, ``a + b = cm``.
"""

from __future__ import annotations

import math
from dataclasses import dataclass
from fractions import Fraction

from .algebra import LaurentElement, MultiPoly, RationalFunction, UniPoly
from .divisors import QDivisor
from .dpd import DPDPair, is_toric, section_generator, to_normal_form
from .embedding import format_ambient, invariant_monomials, localized_degree_zero_count

PLANE_VARS = ("uplus", "uminus", "tau")


# -- toric case --------------------------------------------------------


@dataclass(frozen=True)
class ToricEmbedding:
    d: int
    e: int

    @property
    def ambient(self) -> tuple:
        return (1, self.e, self.d)

    @property
    def quotient_exponents(self) -> tuple:
        return (1 % self.d, self.e % self.d)

    open_part = "D_+(z)"
    torus_action = "(l1, l2).(x : y : z) = (l1*x : l2*y : z)"

    def to_json(self) -> dict:
        return {
            "case": "toric",
            "ambient": format_ambient(self.ambient),
            "open_part": self.open_part,
            "action": list(self.quotient_exponents),
            "order": self.d,
            "torus_action": self.torus_action,
        }


def toric_embedding(d: int, e: int) -> ToricEmbedding:
    if d < 1 or e < 1:
        raise ValueError(f"d and e must be positive, got d={d}, e={e}")
    return ToricEmbedding(d, e)


def toric_monomial_counts(d: int, e: int, bound: int) -> tuple[int, int]:
    """Invariants of ``Q[x, y]`` under E_d vs degree-0 part of ``Q[x, y, z][1/z]``."""
    return len(invariant_monomials((1, e), d, bound)), localized_degree_zero_count(e, d, bound)


def toric_iso_check(d: int, e: int, e2: int) -> bool:
    if not (1 <= e < d and 1 <= e2 < d):
        raise ValueError(f"need 1 <= e, e2 < d, got d={d}, e={e}, e2={e2}")
    return (e - e2) % d == 0 or (e * e2) % d == 1 % d


def canonical_toric_e(d: int, e: int) -> int:
    """Smallest representative of ``{e, e^-1}`` mod d."""
    if d == 1:
        return 1
    e %= d
    if math.gcd(e, d) != 1:
        return e
    return min(e, pow(e, -1, d))


def cone_type(v1: tuple, v2: tuple) -> tuple[int, int]:
    """``(n, q)`` with the cone spanned by ``v1, v2`` equal to ``cone(w', n w - q v1)``.

    ``v1, v2`` must be primitive and independent; ``q`` is defined mod ``n``
    and becomes its inverse when the rays are swapped.
    """
    det = v1[0] * v2[1] - v1[1] * v2[0]
    if det == 0:
        raise ValueError("rays are dependent")
    if det < 0:
        v1, v2, det = v2, v1, -det
    g, x, y = _ext_gcd(v1[0], v1[1])
    if g != 1:
        raise ValueError(f"{v1} is not primitive")
    w = (-y, x)
    alpha = v2[0] * w[1] - v2[1] * w[0]
    return det, (-alpha) % det


def _ext_gcd(a: int, b: int) -> tuple[int, int, int]:
    if b == 0:
        return (abs(a), 1 if a >= 0 else -1, 0)
    g, x, y = _ext_gcd(b, a % b)
    return g, y, x - (a // b) * y


def _primitive(v: tuple) -> tuple:
    g = math.gcd(*v)
    return (v[0] // g, v[1] // g)


def toric_type_of_normal_form(nf) -> tuple[int, int]:
    """``(d, e)`` with the surface of ``nf`` (``Q = 1``) equal to ``V_{d,e}``.

    The semigroup of ``A`` in (u-degree, t-exponent) coordinates is cut out
    by the rays ``(d, e_+)`` and ``(-d, e_-)``; ``V_{d,e}`` has cone type
    ``(d, -e mod d)`` in the same normalization.
    """
    if not is_toric(nf):
        raise ValueError("normal form is not toric (Q != 1)")
    if nf.e_sum == 0:
        raise ValueError("e_plus + e_minus = 0: the cone is a half-plane (A^1 x A^1_*)")
    n, q = cone_type(_primitive((nf.d, nf.e_plus)), _primitive((-nf.d, nf.e_minus)))
    return n, canonical_toric_e(n, (-q) % n)


def toric_pair(d: int, e: int) -> DPDPair:
    """A DPD pair of ``V_{d,e}``, from the grading by ``x^(d-e) y`` -> degree 0."""
    if d == 1:
        return DPDPair(QDivisor.point(0, -1), QDivisor.zero())
    if not (1 <= e < d and math.gcd(e, d) == 1):
        raise ValueError(f"need 1 <= e < d coprime, got d={d}, e={e}")
    return DPDPair(QDivisor.zero(), QDivisor.point(0, Fraction(-d, d - e)))


# -- non-toric case ----------------------------------------------------


@dataclass(frozen=True)
class GizatullinParams:
    e: int
    m: int
    c: int
    p: Fraction = Fraction(0)
    q: Fraction = Fraction(1)

    def __post_init__(self):
        object.__setattr__(self, "p", Fraction(self.p))
        object.__setattr__(self, "q", Fraction(self.q))
        if not 1 <= self.e < self.m:
            raise ValueError(f"need 1 <= e < m, got e={self.e}, m={self.m}")
        if math.gcd(self.e, self.m) != 1:
            raise ValueError(f"e and m must be coprime, got e={self.e}, m={self.m}")
        if self.c < 1:
            raise ValueError(f"need c >= 1, got {self.c}")
        if self.p == self.q:
            raise ValueError("the points p and q must differ")

    def pair(self) -> DPDPair:
        r = Fraction(self.e, self.m)
        return DPDPair(
            QDivisor.point(self.p, -r),
            QDivisor.point(self.p, r) + QDivisor.point(self.q, -self.c),
        )

    def standard_pair(self) -> DPDPair:
        """The pair moved so that ``p = 0`` and ``q = 1``."""
        return self.pair().affine_transport(self.q - self.p, self.p)


def find_gamma(e: int, m: int, c: int) -> int:
    """Least ``gamma >= 0`` with ``gcd(gamma*m - e, c) = 1``."""
    if math.gcd(e, m) != 1:
        raise ValueError(f"e and m must be coprime, got e={e}, m={m}")
    if c < 1:
        raise ValueError("c must be positive")
    gamma = 0
    while math.gcd(gamma * m - e, c) != 1:
        gamma += 1
    return gamma


@dataclass(frozen=True)
class PlaneEmbedding:
    a: int
    b: int
    c: int
    m: int
    gamma: int

    @property
    def d(self) -> int:
        return self.c * self.m

    @property
    def weights(self) -> tuple:
        return (self.a, self.b, self.c)

    @property
    def action_exponents(self) -> tuple:
        return (self.a, self.b % self.d, self.c)

    @property
    def equation(self) -> MultiPoly:
        return MultiPoly(PLANE_VARS, {(1, 1, 0): 1, (0, 0, self.m): -1})

    def invariant_violations(self, e: int) -> list[str]:
        out = []
        if self.a + self.b != self.c * self.m:
            out.append("a + b != cm")
        if math.gcd(self.a, self.b) != 1:
            out.append("gcd(a, b) != 1")
        if not 1 <= self.a < self.d:
            out.append("a outside [1, d)")
        if (self.a - e) % self.m:
            out.append("a != e mod m")
        if (self.b + e) % self.m:
            out.append("b != -e mod m")
        return out

    def statement(self) -> str:
        return f"D_+({self.equation}) in {format_ambient(self.weights)}"

    def to_json(self) -> dict:
        return {
            "case": "nontoric",
            "ambient": format_ambient(self.weights),
            "equation": str(self.equation),
            "action": list(self.action_exponents),
            "order": self.d,
            "gamma": self.gamma,
            "invariants": {"a_mod_m": self.a % self.m, "b_mod_m": self.b % self.m},
        }


def _gamma_candidates():
    yield 0
    n = 1
    while True:
        yield n
        yield -n
        n += 1


def plane_embedding(gp: GizatullinParams) -> PlaneEmbedding:
    d = gp.c * gp.m
    for gamma in _gamma_candidates():
        if math.gcd(gamma * gp.m - gp.e, gp.c) != 1:
            continue
        a = (gp.e - gamma * gp.m) % d
        if 1 <= a < d:
            return PlaneEmbedding(a, d - a, gp.c, gp.m, gamma)


def gizatullin_generators(gp: GizatullinParams) -> dict[str, LaurentElement]:
    """``u_+, u_-, v_+, v_-`` read off the section generators in degrees ±1, ±m."""
    pair = gp.standard_pair()
    return {
        "u_plus": LaurentElement.u(1, section_generator(pair, 1)),
        "u_minus": LaurentElement.u(-1, section_generator(pair, -1)),
        "v_plus": LaurentElement.u(gp.m, section_generator(pair, gp.m)),
        "v_minus": LaurentElement.u(-gp.m, section_generator(pair, -gp.m)),
    }


def expected_generators(gp: GizatullinParams) -> dict[str, LaurentElement]:
    t = RationalFunction(UniPoly([0, 1]))
    t1 = t - 1
    e, m, c = gp.e, gp.m, gp.c
    return {
        "u_plus": LaurentElement.u(1, t),
        "u_minus": LaurentElement.u(-1, t1**c),
        "v_plus": LaurentElement.u(m, t**e),
        "v_minus": LaurentElement.u(-m, t ** (-e) * t1 ** (c * m)),
    }


def check_generator_relations(gens: dict[str, LaurentElement], e: int, m: int, c: int) -> bool:
    t = RationalFunction(UniPoly([0, 1]))
    up, um, vp, vm = gens["u_plus"], gens["u_minus"], gens["v_plus"], gens["v_minus"]
    return (
        up**m == vp * t ** (m - e)
        and um**m == vm * t**e
        and up * um == LaurentElement.scalar(t * (t - 1) ** c)
    )


def generator_relations_check(gp: GizatullinParams) -> bool:
    gens = gizatullin_generators(gp)
    return gens == expected_generators(gp) and check_generator_relations(gens, gp.e, gp.m, gp.c)


def action_consistency_check(pe: PlaneEmbedding, gp: GizatullinParams) -> bool:
    if pe.c != gp.c or pe.m != gp.m:
        raise ValueError("plane embedding was not built from these parameters")
    d = pe.d
    if pe.invariant_violations(gp.e):
        return False
    if (pe.a + pe.b) % d or (pe.c * pe.m) % d:
        return False
    # u'_+^c = tau^(e-m) u_+ with u_+ invariant: characters a*c and (e-m)*c agree.
    if (pe.a * pe.c - (gp.e - gp.m) * pe.c) % d:
        return False
    gens = gizatullin_generators(gp)
    product = (gens["v_plus"] * gens["v_minus"]).coefficient(0)
    tau_m_minus_1 = UniPoly.monomial(gp.m) - 1
    return product.compose_power(gp.m) == RationalFunction(tau_m_minus_1**d)


# -- classification ----------------------------------------------------


@dataclass(frozen=True)
class Classification:
    case: str
    toric: ToricEmbedding | None = None
    params: GizatullinParams | None = None
    plane: PlaneEmbedding | None = None
    shift: RationalFunction | None = None
    reason: str = ""

    def to_json(self) -> dict:
        if self.case == "toric":
            return self.toric.to_json() | {"d": self.toric.d, "e": self.toric.e}
        if self.case == "nontoric":
            gp = self.params
            return self.plane.to_json() | {
                "params": {"e": gp.e, "m": gp.m, "c": gp.c, "p": str(gp.p), "q": str(gp.q)},
                "shift": str(self.shift),
            }
        return {"case": "other", "reason": self.reason}


def _nontoric_shape(p: DPDPair) -> tuple[GizatullinParams, RationalFunction] | str:
    total = p.plus + p.minus
    if len(total.entries) != 1 or total.entries[0][0].degree != 1:
        return "D_+ + D_- is not -c[q] for a single rational point q"
    poly, c = total.entries[0]
    if c.denominator != 1 or c >= 0:
        return "D_+ + D_- is not -c[q] with c a positive integer"
    q = -poly[0]
    frac = p.plus.fractional_part()
    if frac.is_zero():
        return "D_+ is integral"
    if len(frac.entries) != 1 or frac.entries[0][0].degree != 1:
        return "the fractional part of D_+ is not concentrated at one rational point"
    fpoly, f = frac.entries[0]
    point = -fpoly[0]
    if point == q:
        return "the fractional parts sit at the point q"
    r = 1 - f
    gp = GizatullinParams(r.numerator, r.denominator, int(-c), point, q)
    witness = (p.plus - gp.pair().plus).to_function()
    return gp, witness


def classify(p: DPDPair) -> Classification:
    nf, _ = to_normal_form(p)
    if is_toric(nf):
        if nf.e_sum == 0:
            return Classification("other", reason="toric with e_plus + e_minus = 0 (A^1 x A^1_*)")
        d, e = toric_type_of_normal_form(nf)
        return Classification("toric", toric=toric_embedding(d, e))
    shape = _nontoric_shape(p)
    if isinstance(shape, str):
        return Classification("other", reason=shape)
    gp, witness = shape
    return Classification("nontoric", params=gp, plane=plane_embedding(gp), shift=witness)
