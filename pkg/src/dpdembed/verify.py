"""Grid verification harness behind ``dpdembed verify``.

Each grid cell is independent and pure.  ``fault`` corrupts one input
coefficient in the first cell of the named check, which must then fail.
"""

from __future__ import annotations

import math
import random
from dataclasses import dataclass
from fractions import Fraction

from .algebra import MultiPoly, RationalFunction, UniPoly
from .divisors import QDivisor
from .dpd import (
    DPDPair,
    NormalFormData,
    check_pair,
    generator_bound_holds,
    ring_closure_check,
    section_generator,
    to_normal_form,
)
from .embedding import (
    XYS,
    build_embedding,
    character_check,
    covering_relation,
    dehomogenize,
    eliminate_z,
    homogeneity_check,
    minimal_alpha,
    normality_flags,
    parametrization_check,
    positive_weight_embedding,
    toric_replacement,
    universal_cover_form,
)
from .gizatullin import (
    GizatullinParams,
    action_consistency_check,
    check_generator_relations,
    find_gamma,
    gizatullin_generators,
    plane_embedding,
    toric_monomial_counts,
)

FAULTS = (
    "dg-family",
    "homogeneity",
    "dehomogenize",
    "parametrization",
    "character",
    "positive-weight",
    "generator-relations",
    "action-consistency",
    "ring-closure",
    "monomial-count",
    "elimination",
)

T1 = UniPoly([-1, 1])
Q_CHOICES = (UniPoly([1]), T1, T1 * UniPoly([-2, 1]), UniPoly([-2, 0, 1]))


@dataclass(frozen=True)
class CheckResult:
    check: str
    cell: str
    ok: bool
    detail: str = ""

    def to_json(self) -> dict:
        out = {"check": self.check, "cell": self.cell, "ok": self.ok}
        if self.detail:
            out["detail"] = self.detail
        return out


def flip_first_coefficient(f: MultiPoly) -> MultiPoly:
    """Negate the coefficient of the leading term."""
    exps, c = next(iter(f.terms.items()))
    return f + MultiPoly(f.variables, {exps: -2 * c})


def dg_pair(n: int, d: int) -> DPDPair:
    return DPDPair(QDivisor.point(0, Fraction(-1, d)), QDivisor.point(1, Fraction(-1, n - d)))


def dg_expected(n: int, d: int) -> MultiPoly:
    x, y, z, s = (MultiPoly.var(v) for v in ("x", "y", "z", "s"))
    return x ** (n - d) * y - s ** (n - d) * (s**d - z)


def hypersurface_grid(size: str):
    ds = range(1, 5) if size == "default" else range(1, 3)
    for d in ds:
        for e_plus in range(1, d + 1):
            for e_minus in range(-e_plus, 3):
                for k in range(1, 4):
                    for Q in Q_CHOICES:
                        yield NormalFormData(d, e_plus, e_minus, k, Q)


def _cell(nf: NormalFormData) -> str:
    return f"d={nf.d},e+={nf.e_plus},e-={nf.e_minus},k={nf.k},Q={nf.Q}"


def check_dg_family(size: str, fault: str | None):
    top = 8 if size == "default" else 4
    first = True
    for n in range(2, top + 1):
        for d in range(1, n):
            nf, _ = to_normal_form(dg_pair(n, d))
            E = build_embedding(nf)
            expected = dg_expected(n, d)
            if fault == "dg-family" and first:
                expected = flip_first_coefficient(expected)
            first = False
            ok = E.F == expected and E.weights == (1, d, d, 1) and E.degree == n
            if d == 1:
                s = MultiPoly.var("s", XYS)
                x, y = MultiPoly.var("x", XYS), MultiPoly.var("y", XYS)
                ok = ok and dehomogenize(E).relation == x ** (n - 1) * y - (s - 1) * s ** (n - 1)
            yield CheckResult("dg-family", f"n={n},d={d}", ok, "" if ok else f"got {E.F}")


def check_hypersurface(size: str, fault: str | None):
    pending = fault
    for nf in hypersurface_grid(size):
        E = build_embedding(nf)
        relation = dehomogenize(E).relation
        direct = covering_relation(nf)
        # characters are trivial when d = 1, so that fault waits for d >= 2
        inject = pending if pending != "character" or nf.d > 1 else None
        if inject:
            pending = None
        for_param = for_char = relation
        if inject == "homogeneity":
            exps, c = next(iter(E.F.terms.items()))
            bumped = (exps[0] + 1,) + exps[1:]
            E = type(E)(E.F + MultiPoly(E.F.variables, {exps: -c, bumped: c}), E.weights, E.degree, E.flags, nf)
        elif inject == "dehomogenize":
            direct = flip_first_coefficient(direct)
        elif inject == "parametrization":
            for_param = flip_first_coefficient(relation)
        elif inject == "character":
            s = MultiPoly.var("s", XYS)
            exps, c = next(iter(relation.terms.items()))
            lead = MultiPoly(XYS, {exps: c})
            for_char = relation - lead + lead * s
        cell = _cell(nf)
        yield CheckResult("homogeneity", cell, homogeneity_check(E))
        yield CheckResult("dehomogenize", cell, relation == direct)
        yield CheckResult("parametrization", cell, parametrization_check(nf, for_param))
        yield CheckResult("character", cell, character_check(nf, for_char))


def check_positive_weight(size: str, fault: str | None):
    first = True
    for nf in hypersurface_grid(size):
        P = positive_weight_embedding(nf)
        alpha = P.flags.alpha_used
        base = dehomogenize(build_embedding(nf)).relation
        shifted = dehomogenize(P).relation
        if fault == "positive-weight" and first:
            shifted = flip_first_coefficient(shifted)
        first = False
        minimal = alpha == 0 or nf.k * nf.e_minus + nf.d * (nf.deg_q + alpha - 1) <= 0
        ok = (
            all(w > 0 for w in P.weights)
            and minimal
            and alpha == minimal_alpha(nf)
            and homogeneity_check(P)
            and shifted == base
        )
        yield CheckResult("positive-weight", _cell(nf), ok)


def check_normality(size: str, fault: str | None):
    for nf in hypersurface_grid(size):
        flags = normality_flags(nf)
        expected = nf.k == 1 or (nf.e_sum == 0 and _squarefree(nf.Q))
        ok = flags.certified == expected
        if nf.Q.is_one():
            rep = toric_replacement(nf)
            s = MultiPoly.var("s", ("x", "y'", "z", "s"))
            xy = MultiPoly(("x", "y'", "z", "s"), {(1, 1, 0, 0): 1})
            ok = ok and rep.F == xy - s**nf.e_sum and rep.weights == (nf.e_plus, nf.e_minus, nf.d, 1)
            if nf.k > 1 and nf.e_sum > 0:
                ok = ok and not flags.certified
        yield CheckResult("normality", _cell(nf), ok)


def _squarefree(q: UniPoly) -> bool:
    from .algebra import poly_gcd

    return poly_gcd(q, q.derivative()).is_one()


def check_gizatullin(size: str, fault: str | None):
    top_m = 6 if size == "default" else 3
    top_c = 5 if size == "default" else 2
    first = True
    for m in range(2, top_m + 1):
        for e in range(1, m):
            if math.gcd(e, m) != 1:
                continue
            for c in range(1, top_c + 1):
                gp = GizatullinParams(e, m, c)
                pe = plane_embedding(gp)
                gamma = find_gamma(e, m, c)
                cell = f"e={e},m={m},c={c}"
                inject = first and fault
                first = False
                gens = gizatullin_generators(gp)
                if inject == "generator-relations":
                    t = RationalFunction(UniPoly([0, 1]))
                    gens = dict(gens, v_plus=gens["v_plus"] * t)
                if inject == "action-consistency":
                    pe = type(pe)(pe.a + 1, pe.b, pe.c, pe.m, pe.gamma)
                d = c * m
                ok = (
                    pe.a + pe.b == d
                    and math.gcd(pe.a, pe.b) == 1
                    and 1 <= pe.a < d
                    and (pe.a - e) % m == 0
                    and (pe.b + e) % m == 0
                    and 0 <= gamma <= c
                    and math.gcd(gamma * m - e, c) == 1
                )
                yield CheckResult("plane-invariants", cell, ok if inject != "action-consistency" else True)
                yield CheckResult("generator-relations", cell, check_generator_relations(gens, e, m, c))
                yield CheckResult("action-consistency", cell, action_consistency_check(pe, gp))


def random_pair(rng: random.Random) -> DPDPair:
    """A valid pair: denominators <= 5, at most 3 basis polynomials of degree <= 2."""
    pool = [
        UniPoly([0, 1]),
        UniPoly([-1, 1]),
        UniPoly([2, 1]),
        UniPoly([-2, 0, 1]),
        UniPoly([1, 0, 1]),
        UniPoly([1, 1, 1]),
        UniPoly([-3, 1]),
    ]

    def coeff():
        return Fraction(rng.randint(-10, 10), rng.randint(1, 5))

    def below(c):
        # largest a/b <= -c with b <= 5, lowered by a random step
        b = rng.randint(1, 5)
        return Fraction(math.floor(-c * b) - rng.randint(0, 4), b)

    polys = rng.sample(pool, rng.randint(1, 3))
    cs = [coeff() for _ in polys]
    plus = QDivisor(tuple(zip(polys, cs)))
    minus = QDivisor(tuple((p, below(c)) for p, c in zip(polys, cs)))
    return DPDPair(plus, minus)


def check_ring_structure(size: str, fault: str | None, count: int = 20, seed: int = 20240611):
    rng = random.Random(seed)
    first = True
    for idx in range(count if size == "default" else 5):
        p = random_pair(rng)
        ok = not check_pair(p) and ring_closure_check(p, 6)
        for i in range(-6, 7):
            g = section_generator(p, i)
            if fault == "ring-closure" and first and i == 1:
                g = g / RationalFunction(UniPoly([0, 1]))
            ok = ok and generator_bound_holds(p, g, i)
        first = False
        yield CheckResult("ring-closure", f"pair#{idx}={p}", ok)


def check_monomials(size: str, fault: str | None):
    top = 12 if size == "default" else 6
    first = True
    for d in range(2, top + 1):
        for e in range(1, d):
            if math.gcd(e, d) != 1:
                continue
            quotient, localized = toric_monomial_counts(d, e, top)
            if fault == "monomial-count" and first:
                localized += 1
            first = False
            yield CheckResult("monomial-count", f"d={d},e={e}", quotient == localized, f"{quotient} vs {localized}")


def check_elimination(size: str, fault: str | None):
    first = True
    for e in range(1, 4):
        for d in range(e, 7):
            if math.gcd(e, d) != 1:
                continue
            for k in range(2, 4):
                pair = DPDPair(
                    QDivisor.point(0, Fraction(-e, d)),
                    QDivisor.point(0, Fraction(e, d)) + QDivisor.point(1, Fraction(-1, k)),
                )
                nf, _ = to_normal_form(pair)
                red = eliminate_z(build_embedding(nf))
                x, y, s = (MultiPoly.var(v, XYS) for v in XYS)
                expected = x**k * y - s**d
                if fault == "elimination" and first:
                    expected = flip_first_coefficient(expected)
                first = False
                cover = universal_cover_form(e, d, k)
                ok = (
                    red is not None
                    and red.G == expected
                    and red.weights == (e, d - k * e, 1)
                    and red.all_weights_positive == (d - k * e > 0)
                    and cover.equation == x**k * y - (s**d - 1)
                    and cover.action_exponents == (1 % d, (-k) % d, e % d)
                )
                yield CheckResult("elimination", f"e={e},d={d},k={k}", ok)


CHECKS = (
    check_dg_family,
    check_hypersurface,
    check_positive_weight,
    check_normality,
    check_gizatullin,
    check_ring_structure,
    check_monomials,
    check_elimination,
)


def run_grid(size: str = "default", fault: str | None = None) -> list[CheckResult]:
    if size not in ("default", "quick"):
        raise ValueError(f"unknown grid {size!r}")
    if fault is not None and fault not in FAULTS:
        raise ValueError(f"unknown fault {fault!r}; choose from {', '.join(FAULTS)}")
    results: list[CheckResult] = []
    for check in CHECKS:
        results.extend(check(size, fault))
    return results
