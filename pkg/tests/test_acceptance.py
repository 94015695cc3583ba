"""Acceptance criteria A1-A10, exact throughout.

Each test carries an ``acceptance`` marker; the terminal summary prints one
PASS/FAIL line per criterion.
"""

import io
import json
import math
import random
import time
from fractions import Fraction
from pathlib import Path

import pytest
import sympy as sp
from hypothesis import given, settings
from oracle import sym_uni, t
from test_divisors import divisors

from dpdembed.algebra import MultiPoly, RationalFunction, UniPoly
from dpdembed.cli import main
from dpdembed.divisors import QDivisor, common_refinement
from dpdembed.dpd import (
    DPDPair,
    NormalFormData,
    check_pair,
    generator_bound_holds,
    ring_closure_check,
    section_generator,
    smoothness_check,
    to_normal_form,
)
from dpdembed.embedding import (
    XYS,
    build_embedding,
    character_check,
    cover_invariance_check,
    covering_relation,
    dehomogenize,
    eliminate_z,
    homogeneity_check,
    invariant_monomials,
    localized_degree_zero_count,
    normality_flags,
    parametrization_check,
    positive_weight_embedding,
    toric_replacement,
    universal_cover_form,
)
from dpdembed.gizatullin import (
    GizatullinParams,
    action_consistency_check,
    check_generator_relations,
    gizatullin_generators,
    plane_embedding,
    toric_monomial_counts,
)
from dpdembed.parsing import parse_divisor, parse_multipoly, parse_pair
from dpdembed.verify import FAULTS, flip_first_coefficient, random_pair, hypersurface_grid

GOLDEN = json.loads((Path(__file__).parent / "golden" / "dg_family.json").read_text())


def xys(text):
    return parse_multipoly(text, XYS)


def cli(*argv):
    out, err = io.StringIO(), io.StringIO()
    code = main(list(argv), out=out, err=err)
    return code, out.getvalue(), err.getvalue()


# -- A1 ----------------------------------------------------------------


@pytest.mark.acceptance("A1")
def test_a1_dg_family_golden():
    assert len(GOLDEN) == sum(n - 1 for n in range(2, 9))
    start = time.perf_counter()
    for row in GOLDEN:
        n, d = row["n"], row["d"]
        pair = parse_pair(f"(-1/{d}*[0]; -1/{n - d}*[1])")
        nf, _ = to_normal_form(pair)
        E = build_embedding(nf)
        assert str(E.F) == row["F"], (n, d)
        assert list(E.weights) == row["weights"] == [1, d, d, 1]
        assert E.degree == row["degree"] == n
        if d == 1:
            assert str(dehomogenize(E).relation) == row["dehomogenized"]
    assert time.perf_counter() - start < 1.0


@pytest.mark.acceptance("A1")
def test_a1_golden_rows_match_closed_form():
    x, y, z, s = sp.symbols("x y z s")
    for row in GOLDEN:
        n, d = row["n"], row["d"]
        F = parse_multipoly(row["F"])
        expected = sp.expand(x ** (n - d) * y - s ** (n - d) * (s**d - z))
        assert sp.expand(sp.sympify(row["F"].replace("^", "**"))) == expected
        assert F.terms  # parses back in the canonical grammar
        if d == 1:
            dehom = sp.expand(sp.sympify(row["dehomogenized"].replace("^", "**")))
            assert dehom == sp.expand(x ** (n - 1) * y - (s - 1) * s ** (n - 1))


# -- A2 / A3 -----------------------------------------------------------

GRID = list(hypersurface_grid("default"))


@pytest.mark.acceptance("A2")
def test_a2_hypersurface_oracles():
    assert len(GRID) == 4 * sum(ep + 3 for d in range(1, 5) for ep in range(1, d + 1)) * 3
    start = time.perf_counter()
    for nf in GRID:
        E = build_embedding(nf)
        assert homogeneity_check(E)
        assert E.degree == nf.k * nf.e_sum + nf.d * nf.Q.degree
        assert dehomogenize(E).relation == covering_relation(nf)
        assert parametrization_check(nf)
        assert character_check(nf)
    assert time.perf_counter() - start < 10.0


@pytest.mark.acceptance("A3")
def test_a3_positive_weights_minimal_alpha():
    for nf in GRID:
        P = positive_weight_embedding(nf)
        alpha = P.flags.alpha_used
        assert all(w > 0 for w in P.weights)
        # minimality: alpha - 1 would leave the y weight nonpositive
        assert alpha == 0 or nf.k * nf.e_minus + nf.d * (nf.Q.degree + alpha - 1) <= 0
        assert nf.k * nf.e_minus + nf.d * (nf.Q.degree + alpha) > 0
        assert homogeneity_check(P)
        assert P.F.specialize("z", 1) == build_embedding(nf).F.specialize("z", 1)


# -- A4 ----------------------------------------------------------------


def _sympy_squarefree(q: UniPoly) -> bool:
    return all(m == 1 for _, m in sp.sqf_list(sym_uni(q.coeffs), t)[1])


@pytest.mark.acceptance("A4")
def test_a4_normality_certificates():
    for nf in GRID:
        expected = nf.k == 1 or (nf.e_sum == 0 and _sympy_squarefree(nf.Q))
        assert normality_flags(nf).certified == expected, nf


@pytest.mark.acceptance("A4")
def test_a4_toric_replacement():
    toric_k_gt_1 = [nf for nf in GRID if nf.Q.is_one() and nf.k > 1 and nf.e_sum > 0]
    assert toric_k_gt_1
    for nf in toric_k_gt_1:
        assert not normality_flags(nf).certified
        assert not build_embedding(nf).flags.normality_certified
        R = toric_replacement(nf)
        vars_ = ("x", "y'", "z", "s")
        assert R.F == parse_multipoly(f"x*y' - s^{nf.e_sum}", vars_)
        assert R.weights == (nf.e_plus, nf.e_minus, nf.d, 1)
        assert R.ambient_str() == f"P({nf.e_plus},{nf.e_minus},{nf.d},1)"


@pytest.mark.acceptance("A4")
def test_a4_smoothness_on_dg_pairs():
    for n in range(2, 9):
        for d in range(1, n):
            flags = smoothness_check(parse_pair(f"(-1/{d}*[0]; -1/{n - d}*[1])"))
            assert flags.literal and flags.pointwise and flags.agree


# -- A5 ----------------------------------------------------------------


@pytest.mark.acceptance("A5")
def test_a5_plane_embeddings():
    start = time.perf_counter()
    cells = 0
    for m in range(2, 7):
        for e in range(1, m):
            if math.gcd(e, m) != 1:
                continue
            for c in range(1, 6):
                gp = GizatullinParams(e, m, c)
                pe = plane_embedding(gp)
                a, b = pe.a, pe.b
                assert a + b == c * m
                assert math.gcd(a, b) == 1
                assert 1 <= a < c * m
                assert (a - e) % m == 0 and (b + e) % m == 0
                assert 0 <= pe.gamma <= c and math.gcd(pe.gamma * m - e, c) == 1
                assert check_generator_relations(gizatullin_generators(gp), e, m, c)
                assert action_consistency_check(pe, gp)
                cells += 1
    assert cells == 11 * 5
    assert time.perf_counter() - start < 5.0


# -- A6 ----------------------------------------------------------------


@pytest.mark.acceptance("A6")
def test_a6_ring_structure_random_pairs():
    rng = random.Random(20240611)
    pairs = [random_pair(rng) for _ in range(20)]
    for p in pairs:
        assert not check_pair(p)
        atoms = common_refinement([p.plus, p.minus])
        assert 1 <= len(atoms) <= 3 and all(1 <= a.degree <= 2 for a in atoms)
        for D in (p.plus, p.minus):
            assert all(c.denominator <= 5 for c in D.coefficients())
        assert ring_closure_check(p, 6)
        for i in range(-6, 7):
            assert generator_bound_holds(p, section_generator(p, i), i)


@pytest.mark.acceptance("A6")
def test_a6_closure_by_rational_functions():
    """Closure recomputed from products of generators, without divisor shortcuts."""
    rng = random.Random(20240611)
    for _ in range(20):
        p = random_pair(rng)
        g = {i: section_generator(p, i) for i in range(-6, 7)}
        for i in g:
            for j in g:
                if i <= j and abs(i + j) <= 6:
                    assert (g[i] * g[j] / g[i + j]).is_polynomial()


# -- A7 ----------------------------------------------------------------


@pytest.mark.acceptance("A7")
def test_a7_monomial_counts():
    start = time.perf_counter()
    for d in range(2, 13):
        for e in range(1, d):
            if math.gcd(e, d) != 1:
                continue
            quotient, localized = toric_monomial_counts(d, e, 12)
            assert quotient == localized
            assert quotient == len(invariant_monomials((1, e), d, 12))
            assert localized == localized_degree_zero_count(e, d, 12)
    assert time.perf_counter() - start < 5.0


# -- A8 ----------------------------------------------------------------


@pytest.mark.acceptance("A8")
def test_a8_elimination_and_cover():
    cells = 0
    for e in range(1, 4):
        for d in range(e, 7):
            if math.gcd(e, d) != 1:
                continue
            for k in (2, 3):
                pair = parse_pair(f"(-{e}/{d}*[0]; {e}/{d}*[0] - 1/{k}*[1])")
                red = eliminate_z(build_embedding(to_normal_form(pair)[0]))
                assert red is not None
                assert red.G == xys(f"x^{k}*y - s^{d}")
                assert red.weights == (e, d - k * e, 1)
                assert red.all_weights_positive == (d - k * e > 0)
                cover = universal_cover_form(e, d, k)
                assert cover.equation == xys(f"x^{k}*y - s^{d} + 1")
                assert cover.action_exponents == (1 % d, (-k) % d, e % d)
                assert cover_invariance_check(cover)
                cells += 1
    assert cells == 2 * (6 + 2 + 2)


# -- A9 ----------------------------------------------------------------


@pytest.mark.acceptance("A9")
def test_a9_homogeneity_corruption():
    E = build_embedding(NormalFormData(2, 1, 0, 3, UniPoly([-1, 1])))
    exps, c = next(iter(E.F.terms.items()))
    bumped = (exps[0] + 1,) + exps[1:]
    F = E.F + MultiPoly(E.F.variables, {exps: -c, bumped: c})
    assert not homogeneity_check(type(E)(F, E.weights, E.degree, E.flags, E.nf))


@pytest.mark.acceptance("A9")
def test_a9_parametrization_and_character_corruption():
    nf = NormalFormData(2, 1, 0, 2, UniPoly([-1, 1]))
    rel = covering_relation(nf)
    assert parametrization_check(nf, rel) and character_check(nf, rel)
    assert not parametrization_check(nf, flip_first_coefficient(rel))
    s = MultiPoly.var("s", XYS)
    assert not character_check(nf, rel - xys("x^2*y") + xys("x^2*y") * s)


@pytest.mark.acceptance("A9")
def test_a9_dehomogenize_and_golden_corruption():
    nf = NormalFormData(1, 1, 0, 2, UniPoly([-1, 1]))
    assert dehomogenize(build_embedding(nf)).relation != flip_first_coefficient(covering_relation(nf))
    row = GOLDEN[0]
    E = build_embedding(to_normal_form(parse_pair(f"(-1/{row['d']}*[0]; -1/{row['n'] - row['d']}*[1])"))[0])
    assert str(flip_first_coefficient(E.F)) != row["F"]


@pytest.mark.acceptance("A9")
def test_a9_gizatullin_corruption():
    gp = GizatullinParams(2, 3, 2)
    gens = gizatullin_generators(gp)
    gens["v_plus"] = gens["v_plus"] * RationalFunction(UniPoly([0, 1]))
    assert not check_generator_relations(gens, 2, 3, 2)
    pe = plane_embedding(gp)
    assert not action_consistency_check(type(pe)(pe.a + 1, pe.b, pe.c, pe.m, pe.gamma), gp)


@pytest.mark.acceptance("A9")
def test_a9_ring_and_cover_corruption():
    p = parse_pair("(-1/2*[0]; 1/2*[0] - 1/2*[1])")
    g = section_generator(p, 1) / RationalFunction(UniPoly([0, 1]))
    assert not generator_bound_holds(p, g, 1)
    cover = universal_cover_form(1, 3, 2)
    bad = type(cover)(cover.equation, (1, 2, 1), cover.order)
    assert not cover_invariance_check(bad)


@pytest.mark.acceptance("A9")
@pytest.mark.parametrize("fault", FAULTS)
def test_a9_cli_exit_3(fault):
    code, out, _ = cli("verify", "--grid", "quick", "--inject-fault", fault, "--json")
    assert code == 3
    rep = json.loads(out)
    assert rep["ok"] is False
    assert rep["failures"] and all(f["ok"] is False for f in rep["failures"])


# -- A10 ---------------------------------------------------------------


@pytest.mark.acceptance("A10")
@settings(max_examples=200)
@given(divisors())
def test_a10_divisor_round_trip(D):
    text = str(D)
    assert parse_divisor(text) == D
    assert str(parse_divisor(text)) == text


@pytest.mark.acceptance("A10")
def test_a10_pair_round_trip_through_cli():
    p = DPDPair(QDivisor.point(0, Fraction(-1, 2)), QDivisor.point(1, Fraction(-1, 3)))
    code, out, _ = cli("normalize", "--pair", str(p), "--json")
    assert code == 0
    assert parse_pair(json.loads(out)["input"]) == p


@pytest.mark.acceptance("A10")
@pytest.mark.parametrize(
    "argv",
    [
        ("embed", "--pair", "(-1/2*[0]; -1/3*[1])", "--json"),
        ("dg", "--n", "7", "--d", "3"),
        ("gizatullin", "--e", "2", "--m", "3", "--c", "2", "--json"),
        ("classify", "--pair", "(-1/2*div(t); 1/2*div(t) - 2*div(t-1))", "--json"),
        ("verify", "--grid", "quick", "--json"),
    ],
)
def test_a10_byte_identical_reruns(argv):
    assert cli(*argv) == cli(*argv)


@pytest.mark.acceptance("A10")
@pytest.mark.parametrize(
    "argv, code",
    [
        (("embed", "--pair", "(-1/2*[0]; -1/3*[1])"), 0),
        (("gizatullin", "--e", "2", "--m", "4", "--c", "1"), 1),
        (("embed", "--pair", "([0]; 0)"), 1),
        (("embed", "--pair", "(-1/2*[0];"), 2),
        (("classify", "--pair", "(div(t) + ; 0)"), 2),
        (("verify", "--grid", "quick", "--inject-fault", "character"), 3),
    ],
)
def test_a10_exit_codes(argv, code):
    assert cli(*argv)[0] == code
