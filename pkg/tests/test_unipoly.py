from fractions import Fraction

import pytest
import sympy as sp
from conftest import monic_unipolys, unipolys
from hypothesis import given
from hypothesis import strategies as st
from oracle import coeffs_of, sym_uni, t

from dpdembed.algebra import (
    RationalFunction,
    UniPoly,
    compose_power,
    coprime_basis,
    coprime_refine,
    is_squarefree,
    poly_gcd,
    rational_roots,
    squarefree_decompose,
)
from dpdembed.parsing import parse_unipoly


def P(*coeffs):
    return UniPoly(coeffs)


def test_zero_and_degree():
    assert UniPoly().degree == -1
    assert UniPoly([0, 0]).is_zero()
    assert P(1, 2, 0).degree == 1


def test_format():
    assert P(-2, 0, 1).format() == "t^2 - 2"
    assert P(3, Fraction(-1, 2)).format() == "-1/2*t + 3"
    assert P(0, -1).format("s") == "-s"
    assert UniPoly().format() == "0"


def test_gcd_examples():
    a = P(-1, 1) * P(-2, 1)
    b = P(-1, 1) * P(3, 1)
    assert poly_gcd(a, b) == P(-1, 1)
    assert poly_gcd(P(0, 1), P(-1, 1)).is_one()
    with pytest.raises(ValueError):
        poly_gcd(UniPoly(), UniPoly())


def test_squarefree_examples():
    q = P(-1, 1) ** 2 * P(0, 1)
    assert squarefree_decompose(q) == [(P(0, 1), 1), (P(-1, 1), 2)]
    assert squarefree_decompose(P(1)) == []
    with pytest.raises(ValueError):
        squarefree_decompose(P(2, 2))


def test_compose_power_example():
    assert P(-1, 1).compose_power(3) == P(-1, 0, 0, 1)
    assert compose_power(P(-2, 0, 1), 2) == P(-2, 0, 0, 0, 1)


def test_rational_roots():
    assert rational_roots(P(-2, 0, 1)) == []
    assert rational_roots(P(-1, 1) * P(Fraction(1, 2), 1)) == [Fraction(-1, 2), 1]


@given(unipolys(), unipolys(), unipolys())
def test_ring_axioms(a, b, c):
    assert (a + b) + c == a + (b + c)
    assert (a * b) * c == a * (b * c)
    assert a * (b + c) == a * b + a * c
    assert a * b == b * a
    assert a - a == UniPoly()


@given(unipolys(), unipolys())
def test_arithmetic_against_sympy(a, b):
    A, B = sym_uni(a.coeffs), sym_uni(b.coeffs)
    assert list((a * b).coeffs) == coeffs_of(A * B)
    assert list((a - b).coeffs) == coeffs_of(A - B)


@given(unipolys(), unipolys(max_degree=3).filter(lambda p: not p.is_zero()))
def test_divmod_against_sympy(a, b):
    q, r = divmod(a, b)
    Q, R = sp.div(sym_uni(a.coeffs), sym_uni(b.coeffs), t)
    assert list(q.coeffs) == coeffs_of(Q)
    assert list(r.coeffs) == coeffs_of(R)


@given(unipolys(), unipolys())
def test_gcd_against_sympy(a, b):
    if a.is_zero() and b.is_zero():
        return
    g = poly_gcd(a, b)
    G = sp.Poly(sp.gcd(sym_uni(a.coeffs), sym_uni(b.coeffs)), t, domain=sp.QQ).monic()
    assert list(g.coeffs) == coeffs_of(G.as_expr())


@given(st.lists(st.tuples(monic_unipolys(max_degree=2), st.integers(1, 3)), max_size=3))
def test_squarefree_against_sympy(factors):
    q = UniPoly([1])
    for f, m in factors:
        q = q * f**m
    ours = {m: f for f, m in squarefree_decompose(q)}
    _, theirs = sp.sqf_list(sym_uni(q.coeffs), t)
    theirs = {m: f for f, m in theirs}
    assert set(ours) == set(theirs)
    for m, f in ours.items():
        assert list(f.coeffs) == coeffs_of(sp.Poly(theirs[m], t, domain=sp.QQ).monic().as_expr())
    assert is_squarefree(q) == (set(ours) <= {1})


@given(monic_unipolys(), st.integers(1, 4))
def test_compose_power_degree(q, d):
    assert compose_power(q, d).degree == d * q.degree
    assert list(q.compose_power(d).coeffs) == coeffs_of(sym_uni(q.coeffs).subs(t, t**d))


@given(st.lists(monic_unipolys(max_degree=2), min_size=1, max_size=4))
def test_coprime_basis(polys):
    polys = [p for p in polys if is_squarefree(p)]
    if not polys:
        return
    basis = coprime_basis(polys)
    for i, a in enumerate(basis):
        for b in basis[i + 1 :]:
            assert poly_gcd(a, b).is_one()
    # every input is a product of basis elements
    for p in polys:
        rest = p
        for b in basis:
            if poly_gcd(rest, b).degree > 0:
                rest = rest.exact_div(b)
        assert rest.is_one()


@given(st.lists(st.tuples(monic_unipolys(max_degree=2), st.integers(-3, 3)), max_size=4))
def test_coprime_refine_preserves_product(entries):
    entries = [(p, c) for p, c in entries if is_squarefree(p) and c]
    refined = coprime_refine(entries)
    before = RationalFunction(1)
    for p, c in entries:
        before = before * RationalFunction(p) ** c
    after = RationalFunction(1)
    for p, c in refined:
        after = after * RationalFunction(p) ** int(c)
    assert before == after
    coeffs = [c for _, c in refined]
    assert len(coeffs) == len(set(coeffs))
    assert all(c for c in coeffs)


@given(unipolys())
def test_print_parse_round_trip(p):
    assert parse_unipoly(p.format()) == p


@given(unipolys(), st.fractions(min_value=-5, max_value=5, max_denominator=4))
def test_horner_against_sympy(p, v):
    expected = sym_uni(p.coeffs).subs(t, sp.Rational(v.numerator, v.denominator))
    assert p(v) == Fraction(int(sp.Rational(expected).p), int(sp.Rational(expected).q))
