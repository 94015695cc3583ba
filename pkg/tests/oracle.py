"""Independent sympy-based oracles shared by the test modules.

Nothing here calls into the package's algebra; values cross over only as
coefficient lists or strings.
"""

from __future__ import annotations

from fractions import Fraction

import sympy as sp

t, s, u = sp.symbols("t s u")
x, y, z = sp.symbols("x y z")
XYZS = (x, y, z, s)


def sym_uni(coeffs, var=t):
    """Coefficient list (low degree first) to a sympy expression."""
    return sum((sp.Rational(c.numerator, c.denominator) * var**i for i, c in enumerate(map(Fraction, coeffs))), sp.Integer(0))


def coeffs_of(expr, var=t) -> list[Fraction]:
    p = sp.Poly(sp.expand(expr), var, domain=sp.QQ)
    out = [Fraction(int(c.p), int(c.q)) for c in reversed(p.all_coeffs())]
    while out and out[-1] == 0:
        out.pop()
    return out


def _scalar(c) -> str:
    c = sp.Rational(c)
    return str(c.p) if c.q == 1 else f"{c.p}/{c.q}"


def canonical(expr, gens=XYZS) -> str:
    """Graded-lex descending text with the package's sign conventions, via sympy."""
    expr = sp.expand(expr)
    if expr == 0:
        return "0"
    poly = sp.Poly(expr, *gens, domain=sp.QQ)
    parts = []
    for exps, c in poly.terms(order="grlex"):
        mono = "*".join(
            (str(g) if e == 1 else f"{g}^{e}") for g, e in zip(gens, exps) if e
        )
        a = abs(c)
        if not mono:
            body = _scalar(a)
        elif a == 1:
            body = mono
        else:
            body = f"{_scalar(a)}*{mono}"
        parts.append((c < 0, body))
    out = []
    for i, (neg, body) in enumerate(parts):
        if i == 0:
            out.append(f"-{body}" if neg else body)
        else:
            out.append(f" - {body}" if neg else f" + {body}")
    return "".join(out)


def canonical_uni(expr, var=t) -> str:
    return canonical(expr, (var,))


def dg_F(n: int, d: int):
    return x ** (n - d) * y - s ** (n - d) * (s**d - z)


def embedding_F(d, e_plus, e_minus, k, q_coeffs, alpha=0):
    """``x^k y - s^(k(e_+ + e_-)) Q(s^d / z) z^(deg Q + alpha)`` via sympy substitution."""
    Q = sym_uni(q_coeffs)
    deg = len(q_coeffs) - 1
    return sp.expand(x**k * y - s ** (k * (e_plus + e_minus)) * Q.subs(t, s**d / z) * z ** (deg + alpha))


def weighted_degrees(expr, weights, gens=XYZS) -> set[int]:
    poly = sp.Poly(sp.expand(expr), *gens)
    return {sum(e * w for e, w in zip(exps, weights)) for exps in poly.monoms()}
