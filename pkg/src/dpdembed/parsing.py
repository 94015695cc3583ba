"""Recursive-descent parser for polynomial, divisor and pair text.

Grammar (whitespace is insignificant)::

    expr     := ['+'|'-'] product (('+'|'-') product)*
    product  := power (('*'|'/') power)*
    power    := atom ['^' exponent]
    exponent := ['-'] INT | '(' ['-'] INT ')'
    atom     := INT | NAME | '(' expr ')'

    divisor  := '0' | ['-'] dterm (('+'|'-') dterm)*
    dterm    := [coeff '*'] datom
    coeff    := INT ['/' INT]
    datom    := '[' ['-'] INT ['/' INT] ']' | 'div' '(' expr ')'

    pair     := '(' divisor ';' divisor ')'

``[p]`` is shorthand for ``div(t - p)``.
"""

from __future__ import annotations

import re
from fractions import Fraction

from .algebra import LaurentElement, MultiPoly, RationalFunction, UniPoly
from .divisors import QDivisor
from .errors import ParseError

_TOKEN = re.compile(r"\s*(?:(\d+)|([A-Za-z_][A-Za-z0-9_]*'*)|(.))")


class _Tokens:
    def __init__(self, text: str):
        self.text = text
        self.items: list[tuple[str, str, int]] = []
        pos = 0
        while pos < len(text) and text[pos:].strip():
            m = _TOKEN.match(text, pos)
            if m is None or m.end() == pos:
                break
            start = m.start(m.lastindex) if m.lastindex else m.end()
            if m.group(1) is not None:
                self.items.append(("INT", m.group(1), start))
            elif m.group(2) is not None:
                self.items.append(("NAME", m.group(2), start))
            elif m.group(3) is not None:
                if m.group(3) not in "+-*/^()[];":
                    raise ParseError(f"unexpected character {m.group(3)!r}", text, start)
                self.items.append(("OP", m.group(3), start))
            pos = m.end()
        self.items.append(("END", "", len(text)))
        self.i = 0

    def peek(self) -> tuple[str, str, int]:
        return self.items[self.i]

    def next(self) -> tuple[str, str, int]:
        tok = self.items[self.i]
        self.i += 1
        return tok

    def at(self, value: str) -> bool:
        kind, v, _ = self.peek()
        return kind == "OP" and v == value

    def accept(self, value: str) -> bool:
        if self.at(value):
            self.i += 1
            return True
        return False

    def expect(self, value: str):
        if not self.accept(value):
            self.fail("unexpected token", [repr(value)])

    def expect_int(self) -> int:
        kind, v, _ = self.peek()
        if kind != "INT":
            self.fail("unexpected token", ["integer"])
        self.i += 1
        return int(v)

    def fail(self, message: str, expected=()):
        kind, v, pos = self.peek()
        found = "end of input" if kind == "END" else repr(v)
        raise ParseError(f"{message} {found}", self.text, pos, expected)

    def done(self):
        if self.peek()[0] != "END":
            self.fail("trailing input", ["end of input"])


# -- expressions -------------------------------------------------------


def _expr(tk: _Tokens):
    if tk.accept("-"):
        node = ("neg", _product(tk))
    else:
        tk.accept("+")
        node = _product(tk)
    while True:
        if tk.accept("+"):
            node = ("add", node, _product(tk))
        elif tk.accept("-"):
            node = ("sub", node, _product(tk))
        else:
            return node


def _product(tk: _Tokens):
    node = _power(tk)
    while True:
        if tk.accept("*"):
            node = ("mul", node, _power(tk))
        elif tk.accept("/"):
            pos = tk.peek()[2]
            node = ("div", node, _power(tk), pos)
        else:
            return node


def _power(tk: _Tokens):
    node = _atom(tk)
    if tk.accept("^"):
        if tk.accept("("):
            n = -tk.expect_int() if tk.accept("-") else tk.expect_int()
            tk.expect(")")
        else:
            n = -tk.expect_int() if tk.accept("-") else tk.expect_int()
        node = ("pow", node, n)
    return node


def _atom(tk: _Tokens):
    kind, v, pos = tk.peek()
    if kind == "INT":
        tk.next()
        return ("num", int(v))
    if kind == "NAME":
        tk.next()
        return ("var", v, pos)
    if tk.accept("("):
        node = _expr(tk)
        tk.expect(")")
        return node
    tk.fail("unexpected token", ["number", "variable", "'('"])


def _evaluate(node, env: dict, lift, text: str):
    op = node[0]
    if op == "num":
        return lift(Fraction(node[1]))
    if op == "var":
        if node[1] not in env:
            raise ParseError(f"unknown variable {node[1]!r}", text, node[2], sorted(env))
        return env[node[1]]
    if op == "neg":
        return -_evaluate(node[1], env, lift, text)
    if op == "pow":
        base = _evaluate(node[1], env, lift, text)
        try:
            return base ** node[2]
        except (ValueError, ZeroDivisionError) as exc:
            raise ParseError(str(exc), text, 0) from exc
    a = _evaluate(node[1], env, lift, text)
    b = _evaluate(node[2], env, lift, text)
    if op == "add":
        return a + b
    if op == "sub":
        return a - b
    if op == "mul":
        return a * b
    try:
        result = a.__truediv__(b)
    except ZeroDivisionError as exc:
        raise ParseError(f"division by zero or non-unit: {exc}", text, node[3]) from exc
    if result is NotImplemented:
        raise ParseError("division is only allowed by constants here", text, node[3])
    return result


def _parse_expr_text(text: str):
    tk = _Tokens(text)
    node = _expr(tk)
    tk.done()
    return node


def parse_ratfunc(text: str, var: str = "t") -> RationalFunction:
    node = _parse_expr_text(text)
    return _evaluate(node, {var: RationalFunction(UniPoly([0, 1]))}, RationalFunction, text)


def parse_unipoly(text: str, var: str = "t") -> UniPoly:
    f = parse_ratfunc(text, var)
    if not f.is_polynomial():
        raise ParseError(f"{text!r} is not a polynomial in {var}", text, 0)
    return f.num


def parse_multipoly(text: str, variables=("x", "y", "z", "s")) -> MultiPoly:
    node = _parse_expr_text(text)
    env = {v: MultiPoly.var(v, variables) for v in variables}
    return _evaluate(node, env, lambda c: MultiPoly.constant(c, variables), text)


def parse_laurent(text: str, var: str = "t") -> LaurentElement:
    node = _parse_expr_text(text)
    env = {
        var: LaurentElement.scalar(UniPoly([0, 1]), var),
        "u": LaurentElement.u(1, var=var),
    }
    return _evaluate(node, env, lambda c: LaurentElement.scalar(c, var), text)


# -- divisors ----------------------------------------------------------


def _rational(tk: _Tokens) -> Fraction:
    sign = -1 if tk.accept("-") else 1
    num = tk.expect_int()
    den = 1
    if tk.accept("/"):
        pos = tk.peek()[2]
        den = tk.expect_int()
        if den == 0:
            raise ParseError("zero denominator", tk.text, pos)
    return Fraction(sign * num, den)


def _dterm(tk: _Tokens, var: str) -> QDivisor:
    coeff = Fraction(1)
    if tk.peek()[0] == "INT":
        coeff = _rational(tk)
        tk.expect("*")
    if tk.accept("["):
        p = _rational(tk)
        tk.expect("]")
        return QDivisor.point(p, coeff, var)
    kind, v, pos = tk.peek()
    if kind == "NAME" and v == "div":
        tk.next()
        tk.expect("(")
        start = tk.i
        node = _expr(tk)
        tk.expect(")")
        src = tk.text
        f = _evaluate(node, {var: RationalFunction(UniPoly([0, 1]))}, RationalFunction, src)
        if not f.is_polynomial():
            raise ParseError(f"div() argument must be a polynomial in {var}", src, tk.items[start][2])
        if f.num.is_zero():
            raise ParseError("div(0) is undefined", src, tk.items[start][2])
        return QDivisor.of(f.num, coeff, var)
    tk.fail("unexpected token", ["'['", "'div('"])


def _divisor(tk: _Tokens, var: str) -> QDivisor:
    kind, v, _ = tk.peek()
    if kind == "INT" and v == "0":
        nxt = tk.items[tk.i + 1]
        if not (nxt[0] == "OP" and nxt[1] in "*/"):
            tk.next()
            return QDivisor.zero(var)
    neg = tk.accept("-")
    total = _dterm(tk, var)
    if neg:
        total = -total
    while True:
        if tk.accept("+"):
            total = total + _dterm(tk, var)
        elif tk.accept("-"):
            total = total - _dterm(tk, var)
        else:
            return total


def parse_divisor(text: str, var: str = "t") -> QDivisor:
    tk = _Tokens(text)
    D = _divisor(tk, var)
    tk.done()
    return D


def parse_pair(text: str, var: str = "t"):
    from .dpd import DPDPair

    tk = _Tokens(text)
    tk.expect("(")
    plus = _divisor(tk, var)
    tk.expect(";")
    minus = _divisor(tk, var)
    tk.expect(")")
    tk.done()
    return DPDPair(plus, minus)
