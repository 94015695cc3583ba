"""Sparse multivariate polynomials over the rationals.

Variables are named and ordered; the order given is the lexicographic
priority used for printing (graded lex, highest first).
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from typing import Iterable, Mapping, Sequence

from .unipoly import UniPoly, format_scalar, join_signed

XYZS = ("x", "y", "z", "s")


def _frac(c) -> Fraction:
    return c if isinstance(c, Fraction) else Fraction(c)


class MultiPoly:
    __slots__ = ("variables", "terms")

    def __init__(self, variables: Sequence[str], terms: Mapping[tuple, object] | Iterable = ()):
        variables = tuple(variables)
        if len(set(variables)) != len(variables):
            raise ValueError(f"duplicate variable names in {variables}")
        acc: dict[tuple, Fraction] = {}
        items = terms.items() if isinstance(terms, Mapping) else terms
        for exps, c in items:
            exps = tuple(exps)
            if len(exps) != len(variables) or any(e < 0 for e in exps):
                raise ValueError(f"bad exponent vector {exps} for variables {variables}")
            acc[exps] = acc.get(exps, Fraction(0)) + _frac(c)
        clean = {e: c for e, c in acc.items() if c != 0}
        object.__setattr__(self, "variables", variables)
        object.__setattr__(self, "terms", dict(sorted(clean.items(), key=_grlex_key, reverse=True)))

    def __setattr__(self, name, value):
        raise AttributeError("MultiPoly is immutable")

    @classmethod
    def var(cls, name: str, variables: Sequence[str] = XYZS) -> "MultiPoly":
        variables = tuple(variables)
        exps = tuple(1 if v == name else 0 for v in variables)
        if name not in variables:
            raise ValueError(f"{name!r} is not one of {variables}")
        return cls(variables, {exps: 1})

    @classmethod
    def constant(cls, c, variables: Sequence[str] = XYZS) -> "MultiPoly":
        return cls(variables, {(0,) * len(variables): c})

    @classmethod
    def monomial(cls, exps: Mapping[str, int], c=1, variables: Sequence[str] = XYZS) -> "MultiPoly":
        variables = tuple(variables)
        unknown = set(exps) - set(variables)
        if unknown:
            raise ValueError(f"unknown variables {sorted(unknown)}")
        return cls(variables, {tuple(exps.get(v, 0) for v in variables): c})

    @classmethod
    def from_unipoly(cls, p: UniPoly, name: str, variables: Sequence[str] = XYZS) -> "MultiPoly":
        variables = tuple(variables)
        i = variables.index(name)
        terms = {}
        for n, c in enumerate(p.coeffs):
            exps = [0] * len(variables)
            exps[i] = n
            terms[tuple(exps)] = c
        return cls(variables, terms)

    def is_zero(self) -> bool:
        return not self.terms

    def total_degree(self) -> int:
        return max((sum(e) for e in self.terms), default=-1)

    def degree_in(self, name: str) -> int:
        i = self.variables.index(name)
        return max((e[i] for e in self.terms), default=-1)

    def _check(self, other: "MultiPoly"):
        if self.variables != other.variables:
            raise ValueError(f"variable mismatch: {self.variables} vs {other.variables}")

    def _coerce(self, other) -> "MultiPoly | None":
        if isinstance(other, MultiPoly):
            self._check(other)
            return other
        if isinstance(other, (int, Fraction)):
            return MultiPoly.constant(other, self.variables)
        return None

    def __add__(self, other):
        o = self._coerce(other)
        if o is None:
            return NotImplemented
        return MultiPoly(self.variables, list(self.terms.items()) + list(o.terms.items()))

    __radd__ = __add__

    def __neg__(self):
        return MultiPoly(self.variables, {e: -c for e, c in self.terms.items()})

    def __sub__(self, other):
        o = self._coerce(other)
        if o is None:
            return NotImplemented
        return self + (-o)

    def __rsub__(self, other):
        o = self._coerce(other)
        if o is None:
            return NotImplemented
        return o - self

    def __mul__(self, other):
        o = self._coerce(other)
        if o is None:
            return NotImplemented
        out = []
        for e1, c1 in self.terms.items():
            for e2, c2 in o.terms.items():
                out.append((tuple(a + b for a, b in zip(e1, e2)), c1 * c2))
        return MultiPoly(self.variables, out)

    __rmul__ = __mul__

    def __truediv__(self, other):
        if isinstance(other, MultiPoly) and other.total_degree() <= 0:
            other = other.terms.get((0,) * len(other.variables), 0)
        if isinstance(other, (int, Fraction)):
            if other == 0:
                raise ZeroDivisionError("division by zero")
            return self * (1 / _frac(other))
        return NotImplemented

    def __pow__(self, n: int) -> "MultiPoly":
        if n < 0:
            raise ValueError("negative power of a polynomial")
        result = MultiPoly.constant(1, self.variables)
        for _ in range(n):
            result = result * self
        return result

    def substitute(self, values: Mapping[str, object], one):
        """Evaluate with ``values[name]`` for each variable, in any ring.

        ``one`` is the unit of the target ring; it absorbs the coefficients.
        """
        missing = [v for v in self.variables if v not in values]
        if missing:
            raise ValueError(f"no value given for {missing}")
        total = one * 0
        for exps, c in self.terms.items():
            term = one * c
            for name, e in zip(self.variables, exps):
                if e:
                    term = term * values[name] ** e
            total = total + term
        return total

    def specialize(self, name: str, value) -> "MultiPoly":
        """Set one variable to a rational value and drop it."""
        i = self.variables.index(name)
        value = _frac(value)
        rest = self.variables[:i] + self.variables[i + 1 :]
        out = []
        for exps, c in self.terms.items():
            out.append((exps[:i] + exps[i + 1 :], c * value ** exps[i]))
        return MultiPoly(rest, out)

    def rename(self, variables: Sequence[str]) -> "MultiPoly":
        if len(variables) != len(self.variables):
            raise ValueError("rename must keep the number of variables")
        return MultiPoly(variables, self.terms)

    def __eq__(self, other) -> bool:
        if isinstance(other, (int, Fraction)):
            other = MultiPoly.constant(other, self.variables)
        if not isinstance(other, MultiPoly):
            return NotImplemented
        return self.variables == other.variables and self.terms == other.terms

    def __hash__(self) -> int:
        return hash((self.variables, tuple(self.terms.items())))

    def format_monomial(self, exps: tuple) -> str:
        parts = []
        for name, e in zip(self.variables, exps):
            if e == 1:
                parts.append(name)
            elif e > 1:
                parts.append(f"{name}^{e}")
        return "*".join(parts)

    def __str__(self) -> str:
        if not self.terms:
            return "0"
        parts = []
        for exps, c in self.terms.items():
            mono = self.format_monomial(exps)
            a = abs(c)
            if not mono:
                body = format_scalar(a)
            elif a == 1:
                body = mono
            else:
                body = f"{format_scalar(a)}*{mono}"
            parts.append((-1 if c < 0 else 1, body))
        return join_signed(parts)

    def __repr__(self) -> str:
        return f"MultiPoly({self.variables}, {str(self)!r})"


def _grlex_key(item):
    exps = item[0]
    return (sum(exps), exps)


@dataclass(frozen=True)
class NotHomogeneous:
    """Marker returned when terms disagree on weighted degree.

    ``by_degree`` maps each weighted degree that occurs to the printed terms
    having it.
    """

    by_degree: dict

    def __str__(self) -> str:
        groups = "; ".join(f"{d}: {', '.join(ts)}" for d, ts in sorted(self.by_degree.items()))
        return f"not weighted homogeneous ({groups})"


def weighted_degree(exps: Sequence[int], weights: Sequence[int]) -> int:
    return sum(e * w for e, w in zip(exps, weights))


def weighted_degree_check(f: MultiPoly, weights: Sequence[int]) -> "int | NotHomogeneous":
    if f.is_zero():
        raise ValueError("the zero polynomial has no weighted degree")
    if len(weights) != len(f.variables):
        raise ValueError(f"need {len(f.variables)} weights, got {len(weights)}")
    by_degree: dict[int, list[str]] = {}
    for exps, c in f.terms.items():
        term = MultiPoly(f.variables, {exps: c})
        by_degree.setdefault(weighted_degree(exps, weights), []).append(str(term))
    if len(by_degree) == 1:
        return next(iter(by_degree))
    return NotHomogeneous(by_degree)
