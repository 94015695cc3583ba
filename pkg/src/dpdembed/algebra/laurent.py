"""Laurent polynomials in ``u`` with rational-function coefficients."""

from __future__ import annotations

from fractions import Fraction
from typing import Mapping

from .ratfunc import RationalFunction
from .unipoly import UniPoly


def _rf(c) -> RationalFunction:
    if isinstance(c, RationalFunction):
        return c
    return RationalFunction(c)


class LaurentElement:
    """A finite sum ``sum_j f_j u^j`` with ``f_j`` in Q(t), no zero ``f_j``.

    ``var`` only affects printing of the coefficients.
    """

    __slots__ = ("terms", "var")

    def __init__(self, terms: Mapping[int, object] = (), var: str = "t"):
        items = terms.items() if isinstance(terms, Mapping) else terms
        acc: dict[int, RationalFunction] = {}
        for j, c in items:
            acc[int(j)] = acc.get(int(j), RationalFunction(0)) + _rf(c)
        clean = {j: c for j, c in sorted(acc.items(), reverse=True) if not c.is_zero()}
        object.__setattr__(self, "terms", clean)
        object.__setattr__(self, "var", var)

    def __setattr__(self, name, value):
        raise AttributeError("LaurentElement is immutable")

    @classmethod
    def u(cls, j: int = 1, coeff=1, var: str = "t") -> "LaurentElement":
        return cls({j: coeff}, var)

    @classmethod
    def scalar(cls, c, var: str = "t") -> "LaurentElement":
        return cls({0: c}, var)

    def is_zero(self) -> bool:
        return not self.terms

    def coefficient(self, j: int) -> RationalFunction:
        return self.terms.get(j, RationalFunction(0))

    def _coerce(self, other) -> "LaurentElement | None":
        if isinstance(other, LaurentElement):
            return other
        if isinstance(other, (RationalFunction, UniPoly, int, Fraction)):
            return LaurentElement({0: other}, self.var)
        return None

    def __add__(self, other):
        o = self._coerce(other)
        if o is None:
            return NotImplemented
        return LaurentElement(list(self.terms.items()) + list(o.terms.items()), self.var)

    __radd__ = __add__

    def __neg__(self):
        return LaurentElement({j: -c for j, c in self.terms.items()}, self.var)

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
        for i, a in self.terms.items():
            for j, b in o.terms.items():
                out.append((i + j, a * b))
        return LaurentElement(out, self.var)

    __rmul__ = __mul__

    def inverse(self) -> "LaurentElement":
        """Only single-term elements are units."""
        if len(self.terms) != 1:
            raise ZeroDivisionError(f"{self} is not a unit of K0[u, u^-1]")
        (j, c), = self.terms.items()
        return LaurentElement({-j: c.inverse()}, self.var)

    def __truediv__(self, other):
        o = self._coerce(other)
        if o is None:
            return NotImplemented
        return self * o.inverse()

    def __rtruediv__(self, other):
        o = self._coerce(other)
        if o is None:
            return NotImplemented
        return o * self.inverse()

    def __pow__(self, n: int) -> "LaurentElement":
        if n < 0:
            return self.inverse() ** (-n)
        if len(self.terms) == 1:
            (j, c), = self.terms.items()
            return LaurentElement({j * n: c**n}, self.var)
        result = LaurentElement({0: 1}, self.var)
        for _ in range(n):
            result = result * self
        return result

    def substitute_u(self, c, j: int) -> "LaurentElement":
        """Replace ``u`` by ``c * u^j``."""
        c = _rf(c)
        if c.is_zero():
            raise ZeroDivisionError("u cannot be replaced by zero")
        out = []
        for i, a in self.terms.items():
            out.append((i * j, a * c**i))
        return LaurentElement(out, self.var)

    def map_coefficients(self, fn, var: str | None = None) -> "LaurentElement":
        return LaurentElement({j: fn(c) for j, c in self.terms.items()}, var or self.var)

    def __eq__(self, other) -> bool:
        o = self._coerce(other)
        if o is None:
            return NotImplemented
        return self.terms == o.terms

    def __hash__(self) -> int:
        return hash(("Laurent", tuple(self.terms.items())))

    def __str__(self) -> str:
        if not self.terms:
            return "0"
        parts = []
        for j, c in self.terms.items():
            if c.is_polynomial():
                coeff = f"({c.num.format(self.var)})"
            else:
                coeff = f"({c.num.format(self.var)})/({c.den.format(self.var)})"
            if j == 0:
                parts.append(coeff)
            elif j == 1:
                parts.append(f"{coeff}*u")
            else:
                parts.append(f"{coeff}*u^{j}")
        return " + ".join(parts)

    def __repr__(self) -> str:
        return f"LaurentElement({str(self)!r})"
