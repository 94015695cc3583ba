"""Q-divisors on the affine line.

A divisor is held as ``sum c * div(P)`` over monic squarefree pairwise
coprime ``P``, one entry per distinct coefficient (see ``coprime_refine``).
Points that are not rational live inside the basis polynomials; nothing
here ever factors a polynomial.
"""

from __future__ import annotations

import math
from dataclasses import dataclass
from fractions import Fraction
from typing import Iterable

from .algebra import RationalFunction, UniPoly, coprime_refine, squarefree_decompose
from .algebra.unipoly import coprime_basis, format_scalar, poly_gcd


@dataclass(frozen=True)
class QDivisor:
    entries: tuple = ()
    var: str = "t"

    def __post_init__(self):
        canon = tuple(coprime_refine(self.entries))
        object.__setattr__(self, "entries", canon)

    # -- construction --------------------------------------------------

    @classmethod
    def of(cls, p: UniPoly, c=1, var: str = "t") -> "QDivisor":
        """``c * div(p)`` for any nonzero polynomial ``p``."""
        if p.is_zero():
            raise ValueError("div(0) is undefined")
        return cls(tuple((f, Fraction(c) * m) for f, m in squarefree_decompose(p.monic())), var)

    @classmethod
    def point(cls, p, c=1, var: str = "t") -> "QDivisor":
        """``c * [p]`` for a rational point ``p``."""
        return cls(((UniPoly.linear(Fraction(p)), Fraction(c)),), var)

    @classmethod
    def zero(cls, var: str = "t") -> "QDivisor":
        return cls((), var)

    # -- arithmetic ----------------------------------------------------

    def _same_line(self, other: "QDivisor"):
        if self.var != other.var:
            raise ValueError(f"divisors on different lines ({self.var} vs {other.var})")

    def __add__(self, other: "QDivisor") -> "QDivisor":
        if not isinstance(other, QDivisor):
            return NotImplemented
        self._same_line(other)
        return QDivisor(self.entries + other.entries, self.var)

    def __neg__(self) -> "QDivisor":
        return QDivisor(tuple((p, -c) for p, c in self.entries), self.var)

    def __sub__(self, other: "QDivisor") -> "QDivisor":
        if not isinstance(other, QDivisor):
            return NotImplemented
        return self + (-other)

    def scale(self, q) -> "QDivisor":
        q = Fraction(q)
        return QDivisor(tuple((p, q * c) for p, c in self.entries), self.var)

    def __rmul__(self, q):
        if isinstance(q, (int, Fraction)):
            return self.scale(q)
        return NotImplemented

    # -- queries -------------------------------------------------------

    def is_zero(self) -> bool:
        return not self.entries

    def coefficients(self) -> list[Fraction]:
        return [c for _, c in self.entries]

    def degree(self) -> Fraction:
        """``sum c * deg P``."""
        return sum((c * p.degree for p, c in self.entries), Fraction(0))

    def is_integral(self) -> bool:
        return all(c.denominator == 1 for _, c in self.entries)

    def is_leq_zero(self) -> bool:
        return all(c <= 0 for _, c in self.entries)

    def is_effective(self) -> bool:
        return all(c >= 0 for _, c in self.entries)

    def floor(self) -> "QDivisor":
        return QDivisor(tuple((p, Fraction(math.floor(c))) for p, c in self.entries), self.var)

    def fractional_part(self) -> "QDivisor":
        return self - self.floor()

    def eval_at(self, x) -> Fraction:
        """Coefficient at the rational point ``x``."""
        x = Fraction(x)
        return sum((c for p, c in self.entries if p(x) == 0), Fraction(0))

    def coefficient_on(self, p: UniPoly) -> Fraction:
        """Coefficient carried by the roots of ``p``.

        ``p`` must not straddle two entries (true for any atom of a common
        refinement).
        """
        hits = [c for q, c in self.entries if not poly_gcd(p, q).is_one()]
        if not hits:
            return Fraction(0)
        for q, c in self.entries:
            g = poly_gcd(p, q)
            if not g.is_one() and g != p.monic():
                raise ValueError(f"{p} is not contained in a single entry of {self}")
        return hits[0]

    def support(self) -> UniPoly:
        out = UniPoly([1])
        for p, _ in self.entries:
            out = out * p
        return out

    # -- transport -----------------------------------------------------

    def pullback_power(self, d: int, var: str = "s") -> "QDivisor":
        """Pullback along the covering ``s -> s^d``."""
        if d < 1:
            raise ValueError("d must be a positive integer")
        out = []
        for p, c in self.entries:
            for f, m in squarefree_decompose(p.compose_power(d)):
                out.append((f, c * m))
        return QDivisor(tuple(out), var)

    def affine_transport(self, alpha, beta) -> "QDivisor":
        """Compose every basis polynomial with ``t -> alpha*t + beta``.

        The point ``p`` moves to ``(p - beta) / alpha``.
        """
        alpha, beta = Fraction(alpha), Fraction(beta)
        if alpha == 0:
            raise ValueError("alpha must be nonzero")
        inner = UniPoly([beta, alpha])
        return QDivisor(tuple((p.compose(inner).monic(), c) for p, c in self.entries), self.var)

    def to_function(self) -> RationalFunction:
        """The monic rational function with this (integral) divisor."""
        if not self.is_integral():
            raise ValueError(f"{self} is not integral, so it is not principal")
        num, den = UniPoly([1]), UniPoly([1])
        for p, c in self.entries:
            n = int(c)
            if n > 0:
                num = num * p**n
            else:
                den = den * p ** (-n)
        return RationalFunction(num, den)

    # -- text ----------------------------------------------------------

    def __str__(self) -> str:
        if not self.entries:
            return "0"
        out = []
        for i, (p, c) in enumerate(self.entries):
            body = f"{format_scalar(abs(c))}*div({p.format(self.var)})"
            if i == 0:
                out.append(body if c > 0 else f"-{body}")
            else:
                out.append(f" + {body}" if c > 0 else f" - {body}")
        return "".join(out)


def div_of(f: RationalFunction, var: str = "t") -> QDivisor:
    """Principal divisor of a nonzero rational function."""
    if f.is_zero():
        raise ValueError("div(0) is undefined")
    entries = [(p, m) for p, m in squarefree_decompose(f.num.monic())]
    entries += [(p, -m) for p, m in squarefree_decompose(f.den)]
    return QDivisor(tuple(entries), var)


def common_refinement(divisors: Iterable[QDivisor]) -> list[UniPoly]:
    """Pairwise-coprime atoms such that each divisor is constant on each atom."""
    polys = [p for D in divisors for p, _ in D.entries]
    return sorted(coprime_basis(polys), key=UniPoly.sort_key)
