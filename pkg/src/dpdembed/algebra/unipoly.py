"""Dense univariate polynomials over the rationals.

Coefficients are stored low degree first as a tuple of ``Fraction`` with no
trailing zeros, so every polynomial has exactly one representation.  The
variable name is not part of the value; it is chosen when printing.
"""

from __future__ import annotations

from fractions import Fraction
from typing import Iterable, Union

Scalar = Union[int, Fraction]


def _frac(c) -> Fraction:
    if isinstance(c, Fraction):
        return c
    if isinstance(c, int):
        return Fraction(c)
    raise TypeError(f"expected int or Fraction, got {type(c).__name__}")


def format_scalar(c: Fraction) -> str:
    """``p/q`` with the ``/1`` dropped."""
    if c.denominator == 1:
        return str(c.numerator)
    return f"{c.numerator}/{c.denominator}"


class UniPoly:
    __slots__ = ("coeffs",)

    def __init__(self, coeffs: Iterable[Scalar] = ()):
        cs = [_frac(c) for c in coeffs]
        while cs and cs[-1] == 0:
            cs.pop()
        object.__setattr__(self, "coeffs", tuple(cs))

    def __setattr__(self, name, value):
        raise AttributeError("UniPoly is immutable")

    @classmethod
    def constant(cls, c: Scalar) -> "UniPoly":
        return cls([c])

    @classmethod
    def monomial(cls, n: int, c: Scalar = 1) -> "UniPoly":
        if n < 0:
            raise ValueError("negative exponent")
        return cls([0] * n + [c])

    @classmethod
    def linear(cls, root: Scalar) -> "UniPoly":
        """The monic polynomial ``t - root``."""
        return cls([-_frac(root), 1])

    # -- basic queries -------------------------------------------------

    @property
    def degree(self) -> int:
        """Degree, with -1 for the zero polynomial."""
        return len(self.coeffs) - 1

    @property
    def lc(self) -> Fraction:
        return self.coeffs[-1] if self.coeffs else Fraction(0)

    def is_zero(self) -> bool:
        return not self.coeffs

    def is_one(self) -> bool:
        return self.coeffs == (Fraction(1),)

    def is_constant(self) -> bool:
        return len(self.coeffs) <= 1

    def is_monic(self) -> bool:
        return bool(self.coeffs) and self.coeffs[-1] == 1

    def monic(self) -> "UniPoly":
        if self.is_zero():
            raise ValueError("the zero polynomial has no monic associate")
        lc = self.lc
        if lc == 1:
            return self
        return UniPoly(c / lc for c in self.coeffs)

    def __getitem__(self, n: int) -> Fraction:
        if 0 <= n < len(self.coeffs):
            return self.coeffs[n]
        return Fraction(0)

    def __call__(self, x):
        acc = 0 * x if not isinstance(x, (int, Fraction)) else Fraction(0)
        for c in reversed(self.coeffs):
            acc = acc * x + c
        return acc

    # -- arithmetic ----------------------------------------------------

    @staticmethod
    def _coerce(other) -> "UniPoly | None":
        if isinstance(other, UniPoly):
            return other
        if isinstance(other, (int, Fraction)):
            return UniPoly([other])
        return None

    def __add__(self, other):
        o = self._coerce(other)
        if o is None:
            return NotImplemented
        n = max(len(self.coeffs), len(o.coeffs))
        return UniPoly(self[i] + o[i] for i in range(n))

    __radd__ = __add__

    def __neg__(self) -> "UniPoly":
        return UniPoly(-c for c in self.coeffs)

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
        if self.is_zero() or o.is_zero():
            return UniPoly()
        out = [Fraction(0)] * (len(self.coeffs) + len(o.coeffs) - 1)
        for i, a in enumerate(self.coeffs):
            if a == 0:
                continue
            for j, b in enumerate(o.coeffs):
                out[i + j] += a * b
        return UniPoly(out)

    __rmul__ = __mul__

    def __pow__(self, n: int) -> "UniPoly":
        if n < 0:
            raise ValueError("negative power of a polynomial")
        result = UniPoly([1])
        base = self
        while n:
            if n & 1:
                result = result * base
            base = base * base
            n >>= 1
        return result

    def __divmod__(self, other) -> tuple["UniPoly", "UniPoly"]:
        o = self._coerce(other)
        if o is None:
            return NotImplemented
        if o.is_zero():
            raise ZeroDivisionError("polynomial division by zero")
        rem = list(self.coeffs)
        dq = o.degree
        lc = o.lc
        if len(rem) - 1 < dq:
            return UniPoly(), self
        quot = [Fraction(0)] * (len(rem) - dq)
        for i in range(len(rem) - 1, dq - 1, -1):
            c = rem[i] / lc
            quot[i - dq] = c
            if c:
                for j, b in enumerate(o.coeffs):
                    rem[i - dq + j] -= c * b
        return UniPoly(quot), UniPoly(rem[:dq])

    def __floordiv__(self, other):
        return divmod(self, other)[0]

    def __mod__(self, other):
        return divmod(self, other)[1]

    def exact_div(self, other: "UniPoly") -> "UniPoly":
        q, r = divmod(self, other)
        if not r.is_zero():
            raise ValueError(f"{other} does not divide {self}")
        return q

    def divides(self, other: "UniPoly") -> bool:
        return (other % self).is_zero()

    def derivative(self) -> "UniPoly":
        return UniPoly(i * c for i, c in enumerate(self.coeffs) if i)

    def compose(self, inner: "UniPoly") -> "UniPoly":
        """``self(inner(t))``."""
        acc = UniPoly()
        for c in reversed(self.coeffs):
            acc = acc * inner + c
        return acc

    def compose_power(self, d: int) -> "UniPoly":
        """``self(t^d)``; spreads coefficients without multiplying."""
        if d < 1:
            raise ValueError("d must be a positive integer")
        out = [Fraction(0)] * (d * self.degree + 1) if self.coeffs else []
        for i, c in enumerate(self.coeffs):
            out[d * i] = c
        return UniPoly(out)

    # -- comparison / printing -----------------------------------------

    def __eq__(self, other) -> bool:
        o = self._coerce(other)
        if o is None:
            return NotImplemented
        return self.coeffs == o.coeffs

    def __hash__(self) -> int:
        return hash(("UniPoly", self.coeffs))

    def sort_key(self) -> tuple:
        """Degree first, then coefficients from the top down."""
        return (self.degree, tuple(reversed(self.coeffs)))

    def format(self, var: str = "t") -> str:
        if self.is_zero():
            return "0"
        parts: list[tuple[int, str]] = []
        for n in range(self.degree, -1, -1):
            c = self.coeffs[n]
            if c == 0:
                continue
            sign = -1 if c < 0 else 1
            a = abs(c)
            if n == 0:
                body = format_scalar(a)
            else:
                mono = var if n == 1 else f"{var}^{n}"
                body = mono if a == 1 else f"{format_scalar(a)}*{mono}"
            parts.append((sign, body))
        return join_signed(parts)

    def __str__(self) -> str:
        return self.format()

    def __repr__(self) -> str:
        return f"UniPoly({self.format()!r})"


def join_signed(parts: list[tuple[int, str]]) -> str:
    out = []
    for i, (sign, body) in enumerate(parts):
        if i == 0:
            out.append(body if sign > 0 else f"-{body}")
        else:
            out.append(f" + {body}" if sign > 0 else f" - {body}")
    return "".join(out)


T = UniPoly([0, 1])
ONE = UniPoly([1])


def poly_gcd(a: UniPoly, b: UniPoly) -> UniPoly:
    """Monic gcd by the Euclidean algorithm."""
    if a.is_zero() and b.is_zero():
        raise ValueError("gcd(0, 0) is undefined")
    # monic remainders keep the rational coefficients from swelling
    if not b.is_zero():
        b = b.monic()
    while not b.is_zero():
        r = a % b
        a, b = b, (r.monic() if not r.is_zero() else r)
    return a.monic()


def is_squarefree(q: UniPoly) -> bool:
    if q.is_zero():
        raise ValueError("the zero polynomial has no squarefree test")
    return poly_gcd(q, q.derivative()).is_one()


def squarefree_decompose(q: UniPoly) -> list[tuple[UniPoly, int]]:
    """Yun's algorithm: ``q = prod p_i^m_i`` with p_i monic squarefree coprime.

    Returned in increasing multiplicity; constants give ``[]``.
    """
    if q.is_zero():
        raise ValueError("cannot decompose the zero polynomial")
    if not q.is_monic():
        raise ValueError(f"squarefree_decompose expects a monic polynomial, got {q}")
    if q.degree == 0:
        return []
    dq = q.derivative()
    a = poly_gcd(q, dq)
    b = q.exact_div(a)
    c = dq.exact_div(a)
    d = c - b.derivative()
    out: list[tuple[UniPoly, int]] = []
    i = 1
    while not b.is_one():
        g = poly_gcd(b, d)
        b = b.exact_div(g)
        c = d.exact_div(g)
        d = c - b.derivative()
        if not g.is_one():
            out.append((g, i))
        i += 1
    return out


def coprime_refine(entries: Iterable[tuple[UniPoly, Scalar]]) -> list[tuple[UniPoly, Fraction]]:
    """Rewrite ``sum c_i div(P_i)`` over a canonical pairwise-coprime basis.

    The output holds one entry per distinct nonzero coefficient: the product
    of all irreducible factors carrying that coefficient.  That product is
    determined by the formal sum alone, which makes the result unique.
    Sorted by degree, then coefficients from the top down.
    """
    items = [(p, _frac(c)) for p, c in entries]
    for p, _ in items:
        if not p.is_monic() or p.degree < 1:
            raise ValueError(f"basis polynomial must be monic of degree >= 1: {p}")
        if not is_squarefree(p):
            raise ValueError(f"basis polynomial must be squarefree: {p}")

    atoms = coprime_basis([p for p, _ in items])
    weight: dict[UniPoly, Fraction] = {}
    for atom in atoms:
        weight[atom] = sum((c for p, c in items if atom.divides(p)), Fraction(0))

    grouped: dict[Fraction, UniPoly] = {}
    for atom, c in weight.items():
        if c != 0:
            grouped[c] = grouped.get(c, ONE) * atom
    return sorted(((p, c) for c, p in grouped.items()), key=lambda e: e[0].sort_key())


def coprime_basis(polys: list[UniPoly]) -> list[UniPoly]:
    # Split shared factors until pairwise coprime; each input stays a product
    # of the output atoms because every input is squarefree.
    work = [p for p in polys if p.degree >= 1]
    changed = True
    while changed:
        changed = False
        for i in range(len(work)):
            for j in range(i + 1, len(work)):
                g = poly_gcd(work[i], work[j])
                if g.is_one():
                    continue
                pieces = [work[i].exact_div(g), work[j].exact_div(g), g]
                rest = [w for k, w in enumerate(work) if k not in (i, j)]
                work = rest + [p for p in pieces if p.degree >= 1]
                changed = True
                break
            if changed:
                break
    unique: list[UniPoly] = []
    for p in work:
        if p not in unique:
            unique.append(p)
    return unique


def rational_roots(p: UniPoly) -> list[Fraction]:
    """Rational roots of a nonzero polynomial (rational root test)."""
    if p.is_zero():
        raise ValueError("the zero polynomial has every root")
    from math import lcm

    den = 1
    for c in p.coeffs:
        den = lcm(den, c.denominator)
    ints = [int(c * den) for c in p.coeffs]
    roots: list[Fraction] = []
    if ints[0] == 0:
        roots.append(Fraction(0))
        while ints and ints[0] == 0:
            ints.pop(0)
    if len(ints) <= 1:
        return roots
    for num in _divisors(abs(ints[0])):
        for den_ in _divisors(abs(ints[-1])):
            for sign in (1, -1):
                r = Fraction(sign * num, den_)
                if r not in roots and p(r) == 0:
                    roots.append(r)
    return sorted(roots)


def _divisors(n: int) -> list[int]:
    small, large = [], []
    i = 1
    while i * i <= n:
        if n % i == 0:
            small.append(i)
            if i * i != n:
                large.append(n // i)
        i += 1
    return small + large[::-1]
