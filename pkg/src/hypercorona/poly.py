"""Exact univariate polynomials over the integers and their quotients.

Coefficients are Python ints stored in ascending degree order. Nothing in
this module ever touches floating point except :meth:`IntPolynomial.eval_float`.
"""

from __future__ import annotations

import math
from fractions import Fraction
from typing import Iterable, Sequence, Union

Scalar = Union[int, Fraction]


def _trim(coeffs: Sequence[int]) -> tuple[int, ...]:
    c = list(coeffs)
    while c and c[-1] == 0:
        c.pop()
    return tuple(c)


class IntPolynomial:
    """Polynomial with exact integer coefficients, ascending degree."""

    __slots__ = ("coeffs",)

    def __init__(self, coeffs: Iterable[int] = ()):
        c = []
        for x in coeffs:
            if isinstance(x, Fraction):
                if x.denominator != 1:
                    raise ValueError(f"non-integer coefficient {x}")
                x = x.numerator
            c.append(int(x))
        self.coeffs = _trim(c)

    # construction helpers
    @classmethod
    def const(cls, c: int) -> "IntPolynomial":
        return cls([c])

    @classmethod
    def x(cls) -> "IntPolynomial":
        return cls([0, 1])

    @classmethod
    def linear(cls, a: int, b: int) -> "IntPolynomial":
        """``a + b*x``"""
        return cls([a, b])

    @classmethod
    def from_roots(cls, roots: Iterable[int]) -> "IntPolynomial":
        p = cls([1])
        for r in roots:
            p = p * cls([-r, 1])
        return p

    # basic properties
    @property
    def degree(self) -> int:
        return len(self.coeffs) - 1

    @property
    def lc(self) -> int:
        return self.coeffs[-1] if self.coeffs else 0

    def is_zero(self) -> bool:
        return not self.coeffs

    def content(self) -> int:
        g = 0
        for c in self.coeffs:
            g = math.gcd(g, c)
        return g

    def primitive(self) -> "IntPolynomial":
        """Primitive part with positive leading coefficient."""
        if self.is_zero():
            return self
        g = self.content()
        if self.lc < 0:
            g = -g
        return IntPolynomial(c // g for c in self.coeffs)

    def sign_normalized(self) -> "IntPolynomial":
        """Same polynomial with the leading coefficient made positive."""
        return -self if self.lc < 0 else self

    # arithmetic
    def _coerce(self, other) -> "IntPolynomial":
        if isinstance(other, IntPolynomial):
            return other
        if isinstance(other, int):
            return IntPolynomial([other])
        return NotImplemented

    def __add__(self, other):
        other = self._coerce(other)
        if other is NotImplemented:
            return other
        a, b = self.coeffs, other.coeffs
        if len(a) < len(b):
            a, b = b, a
        out = list(a)
        for i, c in enumerate(b):
            out[i] += c
        return IntPolynomial(out)

    __radd__ = __add__

    def __neg__(self):
        return IntPolynomial(-c for c in self.coeffs)

    def __sub__(self, other):
        other = self._coerce(other)
        if other is NotImplemented:
            return other
        return self + (-other)

    def __rsub__(self, other):
        return (-self) + other

    def __mul__(self, other):
        other = self._coerce(other)
        if other is NotImplemented:
            return other
        a, b = self.coeffs, other.coeffs
        if not a or not b:
            return IntPolynomial()
        out = [0] * (len(a) + len(b) - 1)
        for i, x in enumerate(a):
            if x:
                for j, y in enumerate(b):
                    out[i + j] += x * y
        return IntPolynomial(out)

    __rmul__ = __mul__

    def __pow__(self, e: int):
        if e < 0:
            raise ValueError("negative exponent")
        result = IntPolynomial([1])
        base = self
        while e:
            if e & 1:
                result = result * base
            e >>= 1
            if e:
                base = base * base
        return result

    def divmod_exact_lc(self, other: "IntPolynomial") -> tuple["IntPolynomial", "IntPolynomial"]:
        """Division with remainder when ``other`` has leading coefficient +-1."""
        if abs(other.lc) != 1:
            raise ValueError("divisor must be monic up to sign")
        return self._divmod(other)

    def _divmod(self, other: "IntPolynomial"):
        if other.is_zero():
            raise ZeroDivisionError("polynomial division by zero")
        rem = list(self.coeffs)
        dq = other.degree
        lc = other.lc
        if len(rem) - 1 < dq:
            return IntPolynomial(), self
        quot = [0] * (len(rem) - dq)
        for i in range(len(rem) - 1, dq - 1, -1):
            c = rem[i]
            if c == 0:
                continue
            q, r = divmod(c, lc)
            if r:
                raise ArithmeticError("division leaves a non-integer quotient")
            quot[i - dq] = q
            for j, d in enumerate(other.coeffs):
                rem[i - dq + j] -= q * d
        return IntPolynomial(quot), IntPolynomial(rem)

    def exquo(self, other: Union["IntPolynomial", int]) -> "IntPolynomial":
        """Exact quotient; raises ``ArithmeticError`` if ``other`` does not divide."""
        other = self._coerce(other)
        q, r = self._divmod(other)
        if not r.is_zero():
            raise ArithmeticError("polynomial does not divide exactly")
        return q

    def divides(self, other: "IntPolynomial") -> bool:
        """True if self divides ``other`` over the rationals."""
        if self.is_zero():
            return other.is_zero()
        _, r = _pseudo_divmod(other, self)
        return r.is_zero()

    # evaluation
    def __call__(self, x):
        if isinstance(x, (IntPolynomial, RationalFunction)):
            return self.compose(x)
        acc = 0
        for c in reversed(self.coeffs):
            acc = acc * x + c
        return acc

    def eval_float(self, x: float) -> float:
        acc = 0.0
        for c in reversed(self.coeffs):
            acc = acc * x + float(c)
        return acc

    def abs_eval_float(self, x: float) -> float:
        """``sum |c_i| max(1, |x|)^i``, the scale used for residuals of ``self(x)``."""
        ax = max(1.0, abs(x))
        acc = 0.0
        for c in reversed(self.coeffs):
            acc = acc * ax + abs(float(c))
        return acc

    def compose(self, inner):
        """``self(inner(x))`` for a polynomial or rational function ``inner``."""
        if isinstance(inner, RationalFunction):
            return inner.substitute_into(self)
        acc = IntPolynomial()
        for c in reversed(self.coeffs):
            acc = acc * inner + c
        return acc

    def shift(self, a: int) -> "IntPolynomial":
        """``self(x + a)``"""
        return self.compose(IntPolynomial([a, 1]))

    def derivative(self) -> "IntPolynomial":
        return IntPolynomial(i * c for i, c in enumerate(self.coeffs) if i)

    def root_multiplicity(self, r: int) -> int:
        """Multiplicity of the integer root ``r`` (0 if not a root)."""
        if self.is_zero():
            raise ValueError("zero polynomial")
        lin = IntPolynomial([-r, 1])
        p, mult = self, 0
        while p(r) == 0:
            p = p.exquo(lin)
            mult += 1
        return mult

    # comparison and display
    def __eq__(self, other):
        if isinstance(other, int):
            other = IntPolynomial([other])
        if not isinstance(other, IntPolynomial):
            return NotImplemented
        return self.coeffs == other.coeffs

    def __hash__(self):
        return hash(self.coeffs)

    def __repr__(self):
        return f"IntPolynomial({list(self.coeffs)!r})"

    def __str__(self):
        return self.pretty()

    def pretty(self, var: str = "x") -> str:
        if not self.coeffs:
            return "0"
        parts = []
        for i in range(len(self.coeffs) - 1, -1, -1):
            c = self.coeffs[i]
            if c == 0:
                continue
            sign = "-" if c < 0 else "+"
            a = abs(c)
            if i == 0:
                body = str(a)
            else:
                mono = var if i == 1 else f"{var}^{i}"
                body = mono if a == 1 else f"{a}*{mono}"
            parts.append((sign, body))
        first_sign, first_body = parts[0]
        out = ("-" if first_sign == "-" else "") + first_body
        for sign, body in parts[1:]:
            out += f" {sign} {body}"
        return out

    def to_json(self) -> list[str]:
        return [str(c) for c in self.coeffs]

    @classmethod
    def from_json(cls, data: Sequence) -> "IntPolynomial":
        return cls(int(c) for c in data)


def _pseudo_divmod(a: IntPolynomial, b: IntPolynomial):
    """Pseudo-division: ``lc(b)^d * a = q*b + r`` with integer q, r."""
    if b.is_zero():
        raise ZeroDivisionError("polynomial division by zero")
    d = a.degree - b.degree + 1
    if d <= 0:
        return IntPolynomial(), a
    lc = b.lc
    scaled = a * (lc ** d)
    return scaled._divmod(b)


def poly_gcd(a: IntPolynomial, b: IntPolynomial) -> IntPolynomial:
    """Primitive gcd over Z[x] with positive leading coefficient."""
    if a.is_zero():
        return b.primitive()
    if b.is_zero():
        return a.primitive()
    a, b = a.primitive(), b.primitive()
    if a.degree < b.degree:
        a, b = b, a
    while not b.is_zero():
        _, r = _pseudo_divmod(a, b)
        a, b = b, r.primitive()
    return IntPolynomial([1]) if a.degree == 0 else a.primitive()


class RationalFunction:
    """Quotient of integer polynomials in lowest terms.

    Canonical form: gcd of numerator and denominator is 1 (including the
    integer content) and the denominator has a positive leading coefficient.
    """

    __slots__ = ("num", "den")

    def __init__(self, num: IntPolynomial | int, den: IntPolynomial | int = 1):
        if isinstance(num, int):
            num = IntPolynomial.const(num)
        if isinstance(den, int):
            den = IntPolynomial.const(den)
        if den.is_zero():
            raise ZeroDivisionError("zero denominator")
        if num.is_zero():
            self.num, self.den = IntPolynomial(), IntPolynomial.const(1)
            return
        g = poly_gcd(num, den)
        if g.degree > 0:
            num = _exquo_rational(num, g)
            den = _exquo_rational(den, g)
        c = math.gcd(num.content(), den.content())
        if den.lc < 0:
            c = -c
        self.num = IntPolynomial(x // c for x in num.coeffs)
        self.den = IntPolynomial(x // c for x in den.coeffs)

    @classmethod
    def x(cls) -> "RationalFunction":
        return cls(IntPolynomial.x())

    def _coerce(self, other):
        if isinstance(other, RationalFunction):
            return other
        if isinstance(other, (int, IntPolynomial)):
            return RationalFunction(other)
        if isinstance(other, Fraction):
            return RationalFunction(other.numerator, other.denominator)
        return NotImplemented

    def __add__(self, other):
        other = self._coerce(other)
        if other is NotImplemented:
            return other
        if self.den == other.den:
            return RationalFunction(self.num + other.num, self.den)
        return RationalFunction(self.num * other.den + other.num * self.den, self.den * other.den)

    __radd__ = __add__

    def __neg__(self):
        return RationalFunction(-self.num, self.den)

    def __sub__(self, other):
        other = self._coerce(other)
        if other is NotImplemented:
            return other
        return self + (-other)

    def __rsub__(self, other):
        return (-self) + other

    def __mul__(self, other):
        other = self._coerce(other)
        if other is NotImplemented:
            return other
        return RationalFunction(self.num * other.num, self.den * other.den)

    __rmul__ = __mul__

    def __truediv__(self, other):
        other = self._coerce(other)
        if other is NotImplemented:
            return other
        if other.num.is_zero():
            raise ZeroDivisionError("division by the zero rational function")
        return RationalFunction(self.num * other.den, self.den * other.num)

    def __rtruediv__(self, other):
        return self._coerce(other) / self

    def __pow__(self, e: int):
        if e < 0:
            return RationalFunction(self.den ** (-e), self.num ** (-e))
        return RationalFunction(self.num ** e, self.den ** e)

    def __call__(self, x: Scalar) -> Fraction:
        d = self.den(Fraction(x))
        if d == 0:
            raise ZeroDivisionError(f"pole at {x}")
        return Fraction(self.num(Fraction(x))) / d

    def substitute_into(self, p: IntPolynomial) -> "RationalFunction":
        """``p(self)`` cleared over the common denominator ``den^deg p``."""
        if p.is_zero():
            return RationalFunction(0)
        d = p.degree
        num = IntPolynomial()
        num_pow = IntPolynomial([1])
        den_pows = [IntPolynomial([1])]
        for _ in range(d):
            den_pows.append(den_pows[-1] * self.den)
        for i, c in enumerate(p.coeffs):
            if c:
                num = num + num_pow * den_pows[d - i] * c
            num_pow = num_pow * self.num
        return RationalFunction(num, den_pows[d])

    def is_polynomial(self) -> bool:
        return self.den.degree == 0 and abs(self.den.lc) == 1

    def as_polynomial(self) -> IntPolynomial:
        if not self.is_polynomial():
            raise ArithmeticError(f"{self} is not an integer polynomial")
        return self.num * self.den.lc

    def __eq__(self, other):
        other = self._coerce(other)
        if other is NotImplemented:
            return other
        return self.num == other.num and self.den == other.den

    def __hash__(self):
        return hash((self.num, self.den))

    def __repr__(self):
        return f"RationalFunction({self.num!r}, {self.den!r})"

    def pretty(self, var: str = "x") -> str:
        if self.den == IntPolynomial.const(1):
            return self.num.pretty(var)
        return f"({self.num.pretty(var)})/({self.den.pretty(var)})"

    __str__ = pretty

    def to_json(self) -> dict:
        return {"numerator": self.num.to_json(), "denominator": self.den.to_json()}


def _exquo_rational(a: IntPolynomial, g: IntPolynomial) -> IntPolynomial:
    """``a / g`` for a primitive factor ``g`` of ``a``; integral by Gauss's lemma."""
    q, r = _pseudo_divmod(a, g)
    if not r.is_zero():
        raise ArithmeticError("gcd does not divide")
    scale = g.lc ** (a.degree - g.degree + 1)
    if any(c % scale for c in q.coeffs):
        raise ArithmeticError("non-primitive gcd")
    return IntPolynomial(c // scale for c in q.coeffs)
