"""Exact rational and univariate polynomial arithmetic.

Rationals are stdlib ``fractions.Fraction`` values, which already maintain
the invariants every caller relies on: positive denominator, fully reduced,
canonical zero.  ``Rational`` is re-exported under that name so the rest of
the package never imports ``fractions`` directly.

Polynomials are dense coefficient tuples over Rational; the degrees in this
package never exceed one for the symbolic determinant and p-2 for cyclotomic
reduction, so dense storage is the simplest exact representation.
"""

from __future__ import annotations

from fractions import Fraction

Rational = Fraction


def as_rational(v) -> Fraction:
    """Coerce an int, Fraction, or (num, den) pair to a Rational."""
    if isinstance(v, Fraction):
        return v
    if isinstance(v, int):
        return Fraction(v)
    if isinstance(v, tuple) and len(v) == 2:
        return Fraction(v[0], v[1])
    raise TypeError(f"cannot interpret {v!r} as an exact rational")


class UniPoly:
    """Dense univariate polynomial with Rational coefficients.

    ``coeffs[k]`` is the coefficient of x**k; the empty tuple is the zero
    polynomial and the last stored coefficient is always nonzero.
    """

    __slots__ = ("coeffs",)

    def __init__(self, coeffs=()):
        cs = [as_rational(c) for c in coeffs]
        while cs and cs[-1] == 0:
            cs.pop()
        object.__setattr__(self, "coeffs", tuple(cs))

    @classmethod
    def constant(cls, c) -> "UniPoly":
        return cls((as_rational(c),))

    @classmethod
    def x(cls) -> "UniPoly":
        return cls((0, 1))

    @property
    def degree(self) -> int:
        """Degree of the polynomial, -1 for the zero polynomial."""
        return len(self.coeffs) - 1

    def coeff(self, k: int) -> Fraction:
        return self.coeffs[k] if 0 <= k < len(self.coeffs) else Fraction(0)

    def is_zero(self) -> bool:
        return not self.coeffs

    def __bool__(self) -> bool:
        return bool(self.coeffs)

    def __eq__(self, other) -> bool:
        if isinstance(other, UniPoly):
            return self.coeffs == other.coeffs
        if isinstance(other, (int, Fraction)):
            return self == UniPoly.constant(other)
        return NotImplemented

    def __hash__(self) -> int:
        return hash(self.coeffs)

    def __neg__(self) -> "UniPoly":
        return UniPoly(tuple(-c for c in self.coeffs))

    def __add__(self, other) -> "UniPoly":
        if isinstance(other, (int, Fraction)):
            other = UniPoly.constant(other)
        if not isinstance(other, UniPoly):
            return NotImplemented
        a, b = self.coeffs, other.coeffs
        if len(a) < len(b):
            a, b = b, a
        out = list(a)
        for i, c in enumerate(b):
            out[i] += c
        return UniPoly(out)

    __radd__ = __add__

    def __sub__(self, other) -> "UniPoly":
        if isinstance(other, (int, Fraction)):
            other = UniPoly.constant(other)
        if not isinstance(other, UniPoly):
            return NotImplemented
        return self + (-other)

    def __rsub__(self, other) -> "UniPoly":
        return (-self) + other

    def __mul__(self, other) -> "UniPoly":
        if isinstance(other, (int, Fraction)):
            return self.scale(other)
        if not isinstance(other, UniPoly):
            return NotImplemented
        if not self.coeffs or not other.coeffs:
            return UniPoly()
        out = [Fraction(0)] * (len(self.coeffs) + len(other.coeffs) - 1)
        for i, a in enumerate(self.coeffs):
            if a == 0:
                continue
            for j, b in enumerate(other.coeffs):
                out[i + j] += a * b
        return UniPoly(out)

    __rmul__ = __mul__

    def scale(self, r) -> "UniPoly":
        r = as_rational(r)
        return UniPoly(tuple(c * r for c in self.coeffs))

    def __call__(self, r) -> Fraction:
        """Evaluate at a Rational point (Horner)."""
        r = as_rational(r)
        acc = Fraction(0)
        for c in reversed(self.coeffs):
            acc = acc * r + c
        return acc

    def divmod(self, other: "UniPoly") -> tuple["UniPoly", "UniPoly"]:
        """Polynomial long division, quotient and remainder."""
        if not isinstance(other, UniPoly) or other.is_zero():
            raise ZeroDivisionError("polynomial division by zero")
        rem = list(self.coeffs)
        dq = len(rem) - len(other.coeffs)
        if dq < 0:
            return UniPoly(), self
        quo = [Fraction(0)] * (dq + 1)
        lead = other.coeffs[-1]
        for k in range(dq, -1, -1):
            q = rem[k + other.degree] / lead
            quo[k] = q
            if q:
                for j, b in enumerate(other.coeffs):
                    rem[k + j] -= q * b
        return UniPoly(quo), UniPoly(rem)

    def exact_div(self, other: "UniPoly") -> "UniPoly":
        """Division that must leave no remainder (used by fraction-free elimination)."""
        quo, rem = self.divmod(other)
        if not rem.is_zero():
            raise ArithmeticError("inexact polynomial division")
        return quo

    def __repr__(self) -> str:
        return f"UniPoly({list(self.coeffs)!r})"

    def __str__(self) -> str:
        from .render import format_poly

        return format_poly(self)


def interp_linear(v0, v1) -> UniPoly:
    """The unique polynomial of degree <= 1 with f(0) = v0 and f(1) = v1."""
    v0 = as_rational(v0)
    v1 = as_rational(v1)
    return UniPoly((v0, v1 - v0))
