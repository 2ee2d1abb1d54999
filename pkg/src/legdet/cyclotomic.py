"""Exact arithmetic in the cyclotomic field Q(zeta_p) for odd primes p.

Elements are held in the power basis 1, zeta, ..., zeta^(p-2), which makes
equality a plain vector comparison.  Internally the rational coefficient
vector is stored as an integer vector over one positive common denominator,
normalized so the gcd of all entries and the denominator is 1; per-basis
Fraction views are available through ``coeffs``.  Reduction uses
zeta^(p-1) = -(1 + zeta + ... + zeta^(p-2)).

Inversion is the extended Euclidean algorithm against the p-th cyclotomic
polynomial over Q, uniformly for every nonzero element.
"""

from __future__ import annotations

from fractions import Fraction
from math import gcd

from .exact import UniPoly
from .ntheory import OddPrime, legendre


class CycloElem:
    """An element of Q(zeta_p) in canonical power-basis form."""

    __slots__ = ("p", "num", "den")

    def __init__(self, p: int, num, den: int = 1):
        p = OddPrime(p)
        num = list(num)
        if len(num) != p - 1:
            raise ValueError(f"coefficient vector must have length {p - 1}")
        if den == 0:
            raise ZeroDivisionError("zero denominator")
        if den < 0:
            den = -den
            num = [-c for c in num]
        g = gcd(den, *num)
        if g > 1:
            den //= g
            num = [c // g for c in num]
        if not any(num):
            den = 1
        self.p = p
        self.num = tuple(num)
        self.den = den

    # -- constructors ---------------------------------------------------

    @classmethod
    def zero(cls, p: int) -> "CycloElem":
        return cls(p, [0] * (OddPrime(p) - 1))

    @classmethod
    def one(cls, p: int) -> "CycloElem":
        return cls.from_rational(p, 1)

    @classmethod
    def from_rational(cls, p: int, r) -> "CycloElem":
        r = Fraction(r)
        num = [0] * (OddPrime(p) - 1)
        num[0] = r.numerator
        return cls(p, num, r.denominator)

    @classmethod
    def from_coeffs(cls, p: int, coeffs) -> "CycloElem":
        """Build from a vector of rationals in the power basis."""
        fr = [Fraction(c) for c in coeffs]
        den = 1
        for c in fr:
            den = den * c.denominator // gcd(den, c.denominator)
        return cls(p, [c.numerator * (den // c.denominator) for c in fr], den)

    # -- views ------------------------------------------------------------

    @property
    def coeffs(self) -> tuple[Fraction, ...]:
        return tuple(Fraction(c, self.den) for c in self.num)

    def coeff(self, k: int) -> Fraction:
        return Fraction(self.num[k], self.den)

    def is_zero(self) -> bool:
        return not any(self.num)

    def is_rational(self) -> bool:
        return not any(self.num[1:])

    def as_rational(self) -> Fraction:
        if not self.is_rational():
            raise ValueError(f"{self!r} is not rational")
        return Fraction(self.num[0], self.den)

    # -- ring operations --------------------------------------------------

    def _coerce(self, other) -> "CycloElem | None":
        if isinstance(other, CycloElem):
            if other.p != self.p:
                raise ValueError(f"mixed cyclotomic fields p={self.p} and p={other.p}")
            return other
        if isinstance(other, (int, Fraction)):
            return CycloElem.from_rational(self.p, other)
        return None

    def __eq__(self, other) -> bool:
        o = self._coerce(other)
        if o is None:
            return NotImplemented
        return self.num == o.num and self.den == o.den

    def __hash__(self) -> int:
        return hash((self.p, self.num, self.den))

    def __neg__(self) -> "CycloElem":
        return CycloElem(self.p, [-c for c in self.num], self.den)

    def __add__(self, other) -> "CycloElem":
        o = self._coerce(other)
        if o is None:
            return NotImplemented
        g = gcd(self.den, o.den)
        ls, lo = o.den // g, self.den // g
        num = [a * ls + b * lo for a, b in zip(self.num, o.num)]
        return CycloElem(self.p, num, self.den * ls)

    __radd__ = __add__

    def __sub__(self, other) -> "CycloElem":
        o = self._coerce(other)
        if o is None:
            return NotImplemented
        return self + (-o)

    def __rsub__(self, other) -> "CycloElem":
        return (-self) + other

    def __mul__(self, other) -> "CycloElem":
        o = self._coerce(other)
        if o is None:
            return NotImplemented
        p = self.p
        a, b = self.num, o.num
        if not any(a) or not any(b):
            return CycloElem.zero(p)
        # convolve with exponents folded mod p, sparser operand outside
        if sum(1 for c in a if c) > sum(1 for c in b if c):
            a, b = b, a
        acc = [0] * p
        for e, c in enumerate(a):
            if not c:
                continue
            for f, d in enumerate(b):
                if not d:
                    continue
                g = e + f
                acc[g - p if g >= p else g] += c * d
        # zeta^(p-1) = -(1 + zeta + ... + zeta^(p-2))
        top = acc[p - 1]
        num = [acc[i] - top for i in range(p - 1)]
        return CycloElem(p, num, self.den * o.den)

    __rmul__ = __mul__

    def __pow__(self, k: int) -> "CycloElem":
        if k < 0:
            return self.inv() ** (-k)
        acc = CycloElem.one(self.p)
        base = self
        while k:
            if k & 1:
                acc = acc * base
            base = base * base
            k >>= 1
        return acc

    def inv(self) -> "CycloElem":
        """Multiplicative inverse by extended Euclid against 1 + x + ... + x^(p-1)."""
        if self.is_zero():
            raise ZeroDivisionError("inverse of zero in Q(zeta_p)")
        p = self.p
        r0 = UniPoly([1] * p)
        r1 = UniPoly(self.coeffs)
        t0, t1 = UniPoly(), UniPoly.constant(1)
        while not r1.is_zero():
            q, r = r0.divmod(r1)
            r0, r1 = r1, r
            t0, t1 = t1, t0 - q * t1
        # r0 is a nonzero constant: the cyclotomic polynomial is irreducible
        if r0.degree != 0:
            raise RuntimeError("gcd with the cyclotomic polynomial is not constant")
        inv_poly = t0.scale(1 / r0.coeff(0))
        vec = [inv_poly.coeff(k) for k in range(p - 1)]
        return CycloElem.from_coeffs(p, vec)

    def __truediv__(self, other) -> "CycloElem":
        o = self._coerce(other)
        if o is None:
            return NotImplemented
        return self * o.inv()

    def __repr__(self) -> str:
        return f"CycloElem(p={self.p}, {self!s})"

    def __str__(self) -> str:
        from .render import format_cyclo

        return format_cyclo(self)


def zeta_pow(p: int, k: int) -> CycloElem:
    """zeta^k in canonical form; k may be any integer (reduced mod p)."""
    p = OddPrime(p)
    k %= p
    if k < p - 1:
        num = [0] * (p - 1)
        num[k] = 1
        return CycloElem(p, num)
    return CycloElem(p, [-1] * (p - 1))


def gauss_sum(p: int) -> CycloElem:
    """The quadratic Gauss sum g = sum of (k/p) zeta^k over k = 1..p-1.

    For p = 1 (mod 4) it satisfies g*g = p, and under zeta = e^(2 pi i / p)
    it is the positive square root of p, so it serves as the exact in-field
    sqrt(p) wherever the matrix decomposition needs one.
    """
    p = OddPrime(p)
    if p.mod4 != 1:
        raise ValueError(f"p = {p} is 3 (mod 4); the sum squares to -p there")
    num = [0] * (p - 1)
    for k in range(1, p - 1):
        num[k] = legendre(k, p)
    top = legendre(p - 1, p)
    num = [c - top for c in num]
    return CycloElem(p, num)
