"""Canonical text forms for exact values, with inverse parsers.

Every formatter here has a parser that recovers the exact value, so report
output can be checked for lossless round-trips.  Grammar, by type:

  rational   -18, 3/2, 0
  polynomial -65*x - 18     (descending powers, unit coefficients omitted)
  cyclotomic z - z^2 + 3/2*z^4   (ascending powers of z, zero is "0")
  quadratic  (3 + sqrt(13))/2, 4 + sqrt(17), 18 + 5*sqrt(13)
  compound   v1 ; v2    (joint value of a two-part identity, parsed to a tuple)

Signs are folded into the joining " + " / " - " separators; no other
whitespace is significant.
"""

from __future__ import annotations

import re
from fractions import Fraction

from .cyclotomic import CycloElem
from .exact import UniPoly
from .quadfield import QuadElem


def format_rational(r) -> str:
    r = Fraction(r)
    return str(r.numerator) if r.denominator == 1 else f"{r.numerator}/{r.denominator}"


def parse_rational(s: str) -> Fraction:
    return Fraction(s.strip())


def _join_terms(terms: list[tuple[Fraction, str]]) -> str:
    """Render (coefficient, symbol) terms, folding signs and unit coefficients."""
    if not terms:
        return "0"
    parts: list[str] = []
    for coeff, sym in terms:
        mag = abs(coeff)
        if not sym:
            body = format_rational(mag)
        elif mag == 1:
            body = sym
        else:
            body = f"{format_rational(mag)}*{sym}"
        if not parts:
            parts.append(body if coeff > 0 else f"-{body}")
        else:
            parts.append(f"+ {body}" if coeff > 0 else f"- {body}")
    return " ".join(parts)


def _split_terms(s: str) -> list[tuple[int, str]]:
    """Inverse of the sign folding: (sign, bare term) pairs."""
    s = s.strip()
    if not s:
        raise ValueError("empty value")
    out: list[tuple[int, str]] = []
    sign = 1
    if s[0] in "+-":
        sign = -1 if s[0] == "-" else 1
        s = s[1:]
    for piece in re.split(r"\s+([+-])\s+", s):
        if piece == "+":
            sign = 1
        elif piece == "-":
            sign = -1
        else:
            out.append((sign, piece.strip()))
    return out


def _parse_term(term: str, var: str) -> tuple[Fraction, int]:
    """One additive term -> (coefficient, exponent of var)."""
    m = re.fullmatch(
        rf"(?:(?P<c>\d+(?:/\d+)?)\*)?(?:{var}(?:\^(?P<e>\d+))?)?",
        term,
    ) or re.fullmatch(rf"(?P<c>\d+(?:/\d+)?)(?P<e>)?", term)
    if m is None or not term:
        raise ValueError(f"cannot parse term {term!r}")
    has_var = var in term
    coeff = Fraction(m.group("c")) if m.group("c") else Fraction(1)
    if not has_var:
        return coeff, 0
    exp = int(m.group("e")) if m.group("e") else 1
    return coeff, exp


def format_poly(f: UniPoly) -> str:
    terms = []
    for k in range(f.degree, -1, -1):
        c = f.coeff(k)
        if c == 0:
            continue
        sym = "" if k == 0 else ("x" if k == 1 else f"x^{k}")
        terms.append((c, sym))
    return _join_terms(terms)


def parse_poly(s: str) -> UniPoly:
    acc: dict[int, Fraction] = {}
    for sign, term in _split_terms(s):
        c, e = _parse_term(term, "x")
        acc[e] = acc.get(e, Fraction(0)) + sign * c
    if not acc:
        return UniPoly()
    coeffs = [acc.get(k, Fraction(0)) for k in range(max(acc) + 1)]
    return UniPoly(coeffs)


def format_cyclo(e: CycloElem) -> str:
    terms = []
    for k, c in enumerate(e.coeffs):
        if c == 0:
            continue
        sym = "" if k == 0 else ("z" if k == 1 else f"z^{k}")
        terms.append((c, sym))
    return _join_terms(terms)


def parse_cyclo(s: str, p: int) -> CycloElem:
    acc: dict[int, Fraction] = {}
    for sign, term in _split_terms(s):
        c, e = _parse_term(term, "z")
        if e > p - 2:
            raise ValueError(f"exponent {e} outside the power basis for p={p}")
        acc[e] = acc.get(e, Fraction(0)) + sign * c
    vec = [acc.get(k, Fraction(0)) for k in range(p - 1)]
    return CycloElem.from_coeffs(p, vec)


def format_quad(e: QuadElem) -> str:
    if e.x.denominator == 1 and e.y.denominator == 1:
        halves = False
        a, b = e.x.numerator, e.y.numerator
    else:
        halves = True
        a, b = (2 * e.x).numerator, (2 * e.y).numerator
    terms = []
    if a != 0:
        terms.append((Fraction(a), ""))
    if b != 0:
        terms.append((Fraction(b), f"sqrt({e.p})"))
    body = _join_terms(terms)
    return f"({body})/2" if halves else body


def parse_quad(s: str) -> QuadElem:
    s = s.strip()
    halves = False
    m = re.fullmatch(r"\((.*)\)/2", s)
    if m:
        halves = True
        s = m.group(1)
    p = None
    a = Fraction(0)
    b = Fraction(0)
    for sign, term in _split_terms(s):
        sm = re.fullmatch(r"(?:(\d+(?:/\d+)?)\*)?sqrt\((\d+)\)", term)
        if sm:
            p = int(sm.group(2))
            b += sign * (Fraction(sm.group(1)) if sm.group(1) else Fraction(1))
        else:
            a += sign * Fraction(term)
    if p is None:
        raise ValueError(f"no sqrt(...) part in {s!r}")
    if halves:
        a, b = a / 2, b / 2
    return QuadElem(a, b, p)


def format_value(v) -> str:
    if isinstance(v, tuple):
        return " ; ".join(format_value(part) for part in v)
    if isinstance(v, UniPoly):
        return format_poly(v)
    if isinstance(v, CycloElem):
        return format_cyclo(v)
    if isinstance(v, QuadElem):
        return format_quad(v)
    if isinstance(v, (int, Fraction)):
        return format_rational(v)
    raise TypeError(f"no canonical form for {type(v).__name__}")


def parse_value(s: str, p: int | None = None):
    """Inverse of format_value; cyclotomic values need the field index p."""
    if " ; " in s:
        return tuple(parse_value(part, p) for part in s.split(" ; "))
    if "sqrt" in s:
        return parse_quad(s)
    if "z" in s:
        if p is None:
            raise ValueError("parsing a cyclotomic value needs p")
        return parse_cyclo(s, p)
    if "x" in s:
        return parse_poly(s)
    return parse_rational(s)
