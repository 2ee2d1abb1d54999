from fractions import Fraction

import pytest

from legdet.cyclotomic import CycloElem, zeta_pow
from legdet.exact import UniPoly
from legdet.quadfield import QuadElem, fundamental_unit
from legdet.render import (
    format_cyclo,
    format_poly,
    format_quad,
    format_rational,
    format_value,
    parse_cyclo,
    parse_poly,
    parse_quad,
    parse_rational,
    parse_value,
)


def test_rational_forms():
    assert format_rational(Fraction(-18)) == "-18"
    assert format_rational(Fraction(3, 2)) == "3/2"
    assert format_rational(0) == "0"
    assert parse_rational("-65/3") == Fraction(-65, 3)
    assert parse_rational(format_rational(Fraction(22, 7))) == Fraction(22, 7)


def test_poly_canonical_forms():
    assert format_poly(UniPoly((-18, -65))) == "-65*x - 18"
    assert format_poly(UniPoly((-4, 17))) == "17*x - 4"
    assert format_poly(UniPoly.constant(1)) == "1"
    assert format_poly(UniPoly()) == "0"
    assert format_poly(UniPoly((0, 1))) == "x"
    assert format_poly(UniPoly((0, -1))) == "-x"
    assert format_poly(UniPoly((Fraction(1, 2), 0, 3))) == "3*x^2 + 1/2"


def test_poly_roundtrip():
    for f in (UniPoly((-18, -65)), UniPoly((0, 1, 2)), UniPoly(), UniPoly.constant(-7),
              UniPoly((Fraction(2, 3), Fraction(-1, 5)))):
        assert parse_poly(format_poly(f)) == f
    assert parse_poly("-65*x - 18") == UniPoly((-18, -65))
    assert parse_poly("1") == UniPoly.constant(1)


def test_cyclo_canonical_forms():
    z = zeta_pow(5, 1)
    assert format_cyclo(z) == "z"
    assert format_cyclo(z - z * z) == "z - z^2"
    assert format_cyclo(CycloElem.from_coeffs(5, (0, 0, 0, Fraction(3, 2)))) == "3/2*z^3"
    assert format_cyclo(CycloElem.zero(5)) == "0"
    assert format_cyclo(CycloElem.from_rational(5, -2)) == "-2"
    assert format_cyclo(zeta_pow(5, 4)) == "-1 - z - z^2 - z^3"


def test_cyclo_roundtrip():
    for e in (zeta_pow(7, 3), CycloElem.zero(7), CycloElem.one(7),
              CycloElem.from_coeffs(7, (1, Fraction(-1, 2), 0, 0, 2, 0)),
              zeta_pow(7, 6)):
        assert parse_cyclo(format_cyclo(e), 7) == e
    with pytest.raises(ValueError):
        parse_cyclo("z^6", 7)  # outside the power basis


def test_quad_forms():
    assert format_quad(QuadElem(Fraction(1, 2), Fraction(1, 2), 5)) == "(1 + sqrt(5))/2"
    assert format_quad(QuadElem(Fraction(4), Fraction(1), 17)) == "4 + sqrt(17)"
    assert format_quad(QuadElem(Fraction(18), Fraction(5), 13)) == "18 + 5*sqrt(13)"
    assert format_quad(QuadElem(Fraction(4), Fraction(-1), 17)) == "4 - sqrt(17)"
    for p in (5, 13, 17, 29, 229):
        eps = fundamental_unit(p)
        assert parse_quad(format_quad(eps)) == eps


def test_parse_value_dispatch():
    assert parse_value("-65*x - 18") == UniPoly((-18, -65))
    assert parse_value("3/2") == Fraction(3, 2)
    assert parse_value("z - z^2", p=5) == zeta_pow(5, 1) - zeta_pow(5, 2)
    assert parse_value("(1 + sqrt(5))/2") == QuadElem(Fraction(1, 2), Fraction(1, 2), 5)
    with pytest.raises(ValueError):
        parse_value("z + 1")  # needs p


def test_compound_values():
    v = (zeta_pow(5, 1) * 5, zeta_pow(5, 1))
    s = format_value(v)
    assert s == "5*z ; z"
    assert parse_value(s, p=5) == v


def test_format_value_types():
    assert format_value(3) == "3"
    assert format_value(Fraction(1, 3)) == "1/3"
    assert format_value(UniPoly((0, 2))) == "2*x"
    with pytest.raises(TypeError):
        format_value(object())
