import random
from fractions import Fraction

import pytest

from legdet.exact import Rational, UniPoly, as_rational, interp_linear


def test_as_rational_forms():
    assert as_rational(3) == Fraction(3)
    assert as_rational(Fraction(2, 4)) == Fraction(1, 2)
    assert as_rational((3, 6)) == Fraction(1, 2)
    assert Rational is Fraction
    with pytest.raises(TypeError):
        as_rational("3")


def test_unipoly_normalization():
    assert UniPoly((1, 2, 0, 0)).coeffs == (Fraction(1), Fraction(2))
    assert UniPoly(()).degree == -1
    assert UniPoly((0, 0)).is_zero()
    assert not UniPoly((0, 1)).is_zero()
    assert UniPoly.constant(5).degree == 0
    assert UniPoly.x().degree == 1
    assert UniPoly((1, 2)).coeff(7) == 0


def test_unipoly_ring_ops():
    f = UniPoly((1, 2))      # 1 + 2x
    g = UniPoly((-1, 0, 3))  # -1 + 3x^2
    assert f + g == UniPoly((0, 2, 3))
    assert f - f == UniPoly()
    assert f * g == UniPoly((-1, -2, 3, 6))
    assert -f == UniPoly((-1, -2))
    assert 2 * f == UniPoly((2, 4))
    assert f.scale(Fraction(1, 2)) == UniPoly((Fraction(1, 2), 1))
    assert f(3) == 7
    assert g(Fraction(1, 3)) == Fraction(-2, 3)


def test_unipoly_divmod_roundtrip():
    rng = random.Random(7)
    for _ in range(50):
        a = UniPoly([rng.randint(-4, 4) for _ in range(rng.randint(0, 5))])
        b = UniPoly([rng.randint(-4, 4) for _ in range(rng.randint(1, 4))])
        if b.is_zero():
            continue
        q, r = a.divmod(b)
        assert q * b + r == a
        assert r.degree < b.degree


def test_unipoly_exact_div():
    f = UniPoly((1, 2))
    g = UniPoly((-1, 0, 3))
    assert (f * g).exact_div(f) == g
    with pytest.raises(ArithmeticError):
        UniPoly((1, 1)).exact_div(UniPoly((0, 1)))
    with pytest.raises(ZeroDivisionError):
        f.divmod(UniPoly())


def test_unipoly_eq_hash():
    assert UniPoly((2,)) == UniPoly.constant(2)
    assert hash(UniPoly((1, 2))) == hash(UniPoly((Fraction(1), Fraction(2))))
    assert UniPoly((1, 2)) != UniPoly((1, 2, 1))


def test_interp_linear():
    f = interp_linear(-2, -7)
    assert f.coeff(0) == -2 and f.coeff(1) == -5
    assert f(0) == -2 and f(1) == -7
    assert interp_linear(4, 4) == UniPoly.constant(4)
    assert interp_linear(0, 0).is_zero()
