from fractions import Fraction

import pytest

from hurwitzpoly.errors import (
    CharPUnsupported,
    DivisionByZero,
    NotInTargetRing,
    PolySyntaxError,
)
from hurwitzpoly.hurwitz import basis, hpoly
from hurwitzpoly.rings import Fp, Q, Z, Zloc, elem
from hurwitzpoly.transform import (
    OrdinaryPoly,
    derivative,
    divides,
    divrem,
    evaluate,
    format_ordinary,
    from_ordinary,
    gcd_poly,
    human_str,
    opoly,
    parse_ordinary,
    to_ordinary,
)


def test_ordinary_basics():
    q = opoly([1, 2, 1])
    assert q.degree == 2
    assert q.lead == 1
    assert q.coeff(5) == 0
    assert q * opoly([0, 1]) == opoly([0, 1, 2, 1])
    assert q + opoly([-1]) == opoly([0, 2, 1])
    assert (q - q).coeffs == ()
    assert q ** 2 == opoly([1, 4, 6, 4, 1])
    assert q.scale(Fraction(1, 2)) == opoly([Fraction(1, 2), 1, Fraction(1, 2)])
    assert opoly([2, 4]).monic() == opoly([Fraction(1, 2), 1])
    with pytest.raises(DivisionByZero):
        opoly([]).lead


def test_evaluate_and_derivative():
    q = opoly([1, 0, 3])
    assert evaluate(q, 2) == 13
    assert evaluate(q, Fraction(1, 2)) == Fraction(7, 4)
    assert derivative(q) == opoly([0, 6])
    assert derivative(opoly([5])) == opoly([])


def test_divrem():
    a = opoly([-1, 0, 1])
    quo, rem = divrem(a, opoly([-1, 1]))
    assert quo == opoly([1, 1]) and rem == opoly([])
    quo, rem = divrem(opoly([1, 1, 1]), opoly([1, 1]))
    assert quo == opoly([0, 1]) and rem == opoly([1])
    assert divides(opoly([-1, 1]), a)
    assert not divides(opoly([1, 1, 1]), a)
    with pytest.raises(DivisionByZero):
        divrem(a, opoly([]))
    assert gcd_poly(opoly([-1, 0, 1]), opoly([-1, 1])) == opoly([-1, 1])
    assert gcd_poly(opoly([1, 1]), opoly([2])) == opoly([1])


def test_to_ordinary():
    # values divided by factorials: (1,2,2) -> 1 + 2x + x^2
    assert to_ordinary(hpoly(Z, [1, 2, 2])) == opoly([1, 2, 1])
    assert to_ordinary(basis(Z, 3)) == opoly([0, 0, Fraction(1, 2)])
    assert to_ordinary(hpoly(Z, [])) == opoly([])
    with pytest.raises(CharPUnsupported):
        to_ordinary(hpoly(Fp(3), [1]))


def test_transform_is_multiplicative():
    f = hpoly(Z, [2, 1])
    g = hpoly(Z, [2, 2, 1])
    assert to_ordinary(f * g) == to_ordinary(f) * to_ordinary(g)
    a = hpoly(Q, [elem(Q, 1, 2), elem(Q, 3)])
    b = hpoly(Q, [elem(Q, 2), elem(Q, 0), elem(Q, 5, 7)])
    assert to_ordinary(a * b) == to_ordinary(a) * to_ordinary(b)
    assert to_ordinary(a + b) == to_ordinary(a) + to_ordinary(b)


def test_from_ordinary_round_trip():
    for f in (hpoly(Z, [4, 6, 6, 3]), hpoly(Q, [elem(Q, 1, 3), elem(Q, 2)]),
              hpoly(Zloc(5), [elem(Zloc(5), 1, 2), elem(Zloc(5), 5)])):
        assert from_ordinary(to_ordinary(f), f.ring) == f


def test_from_ordinary_lattice_check():
    # x/2 pulls back to value 1/2 at index 1, outside Z
    with pytest.raises(NotInTargetRing) as info:
        from_ordinary(opoly([0, Fraction(1, 2)]), Z)
    assert info.value.index == 1
    assert from_ordinary(opoly([0, Fraction(1, 2)]), Q) == hpoly(Q, [elem(Q, 0), elem(Q, 1, 2)])
    # over a localization only the p-part of a denominator blocks
    assert from_ordinary(opoly([Fraction(1, 2)]), Zloc(5)) == hpoly(Zloc(5), [elem(Zloc(5), 1, 2)])
    with pytest.raises(NotInTargetRing):
        from_ordinary(opoly([Fraction(1, 5)]), Zloc(5))
    with pytest.raises(CharPUnsupported):
        from_ordinary(opoly([1]), Fp(3))


def test_ordinary_text_forms():
    q = opoly([1, Fraction(-1, 2), 0, 3])
    assert format_ordinary(q) == "ORD:[1,-1/2,0,3]"
    assert parse_ordinary("ORD:[1,-1/2,0,3]") == q
    assert human_str(q) == "1 + -1/2*x + 3*x^3"
    assert human_str(opoly([])) == "0"
    for bad in ("ORD:[1,", "ORD:1", "[1,2]", "ORD:[a]"):
        with pytest.raises(PolySyntaxError):
            parse_ordinary(bad)
