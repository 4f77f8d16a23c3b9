from fractions import Fraction

import pytest

from hurwitzpoly.errors import NotAUnit, PolySyntaxError, UnsupportedRing
from hurwitzpoly.rings import (
    Fp,
    Q,
    RingId,
    Z,
    Zloc,
    Zmod,
    as_fraction,
    elem,
    frac_field,
    gcd_elem,
    invert,
    is_prime_int,
    is_unit,
    parse_ring,
    parse_scalar,
    pseudo_radical,
    vp,
)


def test_ring_id_validation():
    assert str(Z) == "Z"
    assert str(Q) == "Q"
    assert str(Fp(3)) == "Fp(3)"
    assert str(Zloc(5)) == "Zloc(5)"
    assert str(Zmod(6)) == "Zmod(6)"
    with pytest.raises(UnsupportedRing):
        Fp(4)
    with pytest.raises(UnsupportedRing):
        Fp(2**31 + 11)
    with pytest.raises(UnsupportedRing):
        Zloc(6)
    with pytest.raises(UnsupportedRing):
        Zmod(1)
    with pytest.raises(UnsupportedRing):
        RingId("Z", p=3)


def test_field_and_char_flags():
    assert Q.is_field and Fp(7).is_field
    assert not Z.is_field and not Zloc(5).is_field and not Zmod(6).is_field
    assert Fp(7).char == 7
    assert Zmod(6).char == 6
    assert Z.char == 0 and Q.char == 0 and Zloc(5).char == 0


def test_is_prime_int():
    assert [n for n in range(2, 30) if is_prime_int(n)] == [2, 3, 5, 7, 11, 13, 17, 19, 23, 29]
    assert not is_prime_int(1)
    assert not is_prime_int(0)
    assert is_prime_int(2**31 - 1)


def test_elem_canonicalization():
    assert elem(Q, 2, 4) == elem(Q, 1, 2)
    assert elem(Q, 1, -2) == elem(Q, -1, 2)
    assert str(elem(Q, -1, 2)) == "-1/2"
    assert elem(Z, 4, 2) == elem(Z, 2)
    with pytest.raises(ValueError):
        elem(Z, 3, 2)
    with pytest.raises(ZeroDivisionError):
        elem(Q, 1, 0)
    # residues fold denominators through modular inverses
    assert elem(Fp(7), 3, 2) == elem(Fp(7), 5)
    assert elem(Zmod(6), 1, 5) == elem(Zmod(6), 5)
    with pytest.raises(ValueError):
        elem(Zmod(6), 1, 2)
    assert elem(Zloc(5), 3, 4).num == 3
    with pytest.raises(ValueError):
        elem(Zloc(5), 1, 5)


def test_elem_arithmetic():
    a = elem(Q, 1, 2)
    b = elem(Q, 1, 3)
    assert a + b == elem(Q, 5, 6)
    assert a - b == elem(Q, 1, 6)
    assert a * b == elem(Q, 1, 6)
    assert -a == elem(Q, -1, 2)
    assert bool(a) and not bool(elem(Q, 0))
    assert elem(Fp(5), 3) + elem(Fp(5), 4) == elem(Fp(5), 2)
    assert elem(Fp(5), 3) * elem(Fp(5), 4) == elem(Fp(5), 2)
    assert elem(Zmod(6), 4) * elem(Zmod(6), 3) == elem(Zmod(6), 0)


def test_units_and_inverses():
    assert is_unit(elem(Z, 1)) and is_unit(elem(Z, -1)) and not is_unit(elem(Z, 2))
    assert is_unit(elem(Q, 7, 3)) and not is_unit(elem(Q, 0))
    assert is_unit(elem(Zloc(5), 3, 2)) and not is_unit(elem(Zloc(5), 5))
    assert is_unit(elem(Zmod(6), 5)) and not is_unit(elem(Zmod(6), 4))
    assert invert(elem(Q, 2, 3)) == elem(Q, 3, 2)
    assert invert(elem(Z, -1)) == elem(Z, -1)
    assert invert(elem(Fp(7), 3)) == elem(Fp(7), 5)
    assert invert(elem(Zmod(6), 5)) == elem(Zmod(6), 5)
    assert invert(elem(Zloc(5), 2, 3)) == elem(Zloc(5), 3, 2)
    with pytest.raises(NotAUnit):
        invert(elem(Z, 2))
    with pytest.raises(NotAUnit):
        invert(elem(Zmod(6), 3))


def test_vp_and_gcd():
    assert vp(50, 5) == 2
    assert vp(Fraction(3, 25), 5) == -2
    assert vp(7, 5) == 0
    with pytest.raises(ValueError):
        vp(0, 5)
    assert gcd_elem(elem(Z, 12), elem(Z, 18)) == elem(Z, 6)
    assert gcd_elem(elem(Z, 0), elem(Z, 0)) == elem(Z, 0)
    assert gcd_elem(elem(Zloc(5), 50), elem(Zloc(5), 15)) == elem(Zloc(5), 5)
    assert gcd_elem(elem(Zloc(5), 3), elem(Zloc(5), 10)) == elem(Zloc(5), 1)
    with pytest.raises(UnsupportedRing):
        gcd_elem(elem(Q, 1), elem(Q, 2))


def test_pseudo_radical():
    assert pseudo_radical(Z).kind == "zero"
    assert pseudo_radical(Q).kind == "whole"
    assert pseudo_radical(Fp(3)).kind == "whole"
    ps = pseudo_radical(Zloc(7))
    assert ps.kind == "principal" and ps.generator == elem(Zloc(7), 7)
    with pytest.raises(UnsupportedRing):
        pseudo_radical(Zmod(6))


def test_frac_field_and_fractions():
    assert frac_field(Z) == Q
    assert frac_field(Zloc(5)) == Q
    assert frac_field(Q) == Q
    assert frac_field(Fp(3)) == Fp(3)
    assert as_fraction(elem(Zloc(5), 3, 2)) == Fraction(3, 2)
    with pytest.raises(UnsupportedRing):
        as_fraction(elem(Fp(3), 1))


def test_parse_ring():
    assert parse_ring("Z") == Z
    assert parse_ring("Q") == Q
    assert parse_ring("Fp(11)") == Fp(11)
    assert parse_ring("Zloc(5)") == Zloc(5)
    assert parse_ring("Zmod(9)") == Zmod(9)
    for bad in ("W", "Fp", "Fp(4)", "Z(3)", "Zloc(4)", ""):
        with pytest.raises(PolySyntaxError):
            parse_ring(bad)


def test_parse_scalar():
    assert parse_scalar(Q, "-3/4") == elem(Q, -3, 4)
    assert parse_scalar(Z, "7") == elem(Z, 7)
    assert parse_scalar(Zloc(5), "1/2") == elem(Zloc(5), 1, 2)
    with pytest.raises(PolySyntaxError):
        parse_scalar(Zloc(5), "1/5")
    with pytest.raises(PolySyntaxError):
        parse_scalar(Z, "1/2")
    with pytest.raises(PolySyntaxError):
        parse_scalar(Q, "1/0")
    err = None
    try:
        parse_scalar(Q, "x", position=3)
    except PolySyntaxError as e:
        err = str(e)
    assert err and "position 3" in err
