import itertools
import math

import pytest

from hurwitzpoly.errors import (
    BadModulus,
    BudgetExceeded,
    NotInGamma,
    NotInTargetRing,
    RingMismatch,
    UnsupportedRing,
)
from hurwitzpoly.hurwitz import basis, hpoly
from hurwitzpoly.ideals import (
    Lemma21Result,
    MaximalityVerdict,
    claim_report,
    constant_ideal,
    contains,
    cor25_witness,
    cosimplicity_spot_check,
    factor_closed,
    hensel_obstruction,
    is_maximal,
    is_prime,
    lemma21_check,
    member_lattice,
    min_tau_rho,
    mk_closed,
    prop23_construct,
    verify_certificate,
)
from hurwitzpoly.rings import Fp, Q, Z, Zloc, elem
from hurwitzpoly.transform import divides, divrem, from_ordinary, opoly, to_ordinary


def test_mk_closed():
    I = mk_closed(hpoly(Z, [1, 2, 2]))
    assert I.f0 == opoly([1, 2, 1])
    assert I.min_degree == 2
    assert I.content == elem(Z, 1)
    J = mk_closed(hpoly(Q, [elem(Q, 2), elem(Q, 2)]))
    assert J.f0 == opoly([1, 1])
    with pytest.raises(NotInGamma):
        mk_closed(hpoly(Z, [3]))
    with pytest.raises(UnsupportedRing):
        mk_closed(hpoly(Fp(3), [0, 1]))


def test_contains_fixtures():
    I = mk_closed(hpoly(Z, [2, 1]))
    assert contains(I, hpoly(Z, [0, 1, 1]))
    assert contains(I, hpoly(Z, []))
    assert contains(I, hpoly(Z, [2, 1]) * hpoly(Z, [3, 0, 7]))
    assert not contains(I, hpoly(Z, [1, 1, 1]))
    assert not contains(I, basis(Z, 1))
    with pytest.raises(RingMismatch):
        contains(I, hpoly(Q, [2, 1]))


def test_member_outside_plain_product_ideal():
    # (0,1,1) is in the closed ideal of (2,1) but not a ring multiple of it
    quo, rem = divrem(to_ordinary(hpoly(Z, [0, 1, 1])), to_ordinary(hpoly(Z, [2, 1])))
    assert rem == opoly([])
    with pytest.raises(NotInTargetRing) as info:
        from_ordinary(quo, Z)
    assert info.value.index == 1


def _brute_constant_gcd(f, k, bound):
    # independent oracle: scan small integer vectors, test membership by
    # transform division only, fold constant terms
    q0 = to_ordinary(f)
    g = 0
    for vec in itertools.product(range(-bound, bound + 1), repeat=k + 1):
        cand = hpoly(Z, list(vec))
        if cand and divides(q0, to_ordinary(cand)):
            g = math.gcd(g, vec[0])
    return g


def test_member_lattice_against_brute_force():
    f = hpoly(Z, [2, 1])
    I = mk_closed(f)
    lat = member_lattice(I, 3)
    assert len(lat) == 3
    for row in lat:
        assert contains(I, hpoly(Z, row))
    assert math.gcd(*[row[0] for row in lat]) == _brute_constant_gcd(f, 3, 4) == 2
    assert str(constant_ideal(I, 3)) == "2"
    g = hpoly(Z, [1, 1, 1])
    J = mk_closed(g)
    assert math.gcd(*[row[0] for row in member_lattice(J, 4)]) == _brute_constant_gcd(g, 4, 4)


def test_member_lattice_bounds():
    I = mk_closed(hpoly(Z, [1, 2, 2]))
    with pytest.raises(ValueError):
        member_lattice(I, 1)
    with pytest.raises(BudgetExceeded):
        member_lattice(I, 121)
    with pytest.raises(UnsupportedRing):
        member_lattice(mk_closed(hpoly(Q, [1, 1])), 3)


def test_min_tau_rho():
    m = min_tau_rho(mk_closed(hpoly(Z, [2, 1])))
    assert (m.min_degree, str(m.tau), str(m.rho_truncated)) == (1, "1", "1")
    assert m.stabilized and m.window == (1, 9)
    m = min_tau_rho(mk_closed(hpoly(Z, [1, 5])))
    assert (str(m.tau), str(m.rho_truncated)) == ("5", "5")
    m = min_tau_rho(mk_closed(hpoly(Zloc(5), [1, 5])))
    assert (str(m.tau), str(m.rho_truncated)) == ("5", "5")
    m = min_tau_rho(mk_closed(hpoly(Z, [1, 2, 2])))
    assert str(m.tau) == "1"


def test_factor_closed():
    fac = factor_closed(mk_closed(hpoly(Z, [1, 2, 2])))
    assert len(fac) == 1
    J, e = fac[0]
    assert J.generator == hpoly(Z, [1, 1]) and e == 2
    fac = factor_closed(mk_closed(hpoly(Q, [elem(Q, -1), elem(Q, 0), elem(Q, 2)])))
    assert [e for _, e in fac] == [1, 1]
    for J, _ in fac:
        assert J.ring == Q and J.min_degree == 1


def test_hensel_obstruction():
    I = mk_closed(hpoly(Z, [2, 1]))
    cert = hensel_obstruction(I, 2)
    assert cert is not None
    assert cert.poly == (2, 1) and cert.const_residue == 0 and cert.deriv_residue == 1
    assert hensel_obstruction(I, 3) is None
    with pytest.raises(BadModulus):
        hensel_obstruction(I, 4)
    I5 = mk_closed(hpoly(Zloc(5), [5, 1]))
    assert hensel_obstruction(I5, 5) is not None
    with pytest.raises(UnsupportedRing):
        hensel_obstruction(I5, 3)


def test_is_maximal_certificates():
    v = is_maximal(mk_closed(hpoly(Z, [1, 1])))
    assert v.status == "maximal" and v.kind == "UnitConstantLattice"
    assert v.witness == hpoly(Z, [1, 1])
    assert verify_certificate(v)
    v = is_maximal(mk_closed(hpoly(Z, [2, 1])))
    assert v.status == "not_maximal" and v.kind == "PadicObstruction"
    assert v.hensel.p == 2 and verify_certificate(v)
    v = is_maximal(mk_closed(hpoly(Z, [1, 2, 2])))
    assert v.status == "not_maximal" and v.kind == "ReducibleGenerator"
    assert verify_certificate(v)
    v = is_maximal(mk_closed(basis(Z, 2)))
    assert v.status == "not_maximal" and v.kind == "XGenerator"
    assert verify_certificate(v)
    v = is_maximal(mk_closed(basis(Q, 2)))
    assert v.status == "maximal" and v.kind == "FieldQuotient"
    assert verify_certificate(v)
    v = is_maximal(mk_closed(hpoly(Z, [2, 1, 1])))
    assert v.status == "unknown" and v.kind == "BudgetExhausted"
    assert not verify_certificate(v)
    assert v.data and all(g == "2" for _, g in v.data)


def test_cor25_witness():
    I = mk_closed(hpoly(Zloc(5), [1, 5]))
    assert cor25_witness(I) == hpoly(Zloc(5), [1, 5])
    J = mk_closed(hpoly(Zloc(2), [1, 1]))
    assert cor25_witness(J) == hpoly(Zloc(2), [1, 2, 2])
    assert cor25_witness(mk_closed(basis(Zloc(2), 2))) is None
    with pytest.raises(UnsupportedRing):
        cor25_witness(mk_closed(hpoly(Z, [1, 1])))


def test_cor25_witness_with_content():
    # the content-free generator drives the construction
    I = mk_closed(hpoly(Zloc(2), [2, 2]))
    w = cor25_witness(I)
    assert w is not None and w.coeff(0) == elem(Zloc(2), 1)
    assert contains(I, w)
    assert all(c.num % 2 == 0 for c in w.coeffs[1:])


def test_maximality_over_zloc():
    v = is_maximal(mk_closed(hpoly(Zloc(5), [1, 5])))
    assert v.status == "maximal" and v.kind == "Cor25Witness"
    assert v.witness == hpoly(Zloc(5), [1, 5])
    assert verify_certificate(v)
    # unit entries beyond the constant term still admit the witness shape
    v = is_maximal(mk_closed(hpoly(Zloc(2), [5, 1])))
    assert v.status == "maximal" and v.kind == "Cor25Witness"
    assert verify_certificate(v)
    v = is_maximal(mk_closed(hpoly(Zloc(2), [2, 1])))
    assert v.status == "not_maximal" and v.kind == "PadicObstruction"
    assert verify_certificate(v)


def test_cosimplicity_spot_check():
    I = mk_closed(hpoly(Z, [1, 1]))
    assert cosimplicity_spot_check(I, hpoly(Z, [1, 1]), bound=50)
    assert not cosimplicity_spot_check(I, hpoly(Z, [2, 1]), bound=10)


def test_tampered_witnesses_fail():
    I = mk_closed(hpoly(Zloc(5), [1, 5]))
    good = is_maximal(I)
    bad = MaximalityVerdict("maximal", "Cor25Witness", I, witness=hpoly(Zloc(5), [1, 5, 3]))
    assert verify_certificate(good) and not verify_certificate(bad)
    bad = MaximalityVerdict("maximal", "UnitConstantLattice", I, witness=hpoly(Zloc(5), [1, 7]))
    assert not verify_certificate(bad)
    P = mk_closed(hpoly(Z, [2, 1]))
    r = lemma21_check(P, 3)
    forged = Lemma21Result("ViolatedWitness", P, 3, witness=hpoly(Z, [1, 1, 1]))
    assert verify_certificate(r) and not verify_certificate(forged)


def test_lemma21_fixtures():
    r = lemma21_check(mk_closed(hpoly(Z, [2, 1])), 3)
    assert r.status == "ViolatedWitness"
    assert r.witness == hpoly(Z, [4, 6, 6, 3])
    assert r.witness == hpoly(Z, [2, 1]) * hpoly(Z, [2, 2, 1])
    assert verify_certificate(r)
    r = lemma21_check(mk_closed(hpoly(Z, [2, 1])), 2)
    assert r.status == "HoldsCertified" and r.hensel.p == 2
    assert verify_certificate(r)
    r = lemma21_check(mk_closed(hpoly(Zloc(2), [1, 1])), 2)
    assert r.status == "ViolatedWitness" and r.witness == hpoly(Zloc(2), [1, 2, 2])
    assert verify_certificate(r)


def test_lemma21_inapplicable_truncation():
    # leading ideal of [(1,q)] sits inside (q) in every finite window
    for q in (2, 5):
        r = lemma21_check(mk_closed(hpoly(Z, [1, q])), q)
        assert r.status == "Inapplicable"
        assert f"({q})" in r.rho_note
        assert verify_certificate(r)
    r = lemma21_check(mk_closed(hpoly(Z, [1, 5])), 5, budget=30)
    assert r.status == "Inapplicable"
    # at a different prime the same ideal yields a witness instead
    r = lemma21_check(mk_closed(hpoly(Z, [1, 5])), 3)
    assert r.status == "ViolatedWitness" and verify_certificate(r)


def test_lemma21_input_checks():
    P = mk_closed(hpoly(Z, [2, 1]))
    with pytest.raises(BadModulus):
        lemma21_check(P, 6)
    with pytest.raises(ValueError):
        lemma21_check(mk_closed(hpoly(Z, [1, 2, 2])), 3)
    with pytest.raises(UnsupportedRing):
        lemma21_check(mk_closed(hpoly(Zloc(5), [1, 5])), 3)
    with pytest.raises(UnsupportedRing):
        lemma21_check(mk_closed(hpoly(Q, [1, 1])), 3)


def test_claim_report_over_z():
    rep = claim_report(mk_closed(hpoly(Z, [1, 1])))
    assert rep.verdict.status == "maximal"
    assert verify_certificate(rep.verdict)
    assert rep.line("cor22").status == "Violated"
    assert rep.line("prop24").status == "Violated"
    assert rep.line("cor25").status == "Violated"
    assert rep.line("cor26").status == "Violated"
    rep = claim_report(mk_closed(hpoly(Z, [2, 1])))
    assert rep.verdict.status == "not_maximal"
    assert rep.line("cor22").status == "Inapplicable"
    assert rep.line("cor25").status == "Holds"
    assert rep.line("cor26").status == "Unknown"


def test_claim_report_over_zloc():
    rep = claim_report(mk_closed(hpoly(Zloc(5), [1, 5])))
    assert all(ln.status == "Holds" for ln in rep.lines)
    assert rep.line("prop24").witness == hpoly(Zloc(5), [1, 5])
    # a maximal ideal whose leading ideal contains a unit breaks the
    # containment claim even over a ring with non-zero pseudo-radical
    rep = claim_report(mk_closed(hpoly(Zloc(2), [5, 1])))
    assert rep.verdict.status == "maximal"
    assert rep.line("cor22").status == "Violated"
    assert rep.line("prop24").status == "Holds"
    assert rep.line("cor25").status == "Holds"
    assert rep.line("cor26").status == "Holds"


def test_claim_report_over_q():
    rep = claim_report(mk_closed(basis(Q, 2)))
    assert rep.verdict.kind == "FieldQuotient"
    assert rep.line("cor22").status == "Holds"
    assert rep.line("prop24").status == "Holds"
    assert "branch (i)" in rep.line("prop24").note
    assert rep.line("cor25").status == "Inapplicable"
    assert rep.line("cor26").status == "Holds"
    rep = claim_report(mk_closed(hpoly(Q, [1, 1])))
    assert rep.line("prop24").status == "Holds"
    assert "branch (ii)" in rep.line("prop24").note
    assert rep.line("prop24").witness == hpoly(Q, [1, 1])


def test_prop23_construct():
    assert prop23_construct(Z) is None
    I = prop23_construct(Q)
    assert I.generator == basis(Q, 2)
    assert is_maximal(I).status == "maximal"
    I = prop23_construct(Zloc(7))
    assert I.generator == hpoly(Zloc(7), [1, 7])
    assert is_prime(I)
    v = is_maximal(I)
    assert v.status == "maximal" and verify_certificate(v)
    with pytest.raises(UnsupportedRing):
        prop23_construct(Fp(3))


def test_closed_ideal_identity():
    a = mk_closed(hpoly(Z, [1, 1]))
    b = mk_closed(hpoly(Z, [2, 2]))
    assert a == b and hash(a) == hash(b)
    assert a != mk_closed(hpoly(Z, [1, 2]))
