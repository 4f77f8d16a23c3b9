"""Principal closed ideals and their certificate engines.

A closed ideal [f] over a characteristic-0 coefficient ring is pinned
down by the monic associate f0 of the transform of f: membership of g
means exactly that f0 divides the transform of g over Q.  Everything
else here is computed from that criterion.

Degree-filtered structure is extracted through integer lattices.  The
members of degree <= k form the intersection of a rational column space
(multiples of f0, written in factorial-scaled coordinates) with the
integer points; two Hermite passes produce a saturated basis, and gcds
of single coordinates read off the constant-term and leading-term
ideals.  Over a localization the integer answer localizes, because any
denominator coprime to p is a unit.

Maximality is decided only by constructions this module can re-verify:

  * a reducible generator (never maximal),
  * field coefficients (transform side is a principal ideal domain,
    quotient by an irreducible generator is a field),
  * the degree-1 basis generator over a non-field (every member then
    has zero constant term, and adjoining any non-unit constant stays
    proper),
  * a p-adic obstruction: if the integer form F of f0 has a simple
    root at 0 mod p, Hensel lifting gives a p-adic root of valuation
    >= 1, and evaluating transforms there shows every member's
    constant term is divisible by p, so the ideal misses 1 mod p and
    sits under a strictly larger proper ideal,
  * a member with constant term 1: any ideal strictly above then meets
    the coefficient ring in a non-zero ideal (m), and reducing that
    member mod m leaves a unit constant, so modular inversion pushes
    the unity into the bigger ideal; the witness certifies maximality.

When none of these fire within the degree budget the verdict is
Unknown, carrying the partial constant-ideal chain.
"""

from __future__ import annotations

import math
from dataclasses import dataclass, field

from .errors import (
    BadModulus,
    BudgetExceeded,
    NilpotencyBudgetExceeded,
    NotAUnit,
    NotInGamma,
    RingMismatch,
    UnsupportedRing,
)
from .hurwitz import (
    HurwitzPoly,
    basis,
    constant,
    hpoly,
    invert_mod,
    lift,
    reduce_mod,
)
from .intlinalg import (
    combo_with_coordinate,
    gcd_of_coordinate,
    integer_column_kernel,
    left_kernel_basis,
)
from .irreducibility import (
    DEFAULT_DEGREE_CAP,
    content_primitive,
    factor_ordinary,
    in_gamma,
    integerize,
    is_irreducible_ordinary,
)
from .rings import (
    RingElem,
    RingId,
    Zmod,
    elem,
    invert,
    is_prime_int,
    is_unit,
    one,
    pseudo_radical,
    vp,
)
from .transform import OrdinaryPoly, divides, from_ordinary, opoly, to_ordinary

_X = opoly([0, 1])
_LATTICE_CAP = 120


@dataclass(frozen=True)
class ClosedIdeal:
    """[f]: all g whose transform is divisible by the monic f0."""

    ring: RingId
    generator: HurwitzPoly
    f0: OrdinaryPoly
    prim: HurwitzPoly
    content: RingElem
    _lattices: dict = field(default_factory=dict, repr=False)

    @property
    def min_degree(self) -> int:
        """Least degree of a non-zero member; equals deg f0."""
        return self.f0.degree

    def __eq__(self, other):
        if not isinstance(other, ClosedIdeal):
            return NotImplemented
        return self.ring == other.ring and self.f0 == other.f0

    def __hash__(self):
        return hash((self.ring, self.f0.coeffs))

    def __str__(self):
        return f"[{self.generator}]"


def mk_closed(f: HurwitzPoly) -> ClosedIdeal:
    if f.ring.kind not in ("Z", "Q", "Zloc"):
        raise UnsupportedRing(f"closed ideals need characteristic 0, got {f.ring}")
    if not in_gamma(f):
        raise NotInGamma("generator must have degree >= 1")
    f0 = to_ordinary(f).monic()
    if f.ring.kind == "Q":
        cont, prim = one(f.ring), f
    else:
        cont, prim = content_primitive(f)
    return ClosedIdeal(f.ring, f, f0, prim, cont)


def contains(I: ClosedIdeal, g: HurwitzPoly) -> bool:
    if g.ring != I.ring:
        raise RingMismatch(f"member candidate over {g.ring}, ideal over {I.ring}")
    if not g:
        return True
    return divides(I.f0, to_ordinary(g))


# -- degree-filtered lattices ------------------------------------------

def member_lattice(I: ClosedIdeal, k: int) -> list[list[int]]:
    """Saturated basis of the integer coefficient vectors of members of
    degree <= k (coordinate n holds the value at index n).

    Over Zloc(p) this is still the integral lattice; localizing its
    coordinate ideals answers the p-local questions.
    """
    if I.ring.kind not in ("Z", "Zloc"):
        raise UnsupportedRing(f"lattice computations need Z or Zloc, got {I.ring}")
    m = I.min_degree
    if k < m:
        raise ValueError(f"window {k} below the minimal degree {m}")
    if k > _LATTICE_CAP:
        raise BudgetExceeded(f"degree window {k} beyond the lattice cap {_LATTICE_CAP}")
    hit = I._lattices.get(k)
    if hit is not None:
        return hit
    rows = []
    fact = 1
    for n in range(k + 1):
        if n:
            fact *= n
        rows.append([fact * I.f0.coeff(n - j) for j in range(k - m + 1)])
    den = 1
    for row in rows:
        for v in row:
            den = math.lcm(den, v.denominator)
    A = [[int(v * den) for v in row] for row in rows]
    eqs = left_kernel_basis(A)
    out = integer_column_kernel(eqs, k + 1)
    I._lattices[k] = out
    return out


def _localize(ring: RingId, g: int) -> RingElem:
    """Integer ideal generator reinterpreted in Z or Zloc(p)."""
    if ring.kind == "Z" or g == 0:
        return elem(ring, g)
    return elem(ring, ring.p ** max(vp(g, ring.p), 0))


def constant_ideal(I: ClosedIdeal, k: int) -> RingElem:
    """Generator of the ideal of constant terms over degree <= k."""
    return _localize(I.ring, gcd_of_coordinate(member_lattice(I, k), 0))


def _unit_constant_member(I: ClosedIdeal, k: int) -> HurwitzPoly | None:
    """A member of degree <= k with constant term exactly 1, if the
    constant-term ideal at this window is the unit ideal."""
    lat = member_lattice(I, k)
    g = gcd_of_coordinate(lat, 0)
    if g == 0:
        return None
    if I.ring.kind == "Z":
        if g != 1:
            return None
        return hpoly(I.ring, combo_with_coordinate(lat, 0, 1))
    if g % I.ring.p == 0:
        return None
    member = hpoly(I.ring, combo_with_coordinate(lat, 0, g))
    return constant(I.ring, invert(elem(I.ring, g))) * member


@dataclass(frozen=True)
class MinTauRho:
    min_degree: int
    tau: RingElem
    rho_truncated: RingElem
    stabilized: bool
    window: tuple[int, int]


def _tau_int(I: ClosedIdeal) -> int:
    den = 1
    fact = 1
    for n in range(I.min_degree + 1):
        if n:
            fact *= n
        den = math.lcm(den, (fact * I.f0.coeff(n)).denominator)
    return den


def min_tau_rho(I: ClosedIdeal, window: int = 8) -> MinTauRho:
    """Minimal degree, the scale factor making f0 integral, and the
    truncated leading-coefficient ideal over a degree window.

    tau generates {a : a*f0 pulls back into the coefficient ring}; the
    truncated leading ideal folds the gcd of the top coordinate of each
    member lattice, and stabilized reports three equal trailing values.
    """
    if I.ring.kind not in ("Z", "Zloc"):
        raise UnsupportedRing(f"invariants need Z or Zloc, got {I.ring}")
    m = I.min_degree
    tau = _localize(I.ring, _tau_int(I))
    g = 0
    history = []
    for d in range(m, m + window + 1):
        g = math.gcd(g, gcd_of_coordinate(member_lattice(I, d), d))
        history.append(_localize(I.ring, g))
    stabilized = len(history) >= 3 and history[-1] == history[-2] == history[-3]
    return MinTauRho(m, tau, history[-1], stabilized, (m, m + window))


# -- primality and factorization ---------------------------------------

def is_prime(I: ClosedIdeal, cap: int = DEFAULT_DEGREE_CAP) -> bool:
    """Primality of [f]: the monic transform generator is irreducible."""
    return is_irreducible_ordinary(I.f0, cap)


def _integral_generator(ring: RingId, q: OrdinaryPoly) -> HurwitzPoly:
    """Pull a monic transform-side polynomial back into the ring,
    clearing exactly the denominators the ring cannot absorb."""
    if ring.kind == "Q":
        return from_ordinary(q, ring)
    den = 1
    fact = 1
    for n in range(q.degree + 1):
        if n:
            fact *= n
        den = math.lcm(den, (fact * q.coeff(n)).denominator)
    if ring.kind == "Zloc":
        den = ring.p ** max(vp(den, ring.p), 0) if den > 1 else 1
    return from_ordinary(q.scale(den), ring)


def factor_closed(I: ClosedIdeal, cap: int = DEFAULT_DEGREE_CAP):
    """Prime closed ideals over I with multiplicities; membership in I
    is simultaneous membership in all prime powers."""
    res = factor_ordinary(I.f0, cap)
    return tuple((mk_closed(_integral_generator(I.ring, p)), e) for p, e in res.factors)


# -- certificates ------------------------------------------------------

@dataclass(frozen=True)
class HenselCertificate:
    """F(0) = 0 and F'(0) != 0 mod p for the primitive integer form F
    of f0: the simple root lifts p-adically with valuation >= 1, and
    evaluating any member's transform at that root forces its constant
    term into (p)."""

    p: int
    poly: tuple[int, ...]

    @property
    def const_residue(self) -> int:
        return self.poly[0] % self.p

    @property
    def deriv_residue(self) -> int:
        return self.poly[1] % self.p


def hensel_obstruction(I: ClosedIdeal, p: int) -> HenselCertificate | None:
    if I.ring.kind == "Zloc":
        if p != I.ring.p:
            raise UnsupportedRing(f"only ({I.ring.p}) is available over {I.ring}")
    elif I.ring.kind != "Z":
        raise UnsupportedRing(f"p-adic obstructions need Z or Zloc, got {I.ring}")
    if not is_prime_int(p):
        raise BadModulus(f"{p} is not prime")
    F = integerize(I.f0)
    if F[0] % p == 0 and F[1] % p != 0:
        return HenselCertificate(p, tuple(F))
    return None


@dataclass(frozen=True)
class MaximalityVerdict:
    """status is "maximal", "not_maximal", or "unknown"; kind names the
    certificate; the witness polynomial or Hensel data rides along."""

    status: str
    kind: str
    ideal: ClosedIdeal
    witness: HurwitzPoly | None = None
    hensel: HenselCertificate | None = None
    note: str = ""
    data: tuple = ()


def _prime_factors(n: int) -> list[int]:
    n = abs(n)
    out = []
    d = 2
    while d * d <= n:
        if n % d == 0:
            out.append(d)
            while n % d == 0:
                n //= d
        d += 1 if d == 2 else 2
    if n > 1:
        out.append(n)
    return out


def is_maximal(I: ClosedIdeal, budget: int | None = None, cap: int = DEFAULT_DEGREE_CAP) -> MaximalityVerdict:
    """Certificate ladder; see the module docstring for the soundness
    argument behind each rung."""
    m = I.min_degree
    K = 2 * m + 8 if budget is None else budget
    if not is_prime(I, cap):
        return MaximalityVerdict(
            "not_maximal", "ReducibleGenerator", I,
            note="monic transform generator factors, so the ideal is not even prime")
    if I.ring.kind == "Q":
        return MaximalityVerdict(
            "maximal", "FieldQuotient", I,
            note="field coefficients: quotient by an irreducible transform generator is a field")
    if I.f0 == _X:
        return MaximalityVerdict(
            "not_maximal", "XGenerator", I,
            note="every member has zero constant term; adjoining a non-unit constant stays proper")
    F = integerize(I.f0)
    if I.ring.kind == "Zloc":
        candidates = [I.ring.p] if F[0] % I.ring.p == 0 else []
    else:
        candidates = _prime_factors(F[0])
    for p in candidates:
        cert = hensel_obstruction(I, p)
        if cert is not None:
            return MaximalityVerdict(
                "not_maximal", "PadicObstruction", I, hensel=cert,
                note=f"every member's constant term is divisible by {p}")
    chain = []
    for k in range(m, m + K + 1):
        member = _unit_constant_member(I, k)
        if member is not None:
            if I.ring.kind == "Zloc":
                w = cor25_witness(I)
                if w is not None:
                    return MaximalityVerdict(
                        "maximal", "Cor25Witness", I, witness=w,
                        note="member with constant term 1 and all higher values in the maximal ideal of the ring")
            return MaximalityVerdict(
                "maximal", "UnitConstantLattice", I, witness=member,
                note="member with constant term 1: any strictly larger ideal meets the ring, "
                     "then modular inversion of this member reaches the unity")
        chain.append((k, str(constant_ideal(I, k))))
    return MaximalityVerdict(
        "unknown", "BudgetExhausted", I,
        note=f"constant-term ideal is not the unit ideal through degree {m + K}",
        data=tuple(chain))


def cor25_witness(I: ClosedIdeal) -> HurwitzPoly | None:
    """Member g with g(0) = 1 and all higher values divisible by p,
    over Zloc(p); None when the content-free generator has non-unit
    constant term mod p or the ideal is not prime."""
    if I.ring.kind != "Zloc":
        raise UnsupportedRing(f"this witness shape needs Zloc, got {I.ring}")
    if not is_prime(I):
        return None
    p = I.ring.p
    red = reduce_mod(I.prim, p)
    if not is_unit(red.coeff(0)):
        return None
    s = invert_mod(red)
    g = I.prim * lift(s, I.ring)
    c = g.coeff(0)
    if c != one(I.ring):
        g = constant(I.ring, invert(c)) * g
    return g


# -- claim checkers ----------------------------------------------------

@dataclass(frozen=True)
class Lemma21Result:
    """Outcome of reducing a prime closed ideal against a non-zero
    prime L of the coefficient ring: does adjoining hL pull in a unit
    constant (ViolatedWitness), provably never (HoldsCertified), is the
    leading-ideal hypothesis itself unmet (Inapplicable), or neither
    settled (Unknown)."""

    status: str
    ideal: ClosedIdeal
    modulus: int
    witness: HurwitzPoly | None = None
    hensel: HenselCertificate | None = None
    rho_note: str = ""
    note: str = ""


def _inversion_witness(P: ClosedIdeal, base: HurwitzPoly, q: int) -> HurwitzPoly | None:
    """base * lift(inverse of base mod q): a member congruent to the
    unity mod q, when the reduction has a unit constant term."""
    try:
        red = reduce_mod(base, q)
    except BadModulus:
        return None
    if not is_unit(red.coeff(0)):
        return None
    try:
        s = invert_mod(red)
    except (NotAUnit, NilpotencyBudgetExceeded):
        return None
    return base * lift(s, P.ring)


def lemma21_check(P: ClosedIdeal, q: int, budget: int | None = None) -> Lemma21Result:
    """Test the reduction of P modulo the prime L = (q).

    Inapplicable when the truncated leading-coefficient ideal sits
    inside L.  ViolatedWitness carries g in P with g congruent to the
    unity mod q, so P + hL contains every constant.  HoldsCertified
    carries the p-adic obstruction proving constant terms stay in L.
    """
    if P.ring.kind == "Z":
        if not is_prime_int(q):
            raise BadModulus(f"L must be a non-zero prime ideal; {q} is not prime")
    elif P.ring.kind == "Zloc":
        if q != P.ring.p:
            raise UnsupportedRing(f"the only non-zero prime of {P.ring} is ({P.ring.p})")
    else:
        raise UnsupportedRing(f"reduction checks need Z or Zloc, got {P.ring}")
    if not is_prime(P):
        raise ValueError("the ideal must be prime for this check")
    m = P.min_degree
    K = 2 * m + 8 if budget is None else budget
    mtr = min_tau_rho(P)
    rho = mtr.rho_truncated
    rho_note = (f"leading-coefficient ideal truncated to degrees "
                f"{mtr.window[0]}..{mtr.window[1]}: ({rho})")
    in_L = (rho.num == 0) or (rho.num % q == 0 if P.ring.kind == "Z" else not is_unit(rho))
    if in_L:
        return Lemma21Result(
            "Inapplicable", P, q, rho_note=rho_note,
            note="hypothesis unmet under truncation: the (truncated) leading ideal lies in L")
    g = _inversion_witness(P, P.prim, q)
    if g is None:
        for k in range(m, m + K + 1):
            lat = member_lattice(P, k)
            c = gcd_of_coordinate(lat, 0)
            if c != 0 and c % q != 0:
                member = hpoly(P.ring, combo_with_coordinate(lat, 0, c))
                g = _inversion_witness(P, member, q)
                if g is not None:
                    break
    if g is not None:
        return Lemma21Result(
            "ViolatedWitness", P, q, witness=g, rho_note=rho_note,
            note=f"g is a member congruent to the unity mod {q}, so adjoining hL absorbs every constant")
    cert = hensel_obstruction(P, q)
    if cert is not None:
        return Lemma21Result(
            "HoldsCertified", P, q, hensel=cert, rho_note=rho_note,
            note=f"every member's constant term is divisible by {q}")
    return Lemma21Result(
        "Unknown", P, q, rho_note=rho_note,
        note=f"no witness found through degree {m + K} and no obstruction certificate")


@dataclass(frozen=True)
class ClaimLine:
    claim: str
    status: str
    note: str
    witness: HurwitzPoly | None = None


@dataclass(frozen=True)
class ClaimReport:
    ideal: ClosedIdeal
    verdict: MaximalityVerdict
    lines: tuple[ClaimLine, ...]

    def line(self, claim: str) -> ClaimLine:
        for ln in self.lines:
            if ln.claim == claim:
                return ln
        raise KeyError(claim)


def _shape_witness(I: ClosedIdeal) -> HurwitzPoly | None:
    """Member with constant term 1 and higher values in the
    pseudo-radical, or None."""
    ps = pseudo_radical(I.ring)
    if ps.kind == "whole":
        c = I.f0.coeff(0)
        if c == 0:
            return None
        return from_ordinary(I.f0.scale(1 / c), I.ring)
    if ps.kind == "principal":
        return cor25_witness(I)
    # zero pseudo-radical: the only admissible shape is the unity
    return None


def claim_report(I: ClosedIdeal, budget: int | None = None) -> ClaimReport:
    """Evaluate the section-3 style statements on one concrete ideal,
    each line carrying re-verifiable evidence, never a bare assertion."""
    verdict = is_maximal(I, budget)
    ps = pseudo_radical(I.ring)
    lines = []

    # cor22: a maximal R-disjoint ideal should have non-zero leading
    # ideal contained in the pseudo-radical.
    if verdict.status == "maximal":
        if I.ring.kind == "Q":
            lines.append(ClaimLine(
                "cor22", "Holds",
                "leading ideal is non-zero and the pseudo-radical is the whole ring"))
        else:
            mtr = min_tau_rho(I)
            rho = mtr.rho_truncated
            if ps.kind == "zero":
                lines.append(ClaimLine(
                    "cor22", "Violated",
                    f"certified maximal, yet the truncated leading ideal ({rho}) cannot lie "
                    "in the zero pseudo-radical",
                    witness=verdict.witness))
            else:
                ok = not is_unit(rho) and rho.num != 0
                lines.append(ClaimLine(
                    "cor22", "Holds" if ok else "Violated",
                    f"truncated leading ideal ({rho}) versus pseudo-radical ({ps.generator})",
                    witness=verdict.witness))
    elif verdict.status == "unknown":
        lines.append(ClaimLine("cor22", "Unknown", "maximality undecided within budget"))
    else:
        lines.append(ClaimLine("cor22", "Inapplicable", "ideal is not certified maximal"))

    # prop24: a maximal ideal either is the degree-1 basis ideal over a
    # simple ring, or contains a member of the constant-1 shape.
    if verdict.status == "maximal":
        if I.f0 == _X:
            lines.append(ClaimLine(
                "prop24", "Holds",
                "branch (i): generated by the degree-1 basis element over a simple (field) ring"))
        else:
            w = _shape_witness(I)
            if w is not None:
                lines.append(ClaimLine(
                    "prop24", "Holds",
                    "branch (ii): member with constant term 1 and higher values in the pseudo-radical",
                    witness=w))
            elif ps.kind == "zero":
                lines.append(ClaimLine(
                    "prop24", "Violated",
                    "no branch applies: the ring is not simple, and with zero pseudo-radical the "
                    "only admissible shape is the unity, which a proper ideal never contains",
                    witness=verdict.witness))
            else:
                lines.append(ClaimLine("prop24", "Unknown", "no shape witness found"))
    elif verdict.status == "unknown":
        lines.append(ClaimLine("prop24", "Unknown", "maximality undecided within budget"))
    else:
        lines.append(ClaimLine("prop24", "Inapplicable", "ideal is not certified maximal"))

    # cor25: over a non-simple ring, a prime R-disjoint ideal should be
    # maximal exactly when a shape witness exists.
    if I.ring.kind == "Q":
        lines.append(ClaimLine("cor25", "Inapplicable", "needs a non-simple coefficient ring"))
    elif not is_prime(I):
        lines.append(ClaimLine("cor25", "Inapplicable", "ideal is not prime"))
    else:
        w = _shape_witness(I)
        if verdict.status == "maximal" and w is not None:
            lines.append(ClaimLine(
                "cor25", "Holds", "maximal with a shape witness present", witness=w))
        elif verdict.status == "maximal":
            lines.append(ClaimLine(
                "cor25", "Violated",
                "certified maximal, yet no member of the constant-1 shape can exist",
                witness=verdict.witness))
        elif verdict.status == "not_maximal" and w is None:
            lines.append(ClaimLine(
                "cor25", "Holds", "not maximal and no shape witness: both sides fail together"))
        elif verdict.status == "not_maximal":
            lines.append(ClaimLine(
                "cor25", "Violated", "shape witness present for a non-maximal ideal", witness=w))
        else:
            lines.append(ClaimLine("cor25", "Unknown", "maximality undecided within budget"))

    # cor26: existence of a maximal R-disjoint ideal should force the
    # ring simple or a proper closed ideal of the constant-1 shape.
    if ps.kind != "zero":
        probe = prop23_construct(I.ring)
        pv = is_maximal(probe)
        lines.append(ClaimLine(
            "cor26", "Holds" if pv.status == "maximal" else "Unknown",
            "non-zero pseudo-radical: the explicit candidate ideal is certified maximal"
            if pv.status == "maximal" else "explicit candidate not certified within budget",
            witness=probe.generator))
    else:
        if verdict.status == "maximal":
            lines.append(ClaimLine(
                "cor26", "Violated",
                "zero pseudo-radical and a non-simple ring predict no maximal R-disjoint ideal, "
                "yet this ideal is certified maximal",
                witness=verdict.witness))
        elif verdict.status == "unknown":
            lines.append(ClaimLine("cor26", "Unknown", "maximality undecided within budget"))
        else:
            lines.append(ClaimLine(
                "cor26", "Unknown",
                "this ideal is not maximal, so it neither confirms nor refutes existence"))

    return ClaimReport(I, verdict, tuple(lines))


def prop23_construct(ring: RingId) -> ClosedIdeal | None:
    """The canonical candidate ideal for a coefficient ring: over a
    field the degree-1 basis ideal; over a ring with principal
    pseudo-radical (c) the ideal of 1 + c*(basis 2); nothing over Z."""
    if ring.kind == "Fp":
        raise UnsupportedRing("closed-ideal machinery needs characteristic 0")
    ps = pseudo_radical(ring)
    if ps.kind == "zero":
        return None
    if ps.kind == "whole":
        return mk_closed(basis(ring, 2))
    f = basis(ring, 1) + constant(ring, ps.generator) * basis(ring, 2)
    return mk_closed(f)


# -- re-verification ---------------------------------------------------

def _moduli_for(ring: RingId, bound: int) -> list[int]:
    if ring.kind == "Z":
        return list(range(2, bound + 1))
    out = []
    m = ring.p
    while m <= bound:
        out.append(m)
        m *= ring.p
    return out or [ring.p]


def cosimplicity_spot_check(I: ClosedIdeal, w: HurwitzPoly, bound: int = 50) -> bool:
    """Directly verify that the unity lands in I + h(mR) for each
    modulus m: reduce the witness mod m and multiply by its inverse."""
    for m in _moduli_for(I.ring, bound):
        try:
            red = reduce_mod(w, m)
            s = invert_mod(red)
        except (BadModulus, NotAUnit, NilpotencyBudgetExceeded):
            return False
        if red * s != basis(Zmod(m), 1):
            return False
    return True


def _verify_maximality(v: MaximalityVerdict) -> bool:
    I = v.ideal
    if v.status == "maximal":
        if v.kind == "FieldQuotient":
            return I.ring.kind == "Q" and is_prime(I)
        if v.kind == "UnitConstantLattice":
            w = v.witness
            return (w is not None and w.ring == I.ring and w.coeff(0) == one(I.ring)
                    and contains(I, w) and cosimplicity_spot_check(I, w))
        if v.kind == "Cor25Witness":
            w = v.witness
            if w is None or I.ring.kind != "Zloc":
                return False
            p = I.ring.p
            shape = all(c.num % p == 0 for c in w.coeffs[1:])
            return (w.coeff(0) == one(I.ring) and shape and contains(I, w)
                    and cosimplicity_spot_check(I, w))
        return False
    if v.status == "not_maximal":
        if v.kind == "ReducibleGenerator":
            return not is_irreducible_ordinary(I.f0)
        if v.kind == "XGenerator":
            return I.f0 == _X and not I.ring.is_field
        if v.kind == "PadicObstruction":
            c = v.hensel
            return (c is not None and is_prime_int(c.p)
                    and list(c.poly) == integerize(I.f0)
                    and c.poly[0] % c.p == 0 and c.poly[1] % c.p != 0)
        return False
    return False


def _verify_lemma21(r: Lemma21Result) -> bool:
    P = r.ideal
    q = r.modulus
    if r.status == "ViolatedWitness":
        w = r.witness
        if w is None or not contains(P, w):
            return False
        return reduce_mod(w, q) == basis(Zmod(q), 1)
    if r.status == "HoldsCertified":
        c = r.hensel
        return (c is not None and c.p == q and list(c.poly) == integerize(P.f0)
                and c.poly[0] % q == 0 and c.poly[1] % q != 0)
    if r.status == "Inapplicable":
        rho = min_tau_rho(P).rho_truncated
        if rho.num == 0:
            return True
        return rho.num % q == 0 if P.ring.kind == "Z" else not is_unit(rho)
    return False


def verify_certificate(v) -> bool:
    """Re-check a verdict's evidence by direct arithmetic; True only
    when every check passes.  Unknown outcomes carry no certificate and
    verify as False."""
    if isinstance(v, MaximalityVerdict):
        return _verify_maximality(v)
    if isinstance(v, Lemma21Result):
        return _verify_lemma21(v)
    return False
