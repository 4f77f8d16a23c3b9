"""Content, primitive parts, and exact irreducibility testing.

Irreducibility over Q is decided deterministically: clear denominators
to a primitive integer polynomial, run the rational-root test, and for
degree >= 4 search for factors of each degree d <= deg/2 by divisor
interpolation (Kronecker's method) over d+1 consecutive integer sample
points.  The d-th finite difference of a degree-d factor equals d! times
its leading coefficient, which must divide the leading coefficient of
the input; that pins the last sample value and prunes the enumeration.

Two predicates live side by side on the Hurwitz side.  A polynomial of
degree >= 1 is completely irreducible when the transform of its
primitive part is irreducible over Q; content is ignored, since
constants become units after extending coefficients to the fraction
field.  Plain irreducibility in the integral Hurwitz ring does weigh the
content: there a non-unit constant factor is a genuine factorization.
The two predicates agree on primitive inputs and the checker reports
each disagreement with an explicit factorization witness.
"""

from __future__ import annotations

import itertools
import math
from dataclasses import dataclass
from fractions import Fraction

from .errors import (
    ConstantPolynomial,
    DegreeTooLarge,
    NotInGamma,
    NotInTargetRing,
    UnitInput,
    UnsupportedRing,
    ZeroPolynomial,
)
from .hurwitz import HurwitzPoly, binomial, constant, hpoly
from .rings import RingElem, as_fraction, elem, is_prime_int, is_unit
from .transform import (
    OrdinaryPoly,
    divides,
    divrem,
    from_ordinary,
    opoly,
    to_ordinary,
)

DEFAULT_DEGREE_CAP = 8


def content_primitive(f: HurwitzPoly) -> tuple[RingElem, HurwitzPoly]:
    """Split f = constant(d) * g with g primitive; integral or p-local."""
    if f.ring.kind not in ("Z", "Zloc"):
        raise UnsupportedRing(f"content is not defined over {f.ring}")
    if not f:
        raise ZeroPolynomial("zero polynomial has no content")
    if f.ring.kind == "Z":
        d = 0
        for c in f.coeffs:
            d = math.gcd(d, c.num)
    else:
        p = f.ring.p
        v = None
        for c in f.coeffs:
            if c.num == 0:
                continue
            w = 0
            n = c.num
            while n % p == 0:
                n //= p
                w += 1
            v = w if v is None else min(v, w)
        d = p ** v
    content = elem(f.ring, d)
    dq = Fraction(d)
    prim = hpoly(f.ring, [as_fraction(c) / dq for c in f.coeffs])
    return content, prim


# -- integer-side helpers ----------------------------------------------

def integerize(q: OrdinaryPoly) -> list[int]:
    """Primitive integer form with positive leading coefficient."""
    lcm = 1
    for c in q.coeffs:
        lcm = lcm * c.denominator // math.gcd(lcm, c.denominator)
    ints = [int(c * lcm) for c in q.coeffs]
    g = 0
    for v in ints:
        g = math.gcd(g, v)
    if g > 1:
        ints = [v // g for v in ints]
    if ints and ints[-1] < 0:
        ints = [-v for v in ints]
    return ints


def _eval_int(coeffs: list[int], x: int) -> int:
    acc = 0
    for c in reversed(coeffs):
        acc = acc * x + c
    return acc


def _signed_divisors(n: int) -> list[int]:
    """Divisors of |n|, smallest first, each followed by its negative."""
    n = abs(n)
    small, large = [], []
    i = 1
    while i * i <= n:
        if n % i == 0:
            small.append(i)
            if i != n // i:
                large.append(n // i)
        i += 1
    out = []
    for v in small + large[::-1]:
        out.append(v)
        out.append(-v)
    return out


def _rational_roots(ints: list[int]):
    """Rational roots of a primitive integer polynomial, if any."""
    d = len(ints) - 1
    if ints[0] == 0:
        yield Fraction(0)
        return
    seen = set()
    for p in _signed_divisors(ints[0]):
        for s in _signed_divisors(ints[d]):
            if s < 0:
                continue
            r = Fraction(p, s)
            if r in seen:
                continue
            seen.add(r)
            acc = Fraction(0)
            for c in reversed(ints):
                acc = acc * r + c
            if acc == 0:
                yield r


def _interpolate(points: list[int], values: list[int]) -> OrdinaryPoly:
    """Lagrange interpolation through integer data, exact over Q."""
    acc = opoly([])
    for i, (xi, vi) in enumerate(zip(points, values)):
        if vi == 0:
            continue
        term = opoly([vi])
        for j, xj in enumerate(points):
            if j == i:
                continue
            term = term * opoly([Fraction(-xj, xi - xj), Fraction(1, xi - xj)])
        acc = acc + term
    return acc


def _kronecker_factor(ints: list[int], d: int) -> OrdinaryPoly | None:
    """Search for a degree-d integer factor of a primitive integer
    polynomial with no rational roots; returns a monic factor or None."""
    deg = len(ints) - 1
    base = -(d // 2)
    points = list(range(base, base + d + 1))
    values = [_eval_int(ints, x) for x in points]
    lead_divs = _signed_divisors(ints[-1])
    choice_lists = [_signed_divisors(v) for v in values[:d]]
    signs = [(-1) ** (d - i) * binomial(d, i) for i in range(d)]
    for picks in itertools.product(*choice_lists):
        partial = sum(s * v for s, v in zip(signs, picks))
        for lead in lead_divs:
            last = math.factorial(d) * lead - partial
            if last == 0 or values[d] % last != 0:
                continue
            cand = _interpolate(points, list(picks) + [last])
            if cand.degree != d:
                continue
            if any(c.denominator != 1 for c in cand.coeffs):
                continue
            if divides(cand, opoly(ints)):
                return cand.monic()
    return None


def is_irreducible_ordinary(q: OrdinaryPoly, cap: int = DEFAULT_DEGREE_CAP) -> bool:
    """Exact irreducibility over Q; degree must be in [1, cap]."""
    d = q.degree
    if d is None or d == 0:
        raise ConstantPolynomial("irreducibility needs degree >= 1")
    if d > cap:
        raise DegreeTooLarge(f"degree {d} exceeds the cap {cap}")
    if d == 1:
        return True
    ints = integerize(q)
    for _ in _rational_roots(ints):
        return False
    if d <= 3:
        return True
    for k in range(2, d // 2 + 1):
        if _kronecker_factor(ints, k) is not None:
            return False
    return True


@dataclass(frozen=True)
class FactorizationResult:
    """unit * product of factor^multiplicity reconstructs the input."""

    unit: Fraction
    factors: tuple[tuple[OrdinaryPoly, int], ...]


def _find_monic_irreducible_factor(q: OrdinaryPoly, cap: int) -> OrdinaryPoly:
    """Smallest-degree monic irreducible factor of a monic q, deg >= 1."""
    if q.degree == 1:
        return q
    ints = integerize(q)
    for r in _rational_roots(ints):
        return opoly([-r, 1])
    for d in range(2, q.degree // 2 + 1):
        found = _kronecker_factor(ints, d)
        if found is not None:
            return found
    return q


def factor_ordinary(q: OrdinaryPoly, cap: int = DEFAULT_DEGREE_CAP) -> FactorizationResult:
    """Complete factorization into monic irreducibles over Q."""
    d = q.degree
    if d is None or d == 0:
        raise ConstantPolynomial("factorization needs degree >= 1")
    if d > cap:
        raise DegreeTooLarge(f"degree {d} exceeds the cap {cap}")
    unit = q.lead
    rest = q.monic()
    found = []
    while rest.degree >= 1:
        p = _find_monic_irreducible_factor(rest, cap)
        e = 0
        while divides(p, rest):
            rest = divrem(rest, p)[0]
            e += 1
        found.append((p, e))
    found.sort(key=lambda fe: (fe[0].degree, fe[0].coeffs))
    return FactorizationResult(unit, tuple(found))


# -- Hurwitz-side predicates -------------------------------------------

def in_gamma(f: HurwitzPoly) -> bool:
    """Degree at least 1; the commutation condition is automatic here."""
    return f.degree is not None and f.degree >= 1


def is_completely_irreducible(f: HurwitzPoly, cap: int = DEFAULT_DEGREE_CAP) -> bool:
    """Transform of the primitive part irreducible over Q.

    Content is discarded: constants are units once coefficients extend
    to the fraction field, so only the shape of the primitive part
    decides.
    """
    if not in_gamma(f):
        raise NotInGamma("need degree >= 1")
    if f.ring.kind in ("Z", "Zloc"):
        _, prim = content_primitive(f)
    else:
        prim = f
    return is_irreducible_ordinary(to_ordinary(prim), cap)


def is_irreducible_hR(f: HurwitzPoly, cap: int = DEFAULT_DEGREE_CAP) -> bool:
    """No factorization into two non-units over the integral Hurwitz ring.

    Decided as: content a unit and transform of the primitive part
    irreducible, or degree 0 with prime content.
    """
    if f.ring.kind != "Z":
        raise UnsupportedRing(f"integral irreducibility is defined over Z, not {f.ring}")
    if not f:
        raise ZeroPolynomial("zero polynomial")
    content, prim = content_primitive(f)
    if f.degree == 0:
        if is_unit(content):
            raise UnitInput(f"{f} is a unit")
        return is_prime_int(content.num)
    if not is_unit(content):
        return False
    return is_irreducible_ordinary(to_ordinary(prim), cap)


@dataclass(frozen=True)
class Remark16Result:
    agrees: bool
    completely_irreducible: bool
    irreducible: bool
    witness: tuple[HurwitzPoly, HurwitzPoly] | None


def remark16_check(f: HurwitzPoly, cap: int = DEFAULT_DEGREE_CAP) -> Remark16Result:
    """Compare the two irreducibility predicates on one input.

    Disagreement happens exactly for completely irreducible inputs with
    non-unit content; the witness is that content split, a genuine
    two-non-unit factorization.
    """
    if not in_gamma(f):
        raise NotInGamma("need degree >= 1")
    ci = is_completely_irreducible(f, cap)
    ir = is_irreducible_hR(f, cap)
    if ci == ir:
        return Remark16Result(True, ci, ir, None)
    content, prim = content_primitive(f)
    return Remark16Result(False, ci, ir, (constant(f.ring, content), prim))


@dataclass(frozen=True)
class FactorWitness:
    """A triple with f * constant(b) = h * g, degree of g strictly less
    than the degree of f, exhibiting a degree-dropping factorization."""

    b: int
    h: HurwitzPoly
    g: HurwitzPoly


def _small_first(height: int):
    out = [0]
    for v in range(1, height + 1):
        out.append(v)
        out.append(-v)
    return out


def factor_witness_search(f: HurwitzPoly, height: int, degcap: int | None = None) -> FactorWitness | None:
    """Bounded search for b, g, h with f * constant(b) = h * g and
    degree(g) < degree(f), g of degree >= 1, coefficients up to height.

    Only b >= 1 is scanned: negating b negates h, so the sign adds
    nothing.  The cofactor h is determined by exact division and is not
    itself bounded.
    """
    if f.ring.kind != "Z" or not in_gamma(f):
        return None
    df = f.degree
    dg_max = df - 1 if degcap is None else min(df - 1, degcap)
    coeff_order = _small_first(height)
    for b in range(1, height + 1):
        target = to_ordinary(f * constant(f.ring, b))
        for dg in range(1, dg_max + 1):
            for coeffs in itertools.product(coeff_order, repeat=dg + 1):
                if coeffs[-1] == 0:
                    continue
                g = hpoly(f.ring, coeffs)
                tg = to_ordinary(g)
                quo, rem = divrem(target, tg)
                if rem:
                    continue
                try:
                    h = from_ordinary(quo, f.ring)
                except NotInTargetRing:
                    continue
                return FactorWitness(b, h, g)
    return None
