"""Exact coefficient arithmetic for the supported base rings.

A ring is identified by a small immutable tag (RingId) and values are
carried by RingElem, an exact fraction tied to its ring.  Supported:

    Z         integers
    Q        rationals
    Fp(p)    prime field of p elements, p prime, p < 2**31
    Zloc(p)  rationals whose denominator is coprime to p
    Zmod(m)  residues modulo m >= 2 (reduction target only)

Zmod is the target of modular reduction and inversion; it is never a
coefficient ring for the transform or the ideal machinery.

Element syntax accepted by parse_scalar: an optional-sign decimal
integer, or `a/b` with b a positive decimal integer.
"""

from __future__ import annotations

import math
import re
from dataclasses import dataclass
from fractions import Fraction

from .errors import (
    NotAUnit,
    PolySyntaxError,
    RingMismatch,
    UnsupportedRing,
)

_PRIME_BOUND = 1 << 31


def is_prime_int(n: int) -> bool:
    """Trial division; callers keep n < 2**31 so this is always fast."""
    if n < 2:
        return False
    if n % 2 == 0:
        return n == 2
    d = 3
    while d * d <= n:
        if n % d == 0:
            return False
        d += 2
    return True


@dataclass(frozen=True)
class RingId:
    """Tag naming one of the supported coefficient rings.

    kind is one of "Z", "Q", "Fp", "Zloc", "Zmod"; p carries the prime
    (Fp, Zloc) or the modulus (Zmod) and is None otherwise.
    """

    kind: str
    p: int | None = None

    def __post_init__(self):
        if self.kind in ("Z", "Q"):
            if self.p is not None:
                raise UnsupportedRing(f"{self.kind} takes no parameter")
        elif self.kind in ("Fp", "Zloc"):
            p = self.p
            if not isinstance(p, int) or p < 2 or p >= _PRIME_BOUND or not is_prime_int(p):
                raise UnsupportedRing(f"{self.kind} needs a prime p with 2 <= p < 2**31, got {p!r}")
        elif self.kind == "Zmod":
            if not isinstance(self.p, int) or self.p < 2:
                raise UnsupportedRing(f"Zmod needs a modulus >= 2, got {self.p!r}")
        else:
            raise UnsupportedRing(f"unknown ring kind {self.kind!r}")

    @property
    def is_field(self) -> bool:
        return self.kind in ("Q", "Fp")

    @property
    def char(self) -> int:
        """Characteristic: 0 for Z, Q, Zloc; p for Fp; m for Zmod."""
        return self.p if self.kind in ("Fp", "Zmod") else 0

    def __str__(self):
        if self.p is None:
            return self.kind
        return f"{self.kind}({self.p})"


Z = RingId("Z")
Q = RingId("Q")


def Fp(p: int) -> RingId:
    return RingId("Fp", p)


def Zloc(p: int) -> RingId:
    return RingId("Zloc", p)


def Zmod(m: int) -> RingId:
    return RingId("Zmod", m)


@dataclass(frozen=True)
class RingElem:
    """One exact value of a ring: num/den in lowest terms, den > 0.

    Z and Zmod and Fp always store den = 1; Fp and Zmod store the
    canonical residue in [0, p).  Construction canonicalizes, so equality
    and hashing are structural.
    """

    ring: RingId
    num: int
    den: int = 1

    def __post_init__(self):
        num, den = self.num, self.den
        if den == 0:
            raise ZeroDivisionError("zero denominator")
        kind = self.ring.kind
        if kind in ("Fp", "Zmod"):
            m = self.ring.p
            if den != 1:
                g = math.gcd(den, m)
                if g != 1:
                    raise ValueError(f"denominator {den} not invertible mod {m}")
                num = num * pow(den, -1, m)
                den = 1
            num %= m
        else:
            if den < 0:
                num, den = -num, -den
            g = math.gcd(num, den)
            if g > 1:
                num //= g
                den //= g
            if kind == "Z" and den != 1:
                raise ValueError(f"{num}/{den} is not an integer")
            if kind == "Zloc" and den % self.ring.p == 0:
                raise ValueError(f"denominator of {num}/{den} is divisible by {self.ring.p}")
        object.__setattr__(self, "num", num)
        object.__setattr__(self, "den", den)

    def _match(self, other: "RingElem") -> None:
        if not isinstance(other, RingElem) or other.ring != self.ring:
            raise RingMismatch(f"operands over {self.ring} and {getattr(other, 'ring', type(other))}")

    def __add__(self, other):
        self._match(other)
        return RingElem(self.ring, self.num * other.den + other.num * self.den, self.den * other.den)

    def __sub__(self, other):
        self._match(other)
        return RingElem(self.ring, self.num * other.den - other.num * self.den, self.den * other.den)

    def __mul__(self, other):
        self._match(other)
        return RingElem(self.ring, self.num * other.num, self.den * other.den)

    def __neg__(self):
        return RingElem(self.ring, -self.num, self.den)

    def __bool__(self):
        return self.num != 0

    def __str__(self):
        if self.den == 1:
            return str(self.num)
        return f"{self.num}/{self.den}"


def zero(ring: RingId) -> RingElem:
    return RingElem(ring, 0)


def one(ring: RingId) -> RingElem:
    return RingElem(ring, 1)


def elem(ring: RingId, value, den: int = 1) -> RingElem:
    """Coerce an int, Fraction, or RingElem into ring."""
    if isinstance(value, RingElem):
        if value.ring != ring:
            raise RingMismatch(f"element of {value.ring} used over {ring}")
        return value
    if isinstance(value, Fraction):
        return RingElem(ring, value.numerator, value.denominator * den)
    return RingElem(ring, value, den)


def ring_arith(op: str, a: RingElem, b: RingElem | None = None):
    """Dispatch {add|sub|mul|neg|eq} over a shared ring."""
    if op == "add":
        return a + b
    if op == "sub":
        return a - b
    if op == "mul":
        return a * b
    if op == "neg":
        return -a
    if op == "eq":
        a._match(b)
        return a == b
    raise ValueError(f"unknown op {op!r}")


def is_unit(a: RingElem) -> bool:
    kind = a.ring.kind
    if kind == "Z":
        return a.num in (1, -1)
    if kind in ("Q", "Fp"):
        return a.num != 0
    if kind == "Zloc":
        return a.num != 0 and a.num % a.ring.p != 0
    # Zmod
    return math.gcd(a.num, a.ring.p) == 1


def invert(a: RingElem) -> RingElem:
    if not is_unit(a):
        raise NotAUnit(f"{a} is not a unit of {a.ring}")
    if a.ring.kind in ("Fp", "Zmod"):
        return RingElem(a.ring, pow(a.num, -1, a.ring.p))
    return RingElem(a.ring, a.den if a.num > 0 else -a.den, abs(a.num))


def vp(q, p: int) -> int:
    """p-adic valuation of a non-zero int or Fraction."""
    num = q.numerator if isinstance(q, Fraction) else q
    den = q.denominator if isinstance(q, Fraction) else 1
    if num == 0:
        raise ValueError("valuation of zero")
    v = 0
    while num % p == 0:
        num //= p
        v += 1
    if v:
        return v
    while den % p == 0:
        den //= p
        v -= 1
    return v


def gcd_elem(a: RingElem, b: RingElem) -> RingElem:
    """gcd in Z (non-negative) or in Zloc(p) (the representative p^min v_p)."""
    if a.ring != b.ring:
        raise RingMismatch(f"operands over {a.ring} and {b.ring}")
    kind = a.ring.kind
    if kind == "Z":
        return RingElem(a.ring, math.gcd(a.num, b.num))
    if kind == "Zloc":
        p = a.ring.p
        vals = [vp(Fraction(x.num, x.den), p) for x in (a, b) if x.num != 0]
        if not vals:
            return zero(a.ring)
        return RingElem(a.ring, p ** min(vals))
    raise UnsupportedRing(f"gcd is not defined over {a.ring}")


@dataclass(frozen=True)
class PseudoRadical:
    """Intersection of the non-zero prime ideals, as ring metadata.

    kind is "zero" (trivial intersection), "whole" (no non-zero primes;
    empty-intersection convention), or "principal" with its generator.
    """

    kind: str
    generator: RingElem | None = None


def pseudo_radical(ring: RingId) -> PseudoRadical:
    kind = ring.kind
    if kind == "Z":
        return PseudoRadical("zero")
    if kind in ("Q", "Fp"):
        return PseudoRadical("whole")
    if kind == "Zloc":
        return PseudoRadical("principal", RingElem(ring, ring.p))
    raise UnsupportedRing(f"no pseudo-radical metadata for {ring}")


def frac_field(ring: RingId) -> RingId:
    if ring.kind in ("Z", "Zloc"):
        return Q
    if ring.is_field:
        return ring
    raise UnsupportedRing(f"{ring} has no fraction field here")


def as_fraction(a: RingElem) -> Fraction:
    if a.ring.kind in ("Fp", "Zmod"):
        raise UnsupportedRing(f"no canonical rational image for {a.ring}")
    return Fraction(a.num, a.den)


def fraction_in_ring(ring: RingId, q: Fraction) -> bool:
    """Whether the rational q lies in the (characteristic-0) ring."""
    if ring.kind == "Q":
        return True
    if ring.kind == "Z":
        return q.denominator == 1
    if ring.kind == "Zloc":
        return q.denominator % ring.p != 0
    raise UnsupportedRing(f"{ring} is not a subring of the rationals")


_RING_RE = re.compile(r"^(Z|Q|Fp|Zloc|Zmod)(?:\((\d+)\))?$")
_SCALAR_RE = re.compile(r"^([+-]?\d+)(?:/(\d+))?$")


def parse_ring(text: str) -> RingId:
    m = _RING_RE.match(text.strip())
    if not m:
        raise PolySyntaxError(f"unknown ring {text!r}")
    kind, param = m.group(1), m.group(2)
    if kind in ("Z", "Q"):
        if param is not None:
            raise PolySyntaxError(f"{kind} takes no parameter")
        return Z if kind == "Z" else Q
    if param is None:
        raise PolySyntaxError(f"{kind} needs a parameter, e.g. {kind}(5)")
    try:
        return RingId(kind, int(param))
    except UnsupportedRing as exc:
        raise PolySyntaxError(str(exc)) from None


def parse_scalar(ring: RingId, token: str, position: int | None = None) -> RingElem:
    m = _SCALAR_RE.match(token.strip())
    if not m:
        raise PolySyntaxError(f"bad coefficient {token!r}", position)
    num = int(m.group(1))
    den = int(m.group(2)) if m.group(2) else 1
    try:
        return RingElem(ring, num, den)
    except (ValueError, ZeroDivisionError) as exc:
        raise PolySyntaxError(f"coefficient {token.strip()!r} not in {ring}: {exc}", position) from None
