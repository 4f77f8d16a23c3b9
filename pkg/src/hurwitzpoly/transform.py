"""Divided-factorial correspondence with ordinary polynomials over Q.

Sending f to sum_n f(n)/n! x^n is a ring isomorphism from Hurwitz
polynomials over a characteristic-0 coefficient ring onto a subring of
Q[x]: binomial convolution becomes the Cauchy product.  The inverse
multiplies coefficient n by n! and must land back in the source ring,
which is checked index by index.

OrdinaryPoly is the transform-side value: a dense polynomial over the
rationals with exact Fraction coefficients and Euclidean arithmetic.
All transform-side work happens over Q even when the Hurwitz side is
integral or p-local; membership in the smaller ring is re-checked on
the way back.
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction

from .errors import CharPUnsupported, DivisionByZero, NotInTargetRing, PolySyntaxError
from .hurwitz import HurwitzPoly
from .rings import RingId, as_fraction, elem, fraction_in_ring

_CHAR0 = ("Z", "Q", "Zloc")


def _to_fraction(v) -> Fraction:
    if isinstance(v, Fraction):
        return v
    if isinstance(v, int):
        return Fraction(v)
    raise TypeError(f"expected int or Fraction, got {type(v).__name__}")


@dataclass(frozen=True)
class OrdinaryPoly:
    """Polynomial over Q, coefficient n on x^n, no trailing zeros."""

    coeffs: tuple[Fraction, ...]

    def __post_init__(self):
        cs = tuple(_to_fraction(c) for c in self.coeffs)
        d = len(cs)
        while d and cs[d - 1] == 0:
            d -= 1
        object.__setattr__(self, "coeffs", cs[:d])

    def __bool__(self):
        return bool(self.coeffs)

    @property
    def degree(self):
        return len(self.coeffs) - 1 if self.coeffs else None

    @property
    def lead(self) -> Fraction:
        if not self.coeffs:
            raise DivisionByZero("zero polynomial has no leading coefficient")
        return self.coeffs[-1]

    def coeff(self, n: int) -> Fraction:
        return self.coeffs[n] if 0 <= n < len(self.coeffs) else Fraction(0)

    def __add__(self, other):
        a, b = self.coeffs, other.coeffs
        if len(a) < len(b):
            a, b = b, a
        return OrdinaryPoly(tuple(a[n] + b[n] for n in range(len(b))) + a[len(b):])

    def __neg__(self):
        return OrdinaryPoly(tuple(-c for c in self.coeffs))

    def __sub__(self, other):
        return self + (-other)

    def __mul__(self, other):
        a, b = self.coeffs, other.coeffs
        if not a or not b:
            return OrdinaryPoly(())
        out = [Fraction(0)] * (len(a) + len(b) - 1)
        for i, ai in enumerate(a):
            if ai:
                for j, bj in enumerate(b):
                    out[i + j] += ai * bj
        return OrdinaryPoly(tuple(out))

    def __pow__(self, e: int):
        acc = OrdinaryPoly((Fraction(1),))
        for _ in range(e):
            acc = acc * self
        return acc

    def scale(self, c) -> "OrdinaryPoly":
        c = _to_fraction(c)
        return OrdinaryPoly(tuple(c * x for x in self.coeffs))

    def monic(self) -> "OrdinaryPoly":
        if not self.coeffs:
            return self
        return self.scale(1 / self.lead)

    def __str__(self):
        return human_str(self)


def opoly(values) -> OrdinaryPoly:
    """Build from a list of ints/Fractions, ascending powers."""
    return OrdinaryPoly(tuple(_to_fraction(v) for v in values))


X = opoly([0, 1])
ONE = opoly([1])


def evaluate(q: OrdinaryPoly, x) -> Fraction:
    """Horner evaluation at a rational point."""
    x = _to_fraction(x)
    acc = Fraction(0)
    for c in reversed(q.coeffs):
        acc = acc * x + c
    return acc


def divrem(a: OrdinaryPoly, b: OrdinaryPoly) -> tuple[OrdinaryPoly, OrdinaryPoly]:
    """Euclidean division: a = q*b + r with deg r < deg b."""
    if not b:
        raise DivisionByZero("division by the zero polynomial")
    rem = list(a.coeffs)
    db = b.degree
    inv_lead = 1 / b.lead
    quo = [Fraction(0)] * max(len(rem) - db, 0)
    for i in range(len(rem) - 1, db - 1, -1):
        c = rem[i] * inv_lead
        if c:
            quo[i - db] = c
            for j, bj in enumerate(b.coeffs):
                rem[i - db + j] -= c * bj
    return OrdinaryPoly(tuple(quo)), OrdinaryPoly(tuple(rem[:db]))


def divides(b: OrdinaryPoly, a: OrdinaryPoly) -> bool:
    """Whether b divides a exactly in Q[x]."""
    if not a:
        return True
    if not b:
        return False
    return not divrem(a, b)[1]


def gcd_poly(a: OrdinaryPoly, b: OrdinaryPoly) -> OrdinaryPoly:
    """Monic gcd by the Euclidean algorithm; gcd(0, 0) = 0."""
    while b:
        a, b = b, divrem(a, b)[1]
    return a.monic() if a else a


def derivative(q: OrdinaryPoly) -> OrdinaryPoly:
    return OrdinaryPoly(tuple(n * c for n, c in enumerate(q.coeffs) if n >= 1))


# -- the correspondence ------------------------------------------------

def to_ordinary(f: HurwitzPoly) -> OrdinaryPoly:
    """Divide coefficient n by n!; needs characteristic 0."""
    if f.ring.kind not in _CHAR0:
        raise CharPUnsupported(f"no divided-factorial transform over {f.ring}")
    out = []
    fact = 1
    for n, c in enumerate(f.coeffs):
        if n:
            fact *= n
        out.append(as_fraction(c) / fact)
    return OrdinaryPoly(tuple(out))


def from_ordinary(q: OrdinaryPoly, target: RingId) -> HurwitzPoly:
    """Multiply coefficient n by n!; fails if that leaves the target ring."""
    if target.kind not in _CHAR0:
        raise CharPUnsupported(f"no divided-factorial transform over {target}")
    out = []
    fact = 1
    for n, a in enumerate(q.coeffs):
        if n:
            fact *= n
        v = a * fact
        if not fraction_in_ring(target, v):
            raise NotInTargetRing(n, f"coefficient {v} at index {n} is not in {target}")
        out.append(elem(target, v))
    return HurwitzPoly(target, tuple(out))


# -- text format -------------------------------------------------------

def format_ordinary(q: OrdinaryPoly) -> str:
    return f"ORD:[{','.join(str(c) for c in q.coeffs)}]"


def human_str(q: OrdinaryPoly) -> str:
    """Ascending readable form: `a0 + a1*x + a2*x^2`, zero terms skipped."""
    terms = []
    for n, c in enumerate(q.coeffs):
        if not c:
            continue
        if n == 0:
            terms.append(str(c))
        elif n == 1:
            terms.append(f"{c}*x")
        else:
            terms.append(f"{c}*x^{n}")
    return " + ".join(terms) if terms else "0"


def parse_ordinary(text: str) -> OrdinaryPoly:
    """Parse the list syntax `ORD:[a0,a1,...]` with fraction entries."""
    body = text.strip()
    if not body.startswith("ORD:"):
        raise PolySyntaxError("expected ORD:[coefficients]", 0)
    body = body[4:].strip()
    if not (body.startswith("[") and body.endswith("]")):
        raise PolySyntaxError("coefficients must be bracketed, e.g. [1,1/2]", 4)
    inner = body[1:-1].strip()
    if not inner:
        return OrdinaryPoly(())
    out = []
    pos = text.find("[") + 1
    for token in inner.split(","):
        t = token.strip()
        try:
            out.append(Fraction(t))
        except (ValueError, ZeroDivisionError):
            raise PolySyntaxError(f"bad coefficient {t!r}", pos) from None
        pos += len(token) + 1
    return OrdinaryPoly(tuple(out))
