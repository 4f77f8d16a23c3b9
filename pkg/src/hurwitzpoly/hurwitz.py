"""Hurwitz polynomials: finite coefficient sequences with the product

    (f * g)(n) = sum_{k=0}^{n} C(n,k) f(k) g(n-k).

A polynomial stores its coefficients densely, index n holding f(n), with
trailing zeros stripped so equality is structural.  basis(ring, n) is the
element supported at index n-1 with value 1 (n >= 1); basis(ring, 1) is
the unity.  constant(ring, r) embeds r at index 0.

Reduction into residues mod m lands in the Zmod(m) coefficient ring,
where every element with zero constant term is nilpotent; invert_mod
exploits that through a finite geometric series.
"""

from __future__ import annotations

import math
from dataclasses import dataclass

from .errors import (
    BadModulus,
    IndexOutOfRange,
    InvalidIndex,
    NilpotencyBudgetExceeded,
    NotAUnit,
    PolySyntaxError,
    RingMismatch,
)
from .rings import (
    RingElem,
    RingId,
    Zmod,
    elem,
    invert,
    is_unit,
    parse_ring,
    parse_scalar,
    zero,
)

# Pascal rows are cached by row index in a dict, so concurrent fills are
# idempotent.  Rows beyond the cap are not worth keeping.
_pascal: dict[int, tuple[int, ...]] = {0: (1,)}
_PASCAL_CAP = 600


def binomial(n: int, k: int) -> int:
    """Exact C(n, k) via the Pascal recurrence, rows cached."""
    if n < 0 or k < 0 or k > n:
        raise IndexOutOfRange(f"need 0 <= k <= n, got n={n}, k={k}")
    if n > _PASCAL_CAP:
        return math.comb(n, k)
    if n not in _pascal:
        start = n
        while start not in _pascal:
            start -= 1
        for i in range(start + 1, n + 1):
            prev = _pascal[i - 1]
            _pascal[i] = (1, *(prev[j] + prev[j + 1] for j in range(i - 1)), 1)
    return _pascal[n][k]


def _scale_int(a: RingElem, c: int) -> RingElem:
    return RingElem(a.ring, a.num * c, a.den)


@dataclass(frozen=True)
class HurwitzPoly:
    ring: RingId
    coeffs: tuple[RingElem, ...]

    def __post_init__(self):
        cs = self.coeffs
        for c in cs:
            if not isinstance(c, RingElem) or c.ring != self.ring:
                raise RingMismatch(f"coefficient {c!r} does not belong to {self.ring}")
        d = len(cs)
        while d and cs[d - 1].num == 0:
            d -= 1
        if d != len(cs):
            object.__setattr__(self, "coeffs", cs[:d])

    # -- views ---------------------------------------------------------

    def __bool__(self):
        return bool(self.coeffs)

    @property
    def degree(self):
        """Greatest support index, None for the zero polynomial."""
        return len(self.coeffs) - 1 if self.coeffs else None

    @property
    def order(self):
        """Least support index, None for the zero polynomial."""
        for n, c in enumerate(self.coeffs):
            if c.num != 0:
                return n
        return None

    @property
    def support(self) -> tuple[int, ...]:
        return tuple(n for n, c in enumerate(self.coeffs) if c.num != 0)

    @property
    def lead(self) -> RingElem:
        if not self.coeffs:
            raise InvalidIndex("zero polynomial has no leading coefficient")
        return self.coeffs[-1]

    def coeff(self, n: int) -> RingElem:
        if n < 0:
            raise InvalidIndex(f"negative index {n}")
        return self.coeffs[n] if n < len(self.coeffs) else zero(self.ring)

    # -- arithmetic ----------------------------------------------------

    def _match(self, other: "HurwitzPoly") -> None:
        if not isinstance(other, HurwitzPoly):
            raise RingMismatch(f"cannot combine with {type(other).__name__}")
        if other.ring != self.ring:
            raise RingMismatch(f"operands over {self.ring} and {other.ring}")

    def __add__(self, other):
        self._match(other)
        a, b = self.coeffs, other.coeffs
        if len(a) < len(b):
            a, b = b, a
        out = [a[n] + b[n] for n in range(len(b))] + list(a[len(b):])
        return HurwitzPoly(self.ring, tuple(out))

    def __neg__(self):
        return HurwitzPoly(self.ring, tuple(-c for c in self.coeffs))

    def __sub__(self, other):
        return self + (-other)

    def __mul__(self, other):
        self._match(other)
        a, b = self.coeffs, other.coeffs
        if not a or not b:
            return HurwitzPoly(self.ring, ())
        da, db = len(a) - 1, len(b) - 1
        out = []
        for n in range(da + db + 1):
            s = zero(self.ring)
            for k in range(max(0, n - db), min(n, da) + 1):
                s = s + _scale_int(a[k] * b[n - k], binomial(n, k))
            out.append(s)
        return HurwitzPoly(self.ring, tuple(out))

    def __pow__(self, e: int):
        if not isinstance(e, int) or e < 0:
            raise ValueError(f"exponent must be a non-negative integer, got {e!r}")
        acc = basis(self.ring, 1)
        for _ in range(e):
            acc = acc * self
        return acc

    def __str__(self):
        return format_poly(self)


# -- construction ------------------------------------------------------

def hpoly(ring: RingId, values) -> HurwitzPoly:
    """Build from a list of ints, Fractions, or RingElems; normalized."""
    return HurwitzPoly(ring, tuple(elem(ring, v) for v in values))


def basis(ring: RingId, n: int) -> HurwitzPoly:
    """The element with value 1 at index n-1; n = 1 gives the unity."""
    if not isinstance(n, int) or n < 1:
        raise InvalidIndex(f"basis index must be >= 1, got {n!r}")
    return hpoly(ring, [0] * (n - 1) + [1])


def constant(ring: RingId, r) -> HurwitzPoly:
    """Embed the ring element r at index 0."""
    return HurwitzPoly(ring, (elem(ring, r),))


def stats(f: HurwitzPoly) -> dict:
    return {"supp": f.support, "delta": f.degree, "pi": f.order}


def derivation(f: HurwitzPoly) -> HurwitzPoly:
    """Coefficient shift (df)(n) = f(n+1); satisfies the product rule."""
    return HurwitzPoly(f.ring, f.coeffs[1:])


# -- reduction mod m and inversion there -------------------------------

def reduce_mod(f: HurwitzPoly, m: int) -> HurwitzPoly:
    """Coefficient-wise residues of an integral or p-local polynomial.

    Over Zloc(p) the modulus must be a power of p, so denominators stay
    invertible.
    """
    if not isinstance(m, int) or m < 2:
        raise BadModulus(f"modulus must be an integer >= 2, got {m!r}")
    kind = f.ring.kind
    if kind == "Zloc":
        q = m
        while q % f.ring.p == 0:
            q //= f.ring.p
        if q != 1:
            raise BadModulus(f"{m} is not a power of {f.ring.p}")
    elif kind != "Z":
        raise BadModulus(f"cannot reduce a polynomial over {f.ring}")
    target = Zmod(m)
    return HurwitzPoly(target, tuple(RingElem(target, c.num, c.den) for c in f.coeffs))


def lift(fbar: HurwitzPoly, ring: RingId) -> HurwitzPoly:
    """Lift residues to the canonical representatives in [0, m)."""
    if fbar.ring.kind != "Zmod":
        raise BadModulus(f"lift expects residues, got {fbar.ring}")
    return hpoly(ring, [c.num for c in fbar.coeffs])


def _mul_mod(a: list[int], b: list[int], m: int) -> list[int]:
    """Binomial convolution of residue lists mod m, trailing zeros cut."""
    if not a or not b:
        return []
    out = [0] * (len(a) + len(b) - 1)
    for i, ai in enumerate(a):
        if ai:
            for j, bj in enumerate(b):
                if bj:
                    out[i + j] = (out[i + j] + binomial(i + j, i) * ai * bj) % m
    while out and out[-1] == 0:
        out.pop()
    return out


def invert_mod(fbar: HurwitzPoly, cap: int = 512) -> HurwitzPoly:
    """Inverse of fbar in residues mod m.

    Writes fbar = c(1 + u) with u(0) = 0; u is nilpotent here, so the
    inverse is the finite series c^-1 sum (-u)^k.  The constant term c
    must be a unit mod m.  Runs on plain residue lists for speed.
    """
    if fbar.ring.kind not in ("Zmod", "Fp"):
        raise BadModulus(f"invert_mod expects residues, got {fbar.ring}")
    m = fbar.ring.p
    c = fbar.coeff(0)
    if not is_unit(c):
        raise NotAUnit(f"constant term {c} is not a unit mod {m}")
    cinv = pow(c.num, -1, m)
    minus_u = [(-cinv * x.num) % m for x in fbar.coeffs]
    minus_u[0] = 0
    while minus_u and minus_u[-1] == 0:
        minus_u.pop()
    acc = [1]
    term = [1]
    for _ in range(cap):
        term = _mul_mod(term, minus_u, m)
        if not term:
            target = fbar.ring
            return HurwitzPoly(target, tuple(RingElem(target, cinv * v) for v in acc))
        if len(acc) < len(term):
            acc = acc + [0] * (len(term) - len(acc))
        for i, v in enumerate(term):
            acc[i] = (acc[i] + v) % m
    raise NilpotencyBudgetExceeded(f"series did not terminate within {cap} steps mod {m}")


def nilpotency_index(fbar: HurwitzPoly, cap: int = 512):
    """Least N <= cap with fbar^N = 0, or None if not reached."""
    if fbar.ring.kind not in ("Zmod", "Fp"):
        raise BadModulus(f"nilpotency_index expects residues, got {fbar.ring}")
    m = fbar.ring.p
    flat = [c.num for c in fbar.coeffs]
    acc = [1]
    for n in range(1, cap + 1):
        acc = _mul_mod(acc, flat, m)
        if not acc:
            return n
    return None


# -- text format -------------------------------------------------------

def format_poly(f: HurwitzPoly) -> str:
    return f"{f.ring}:[{','.join(str(c) for c in f.coeffs)}]"


def parse_poly(text: str, expect_ring: RingId | None = None) -> HurwitzPoly:
    """Parse `<ring>:[c0,c1,...,cd]`, e.g. `Z:[1,2,2]` or `Q:[1,1/2]`."""
    colon = text.find(":")
    if colon < 0:
        raise PolySyntaxError("expected <ring>:[coefficients]", 0)
    ring = parse_ring(text[:colon])
    if expect_ring is not None and ring != expect_ring:
        raise RingMismatch(f"polynomial over {ring} but {expect_ring} was requested")
    body = text[colon + 1:].strip()
    if not (body.startswith("[") and body.endswith("]")):
        raise PolySyntaxError("coefficients must be bracketed, e.g. [1,2,2]", colon + 1)
    inner = body[1:-1].strip()
    if not inner:
        return HurwitzPoly(ring, ())
    coeffs = []
    pos = text.find("[", colon) + 1
    for token in inner.split(","):
        coeffs.append(parse_scalar(ring, token, position=pos))
        pos += len(token) + 1
    return HurwitzPoly(ring, tuple(coeffs))
