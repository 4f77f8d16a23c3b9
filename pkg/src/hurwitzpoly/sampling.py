"""Deterministic input generation for the verify suites."""

from __future__ import annotations

from dataclasses import dataclass

from .hurwitz import HurwitzPoly, hpoly
from .rings import RingElem, RingId, elem

_MASK = (1 << 64) - 1


@dataclass
class SplitMix64:
    """64-bit splitmix stream; identical seeds give identical output on
    every platform, which is all the suites need."""

    state: int

    def __post_init__(self):
        self.state &= _MASK

    def next_u64(self) -> int:
        self.state = (self.state + 0x9E3779B97F4A7C15) & _MASK
        z = self.state
        z = ((z ^ (z >> 30)) * 0xBF58476D1CE4E5B9) & _MASK
        z = ((z ^ (z >> 27)) * 0x94D049BB133111EB) & _MASK
        return z ^ (z >> 31)

    def below(self, n: int) -> int:
        if n <= 0:
            raise ValueError("need a positive bound")
        return self.next_u64() % n

    def randint(self, lo: int, hi: int) -> int:
        return lo + self.below(hi - lo + 1)


def random_elem(rng: SplitMix64, ring: RingId, height: int = 20) -> RingElem:
    if ring.kind == "Z":
        return elem(ring, rng.randint(-height, height))
    if ring.kind == "Q":
        return elem(ring, rng.randint(-height, height), rng.randint(1, height))
    if ring.kind in ("Fp", "Zmod"):
        return elem(ring, rng.below(ring.p))
    # Zloc: reroll denominators hit by p
    num = rng.randint(-height, height)
    den = rng.randint(1, height)
    while den % ring.p == 0:
        den = rng.randint(1, height)
    return elem(ring, num, den)


def random_poly(rng: SplitMix64, ring: RingId, degree_bound: int = 6,
                height: int = 20) -> HurwitzPoly:
    d = rng.below(degree_bound + 1)
    return hpoly(ring, [random_elem(rng, ring, height) for _ in range(d + 1)])
