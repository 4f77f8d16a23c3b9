"""Property suites behind the verify command.

Each suite draws its own splitmix stream from (seed, suite name), so
the fixed assembly order of the report never depends on execution
order.  Failures are data, not exceptions; every failure line carries
a counterexample that has been greedily shrunk (drop top coefficients,
zero out entries) while it still fails.
"""

from __future__ import annotations

import time
from dataclasses import dataclass

from .hurwitz import (
    basis,
    constant,
    derivation,
    format_poly,
    hpoly,
    nilpotency_index,
    reduce_mod,
)
from .ideals import (
    claim_report,
    constant_ideal,
    contains,
    factor_closed,
    hensel_obstruction,
    is_maximal,
    lemma21_check,
    member_lattice,
    min_tau_rho,
    mk_closed,
    prop23_construct,
    verify_certificate,
)
from .irreducibility import (
    factor_ordinary,
    is_completely_irreducible,
    remark16_check,
)
from .ideals import MaximalityVerdict
from .rings import Fp, Q, Z, Zloc, elem
from .sampling import SplitMix64, random_poly
from .transform import from_ordinary, opoly, to_ordinary

_AXIOM_RINGS = (Z, Q, Fp(5), Zloc(5))
_MAX_REPORTED = 10


@dataclass(frozen=True)
class SuiteResult:
    name: str
    cases: int
    failures: tuple[str, ...]
    seconds: float

    @property
    def passed(self) -> bool:
        return not self.failures


@dataclass(frozen=True)
class VerifyReport:
    results: tuple[SuiteResult, ...]

    @property
    def passed(self) -> bool:
        return all(r.passed for r in self.results)


def _stream(seed: int, name: str) -> SplitMix64:
    h = 0xCBF29CE484222325
    for b in name.encode():
        h = ((h ^ b) * 0x100000001B3) & ((1 << 64) - 1)
    return SplitMix64(seed ^ h)


def _shrunk(polys, failing):
    """Greedy minimizer: truncate top coefficients, then zero single
    entries, keeping every step that still fails."""
    cur = list(polys)
    moved = True
    while moved:
        moved = False
        for i in range(len(cur)):
            while cur[i].coeffs:
                cand = hpoly(cur[i].ring, list(cur[i].coeffs[:-1]))
                trial = cur[:i] + [cand] + cur[i + 1:]
                if failing(trial):
                    cur = trial
                    moved = True
                else:
                    break
        for i in range(len(cur)):
            for j, c in enumerate(cur[i].coeffs):
                if not c:
                    continue
                coeffs = list(cur[i].coeffs)
                coeffs[j] = elem(cur[i].ring, 0)
                trial = cur[:i] + [hpoly(cur[i].ring, coeffs)] + cur[i + 1:]
                if failing(trial):
                    cur = trial
                    moved = True
    return cur


def _report(failures, label, polys, failing):
    if len(failures) >= _MAX_REPORTED:
        return
    small = _shrunk(polys, failing)
    failures.append(f"{label}: " + " ; ".join(format_poly(f) for f in small))


def _suite_axioms(rng, cases, degree_bound, height):
    failures = []
    n = 0
    for ring in _AXIOM_RINGS:
        unit = basis(ring, 1)
        for _ in range(cases):
            f = random_poly(rng, ring, degree_bound, height)
            g = random_poly(rng, ring, degree_bound, height)
            h = random_poly(rng, ring, degree_bound, height)
            n += 1
            checks = [
                ("associativity", lambda t: (t[0] * t[1]) * t[2] != t[0] * (t[1] * t[2])),
                ("commutativity", lambda t: t[0] * t[1] != t[1] * t[0]),
                ("distributivity", lambda t: t[0] * (t[1] + t[2]) != t[0] * t[1] + t[0] * t[2]),
                ("unity", lambda t: unit * t[0] != t[0]),
                ("derivation product rule",
                 lambda t: derivation(t[0] * t[1])
                 != derivation(t[0]) * t[1] + t[0] * derivation(t[1])),
            ]
            for label, bad in checks:
                if bad((f, g, h)):
                    _report(failures, f"{label} over {ring}", (f, g, h), bad)
    return n, failures


def _suite_transform(rng, cases, degree_bound, height):
    failures = []
    n = 0
    for ring in (Z, Q):
        for _ in range(cases):
            f = random_poly(rng, ring, degree_bound, height)
            g = random_poly(rng, ring, degree_bound, height)
            n += 1
            mult = lambda t: to_ordinary(t[0] * t[1]) != to_ordinary(t[0]) * to_ordinary(t[1])
            rt = lambda t: from_ordinary(to_ordinary(t[0]), t[0].ring) != t[0]
            if mult((f, g)):
                _report(failures, f"transform multiplicativity over {ring}", (f, g), mult)
            if rt((f,)):
                _report(failures, f"transform round trip over {ring}", (f,), rt)
    return n, failures


def _suite_charp(rng, cases, degree_bound, height):
    failures = []
    n = 0
    for p in (2, 3, 5):
        ring = Fp(p)
        h2 = basis(ring, 2)
        n += 1
        if h2 ** p != hpoly(ring, []):
            failures.append(f"collapse: h_2^{p} is non-zero over {ring}")
        if nilpotency_index(h2) != p:
            failures.append(f"nilpotency index of h_2 over {ring} is not {p}")
        for _ in range(cases):
            f = random_poly(rng, Z, degree_bound, height)
            g = random_poly(rng, Z, degree_bound, height)
            n += 1
            bad = lambda t: reduce_mod(t[0] * t[1], p) != reduce_mod(t[0], p) * reduce_mod(t[1], p)
            if bad((f, g)):
                _report(failures, f"reduction homomorphism mod {p}", (f, g), bad)
    return n, failures


def _nonzero_gamma(rng, ring, degree_bound, height):
    while True:
        f = random_poly(rng, ring, degree_bound, height)
        if f and f.degree >= 1:
            return f


def _suite_irreducibility(rng, cases, degree_bound, height):
    failures = []
    n = 0
    # pinned disagreement and agreement fixtures
    n += 2
    r = remark16_check(hpoly(Z, [2, 2]))
    if r.agrees or r.witness != (constant(Z, 2), hpoly(Z, [1, 1])):
        failures.append("remark16 on Z:[2,2] must disagree with witness 2 * Z:[1,1]")
    if not remark16_check(hpoly(Z, [1, 1])).agrees:
        failures.append("remark16 on Z:[1,1] must agree")
    # built-to-factor inputs: products split, and factorization rebuilds
    for _ in range(cases):
        g = _nonzero_gamma(rng, Z, 2, 4)
        h = _nonzero_gamma(rng, Z, 2, 4)
        f = g * h
        n += 1
        if is_completely_irreducible(f):
            failures.append(f"product reported irreducible: {format_poly(g)} ; {format_poly(h)}")
            continue
        q = to_ordinary(f)
        res = factor_ordinary(q)
        rebuilt = opoly([1])
        for base, e in res.factors:
            rebuilt = rebuilt * base ** e
        if rebuilt.scale(res.unit) != q:
            failures.append(f"factorization does not rebuild {format_poly(f)}")
    return n, failures


def _suite_ideals(rng, cases, degree_bound, height):
    failures = []
    n = 0
    # pinned membership and lattice fixtures
    n += 4
    I21 = mk_closed(hpoly(Z, [2, 1]))
    if not contains(I21, hpoly(Z, [0, 1, 1])):
        failures.append("Z:[0,1,1] must be a member of [Z:[2,1]]")
    if str(constant_ideal(I21, 3)) != "2":
        failures.append("constant-term ideal of [Z:[2,1]] at degree 3 must be (2)")
    fac = factor_closed(mk_closed(hpoly(Z, [1, 2, 2])))
    if [(format_poly(J.generator), e) for J, e in fac] != [("Z:[1,1]", 2)]:
        failures.append("[Z:[1,2,2]] must factor as [Z:[1,1]] squared")
    mtr = min_tau_rho(I21)
    if str(mtr.tau) != "1" or str(mtr.rho_truncated) != "1" or not mtr.stabilized:
        failures.append("invariants of [Z:[2,1]]: tau and truncated leading ideal must both be (1)")
    # random membership coherence, contains only
    for ring in (Z, Q, Zloc(5)):
        for _ in range(max(cases // 3, 1) if cases else 0):
            f = _nonzero_gamma(rng, ring, 3, 6)
            I = mk_closed(f)
            t = random_poly(rng, ring, 3, 6)
            g = f * t
            n += 1
            if not contains(I, g):
                failures.append(f"product member rejected: {format_poly(f)} ; {format_poly(t)}")
            if contains(I, g + basis(ring, 1)):
                failures.append(f"member plus unity accepted: {format_poly(f)} ; {format_poly(t)}")
            for row in member_lattice(I, I.min_degree + 2) if ring.kind != "Q" else []:
                if not contains(I, hpoly(ring, row)):
                    failures.append(f"lattice row outside the ideal for {format_poly(f)}")
    return n, failures


def _suite_claims(rng, cases, degree_bound, height):
    failures = []
    checks = []

    r = lemma21_check(mk_closed(hpoly(Z, [2, 1])), 3)
    checks.append(("reduction of [Z:[2,1]] at (3) is violated by Z:[4,6,6,3]",
                   r.status == "ViolatedWitness"
                   and r.witness == hpoly(Z, [4, 6, 6, 3])
                   and verify_certificate(r)))
    r = lemma21_check(mk_closed(hpoly(Z, [2, 1])), 2)
    checks.append(("reduction of [Z:[2,1]] at (2) holds with a certificate",
                   r.status == "HoldsCertified" and verify_certificate(r)))
    r = lemma21_check(mk_closed(hpoly(Zloc(2), [1, 1])), 2)
    checks.append(("reduction of [Zloc(2):[1,1]] at (2) is violated by Zloc(2):[1,2,2]",
                   r.status == "ViolatedWitness"
                   and r.witness == hpoly(Zloc(2), [1, 2, 2])
                   and verify_certificate(r)))
    r = lemma21_check(mk_closed(hpoly(Z, [1, 5])), 5)
    checks.append(("reduction of [Z:[1,5]] at (5) is inapplicable under truncation",
                   r.status == "Inapplicable" and verify_certificate(r)))

    v = is_maximal(mk_closed(hpoly(Z, [1, 1])))
    checks.append(("[Z:[1,1]] is certified maximal and re-verifies",
                   v.status == "maximal" and verify_certificate(v)))
    v = is_maximal(mk_closed(hpoly(Z, [2, 1])))
    checks.append(("[Z:[2,1]] carries a p-adic obstruction at 2",
                   v.status == "not_maximal" and v.kind == "PadicObstruction"
                   and v.hensel is not None and v.hensel.p == 2 and verify_certificate(v)))

    rep = claim_report(mk_closed(hpoly(Z, [1, 1])))
    checks.append(("claim report over Z marks the leading-ideal claim violated",
                   rep.line("cor22").status == "Violated" and verify_certificate(rep.verdict)))
    rep = claim_report(mk_closed(hpoly(Zloc(5), [1, 5])))
    checks.append(("claim report over Zloc(5) holds on all four lines",
                   all(ln.status == "Holds" for ln in rep.lines)))

    I5 = prop23_construct(Zloc(5))
    v5 = is_maximal(I5)
    checks.append(("the canonical Zloc(5) candidate is maximal with itself as witness",
                   format_poly(I5.generator) == "Zloc(5):[1,5]"
                   and v5.status == "maximal" and v5.witness == I5.generator
                   and verify_certificate(v5)))
    checks.append(("no canonical candidate exists over Z", prop23_construct(Z) is None))

    tampered = MaximalityVerdict("maximal", "Cor25Witness", v5.ideal,
                                 witness=hpoly(Zloc(5), [1, 5, 3]))
    checks.append(("a tampered witness must fail re-verification",
                   not verify_certificate(tampered)))
    cert = hensel_obstruction(mk_closed(hpoly(Z, [2, 1])), 2)
    checks.append(("the obstruction certificate records the reduced generator",
                   cert is not None and cert.poly == (2, 1)
                   and cert.const_residue == 0 and cert.deriv_residue == 1))

    for label, ok in checks:
        if not ok:
            failures.append(label)
    return len(checks), failures


_SUITES = {
    "axioms": _suite_axioms,
    "charp": _suite_charp,
    "claims": _suite_claims,
    "ideals": _suite_ideals,
    "irreducibility": _suite_irreducibility,
    "transform": _suite_transform,
}


def suite_names() -> tuple[str, ...]:
    return tuple(sorted(_SUITES))


def verify_suites(selection: str = "all", cases: int = 200, seed: int = 0,
                  degree_bound: int = 6, height: int = 20) -> VerifyReport:
    """Run the selected property suites and assemble the report in
    name order.  cases scales the random portion of each suite;
    pinned fixtures always run."""
    if selection == "all":
        chosen = suite_names()
    elif selection in _SUITES:
        chosen = (selection,)
    else:
        raise ValueError(f"unknown suite {selection!r}; choose from {', '.join(suite_names())} or all")
    results = []
    for name in chosen:
        t0 = time.perf_counter()
        n, failures = _SUITES[name](_stream(seed, name), cases, degree_bound, height)
        results.append(SuiteResult(name, n, tuple(failures[:_MAX_REPORTED]),
                                   time.perf_counter() - t0))
    return VerifyReport(tuple(results))


def render_text(report: VerifyReport) -> str:
    lines = []
    for r in report.results:
        flag = "pass" if r.passed else "FAIL"
        lines.append(f"suite {r.name:<15} {r.cases:>6} cases  {flag}  {r.seconds:8.3f}s")
        for f in r.failures:
            lines.append(f"  counterexample: {f}")
    total = sum(r.cases for r in report.results)
    bad = sum(len(r.failures) for r in report.results)
    lines.append(f"{'all suites passed' if report.passed else f'{bad} failure(s)'} "
                 f"({total} cases)")
    return "\n".join(lines)
