"""Command-line front end.

Plain output is the default; --json switches to a single structured
object with schema_version 1 and a fixed key order, no timing fields,
so identical invocations with identical seeds are byte-identical.
Exit codes: 0 success, 1 a verify run with failures, 2 usage or
domain errors.
"""

from __future__ import annotations

import argparse
import json
import sys

from .errors import HurwitzError
from .hurwitz import HurwitzPoly, format_poly, invert_mod, parse_poly
from .ideals import (
    ClaimReport,
    Lemma21Result,
    MaximalityVerdict,
    claim_report,
    constant_ideal,
    contains,
    factor_closed,
    is_maximal,
    is_prime,
    lemma21_check,
    min_tau_rho,
    mk_closed,
    prop23_construct,
    verify_certificate,
)
from .irreducibility import (
    DEFAULT_DEGREE_CAP,
    factor_ordinary,
    factor_witness_search,
    is_completely_irreducible,
    is_irreducible_hR,
    remark16_check,
)
from .rings import UnsupportedRing, parse_ring
from .suites import render_text, suite_names, verify_suites
from .transform import (
    format_ordinary,
    from_ordinary,
    human_str,
    parse_ordinary,
    to_ordinary,
)


def _poly_arg(args, text: str) -> HurwitzPoly:
    expect = parse_ring(args.ring) if args.ring else None
    return parse_poly(text, expect)


def _poly_json(f: HurwitzPoly | None):
    if f is None:
        return None
    return {"ring": str(f.ring), "coeffs": [str(c) for c in f.coeffs]}


def _ord_json(q):
    return {"coeffs": [str(c) for c in q.coeffs]}


def _emit(args, plain: str, payload: dict) -> int:
    if args.json:
        out = {"schema_version": 1, "command": args.verb}
        out.update(payload)
        print(json.dumps(out))
    else:
        print(plain)
    return 0


def _verdict_json(v: MaximalityVerdict) -> dict:
    return {
        "status": v.status,
        "kind": v.kind,
        "witness": _poly_json(v.witness),
        "hensel": None if v.hensel is None else {"p": v.hensel.p, "poly": list(v.hensel.poly)},
        "note": v.note,
        "verified": verify_certificate(v),
    }


def _verdict_plain(v: MaximalityVerdict) -> str:
    bits = [v.status, f"kind={v.kind}"]
    if v.witness is not None:
        bits.append(f"witness={format_poly(v.witness)}")
    if v.hensel is not None:
        bits.append(f"p={v.hensel.p}")
    bits.append(f"verified={str(verify_certificate(v)).lower()}")
    if v.note:
        bits.append(f"({v.note})")
    return "  ".join(bits)


def _lemma_json(r: Lemma21Result) -> dict:
    return {
        "status": r.status,
        "modulus": r.modulus,
        "witness": _poly_json(r.witness),
        "hensel": None if r.hensel is None else {"p": r.hensel.p, "poly": list(r.hensel.poly)},
        "rho_note": r.rho_note,
        "note": r.note,
        "verified": verify_certificate(r),
    }


def _report_lines(rep: ClaimReport) -> list[str]:
    out = [f"verdict: {_verdict_plain(rep.verdict)}"]
    for ln in rep.lines:
        s = f"{ln.claim}: {ln.status}  ({ln.note})"
        if ln.witness is not None:
            s += f"  witness={format_poly(ln.witness)}"
        out.append(s)
    return out


# -- verb handlers -----------------------------------------------------

def _cmd_arith(args) -> int:
    a = _poly_arg(args, args.f)
    if args.verb == "pow":
        r = a ** args.exponent
    else:
        b = _poly_arg(args, args.g)
        r = a * b if args.verb == "mul" else a + b
    return _emit(args, format_poly(r), {"result": _poly_json(r)})


def _cmd_transform(args) -> int:
    if args.f.startswith("ORD:"):
        if not args.ring:
            raise UnsupportedRing("pulling back an ordinary polynomial needs --ring")
        q = parse_ordinary(args.f)
        f = from_ordinary(q, parse_ring(args.ring))
        return _emit(args, format_poly(f), {"result": _poly_json(f)})
    f = _poly_arg(args, args.f)
    q = to_ordinary(f)
    return _emit(args, f"{format_ordinary(q)}  ({human_str(q)})",
                 {"result": _ord_json(q)})


def _cmd_inverse_mod(args) -> int:
    fbar = _poly_arg(args, args.f)
    s = invert_mod(fbar, args.budget)
    return _emit(args, format_poly(s), {"result": _poly_json(s)})


def _cmd_irreducible(args) -> int:
    f = _poly_arg(args, args.f)
    ci = is_completely_irreducible(f, args.degree_bound)
    ring_level = None
    if f.ring.kind == "Z":
        ring_level = is_irreducible_hR(f, args.degree_bound)
    plain = f"completely_irreducible={str(ci).lower()}"
    if ring_level is not None:
        plain += f"  ring_irreducible={str(ring_level).lower()}"
    return _emit(args, plain, {"completely_irreducible": ci, "ring_irreducible": ring_level})


def _cmd_factor(args) -> int:
    f = _poly_arg(args, args.f)
    res = factor_ordinary(to_ordinary(f), args.degree_bound)
    parts = [f"unit={res.unit}"]
    parts += [f"({human_str(q)})^{e}" if e > 1 else f"({human_str(q)})"
              for q, e in res.factors]
    return _emit(args, "  ".join(parts),
                 {"unit": str(res.unit),
                  "factors": [{"coeffs": _ord_json(q)["coeffs"], "multiplicity": e}
                              for q, e in res.factors]})


def _cmd_remark16(args) -> int:
    f = _poly_arg(args, args.f)
    r = remark16_check(f, args.degree_bound)
    search = None
    if args.height:
        search = factor_witness_search(f, args.height, args.degree_bound)
    plain = (f"agrees={str(r.agrees).lower()}  "
             f"completely_irreducible={str(r.completely_irreducible).lower()}  "
             f"ring_irreducible={str(r.irreducible).lower()}")
    if r.witness is not None:
        c, prim = r.witness
        plain += f"  witness={format_poly(c)} * {format_poly(prim)}"
    if search is not None:
        plain += (f"  search: b={search.b} h={format_poly(search.h)} "
                  f"g={format_poly(search.g)}")
    elif args.height:
        plain += "  search: none"
    payload = {
        "agrees": r.agrees,
        "completely_irreducible": r.completely_irreducible,
        "ring_irreducible": r.irreducible,
        "witness": None if r.witness is None else
        {"content": _poly_json(r.witness[0]), "primitive": _poly_json(r.witness[1])},
        "search": None if search is None else
        {"b": search.b, "h": _poly_json(search.h), "g": _poly_json(search.g)},
    }
    return _emit(args, plain, payload)


def _cmd_ideal(args) -> int:
    I = mk_closed(_poly_arg(args, args.generator))
    if args.sub == "contains":
        g = _poly_arg(args, args.member)
        ok = contains(I, g)
        return _emit(args, str(ok).lower(), {"member": ok})
    if args.sub == "prime":
        ok = is_prime(I, args.degree_bound)
        return _emit(args, str(ok).lower(), {"prime": ok})
    if args.sub == "maximal":
        v = is_maximal(I, args.budget, args.degree_bound)
        return _emit(args, _verdict_plain(v), _verdict_json(v))
    if args.sub == "factor":
        fac = factor_closed(I, args.degree_bound)
        parts = [f"[{format_poly(J.generator)}]^{e}" if e > 1 else f"[{format_poly(J.generator)}]"
                 for J, e in fac]
        return _emit(args, "  ".join(parts),
                     {"factors": [{"generator": _poly_json(J.generator), "multiplicity": e}
                                  for J, e in fac]})
    if args.sub == "tau":
        m = min_tau_rho(I, args.window)
        plain = (f"min_degree={m.min_degree}  tau={m.tau}  "
                 f"rho_truncated={m.rho_truncated}  stabilized={str(m.stabilized).lower()}  "
                 f"window={m.window[0]}..{m.window[1]}")
        return _emit(args, plain, {
            "min_degree": m.min_degree, "tau": str(m.tau),
            "rho_truncated": str(m.rho_truncated), "stabilized": m.stabilized,
            "window": list(m.window)})
    if args.sub == "constants":
        top = max(args.degree_bound, I.min_degree)
        chain = [(k, str(constant_ideal(I, k))) for k in range(I.min_degree, top + 1)]
        plain = "  ".join(f"{k}:({g})" for k, g in chain)
        return _emit(args, plain,
                     {"chain": [{"degree": k, "generator": g} for k, g in chain]})
    rep = claim_report(I, args.budget)
    payload = {
        "verdict": _verdict_json(rep.verdict),
        "lines": [{"claim": ln.claim, "status": ln.status, "note": ln.note,
                   "witness": _poly_json(ln.witness)} for ln in rep.lines],
    }
    return _emit(args, "\n".join(_report_lines(rep)), payload)


def _cmd_lemma21(args) -> int:
    P = mk_closed(_poly_arg(args, args.generator))
    r = lemma21_check(P, args.L, args.budget)
    bits = [r.status, f"L=({r.modulus})"]
    if r.witness is not None:
        bits.append(f"witness={format_poly(r.witness)}")
    bits.append(f"verified={str(verify_certificate(r)).lower()}")
    bits.append(f"({r.rho_note})")
    return _emit(args, "  ".join(bits), _lemma_json(r))


def _cmd_prop23(args) -> int:
    ring = parse_ring(args.ring) if args.ring else None
    if ring is None:
        raise UnsupportedRing("the construction needs --ring")
    I = prop23_construct(ring)
    if I is None:
        return _emit(args, "none (zero pseudo-radical admits no candidate)",
                     {"generator": None, "verdict": None})
    v = is_maximal(I)
    plain = f"generator={format_poly(I.generator)}\n{_verdict_plain(v)}"
    return _emit(args, plain, {"generator": _poly_json(I.generator),
                               "verdict": _verdict_json(v)})


def _cmd_verify(args) -> int:
    rep = verify_suites(args.suite, args.cases, args.seed,
                        args.degree_bound, args.height)
    if args.json:
        out = {
            "schema_version": 1,
            "command": "verify",
            "suites": [{"suite": r.name, "cases": r.cases,
                        "failures": list(r.failures), "passed": r.passed}
                       for r in rep.results],
            "passed": rep.passed,
        }
        print(json.dumps(out))
    else:
        print(render_text(rep))
    return 0 if rep.passed else 1


# -- parser ------------------------------------------------------------

def _add_common(p, *, degree_bound=True, budget=False, height=False):
    p.add_argument("--ring", help="expected (or target) coefficient ring, e.g. Z, Q, Fp(5), Zloc(5)")
    p.add_argument("--json", action="store_true", help="structured single-object output")
    if degree_bound:
        p.add_argument("--degree-bound", type=int, default=DEFAULT_DEGREE_CAP,
                       help="degree cap for factorization searches")
    if budget:
        p.add_argument("--budget", type=int, default=None,
                       help="degree window for lattice scans")
    if height:
        p.add_argument("--height", type=int, default=0,
                       help="coefficient height for witness enumeration (0 disables)")


def build_parser() -> argparse.ArgumentParser:
    ap = argparse.ArgumentParser(
        prog="hpoly",
        description="Exact arithmetic, irreducibility tests, and ideal "
                    "certificates for binomial-convolution polynomial rings.")
    sub = ap.add_subparsers(dest="verb", required=True)

    for verb in ("mul", "add"):
        p = sub.add_parser(verb, help=f"{verb} two polynomials")
        p.add_argument("f")
        p.add_argument("g")
        _add_common(p, degree_bound=False)
        p.set_defaults(func=_cmd_arith)
    p = sub.add_parser("pow", help="raise a polynomial to a power")
    p.add_argument("f")
    p.add_argument("exponent", type=int)
    _add_common(p, degree_bound=False)
    p.set_defaults(func=_cmd_arith)

    p = sub.add_parser("transform",
                       help="divided-factorial transform; ORD:[...] input plus --ring pulls back")
    p.add_argument("f")
    _add_common(p, degree_bound=False)
    p.set_defaults(func=_cmd_transform)

    p = sub.add_parser("inverse-mod", help="invert a residue polynomial with unit constant term")
    p.add_argument("f")
    _add_common(p, degree_bound=False)
    p.add_argument("--budget", type=int, default=512, help="series length cap")
    p.set_defaults(func=_cmd_inverse_mod)

    p = sub.add_parser("irreducible", help="irreducibility of a polynomial")
    p.add_argument("f")
    _add_common(p)
    p.set_defaults(func=_cmd_irreducible)

    p = sub.add_parser("factor", help="factor the transform of a polynomial")
    p.add_argument("f")
    _add_common(p)
    p.set_defaults(func=_cmd_factor)

    p = sub.add_parser("remark16",
                       help="compare the two irreducibility notions on one input")
    p.add_argument("f")
    _add_common(p, height=True)
    p.set_defaults(func=_cmd_remark16)

    p = sub.add_parser("ideal", help="closed-ideal computations")
    isub = p.add_subparsers(dest="sub", required=True)
    for name, extra in (("contains", ("member",)), ("prime", ()), ("maximal", ()),
                        ("factor", ()), ("tau", ()), ("constants", ()), ("claims", ())):
        q = isub.add_parser(name)
        q.add_argument("generator")
        for a in extra:
            q.add_argument(a)
        _add_common(q, budget=True)
        if name == "tau":
            q.add_argument("--window", type=int, default=8,
                           help="degrees past the minimum for the truncated leading ideal")
        q.set_defaults(func=_cmd_ideal)

    p = sub.add_parser("lemma21", help="reduction of a prime ideal at a non-zero prime of the ring")
    p.add_argument("generator")
    p.add_argument("--L", type=int, required=True, help="the prime q generating L=(q)")
    _add_common(p, budget=True)
    p.set_defaults(func=_cmd_lemma21)

    p = sub.add_parser("prop23", help="canonical maximal-ideal candidate for a ring")
    _add_common(p, degree_bound=False)
    p.set_defaults(func=_cmd_prop23)

    p = sub.add_parser("verify", help="run the property suites")
    p.add_argument("--suite", default="all", choices=(*suite_names(), "all"))
    p.add_argument("--cases", type=int, default=200)
    p.add_argument("--seed", type=int, default=0)
    p.add_argument("--degree-bound", type=int, default=6)
    p.add_argument("--height", type=int, default=20)
    p.add_argument("--json", action="store_true")
    p.set_defaults(func=_cmd_verify)

    return ap


def main(argv=None) -> int:
    args = build_parser().parse_args(argv)
    try:
        return args.func(args)
    except (HurwitzError, ValueError) as e:
        print(f"error in {args.verb}: {e}", file=sys.stderr)
        return 2


if __name__ == "__main__":
    sys.exit(main())
