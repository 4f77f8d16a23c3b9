"""Exact arithmetic for binomial-convolution polynomial rings, with a
divided-factorial transform, irreducibility tests, and certificate
engines for principal closed ideals."""

from .errors import (
    BadModulus,
    BudgetExceeded,
    HurwitzError,
    NotAUnit,
    NotInGamma,
    NotInTargetRing,
    PolySyntaxError,
    RingMismatch,
    UnsupportedRing,
)
from .hurwitz import (
    HurwitzPoly,
    basis,
    binomial,
    constant,
    derivation,
    format_poly,
    hpoly,
    invert_mod,
    lift,
    nilpotency_index,
    parse_poly,
    reduce_mod,
    stats,
)
from .ideals import (
    ClaimReport,
    ClosedIdeal,
    HenselCertificate,
    Lemma21Result,
    MaximalityVerdict,
    MinTauRho,
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
from .irreducibility import (
    FactorizationResult,
    FactorWitness,
    Remark16Result,
    factor_ordinary,
    factor_witness_search,
    is_completely_irreducible,
    is_irreducible_hR,
    is_irreducible_ordinary,
    remark16_check,
)
from .rings import (
    Fp,
    PseudoRadical,
    Q,
    RingElem,
    RingId,
    Z,
    Zloc,
    Zmod,
    elem,
    frac_field,
    parse_ring,
    pseudo_radical,
)
from .sampling import SplitMix64, random_elem, random_poly
from .suites import VerifyReport, render_text, verify_suites
from .transform import (
    OrdinaryPoly,
    format_ordinary,
    from_ordinary,
    opoly,
    parse_ordinary,
    to_ordinary,
)

__version__ = "0.1.0"

__all__ = [
    "BadModulus", "BudgetExceeded", "HurwitzError", "NotAUnit", "NotInGamma",
    "NotInTargetRing", "PolySyntaxError", "RingMismatch", "UnsupportedRing",
    "HurwitzPoly", "basis", "binomial", "constant", "derivation", "format_poly",
    "hpoly", "invert_mod", "lift", "nilpotency_index", "parse_poly", "reduce_mod",
    "stats",
    "ClaimReport", "ClosedIdeal", "HenselCertificate", "Lemma21Result",
    "MaximalityVerdict", "MinTauRho", "claim_report", "constant_ideal", "contains",
    "cor25_witness", "cosimplicity_spot_check", "factor_closed",
    "hensel_obstruction", "is_maximal", "is_prime", "lemma21_check",
    "member_lattice", "min_tau_rho", "mk_closed", "prop23_construct",
    "verify_certificate",
    "FactorizationResult", "FactorWitness", "Remark16Result", "factor_ordinary",
    "factor_witness_search", "is_completely_irreducible", "is_irreducible_hR",
    "is_irreducible_ordinary", "remark16_check",
    "Fp", "PseudoRadical", "Q", "RingElem", "RingId", "Z", "Zloc", "Zmod", "elem",
    "frac_field", "parse_ring", "pseudo_radical",
    "SplitMix64", "random_elem", "random_poly",
    "VerifyReport", "render_text", "verify_suites",
    "OrdinaryPoly", "format_ordinary", "from_ordinary", "opoly", "parse_ordinary",
    "to_ordinary",
]
