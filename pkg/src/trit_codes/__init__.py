"""Ternary cyclic codes with minimum distance four and five.

Construction and independent verification of the codes C_(1,e) and
C_(1,e,s) of length 3^m - 1, plus the supporting algebra: GF(3^m)
arithmetic, polynomial factorization over GF(3), cyclotomic cosets,
differential spectra of power maps, and distance bounds.

The usual entry points:

    >>> from trit_codes import codes, get_field
    >>> ctx = get_field(5)
    >>> rep = codes.analyze(codes.CodeSpec(ctx, 160))
    >>> rep.n, rep.k, rep.d_exact, rep.optimal
    (242, 232, 4, True)
"""
from .codes import CodeReport, CodeSpec, analyze, generator_polynomial
from .conditions import check_conditions, cross_validate
from .cosets import CyclotomicCoset, coset_of
from .errors import TritCodesError
from .families import (
    ClaimVerdict,
    FamilyId,
    SurveyRow,
    family_from_tag,
    proven_families,
    survey,
    verify_claim,
)
from .field import FieldContext, default_modulus, get_field
from .planar import differential_spectrum, is_apn, is_pn
from .poly3 import F3Poly, Factorization, factorize, parse_poly

__all__ = [
    "TritCodesError",
    "F3Poly",
    "Factorization",
    "FieldContext",
    "CyclotomicCoset",
    "CodeReport",
    "CodeSpec",
    "ClaimVerdict",
    "FamilyId",
    "SurveyRow",
    "analyze",
    "check_conditions",
    "coset_of",
    "cross_validate",
    "default_modulus",
    "differential_spectrum",
    "factorize",
    "family_from_tag",
    "generator_polynomial",
    "get_field",
    "is_apn",
    "is_pn",
    "parse_poly",
    "proven_families",
    "survey",
    "verify_claim",
]
