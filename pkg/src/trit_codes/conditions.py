"""Solution-set conditions that control the minimum distance of double-zero codes.

A code with zeros alpha and alpha^e has minimum distance 4 exactly when three
conditions hold over GF(3^m):

  C1: e is even,
  C2: (x+1)^e + x^e + 1 = 0 has the only solution x = 1,
  C3: (x+1)^e - x^e - 1 = 0 has the only solution x = 0.

This module offers two independent routes to these verdicts.  The exhaustive
route (`check_conditions`) sweeps every field element with table-based
powering and records full solution counts.  The symbolic route
(`case_polynomial` / `symbolic_condition_analysis`) rewrites the equations
through the quadratic character eta, splits into sign cases, and reads off
solution locations from the degrees of the irreducible factors of each case
polynomial: a factor of degree d has roots in GF(3^m) iff d divides m.
`cross_validate` checks that both routes agree in a concrete field.

Supported exponent families (r is the family parameter, s = (3^m-1)/2):

  A-minus-r     e = s - r      case polys  (x+1)^r x^r + eta(x+1) x^r + eta(x) (x+1)^r   [C2]
                               and         (x+1)^r x^r + eta(x) (x+1)^r - eta(x+1) x^r   [C3]
  B-plus-r      e = s + r      case polys  eta(x+1) (x+1)^r + eta(x) x^r + 1             [C2]
                               and         eta(x+1) (x+1)^r - eta(x) x^r - 1             [C3]
  C-2r          e = -2r mod n  (x+1)^{2r} x^{2r} + (x+1)^{2r} + x^{2r}                   [C2]
                               (x+1)^{2r} x^{2r} + (x+1)^{2r} - x^{2r}                   [C3]
  open-problem  e = 2(3^{m-1}-1); the r = 2 instance of family C
  small-e       e = r itself (even); the defining polynomials with the known
                trivial solution stripped: ((x+1)^e + x^e + 1) / (x-1)^v and
                ((x+1)^e - x^e - 1) / x^k with v, k maximal
"""

from __future__ import annotations

from dataclasses import dataclass
from functools import lru_cache

import numpy as np

from .errors import UnsupportedFamilyVariant
from .field import FieldContext
from .poly3 import ONE, X, F3Poly, Factorization, factorize

FAMILIES = ("A-minus-r", "B-plus-r", "C-2r", "open-problem", "small-e")

_SIGN_PAIRS = ((1, 1), (1, -1), (-1, 1), (-1, -1))


@dataclass(frozen=True)
class ConditionVerdict:
    """Exhaustive solution counts for C1/C2/C3 at a specific (m, e)."""

    e: int
    m: int
    c1: bool
    c2_solution_count: int
    c2_only_solution_one: bool
    c3_solution_count: int
    c3_only_solution_zero: bool

    @property
    def passed(self) -> bool:
        return self.c1 and self.c2_only_solution_one and self.c3_only_solution_zero


@dataclass(frozen=True)
class ConditionCase:
    """One sign case of the symbolic route, with its factored polynomial.

    `root_degree_divisors` lists the distinct irreducible factor degrees; the
    case contributes roots in GF(3^m) only when some listed d divides m.
    When `sign_pair` is set, a root counts only if its characters
    (eta(x), eta(x+1)) match the assumed pair, which must be checked in the
    specific field (`needs_sign_check`).
    """

    family: str
    r: int
    variant: str
    sign_pair: tuple[int, int] | None
    polynomial: F3Poly
    factorization: Factorization
    factor_degrees: tuple[int, ...]
    root_degree_divisors: tuple[int, ...]

    @property
    def needs_sign_check(self) -> bool:
        return self.sign_pair is not None


def check_conditions(ctx: FieldContext, e: int) -> ConditionVerdict:
    """Exhaustively evaluate C1, C2 and C3 for exponent e over ctx's field."""
    if not 1 <= e <= ctx.q - 2:
        raise ValueError(f"exponent must lie in [1, {ctx.q - 2}], got {e}")
    xs = np.arange(ctx.q, dtype=np.int64)
    pw = ctx.power_map(e)
    xp1 = ctx.vadd(xs, np.ones(ctx.q, dtype=np.int64))
    a = pw[xp1]  # (x+1)^e
    b = pw[xs]  # x^e
    ones = np.ones(ctx.q, dtype=np.int64)
    twos = np.full(ctx.q, 2, dtype=np.int64)  # packed -1
    c2_vals = ctx.vadd(ctx.vadd(a, b), ones)
    c3_vals = ctx.vadd(ctx.vadd(a, ctx.neg_np[b]), twos)
    c2_sols = np.flatnonzero(c2_vals == 0)
    c3_sols = np.flatnonzero(c3_vals == 0)
    return ConditionVerdict(
        e=e,
        m=ctx.m,
        c1=e % 2 == 0,
        c2_solution_count=int(c2_sols.size),
        c2_only_solution_one=c2_sols.tolist() == [1],
        c3_solution_count=int(c3_sols.size),
        c3_only_solution_zero=c3_sols.tolist() == [0],
    )


def _sign_scale(p: F3Poly, sign: int) -> F3Poly:
    if sign == 1:
        return p
    if sign == -1:
        return p.scale(2)
    raise UnsupportedFamilyVariant(f"sign must be +1 or -1, got {sign!r}")


def _strip_maximal(p: F3Poly, f: F3Poly) -> tuple[F3Poly, int]:
    """Divide out the highest power of f from p; return (quotient, power)."""
    k = 0
    while p.degree >= f.degree:
        q, rem = divmod(p, f)
        if not rem.is_zero():
            break
        p = q
        k += 1
    return p, k


def case_polynomial(
    family: str,
    r: int,
    sign_pair: tuple[int, int] | None,
    variant: str,
) -> F3Poly:
    """The GF(3)[x] polynomial for one sign case of a family's C2/C3 equation.

    `sign_pair` is (eta(x), eta(x+1)) and is ignored for the families without
    a character split (C-2r, open-problem, small-e).  For family small-e the
    parameter r is the exponent e itself and must be even.
    """
    if variant not in ("C2", "C3"):
        raise UnsupportedFamilyVariant(f"variant must be C2 or C3, got {variant!r}")
    if family not in FAMILIES:
        raise UnsupportedFamilyVariant(f"unknown family {family!r}")
    if family == "open-problem":
        r = 2
    if not isinstance(r, int) or r < 1:
        raise UnsupportedFamilyVariant(f"family parameter r must be a positive integer, got {r!r}")

    if family in ("A-minus-r", "B-plus-r"):
        if sign_pair is None:
            raise UnsupportedFamilyVariant(f"family {family} requires a sign pair")
        sx, sxp1 = sign_pair
        xp1_r = (X + ONE) ** r
        x_r = X**r
        if family == "A-minus-r":
            if variant == "C2":
                return xp1_r * x_r + _sign_scale(x_r, sxp1) + _sign_scale(xp1_r, sx)
            return xp1_r * x_r + _sign_scale(xp1_r, sx) - _sign_scale(x_r, sxp1)
        if variant == "C2":
            return _sign_scale(xp1_r, sxp1) + _sign_scale(x_r, sx) + ONE
        return _sign_scale(xp1_r, sxp1) - _sign_scale(x_r, sx) - ONE

    if family in ("C-2r", "open-problem"):
        a = (X + ONE) ** (2 * r)
        b = X ** (2 * r)
        if variant == "C2":
            return a * b + a + b
        return a * b + a - b

    # small-e: r is the exponent e
    if r % 2 != 0:
        raise UnsupportedFamilyVariant("family small-e needs an even exponent")
    if variant == "C2":
        full = (X + ONE) ** r + X**r + ONE
        quotient, _ = _strip_maximal(full, X - ONE)
    else:
        full = (X + ONE) ** r - X**r - ONE
        quotient, _ = _strip_maximal(full, X)
    return quotient


@lru_cache(maxsize=None)
def symbolic_condition_analysis(family: str, r: int) -> tuple[ConditionCase, ...]:
    """Factor every sign case of a family's C2/C3 equations.

    Returns one ConditionCase per (variant, sign case).  Families A and B
    split into four character cases each; the others have a single case per
    variant.  The factor-degree data predicts for which m the case polynomial
    acquires roots in GF(3^m); sign-consistency of those roots still needs a
    per-field check (see cross_validate).
    """
    if family not in FAMILIES:
        raise UnsupportedFamilyVariant(f"unknown family {family!r}")
    split = family in ("A-minus-r", "B-plus-r")
    cases = []
    for variant in ("C2", "C3"):
        for signs in _SIGN_PAIRS if split else (None,):
            poly = case_polynomial(family, r, signs, variant)
            fac = factorize(poly)
            degrees = tuple(f.degree for f, mult in fac.factors for _ in range(mult))
            cases.append(
                ConditionCase(
                    family=family,
                    r=2 if family == "open-problem" else r,
                    variant=variant,
                    sign_pair=signs,
                    polynomial=poly,
                    factorization=fac,
                    factor_degrees=degrees,
                    root_degree_divisors=tuple(sorted(set(degrees))),
                )
            )
    return tuple(cases)


def family_exponent(family: str, r: int, m: int) -> int:
    """The exponent e the family assigns at extension degree m, reduced mod 3^m-1."""
    if family not in FAMILIES:
        raise UnsupportedFamilyVariant(f"unknown family {family!r}")
    n = 3**m - 1
    s = n // 2
    if family == "open-problem":
        e = 2 * (3 ** (m - 1) - 1)
    elif family == "A-minus-r":
        e = s - r
    elif family == "B-plus-r":
        e = s + r
    elif family == "C-2r":
        e = n - 2 * r
    else:  # small-e
        e = r
    e %= n
    if not 1 <= e <= n - 1:
        raise UnsupportedFamilyVariant(f"family {family} with r={r} degenerates at m={m}")
    return e


def _case_roots(ctx: FieldContext, case: ConditionCase) -> set[int]:
    """Roots of a case polynomial in ctx's field, sign-filtered where needed.

    Only factors whose degree divides m can have roots in GF(3^m); those are
    enumerated explicitly rather than trusted, and the boundary points 0, -1
    (where eta is 0 and the character rewrite is invalid) are excluded.
    """
    neg_one = 2  # packed -1
    roots: set[int] = set()
    for factor, _mult in case.factorization.factors:
        if factor.degree >= 1 and ctx.m % factor.degree == 0:
            roots.update(ctx.find_roots(factor))
    roots.discard(0)
    roots.discard(neg_one)
    if case.sign_pair is not None:
        sx, sxp1 = case.sign_pair
        roots = {x for x in roots if ctx.eta(x) == sx and ctx.eta(ctx.add(x, 1)) == sxp1}
    return roots


def cross_validate(ctx: FieldContext, family: str, r: int) -> bool:
    """True iff the exhaustive and symbolic routes agree at ctx's field.

    The symbolic prediction assembles the full solution sets of the C2 and C3
    equations: boundary points x in {0, 1, -1} are evaluated directly (the
    character rewrite does not cover them), every other solution must be a
    sign-consistent root of some case polynomial.  Agreement means both
    routes give the same pass/fail verdict for each of C1, C2, C3.
    """
    e = family_exponent(family, r, ctx.m)
    verdict = check_conditions(ctx, e)
    cases = symbolic_condition_analysis(family, r)

    sols_c2: set[int] = set()
    sols_c3: set[int] = set()
    for case in cases:
        roots = _case_roots(ctx, case)
        if case.variant == "C2":
            sols_c2 |= roots
        else:
            sols_c3 |= roots
    one, neg_one = 1, 2
    for x in (0, one, neg_one):
        lhs = ctx.add(ctx.pow(ctx.add(x, 1), e), ctx.pow(x, e))
        if ctx.add(lhs, 1) == 0:
            sols_c2.add(x)
        diff = ctx.sub(ctx.pow(ctx.add(x, 1), e), ctx.pow(x, e))
        if ctx.sub(diff, 1) == 0:
            sols_c3.add(x)

    pred_c1 = e % 2 == 0
    pred_c2 = sols_c2 == {one}
    pred_c3 = sols_c3 == {0}
    return (
        verdict.c1 == pred_c1
        and verdict.c2_only_solution_one == pred_c2
        and verdict.c3_only_solution_zero == pred_c3
    )
