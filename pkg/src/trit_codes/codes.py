"""Ternary cyclic codes with zeros alpha, alpha^e (and optionally alpha^s).

Constructs the generator polynomial m_alpha * m_{alpha^e} of length n = 3^m-1
(times x+1 for the subcode variant with the extra zero at alpha^s = -1),
and certifies the minimum distance by searching for low-weight codewords
through their syndrome system: a word of weight w with support positions
p_i and coefficients c_i lies in the code iff

    sum c_i x_i = sum c_i x_i^e = 0   (and sum c_i x_i^s = 0 for the subcode)

where x_i = alpha^{p_i} are distinct nonzero field elements.  Scaling all
x_i by a unit and negating all c_i preserve solutions, so the search space
is normalized to x_1 = 1, c_1 = 1.  Upper bounds come from the sphere
packing volume inequality, refined by an exact second bound that rules out
distances the volume argument alone cannot (for [3^m-1, 3^m-2m-2] codes it
lowers the cap from 6 to 5).
"""

from __future__ import annotations

import math
import os
import time
from concurrent.futures import ProcessPoolExecutor
from dataclasses import dataclass, field
from itertools import product

import numpy as np

from .cosets import coset_of
from .errors import BudgetExceeded, CosetCollision, InternalError, UnsupportedWeight
from .field import FieldContext, get_field
from .poly3 import ONE, F3Poly, is_irreducible, powmod

DEFAULT_BUDGET = 150_000_000  # grid cells a single weight search may allocate
BUDGET_ENV_VAR = "TRIT_CODES_BUDGET"

_BLOCK_CELLS = 1 << 21  # rows per search block are sized to stay under this


def resolve_budget(budget: float | None) -> float:
    if budget is not None:
        return float(budget)
    env = os.environ.get(BUDGET_ENV_VAR)
    return float(env) if env else float(DEFAULT_BUDGET)


def search_cost(w: int, m: int) -> int:
    """Grid cells visited by the normalized weight-w search over GF(3^m)."""
    if w <= 2:
        return 0
    return 2 ** (w - 1) * 3 ** ((w - 2) * m)


def minimal_polynomial(ctx: FieldContext, i: int) -> F3Poly:
    """Minimal polynomial of alpha^i over GF(3), degree = coset size of i."""
    if not 0 <= i <= ctx.q - 2:
        raise ValueError(f"exponent must lie in [0, {ctx.q - 2}], got {i}")
    cos = coset_of(ctx.m, i)
    cached = ctx._minpoly_cache.get(cos.leader)
    if cached is not None:
        return cached
    # product over the orbit of (x - alpha^j), coefficients in GF(3^m)
    coeffs = [1]
    for j in cos.members:
        root = ctx.exp(j)
        nxt = [0] * (len(coeffs) + 1)
        for t, c in enumerate(coeffs):
            nxt[t + 1] = ctx.add(nxt[t + 1], c)
            nxt[t] = ctx.sub(nxt[t], ctx.mul(root, c))
        coeffs = nxt
    if any(c not in (0, 1, 2) for c in coeffs):
        raise InternalError(f"minimal polynomial of alpha^{i} left the base field: {coeffs}")
    p = F3Poly(coeffs)
    if p.degree != cos.size or not is_irreducible(p):
        raise InternalError(f"bad minimal polynomial for alpha^{i}: {p}")
    if ctx.evaluate_poly(p, ctx.exp(i)) != 0:
        raise InternalError(f"alpha^{i} is not a root of its minimal polynomial {p}")
    ctx._minpoly_cache[cos.leader] = p
    return p


class CodeSpec:
    """A code instance: field, second zero exponent e, optional zero at -1.

    Validates the hypotheses behind the claimed dimensions (e outside the
    coset of 1, coset of e full-sized).  Hard violations that break the
    construction raise CosetCollision unless force=True; soft ones are
    collected in `violations` and surface in reports.
    """

    def __init__(
        self,
        ctx: FieldContext,
        e: int,
        with_s_check: bool = False,
        force: bool = False,
    ):
        self.ctx = ctx
        self.m = ctx.m
        self.n = ctx.n
        self.s = ctx.s
        self.e = e % ctx.n
        self.with_s_check = bool(with_s_check)
        self.force = bool(force)

        violations = []
        degenerate = False
        if self.e == 0:
            violations.append("e = 0 mod n, second zero collides with the coset of 0")
            degenerate = True
        else:
            c1 = coset_of(self.m, 1)
            if self.e in c1.members:
                violations.append(f"e = {self.e} lies in the coset of 1, m_alpha^e = m_alpha")
                degenerate = True
            elif self.with_s_check and self.e == self.s:
                violations.append(f"e = s = {self.s}, the x+1 factor is duplicated")
                degenerate = True
            else:
                ce = coset_of(self.m, self.e)
                if ce.size != self.m:
                    violations.append(
                        f"coset of e has size {ce.size} < m = {self.m}, "
                        f"dimension claim n-2m{'-1' if self.with_s_check else ''} does not apply"
                    )
        if degenerate and not force:
            raise CosetCollision(violations[-1])
        self.degenerate = degenerate
        self.violations = tuple(violations)

    @property
    def hypotheses_ok(self) -> bool:
        return not self.violations

    @property
    def syndrome_exponents(self) -> tuple[int, ...]:
        if self.with_s_check:
            return (1, self.e, self.s)
        return (1, self.e)

    def name(self) -> str:
        if self.with_s_check:
            return f"C(1,{self.e},{self.s}) over GF(3^{self.m})"
        return f"C(1,{self.e}) over GF(3^{self.m})"

    def __repr__(self) -> str:
        return f"CodeSpec(m={self.m}, e={self.e}, with_s_check={self.with_s_check})"


def generator_polynomial(spec: CodeSpec) -> F3Poly:
    """m_alpha * m_{alpha^e}, times (x+1) for the subcode; divides x^n - 1."""
    ctx = spec.ctx
    g = minimal_polynomial(ctx, 1) * minimal_polynomial(ctx, spec.e)
    if spec.with_s_check:
        g = g * (F3Poly((1, 1)))
    if not spec.degenerate:
        # x^n == 1 mod g  <=>  g | x^n - 1
        if powmod(F3Poly((0, 1)), spec.n, g) != ONE:
            raise InternalError(f"generator {g} does not divide x^{spec.n} - 1")
    return g


@dataclass(frozen=True)
class WeightCertificate:
    """A found low-weight codeword, stored as field elements and signs."""

    weight: int
    xs: tuple[int, ...]  # packed field elements, x_1 = 1
    cs: tuple[int, ...]  # coefficients in {1, 2}, c_1 = 1
    exponents: tuple[int, ...]

    def positions(self, ctx: FieldContext) -> tuple[int, ...]:
        return tuple(ctx.log(x) for x in self.xs)

    def verify(self, ctx: FieldContext) -> bool:
        if len(self.xs) != self.weight or len(self.cs) != self.weight:
            return False
        if len(set(self.xs)) != self.weight or 0 in self.xs:
            return False
        if any(c not in (1, 2) for c in self.cs):
            return False
        for r in self.exponents:
            acc = 0
            for x, c in zip(self.xs, self.cs):
                acc = ctx.add(acc, ctx.mul(c, ctx.pow(x, r)))
            if acc != 0:
                return False
        return True

    def to_json(self, ctx: FieldContext) -> dict:
        return {
            "weight": self.weight,
            "positions": list(self.positions(ctx)),
            "coefficients": list(self.cs),
            "elements": [ctx.element_str(x) for x in self.xs],
        }


def _mulc(ctx: FieldContext, c: int, v):
    """Multiply a packed vector (or scalar array) by c in {1, 2} = {1, -1}."""
    return v if c == 1 else ctx.neg_np[v]


def _block_rows(q: int) -> int:
    return max(1, min(q, _BLOCK_CELLS // q))


def _weight2_certificate(spec: CodeSpec) -> WeightCertificate | None:
    # 1 + c2*x2 = 0 forces c2 = 1, x2 = -1; remaining syndromes need odd exponents
    if spec.e % 2 == 0:
        return None
    if spec.with_s_check and spec.s % 2 == 0:
        return None
    return WeightCertificate(2, (1, 2), (1, 1), spec.syndrome_exponents)


def _search_w3_block(ctx, e, with_s, signs, lo, hi):
    q = ctx.q
    c2, c3 = signs
    xs2 = np.arange(lo, hi, dtype=np.int64)
    ones = np.ones(xs2.size, dtype=np.int64)
    t = ctx.vadd(ones, _mulc(ctx, c2, xs2))
    x3 = ctx.neg_np[_mulc(ctx, c3, t)]
    ok = (xs2 != 0) & (xs2 != 1) & (x3 != 0) & (x3 != 1) & (x3 != xs2)
    for r in (e, ctx.s) if with_s else (e,):
        pm = ctx.power_map(r)
        syn = ctx.vadd(ones, ctx.vadd(_mulc(ctx, c2, pm[xs2]), _mulc(ctx, c3, pm[x3])))
        ok &= syn == 0
    hits = np.flatnonzero(ok)
    if hits.size:
        i = int(hits[0])
        return (1, int(xs2[i]), int(x3[i])), (1, c2, c3)
    return None


def _search_w4_block(ctx, e, with_s, signs, lo, hi):
    q = ctx.q
    c2, c3, c4 = signs
    x2 = np.arange(lo, hi, dtype=np.int64)[:, None]
    x3 = np.arange(q, dtype=np.int64)[None, :]
    ones = np.ones((x2.shape[0], q), dtype=np.int64)
    t = ctx.vadd(ones, ctx.vadd(_mulc(ctx, c2, x2), _mulc(ctx, c3, x3)))
    x4 = ctx.neg_np[_mulc(ctx, c4, t)]
    ok = (
        (x2 != 0) & (x2 != 1) & (x3 != 0) & (x3 != 1) & (x3 != x2)
        & (x4 != 0) & (x4 != 1) & (x4 != x2) & (x4 != x3)
    )
    for r in (e, ctx.s) if with_s else (e,):
        pm = ctx.power_map(r)
        syn = ctx.vadd(
            ctx.vadd(ones, _mulc(ctx, c2, pm[x2])),
            ctx.vadd(_mulc(ctx, c3, pm[x3]), _mulc(ctx, c4, pm[x4])),
        )
        ok &= syn == 0
    hits = np.argwhere(ok)
    if hits.size:
        i, j = int(hits[0][0]), int(hits[0][1])
        return (1, lo + i, j, int(x4[i, j])), (1, c2, c3, c4)
    return None


def _mulc_scalar(ctx: FieldContext, c: int, v: int) -> int:
    return v if c == 1 else ctx.neg(v)


def _search_w5_block(ctx, e, with_s, signs, lo, hi):
    # outer loop over x2, grid over (x3, x4), x5 solved from the linear syndrome
    q = ctx.q
    c2, c3, c4, c5 = signs
    x3 = np.arange(q, dtype=np.int64)[:, None]
    x4 = np.arange(q, dtype=np.int64)[None, :]
    base34 = ctx.vadd(_mulc(ctx, c3, x3), _mulc(ctx, c4, x4))
    maps = [ctx.power_map(r) for r in ((e, ctx.s) if with_s else (e,))]
    for x2 in range(lo, hi):
        if x2 in (0, 1):
            continue
        head = ctx.add(1, _mulc_scalar(ctx, c2, x2))
        t = ctx.vadd(np.full((q, q), head, dtype=np.int64), base34)
        x5 = ctx.neg_np[_mulc(ctx, c5, t)]
        ok = (
            (x3 != 0) & (x3 != 1) & (x3 != x2)
            & (x4 != 0) & (x4 != 1) & (x4 != x2) & (x4 != x3)
            & (x5 != 0) & (x5 != 1) & (x5 != x2) & (x5 != x3) & (x5 != x4)
        )
        for pm in maps:
            syn_head = ctx.add(1, _mulc_scalar(ctx, c2, int(pm[x2])))
            syn = ctx.vadd(
                np.full((q, q), syn_head, dtype=np.int64),
                ctx.vadd(
                    ctx.vadd(_mulc(ctx, c3, pm[x3]), _mulc(ctx, c4, pm[x4])),
                    _mulc(ctx, c5, pm[x5]),
                ),
            )
            ok = ok & (syn == 0)
        hits = np.argwhere(ok)
        if hits.size:
            i, j = int(hits[0][0]), int(hits[0][1])
            return (1, x2, i, j, int(x5[i, j])), (1, c2, c3, c4, c5)
    return None


_SEARCHERS = {3: _search_w3_block, 4: _search_w4_block, 5: _search_w5_block}


def _search_tasks(spec: CodeSpec, w: int):
    """Deterministic task order: sign-major, then ascending block of the free range."""
    q = spec.ctx.q
    if w == 3:
        block = q  # single pass is cheap
    elif w == 4:
        block = _block_rows(q)
    else:
        block = max(1, _BLOCK_CELLS // (q * q))
    for signs in product((1, 2), repeat=w - 1):
        for lo in range(0, q, block):
            yield signs, lo, min(lo + block, q)


def _run_task(args):
    m, modulus, e, with_s, w, signs, lo, hi = args
    ctx = get_field(m, F3Poly(modulus))
    return _SEARCHERS[w](ctx, e, with_s, signs, lo, hi)


def weight_w_codeword_exists(
    spec: CodeSpec,
    w: int,
    budget: float | None = None,
    workers: int | None = None,
) -> WeightCertificate | None:
    """Search for a weight-w codeword; return a verified certificate or None.

    The search is exhaustive over the normalized space (x_1 = 1, c_1 = 1,
    sign patterns of c_2..c_w, free positions swept in index order), so None
    means the code has no weight-w word at all.  Raises BudgetExceeded when
    the grid size exceeds the cell budget, UnsupportedWeight for w > 5.
    """
    if w < 1:
        raise ValueError(f"weight must be >= 1, got {w}")
    if w > 5:
        raise UnsupportedWeight(f"normalized search implemented for w <= 5, got {w}")
    if spec.degenerate:
        raise CosetCollision(
            "syndrome search is meaningless for a degenerate spec: " + "; ".join(spec.violations)
        )
    if w == 1:
        return None  # c_1 * 1 = c_1 != 0: no weight-1 word has a zero syndrome
    if w == 2:
        cert = _weight2_certificate(spec)
        if cert is not None and not cert.verify(spec.ctx):
            raise InternalError(f"weight-2 certificate failed re-verification: {cert}")
        return cert

    cost = search_cost(w, spec.m)
    limit = resolve_budget(budget)
    if cost > limit:
        raise BudgetExceeded(
            f"weight-{w} search at m={spec.m} needs {cost} cells, budget is {limit:.0f} "
            f"(raise the budget argument or {BUDGET_ENV_VAR})"
        )

    ctx = spec.ctx
    hit = None
    if workers and workers > 1:
        mod_coeffs = tuple(ctx.modulus.coeffs)
        tasks = [
            (spec.m, mod_coeffs, spec.e, spec.with_s_check, w, signs, lo, hi)
            for signs, lo, hi in _search_tasks(spec, w)
        ]
        with ProcessPoolExecutor(max_workers=workers) as pool:
            futures = [pool.submit(_run_task, t) for t in tasks]
            try:
                for fut in futures:
                    res = fut.result()
                    if res is not None:
                        hit = res
                        break
            finally:
                for fut in futures:
                    fut.cancel()
    else:
        for signs, lo, hi in _search_tasks(spec, w):
            res = _SEARCHERS[w](ctx, spec.e, spec.with_s_check, signs, lo, hi)
            if res is not None:
                hit = res
                break

    if hit is None:
        return None
    xs, cs = hit
    cert = WeightCertificate(w, xs, cs, spec.syndrome_exponents)
    if not cert.verify(ctx):
        raise InternalError(f"search returned a bad certificate: {cert}")
    return cert


def _volume(n: int, t: int) -> int:
    return sum(math.comb(n, i) * 2**i for i in range(t + 1))


def sphere_packing_max_d(n: int, k: int) -> int:
    """Largest d with 3^k * sum_{i<=floor((d-1)/2)} C(n,i) 2^i <= 3^n."""
    if not 1 <= k <= n:
        raise ValueError(f"need 1 <= k <= n, got k={k}, n={n}")
    rhs = 3 ** (n - k)
    t = 0
    while t + 1 <= n and _volume(n, t + 1) <= rhs:
        t += 1
    return 2 * t + 2


def rgss_upper_bound(n: int, d: int) -> int:
    """An exact upper bound on the size of any ternary code of length n, distance d."""
    if not 1 <= d <= n:
        raise ValueError(f"need 1 <= d <= n, got d={d}, n={n}")
    t = n - d + 1
    r = min((n - t) // 2, t - 1)
    if r < 0:
        r = 0
    top = t + 2 * r
    return 3**top // _volume(top, r)


def distance_cap(n: int, k: int) -> tuple[int, str]:
    """Best upper bound on d for an [n, k] ternary code from the two bounds."""
    cap = sphere_packing_max_d(n, k)
    name = "sphere-packing"
    size = 3**k
    while cap > 1 and rgss_upper_bound(n, cap) < size:
        cap -= 1
        name = "rgss"
    return cap, name


@dataclass(frozen=True)
class CodeReport:
    """Everything `analyze` established about one code instance."""

    m: int
    e: int
    with_s_check: bool
    n: int
    k: int
    generator: F3Poly
    d_lower: int
    d_upper: int
    d_exact: int | None
    optimal: bool
    bound_cap: int
    bound_name: str
    certificate: WeightCertificate | None
    searched_weights: tuple[int, ...]
    hypotheses_ok: bool
    notes: tuple[str, ...]
    timings: dict = field(compare=False, default_factory=dict)


def analyze(
    spec: CodeSpec,
    w_max: int = 5,
    budget: float | None = None,
    workers: int | None = None,
) -> CodeReport:
    """Construct the code and certify its minimum distance.

    Weight searches run in increasing w and stop as soon as the lower bound
    from exhausted searches meets the upper bound (bound cap, or a found
    codeword).  The reported d_exact is therefore a theorem about this code,
    not a heuristic: d_lower counts completed exhaustive searches, d_upper
    is a valid bound.
    """
    t0 = time.perf_counter()
    timings: dict[str, float] = {}
    g = generator_polynomial(spec)
    timings["generator"] = time.perf_counter() - t0

    n = spec.n
    k = n - g.degree
    cap, bound_name = distance_cap(n, k)
    notes = list(spec.violations)

    d_lower = 1
    d_upper = cap
    certificate = None
    searched: list[int] = []
    t1 = time.perf_counter()
    if spec.degenerate:
        notes.append("weight searches skipped: generator has repeated factors")
    else:
        for w in range(1, w_max + 1):
            if d_lower >= d_upper:
                break
            cert = weight_w_codeword_exists(spec, w, budget=budget, workers=workers)
            searched.append(w)
            if cert is None:
                d_lower = w + 1
            else:
                certificate = cert
                d_upper = min(d_upper, w)
                break
    timings["search"] = time.perf_counter() - t1

    d_exact = d_lower if d_lower == d_upper else None
    if d_exact is None and certificate is not None:
        raise InternalError("certificate found but bounds disagree")
    optimal = d_exact is not None and d_exact == cap
    timings["total"] = time.perf_counter() - t0
    return CodeReport(
        m=spec.m,
        e=spec.e,
        with_s_check=spec.with_s_check,
        n=n,
        k=k,
        generator=g,
        d_lower=d_lower,
        d_upper=d_upper,
        d_exact=d_exact,
        optimal=optimal,
        bound_cap=cap,
        bound_name=bound_name,
        certificate=certificate,
        searched_weights=tuple(searched),
        hypotheses_ok=spec.hypotheses_ok,
        notes=tuple(notes),
        timings=timings,
    )
