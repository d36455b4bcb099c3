"""Differential spectra of power maps x -> x^r on GF(3^m).

For each a != 0 the sweep counts solutions of (x+a)^r - x^r = b over all b,
giving the histogram {solution count -> number of (a, b) pairs}.  A map is
planar (PN) when every count is 1 and almost perfect nonlinear (APN) when the
maximum count is 2.  The sweep is exhaustive, 3^m * (3^m - 1) evaluations.
"""
from __future__ import annotations

from dataclasses import dataclass
from math import gcd as int_gcd
from typing import NamedTuple

import numpy as np

from .errors import InternalError
from .field import FieldContext


@dataclass(frozen=True)
class DifferentialSpectrum:
    m: int
    exponent: int
    max_count: int
    histogram: tuple[tuple[int, int], ...]  # (solution count, frequency), ascending

    def histogram_dict(self) -> dict[int, int]:
        return dict(self.histogram)

    @property
    def is_pn(self) -> bool:
        return self.max_count == 1

    @property
    def is_apn(self) -> bool:
        return self.max_count == 2


def differential_spectrum(ctx: FieldContext, r: int) -> DifferentialSpectrum:
    if r < 1:
        raise ValueError("exponent must be >= 1")
    q, n = ctx.q, ctx.n
    pm = ctx.power_map(r)
    xs = np.arange(q, dtype=np.int64)
    px = pm[xs]
    neg_px = ctx.neg_np[px]
    hist = np.zeros(q + 1, dtype=np.int64)
    max_count = 0
    for a in range(1, q):
        b = ctx.vadd(pm[ctx.vadd(xs, a)], neg_px)
        counts = np.bincount(b, minlength=q)
        hist[: counts.max() + 1] += np.bincount(counts)
        max_count = max(max_count, int(counts.max()))
    pairs = [(int(c), int(f)) for c, f in enumerate(hist) if f]
    total = sum(c * f for c, f in pairs)
    if total != q * n:
        raise InternalError("differential spectrum mass check failed")
    return DifferentialSpectrum(ctx.m, r, max_count, tuple(pairs))


def is_pn(ctx: FieldContext, r: int) -> bool:
    spec = differential_spectrum(ctx, r)
    if spec.is_pn and (r % ctx.n) % 2 != 0:
        # a PN exponent is necessarily even (x^r and (-x)^r would otherwise
        # collide on every difference); tripping this means a table bug
        raise InternalError(f"PN verdict for odd exponent {r}")
    return spec.is_pn


def is_apn(ctx: FieldContext, r: int) -> bool:
    return differential_spectrum(ctx, r).is_apn


class PnFamily(NamedTuple):
    kind: str  # "square" | "kasami" | "coulter-matthews"
    h: int | None


def known_pn_family(m: int, r: int) -> PnFamily | None:
    """Match r against the cataloged PN monomial shapes on GF(3^m).

    Shapes: x^2; x^(3^h+1) with m/gcd(m,h) odd; x^((3^h+1)/2) with gcd(m,h)=1
    and h odd.  Comparison is modulo 3^m - 1 (x^r as a function only depends on
    r mod 3^m - 1), and h ranges over 1..2m, past which the shapes repeat.
    """
    n = 3**m - 1
    rr = r % n
    if rr == 2 % n:
        return PnFamily("square", None)
    for h in range(1, 2 * m + 1):
        if (3**h + 1) % n == rr and (m // int_gcd(m, h)) % 2 == 1:
            return PnFamily("kasami", h)
    for h in range(1, 2 * m + 1, 2):
        if int_gcd(m, h) == 1 and ((3**h + 1) // 2) % n == rr:
            return PnFamily("coulter-matthews", h)
    return None
