"""GF(3^m) arithmetic over exp/log tables, 2 <= m <= 13.

Elements are packed base-3 integers: the element c_0 + c_1*a + ... +
c_{m-1}*a^(m-1) (a the residue of x) is stored as sum(c_i * 3^i), so 0, 1, 2
are the base-field constants and 3 is a itself.  The defining polynomial must
be primitive, which makes a a generator of the multiplicative group and the
discrete log table total on nonzero elements.

Alongside the scalar operations the context carries numpy tables (digit
matrix, negation, power maps) used by the exhaustive sweeps elsewhere in the
package; those routines stay exact because every table entry is an integer.
"""
from __future__ import annotations

import math

import numpy as np

from . import poly3
from .errors import (
    DegreeMismatch,
    InternalError,
    NotIrreducible,
    NotPrimitive,
    ZeroToNonpositivePower,
)
from .poly3 import F3Poly, parse_poly

# Defining polynomials used when the caller does not supply one.  For
# 3 <= m <= 7 these are the conventional choices this package's reference
# outputs are stated in; changing them changes generator polynomial strings.
DEFAULT_MODULI = {
    2: "x^2+x+2",
    3: "x^3+2x+1",
    4: "x^4+2x^3+2",
    5: "x^5+2x+1",
    6: "x^6+2x^4+x^2+2x+2",
    7: "x^7+2x^2+1",
}

M_MAX = 13  # exp/log tables are 3^m entries; 3^13 is the largest we allow


def _prime_factors(n: int) -> list[int]:
    out = []
    d = 2
    while d * d <= n:
        if n % d == 0:
            out.append(d)
            while n % d == 0:
                n //= d
        d += 1
    if n > 1:
        out.append(n)
    return out


def _is_primitive(f: F3Poly, m: int) -> bool:
    """Order of x modulo f equals 3^m - 1 (f must already be irreducible)."""
    n = 3**m - 1
    if poly3.powmod(poly3.X, n, f) != poly3.ONE:
        return False
    return all(poly3.powmod(poly3.X, n // p, f) != poly3.ONE for p in _prime_factors(n))


def default_modulus(m: int) -> F3Poly:
    """Curated defining polynomial, or the packed-order smallest primitive one."""
    if m in DEFAULT_MODULI:
        return parse_poly(DEFAULT_MODULI[m])
    for packed in range(3**m, 2 * 3**m):  # monic: leading digit 1
        digits = []
        v = packed
        while v:
            digits.append(v % 3)
            v //= 3
        f = F3Poly(digits)
        if f.coeff(0) == 0:  # x | f, reducible
            continue
        if poly3.is_irreducible(f) and _is_primitive(f, m):
            return f
    raise InternalError(f"no primitive polynomial found for m={m}")


class FieldContext:
    """Immutable handle to GF(3^m); build with build_field()."""

    def __init__(self, m: int, modulus: F3Poly, exp_list: list[int]):
        self.m = m
        self.q = 3**m
        self.n = self.q - 1
        self.s = self.n // 2
        self.modulus = modulus
        self.pow3 = np.power(3, np.arange(m), dtype=np.int64)
        self.exp_np = np.asarray(exp_list, dtype=np.int64)
        log = np.full(self.q, -1, dtype=np.int64)
        log[self.exp_np] = np.arange(self.n, dtype=np.int64)
        self.log_np = log
        vals = np.arange(self.q, dtype=np.int64)
        self.dig = ((vals[:, None] // self.pow3[None, :]) % 3).astype(np.uint8)
        self.neg_np = ((3 - self.dig) % 3 @ self.pow3).astype(np.int64)
        eta = np.zeros(self.q, dtype=np.int64)
        eta[self.exp_np] = 1 - 2 * (np.arange(self.n, dtype=np.int64) & 1)
        self.eta_np = eta
        self._power_maps: dict[int, np.ndarray] = {}
        self._minpoly_cache: dict[int, F3Poly] = {}

    # -- scalar operations (plain python ints in, plain ints out) --

    def exp(self, i: int) -> int:
        return int(self.exp_np[i % self.n])

    def log(self, a: int) -> int:
        if a == 0:
            raise ZeroDivisionError("log(0) is undefined")
        return int(self.log_np[a])

    def add(self, a: int, b: int) -> int:
        return int((self.dig[a] + self.dig[b]) % 3 @ self.pow3)

    def neg(self, a: int) -> int:
        return int(self.neg_np[a])

    def sub(self, a: int, b: int) -> int:
        return self.add(a, int(self.neg_np[b]))

    def mul(self, a: int, b: int) -> int:
        if a == 0 or b == 0:
            return 0
        return int(self.exp_np[(int(self.log_np[a]) + int(self.log_np[b])) % self.n])

    def inv(self, a: int) -> int:
        if a == 0:
            raise ZeroDivisionError("inverse of 0")
        return int(self.exp_np[(-int(self.log_np[a])) % self.n])

    def pow(self, a: int, k: int) -> int:
        """a**k with 0**0 == 1; 0**k is an error for k < 0 and 0 for k > 0."""
        if a == 0:
            if k == 0:
                return 1
            if k < 0:
                raise ZeroToNonpositivePower(f"0**{k} is undefined")
            return 0
        return int(self.exp_np[(int(self.log_np[a]) * k) % self.n])

    def eta(self, a: int) -> int:
        """Quadratic character: 0 at 0, +1 on even log (squares), -1 on odd."""
        return int(self.eta_np[a])

    # -- element encoding --

    def from_coeffs(self, coeffs) -> int:
        cs = list(coeffs)
        if len(cs) > self.m:
            raise ValueError("coefficient vector longer than m")
        return sum((int(c) % 3) * 3**i for i, c in enumerate(cs))

    def coeffs_of(self, a: int) -> tuple[int, ...]:
        return tuple(int(d) for d in self.dig[a])

    def element_str(self, a: int) -> str:
        if a == 0:
            return "0"
        i = int(self.log_np[a])
        return "1" if i == 0 else ("a" if i == 1 else f"a^{i}")

    def evaluate_poly(self, p: F3Poly, a: int) -> int:
        """Evaluate a GF(3)[x] polynomial at a field element (Horner)."""
        acc = 0
        for c in reversed(p.coeffs):
            acc = self.add(self.mul(acc, a), c)
        return acc

    # -- vectorized kernels --

    def vadd(self, u, v):
        """Packed addition on numpy arrays (broadcasting); exact digit arithmetic."""
        return (self.dig[u] + self.dig[v]) % 3 @ self.pow3

    def power_map(self, r: int) -> np.ndarray:
        """Table of x -> x**r for every packed x (r >= 1)."""
        if r < 1:
            raise ValueError("power_map needs r >= 1")
        r %= self.n
        tab = self._power_maps.get(r)
        if tab is None:
            tab = np.zeros(self.q, dtype=np.int64)
            idx = np.arange(self.n, dtype=np.int64)
            tab[self.exp_np] = self.exp_np[(idx * r) % self.n]
            tab.setflags(write=False)
            self._power_maps[r] = tab
        return tab

    def find_roots(self, p: F3Poly) -> list[int]:
        """All packed roots of a GF(3)[x] polynomial in this field, ascending."""
        if p.is_zero():
            raise poly3.ZeroPoly("every element is a root of 0")
        xs = np.arange(self.q, dtype=np.int64)
        acc = np.zeros(self.q, dtype=np.int64)
        for c in reversed(p.coeffs):
            lu = self.log_np[acc]
            prod = self.exp_np[(lu + self.log_np[xs]) % self.n]
            prod[(acc == 0) | (xs == 0)] = 0
            acc = self.vadd(prod, c)
        return [int(x) for x in np.nonzero(acc == 0)[0]]

    def __repr__(self) -> str:
        return f"FieldContext(m={self.m}, modulus={self.modulus})"


def build_field(m: int, defining_poly: F3Poly | str | None = None) -> FieldContext:
    """Construct GF(3^m), validating degree, irreducibility, and primitivity."""
    if not 2 <= m <= M_MAX:
        raise ValueError(f"m must be in [2, {M_MAX}], got {m}")
    if defining_poly is None:
        f = default_modulus(m)
    elif isinstance(defining_poly, str):
        f = parse_poly(defining_poly)
    else:
        f = defining_poly
    if f.degree != m:
        raise DegreeMismatch(f"defining polynomial has degree {f.degree}, need {m}")
    if not f.is_monic():
        f = f.monic()
    if not poly3.is_irreducible(f):
        raise NotIrreducible(f"{f} is reducible over GF(3)")

    # fill the exp table by repeated multiplication with a; early return to 1
    # means the order of x divides a proper divisor of 3^m - 1
    q = 3**m
    n = q - 1
    red = [(-c) % 3 for c in f.coeffs[:m]]  # x^m == sum(red_i x^i)
    cur = [1] + [0] * (m - 1)
    exp_list = [0] * n
    for i in range(n):
        packed = 0
        for j in range(m - 1, -1, -1):
            packed = packed * 3 + cur[j]
        if packed == 1 and i > 0:
            raise NotPrimitive(f"x has order {i} < {n} modulo {f}")
        exp_list[i] = packed
        top = cur[m - 1]
        nxt = [(top * red[0]) % 3] + [(cur[j - 1] + top * red[j]) % 3 for j in range(1, m)]
        cur = nxt
    if cur != [1] + [0] * (m - 1):
        raise InternalError("exp table did not close after 3^m - 1 steps")
    return FieldContext(m, f, exp_list)


_FIELD_CACHE: dict[tuple[int, tuple[int, ...] | None], FieldContext] = {}


def get_field(m: int, defining_poly: F3Poly | str | None = None) -> FieldContext:
    """Cached build_field: contexts are read-only, so sharing them is safe."""
    if isinstance(defining_poly, str):
        defining_poly = parse_poly(defining_poly)
    key = (m, defining_poly.coeffs if defining_poly is not None else None)
    ctx = _FIELD_CACHE.get(key)
    if ctx is None:
        ctx = build_field(m, defining_poly)
        _FIELD_CACHE[key] = ctx
    return ctx


def quadratic_character(ctx: FieldContext, a: int) -> int:
    return ctx.eta(a)
