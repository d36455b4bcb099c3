"""Dense univariate polynomial arithmetic and factorization over GF(3).

A polynomial is a tuple of coefficients in {0, 1, 2}, ascending by power,
with no trailing zeros.  The canonical string form prints descending powers
with unsigned coefficients ("x^4+2x^3+2"); the parser additionally accepts
"-" as a sign (so "x^4-x^3-1" means the same polynomial) and a bare
comma-separated ascending coefficient list ("2,0,2,1").

Factorization is fully deterministic: squarefree decomposition (taking cube
roots where the derivative vanishes, since f' == 0 over GF(3) forces
f(x) == g(x)^3), then distinct-degree splitting, then equal-degree splitting
driven by a fixed enumeration of test elements instead of random ones.
"""
from __future__ import annotations

from dataclasses import dataclass
import re

from .errors import (
    BothZero,
    ConstantPoly,
    DivisionByZeroPoly,
    InternalError,
    PolyParseError,
    ZeroPoly,
)

_TERM_RE = re.compile(r"^(-?\d*)(x(\^(\d+))?)?$")


class F3Poly:
    """Immutable polynomial over GF(3)."""

    __slots__ = ("coeffs",)

    def __init__(self, coeffs=()):
        cs = [int(c) % 3 for c in coeffs]
        while cs and cs[-1] == 0:
            cs.pop()
        object.__setattr__(self, "coeffs", tuple(cs))

    def __setattr__(self, name, value):
        raise AttributeError("F3Poly is immutable")

    def __reduce__(self):
        # immutability blocks the default slot-based pickling
        return (F3Poly, (self.coeffs,))

    # -- basic queries --

    @property
    def degree(self) -> int:
        """Degree, with the zero polynomial at -1."""
        return len(self.coeffs) - 1

    def is_zero(self) -> bool:
        return not self.coeffs

    def is_one(self) -> bool:
        return self.coeffs == (1,)

    def lead(self) -> int:
        if not self.coeffs:
            raise ZeroPoly("zero polynomial has no leading coefficient")
        return self.coeffs[-1]

    def coeff(self, k: int) -> int:
        return self.coeffs[k] if 0 <= k < len(self.coeffs) else 0

    def is_monic(self) -> bool:
        return bool(self.coeffs) and self.coeffs[-1] == 1

    # -- ring operations --

    def __add__(self, other: "F3Poly") -> "F3Poly":
        a, b = self.coeffs, other.coeffs
        if len(a) < len(b):
            a, b = b, a
        out = list(a)
        for i, c in enumerate(b):
            out[i] = (out[i] + c) % 3
        return F3Poly(out)

    def __neg__(self) -> "F3Poly":
        return F3Poly([(3 - c) % 3 for c in self.coeffs])

    def __sub__(self, other: "F3Poly") -> "F3Poly":
        return self + (-other)

    def __mul__(self, other: "F3Poly") -> "F3Poly":
        a, b = self.coeffs, other.coeffs
        if not a or not b:
            return ZERO
        out = [0] * (len(a) + len(b) - 1)
        for i, ca in enumerate(a):
            if ca == 0:
                continue
            for j, cb in enumerate(b):
                out[i + j] = (out[i + j] + ca * cb) % 3
        return F3Poly(out)

    def scale(self, c: int) -> "F3Poly":
        c %= 3
        return F3Poly([(c * v) % 3 for v in self.coeffs])

    def __pow__(self, k: int) -> "F3Poly":
        if k < 0:
            raise ValueError("negative polynomial power")
        result, base = ONE, self
        while k:
            if k & 1:
                result = result * base
            base = base * base
            k >>= 1
        return result

    def shift(self, k: int) -> "F3Poly":
        """Multiply by x^k."""
        if self.is_zero():
            return ZERO
        return F3Poly((0,) * k + self.coeffs)

    def __divmod__(self, other: "F3Poly"):
        return poly_divmod(self, other)

    def __floordiv__(self, other: "F3Poly") -> "F3Poly":
        return poly_divmod(self, other)[0]

    def __mod__(self, other: "F3Poly") -> "F3Poly":
        return poly_divmod(self, other)[1]

    def monic(self) -> "F3Poly":
        lc = self.lead()
        return self if lc == 1 else self.scale(lc)  # inverse of 2 is 2

    def derivative(self) -> "F3Poly":
        return F3Poly([(k * c) % 3 for k, c in enumerate(self.coeffs)][1:])

    def cube_root(self) -> "F3Poly":
        """Inverse of the Frobenius cube: valid only when f(x) == g(x)^3 == g(x^3)."""
        if any(c and k % 3 for k, c in enumerate(self.coeffs)):
            raise InternalError("cube_root of a polynomial outside GF(3)[x^3]")
        return F3Poly(self.coeffs[::3])  # cube root of each trit is itself

    def evaluate(self, x: int) -> int:
        """Horner evaluation at a GF(3) point."""
        acc = 0
        for c in reversed(self.coeffs):
            acc = (acc * x + c) % 3
        return acc

    # -- protocol plumbing --

    def __eq__(self, other) -> bool:
        return isinstance(other, F3Poly) and self.coeffs == other.coeffs

    def __hash__(self) -> int:
        return hash(self.coeffs)

    def __str__(self) -> str:
        return poly_to_str(self)

    def __repr__(self) -> str:
        return f"F3Poly({poly_to_str(self)!r})"


ZERO = F3Poly()
ONE = F3Poly([1])
X = F3Poly([0, 1])


def poly_to_str(p: F3Poly) -> str:
    if p.is_zero():
        return "0"
    terms = []
    for k in range(p.degree, -1, -1):
        c = p.coeffs[k]
        if c == 0:
            continue
        if k == 0:
            terms.append(str(c))
        else:
            var = "x" if k == 1 else f"x^{k}"
            terms.append(var if c == 1 else f"2{var}")
    return "+".join(terms)


def parse_poly(text: str) -> F3Poly:
    """Parse canonical, signed, or ascending-CSV polynomial notation."""
    s = text.strip().replace("−", "-").replace("*", "").replace(" ", "")
    if not s:
        raise PolyParseError("empty polynomial string")
    if "," in s:
        try:
            return F3Poly([int(t) for t in s.split(",")])
        except ValueError as exc:
            raise PolyParseError(f"bad coefficient list {text!r}") from exc
    coeffs: dict[int, int] = {}
    for term in s.replace("-", "+-").split("+"):
        if not term:
            continue
        m = _TERM_RE.match(term)
        if not m or (not m.group(1) and not m.group(2)):
            raise PolyParseError(f"bad term {term!r} in {text!r}")
        raw = m.group(1)
        if raw in ("", "-"):
            coeff = -1 if raw == "-" else 1
        else:
            coeff = int(raw)
        if m.group(2) is None:
            power = 0
        elif m.group(4) is None:
            power = 1
        else:
            power = int(m.group(4))
        coeffs[power] = coeffs.get(power, 0) + coeff
    out = [0] * (max(coeffs) + 1 if coeffs else 1)
    for k, v in coeffs.items():
        out[k] = v % 3
    return F3Poly(out)


def poly_divmod(f: F3Poly, g: F3Poly) -> tuple[F3Poly, F3Poly]:
    if g.is_zero():
        raise DivisionByZeroPoly("polynomial division by zero")
    if f.degree < g.degree:
        return ZERO, f
    inv_lead = g.lead()  # in GF(3), every nonzero element is its own inverse
    rem = list(f.coeffs)
    quo = [0] * (f.degree - g.degree + 1)
    gc = g.coeffs
    for k in range(len(quo) - 1, -1, -1):
        c = (rem[k + g.degree] * inv_lead) % 3
        if c:
            quo[k] = c
            for i, gi in enumerate(gc):
                rem[k + i] = (rem[k + i] - c * gi) % 3
    return F3Poly(quo), F3Poly(rem[: g.degree])


def gcd(f: F3Poly, g: F3Poly) -> F3Poly:
    """Monic greatest common divisor."""
    if f.is_zero() and g.is_zero():
        raise BothZero("gcd(0, 0) is undefined")
    while not g.is_zero():
        f, g = g, f % g
    return f.monic()


def powmod(base: F3Poly, k: int, mod: F3Poly) -> F3Poly:
    """base**k reduced mod `mod`; k may be a large integer (e.g. 3^i)."""
    if mod.is_zero():
        raise DivisionByZeroPoly("powmod modulus is zero")
    if k < 0:
        raise ValueError("negative exponent in powmod")
    result = ONE % mod
    base = base % mod
    while k:
        if k & 1:
            result = (result * base) % mod
        base = (base * base) % mod
        k >>= 1
    return result


def frobenius_probe(f: F3Poly, i: int) -> F3Poly:
    """gcd(f, x^(3^i) - x), computed without materializing x^(3^i).

    The result is the product of the distinct irreducible factors of f whose
    degree divides i, so repeated factors of f show up exactly once.
    """
    if f.is_zero():
        raise ZeroPoly("frobenius_probe of the zero polynomial")
    if i < 1:
        raise ValueError("probe index must be >= 1")
    xq = powmod(X, 3**i, f)
    return gcd(f, xq - (X % f))


def is_irreducible(f: F3Poly) -> bool:
    """True iff f has no factor of degree <= deg(f)/2 (so degree >= 1 required)."""
    if f.degree < 1:
        raise ConstantPoly("irreducibility is undefined for constants")
    if f.degree == 1:
        return True
    fm = f.monic()
    h = X % fm
    for _ in range(f.degree // 2):
        h = powmod(h, 3, fm)
        if gcd(fm, h - X).degree > 0:
            return False
    return True


def has_root_in_gf3m(f: F3Poly, m: int) -> bool:
    """True iff f has a root in GF(3^m), i.e. an irreducible factor of degree dividing m."""
    return frobenius_probe(f, m).degree >= 1


# -- factorization pipeline --


def _squarefree(f: F3Poly) -> list[tuple[F3Poly, int]]:
    """Squarefree decomposition of monic f: pairwise-coprime parts with multiplicities."""
    out: list[tuple[F3Poly, int]] = []
    if f.degree < 1:
        return out
    fp = f.derivative()
    if fp.is_zero():
        # all exponents divisible by 3: f is a perfect cube
        for g, k in _squarefree(f.cube_root()):
            out.append((g, 3 * k))
        return out
    c = gcd(f, fp)
    w = f // c
    i = 1
    while not w.is_one():
        y = gcd(w, c)
        z = w // y
        if not z.is_one():
            out.append((z, i))
        w = y
        c = c // y
        i += 1
    if not c.is_one():
        # what remains of the repeated part is a perfect cube
        for g, k in _squarefree(c.cube_root()):
            out.append((g, 3 * k))
    return out


def _distinct_degree(f: F3Poly) -> list[tuple[F3Poly, int]]:
    """Split monic squarefree f into (product of irreducible factors of degree d, d)."""
    out: list[tuple[F3Poly, int]] = []
    v = f
    h = X % v
    d = 0
    while v.degree >= 2 * (d + 1):
        d += 1
        h = powmod(h, 3, v)
        g = gcd(v, h - X)
        if g.degree > 0:
            out.append((g, d))
            v = v // g
            h = h % v
    if v.degree > 0:
        out.append((v, v.degree))
    return out


def _packed_to_poly(j: int) -> F3Poly:
    digits = []
    while j:
        digits.append(j % 3)
        j //= 3
    return F3Poly(digits)


def _equal_degree_split(g: F3Poly, d: int) -> tuple[F3Poly, F3Poly]:
    """Split monic squarefree g whose factors all have degree d < deg(g).

    Deterministic Cantor-Zassenhaus: enumerate test polynomials in packed
    base-3 order; h^((3^d-1)/2) mod each factor is 0 or +-1, and any h whose
    residues are not all equal yields a proper gcd split.
    """
    half = (3**d - 1) // 2
    limit = 3 ** (g.degree + 2)
    j = 3  # first non-constant polynomial is x
    while j < limit:
        h = _packed_to_poly(j)
        j += 1
        if h.degree < 1:
            continue
        w = gcd(g, h)
        if 0 < w.degree < g.degree:
            return w, g // w
        t = powmod(h, half, g)
        w = gcd(g, t - ONE)
        if 0 < w.degree < g.degree:
            return w, g // w
    raise InternalError(f"equal-degree split failed for {g} at degree {d}")


def _equal_degree(g: F3Poly, d: int) -> list[F3Poly]:
    out: list[F3Poly] = []
    stack = [g]
    while stack:
        h = stack.pop()
        if h.degree == d:
            out.append(h)
        else:
            stack.extend(_equal_degree_split(h, d))
    return out


@dataclass(frozen=True)
class Factorization:
    """unit * product(poly^mult); factors are monic irreducible, canonically ordered."""

    unit: int
    factors: tuple[tuple[F3Poly, int], ...]

    def expand(self) -> F3Poly:
        out = ONE.scale(self.unit)
        for p, k in self.factors:
            out = out * p**k
        return out

    def __str__(self) -> str:
        parts = [] if self.unit == 1 and self.factors else [str(self.unit)]
        for p, k in self.factors:
            parts.append(f"({p})" if k == 1 else f"({p})^{k}")
        return " ".join(parts) if parts else str(self.unit)

    def degrees(self) -> tuple[int, ...]:
        return tuple(p.degree for p, k in self.factors for _ in range(k))


def _factor_key(p: F3Poly):
    # order quoted in worked computations: by degree, then descending-power coefficients
    return (p.degree, tuple(reversed(p.coeffs)))


def factorize(f: F3Poly) -> Factorization:
    if f.is_zero():
        raise ZeroPoly("cannot factor the zero polynomial")
    if f.degree == 0:
        return Factorization(f.coeffs[0], ())
    unit = f.lead()
    counts: dict[F3Poly, int] = {}
    for part, mult in _squarefree(f.monic()):
        for prod, d in _distinct_degree(part):
            for q in _equal_degree(prod, d):
                counts[q] = counts.get(q, 0) + mult
    factors = tuple(sorted(counts.items(), key=lambda kv: _factor_key(kv[0])))
    result = Factorization(unit, factors)
    if result.expand() != f:
        raise InternalError(f"factorization of {f} failed to reconstruct")
    return result
