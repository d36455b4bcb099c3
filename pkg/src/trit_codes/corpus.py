"""Pinned reference data: golden generators and a worked-identity corpus.

GOLDEN_CODES records the generator polynomial of every worked code example
as an exact string, so tests and the CLI can compare freshly constructed
generators against fixed data instead of against each other.

run_corpus() replays the algebraic identities behind the condition-family
case analyses in conditions.py: expanding each case polynomial, probing it
with gcd(f, x^(3^i) - x), and factoring it into irreducibles.  Every check
recomputes its left-hand side from scratch through poly3, so a failing
check means the polynomial arithmetic and the recorded case analysis
disagree somewhere.
"""

from dataclasses import dataclass
from functools import lru_cache

from .conditions import case_polynomial
from .poly3 import ONE, X, F3Poly, factorize, frobenius_probe, parse_poly


@dataclass(frozen=True)
class GoldenCode:
    m: int
    e: int
    with_s_check: bool
    generator: str


# (m, e, s-check?) -> generator of the cyclic code, minimal polynomial
# product m_1(x) * m_e(x) [* m_s(x)].  Distance 4 without the s row,
# distance 5 with it.
GOLDEN_CODES: tuple[GoldenCode, ...] = (
    GoldenCode(5, 160, False, "x^10+2x^9+x^8+x^5+x^4+x^3+2x^2+2x+2"),
    GoldenCode(6, 362, False, "x^12+2x^10+x^9+x^8+2x^5+x^4+x^3+2x^2+2"),
    GoldenCode(5, 116, False, "x^10+2x^9+x^8+2x^7+x^6+x^5+x^4+2x^3+2"),
    GoldenCode(5, 128, False, "x^10+2x^8+2x^7+2x^6+x^4+2x^2+x+2"),
    GoldenCode(6, 374, False, "x^12+x^11+2x^10+2x^9+2x^8+x^7+x^6+x^5+2x^2+x+2"),
    GoldenCode(5, 158, False, "x^10+x^9+x^7+x^6+2x^5+x^4+2x^3+2x^2+2"),
    GoldenCode(5, 16, False, "x^10+2x^9+x^8+x^7+x^5+x^4+2x+2"),
    GoldenCode(5, 20, False, "x^10+2x^8+x^7+x^4+x^3+2x+2"),
    GoldenCode(4, 42, True, "x^9+x^8+2x^6+2x^5+x^4+2x^2+2x+2"),
    GoldenCode(6, 374, True, "x^13+2x^12+x^10+x^9+2x^7+2x^6+x^5+2x^3+2"),
    GoldenCode(4, 2, True, "x^9+2x^8+x^6+2x^5+2x^3+2x^2+2x+2"),
    GoldenCode(6, 2, True, "x^13+2x^12+2x^9+2x^8+x^5+x^4+2x^3+x+2"),
    GoldenCode(3, 8, True, "x^7+2x^4+x^3+2x+2"),
    GoldenCode(3, 10, True, "x^7+2x^6+x^4+2x^2+2"),
    GoldenCode(5, 182, True, "x^11+x^9+x^5+x^4+2x^3+2x^2+2"),
    GoldenCode(5, 134, True, "x^11+x^8+x^6+2x^5+2x^4+x^2+x+2"),
    GoldenCode(7, 112, True, "x^15+2x^14+2x^13+2x^11+x^10+x^9+2x^8+x^7+x^5+2x^4+2x^3+x^2+2"),
)


@dataclass(frozen=True)
class CorpusCheck:
    """One recomputed value against its recorded form, both as strings."""

    label: str
    computed: str
    expected: str

    @property
    def ok(self) -> bool:
        return self.computed == self.expected


_SIGN_NAMES = {(1, 1): "(+,+)", (1, -1): "(+,-)", (-1, 1): "(-,+)", (-1, -1): "(-,-)"}


@lru_cache(maxsize=1)
def run_corpus() -> tuple[CorpusCheck, ...]:
    checks: list[CorpusCheck] = []

    def add(label: str, computed: object, expected: str) -> None:
        checks.append(CorpusCheck(label, str(computed), expected))

    def probes(label: str, f: F3Poly, quoted: dict[int, str]) -> None:
        for i, expected in sorted(quoted.items()):
            add(f"{label} probe {i}", frobenius_probe(f, i), expected)

    def case(
        label: str,
        family: str,
        r: int,
        signs: tuple[int, int] | None,
        variant: str,
        expansion: str,
        factored: str,
        quoted_probes: dict[int, str] | None = None,
    ) -> F3Poly:
        f = case_polynomial(family, r, signs, variant)
        add(f"{label} expansion", f, expansion)
        if quoted_probes:
            probes(label, f, quoted_probes)
        add(f"{label} factorization", factorize(f), factored)
        return f

    # --- open-problem family, e = 2(3^(m-1) - 1) ------------------------
    case(
        "open-problem C2",
        "open-problem",
        2,
        None,
        "C2",
        "x^8+x^7+x^5+x^3+x+1",
        "(x+2)^2 (x^3+x^2+x+2) (x^3+2x^2+2x+2)",
        {1: "x+2", 2: "x+2", 3: "x^7+2x^6+2x^5+x^2+x+2"},
    )
    case(
        "open-problem C3",
        "open-problem",
        2,
        None,
        "C3",
        "x^8+x^7+x^5+x^4+x^3+x+1",
        "(x^2+1) (x^3+2x+2) (x^3+x^2+2)",
        {1: "1", 2: "x^2+1", 3: "x^6+x^5+2x^4+2x^2+x+1"},
    )

    # --- family A (e = s - r), r = 2 ------------------------------------
    a2 = {
        (1, 1): ("x^4+2x^3+2x+1", "(x+2)^4", None),
        (1, -1): ("x^4+2x^3+x^2+2x+1", "(x^4+2x^3+x^2+2x+1)", {2: "1"}),
        (-1, 1): ("x^4+2x^3+x^2+x+2", "(x^4+2x^3+x^2+x+2)", None),
        (-1, -1): ("x^4+2x^3+2x^2+x+2", "(x^4+2x^3+2x^2+x+2)", None),
    }
    for signs, (expansion, factored, quoted) in a2.items():
        case(f"A-r2 C2 {_SIGN_NAMES[signs]}", "A-minus-r", 2, signs, "C2",
             expansion, factored, quoted)

    # --- family A, r = 5 -------------------------------------------------
    a5 = {
        (1, 1): (
            "x^10+2x^9+x^8+x^7+2x^6+2x^4+x^3+x^2+2x+1",
            "(x^10+2x^9+x^8+x^7+2x^6+2x^4+x^3+x^2+2x+1)",
            {1: "1", 2: "1", 3: "1", 4: "1", 5: "1"},
        ),
        (1, -1): (
            "x^10+2x^9+x^8+x^7+2x^6+x^5+2x^4+x^3+x^2+2x+1",
            "(x+2)^4 (x^2+1) (x^2+x+2) (x^2+2x+2)",
            {1: "x+2", 2: "x^7+2x^6+x^5+2x^4+x^3+2x^2+x+2", 3: "x+2"},
        ),
        (-1, 1): (
            "x^10+2x^9+x^8+x^7+2x^6+x^5+x^4+2x^3+2x^2+x+2",
            "(x^10+2x^9+x^8+x^7+2x^6+x^5+x^4+2x^3+2x^2+x+2)",
            None,
        ),
        (-1, -1): (
            "x^10+2x^9+x^8+x^7+2x^6+2x^5+x^4+2x^3+2x^2+x+2",
            "(x^10+2x^9+x^8+x^7+2x^6+2x^5+x^4+2x^3+2x^2+x+2)",
            None,
        ),
    }
    for signs, (expansion, factored, quoted) in a5.items():
        case(f"A-r5 C2 {_SIGN_NAMES[signs]}", "A-minus-r", 5, signs, "C2",
             expansion, factored, quoted)

    # --- family B (e = s + r), r = 7 -------------------------------------
    b7 = {
        (1, 1): ("2x^7+x^6+2x^4+2x^3+x+2",
                 "2 (x+1) (x^2+1) (x^4+x^3+x^2+x+1)",
                 {2: "x^3+x^2+x+1"}),
        (1, -1): ("2x^6+x^4+x^3+2x", "2 (x) (x+1) (x+2)^4", None),
        (-1, 1): ("x^6+2x^4+2x^3+x+2", "(x^2+x+2) (x^4+2x^3+x^2+1)", None),
        (-1, -1): ("x^7+2x^6+x^4+x^3+2x", "(x) (x^2+2x+2) (x^4+x^2+2x+1)", None),
    }
    for signs, (expansion, factored, quoted) in b7.items():
        case(f"B-r7 C2 {_SIGN_NAMES[signs]}", "B-plus-r", 7, signs, "C2",
             expansion, factored, quoted)

    # --- family B, r = 10 -------------------------------------------------
    case("B-r10 C2 (+,+)", "B-plus-r", 10, (1, 1), "C2",
         "2x^10+x^9+x+2", "2 (x+2)^10")
    f = case_polynomial("B-plus-r", 10, (1, -1), "C2")
    add("B-r10 C2 (+,-) expansion", f, "2x^9+2x")
    h = parse_poly("x^8+1")
    add("B-r10 C2 (+,-) strip identity", f - (X * h).scale(2), "0")
    probes("B-r10 C2 (+,-) reduced", h, {1: "1", 2: "1", 3: "1"})
    add("B-r10 C2 (+,-) reduced factorization", factorize(h),
        "(x^4+x^2+2) (x^4+2x^2+2)")
    f = case_polynomial("B-plus-r", 10, (-1, 1), "C2")
    add("B-r10 C2 (-,+) expansion", f, "x^9+x+2")
    probes("B-r10 C2 (-,+)", f, {1: "x+1", 2: "x+1", 3: "x+1"})
    q = f // (X + ONE)
    p1 = parse_poly("x^4+x^3+x^2+1")
    p2 = parse_poly("x^4+x^3+2x^2+2x+2")
    add("B-r10 C2 (-,+) quotient identity", q - p1 * p2, "0")
    add("B-r10 C2 (-,+) factorization", factorize(f),
        "(x+1) (x^4+x^3+x^2+1) (x^4+x^3+2x^2+2x+2)")
    case("B-r10 C2 (-,-)", "B-plus-r", 10, (-1, -1), "C2",
         "x^10+2x^9+2x", "(x) (x+1) (x^4+x^2+x+1) (x^4+x^3+x^2+2x+2)")

    # --- family C (e = n - 2r), r = 5 ------------------------------------
    case(
        "C-r5 C2",
        "C-2r",
        5,
        None,
        "C2",
        "x^20+x^19+x^11+x^9+x+1",
        "(x+2)^2 (x^3+x^2+x+2) (x^3+2x^2+2x+2)"
        " (x^6+x^5+2x^3+x^2+2x+1) (x^6+2x^5+x^4+2x^3+x+1)",
        {1: "x+2", 3: "x^7+2x^6+2x^5+x^2+x+2", 5: "x+2"},
    )
    case(
        "C-r5 C3",
        "C-2r",
        5,
        None,
        "C3",
        "x^20+x^19+x^11+x^10+x^9+x+1",
        "(x^3+2x+2) (x^3+x^2+2) (x^4+x^3+x^2+2x+2)"
        " (x^4+x^3+2x^2+2x+2) (x^6+x^5+x^4+x^3+x^2+x+1)",
        {1: "1", 2: "1", 3: "x^6+x^5+2x^4+2x^2+x+1",
         4: "x^8+2x^7+x^6+x^5+x^4+x^3+x^2+2x+1"},
    )

    # --- small exponent e = 16 --------------------------------------------
    q16 = case_polynomial("small-e", 16, None, "C2")
    add("small-e-16 C2 case polynomial", q16, "2x^12+x^9+x^8+x^7+x^5+x^4+x^3+2")
    full = (X + ONE) ** 16 + X**16 + ONE
    add("small-e-16 C2 strip identity", full - (X - ONE) ** 4 * q16, "0")
    f16 = q16.monic()
    probes("small-e-16 C2", f16,
           {1: "1", 2: "x^6+x^4+x^2+1", 3: "x^6+2x^4+2x^3+2x^2+1"})
    add("small-e-16 C2 factorization", factorize(f16),
        "(x^2+1) (x^2+x+2) (x^2+2x+2) (x^3+x^2+x+2) (x^3+2x^2+2x+2)")

    g16 = case_polynomial("small-e", 16, None, "C3")
    add("small-e-16 C3 case polynomial", g16,
        "x^14+2x^12+2x^11+x^9+x^8+x^6+x^5+2x^3+2x^2+1")
    full = (X + ONE) ** 16 - X**16 - ONE
    add("small-e-16 C3 strip identity", full - X * g16, "0")
    probes("small-e-16 C3", g16, {1: "1", 2: "1", 3: "x^6+x^5+2x^4+2x^2+x+1"})
    add("small-e-16 C3 factorization", factorize(g16),
        "(x^3+2x+2) (x^3+x^2+2) (x^8+2x^7+x^6+2x^4+x^2+2x+1)")

    # --- small exponent e = 20 --------------------------------------------
    q20 = case_polynomial("small-e", 20, None, "C2")
    add("small-e-20 C2 case polynomial", q20,
        "2x^18+2x^16+x^15+2x^13+x^12+2x^10+2x^8+x^6+2x^5+x^3+2x^2+2")
    full = (X + ONE) ** 20 + X**20 + ONE
    add("small-e-20 C2 strip identity", full - (X - ONE) ** 2 * q20, "0")
    m20 = q20.monic()
    probes("small-e-20 C2", m20, {2: "1", 4: "1", 6: str(m20)})
    fac = factorize(q20)
    add("small-e-20 C2 unit", fac.unit, "2")
    add("small-e-20 C2 factor degrees", fac.degrees(), "(6, 6, 6)")

    q20 = case_polynomial("small-e", 20, None, "C3")
    add("small-e-20 C3 case polynomial", q20,
        "2x^18+x^17+2x^10+x^9+2x^8+x+2")
    full = (X + ONE) ** 20 - X**20 - ONE
    add("small-e-20 C3 strip identity", full - X * q20, "0")
    probes("small-e-20 C3", q20.monic(),
           {2: "x^2+1", 3: "1", 4: "x^6+x^5+2x^4+2x^3+2x^2+x+1", 5: "1"})
    fac = factorize(q20)
    add("small-e-20 C3 unit", fac.unit, "2")
    add("small-e-20 C3 has x^2+1 factor",
        any(str(p) == "x^2+1" for p, _ in fac.factors), "True")
    add("small-e-20 C3 all factor degrees even",
        all(d % 2 == 0 for d in fac.degrees()), "True")

    return tuple(checks)


def corpus_failures() -> tuple[CorpusCheck, ...]:
    return tuple(c for c in run_corpus() if not c.ok)
