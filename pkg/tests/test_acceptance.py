"""End-to-end acceptance checks, one test per shipped claim.

Each test prints a single PASS line with its timing (visible under -s or
-rA); the assertion message is the FAIL line otherwise.  Everything here
runs single-threaded so the timings are comparable across machines; worker
fan-out is exercised by the unit suites instead.
"""

import itertools
import math
import random
import time

from oracles import brute_force_weight_exists, valid_exponents
from trit_codes import codes
from trit_codes.conditions import check_conditions, cross_validate, family_exponent
from trit_codes.corpus import GOLDEN_CODES, run_corpus
from trit_codes.cosets import all_cosets, coset_of
from trit_codes.errors import TritCodesError
from trit_codes.families import solve_congruence_e
from trit_codes.field import get_field
from trit_codes.planar import is_apn, is_pn
from trit_codes.poly3 import F3Poly, ONE, X, factorize, is_irreducible


def test_01_golden_generators_reproduce_byte_exactly():
    t0 = time.perf_counter()
    for g in GOLDEN_CODES:
        ctx = get_field(g.m)
        spec = codes.CodeSpec(ctx, g.e, with_s_check=g.with_s_check)
        got = str(codes.generator_polynomial(spec))
        assert got == g.generator, (
            f"FAIL criterion 1: m={g.m} e={g.e} s={g.with_s_check} "
            f"got {got!r}, want {g.generator!r}"
        )
    dt = time.perf_counter() - t0
    assert dt < 1.0, f"FAIL criterion 1: {dt:.2f}s exceeds 1s"
    print(f"ACCEPTANCE 01 PASS golden generators ({len(GOLDEN_CODES)}/17 exact, {dt:.2f}s)")


def test_02_parameter_certification_all_golden_codes():
    t0 = time.perf_counter()
    small = [g for g in GOLDEN_CODES if g.m <= 5]
    large = [g for g in GOLDEN_CODES if g.m > 5]
    for g in small + large:
        ctx = get_field(g.m)
        spec = codes.CodeSpec(ctx, g.e, with_s_check=g.with_s_check)
        rep = codes.analyze(spec)
        claimed = 5 if g.with_s_check else 4
        assert rep.d_exact == claimed, (
            f"FAIL criterion 2: m={g.m} e={g.e} s={g.with_s_check} "
            f"d_exact={rep.d_exact}, claimed {claimed}"
        )
        assert rep.optimal, f"FAIL criterion 2: m={g.m} e={g.e} not optimal"
        assert rep.n == 3**g.m - 1 and rep.k == rep.n - rep.generator.degree
        if g.m <= 5:
            small_dt = time.perf_counter() - t0
    assert small_dt < 30.0, f"FAIL criterion 2: m<=5 batch took {small_dt:.1f}s"
    dt = time.perf_counter() - t0
    assert dt < 150.0, f"FAIL criterion 2: {dt:.1f}s exceeds 2.5 min"
    print(
        f"ACCEPTANCE 02 PASS parameter certification "
        f"({len(small)} codes m<=5 in {small_dt:.1f}s, m=6/7 done by {dt:.1f}s)"
    )


def test_03_factorization_corpus_reproduces():
    run_corpus.cache_clear()
    t0 = time.perf_counter()
    checks = run_corpus()
    dt = time.perf_counter() - t0
    bad = [c for c in checks if not c.ok]
    assert len(checks) >= 20, f"FAIL criterion 3: only {len(checks)} corpus checks"
    assert not bad, f"FAIL criterion 3: {len(bad)} mismatches, first: {bad[0].label}"
    assert dt < 1.0, f"FAIL criterion 3: {dt:.2f}s exceeds 1s"
    print(f"ACCEPTANCE 03 PASS factorization corpus ({len(checks)} checks, {dt:.2f}s)")


def test_04_condition_iff_sweep_through_m9():
    t0 = time.perf_counter()
    for m in range(3, 10):
        ctx = get_field(m)
        e = 2 * (3 ** (m - 1) - 1)
        verdict = check_conditions(ctx, e)
        expect = m in (5, 7)
        assert verdict.passed == expect, (
            f"FAIL criterion 4: m={m} e={e} passed={verdict.passed}, expected {expect}"
        )
    dt = time.perf_counter() - t0
    assert dt < 30.0, f"FAIL criterion 4: {dt:.1f}s exceeds 30s"
    print(f"ACCEPTANCE 04 PASS condition iff-sweep m=3..9 (pass set {{5,7}}, {dt:.2f}s)")


def test_05_pn_apn_spectra():
    t0 = time.perf_counter()
    for m in range(2, 8):
        assert is_pn(get_field(m), 2), f"FAIL criterion 5: x^2 not PN at m={m}"
    for m in range(2, 7):
        ctx = get_field(m)
        n = 3**m - 1
        for h in range(1, 7):
            r = (3**h + 1) % n
            expect = (m // math.gcd(m, h)) % 2 == 1
            assert is_pn(ctx, r) == expect, (
                f"FAIL criterion 5: x^(3^{h}+1) at m={m} (r={r}) PN != {expect}"
            )
    # odd h in the same h <= 6 window; the exponent family needs gcd(m, h) = 1
    for m in range(2, 7):
        ctx = get_field(m)
        n = 3**m - 1
        for h in (1, 3, 5):
            if math.gcd(m, h) != 1:
                continue
            r = ((3**h + 1) // 2) % n
            assert is_pn(ctx, r), (
                f"FAIL criterion 5: x^((3^{h}+1)/2) at m={m} (r={r}) not PN"
            )
    for m in (5, 7):
        r = (3**m - 3) // 2
        assert is_apn(get_field(m), r), f"FAIL criterion 5: x^{r} at m={m} not APN"
    dt = time.perf_counter() - t0
    assert dt < 60.0, f"FAIL criterion 5: {dt:.1f}s exceeds 1 min"
    print(f"ACCEPTANCE 05 PASS PN/APN spectra (square, two-power, half, APN; {dt:.2f}s)")


def test_06_distance_bound_instantiations():
    t0 = time.perf_counter()
    for m in range(2, 8):
        n = 3**m - 1
        lhs = codes.rgss_upper_bound(n, 6)
        rhs = 3 ** (3**m - 2 * m - 2)
        assert lhs < rhs, f"FAIL criterion 6: rgss({n},6)={lhs} not < 3^{3**m - 2*m - 2}"
    for m in range(3, 8):
        n = 3**m - 1
        cap = codes.sphere_packing_max_d(n, n - 2 * m)
        assert cap == 4, f"FAIL criterion 6: sphere_packing_max_d({n},{n - 2*m})={cap}"
    dt = time.perf_counter() - t0
    assert dt < 1.0, f"FAIL criterion 6: {dt:.2f}s exceeds 1s"
    print(f"ACCEPTANCE 06 PASS bound instantiations (rgss m=2..7, sphere m=3..7, {dt:.2f}s)")


def test_07_normalized_search_matches_brute_force():
    rng = random.Random(20260814)
    t0 = time.perf_counter()
    tried = 0
    for m in (3, 4):
        ctx = get_field(m)
        for e in rng.sample(valid_exponents(m), 10):
            spec = codes.CodeSpec(ctx, e)
            for w in (1, 2, 3, 4):
                cert = codes.weight_w_codeword_exists(spec, w)
                brute = brute_force_weight_exists(ctx, spec.syndrome_exponents, w)
                assert (cert is not None) == brute, (
                    f"FAIL criterion 7: m={m} e={e} w={w} "
                    f"search={'hit' if cert else 'miss'} brute={'hit' if brute else 'miss'}"
                )
            tried += 1
    dt = time.perf_counter() - t0
    assert dt < 120.0, f"FAIL criterion 7: {dt:.1f}s exceeds 2 min"
    print(f"ACCEPTANCE 07 PASS oracle equivalence ({tried} exponents, w<=4, {dt:.2f}s)")


def test_08_cross_validation_over_proven_catalog():
    catalog = [
        ("open-problem", 2),
        ("A-minus-r", 2),
        ("A-minus-r", 5),
        ("B-plus-r", 7),
        ("B-plus-r", 10),
        ("C-2r", 5),
        ("small-e", 16),
        ("small-e", 20),
    ]
    t0 = time.perf_counter()
    ran = 0
    for family, r in catalog:
        for m in range(2, 7):
            try:
                family_exponent(family, r, m)
            except TritCodesError:
                continue  # e.g. e=16 reduces to 0 mod 3^2-1
            assert cross_validate(get_field(m), family, r), (
                f"FAIL criterion 8: routes disagree for {family} r={r} m={m}"
            )
            ran += 1
    dt = time.perf_counter() - t0
    assert ran >= 38, f"FAIL criterion 8: only {ran} applicable combinations"
    assert dt < 30.0, f"FAIL criterion 8: {dt:.1f}s exceeds 30s"
    print(f"ACCEPTANCE 08 PASS cross-validation ({ran} family/r/m combinations, {dt:.2f}s)")


def test_09_congruence_solver():
    t0 = time.perf_counter()
    for m in range(3, 8):
        n = 3**m - 1
        for r in range(2, n, 2):
            if math.gcd(r, n) != 2:
                continue
            tau = r % m
            sols = solve_congruence_e(m, r, tau)
            assert len(sols) == 2, f"FAIL criterion 9: m={m} r={r} gave {sols}"
            assert sols[1] - sols[0] == n // 2, f"FAIL criterion 9: m={m} r={r} spacing"
            for e in sols:
                assert e * r % n == 2 * 3**tau % n, f"FAIL criterion 9: m={m} r={r} e={e}"
    assert 112 in solve_congruence_e(7, 20, 3), "FAIL criterion 9: e=112 not reproduced"
    assert 182 in solve_congruence_e(5, 4, 0), "FAIL criterion 9: e=182 not reproduced"
    assert 134 in solve_congruence_e(5, 56, 0), "FAIL criterion 9: e=134 not reproduced"
    dt = time.perf_counter() - t0
    assert dt < 1.0, f"FAIL criterion 9: {dt:.2f}s exceeds 1s"
    print(f"ACCEPTANCE 09 PASS congruence solver (two solutions, 112/182/134, {dt:.2f}s)")


def test_10_property_suites():
    rng = random.Random(101)
    failures = 0

    for m in (2, 3, 5):
        ctx = get_field(m)
        q = 3**m
        for _ in range(150):
            a, b, c = rng.randrange(q), rng.randrange(q), rng.randrange(q)
            failures += ctx.add(a, b) != ctx.add(b, a)
            failures += ctx.add(ctx.add(a, b), c) != ctx.add(a, ctx.add(b, c))
            failures += ctx.mul(a, ctx.add(b, c)) != ctx.add(ctx.mul(a, b), ctx.mul(a, c))
            failures += ctx.add(a, ctx.neg(a)) != 0
            if a:
                failures += ctx.mul(a, ctx.inv(a)) != 1
            failures += ctx.pow(ctx.add(a, b), 3) != ctx.add(ctx.pow(a, 3), ctx.pow(b, 3))

    for _ in range(150):
        coeffs = [rng.randrange(3) for _ in range(rng.randrange(1, 12))]
        coeffs.append(rng.randrange(1, 3))
        f = F3Poly(coeffs)
        fac = factorize(f)
        failures += fac.expand() != f
        for p, _mult in fac.factors:
            failures += not (p.is_monic() and is_irreducible(p))

    for n in (1, 2, 3):
        prod = ONE
        for d in range(1, n + 1):
            if n % d:
                continue
            for tail in itertools.product(range(3), repeat=d):
                p = F3Poly(list(tail) + [1])
                if is_irreducible(p):
                    prod = prod * p
        failures += prod != X ** (3**n) - X

    for m in range(2, 7):
        n = 3**m - 1
        cosets = all_cosets(3, m)
        seen = list(itertools.chain.from_iterable(c.members for c in cosets))
        failures += sorted(seen) != list(range(n))
        for c in cosets:
            failures += c.leader != min(c.members)
            failures += any(j * 3 % n not in c.members for j in c.members)
        failures += len(coset_of(m, 1).members) != m

    assert failures == 0, f"FAIL criterion 10: {failures} property violations"
    print("ACCEPTANCE 10 PASS property suites (field, factorization, product identity, cosets)")
