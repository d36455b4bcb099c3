import random

import pytest
from oracles import brute_force_weight_exists, valid_exponents

from trit_codes import codes
from trit_codes.corpus import GOLDEN_CODES
from trit_codes.errors import BudgetExceeded, CosetCollision, UnsupportedWeight
from trit_codes.field import get_field
from trit_codes.poly3 import X, parse_poly


def test_minimal_polynomial_of_alpha_is_the_modulus(ctx5):
    assert codes.minimal_polynomial(ctx5, 1) == ctx5.modulus


def test_minimal_polynomial_properties(ctx4):
    from trit_codes.cosets import coset_of

    for e in (1, 2, 4, 8, 14, 40):
        p = codes.minimal_polynomial(ctx4, e)
        assert p.is_monic()
        assert p.degree == coset_of(4, e).size
        assert ctx4.evaluate_poly(p, ctx4.exp(e)) == 0


def test_minimal_polynomial_of_s_is_x_plus_one(ctx5):
    # alpha^s = -1 for s = (3^m - 1) / 2
    assert codes.minimal_polynomial(ctx5, ctx5.s) == parse_poly("x+1")


def test_generator_divides_whole_space(ctx5):
    spec = codes.CodeSpec(ctx5, 160)
    g = codes.generator_polynomial(spec)
    assert g.degree == 2 * 5
    assert ((X**242 - X**0) % g).is_zero()
    spec_s = codes.CodeSpec(ctx5, 160, with_s_check=True)
    assert codes.generator_polynomial(spec_s).degree == 2 * 5 + 1


def test_spec_rejects_coset_collision(ctx5):
    with pytest.raises(CosetCollision):
        codes.CodeSpec(ctx5, 3)  # 3 is in the coset of 1
    with pytest.raises(CosetCollision):
        codes.CodeSpec(ctx5, ctx5.s, with_s_check=True)
    forced = codes.CodeSpec(ctx5, 3, force=True)
    assert forced.degenerate and not forced.hypotheses_ok


def test_spec_small_coset_is_soft_violation(ctx4):
    spec = codes.CodeSpec(ctx4, 10)  # |C_10| = 2 < 4
    assert not spec.degenerate
    assert not spec.hypotheses_ok


def test_search_cost_model():
    assert codes.search_cost(2, 6) == 0
    assert codes.search_cost(3, 5) == 4 * 3**5
    assert codes.search_cost(4, 6) == 8 * 3**12
    assert codes.search_cost(5, 7) == 16 * 3**21


def test_weight_search_finds_certified_word(ctx5):
    spec = codes.CodeSpec(ctx5, 160)
    assert codes.weight_w_codeword_exists(spec, 2) is None
    assert codes.weight_w_codeword_exists(spec, 3) is None
    cert = codes.weight_w_codeword_exists(spec, 4)
    assert cert is not None and cert.weight == 4
    assert cert.verify(ctx5)
    assert len(set(cert.positions(ctx5))) == 4


def test_weight_search_bad_inputs(ctx3):
    spec = codes.CodeSpec(ctx3, 4)
    with pytest.raises(ValueError):
        codes.weight_w_codeword_exists(spec, 0)
    with pytest.raises(UnsupportedWeight):
        codes.weight_w_codeword_exists(spec, 6)
    with pytest.raises(BudgetExceeded):
        codes.weight_w_codeword_exists(spec, 4, budget=10)
    with pytest.raises(CosetCollision):
        codes.weight_w_codeword_exists(codes.CodeSpec(ctx3, 3, force=True), 3)


def test_worker_partitioning_is_deterministic(ctx4):
    spec = codes.CodeSpec(ctx4, 4, with_s_check=True)
    serial = codes.weight_w_codeword_exists(spec, 4)
    parallel = codes.weight_w_codeword_exists(spec, 4, workers=3)
    assert serial == parallel


def test_bounds_literals():
    assert codes.sphere_packing_max_d(242, 232) == 4
    # d = 5 and d = 6 share t = 2, so packing alone cannot exclude 6;
    # the rgss bound is what brings the s-code cap down to 5
    assert codes.sphere_packing_max_d(80, 71) == 6
    # fewer codewords allowed at d = 6 than the s-code has: that gap is
    # exactly what certifies d <= 5 at dimension n - 2m - 1
    assert codes.rgss_upper_bound(26, 6) == 677289056
    assert codes.rgss_upper_bound(26, 6) < 3**19
    assert codes.distance_cap(242, 232) == (4, "sphere-packing")
    assert codes.distance_cap(242, 231) == (5, "rgss")


def test_rgss_monotone_in_d():
    prev = None
    for d in range(2, 10):
        val = codes.rgss_upper_bound(80, d)
        if prev is not None:
            assert val <= prev
        prev = val


def test_analyze_certifies_golden_distance_m3_m4():
    for g in GOLDEN_CODES:
        if g.m > 4:
            continue
        ctx = get_field(g.m)
        rep = codes.analyze(codes.CodeSpec(ctx, g.e, with_s_check=g.with_s_check))
        want = 5 if g.with_s_check else 4
        assert rep.d_exact == want
        assert rep.optimal
        assert str(rep.generator) == g.generator
        assert rep.k == rep.n - rep.generator.degree


def test_analyze_respects_budget(ctx5):
    with pytest.raises(BudgetExceeded):
        codes.analyze(codes.CodeSpec(ctx5, 160), budget=1)


def test_analyze_reports_non_optimal(ctx4):
    rep = codes.analyze(codes.CodeSpec(ctx4, 8, with_s_check=True))
    assert rep.d_exact == 3
    assert not rep.optimal
    assert rep.certificate is not None and rep.certificate.weight == 3


@pytest.mark.parametrize("e,with_s", [(4, False), (4, True), (14, True), (7, False)])
def test_search_agrees_with_brute_force_m3(e, with_s, ctx3):
    spec = codes.CodeSpec(ctx3, e, with_s_check=with_s)
    for w in (2, 3, 4):
        got = codes.weight_w_codeword_exists(spec, w) is not None
        want = brute_force_weight_exists(ctx3, spec.syndrome_exponents, w)
        assert got == want, (e, with_s, w)


def test_search_agrees_with_brute_force_m4_sample(ctx4):
    rng = random.Random(314)
    for e in rng.sample(valid_exponents(4), 3):
        spec = codes.CodeSpec(ctx4, e)
        for w in (2, 3, 4):
            got = codes.weight_w_codeword_exists(spec, w) is not None
            want = brute_force_weight_exists(ctx4, spec.syndrome_exponents, w)
            assert got == want, (e, w)
