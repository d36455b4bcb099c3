import time

from trit_codes import codes
from trit_codes.corpus import GOLDEN_CODES, corpus_failures, run_corpus
from trit_codes.field import get_field


def test_corpus_is_large_and_green():
    checks = run_corpus()
    assert len(checks) >= 20
    assert corpus_failures() == ()


def test_corpus_labels_are_unique():
    labels = [c.label for c in run_corpus()]
    assert len(labels) == len(set(labels))


def test_corpus_is_fast():
    run_corpus()  # warm the cache-independent parts (fields, etc.)
    t0 = time.perf_counter()
    run_corpus.cache_clear()
    run_corpus()
    assert time.perf_counter() - t0 < 1.0


def test_golden_table_shape():
    assert len(GOLDEN_CODES) == 17
    assert len({(g.m, g.e, g.with_s_check) for g in GOLDEN_CODES}) == 17
    for g in GOLDEN_CODES:
        want_degree = 2 * g.m + (1 if g.with_s_check else 0)
        assert g.generator.startswith(f"x^{want_degree}")


def test_golden_generators_reconstruct():
    for g in GOLDEN_CODES:
        ctx = get_field(g.m)
        spec = codes.CodeSpec(ctx, g.e, with_s_check=g.with_s_check)
        assert str(codes.generator_polynomial(spec)) == g.generator
