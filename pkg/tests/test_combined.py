"""Shared-spacing chunky decomposition and its heap-plus-grid product."""

import random

import pytest

from adaptpoly import (
    ChunkedSpacedPoly,
    ChunkyPoly,
    CostModel,
    DensePoly,
    EqualSpacedPoly,
    chunky_convert,
    chunky_model_cost,
    chunky_mul,
    chunky_to_output,
    combined_convert,
    combined_model_cost,
    combined_mul,
    es_mul,
    from_chunky,
    make_field,
    space_chunks,
)
from adaptpoly.instances import InstanceSpec, generate
from support import corpus_pair, oracle_product, terms_of

F = make_field(9973)
F97 = make_field(97)
KARA = CostModel(kind="karatsuba")


def test_convert_dense_no_gaps():
    # long consecutive run: the spacing bound drops below 2, degenerate spacing
    f = DensePoly(list(range(1, 41)))
    rep = combined_convert(f, f, KARA)
    assert rep.spacing == 1
    assert len(rep.chunks) == 1
    assert rep.noise.is_zero()


def test_convert_two_spaced_chunks():
    # (1+x^2+x^4) + (1+x^2)x^101: both chunks accept spacing 2 with no noise
    fc = ChunkyPoly([(0, [1, 0, 1, 0, 1]), (101, [1, 0, 1])])
    rep = space_chunks(fc, KARA)
    assert rep.spacing == 2
    assert rep.chunks == [(0, [1, 1, 1]), (101, [1, 1])]
    assert rep.noise.is_zero()


def test_convert_single_chunk_with_off_pattern_term():
    # eight terms, one off the spacing-2 pattern: hoisted into noise
    exps = [0, 2, 4, 6, 8, 10, 12, 13]
    coeffs = [0] * 14
    for e in exps:
        coeffs[e] = 1
    fc = ChunkyPoly([(0, coeffs)])
    rep = space_chunks(fc, KARA)
    assert rep.spacing == 2
    assert rep.noise.terms == [(1, 13)]
    assert rep.chunks == [(0, [1] * 7)]


def test_reconstruction_invariant():
    rng = random.Random(1)
    for idx in range(40):
        f, _ = corpus_pair(idx, max_degree=512)
        if f.is_zero():
            continue
        rep = combined_convert(f, f, KARA)
        assert terms_of(rep) == terms_of(f)
        t = f.term_count()
        assert (1 << rep.noise.term_count()) <= max(t, 1) or rep.spacing == 1


def test_noise_bound_holds():
    rng = random.Random(2)
    for _ in range(40):
        spec = InstanceSpec("combined", seed=rng.randrange(10**6), chunks=3,
                            spacing=3, core_len=10, gap_len=30, noise=2)
        _, f = generate(spec)
        rep = combined_convert(f, f, KARA)
        if rep.spacing > 1:
            assert (1 << rep.noise.term_count()) <= f.term_count()


def test_mul_reduces_to_es_for_single_chunks():
    f = ChunkedSpacedPoly([(3, [1, 2, 3])], 4)
    g = ChunkedSpacedPoly([(0, [5, 6])], 4)
    got = combined_mul(f, g, F97, KARA, target="dense")
    want = es_mul(EqualSpacedPoly([1, 2, 3], 4, 3), EqualSpacedPoly([5, 6], 4, 0), F97)
    assert got == want


def test_mul_reduces_to_chunky_at_spacing_one():
    fc = ChunkyPoly([(0, [1, 1]), (10, [2, 3])])
    gc = ChunkyPoly([(0, [4]), (5, [6, 7])])
    got = combined_mul(from_chunky(fc), from_chunky(gc), F97, KARA, target="dense")
    want = chunky_to_output(chunky_mul(fc, gc, F97, KARA), "dense")
    assert got == want


def test_mul_example_against_oracle():
    coeffs = [0] * 104
    for e in (0, 2, 4, 101, 103):
        coeffs[e] = 1
    f = DensePoly(coeffs)
    g = DensePoly([1, 0, 1])
    rep_f = combined_convert(f, g, KARA)
    rep_g = combined_convert(g, f, KARA)
    out = combined_mul(rep_f, rep_g, F97, KARA, target="dense")
    assert terms_of(out) == oracle_product(f, g, 97)


@pytest.mark.parametrize("target", ["dense", "sparse"])
def test_mul_matches_oracle_across_families(target):
    for idx in range(35):
        f, g = corpus_pair(idx, max_degree=768)
        if f.is_zero() or g.is_zero():
            continue
        rep_f = combined_convert(f, g, KARA)
        rep_g = combined_convert(g, f, KARA)
        out = combined_mul(rep_f, rep_g, F, KARA, target=target)
        assert terms_of(out) == oracle_product(f, g, 9973), idx


def test_mul_zero_operand():
    z = ChunkedSpacedPoly()
    f = ChunkedSpacedPoly([(0, [1, 1])], 2)
    assert combined_mul(z, f, F97, KARA, target="dense").is_zero()
    assert combined_mul(f, z, F97, KARA, target="sparse").is_zero()


def test_spacing_one_cost_equals_chunky_cost():
    rng = random.Random(9)
    for idx in range(20):
        f, g = corpus_pair(idx, max_degree=512)
        if f.is_zero() or g.is_zero():
            continue
        fc = chunky_convert(f, 4, KARA)
        gc = chunky_convert(g, 4, KARA)
        assert combined_model_cost(from_chunky(fc), from_chunky(gc), KARA) == \
            chunky_model_cost(fc, gc, KARA)


def test_cost_not_above_equal_spaced_when_spacings_dominate():
    # conditional non-regression: only claimed when the shared per-operand
    # spacings are at least the whole-polynomial ones
    from adaptpoly import chunky_convert as _cc
    from adaptpoly import es_convert, es_model_cost, optimal_chunk_size

    applicable = 0
    for seed in range(60):
        for kwargs in (dict(family="spaced", spacing=7, core_len=40, noise=2),
                       dict(family="combined", spacing=4, chunks=3, core_len=12,
                            gap_len=50, noise=1)):
            _, f = generate(InstanceSpec(seed=seed, **kwargs))
            _, g = generate(InstanceSpec(seed=seed + 1000, **kwargs))
            k = optimal_chunk_size(f, g, KARA)
            csp_f = space_chunks(_cc(f, k, KARA), KARA)
            csp_g = space_chunks(_cc(g, k, KARA), KARA)
            ef, eg = es_convert(f), es_convert(g)
            if csp_f.spacing >= ef.spacing and csp_g.spacing >= eg.spacing:
                applicable += 1
                assert combined_model_cost(csp_f, csp_g, KARA) <= \
                    es_model_cost(ef, eg, KARA) + 1e-9
    assert applicable > 0


def test_constructor_invariants():
    with pytest.raises(ValueError):
        ChunkedSpacedPoly([(0, [0, 1])], 2)
    with pytest.raises(ValueError):
        # second chunk starts inside the first chunk's span
        ChunkedSpacedPoly([(0, [1, 1]), (2, [1])], 3)
    with pytest.raises(ValueError):
        ChunkedSpacedPoly([], 0)


def test_scan_budget_fallback():
    # ten terms at stride 5: the scan starts at the chunk span and must walk
    # all the way down to 5; a tiny budget gives up and degrades to spacing 1
    core = [0] * 46
    for i in range(10):
        core[5 * i] = 1
    fc = ChunkyPoly([(0, core)])
    assert space_chunks(fc, KARA, scan_budget=3).spacing == 1
    assert space_chunks(fc, KARA).spacing == 5
