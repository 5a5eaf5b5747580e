"""Strategy selection façade: cross-strategy agreement, costs, reports."""

import random

import pytest

from adaptpoly import (
    CostModel,
    DensePoly,
    SparsePoly,
    explain,
    make_field,
    multiply,
    to_sparse,
)
from support import corpus_pair, oracle_product, terms_of

F = make_field(9973)
F97 = make_field(97)


def test_zero_operand_short_circuits():
    f = DensePoly([1, 2])
    out, rep = multiply(f, DensePoly(), F97)
    assert out.is_zero() and rep.trivial
    assert explain(rep) == "trivial: zero operand\n"
    out, rep = multiply(SparsePoly(), to_sparse(f), F97)
    assert isinstance(out, SparsePoly) and out.is_zero()


def test_auto_picks_sparse_for_two_far_terms():
    f = DensePoly([1] + [0] * 99 + [1])
    out, rep = multiply(f, f, F97, "auto", CostModel(kind="schoolbook"))
    assert rep.strategy == "sparse"
    assert terms_of(out) == [(1, 0), (2, 100), (1, 200)]


def test_output_kind_follows_inputs():
    d = DensePoly([1, 1])
    s = to_sparse(d)
    assert isinstance(multiply(d, d, F97)[0], DensePoly)
    assert isinstance(multiply(d, s, F97)[0], SparsePoly)
    assert isinstance(multiply(s, d, F97)[0], SparsePoly)
    assert isinstance(multiply(s, s, F97)[0], SparsePoly)


@pytest.mark.parametrize("strategy", ["dense", "sparse", "chunky", "equal-spaced",
                                      "combined", "auto"])
def test_strategies_agree_with_oracle(strategy):
    rng = random.Random(hash(strategy) & 0xFFFF)
    for idx in range(25):
        f, g = corpus_pair(idx, max_degree=512)
        if f.is_zero() or g.is_zero():
            continue
        if strategy == "equal-spaced" and not (
            isinstance(f, DensePoly) and isinstance(g, DensePoly)
        ):
            continue
        out, rep = multiply(f, g, F, strategy)
        assert terms_of(out) == oracle_product(f, g, 9973), (strategy, idx)
        if strategy != "auto":
            assert rep.strategy == strategy


def test_equal_spaced_requires_dense_inputs():
    s = SparsePoly([(1, 0), (1, 7)])
    with pytest.raises(ValueError):
        multiply(s, s, F97, "equal-spaced")


def test_unknown_strategy_rejected():
    with pytest.raises(ValueError):
        multiply(DensePoly([1]), DensePoly([1]), F97, "fft")


def test_auto_cost_never_above_dense_or_sparse():
    for idx in range(40):
        f, g = corpus_pair(idx, max_degree=1024)
        if f.is_zero() or g.is_zero():
            continue
        _, rep = multiply(f, g, F, "auto")
        chosen = rep.costs[rep.strategy]
        assert chosen <= rep.costs["dense"]
        assert chosen <= rep.costs["sparse"]


def test_combined_cost_never_above_chunky():
    for idx in range(40):
        f, g = corpus_pair(idx, max_degree=1024)
        if f.is_zero() or g.is_zero():
            continue
        _, rep = multiply(f, g, F, "combined")
        assert rep.costs["combined"] <= rep.costs["chunky"]


def test_report_deterministic():
    f, g = corpus_pair(4, max_degree=512)
    _, r1 = multiply(f, g, F, "auto")
    _, r2 = multiply(f, g, F, "auto")
    assert r1 == r2
    assert explain(r1) == explain(r2)


def test_explain_golden_dense_choice():
    f = DensePoly([1, 2, 3, 4])
    _, rep = multiply(f, f, F97, "auto", CostModel(kind="schoolbook"))
    text = explain(rep)
    assert text == (
        "strategy: dense (requested auto)\n"
        "output representation: dense\n"
        "model costs:\n"
        "  dense: 16 <-- chosen\n"
        "  sparse: 16\n"
        "  chunky: 16\n"
        "  equal-spaced: 16\n"
        "  combined: 16\n"
        "chunk size: 1\n"
        "spacing: f=2 g=2 (noise 2/2)\n"
        "measured: mul=16 add=9\n"
    )


def test_report_kv_lines():
    f = DensePoly([1, 2, 3, 4])
    _, rep = multiply(f, f, F97, "dense", CostModel(kind="schoolbook"))
    kv = rep.to_kv()
    assert "strategy=dense" in kv
    assert any(line.startswith("cost.dense=") for line in kv)
    assert any(line.startswith("mul_count=") for line in kv)


def test_forced_dense_on_huge_sparse_raises_capacity():
    from adaptpoly import CapacityError

    s = SparsePoly([(1, 0), (1, 10**7)])
    with pytest.raises(CapacityError):
        multiply(s, s, F97, "dense", CostModel(cap=1000))


def test_auto_avoids_infeasible_dense():
    s = SparsePoly([(1, 0), (1, 10**7)])
    out, rep = multiply(s, s, F97, "auto", CostModel(cap=1000))
    assert rep.costs["dense"] == float("inf")
    assert rep.strategy != "dense"
    assert terms_of(out) == oracle_product(s, s, 97)
