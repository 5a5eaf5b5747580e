"""Shared test oracles and instance helpers.

The multiplication oracle is a direct term-by-term expansion, independent
of every library code path; a numpy convolution variant covers the
high-volume dense cases. Exact chunk counts t(k) come from the greedy
minimal covering by width-k windows, and the chunky-conversion oracle
enumerates every gap subset.
"""

from __future__ import annotations

import random
from bisect import bisect_left

import numpy as np

from adaptpoly import (
    ChunkedSpacedPoly,
    ChunkyPoly,
    DensePoly,
    EqualSpacedPoly,
    SparsePoly,
)
from adaptpoly.instances import InstanceSpec, generate


def terms_of(poly) -> list:
    """Canonical [(coeff, exp)] view of any representation."""
    if isinstance(poly, DensePoly):
        return [(c, e) for e, c in enumerate(poly.coeffs) if c != 0]
    if isinstance(poly, SparsePoly):
        return list(poly.terms)
    if isinstance(poly, ChunkyPoly):
        return [(c, off + i) for off, cs in poly.chunks for i, c in enumerate(cs) if c != 0]
    if isinstance(poly, EqualSpacedPoly):
        terms = dict()
        for i, c in enumerate(poly.core):
            if c != 0:
                terms[poly.shift + i * poly.spacing] = c
        for c, e in poly.noise.terms:
            terms[e] = c
        return [(terms[e], e) for e in sorted(terms)]
    if isinstance(poly, ChunkedSpacedPoly):
        terms = dict()
        for off, core in poly.chunks:
            for i, c in enumerate(core):
                if c != 0:
                    terms[off + i * poly.spacing] = c
        for c, e in poly.noise.terms:
            terms[e] = c
        return [(terms[e], e) for e in sorted(terms)]
    raise TypeError(f"unsupported poly type: {type(poly)}")


def oracle_mul_terms(terms_a, terms_b, p: int) -> list:
    """Brute-force O(t_a * t_b) expansion; the reference for all products."""
    acc: dict = {}
    for ca, ea in terms_a:
        for cb, eb in terms_b:
            e = ea + eb
            acc[e] = (acc.get(e, 0) + ca * cb) % p
    return [(acc[e], e) for e in sorted(acc) if acc[e] != 0]


def oracle_mul_dense(ca: list, cb: list, p: int) -> list:
    """Dense expansion oracle via direct integer convolution."""
    if not ca or not cb:
        return []
    if min(len(ca), len(cb)) * (p - 1) ** 2 >= 2**63:
        out: dict = {}
        for i, a in enumerate(ca):
            for j, b in enumerate(cb):
                out[i + j] = (out.get(i + j, 0) + a * b) % p
        return [out.get(i, 0) for i in range(len(ca) + len(cb) - 1)]
    conv = np.convolve(np.asarray(ca, dtype=np.int64), np.asarray(cb, dtype=np.int64))
    return (conv % p).tolist()


def oracle_product(f, g, p: int) -> list:
    """Oracle product of two polys as canonical terms."""
    return oracle_mul_terms(terms_of(f), terms_of(g), p)


def greedy_chunk_count(exps: list, k: int) -> int:
    """Exact minimal number of chunks of length <= k covering the exponents.

    Left-to-right greedy: start a chunk at the first uncovered exponent and
    take every exponent within the next k positions; optimal for this
    interval-covering objective.
    """
    count = 0
    i = 0
    t = len(exps)
    while i < t:
        count += 1
        i = bisect_left(exps, exps[i] + k, i + 1)
    return count


def eq6_exact(f_exps: list, g_exps: list, k: int, model) -> float:
    """t(k) * s(k) * k * delta(k) with exact greedy chunk counts."""
    return greedy_chunk_count(f_exps, k) * greedy_chunk_count(g_exps, k) * k * model.delta(k)


def min_gap_subset_cost(f, k: int, model) -> float:
    """Minimum chunk_cost over all 2^m subsets of the gaps of f."""
    from adaptpoly.chunky import gap_profile

    prof = gap_profile(f)
    a, d = prof.gaps, prof.prefix
    m = prof.gap_count
    starts = [d[i] + a[i] for i in range(m + 1)]
    dk = model.delta(k)

    def cost_of(length: int) -> float:
        return dk * length if length >= k else k * model.delta(length)

    best = float("inf")
    for mask in range(1 << m):
        boundaries = [0] + [i for i in range(1, m + 1) if mask & (1 << (i - 1))]
        total = 0.0
        for s, gi in enumerate(boundaries):
            end = d[boundaries[s + 1]] if s + 1 < len(boundaries) else d[-1]
            total += cost_of(end - starts[gi])
        if total < best:
            best = total
    return best


def brute_best_spacing(exps: list):
    """Largest k in [2, n] leaving at most log2(t) exponents off one residue
    class, or None; the log2 test is the exact-integer form 2^|S| <= t."""
    t = len(exps)
    n = exps[-1]
    if n < 2:
        return None
    E = np.asarray(exps, dtype=np.int64)
    ks = np.arange(2, n + 1, dtype=np.int64)
    R = E[:, None] % ks[None, :]
    R.sort(axis=0)
    run = np.ones(ks.size, dtype=np.int64)
    best = np.ones(ks.size, dtype=np.int64)
    for r in range(1, t):
        eq = R[r] == R[r - 1]
        run = np.where(eq, run + 1, 1)
        best = np.maximum(best, run)
    noise = t - best
    ok = noise <= t.bit_length() - 1  # 2^noise <= t for integers
    idx = np.nonzero(ok)[0]
    if idx.size == 0:
        return None
    return int(ks[idx[-1]])


def random_gappy_dense(rng: random.Random, max_gaps: int, max_len: int, p: int = 97) -> DensePoly:
    """Dense polynomial with at most max_gaps zero runs and length <= max_len."""
    m = rng.randrange(0, max_gaps + 1)
    runs = []
    total = 0
    a0 = rng.randrange(0, 3)
    runs.append(("gap", a0))
    total += a0
    for i in range(m + 1):
        b = rng.randrange(1, 6)
        runs.append(("block", b))
        total += b
        if i < m:
            a = rng.randrange(1, 6)
            runs.append(("gap", a))
            total += a
    if total > max_len:
        return random_gappy_dense(rng, max_gaps, max_len, p)
    coeffs = []
    for kind, ln in runs:
        if kind == "gap":
            coeffs.extend([0] * ln)
        else:
            coeffs.extend(rng.randrange(1, p) for _ in range(ln))
    return DensePoly(coeffs)


# --- structured instance corpus -------------------------------------------

FAMILY_CYCLE = ("random-dense", "random-sparse", "chunky", "spaced", "combined")


def corpus_spec(idx: int, p: int = 9973, max_degree: int = 4096) -> InstanceSpec:
    """Deterministic spec for corpus instance idx, cycling the five families."""
    fam = FAMILY_CYCLE[idx % len(FAMILY_CYCLE)]
    rng = random.Random(0xC0FFEE ^ idx)
    scale = rng.choice((64, 64, 128, 128, 256, 256, 512, 1024, 2048, max_degree))
    if fam == "random-dense":
        return InstanceSpec(fam, p=p, seed=idx, degree=rng.randrange(scale // 2, scale))
    if fam == "random-sparse":
        deg = rng.randrange(scale // 2, scale)
        return InstanceSpec(fam, p=p, seed=idx, degree=deg,
                            terms=max(1, rng.randrange(1, max(2, scale // 8))))
    if fam == "chunky":
        chunks = rng.randrange(1, 9)
        chunk_len = max(1, rng.randrange(1, max(2, scale // (4 * chunks))))
        gap_len = max(1, rng.randrange(1, max(2, scale // max(1, chunks))))
        return InstanceSpec(fam, p=p, seed=idx, chunks=chunks, chunk_len=chunk_len,
                            gap_len=gap_len, jitter=0.5)
    if fam == "spaced":
        spacing = rng.choice((2, 3, 4, 7, 10, 16))
        core_len = max(2, scale // spacing // 2)
        noise = rng.randrange(0, max(1, core_len.bit_length() - 1))
        return InstanceSpec(fam, p=p, seed=idx, spacing=spacing, core_len=core_len,
                            noise=noise)
    spacing = rng.choice((2, 3, 4, 5))
    chunks = rng.randrange(1, 5)
    core_len = max(2, scale // (spacing * chunks * 2))
    gap_len = rng.randrange(1, scale // 2 + 2)
    noise = rng.randrange(0, 3)
    return InstanceSpec(fam, p=p, seed=idx, spacing=spacing, chunks=chunks,
                        core_len=core_len, gap_len=gap_len, noise=noise)


def corpus_pair(idx: int, p: int = 9973, max_degree: int = 4096):
    """Operand pair for corpus instance idx; some operands are re-typed sparse."""
    spec_a = corpus_spec(2 * idx, p, max_degree)
    spec_b = corpus_spec(2 * idx + 1, p, max_degree)
    _, fa = generate(spec_a)
    _, fb = generate(spec_b)
    from adaptpoly import to_sparse

    if idx % 7 == 3 and isinstance(fa, DensePoly):
        fa = to_sparse(fa)
    if idx % 11 == 5 and isinstance(fb, DensePoly):
        fb = to_sparse(fb)
    return fa, fb
