"""Chunky decomposition whose chunks share one spacing parameter per operand.

Conversion runs the chunky pipeline first, then scans spacings downward
(from the smallest per-chunk bound) with an independent majority pass per
chunk, accepting the largest spacing whose total off-progression count
stays within log2 of the operand's term count; rejected terms are hoisted
into one shared sparse noise polynomial. Multiplication drives chunk pairs
through the same heap order as chunky multiplication but computes each
inner product on the sub-product grid of the two spacings, accumulating at
absolute output positions.
"""

from __future__ import annotations

import heapq
from collections import Counter
from math import gcd

from adaptpoly.chunky import ChunkyPoly, chunky_convert, optimal_chunk_size
from adaptpoly.cost import CostModel
from adaptpoly.errors import CapacityError
from adaptpoly.eqspaced import (
    _cell_lengths,
    _majority_residue,
    grid_accumulate,
    k_bound,
)
from adaptpoly.poly import DensePoly, SparsePoly, sparse_mul

DEFAULT_SCAN_BUDGET = 4096


class ChunkedSpacedPoly:
    """Chunks (offset, core) sharing one spacing, plus shared sparse noise."""

    __slots__ = ("chunks", "spacing", "noise")

    def __init__(self, chunks=(), spacing: int = 1, noise: SparsePoly | None = None):
        noise = noise if noise is not None else SparsePoly()
        if spacing < 1:
            raise ValueError("spacing must be positive")
        cs = [(int(off), list(core)) for off, core in chunks]
        reach = -1
        for off, core in cs:
            if not core or core[0] == 0 or core[-1] == 0:
                raise ValueError("chunk core must start and end with nonzero coefficients")
            if off <= reach:
                raise ValueError("chunks must be disjoint and ordered")
            reach = off + (len(core) - 1) * spacing
        self.chunks = cs
        self.spacing = spacing
        self.noise = noise

    def is_zero(self) -> bool:
        return not self.chunks and self.noise.is_zero()

    @property
    def degree(self) -> int:
        d = -1
        if self.chunks:
            off, core = self.chunks[-1]
            d = off + (len(core) - 1) * self.spacing
        if self.noise.terms:
            d = max(d, self.noise.degree)
        return d

    def term_count(self) -> int:
        return sum(1 for _, core in self.chunks for c in core if c != 0) + self.noise.term_count()

    def chunk_terms(self) -> list:
        """The chunk part expanded to absolute (coeff, exponent) terms."""
        k = self.spacing
        return [
            (c, off + i * k)
            for off, core in self.chunks
            for i, c in enumerate(core)
            if c != 0
        ]

    def __repr__(self):
        return (
            f"ChunkedSpacedPoly(chunks={self.chunks!r}, spacing={self.spacing}, "
            f"noise={self.noise.terms!r})"
        )


def _span(core: list, spacing: int) -> int:
    return (len(core) - 1) * spacing + 1


def from_chunky(fc: ChunkyPoly) -> ChunkedSpacedPoly:
    """Spacing-1 view of a chunky polynomial (empty noise)."""
    out = ChunkedSpacedPoly()
    out.chunks = [(off, list(coeffs)) for off, coeffs in fc.chunks]
    out.spacing = 1
    out.noise = SparsePoly()
    return out


def space_chunks(fc: ChunkyPoly, model: CostModel | None = None,
                 scan_budget: int = DEFAULT_SCAN_BUDGET) -> ChunkedSpacedPoly:
    """Detect one shared spacing across all chunks of a chunky polynomial.

    Chunks with a single term fit any spacing and are excluded from the
    scan bound. The downward scan examines at most scan_budget candidate
    values; on exhaustion (or when nothing of spacing >= 2 qualifies) the
    result degrades to the spacing-1 view.
    """
    total_terms = fc.term_count()
    chunk_exps = [[i for i, c in enumerate(coeffs) if c != 0] for _, coeffs in fc.chunks]
    multi = [exps for exps in chunk_exps if len(exps) >= 2]
    if not multi:
        return from_chunky(fc)
    k_init = min(k_bound(len(exps), len(fc.chunks[i][1]))
                 for i, exps in enumerate(chunk_exps) if len(exps) >= 2)
    accepted = None
    k = k_init
    examined = 0
    while k >= 2 and examined < scan_budget:
        total_noise = 0
        ok = True
        for exps in multi:
            d = _majority_residue(exps, k)
            total_noise += sum(1 for e in exps if e % k != d)
            if (1 << total_noise) > total_terms:
                ok = False
                break
        if ok:
            accepted = k
            break
        k -= 1
        examined += 1
    if accepted is None:
        return from_chunky(fc)

    k = accepted
    new_chunks = []
    noise_terms = []
    for (off, coeffs), exps in zip(fc.chunks, chunk_exps):
        d = _majority_residue(exps, k)
        members = [e for e in exps if e % k == d]
        rel0 = members[0]
        core = [0] * ((members[-1] - rel0) // k + 1)
        for e in members:
            core[(e - rel0) // k] = coeffs[e]
        new_chunks.append((off + rel0, core))
        noise_terms.extend((coeffs[e], off + e) for e in exps if e % k != d)
    noise = SparsePoly()
    noise.terms = noise_terms
    out = ChunkedSpacedPoly()
    out.chunks = new_chunks
    out.spacing = k
    out.noise = noise
    return out


def combined_convert(f, co_operand, model: CostModel | None = None,
                     scan_budget: int = DEFAULT_SCAN_BUDGET) -> ChunkedSpacedPoly:
    """Full conversion of f for multiplication against co_operand."""
    if f.is_zero():
        raise ValueError("cannot convert the zero polynomial")
    model = model if model is not None else CostModel()
    k_chunk = optimal_chunk_size(f, co_operand, model)
    return space_chunks(chunky_convert(f, k_chunk, model), model, scan_budget)


def combined_model_cost(f: ChunkedSpacedPoly, g: ChunkedSpacedPoly, model: CostModel) -> float:
    """Modeled ring ops: sub-product grids per chunk pair plus noise crosses."""
    k, ell = f.spacing, g.spacing
    s = k * ell // gcd(k, ell)
    total = 0.0
    lens_f = Counter(len(core) for _, core in f.chunks)
    lens_g = Counter(len(core) for _, core in g.chunks)
    cell_cost_cache: dict = {}
    for lf, cf in lens_f.items():
        for lg, cg in lens_g.items():
            key = (lf, lg)
            cost = cell_cost_cache.get(key)
            if cost is None:
                cost = 0.0
                for a in _cell_lengths(lf, s // k):
                    if a == 0:
                        continue
                    for b in _cell_lengths(lg, s // ell):
                        if b:
                            cost += model.mult_cost(a, b)
                cell_cost_cache[key] = cost
            total += cf * cg * cost
    tf_core = sum(1 for _, core in f.chunks for c in core if c != 0)
    tg_core = sum(1 for _, core in g.chunks for c in core if c != 0)
    nf = f.noise.term_count()
    ng = g.noise.term_count()
    return total + tf_core * ng + tg_core * nf + nf * ng


def combined_mul(f: ChunkedSpacedPoly, g: ChunkedSpacedPoly, field,
                 model: CostModel | None = None, target: str = "dense"):
    """Exact product; heap-ordered chunk pairs with grid inner products.

    Dense target accumulates straight into one absolute-position buffer.
    Sparse target keeps one active region buffer that is flushed to terms
    whenever the next chunk-pair offset jumps past its reach; the noise
    cross products are merged in afterwards.
    """
    model = model if model is not None else CostModel()
    if target not in ("dense", "sparse"):
        raise ValueError(f"unknown target kind: {target!r}")
    if f.is_zero() or g.is_zero():
        return DensePoly() if target == "dense" else SparsePoly()
    out_len = f.degree + g.degree + 1
    if target == "dense" and out_len > model.cap:
        raise CapacityError(f"product length {out_len} exceeds cap {model.cap}")
    p = field.p
    k, ell = f.spacing, g.spacing
    fch, gch = f.chunks, g.chunks
    if len(fch) < len(gch):
        fch, gch, k, ell = gch, fch, ell, k
    t, s = len(fch), len(gch)

    region_terms: list = []
    dense_out = [0] * out_len if target == "dense" else None
    dense_stamps = [0] * out_len if target == "dense" else None

    if t and s:
        heap = [(fch[0][0] + gch[j][0], 0, j) for j in range(1, s)]
        if t >= 2:
            heap.append((fch[1][0] + gch[0][0], 1, 0))
        heapq.heapify(heap)
        serial = 1
        if target == "dense":
            grid_accumulate(dense_out, dense_stamps, serial,
                            fch[0][1], k, gch[0][1], ell, fch[0][0] + gch[0][0], field, model)
            while heap:
                exp, i, j = heapq.heappop(heap)
                serial += 1
                grid_accumulate(dense_out, dense_stamps, serial,
                                fch[i][1], k, gch[j][1], ell, exp, field, model)
                if i + 1 < t:
                    heapq.heappush(heap, (fch[i + 1][0] + gch[j][0], i + 1, j))
        else:
            base = fch[0][0] + gch[0][0]
            reach = _span(fch[0][1], k) + _span(gch[0][1], ell) - 1
            acc = [0] * reach
            stamps = [0] * reach
            grid_accumulate(acc, stamps, serial, fch[0][1], k, gch[0][1], ell, 0, field, model)

            def flush(base, acc):
                region_terms.extend((v, base + i) for i, v in enumerate(acc) if v != 0)

            while heap:
                exp, i, j = heapq.heappop(heap)
                serial += 1
                pair_reach = _span(fch[i][1], k) + _span(gch[j][1], ell) - 1
                if base + len(acc) - 1 < exp:
                    flush(base, acc)
                    base = exp
                    acc = [0] * pair_reach
                    stamps = [0] * pair_reach
                else:
                    need = exp - base + pair_reach
                    if need > len(acc):
                        acc.extend([0] * (need - len(acc)))
                        stamps.extend([0] * (need - len(stamps)))
                grid_accumulate(acc, stamps, serial, fch[i][1], k, gch[j][1], ell,
                                exp - base, field, model)
                if i + 1 < t:
                    heapq.heappush(heap, (fch[i + 1][0] + gch[j][0], i + 1, j))
            flush(base, acc)

    # Noise cross products run as ordinary sparse multiplications.
    cross: list = []
    f_chunk_sp = SparsePoly()
    f_chunk_sp.terms = f.chunk_terms()
    g_chunk_sp = SparsePoly()
    g_chunk_sp.terms = g.chunk_terms()
    if not g.noise.is_zero() and f_chunk_sp.terms:
        cross.append(sparse_mul(f_chunk_sp, g.noise, field).terms)
    if not f.noise.is_zero() and g_chunk_sp.terms:
        cross.append(sparse_mul(g_chunk_sp, f.noise, field).terms)
    if not f.noise.is_zero() and not g.noise.is_zero():
        cross.append(sparse_mul(f.noise, g.noise, field).terms)

    if target == "dense":
        adds = 0
        for terms in cross:
            for c, e in terms:
                dense_out[e] = (dense_out[e] + c) % p
                adds += 1
        field.tally(0, adds)
        return DensePoly(dense_out)

    streams = [region_terms] + cross
    merged: dict = {}
    adds = 0
    for terms in streams:
        for c, e in terms:
            if e in merged:
                merged[e] = (merged[e] + c) % p
                adds += 1
            else:
                merged[e] = c
    field.tally(0, adds)
    out = SparsePoly()
    out.terms = [(merged[e], e) for e in sorted(merged) if merged[e] != 0]
    return out
