"""Chunky representation: dense chunks with exponent offsets.

Three pieces, presented in the order the multiplication pipeline runs them:

  optimal_chunk_size   pick the common chunk-size target k by sweeping a
                       monotone priority queue of gap-merge events,
  chunky_convert       given k, a left-to-right optimal split of the input
                       at a subset of its zero-run gaps (linear time),
  chunky_mul           heap-merged products of chunk pairs, dense kernels
                       inside, output chunks emitted in exponent order.

The per-chunk cost objective is delta(len) for chunks shorter than k and
delta(k)*len/k for longer ones, with len the exact coefficient count of
the chunk (internal zeros included, bounding zeros excluded).
"""

from __future__ import annotations

import heapq
from collections import Counter
from dataclasses import dataclass

from adaptpoly.cost import CostModel
from adaptpoly.errors import CapacityError
from adaptpoly.poly import DensePoly, SparsePoly, add_into, mul_coeff_lists


class ChunkyPoly:
    """Ordered disjoint dense chunks, each anchored at an exponent offset."""

    __slots__ = ("chunks",)

    def __init__(self, chunks=()):
        cs = [(int(off), list(coeffs)) for off, coeffs in chunks]
        reach = -1
        for off, coeffs in cs:
            if not coeffs or coeffs[0] == 0 or coeffs[-1] == 0:
                raise ValueError("chunk must start and end with nonzero coefficients")
            if off <= reach:
                raise ValueError("chunks must be disjoint and ordered")
            reach = off + len(coeffs) - 1
        self.chunks = cs

    def is_zero(self) -> bool:
        return not self.chunks

    @property
    def degree(self) -> int:
        if not self.chunks:
            return -1
        off, coeffs = self.chunks[-1]
        return off + len(coeffs) - 1

    def chunk_count(self) -> int:
        return len(self.chunks)

    def spans(self) -> list[int]:
        return [len(coeffs) for _, coeffs in self.chunks]

    def term_count(self) -> int:
        return sum(1 for _, cs in self.chunks for c in cs if c != 0)

    def __eq__(self, other):
        return isinstance(other, ChunkyPoly) and other.chunks == self.chunks

    def __repr__(self):
        return f"ChunkyPoly({self.chunks!r})"


@dataclass(frozen=True)
class GapProfile:
    """Run-length view of a polynomial: zero gaps a_i, nonzero blocks b_i.

    prefix[i] is the total length consumed before gap i; prefix[m+1] is
    degree+1. a_0 may be zero (nonzero constant coefficient), all other
    entries are positive.
    """

    gaps: tuple
    blocks: tuple
    prefix: tuple

    @property
    def gap_count(self) -> int:
        return len(self.gaps) - 1


def gap_profile(f) -> GapProfile:
    """Run-length decomposition of the zero/nonzero structure of f."""
    if f.is_zero():
        raise ValueError("gap profile of the zero polynomial is undefined")
    gaps: list[int] = []
    blocks: list[int] = []
    if isinstance(f, DensePoly):
        coeffs = f.coeffs
        i = 0
        n = len(coeffs)
        while i < n:
            j = i
            while j < n and coeffs[j] == 0:
                j += 1
            k = j
            while k < n and coeffs[k] != 0:
                k += 1
            gaps.append(j - i)
            blocks.append(k - j)
            i = k
    else:
        exps = f.exponents()
        run_start = exps[0]
        prev = exps[0]
        gaps.append(exps[0])
        for e in exps[1:]:
            if e == prev + 1:
                prev = e
                continue
            blocks.append(prev - run_start + 1)
            gaps.append(e - prev - 1)
            run_start = prev = e
        blocks.append(prev - run_start + 1)
    prefix = [0]
    for a, b in zip(gaps, blocks):
        prefix.append(prefix[-1] + a + b)
    return GapProfile(tuple(gaps), tuple(blocks), tuple(prefix))


def _least_true(pred, lo: int, hi: int, gallop: bool) -> int:
    """Least v in (lo, hi] with pred(v) true; pred is monotone false->true.

    With gallop=True probes expand from both ends so the cost is
    logarithmic in the distance from the nearer end (dense-input path);
    otherwise a plain binary search (sparse-input path).
    """
    if gallop:
        step = 1
        while hi - lo > 1:
            moved = False
            probe = lo + step
            if probe < hi:
                moved = True
                if pred(probe):
                    hi = probe
                    break
                lo = probe
            probe = hi - step
            if probe > lo:
                moved = True
                if pred(probe):
                    hi = probe
                else:
                    lo = probe
                    break
            if not moved:
                break
            step <<= 1
    while hi - lo > 1:
        mid = (lo + hi) // 2
        if pred(mid):
            hi = mid
        else:
            lo = mid
    return hi


def _chunk_boundaries(prof: GapProfile, k: int, model: CostModel, dense_input: bool) -> list[int]:
    """Gap indices (ascending, starting at 0) of the optimal chunk split.

    One left-to-right pass over the gaps. For each truncation point ell the
    best predecessor gap minimizes c_i + delta(chunk length); the concavity
    axiom makes earlier gaps beat later ones permanently once they do at
    all, so the candidates live on a stack of (gap, last-reigning-index)
    pairs. Gaps whose chunk would exceed k are dropped, except that a
    drained stack forces the immediately preceding gap (oversized chunks
    then pay delta(k)*len/k, the same rate the cost objective charges).
    """
    a, d = prof.gaps, prof.prefix
    m = prof.gap_count
    delta = model.delta
    dk = delta(k)

    def phi(length: int) -> float:
        return delta(length) if length < k else dk * length / k

    D = [d[i] + a[i] for i in range(m + 1)]  # block start after each gap
    c = [0.0] * (m + 2)
    L: list = [None] * (m + 2)
    c[1] = phi(d[1] - D[0])
    L[1] = (0, None)
    stack: list[tuple[int, int]] = [(0, m + 1)]

    for ell in range(2, m + 2):
        dl = d[ell]
        while stack and (stack[-1][1] < ell or dl - D[stack[-1][0]] > k):
            stack.pop()
        cand_prev = c[ell - 1] + phi(dl - D[ell - 1])
        if not stack:
            c[ell] = cand_prev
            L[ell] = (ell - 1, L[ell - 1])
            stack.append((ell - 1, m + 1))
            continue
        top = stack[-1][0]
        cand_stack = c[top] + delta(dl - D[top])
        if cand_stack <= cand_prev:
            c[ell] = cand_stack
            L[ell] = (top, L[top])
            continue
        c[ell] = cand_prev
        L[ell] = (ell - 1, L[ell - 1])
        cn, Dn = c[ell - 1], D[ell - 1]
        r = ell
        while stack:
            i, j = stack[-1]
            if c[i] + delta(d[j] - D[i]) > cn + delta(d[j] - Dn):
                r = j
                stack.pop()
            else:
                break
        if not stack:
            stack.append((ell - 1, m + 1))
        else:
            i, j = stack[-1]

            def catches_up(v, i=i):
                return c[i] + delta(d[v] - D[i]) <= cn + delta(d[v] - Dn)

            v = _least_true(catches_up, r, j, gallop=dense_input)
            stack.append((ell - 1, v - 1))

    node = L[m + 1]
    boundaries = []
    while node is not None:
        boundaries.append(node[0])
        node = node[1]
    boundaries.reverse()
    return boundaries


def chunky_convert(f, k: int, model: CostModel | None = None) -> ChunkyPoly:
    """Optimal chunky split of f for multiplication by one size-k chunk."""
    if k < 1:
        raise ValueError("chunk size must be positive")
    if f.is_zero():
        raise ValueError("cannot convert the zero polynomial")
    model = model if model is not None else CostModel()
    prof = gap_profile(f)
    boundaries = _chunk_boundaries(prof, k, model, isinstance(f, DensePoly))
    a, d = prof.gaps, prof.prefix
    spans = []
    for s, gi in enumerate(boundaries):
        start = d[gi] + a[gi]
        end = d[boundaries[s + 1]] if s + 1 < len(boundaries) else d[-1]
        spans.append((start, end))
    out = ChunkyPoly()
    if isinstance(f, DensePoly):
        out.chunks = [(start, f.coeffs[start:end]) for start, end in spans]
    else:
        chunks = []
        terms = f.terms
        ptr = 0
        for start, end in spans:
            coeffs = [0] * (end - start)
            while ptr < len(terms) and terms[ptr][1] < end:
                c, e = terms[ptr]
                coeffs[e - start] = c
                ptr += 1
            chunks.append((start, coeffs))
        out.chunks = chunks
    return out


def chunk_cost(rep: ChunkyPoly, k: int, model: CostModel | None = None) -> float:
    """Modeled ring ops to multiply rep by a single dense size-k chunk."""
    if k < 1:
        raise ValueError("chunk size must be positive")
    model = model if model is not None else CostModel()
    dk = model.delta(k)
    total = 0.0
    for _, coeffs in rep.chunks:
        ln = len(coeffs)
        if ln >= k:
            total += dk * ln
        else:
            total += k * model.delta(ln)
    return total


def chunky_model_cost(f: ChunkyPoly, g: ChunkyPoly, model: CostModel) -> float:
    """Pair-sum model cost of chunky_mul: sum of blocked costs over chunk pairs."""
    total = 0.0
    for sa, ca in Counter(f.spans()).items():
        for sb, cb in Counter(g.spans()).items():
            total += ca * cb * model.mult_cost(sa, sb)
    return total


def chunky_mul(f: ChunkyPoly, g: ChunkyPoly, field, model: CostModel | None = None, out: list | None = None):
    """Heap-merged chunky product (outer sparse order, dense kernels inside).

    Chunk pairs are consumed from a min-heap keyed by offset sum, so output
    chunks are produced left to right: each popped product either extends
    the open accumulator chunk or, when a gap appears, flushes it. With an
    `out` dense buffer the flushes are written in place and None is
    returned; otherwise the product ChunkyPoly is returned.
    """
    model = model if model is not None else CostModel()
    if f.is_zero() or g.is_zero():
        return None if out is not None else ChunkyPoly()
    if len(f.chunks) < len(g.chunks):
        f, g = g, f
    fch, gch = f.chunks, g.chunks
    t, s = len(fch), len(gch)
    p = field.p

    result_chunks: list = []

    def flush(base: int, acc: list) -> None:
        lo = 0
        hi = len(acc)
        while lo < hi and acc[lo] == 0:
            lo += 1
        while hi > lo and acc[hi - 1] == 0:
            hi -= 1
        if lo == hi:
            return  # fully cancelled
        if out is not None:
            out[base + lo : base + hi] = acc[lo:hi]
        else:
            result_chunks.append((base + lo, acc[lo:hi]))

    acc = mul_coeff_lists(fch[0][1], gch[0][1], field, model)
    base = fch[0][0] + gch[0][0]
    heap = [(fch[0][0] + gch[j][0], 0, j) for j in range(1, s)]
    if t >= 2:
        heap.append((fch[1][0] + gch[0][0], 1, 0))
    heapq.heapify(heap)
    max_heap = s

    while heap:
        if len(heap) > max_heap:
            raise AssertionError("chunk-pair heap exceeded the smaller chunk count")
        exp, i, j = heapq.heappop(heap)
        beta = mul_coeff_lists(fch[i][1], gch[j][1], field, model)
        if base + len(acc) - 1 < exp:
            flush(base, acc)
            acc = beta
            base = exp
        else:
            off = exp - base
            need = off + len(beta)
            if need > len(acc):
                acc.extend([0] * (need - len(acc)))
            field.tally(0, add_into(acc, off, beta, p))
        if i + 1 < t:
            heapq.heappush(heap, (fch[i + 1][0] + gch[j][0], i + 1, j))
    flush(base, acc)

    if out is not None:
        return None
    res = ChunkyPoly()
    res.chunks = result_chunks
    return res


def chunky_to_output(h: ChunkyPoly, kind: str, cap: int = CostModel().cap):
    """Flatten a chunky polynomial to a dense array or sparse term list."""
    if kind == "dense":
        if h.is_zero():
            return DensePoly()
        if h.degree + 1 > cap:
            raise CapacityError(f"dense length {h.degree + 1} exceeds cap {cap}")
        coeffs = [0] * (h.degree + 1)
        for off, cs in h.chunks:
            coeffs[off : off + len(cs)] = cs
        out = DensePoly()
        out.coeffs = coeffs
        return out
    if kind == "sparse":
        out = SparsePoly()
        out.terms = [(c, off + i) for off, cs in h.chunks for i, c in enumerate(cs) if c != 0]
        return out
    raise ValueError(f"unknown output kind: {kind!r}")


class _GapQueue:
    """Monotone priority queue over the merge-gaps of one operand.

    Gaps sit between consecutive nonzero terms; the key of a gap is the
    length the chunk would have if the chunks on both sides of it were
    merged (span from the left chunk's first term to the right chunk's
    last, endpoints included). Removing a gap merges its neighbors, which
    only ever increases the neighbouring keys, so a bucket array scanned
    by a forward finger (dense input) or a lazy binary heap (sparse
    input) both give amortized-constant traversal. Gaps whose key exceeds
    the length cap can never merge; they are dropped from the queue but
    kept as permanent chunk boundaries.
    """

    __slots__ = (
        "exps", "start", "end", "prev", "next", "key", "dead", "perm_flag",
        "live", "perm", "cap", "buckets", "finger", "heap",
    )

    def __init__(self, exps: list, cap: int, dense_input: bool):
        t = len(exps)
        n_gaps = max(t - 1, 0)
        self.exps = exps
        self.cap = cap
        self.start = list(range(n_gaps))        # first term index of left chunk
        self.end = list(range(1, t))            # last term index of right chunk
        self.prev = [i - 1 for i in range(n_gaps)]
        self.next = [i + 1 if i + 1 < n_gaps else -1 for i in range(n_gaps)]
        self.key = [0] * n_gaps
        self.dead = [False] * n_gaps
        self.perm_flag = [False] * n_gaps
        self.live = 0
        self.perm = 0
        if dense_input:
            size = (exps[-1] - exps[0] + 3) if t else 1
            self.buckets: list | None = [[] for _ in range(size)]
            self.finger = 0
            self.heap = None
        else:
            self.buckets = None
            self.heap = []
        for i in range(n_gaps):
            key = exps[i + 1] - exps[i] + 1
            self.key[i] = key
            if key > cap:
                self.perm_flag[i] = True
                self.perm += 1
            else:
                self.live += 1
                self._push(i, key)

    def _push(self, i: int, key: int) -> None:
        if self.buckets is not None:
            self.buckets[key].append(i)
        else:
            heapq.heappush(self.heap, (key, i))

    def _bump_key(self, i: int) -> None:
        new = self.exps[self.end[i]] - self.exps[self.start[i]] + 1
        if new == self.key[i]:
            return
        self.key[i] = new
        if self.perm_flag[i]:
            return
        if new > self.cap:
            self.perm_flag[i] = True
            self.perm += 1
            self.live -= 1
            return
        self._push(i, new)

    def peek_min(self):
        """Smallest live key, discarding stale entries; None when empty."""
        if self.live == 0:
            return None
        if self.buckets is not None:
            while True:
                bucket = self.buckets[self.finger]
                while bucket:
                    i = bucket[-1]
                    if self.dead[i] or self.perm_flag[i] or self.key[i] != self.finger:
                        bucket.pop()
                        continue
                    return self.finger
                self.finger += 1
        while True:
            key, i = self.heap[0]
            if self.dead[i] or self.perm_flag[i] or self.key[i] != key:
                heapq.heappop(self.heap)
                continue
            return key

    def pop_min(self) -> int:
        if self.buckets is not None:
            i = self.buckets[self.finger].pop()
        else:
            _, i = heapq.heappop(self.heap)
        self._remove(i)
        return i

    def _remove(self, i: int) -> None:
        self.dead[i] = True
        self.live -= 1
        l, r = self.prev[i], self.next[i]
        if l >= 0:
            self.end[l] = self.end[i]
            self.next[l] = r
        if r >= 0:
            self.start[r] = self.start[i]
            self.prev[r] = l
        if l >= 0:
            self._bump_key(l)
        if r >= 0:
            self._bump_key(r)

    def drain(self, k: int) -> None:
        """Remove every gap whose current key is at most k."""
        while True:
            mk = self.peek_min()
            if mk is None or mk > k:
                return
            self.pop_min()

    def chunk_estimate(self) -> int:
        return self.live + self.perm + 1


def chunk_size_search(f, g, model: CostModel | None = None):
    """Run the chunk-size sweep; returns (k, evaluation trace).

    Trace entries are (k, f_chunk_estimate, g_chunk_estimate, cost) for
    each evaluated merge event; the returned k minimizes the cost with
    ties resolved toward smaller k, starting from the sparse baseline
    cost t_f * t_g at k = 1.
    """
    model = model if model is not None else CostModel()
    ef = f.exponents()
    eg = g.exponents()
    if not ef or not eg:
        return 1, []
    qf = _GapQueue(ef, model.cap, isinstance(f, DensePoly))
    qg = _GapQueue(eg, model.cap, isinstance(g, DensePoly))
    k_min = 1
    c_min = float(len(ef)) * float(len(eg))
    trace = []
    while qf.live or qg.live:
        mf = qf.peek_min()
        mg = qg.peek_min()
        k = min(v for v in (mf, mg) if v is not None)
        qf.drain(k)
        qg.drain(k)
        cost = qf.chunk_estimate() * qg.chunk_estimate() * k * model.delta(k)
        trace.append((k, qf.chunk_estimate(), qg.chunk_estimate(), cost))
        if cost < c_min:
            k_min = k
            c_min = cost
    return k_min, trace


def optimal_chunk_size(f, g, model: CostModel | None = None) -> int:
    """Near-optimal common chunk size for multiplying f by g (Eq.-6 proxy sweep)."""
    return chunk_size_search(f, g, model)[0]
