"""Pure-Python multiplication kernels (fallback for the compiled core).

Each kernel takes canonical residue lists and returns (result, muls, adds)
where the counts are the coefficient operations the kernel performed. The
compiled twin in _kernels.pyx implements the identical recursion shapes and
counting conventions; tests assert exact agreement on results and counts.

Counting conventions (shared with the compiled core):
  schoolbook on lengths (n, m): muls = n*m, adds = n*m - (n+m-1)
  karatsuba: schoolbook counts at the bases, plus per split the element
  adds of the two half-sums, the middle subtractions, and the overlapped
  accumulation of the middle part (low/high placements are writes).
  sparse heap: one mul per term pair, one add per merged output collision.
"""

from __future__ import annotations

import heapq


def schoolbook_mul(a: list, b: list, p: int):
    n, m = len(a), len(b)
    if n == 0 or m == 0:
        return [], 0, 0
    out = [0] * (n + m - 1)
    for i in range(n):
        ai = a[i]
        for j in range(m):
            out[i + j] += ai * b[j]
    return [v % p for v in out], n * m, n * m - (n + m - 1)


def karatsuba_mul(a: list, b: list, p: int, threshold: int):
    counts = [0, 0]
    out = _kara(a, b, p, threshold, counts)
    return out, counts[0], counts[1]


def _acc(out: list, off: int, src: list, p: int, counts: list) -> None:
    for i, v in enumerate(src):
        out[off + i] = (out[off + i] + v) % p
    counts[1] += len(src)


def _kara(a: list, b: list, p: int, threshold: int, counts: list) -> list:
    la, lb = len(a), len(b)
    if la == 0 or lb == 0:
        return []
    n = la if la >= lb else lb
    if n <= threshold:
        out = [0] * (la + lb - 1)
        for i in range(la):
            ai = a[i]
            for j in range(lb):
                out[i + j] += ai * b[j]
        counts[0] += la * lb
        counts[1] += la * lb - (la + lb - 1)
        return [v % p for v in out]
    h = (n + 1) // 2  # odd sizes split ceil/floor
    out = [0] * (la + lb - 1)
    if lb <= h:
        lo = _kara(a[:h], b, p, threshold, counts)
        out[: len(lo)] = lo
        _acc(out, h, _kara(a[h:], b, p, threshold, counts), p, counts)
        return out
    if la <= h:
        lo = _kara(a, b[:h], p, threshold, counts)
        out[: len(lo)] = lo
        _acc(out, h, _kara(a, b[h:], p, threshold, counts), p, counts)
        return out
    a0, a1 = a[:h], a[h:]
    b0, b1 = b[:h], b[h:]
    z0 = _kara(a0, b0, p, threshold, counts)
    z2 = _kara(a1, b1, p, threshold, counts)
    sa = _half_sum(a0, a1, p, counts)
    sb = _half_sum(b0, b1, p, counts)
    z1 = _kara(sa, sb, p, threshold, counts)
    # mid = z1 - z0 - z2; entries past the output window cancel exactly.
    mid = list(z1)
    for i, v in enumerate(z0):
        mid[i] = (mid[i] - v) % p
    for i, v in enumerate(z2):
        mid[i] = (mid[i] - v) % p
    counts[1] += len(z0) + len(z2)
    del mid[len(out) - h :]
    out[: len(z0)] = z0
    out[2 * h :] = z2
    _acc(out, h, mid, p, counts)
    return out


def _half_sum(lo: list, hi: list, p: int, counts: list) -> list:
    s = list(lo)
    for i, v in enumerate(hi):
        s[i] = (s[i] + v) % p
    counts[1] += len(hi)
    return s


def sparse_heap_mul(ca: list, ea: list, cb: list, eb: list, p: int):
    t, s = len(ea), len(eb)
    if t == 0 or s == 0:
        return [], [], 0, 0
    if t < s:
        ca, ea, cb, eb = cb, eb, ca, ea
        t, s = s, t
    # One pointer per term of the smaller operand, walking the larger one.
    heap = [(ea[0] + eb[j], j, 0) for j in range(s)]
    heapq.heapify(heap)
    out_c: list = []
    out_e: list = []
    cur_e = -1
    cur_c = 0
    muls = 0
    adds = 0
    while heap:
        e, j, i = heapq.heappop(heap)
        c = ca[i] * cb[j] % p
        muls += 1
        if e == cur_e:
            cur_c = (cur_c + c) % p
            adds += 1
        else:
            if cur_e >= 0 and cur_c != 0:
                out_e.append(cur_e)
                out_c.append(cur_c)
            cur_e = e
            cur_c = c
        if i + 1 < t:
            heapq.heappush(heap, (ea[i + 1] + eb[j], j, i + 1))
    if cur_e >= 0 and cur_c != 0:
        out_e.append(cur_e)
        out_c.append(cur_c)
    return out_c, out_e, muls, adds
