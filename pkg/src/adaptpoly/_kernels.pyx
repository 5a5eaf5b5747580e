# cython: language_level=3, boundscheck=False, wraparound=False, cdivision=True, initializedcheck=False
"""Compiled multiplication kernels (int64 arithmetic, modulus below 2^31).

Mirrors _pykernels exactly: same recursion shapes, same results, same
operation counts. The kernel selector routes moduli of 2^31 or more to the
pure-Python big-int path, so every product of two residues here fits int64.
"""

import numpy as np

ctypedef long long i64


def schoolbook_mul(a, b, p):
    cdef Py_ssize_t n = len(a), m = len(b)
    if n == 0 or m == 0:
        return [], 0, 0
    cdef i64 cp = p
    A = np.asarray(a, dtype=np.int64)
    B = np.asarray(b, dtype=np.int64)
    out = np.zeros(n + m - 1, dtype=np.int64)
    cdef i64[::1] av = A
    cdef i64[::1] bv = B
    cdef i64[::1] ov = out
    cdef Py_ssize_t minlen = n if n < m else m
    # Full accumulation without reduction is safe when the per-cell sum
    # of at most minlen products stays below 2^63 (checked in Python ints).
    cdef bint delayed = minlen * (int(p) - 1) ** 2 < (1 << 63)
    cdef Py_ssize_t i, j
    cdef i64 ai
    if delayed:
        for i in range(n):
            ai = av[i]
            for j in range(m):
                ov[i + j] += ai * bv[j]
        for i in range(n + m - 1):
            ov[i] = ov[i] % cp
    else:
        for i in range(n):
            ai = av[i]
            for j in range(m):
                ov[i + j] = (ov[i + j] + ai * bv[j]) % cp
    return out.tolist(), n * m, n * m - (n + m - 1)


cdef void _school_write(i64* out, i64* a, Py_ssize_t la, i64* b, Py_ssize_t lb,
                        i64 p, bint delayed, i64* muls, i64* adds) noexcept nogil:
    cdef Py_ssize_t i, j, lo = la + lb - 1
    cdef i64 ai
    for i in range(lo):
        out[i] = 0
    if delayed:
        for i in range(la):
            ai = a[i]
            for j in range(lb):
                out[i + j] += ai * b[j]
        for i in range(lo):
            out[i] = out[i] % p
    else:
        for i in range(la):
            ai = a[i]
            for j in range(lb):
                out[i + j] = (out[i + j] + ai * b[j]) % p
    muls[0] += la * lb
    adds[0] += la * lb - lo


cdef void _kara_write(i64* out, i64* a, Py_ssize_t la, i64* b, Py_ssize_t lb,
                      i64* scratch, i64 p, Py_ssize_t threshold, bint delayed,
                      i64* muls, i64* adds) noexcept nogil:
    """Write a*b (length la+lb-1) into out. Identical shape to _pykernels._kara."""
    cdef Py_ssize_t n = la if la >= lb else lb
    cdef Py_ssize_t h, i, lo_len, hi_len, z0_len, z2_len, mid_len
    cdef i64 v
    if n <= threshold:
        _school_write(out, a, la, b, lb, p, delayed, muls, adds)
        return
    h = (n + 1) // 2
    cdef Py_ssize_t out_len = la + lb - 1
    if lb <= h:
        lo_len = h + lb - 1
        hi_len = (la - h) + lb - 1
        _kara_write(scratch, a, h, b, lb, scratch + lo_len + hi_len, p, threshold,
                    delayed, muls, adds)
        _kara_write(scratch + lo_len, a + h, la - h, b, lb,
                    scratch + lo_len + hi_len, p, threshold, delayed, muls, adds)
        for i in range(out_len):
            out[i] = 0
        for i in range(lo_len):
            out[i] = scratch[i]
        for i in range(hi_len):
            out[h + i] = (out[h + i] + scratch[lo_len + i]) % p
        adds[0] += hi_len
        return
    if la <= h:
        lo_len = la + h - 1
        hi_len = la + (lb - h) - 1
        _kara_write(scratch, a, la, b, h, scratch + lo_len + hi_len, p, threshold,
                    delayed, muls, adds)
        _kara_write(scratch + lo_len, a, la, b + h, lb - h,
                    scratch + lo_len + hi_len, p, threshold, delayed, muls, adds)
        for i in range(out_len):
            out[i] = 0
        for i in range(lo_len):
            out[i] = scratch[i]
        for i in range(hi_len):
            out[h + i] = (out[h + i] + scratch[lo_len + i]) % p
        adds[0] += hi_len
        return
    z0_len = 2 * h - 1
    z2_len = (la - h) + (lb - h) - 1
    # z0 and z2 straight into the output (position 2h-1 stays zero).
    _kara_write(out, a, h, b, h, scratch, p, threshold, delayed, muls, adds)
    out[z0_len] = 0
    _kara_write(out + 2 * h, a + h, la - h, b + h, lb - h, scratch, p, threshold,
                delayed, muls, adds)
    # Half sums into scratch[0:h] and scratch[h:2h].
    for i in range(h):
        scratch[i] = a[i]
    for i in range(la - h):
        scratch[i] = (scratch[i] + a[h + i]) % p
    for i in range(h):
        scratch[h + i] = b[i]
    for i in range(lb - h):
        scratch[h + i] = (scratch[h + i] + b[h + i]) % p
    adds[0] += (la - h) + (lb - h)
    # z1 into scratch[2h : 4h-1].
    _kara_write(scratch + 2 * h, scratch, h, scratch + h, h, scratch + 4 * h - 1,
                p, threshold, delayed, muls, adds)
    # mid = z1 - z0 - z2, trimmed to the output window.
    for i in range(z0_len):
        v = (scratch[2 * h + i] - out[i]) % p
        scratch[2 * h + i] = v + p if v < 0 else v
    for i in range(z2_len):
        v = (scratch[2 * h + i] - out[2 * h + i]) % p
        scratch[2 * h + i] = v + p if v < 0 else v
    adds[0] += z0_len + z2_len
    mid_len = z0_len
    if mid_len > out_len - h:
        mid_len = out_len - h
    for i in range(mid_len):
        out[h + i] = (out[h + i] + scratch[2 * h + i]) % p
    adds[0] += mid_len


def karatsuba_mul(a, b, p, threshold):
    cdef Py_ssize_t la = len(a), lb = len(b)
    if la == 0 or lb == 0:
        return [], 0, 0
    cdef i64 cp = p
    cdef Py_ssize_t thr = threshold
    A = np.ascontiguousarray(np.asarray(a, dtype=np.int64))
    B = np.ascontiguousarray(np.asarray(b, dtype=np.int64))
    out = np.zeros(la + lb - 1, dtype=np.int64)
    # Per level the frame needs at most 4*ceil(n/2) slots before recursing on
    # halves, so the telescoped total stays under 4n plus a few per level.
    scratch = np.zeros(4 * (la + lb) + 512, dtype=np.int64)
    cdef i64[::1] av = A
    cdef i64[::1] bv = B
    cdef i64[::1] ov = out
    cdef i64[::1] sv = scratch
    cdef bint delayed = min(thr, la, lb) * (int(p) - 1) ** 2 < (1 << 63)
    cdef i64 muls = 0, adds = 0
    _kara_write(&ov[0], &av[0], la, &bv[0], lb, &sv[0], cp, thr, delayed, &muls, &adds)
    return out.tolist(), muls, adds


def sparse_heap_mul(ca, ea, cb, eb, p):
    cdef Py_ssize_t t = len(ea), s = len(eb)
    if t == 0 or s == 0:
        return [], [], 0, 0
    if t < s:
        ca, ea, cb, eb = cb, eb, ca, ea
        t, s = s, t
    cdef i64 cp = p
    CA = np.asarray(ca, dtype=np.int64)
    EA = np.asarray(ea, dtype=np.int64)
    CB = np.asarray(cb, dtype=np.int64)
    EB = np.asarray(eb, dtype=np.int64)
    cdef i64[::1] cav = CA
    cdef i64[::1] eav = EA
    cdef i64[::1] cbv = CB
    cdef i64[::1] ebv = EB
    hk = np.empty(s, dtype=np.int64)
    hj = np.empty(s, dtype=np.intp)
    hi = np.empty(s, dtype=np.intp)
    cdef i64[::1] hkv = hk
    cdef Py_ssize_t[::1] hjv = hj
    cdef Py_ssize_t[::1] hiv = hi
    cdef Py_ssize_t j, size = s
    # eb is sorted, so (ea[0]+eb[j], j, 0) in j-order is already a valid heap.
    for j in range(s):
        hkv[j] = eav[0] + ebv[j]
        hjv[j] = j
        hiv[j] = 0
    out_c = []
    out_e = []
    cdef i64 muls = 0, adds = 0
    cdef i64 cur_e = -1, cur_c = 0, e, c
    cdef Py_ssize_t i
    while size > 0:
        e = hkv[0]
        j = hjv[0]
        i = hiv[0]
        c = cav[i] * cbv[j] % cp
        muls += 1
        if e == cur_e:
            cur_c = (cur_c + c) % cp
            adds += 1
        else:
            if cur_e >= 0 and cur_c != 0:
                out_c.append(cur_c)
                out_e.append(cur_e)
            cur_e = e
            cur_c = c
        if i + 1 < t:
            hkv[0] = eav[i + 1] + ebv[j]
            hiv[0] = i + 1
        else:
            size -= 1
            hkv[0] = hkv[size]
            hjv[0] = hjv[size]
            hiv[0] = hiv[size]
        _sift_down(&hkv[0], &hjv[0], &hiv[0], size)
    if cur_e >= 0 and cur_c != 0:
        out_c.append(cur_c)
        out_e.append(cur_e)
    return out_c, out_e, muls, adds


cdef void _sift_down(i64* hk, Py_ssize_t* hj, Py_ssize_t* hi, Py_ssize_t size) noexcept nogil:
    cdef Py_ssize_t pos = 0, child
    cdef i64 k = hk[0]
    cdef Py_ssize_t j = hj[0], i = hi[0]
    while True:
        child = 2 * pos + 1
        if child >= size:
            break
        if child + 1 < size and (hk[child + 1] < hk[child] or
                                 (hk[child + 1] == hk[child] and
                                  (hj[child + 1] < hj[child] or
                                   (hj[child + 1] == hj[child] and hi[child + 1] < hi[child])))):
            child += 1
        if hk[child] < k or (hk[child] == k and
                             (hj[child] < j or (hj[child] == j and hi[child] < i))):
            hk[pos] = hk[child]
            hj[pos] = hj[child]
            hi[pos] = hi[child]
            pos = child
        else:
            break
    hk[pos] = k
    hj[pos] = j
    hi[pos] = i
