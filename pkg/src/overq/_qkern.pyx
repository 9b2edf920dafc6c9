# cython: language_level=3
"""Compiled coefficient and enumeration kernels.

Same contracts as overq._qkern_py; see that module for documentation.
Coefficient values stay Python objects (Fraction or int) so everything is
exact and arbitrary precision; the speedup comes from typed loop indices
and C-level recursion in the partition walks.
"""

MODE_BOUNDED = 0
MODE_EXACT = 1
MODE_PBAR = 2
MODE_G = 3


def convolve(a, b, Py_ssize_t n_out):
    cdef Py_ssize_t la = len(a)
    cdef Py_ssize_t lb = len(b)
    cdef Py_ssize_t k, i, lo, hi
    cdef list out = []
    cdef object s, ai
    for k in range(n_out):
        lo = k - lb + 1
        if lo < 0:
            lo = 0
        hi = k + 1
        if hi > la:
            hi = la
        s = 0
        for i in range(lo, hi):
            ai = a[i]
            if ai:
                s = s + ai * b[k - i]
        out.append(s)
    return out


def invert_unit(c, Py_ssize_t n_out):
    cdef object c0 = c[0]
    cdef Py_ssize_t lc = len(c)
    cdef Py_ssize_t k, i, hi
    cdef object s, ci
    cdef list out = [1 / c0 if c0 != 1 else c0]
    for k in range(1, n_out):
        hi = k + 1
        if hi > lc:
            hi = lc
        s = 0
        for i in range(1, hi):
            ci = c[i]
            if ci:
                s = s + ci * out[k - i]
        out.append(-s / c0 if s else 0 * c0)
    return out


def mul_one_minus(c, g, Py_ssize_t k):
    cdef Py_ssize_t n = len(c)
    cdef Py_ssize_t i
    cdef list out = list(c)
    cdef object prev
    if g == 1:
        for i in range(n - 1, k - 1, -1):
            prev = c[i - k]
            if prev:
                out[i] = out[i] - prev
    elif g == -1:
        for i in range(n - 1, k - 1, -1):
            prev = c[i - k]
            if prev:
                out[i] = out[i] + prev
    else:
        for i in range(n - 1, k - 1, -1):
            prev = c[i - k]
            if prev:
                out[i] = out[i] - g * prev
    return out


def div_one_minus(c, g, Py_ssize_t k):
    cdef Py_ssize_t n = len(c)
    cdef Py_ssize_t i
    cdef list out = list(c)
    cdef object prev
    if g == 1:
        for i in range(k, n):
            prev = out[i - k]
            if prev:
                out[i] = out[i] + prev
    elif g == -1:
        for i in range(k, n):
            prev = out[i - k]
            if prev:
                out[i] = out[i] - prev
    else:
        for i in range(k, n):
            prev = out[i - k]
            if prev:
                out[i] = out[i] + g * prev
    return out


cdef void _box_rec(list acc, int maxv, int slots, int total, object weight):
    cdef int v, m, tot
    cdef object w2
    for v in range(maxv, 0, -1):
        tot = total
        w2 = weight * 2
        for m in range(1, slots + 1):
            tot += v
            acc[tot] = acc[tot] + w2
            if m < slots and v > 1:
                _box_rec(acc, v - 1, slots - m, tot, w2)


def box_weighted_counts(int max_part, int max_parts):
    cdef int cap = max_part * max_parts
    cdef list acc = [0] * (cap + 1)
    acc[0] = 1
    if max_part >= 1 and max_parts >= 1:
        _box_rec(acc, max_part, max_parts, 0, 1)
    return acc


cdef object _UNIT = 1

cdef void _window_rec(list acc, int n_max, int top, int mode,
                      int last, int total, int nd):
    cdef int v, tot, nd1
    for v in range(last + 1, top + 1):
        tot = total + v
        if tot > n_max:
            break
        nd1 = nd + 1
        while True:
            if mode == MODE_PBAR:
                acc[tot] = acc[tot] + (_UNIT << nd1)
            elif mode == MODE_BOUNDED:
                acc[tot] = acc[tot] + 1
            elif mode == MODE_G:
                acc[tot] = acc[tot] + (_UNIT << (nd1 - 1 if v == top else nd1))
            elif v == top:
                acc[tot] = acc[tot] + 1
            _window_rec(acc, n_max, top, mode, v, tot, nd1)
            tot += v
            if tot > n_max:
                break


def window_diff_counts(int n_max, int t, int mode):
    cdef list acc = [0] * (n_max + 1)
    cdef int m, tot
    for m in range(1, n_max + 1):
        tot = 0
        while True:
            tot += m
            if tot > n_max:
                break
            if mode == MODE_PBAR:
                acc[tot] = acc[tot] + 2
            elif mode == MODE_BOUNDED:
                acc[tot] = acc[tot] + 1
            elif mode == MODE_G:
                acc[tot] = acc[tot] + (1 if t == 0 else 2)
            elif t == 0:
                acc[tot] = acc[tot] + 1
            _window_rec(acc, n_max, m + t, mode, m, tot, 1)
    return acc


cdef void _all_rec(list acc, int n_max, int maxv, int total, object weight):
    cdef int v, tot, top
    cdef object w2
    top = n_max - total
    if top > maxv:
        top = maxv
    for v in range(top, 0, -1):
        tot = total
        w2 = weight * 2
        while True:
            tot += v
            if tot > n_max:
                break
            acc[tot] = acc[tot] + w2
            if v > 1:
                _all_rec(acc, n_max, v - 1, tot, w2)


def all_partition_weighted_counts(int n_max):
    cdef list acc = [0] * (n_max + 1)
    acc[0] = 1
    if n_max >= 1:
        _all_rec(acc, n_max, n_max, 0, 1)
    return acc
