"""Pure-Python coefficient and enumeration kernels.

Mirror of the compiled module ``overq._qkern``; ``overq.kernels`` selects
whichever is available.  Coefficient kernels work on dense sequences indexed
from the window's lowest exponent and never mutate their inputs.  Enumeration
kernels walk partition trees once per call and accumulate exact integer
counts, so results are arbitrary precision by construction.
"""

# Modes for window_diff_counts: which statistic a walk accumulates.
MODE_BOUNDED = 0  # partitions with largest - smallest <= t
MODE_EXACT = 1    # partitions with largest - smallest == t
MODE_PBAR = 2     # overpartitions (weight 2**distinct), spread <= t
MODE_G = 3        # as MODE_PBAR, but the weight halves when spread == t


def convolve(a, b, n_out):
    """Truncated Cauchy product: out[k] = sum_{i+j=k} a[i]*b[j], k < n_out."""
    la = len(a)
    lb = len(b)
    out = []
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


def invert_unit(c, n_out):
    """Reciprocal of a unit: (c * out)[k] = (k == 0), for k < n_out.

    Requires c[0] != 0.  Division happens only by c[0]; everything else is
    multiply-accumulate, so exactness is preserved.
    """
    c0 = c[0]
    out = [1 / c0 if c0 != 1 else c0]
    lc = len(c)
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


def mul_one_minus(c, g, k):
    """Multiply by the exact factor (1 - g*q^k), k >= 1; length preserved."""
    n = len(c)
    if g == 1:
        return [c[i] - c[i - k] if i >= k else c[i] for i in range(n)]
    if g == -1:
        return [c[i] + c[i - k] if i >= k else c[i] for i in range(n)]
    return [c[i] - g * c[i - k] if i >= k else c[i] for i in range(n)]


def div_one_minus(c, g, k):
    """Divide by the exact factor (1 - g*q^k), k >= 1; length preserved.

    Valid whenever the true quotient has no terms below the window start,
    which holds for every unit divisor of this shape.
    """
    n = len(c)
    out = list(c)
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


def box_weighted_counts(max_part, max_parts):
    """Weighted partition counts inside a box, indexed by the sum.

    Entry n is the number of overpartitions of n whose underlying partition
    has every part <= max_part and at most max_parts parts; each partition
    contributes 2**(number of distinct part values).  Length is
    max_part*max_parts + 1 and entry 0 counts the empty partition once.
    """
    cap = max_part * max_parts
    acc = [0] * (cap + 1)
    acc[0] = 1

    def rec(maxv, slots, total, weight):
        # Choose the next (largest remaining) distinct part value and its
        # multiplicity; every call path builds each partition exactly once.
        for v in range(maxv, 0, -1):
            tot = total
            w2 = weight * 2
            for m in range(1, slots + 1):
                tot += v
                acc[tot] += w2
                if m < slots and v > 1:
                    rec(v - 1, slots - m, tot, w2)

    if max_part >= 1 and max_parts >= 1:
        rec(max_part, max_parts, 0, 1)
    return acc


def window_diff_counts(n_max, t, mode):
    """Partition counts with the part spread constrained to a width-t window.

    Entry n (1 <= n <= n_max) accumulates, over partitions of n whose parts
    all lie in [smallest, smallest + t], the statistic selected by mode:

    * MODE_BOUNDED: 1 per partition (spread <= t).
    * MODE_EXACT:   1 per partition with spread exactly t.
    * MODE_PBAR:    2**distinct per partition (spread <= t).
    * MODE_G:       2**distinct, halved when the spread is exactly t.

    Entry 0 is always 0: the empty partition has no smallest part.
    """
    acc = [0] * (n_max + 1)

    for m in range(1, n_max + 1):
        top = m + t

        def rec(last, total, nd):
            for v in range(last + 1, top + 1):
                tot = total + v
                if tot > n_max:
                    break
                nd1 = nd + 1
                while True:
                    if mode == MODE_PBAR:
                        acc[tot] += 1 << nd1
                    elif mode == MODE_BOUNDED:
                        acc[tot] += 1
                    elif mode == MODE_G:
                        acc[tot] += 1 << (nd1 - 1 if v == top else nd1)
                    elif v == top:
                        acc[tot] += 1
                    rec(v, tot, nd1)
                    tot += v
                    if tot > n_max:
                        break

        # The smallest part m appears at least once; larger values are
        # optional and strictly increasing, so each multiset is hit once.
        tot = 0
        while True:
            tot += m
            if tot > n_max:
                break
            if mode == MODE_PBAR:
                acc[tot] += 2
            elif mode == MODE_BOUNDED:
                acc[tot] += 1
            elif mode == MODE_G:
                acc[tot] += 1 if t == 0 else 2
            elif t == 0:
                acc[tot] += 1
            rec(m, tot, 1)
    return acc


def all_partition_weighted_counts(n_max):
    """Overpartition totals: entry n is sum over partitions of 2**distinct.

    Entry 0 counts the empty partition once.  No constraint on parts.
    """
    acc = [0] * (n_max + 1)
    acc[0] = 1

    def rec(maxv, total, weight):
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
                acc[tot] += w2
                if v > 1:
                    rec(v - 1, tot, w2)

    if n_max >= 1:
        rec(n_max, 0, 1)
    return acc
