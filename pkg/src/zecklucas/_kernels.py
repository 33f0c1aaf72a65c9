"""Digit-level kernels over Lucas-weighted digit arrays.

Every array here is ``int8``, least-significant index first, index ``i``
weighted by the Lucas number L_i (L_0 = 2, L_1 = 1).  The kernels never
see the integer values of their operands; they only move digits around
with value-preserving rewrites.  They are compiled with numba when it is
importable and run as plain Python otherwise (``.py_func`` exposes the
plain version for the compiled ones).

Kernels report failure through negative status codes rather than
exceptions so that the compiled and interpreted paths behave the same.
"""

import numpy as np

try:
    from numba import njit
except ImportError:  # pragma: no cover - exercised only without numba
    def njit(*args, **kwargs):
        if args and callable(args[0]):
            return args[0]
        return lambda f: f

# rule counter slots
R1, R2, R3, R4, R5, SPLIT, SPLIT_LOW = range(7)
N_COUNTERS = 7

# status codes
OK = 0
ERR_BOUND = -1      # a digit left [DIGIT_MIN, DIGIT_MAX]
ERR_WIDTH = -2      # a rewrite needed an index past the end of the buffer
ERR_CAP = -3        # rewrite budget exhausted
ERR_NEGATIVE = -4   # negative digit handed to normalize / unpayable borrow

DIGIT_MIN = -2
DIGIT_MAX = 9


@njit(cache=True)
def top_length(d):
    """Index of the highest nonzero digit plus one (0 for all-zero)."""
    n = d.shape[0]
    while n > 0 and d[n - 1] == 0:
        n -= 1
    return n


@njit(cache=True)
def rewrite_cap(n):
    # 8 * (length + bit length); value < L_(n+3) so bit length <= 0.7 n + 3
    return 8 * (n + (7 * n) // 10 + 3)


@njit(cache=True)
def normalize(d, counts):
    """Rewrite nonnegative digits in place into canonical Zeckendorf form.

    Always applies a rule at the highest index where one applies.  The
    anchor of a rule is the highest index it reads; at a given anchor a
    digit >= 2 is cleared first, then an adjacent pair, then the
    (L_0, L_2) pair.  Returns the length of the canonical result or a
    negative status.
    """
    n = d.shape[0]
    for k in range(n):
        if d[k] < 0:
            return ERR_NEGATIVE
        if d[k] > DIGIT_MAX:
            return ERR_BOUND
    i = top_length(d) - 1
    cap = rewrite_cap(n)
    steps = 0
    while i >= 0:
        v = d[i]
        if v >= 2:
            if i >= 2:
                if i + 1 >= n:
                    return ERR_WIDTH
                # 2 L_i = L_(i+1) + L_(i-2)
                d[i] -= 2
                d[i + 1] += 1
                d[i - 2] += 1
                counts[R2] += 1
                if d[i + 1] > DIGIT_MAX or d[i - 2] > DIGIT_MAX:
                    return ERR_BOUND
                top = i + 1
            elif i == 1:
                # 2 L_1 = L_0
                d[1] -= 2
                d[0] += 1
                counts[R3] += 1
                if d[0] > DIGIT_MAX:
                    return ERR_BOUND
                top = 1
            else:
                if n < 3:
                    return ERR_WIDTH
                # 2 L_0 = L_2 + L_1
                d[0] -= 2
                d[1] += 1
                d[2] += 1
                counts[R4] += 1
                if d[1] > DIGIT_MAX or d[2] > DIGIT_MAX:
                    return ERR_BOUND
                top = 2
        elif v == 1 and i >= 1 and d[i - 1] >= 1:
            if i + 1 >= n:
                return ERR_WIDTH
            # L_(i-1) + L_i = L_(i+1)
            d[i] -= 1
            d[i - 1] -= 1
            d[i + 1] += 1
            counts[R1] += 1
            if d[i + 1] > DIGIT_MAX:
                return ERR_BOUND
            top = i + 1
        elif v == 1 and i == 2 and d[0] >= 1:
            if n < 4:
                return ERR_WIDTH
            # L_0 + L_2 = L_1 + L_3
            d[2] -= 1
            d[0] -= 1
            d[1] += 1
            d[3] += 1
            counts[R5] += 1
            if d[1] > DIGIT_MAX or d[3] > DIGIT_MAX:
                return ERR_BOUND
            top = 3
        else:
            i -= 1
            continue
        steps += 1
        if steps > cap:
            return ERR_CAP
        i = top + 1 if top + 1 < n else n - 1
    return top_length(d)


@njit(cache=True)
def _split(d, p, counts):
    # L_p = L_(p-1) + L_(p-2)
    d[p] -= 1
    d[p - 1] += 1
    d[p - 2] += 1
    counts[SPLIT] += 1


@njit(cache=True)
def clear_borrows(d, counts):
    """Eliminate negative digits in place, most significant first.

    Each -1 at index i is paid for by the nearest unit above it, which is
    walked down by repeated L_p -> L_(p-1) + L_(p-2) splits until a piece
    lands on i.  Returns OK or a negative status.
    """
    n = d.shape[0]
    i = n - 1
    while i >= 0:
        if d[i] >= 0:
            i -= 1
            continue
        if d[i] < DIGIT_MIN:
            return ERR_BOUND
        # a unit at index 1 cannot pay for index 0 (L_1 < L_0)
        j = i + 2 if i == 0 else i + 1
        while j < n and d[j] <= 0:
            j += 1
        if j == n:
            if i == 1 and d[0] >= 1:
                # L_0 = 2 L_1
                d[0] -= 1
                d[1] += 2
                counts[SPLIT_LOW] += 1
                continue
            return ERR_NEGATIVE
        p = j
        while True:
            if i == 0 and p == 3:
                _split(d, 3, counts)
                p = 2
                continue
            _split(d, p, counts)
            if p - 1 == i or p - 2 == i:
                break
            p -= 2
        for k in range(i - 1, j + 1):
            if k >= 0 and d[k] > DIGIT_MAX:
                return ERR_BOUND
        # d[i] may still be negative if it started below -1
    return OK


@njit(cache=True)
def compare(a, b):
    """Three-way comparison of two canonical digit arrays: -1, 0 or 1."""
    na = top_length(a)
    nb = top_length(b)
    i = max(na, nb) - 1
    while i >= 2:
        x = a[i] if i < na else 0
        y = b[i] if i < nb else 0
        if x != y:
            return 1 if x > y else -1
        i -= 1
    # below index 2 the weights are not monotone: L_0 = 2 > L_1 = 1
    x = 0
    y = 0
    if na > 0:
        x += 2 * a[0]
    if na > 1:
        x += a[1]
    if nb > 0:
        y += 2 * b[0]
    if nb > 1:
        y += b[1]
    if x == y:
        return 0
    return 1 if x > y else -1


@njit(cache=True)
def add_into(out, x, y, counts):
    """out <- canonical(x + y); all three arrays share one width."""
    for k in range(out.shape[0]):
        out[k] = x[k] + y[k]
    return normalize(out, counts)


@njit(cache=True)
def sub_into(out, x, y, counts):
    """out <- canonical(x - y) for x >= y; all three arrays share one width."""
    for k in range(out.shape[0]):
        out[k] = x[k] - y[k]
    status = clear_borrows(out, counts)
    if status < 0:
        return status
    return normalize(out, counts)


@njit(cache=True)
def mul(a, b, width, counts):
    """Product by accumulating Lucas multiples of ``a`` selected by ``b``.

    The multiples a*L_i are produced on the fly from a*L_1 = a,
    a*L_0 = a + a and a*L_(i+1) = a*L_i + a*L_(i-1).
    Returns (digits, status).
    """
    acc = np.zeros(width, np.int8)
    nb = top_length(b)
    if nb == 0 or top_length(a) == 0:
        return acc, OK
    m1 = np.zeros(width, np.int8)
    m1[:a.shape[0]] = a
    m0 = np.zeros(width, np.int8)
    status = add_into(m0, m1, m1, counts)
    if status < 0:
        return acc, status
    tmp = np.zeros(width, np.int8)
    if b[0] == 1:
        acc[:] = m0
    if nb > 1 and b[1] == 1:
        status = add_into(tmp, acc, m1, counts)
        if status < 0:
            return acc, status
        acc, tmp = tmp, acc
    # prev = a*L_(i-2), cur = a*L_(i-1)
    prev = m0
    cur = m1
    for i in range(2, nb):
        status = add_into(tmp, cur, prev, counts)
        if status < 0:
            return acc, status
        prev, cur, tmp = cur, tmp, prev
        if b[i] == 1:
            status = add_into(tmp, acc, cur, counts)
            if status < 0:
                return acc, status
            acc, tmp = tmp, acc
    return acc, OK


@njit(cache=True)
def divmod_(a, b, counts):
    """Long division by trial subtraction of Lucas multiples of ``b``.

    Builds b*L_1, b*L_0, b*L_2, ... until the first multiple exceeding
    ``a``, then tries them in decreasing value order (..., L_3, L_2, L_0,
    L_1), subtracting each one that fits.  Returns
    (quotient digits, remainder digits, status).
    """
    na = a.shape[0]
    width = na + 4
    rows = na + 4
    table = np.zeros((rows, width), np.int8)
    quot = np.zeros(rows, np.int8)
    res = np.zeros(width, np.int8)
    res[:na] = a
    table[1, :b.shape[0]] = b
    built = 1
    if compare(table[1], res) <= 0:
        status = add_into(table[0], table[1], table[1], counts)
        if status < 0:
            return quot, res, status
        built = 2
        if compare(table[0], res) <= 0:
            while True:
                if built >= rows:
                    return quot, res, ERR_WIDTH
                status = add_into(table[built], table[built - 1],
                                  table[built - 2], counts)
                if status < 0:
                    return quot, res, status
                built += 1
                if compare(table[built - 1], res) > 0:
                    break
    tmp = np.zeros(width, np.int8)
    # decreasing value order over the built indices
    order = np.empty(built, np.int64)
    pos = 0
    for idx in range(built - 1, 1, -1):
        order[pos] = idx
        pos += 1
    if built >= 2:
        order[pos] = 0
        pos += 1
    order[pos] = 1
    for t in range(built):
        idx = order[t]
        if compare(table[idx], res) <= 0:
            status = sub_into(tmp, res, table[idx], counts)
            if status < 0:
                return quot, res, status
            res, tmp = tmp, res
            quot[idx] = 1
    return quot, res, OK
