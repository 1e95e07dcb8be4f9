# cython: language_level=3, boundscheck=False, wraparound=False, cdivision=True
"""Compiled inner loops. Signatures mirror invsum._pykernels exactly."""

from array import array

from libc.stdlib cimport malloc, free


cdef inline long long _add(long long a, long long b, long long base, int nd) nogil:
    # single digit only; multi-digit sums go through _add_digits
    cdef long long r = a + b
    return r - base if r >= base else r


cdef long long *_digit_table(long long size, long long base, int nd) except NULL:
    """Row i holds the base-``base`` digits of i, least significant first."""
    cdef long long *d = <long long *> malloc(size * nd * sizeof(long long))
    cdef long long i, v
    cdef int j
    if d == NULL:
        raise MemoryError()
    for i in range(size):
        v = i
        for j in range(nd):
            d[i * nd + j] = v % base
            v //= base
    return d


cdef inline long long _add_digits(const long long *da, const long long *db,
                                  long long base, int nd) nogil:
    cdef long long out = 0, w = 1, r
    cdef int j
    for j in range(nd):
        r = da[j] + db[j]
        if r >= base:
            r -= base
        out += r * w
        w *= base
    return out


cdef long long _size(long long base, int nd):
    cdef long long size = 1
    cdef int i
    for i in range(nd):
        size *= base
    return size


def pair_histogram(values, long long base, int ndigits):
    """hist[c] = #{(i, j) : values[i] + values[j] == c}."""
    cdef long long[:] s = array("q", values)
    cdef Py_ssize_t n = s.shape[0], i, j
    cdef long long size = _size(base, ndigits)
    hist = array("q", bytes(8 * size))
    cdef long long[:] h = hist
    cdef long long si
    cdef long long *dig
    if ndigits == 1:
        with nogil:
            for i in range(n):
                si = s[i]
                for j in range(n):
                    h[_add(si, s[j], base, 1)] += 1
        return hist.tolist()
    dig = _digit_table(size, base, ndigits)
    try:
        with nogil:
            for i in range(n):
                si = s[i]
                for j in range(n):
                    h[_add_digits(dig + si * ndigits, dig + s[j] * ndigits, base, ndigits)] += 1
    finally:
        free(dig)
    return hist.tolist()


def self_convolution(weights, long long base, int ndigits):
    """out[c] = sum over a + b == c of weights[a] * weights[b]."""
    cdef long long[:] m = array("q", weights)
    cdef long long size = _size(base, ndigits)
    if m.shape[0] != size:
        raise ValueError("weights must cover every element")
    out = array("q", bytes(8 * size))
    cdef long long[:] o = out
    cdef long long *support = <long long *> malloc(size * sizeof(long long))
    cdef Py_ssize_t n = 0, i, j
    cdef long long a, b, ma
    cdef long long *dig = NULL
    if support == NULL:
        raise MemoryError()
    try:
        if ndigits > 1:
            dig = _digit_table(size, base, ndigits)
        with nogil:
            for i in range(size):
                if m[i] != 0:
                    support[n] = i
                    n += 1
            for i in range(n):
                a = support[i]
                ma = m[a]
                for j in range(n):
                    b = support[j]
                    if ndigits == 1:
                        o[_add(a, b, base, 1)] += ma * m[b]
                    else:
                        o[_add_digits(dig + a * ndigits, dig + b * ndigits, base, ndigits)] += ma * m[b]
    finally:
        free(support)
        free(dig)
    return out.tolist()


cdef inline long long _powmod(long long b, long long e, long long p) nogil:
    cdef long long r = 1
    b %= p
    while e > 0:
        if e & 1:
            r = r * b % p
        b = b * b % p
        e >>= 1
    return r


def cw_power_sum(long long p, long long t):
    """sum over x, y in F_p* of (x^2 y + x y^2 + x + y - t x y)^(p-1), mod p."""
    if p < 3 or p >= 2147483648:
        raise ValueError("p out of range for 64-bit kernel")
    cdef long long x, y, v, acc = 0
    t %= p
    with nogil:
        for x in range(1, p):
            for y in range(1, p):
                v = (x * x % p * y + x * (y * y % p) + x + y) % p
                v = (v - t * x % p * y % p + p) % p
                acc += _powmod(v, p - 1, p)
    return acc % p
