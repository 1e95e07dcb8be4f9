"""Pure-Python/numpy implementations of the hot loops.

Used when the compiled extension is unavailable. Every function returns the
same values as its counterpart in ``_ckernels``.
"""

import numpy as np

_CHUNK = 1 << 22  # elements per temporary block


def _digit_add(a, b, base, ndigits):
    if ndigits == 1:
        return (a + b) % base
    out = np.zeros(np.broadcast(a, b).shape, dtype=np.int64)
    w = 1
    for _ in range(ndigits):
        out += ((a // w + b // w) % base) * w
        w *= base
    return out


def pair_histogram(values, base, ndigits):
    """hist[c] = #{(i, j) : values[i] + values[j] == c}."""
    s = np.asarray(values, dtype=np.int64)
    size = base**ndigits
    hist = np.zeros(size, dtype=np.int64)
    if s.size == 0:
        return hist.tolist()
    rows = max(1, _CHUNK // s.size)
    for start in range(0, s.size, rows):
        sums = _digit_add(s[start : start + rows, None], s[None, :], base, ndigits)
        hist += np.bincount(sums.ravel(), minlength=size)
    return hist.tolist()


def self_convolution(weights, base, ndigits):
    """out[c] = sum over a + b == c of weights[a] * weights[b]."""
    m = np.asarray(weights, dtype=np.int64)
    size = base**ndigits
    if m.size != size:
        raise ValueError("weights must cover every element")
    if ndigits == 1:
        full = np.convolve(m, m)
        out = full[:base].copy()
        out[: base - 1] += full[base:]
        return out.tolist()
    support = np.flatnonzero(m)
    out = np.zeros(size, dtype=np.int64)
    if support.size == 0:
        return out.tolist()
    rows = max(1, _CHUNK // support.size)
    for start in range(0, support.size, rows):
        a = support[start : start + rows, None]
        sums = _digit_add(a, support[None, :], base, ndigits)
        prods = m[a] * m[support][None, :]
        np.add.at(out, sums.ravel(), prods.ravel())
    return out.tolist()


def _powmod(v, e, p):
    r = np.ones_like(v)
    b = v % p
    while e:
        if e & 1:
            r = r * b % p
        b = b * b % p
        e >>= 1
    return r


def cw_power_sum(p, t):
    """sum over x, y in F_p* of (x^2 y + x y^2 + x + y - t x y)^(p-1), mod p."""
    if p < 3 or p >= 2147483648:
        raise ValueError("p out of range for 64-bit kernel")
    x = np.arange(1, p, dtype=np.int64)[:, None]
    y = np.arange(1, p, dtype=np.int64)[None, :]
    t %= p
    v = (x * x % p * y + x * (y * y % p) + x + y) % p
    v = (v - t * x % p * y % p) % p
    return int(_powmod(v, p - 1, p).sum() % p)
