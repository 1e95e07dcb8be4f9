"""Finite fields F_q = F_p[a]/(f) of odd characteristic.

Polynomials are coefficient tuples, constant term first. Elements can be
addressed either as :class:`FieldElement` objects or by an integer index in
``range(q)``; the index orders elements lexicographically by their
coefficient tuple, so ``enumerate_field`` yields them in index order.
"""

from __future__ import annotations

import itertools
from dataclasses import dataclass
from typing import Iterator, Sequence

from .errors import InvalidModulus, SpecMismatch, TooLarge, ZeroInverse
from .residue import is_prime

MAX_DEGREE = 8
MAX_ENUMERATION = 10**6

Poly = tuple  # constant term first, no trailing zeros unless it is (0,)


# -- polynomials over F_p -------------------------------------------------

def _trim(c: Sequence[int]) -> list[int]:
    c = list(c)
    while len(c) > 1 and c[-1] == 0:
        c.pop()
    return c


def poly_mul(a: Sequence[int], b: Sequence[int], p: int) -> list[int]:
    out = [0] * (len(a) + len(b) - 1)
    for i, x in enumerate(a):
        if x:
            for j, y in enumerate(b):
                out[i + j] = (out[i + j] + x * y) % p
    return _trim(out)


def poly_divmod(a: Sequence[int], b: Sequence[int], p: int) -> tuple[list[int], list[int]]:
    """Quotient and remainder of a / b over F_p (b nonzero)."""
    a = _trim(a)
    b = _trim(b)
    if b == [0]:
        raise ZeroDivisionError("polynomial division by zero")
    lead_inv = pow(b[-1], -1, p)
    rem = a[:]
    quot = [0] * max(len(a) - len(b) + 1, 1)
    while len(rem) >= len(b) and rem != [0]:
        shift = len(rem) - len(b)
        c = rem[-1] * lead_inv % p
        quot[shift] = c
        for i, y in enumerate(b):
            rem[i + shift] = (rem[i + shift] - c * y) % p
        rem = _trim(rem)
    return _trim(quot), rem


def poly_mod(a: Sequence[int], f: Sequence[int], p: int) -> list[int]:
    return poly_divmod(a, f, p)[1]


def poly_sub(a: Sequence[int], b: Sequence[int], p: int) -> list[int]:
    n = max(len(a), len(b))
    a = list(a) + [0] * (n - len(a))
    b = list(b) + [0] * (n - len(b))
    return _trim([(x - y) % p for x, y in zip(a, b)])


def poly_gcd(a: Sequence[int], b: Sequence[int], p: int) -> list[int]:
    """Monic gcd over F_p."""
    a, b = _trim(a), _trim(b)
    while b != [0]:
        a, b = b, poly_mod(a, b, p)
    if a == [0]:
        return a
    inv = pow(a[-1], -1, p)
    return [x * inv % p for x in a]


def poly_powmod(base: Sequence[int], e: int, f: Sequence[int], p: int) -> list[int]:
    result = [1]
    base = poly_mod(base, f, p)
    while e:
        if e & 1:
            result = poly_mod(poly_mul(result, base, p), f, p)
        e >>= 1
        if e:
            base = poly_mod(poly_mul(base, base, p), f, p)
    return result


def _prime_factors(n: int) -> list[int]:
    out, d = [], 2
    while d * d <= n:
        if n % d == 0:
            out.append(d)
            while n % d == 0:
                n //= d
        d += 1
    if n > 1:
        out.append(n)
    return out


def is_irreducible(f: Sequence[int], p: int) -> bool:
    """Rabin's test for a monic polynomial f over F_p."""
    f = _trim(f)
    k = len(f) - 1
    if k < 1 or f[-1] != 1:
        return False
    if k == 1:
        return True
    x = [0, 1]
    # x^(p^k) == x mod f
    h = x
    for _ in range(k):
        h = poly_powmod(h, p, f, p)
    if _trim(poly_sub(h, x, p)) != [0]:
        return False
    for r in _prime_factors(k):
        h = x
        for _ in range(k // r):
            h = poly_powmod(h, p, f, p)
        if len(poly_gcd(poly_sub(h, x, p), f, p)) != 1:
            return False
    return True


# -- fields ----------------------------------------------------------------

@dataclass(frozen=True)
class FieldSpec:
    p: int
    k: int
    irreducible: tuple  # monic, degree k, constant term first

    def __post_init__(self):
        _check_char(self.p)
        if len(self.irreducible) != self.k + 1 or self.irreducible[-1] != 1:
            raise InvalidModulus("irreducible must be monic of degree k")
        if not is_irreducible(self.irreducible, self.p):
            raise InvalidModulus(f"{self.irreducible} is reducible over F_{self.p}")

    @property
    def q(self) -> int:
        return self.p**self.k

    def element(self, value) -> "FieldElement":
        """Coerce an index, an int-like constant, a coefficient sequence or an element."""
        if isinstance(value, FieldElement):
            if value.spec != self:
                raise SpecMismatch("element belongs to another field")
            return value
        if isinstance(value, (tuple, list)):
            if len(value) != self.k:
                raise ValueError(f"expected {self.k} coefficients")
            return FieldElement(tuple(int(c) % self.p for c in value), self)
        raise TypeError(f"cannot build a field element from {value!r}")

    def constant(self, n: int) -> "FieldElement":
        """Image of the integer n in F_q."""
        return FieldElement((n % self.p,) + (0,) * (self.k - 1), self)

    def from_index(self, idx: int) -> "FieldElement":
        if not 0 <= idx < self.q:
            raise ValueError(f"index {idx} out of range for q={self.q}")
        coeffs = []
        for i in range(self.k):
            coeffs.append(idx // self.p ** (self.k - 1 - i) % self.p)
        return FieldElement(tuple(coeffs), self)

    @property
    def zero(self) -> "FieldElement":
        return self.constant(0)

    @property
    def one(self) -> "FieldElement":
        return self.constant(1)

    @property
    def generator(self) -> "FieldElement":
        """The class of the indeterminate, a root of the irreducible."""
        if self.k == 1:
            return self.constant(-self.irreducible[0])
        return FieldElement((0, 1) + (0,) * (self.k - 2), self)

    def __str__(self):
        return f"F_{self.q}"


def _check_char(p: int):
    if not isinstance(p, int) or p < 3 or not is_prime(p):
        raise InvalidModulus(f"characteristic must be an odd prime, got {p!r}")


@dataclass(frozen=True)
class FieldElement:
    coeffs: tuple
    spec: FieldSpec

    def __post_init__(self):
        if len(self.coeffs) != self.spec.k or any(not 0 <= c < self.spec.p for c in self.coeffs):
            raise ValueError(f"bad coefficients {self.coeffs} for {self.spec}")

    @property
    def index(self) -> int:
        idx = 0
        for c in self.coeffs:
            idx = idx * self.spec.p + c
        return idx

    def is_zero(self) -> bool:
        return not any(self.coeffs)

    def __add__(self, other):
        return ff_add(self, other)

    def __sub__(self, other):
        return ff_add(self, ff_neg(other))

    def __mul__(self, other):
        return ff_mul(self, other)

    def __neg__(self):
        return ff_neg(self)

    def __truediv__(self, other):
        return ff_mul(self, ff_inv(other))

    def __pow__(self, e: int):
        return ff_pow(self, e)

    def __str__(self):
        terms = []
        for i in reversed(range(self.spec.k)):
            c = self.coeffs[i]
            if not c:
                continue
            if i == 0:
                terms.append(str(c))
            else:
                mono = "a" if i == 1 else f"a^{i}"
                terms.append(mono if c == 1 else f"{c}{mono}")
        return "+".join(terms) or "0"


def make_field(p: int, k: int) -> FieldSpec:
    """F_{p^k} modulo the lexicographically smallest monic irreducible of degree k.

    Candidates are ordered by their non-leading coefficients compared
    constant term first; the first irreducible one wins.
    """
    p = int(p)
    _check_char(p)
    if not 1 <= k <= MAX_DEGREE:
        raise InvalidModulus(f"degree must be in 1..{MAX_DEGREE}, got {k}")
    for low in itertools.product(range(p), repeat=k):
        f = tuple(low) + (1,)
        if is_irreducible(f, p):
            return FieldSpec(p, k, f)
    raise AssertionError("unreachable: irreducibles exist in every degree")


def _same(a: FieldElement, b: FieldElement):
    if a.spec != b.spec:
        raise SpecMismatch(f"{a.spec} vs {b.spec}")


def ff_add(a: FieldElement, b: FieldElement) -> FieldElement:
    _same(a, b)
    p = a.spec.p
    return FieldElement(tuple((x + y) % p for x, y in zip(a.coeffs, b.coeffs)), a.spec)


def ff_neg(a: FieldElement) -> FieldElement:
    p = a.spec.p
    return FieldElement(tuple(-x % p for x in a.coeffs), a.spec)


def _pad(c: Sequence[int], k: int) -> tuple:
    return tuple(c) + (0,) * (k - len(c))


def ff_mul(a: FieldElement, b: FieldElement) -> FieldElement:
    _same(a, b)
    s = a.spec
    prod = poly_mod(poly_mul(a.coeffs, b.coeffs, s.p), s.irreducible, s.p)
    return FieldElement(_pad(prod, s.k), s)


def ff_inv(a: FieldElement) -> FieldElement:
    """Inverse by the extended Euclidean algorithm on polynomials."""
    if a.is_zero():
        raise ZeroInverse("0 has no inverse")
    s = a.spec
    p = s.p
    r0, r1 = _trim(s.irreducible), _trim(a.coeffs)
    t0, t1 = [0], [1]
    while r1 != [0]:
        quot, rem = poly_divmod(r0, r1, p)
        r0, r1 = r1, rem
        t0, t1 = t1, poly_sub(t0, poly_mul(quot, t1, p), p)
    # r0 is a nonzero constant since the modulus is irreducible
    c = pow(r0[0], -1, p)
    inv = poly_mod([x * c % p for x in t0], s.irreducible, p)
    return FieldElement(_pad(inv, s.k), s)


def ff_pow(a: FieldElement, e: int) -> FieldElement:
    if e < 0:
        return ff_pow(ff_inv(a), -e)
    s = a.spec
    return FieldElement(_pad(poly_powmod(a.coeffs, e, s.irreducible, s.p), s.k), s)


def is_square(a: FieldElement) -> bool:
    """Euler-type test: a == 0 or a^((q-1)/2) == 1."""
    if a.is_zero():
        return True
    return ff_pow(a, (a.spec.q - 1) // 2) == a.spec.one


def quadratic_character(a: FieldElement) -> int:
    if a.is_zero():
        return 0
    return 1 if is_square(a) else -1


def enumerate_field(spec: FieldSpec) -> Iterator[FieldElement]:
    """All q elements once each, in index (lexicographic coefficient) order."""
    if spec.q > MAX_ENUMERATION:
        raise TooLarge(f"q={spec.q} exceeds {MAX_ENUMERATION}")
    for coeffs in itertools.product(range(spec.p), repeat=spec.k):
        yield FieldElement(coeffs, spec)
