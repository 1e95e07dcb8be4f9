"""Exact arithmetic in Z/nZ.

Everything here works on canonical least non-negative residues. The public
functions accept either plain ints or :class:`Residue` / :class:`Modulus`
objects and return :class:`Residue` values, so results carry their modulus.
"""

from __future__ import annotations

import enum
import math
from dataclasses import dataclass
from functools import lru_cache
from typing import Union

from .errors import InvalidModulus, NotInvertible, OutOfRange

VANDERMONDE_MAX = 1000


class Primality(enum.Enum):
    PRIME = "known-prime"
    COMPOSITE = "known-composite"
    UNCHECKED = "unchecked"


def is_prime(n: int) -> bool:
    """Deterministic trial division up to sqrt(n)."""
    if n < 2:
        return False
    if n % 2 == 0:
        return n == 2
    for d in range(3, math.isqrt(n) + 1, 2):
        if n % d == 0:
            return False
    return True


def odd_primes(upper: int, lower: int = 3) -> list[int]:
    """Odd primes p with lower <= p <= upper, ascending (sieve)."""
    if upper < 3:
        return []
    sieve = bytearray([1]) * (upper + 1)
    sieve[0] = sieve[1] = 0
    for i in range(2, math.isqrt(upper) + 1):
        if sieve[i]:
            sieve[i * i :: i] = bytearray(len(range(i * i, upper + 1, i)))
    return [p for p in range(max(lower, 3), upper + 1) if sieve[p]]


@dataclass(frozen=True)
class Modulus:
    n: int
    primality: Primality = Primality.UNCHECKED

    def __post_init__(self):
        if not isinstance(self.n, int) or self.n < 2:
            raise InvalidModulus(f"modulus must be an integer >= 2, got {self.n!r}")
        if self.primality is Primality.PRIME and not is_prime(self.n):
            raise InvalidModulus(f"{self.n} is not prime")
        if self.primality is Primality.COMPOSITE and is_prime(self.n):
            raise InvalidModulus(f"{self.n} is prime")

    @classmethod
    def of(cls, n: int) -> "Modulus":
        """Build a modulus with its primality established."""
        if not isinstance(n, int) or n < 2:
            raise InvalidModulus(f"modulus must be an integer >= 2, got {n!r}")
        return cls(n, Primality.PRIME if is_prime(n) else Primality.COMPOSITE)

    @classmethod
    def prime(cls, p: int) -> "Modulus":
        return cls(p, Primality.PRIME)

    @property
    def is_prime(self) -> bool:
        if self.primality is Primality.UNCHECKED:
            return is_prime(self.n)
        return self.primality is Primality.PRIME

    def __int__(self):
        return self.n


@dataclass(frozen=True, eq=False)
class Residue:
    """An element of Z/nZ in canonical form."""

    value: int
    modulus: Modulus

    def __init__(self, value: int, modulus: Union[Modulus, int]):
        modulus = _as_modulus(modulus)
        object.__setattr__(self, "modulus", modulus)
        object.__setattr__(self, "value", value % modulus.n)

    @property
    def n(self) -> int:
        return self.modulus.n

    def _coerce(self, other) -> int:
        if isinstance(other, Residue):
            if other.n != self.n:
                raise InvalidModulus(f"moduli differ: {self.n} vs {other.n}")
            return other.value
        if isinstance(other, int):
            return other
        return NotImplemented

    def __add__(self, other):
        v = self._coerce(other)
        return NotImplemented if v is NotImplemented else Residue(self.value + v, self.modulus)

    __radd__ = __add__

    def __sub__(self, other):
        v = self._coerce(other)
        return NotImplemented if v is NotImplemented else Residue(self.value - v, self.modulus)

    def __rsub__(self, other):
        v = self._coerce(other)
        return NotImplemented if v is NotImplemented else Residue(v - self.value, self.modulus)

    def __mul__(self, other):
        v = self._coerce(other)
        return NotImplemented if v is NotImplemented else Residue(self.value * v, self.modulus)

    __rmul__ = __mul__

    def __neg__(self):
        return Residue(-self.value, self.modulus)

    def __pow__(self, exp: int):
        return mod_pow(self, exp)

    def __truediv__(self, other):
        v = self._coerce(other)
        if v is NotImplemented:
            return NotImplemented
        return self * mod_inv(Residue(v, self.modulus))

    def __eq__(self, other):
        if isinstance(other, Residue):
            return self.n == other.n and self.value == other.value
        if isinstance(other, int):
            return self.value == other
        return NotImplemented

    def __hash__(self):
        return hash(self.value)

    def __int__(self):
        return self.value

    __index__ = __int__

    def __repr__(self):
        return f"Residue({self.value}, {self.n})"


def _as_modulus(n: Union[Modulus, int]) -> Modulus:
    return n if isinstance(n, Modulus) else Modulus(n)


def _as_residue(x: Union[Residue, int], n: Union[Modulus, int, None] = None) -> Residue:
    if isinstance(x, Residue):
        return x
    if n is None:
        raise TypeError("a modulus is required when passing a plain int")
    return Residue(x, n)


def _odd_prime(p: Union[Modulus, int]) -> Modulus:
    m = p if isinstance(p, Modulus) else None
    n = p.n if m is not None else p
    if not isinstance(n, int) or n < 3 or not is_prime(n):
        raise InvalidModulus(f"expected an odd prime, got {n!r}")
    return m if m is not None and m.primality is Primality.PRIME else Modulus.prime(n)


def mod_pow(base: Union[Residue, int], exp: int, n: Union[Modulus, int, None] = None) -> Residue:
    """base**exp reduced mod n; 0**0 is 1."""
    base = _as_residue(base, n)
    if exp < 0:
        raise OutOfRange("exponent must be non-negative")
    return Residue(pow(base.value, exp, base.n), base.modulus)


def mod_inv(x: Union[Residue, int], n: Union[Modulus, int, None] = None) -> Residue:
    x = _as_residue(x, n)
    if math.gcd(x.value, x.n) != 1:
        raise NotInvertible(f"{x.value} is not invertible mod {x.n}")
    return Residue(pow(x.value, -1, x.n), x.modulus)


def legendre(a: Union[Residue, int], p: Union[Modulus, int]) -> int:
    """Legendre symbol (a/p) in {-1, 0, 1}, by Euler's criterion."""
    p = _odd_prime(p)
    v = int(a) % p.n
    if v == 0:
        return 0
    r = pow(v, (p.n - 1) // 2, p.n)
    return 1 if r == 1 else -1


@lru_cache(maxsize=64)
def factorial_table(p: int) -> tuple[int, ...]:
    """k! mod p for k = 0..p-1."""
    out = [1] * p
    for k in range(1, p):
        out[k] = out[k - 1] * k % p
    return tuple(out)


def factorial_mod(k: int, p: Union[Modulus, int]) -> Residue:
    p = _odd_prime(p)
    if not 0 <= k < p.n:
        raise OutOfRange(f"factorial_mod needs 0 <= k < p, got k={k}, p={p.n}")
    return Residue(factorial_table(p.n)[k], p)


def binom_mod(m: int, k: int, p: Union[Modulus, int]) -> Residue:
    """C(m, k) mod p for 0 <= k <= m < p, as a ratio of factorials."""
    p = _odd_prime(p)
    if not (0 <= k <= m < p.n):
        raise OutOfRange(f"binom_mod needs 0 <= k <= m < p, got m={m}, k={k}, p={p.n}")
    f = factorial_table(p.n)
    denom = mod_inv(Residue(f[k] * f[m - k], p))
    return Residue(f[m], p) * denom


def vandermonde_check(m: int) -> bool:
    """Exact-integer check of sum_k C(m,k)^2 == C(2m,m)."""
    if not 0 <= m <= VANDERMONDE_MAX:
        raise OutOfRange(f"vandermonde_check supports 0 <= m <= {VANDERMONDE_MAX}")
    return sum(math.comb(m, k) ** 2 for k in range(m + 1)) == math.comb(2 * m, m)


def power_sum(a: int, p: Union[Modulus, int]) -> Residue:
    """sum of x**a over the nonzero residues mod p, by direct summation."""
    p = _odd_prime(p)
    if a < 0:
        raise OutOfRange("exponent must be non-negative")
    return Residue(sum(pow(x, a, p.n) for x in range(1, p.n)), p)


def units(n: Union[Modulus, int]) -> list[Residue]:
    n = _as_modulus(n)
    return [Residue(x, n) for x in range(1, n.n) if math.gcd(x, n.n) == 1]
