"""The finite rings the counts are taken over.

Each structure numbers its elements ``0 .. order-1``. Addition is digit-wise
modulo ``base`` on ``ndigits`` base-``base`` digits, which covers Z/nZ
(one digit, base n) and F_{p^k} (k digits, base p) with one rule; the
compiled kernels rely on this.
"""

from __future__ import annotations

import math
from functools import cached_property
from typing import Union

from . import field as ff
from .errors import InvalidModulus, NotInvertible, UnsupportedStructure
from .residue import Modulus, Residue, is_prime, legendre


class Structure:
    base: int
    ndigits: int
    is_field = False

    @property
    def order(self) -> int:
        return self.base**self.ndigits

    @property
    def characteristic(self) -> int:
        return self.base

    @property
    def even(self) -> bool:
        return self.base % 2 == 0

    @property
    def descriptor(self) -> str:
        raise NotImplementedError

    def __repr__(self):
        return f"<{type(self).__name__} {self.descriptor}>"

    def __eq__(self, other):
        return type(self) is type(other) and self.descriptor == other.descriptor

    def __hash__(self):
        return hash(self.descriptor)

    def elements(self) -> range:
        return range(self.order)

    def index(self, x) -> int:
        if isinstance(x, Residue):
            x = x.value
        if isinstance(x, int):
            if not 0 <= x < self.order:
                raise ValueError(f"{x} is not an element index of {self.descriptor}")
            return x
        raise TypeError(f"cannot interpret {x!r} as an element of {self.descriptor}")

    def label(self, i: int) -> str:
        return str(i)

    def embed(self, n: int) -> int:
        """Index of the image of the integer n."""
        return n % self.base * self.base ** (self.ndigits - 1)

    def add(self, i: int, j: int) -> int:
        b = self.base
        out, w = 0, 1
        for _ in range(self.ndigits):
            out += ((i // w + j // w) % b) * w
            w *= b
        return out

    def neg(self, i: int) -> int:
        b = self.base
        out, w = 0, 1
        for _ in range(self.ndigits):
            out += (-(i // w) % b) * w
            w *= b
        return out

    def sub(self, i: int, j: int) -> int:
        return self.add(i, self.neg(j))

    def mul(self, i: int, j: int) -> int:
        raise NotImplementedError

    @cached_property
    def inverse_table(self) -> tuple[int, ...]:
        """Inverse index of every element, -1 for non-units."""
        raise NotImplementedError

    def inverse(self, i: int) -> int:
        r = self.inverse_table[i]
        if r < 0:
            raise NotInvertible(f"{self.label(i)} is not invertible in {self.descriptor}")
        return r

    def units(self) -> list[int]:
        return [i for i, r in enumerate(self.inverse_table) if r >= 0]

    def character(self, i: int) -> int:
        raise UnsupportedStructure(f"no quadratic character on {self.descriptor}")


class ResidueRing(Structure):
    """Z/nZ for any n >= 2; the counts run over its unit group."""

    ndigits = 1

    def __init__(self, n: int):
        self.modulus = Modulus.of(n)
        self.base = self.modulus.n

    @property
    def n(self) -> int:
        return self.base

    @property
    def descriptor(self) -> str:
        return f"n{self.n}"

    def embed(self, n: int) -> int:
        return n % self.n

    def add(self, i, j):
        return (i + j) % self.n

    def neg(self, i):
        return -i % self.n

    def mul(self, i, j):
        return i * j % self.n

    @cached_property
    def inverse_table(self):
        n = self.n
        return tuple(pow(x, -1, n) if math.gcd(x, n) == 1 else -1 for x in range(n))


class PrimeField(ResidueRing):
    is_field = True

    def __init__(self, p: int):
        if not isinstance(p, int) or p < 3 or not is_prime(p):
            raise InvalidModulus(f"expected an odd prime, got {p!r}")
        super().__init__(p)
        self.modulus = Modulus.prime(p)

    @property
    def p(self) -> int:
        return self.n

    @property
    def descriptor(self) -> str:
        return f"p{self.n}"

    @cached_property
    def inverse_table(self):
        p = self.n
        return (-1,) + tuple(pow(x, -1, p) for x in range(1, p))

    def character(self, i):
        return legendre(i, self.modulus)


class ExtensionField(Structure):
    """F_q wrapped for index-based counting; products go through log tables."""

    is_field = True

    def __init__(self, spec: ff.FieldSpec):
        self.spec = spec
        self.base = spec.p
        self.ndigits = spec.k

    @property
    def p(self) -> int:
        return self.spec.p

    @property
    def q(self) -> int:
        return self.spec.q

    @property
    def descriptor(self) -> str:
        return f"p{self.spec.p}k{self.spec.k}"

    def index(self, x) -> int:
        if isinstance(x, ff.FieldElement):
            return self.spec.element(x).index
        return super().index(x)

    def element(self, i: int) -> ff.FieldElement:
        return self.spec.from_index(i)

    def label(self, i):
        return str(self.spec.from_index(i))

    @cached_property
    def _logs(self) -> tuple[list[int], list[int]]:
        """(exp, log) tables for a primitive element; log[0] is -1."""
        q = self.q
        spec = self.spec
        factors = ff._prime_factors(q - 1)
        for idx in range(1, q):
            g = spec.from_index(idx)
            if all(ff.ff_pow(g, (q - 1) // r) != spec.one for r in factors):
                break
        exp = [0] * (q - 1)
        log = [-1] * q
        e = spec.one
        for i in range(q - 1):
            j = e.index
            exp[i] = j
            log[j] = i
            e = ff.ff_mul(e, g)
        return exp, log

    def mul(self, i, j):
        if i == 0 or j == 0:
            return 0
        exp, log = self._logs
        return exp[(log[i] + log[j]) % (self.q - 1)]

    @cached_property
    def inverse_table(self):
        exp, log = self._logs
        n = self.q - 1
        return (-1,) + tuple(exp[-log[i] % n] for i in range(1, self.q))

    def character(self, i):
        return ff.quadratic_character(self.spec.from_index(i))


def as_structure(obj: Union[Structure, ff.FieldSpec, Modulus, int]) -> Structure:
    """Coerce an int (odd prime -> F_p, otherwise Z/nZ), modulus or field spec."""
    if isinstance(obj, Structure):
        return obj
    if isinstance(obj, ff.FieldSpec):
        return ExtensionField(obj)
    if isinstance(obj, Modulus):
        obj = obj.n
    if isinstance(obj, int):
        if obj >= 3 and is_prime(obj):
            return PrimeField(obj)
        return ResidueRing(obj)
    raise TypeError(f"cannot build a structure from {obj!r}")


def extension_field(p: int, k: int) -> ExtensionField:
    return ExtensionField(ff.make_field(p, k))
