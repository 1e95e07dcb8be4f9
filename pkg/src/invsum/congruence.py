"""N_p(t) modulo p as a polynomial in t, and the 16/t congruence.

Counting non-solutions with Fermat's little theorem and killing monomials
with power sums over F_p* turns N_p(t) mod p into

    N_p(t) = -3 + sum_{k even} c_k t^k   (mod p),
    c_k = C(p-1-k, (p-1-k)/2) / (k! ((p-1-k)/2)!^2).

The multinomial expansion behind this is never materialised; the double
power sum is evaluated directly instead (``power_sum_check``).
"""

from __future__ import annotations

from dataclasses import dataclass
from functools import lru_cache
from types import MappingProxyType
from typing import Mapping, Union

from . import kernels
from .counting import m_table, n_value_formula
from .errors import OutOfRange, TooLarge, ZeroInverse
from .residue import Modulus, Residue, _odd_prime, binom_mod, factorial_table, mod_inv

POWER_SUM_MAX_P = 101


@dataclass(frozen=True)
class CoefficientVector:
    p: int
    coeffs: Mapping  # even k -> c_k as int in [0, p)

    def __post_init__(self):
        if sorted(self.coeffs) != list(range(0, self.p, 2)):
            raise ValueError("keys must be exactly the even integers in [0, p-1]")

    def to_dict(self) -> dict:
        return {"p": self.p, "coeffs": {str(k): self.coeffs[k] for k in sorted(self.coeffs)}}


def _t_value(t, p: int) -> int:
    return int(t) % p


def power_sum_check(p: Union[Modulus, int], t, limit: int = POWER_SUM_MAX_P) -> bool:
    """(p-1)^2 - N_p(t) against the double sum of P(x, y)^(p-1) mod p."""
    p = _odd_prime(p).n
    if p > limit:
        raise TooLarge(f"p={p} exceeds the power-sum cap {limit}")
    t = _t_value(t, p)
    direct = kernels.cw_power_sum(p, t)
    n = n_value_formula(t, m_table(p))
    return direct == ((p - 1) ** 2 - n) % p


def coefficient_vector(p: Union[Modulus, int]) -> CoefficientVector:
    return _coefficient_vector(_odd_prime(p).n)


@lru_cache(maxsize=256)
def _coefficient_vector(p: int) -> CoefficientVector:
    mod = Modulus.prime(p)
    fact = factorial_table(p)
    coeffs = {}
    for k in range(0, p, 2):
        h = (p - 1 - k) // 2
        denom = fact[k] * fact[h] * fact[h] % p
        c = binom_mod(p - 1 - k, h, mod) * mod_inv(Residue(denom, mod))
        coeffs[k] = c.value
    return CoefficientVector(p, MappingProxyType(coeffs))


def congruence_eval(cv: CoefficientVector, t) -> Residue:
    """(-3 + sum c_k t^k) mod p, by Horner in t^2."""
    p = cv.p
    t = _t_value(t, p)
    t2 = t * t % p
    acc = 0
    for k in sorted(cv.coeffs, reverse=True):
        acc = (acc * t2 + cv.coeffs[k]) % p
    return Residue(acc - 3, p)


def mirror_sides(p: Union[Modulus, int], k: int) -> tuple[int, int]:
    """Both sides of (p-1-k)! (k/2)!^2 4^k == (-1)^((p-1)/2) k! ((p-1-k)/2)!^2 mod p."""
    p = _odd_prime(p).n
    if k % 2 or not 0 <= k <= p - 1:
        raise OutOfRange(f"k must be even in [0, {p - 1}], got {k}")
    f = factorial_table(p)
    h = (p - 1 - k) // 2
    lhs = f[p - 1 - k] * f[k // 2] ** 2 * pow(4, k, p) % p
    sign = 1 if (p - 1) // 2 % 2 == 0 else -1
    rhs = sign * f[k] * f[h] ** 2 % p
    return lhs, rhs


def mirror_identity_check(p: Union[Modulus, int], k: int) -> bool:
    lhs, rhs = mirror_sides(p, k)
    return lhs == rhs


def mirror_recurrence_step(p: Union[Modulus, int], k: int) -> bool:
    """Ratio of consecutive sides (k -> k+2) agrees on both sides.

    Written out: 16 (k/2+1)^2 / ((p-1-k)(p-2-k)) against
    (k+1)(k+2) / ((p-1-k)/2)^2, both mod p, for even k <= p-3.
    """
    p = _odd_prime(p).n
    if k % 2 or not 0 <= k <= p - 3:
        raise OutOfRange(f"k must be even in [0, {p - 3}], got {k}")
    h = (p - 1 - k) // 2
    lhs = 16 * (k // 2 + 1) ** 2 * pow((p - 1 - k) * (p - 2 - k), -1, p) % p
    rhs = (k + 1) * (k + 2) * pow(h * h, -1, p) % p
    return lhs == rhs


def congruence_16_over_t(p: Union[Modulus, int], t) -> bool:
    """N_p(16/t) == N_p(t) mod p, by the polynomial and by the count."""
    p = _odd_prime(p).n
    t = _t_value(t, p)
    if t == 0:
        raise ZeroInverse("t must be nonzero")
    u = 16 * pow(t, -1, p) % p
    cv = coefficient_vector(p)
    by_poly = congruence_eval(cv, t) == congruence_eval(cv, u)
    m = m_table(p)
    by_count = (n_value_formula(t, m) - n_value_formula(u, m)) % p == 0
    return by_poly and by_count
