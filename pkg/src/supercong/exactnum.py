"""Exact rational arithmetic and prime-power modular reduction.

Every quantity in the engine is carried as an exact rational until the final
reduction step; reduction into Z/p^e is the single place where a p-divisible
denominator can surface, and it does so as an explicit error.
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from functools import lru_cache

# Exact rationals are stdlib Fractions: arbitrary-precision integer numerator
# and strictly positive denominator, always in lowest terms.
BigRational = Fraction


class UnknownIdError(KeyError):
    """Requested id is not in the relevant registry."""


class NonInvertibleError(ValueError):
    """gcd(a, m) > 1, so a has no inverse modulo m."""


class NotPIntegralError(ValueError):
    """p divides the denominator, so reduction mod p^e is ill-posed."""


class ModulusMismatchError(ValueError):
    """Arithmetic between residues living in different Z/p^e is a bug, not a coercion."""


@lru_cache(maxsize=None)
def is_prime(n: int) -> bool:
    """Deterministic trial division; ample at desk scale (n below ~10^8)."""
    if n < 2:
        return False
    if n < 4:
        return True
    if n % 2 == 0:
        return False
    d = 3
    while d * d <= n:
        if n % d == 0:
            return False
        d += 2
    return True


@dataclass(frozen=True)
class Residue:
    """An element of Z/p^e carrying its modulus (p prime, e >= 1).

    The stored value is normalized into [0, p^e); construction verifies
    primality of p.  Instances are immutable and safe to share.
    """

    value: int
    p: int
    e: int

    def __post_init__(self) -> None:
        if self.e < 1:
            raise ValueError(f"exponent must be positive, got {self.e}")
        if not is_prime(self.p):
            raise ValueError(f"modulus base {self.p} is not prime")
        m = self.p**self.e
        if not 0 <= self.value < m:
            object.__setattr__(self, "value", self.value % m)

    @property
    def modulus(self) -> int:
        return self.p**self.e

    def _same_ring(self, other: Residue) -> None:
        if (self.p, self.e) != (other.p, other.e):
            raise ModulusMismatchError(
                f"cannot combine residues mod {self.p}^{self.e} and mod {other.p}^{other.e}"
            )

    def __add__(self, other: Residue) -> Residue:
        self._same_ring(other)
        return Residue((self.value + other.value) % self.modulus, self.p, self.e)

    def __sub__(self, other: Residue) -> Residue:
        self._same_ring(other)
        return Residue((self.value - other.value) % self.modulus, self.p, self.e)

    def __mul__(self, other: Residue) -> Residue:
        self._same_ring(other)
        return Residue(self.value * other.value % self.modulus, self.p, self.e)

    def __neg__(self) -> Residue:
        return Residue(-self.value % self.modulus, self.p, self.e)

    def __int__(self) -> int:
        return self.value

    def __str__(self) -> str:
        return f"{self.value} (mod {self.p}^{self.e})"


def padic_valuation(q: Fraction | int, p: int) -> int:
    """Exponent of p in q: q = p^v * (unit with p-free numerator and denominator).

    Negative when p divides the denominator.  Undefined (raises) for q = 0.
    """
    if not is_prime(p):
        raise ValueError(f"{p} is not prime")
    q = Fraction(q)
    if q == 0:
        raise ValueError("p-adic valuation of zero is undefined")

    def count(n: int) -> int:
        v = 0
        while n % p == 0:
            n //= p
            v += 1
        return v

    return count(abs(q.numerator)) - count(q.denominator)


def mod_inverse(a: int, m: int) -> int:
    """x in [0, m) with a*x == 1 (mod m); requires gcd(a, m) = 1."""
    if m < 2:
        raise ValueError(f"modulus must be at least 2, got {m}")
    try:
        return pow(a, -1, m)
    except ValueError:
        raise NonInvertibleError(f"{a} is not invertible modulo {m}") from None


def reduce_mod(q: Fraction | int, p: int, e: int) -> Residue:
    """Reduce a p-integral rational into Z/p^e as num * den^(-1).

    Raises NotPIntegralError when p divides the denominator, which signals
    that the congruence being evaluated is ill-posed at this prime.
    """
    q = Fraction(q)
    if e < 1:
        raise ValueError(f"exponent must be positive, got {e}")
    if not is_prime(p):
        raise ValueError(f"{p} is not prime")
    if q.denominator % p == 0:
        raise NotPIntegralError(
            f"denominator {q.denominator} is divisible by {p}; not reducible mod {p}^{e}"
        )
    m = p**e
    return Residue(q.numerator * mod_inverse(q.denominator, m) % m, p, e)
