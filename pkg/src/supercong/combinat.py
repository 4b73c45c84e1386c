"""Combinatorial kernels: factorials, generalized binomials, raising factorials,
harmonic numbers, fractional parts.  All exact."""

from __future__ import annotations

import math
from fractions import Fraction


class FactorialTable:
    """Monotonically growing table of n!.

    Grow-on-demand; pre-size with grow() before sharing across concurrent
    readers, or keep one table per worker.
    """

    def __init__(self, limit: int = 0):
        self._values = [1]
        self.grow(limit)

    def grow(self, limit: int) -> None:
        while len(self._values) <= limit:
            n = len(self._values)
            self._values.append(n * self._values[-1])

    def get(self, n: int) -> int:
        if n < 0:
            raise ValueError(f"factorial of negative integer {n}")
        self.grow(n)
        return self._values[n]

    @property
    def limit(self) -> int:
        return len(self._values) - 1

    @property
    def values(self) -> tuple[int, ...]:
        return tuple(self._values)


_FACTORIALS = FactorialTable()


def factorial(n: int) -> int:
    return _FACTORIALS.get(n)


def recip_factorial(n: int) -> Fraction:
    """1/n!, with 1/(negative)! = 0 -- the convention that makes the closed
    forms in the wz module total (it matches the vanishing of the
    corresponding binomial coefficient)."""
    if n < 0:
        return Fraction(0)
    return Fraction(1, _FACTORIALS.get(n))


def binomial(n: int, k: int) -> int:
    """Generalized binomial coefficient for any integer upper index.

    0 when k < 0, or when 0 <= n < k; otherwise the falling product
    n(n-1)...(n-k+1)/k!, which is an integer for every integer n
    (negative upper index included).
    """
    if k < 0:
        return 0
    if n >= 0:
        return math.comb(n, k) if k <= n else 0
    num = 1
    for j in range(k):
        num *= n - j
    # k! divides any product of k consecutive integers
    return num // _FACTORIALS.get(k)


def binomial_rational(a: Fraction | int, k: int) -> Fraction:
    """a(a-1)...(a-k+1)/k! for rational a and k >= 0."""
    if k < 0:
        raise ValueError(f"lower index must be nonnegative, got {k}")
    a = Fraction(a)
    out = Fraction(1)
    for j in range(k):
        out *= a - j
    return out / _FACTORIALS.get(k)


def pochhammer(a: Fraction | int, n: int) -> Fraction:
    """Raising factorial (a)_n = a(a+1)...(a+n-1), with (a)_0 = 1."""
    if n < 0:
        raise ValueError(f"length must be nonnegative, got {n}")
    a = Fraction(a)
    out = Fraction(1)
    for j in range(n):
        out *= a + j
    return out


def harmonic(n: int, order: int = 1) -> Fraction:
    """H_n (order 1) or H_n^(2) (order 2), exactly; H_0 = 0."""
    if order not in (1, 2):
        raise ValueError(f"order must be 1 or 2, got {order}")
    if n < 0:
        raise ValueError(f"index must be nonnegative, got {n}")
    total = Fraction(0)
    for k in range(1, n + 1):
        total += Fraction(1, k**order)
    return total


def frac_part(q: Fraction | int) -> Fraction:
    """q - floor(q), in [0, 1)."""
    q = Fraction(q)
    return q - math.floor(q)
