"""Special values: Bernoulli numbers and polynomials (exact and mod p),
Euler polynomials and numbers mod p, Fermat quotients, Legendre symbols.

The exact Bernoulli route is the oracle; the mod-p table is the fast path.
Tests pin the two together.
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from math import comb

from .exactnum import NotPIntegralError, Residue, is_prime

_BERNOULLI_EXACT: list[Fraction] = [Fraction(1)]


def bernoulli_exact(n: int) -> Fraction:
    """Exact B_n from the inverted convolution recurrence
    sum_{j=0}^{n} C(n+1, j) B_j = 0, cached up to the largest index seen."""
    if n < 0:
        raise ValueError(f"index must be nonnegative, got {n}")
    while len(_BERNOULLI_EXACT) <= n:
        m = len(_BERNOULLI_EXACT)
        acc = Fraction(0)
        for j in range(m):
            acc += comb(m + 1, j) * _BERNOULLI_EXACT[j]
        _BERNOULLI_EXACT.append(-acc / (m + 1))
    return _BERNOULLI_EXACT[n]


def bernoulli_poly_exact(n: int, x: Fraction | int) -> Fraction:
    """Exact B_n(x) = sum_{k=0}^{n} C(n,k) B_k x^(n-k)."""
    if n < 0:
        raise ValueError(f"degree must be nonnegative, got {n}")
    x = Fraction(x)
    total = Fraction(0)
    for k in range(n + 1):
        total += comb(n, k) * bernoulli_exact(k) * x ** (n - k)
    return total


@dataclass(frozen=True)
class BernoulliTableModP:
    """Residues B_0 .. B_max_index mod p.

    max_index stays below p-1: indices divisible by p-1 (beyond 0) have
    Bernoulli denominators divisible by p and are rejected rather than
    silently wrong.
    """

    p: int
    max_index: int
    entries: tuple[int, ...]


_BERNOULLI_MOD: dict[int, list[int]] = {}


def _inverse_table(p: int, limit: int) -> list[int]:
    # inv[k] for 1 <= k <= limit < p, via k^(-1) = -(p//k)(p mod k)^(-1)
    inv = [0] * (limit + 1)
    inv[1] = 1
    for k in range(2, limit + 1):
        inv[k] = (p - p // k) * inv[p % k] % p
    return inv


def bernoulli_table_mod_p(p: int, max_index: int) -> BernoulliTableModP:
    """B_0 .. B_max_index mod p via the recurrence run in GF(p).

    Legal because every B_k with k <= p-2 is p-integral (no index divisible
    by p-1 beyond 0 is touched) and every k+1 <= p-1 is invertible.
    The per-prime cache grows monotonically; build it before sharing
    between threads, or keep per-worker copies.
    """
    if not is_prime(p):
        raise ValueError(f"{p} is not prime")
    if max_index < 0:
        raise ValueError(f"index must be nonnegative, got {max_index}")
    if max_index > p - 2:
        raise ValueError(
            f"B_k mod {p} requires k <= {p - 2}: beyond that the denominator "
            f"of B_k can be divisible by {p}"
        )
    tab = _BERNOULLI_MOD.setdefault(p, [1])
    if len(tab) <= max_index:
        inv = _inverse_table(p, max_index + 1)
        for m in range(len(tab), max_index + 1):
            c = 1  # C(m+1, j), updated in j
            acc = 0
            for j in range(m):
                acc = (acc + c * tab[j]) % p
                c = c * (m + 1 - j) % p * inv[j + 1] % p
            tab.append(-inv[m + 1] * acc % p)
    return BernoulliTableModP(p, max_index, tuple(tab[: max_index + 1]))


def _residue_of(x: Fraction, p: int) -> int:
    if x.denominator % p == 0:
        raise NotPIntegralError(
            f"argument {x} has denominator divisible by {p}"
        )
    return x.numerator * pow(x.denominator, -1, p) % p


def bernoulli_poly_mod_p(n: int, x: Fraction | int, p: int) -> Residue:
    """B_n(x) mod p for 0 <= n <= p-2 and p-integral x."""
    if not is_prime(p):
        raise ValueError(f"{p} is not prime")
    if not 0 <= n <= p - 2:
        raise ValueError(f"degree {n} out of range [0, {p - 2}] for p = {p}")
    xr = _residue_of(Fraction(x), p)
    tab = bernoulli_table_mod_p(p, n).entries
    xpow = [1] * (n + 1)
    for i in range(1, n + 1):
        xpow[i] = xpow[i - 1] * xr % p
    inv = _inverse_table(p, max(n, 1))
    c = 1  # C(n, k), updated in k
    acc = 0
    for k in range(n + 1):
        acc = (acc + c * tab[k] % p * xpow[n - k]) % p
        if k < n:
            c = c * (n - k) % p * inv[k + 1] % p
    return Residue(acc, p, 1)


def euler_poly_mod_p(m: int, x: Fraction | int, p: int) -> Residue:
    """E_m(x) mod p through the Bernoulli bridge
    E_{n-1}(x) = (2^n / n)(B_n((x+1)/2) - B_n(x/2)) with n = m+1.

    Requires 0 <= m <= p-3 so that the two Bernoulli evaluations stay in the
    legal index range, and x with denominator coprime to p (x/2 and (x+1)/2
    are then automatically p-integral for odd p).
    """
    if not is_prime(p) or p < 5:
        raise ValueError(f"odd prime > 3 required, got {p}")
    if not 0 <= m <= p - 3:
        raise ValueError(f"index {m} out of range [0, {p - 3}] for p = {p}")
    x = Fraction(x)
    n = m + 1
    b1 = bernoulli_poly_mod_p(n, (x + 1) / 2, p).value
    b2 = bernoulli_poly_mod_p(n, x / 2, p).value
    val = pow(2, n, p) * pow(n, -1, p) % p * ((b1 - b2) % p) % p
    return Residue(val, p, 1)


def euler_number_mod_p(m: int, p: int) -> Residue:
    """Euler number E_m mod p.

    Computed as 2^m * E_m(1/2): substituting x = 1/2, t -> 2t in the
    generating function of E_m(x) recovers the generating function of E_m,
    so the bridge is forced even though neither side alone gives a finite
    algorithm.
    """
    half = euler_poly_mod_p(m, Fraction(1, 2), p)
    return Residue(pow(2, m, p) * half.value % p, p, 1)


def fermat_quotient2(p: int) -> int:
    """The exact integer (2^(p-1) - 1)/p for odd prime p."""
    if p == 2 or not is_prime(p):
        raise ValueError(f"odd prime required, got {p}")
    return (pow(2, p - 1) - 1) // p


def legendre_symbol(a: int, p: int) -> int:
    """Quadratic-residue status of a mod p via the Euler criterion:
    a^((p-1)/2) mod p mapped to {-1, 0, +1}."""
    if p == 2 or not is_prime(p):
        raise ValueError(f"odd prime required, got {p}")
    t = pow(a % p, (p - 1) // 2, p)
    if t == 0:
        return 0
    return 1 if t == 1 else -1
