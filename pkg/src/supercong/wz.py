"""The certificate pair F(n,k), G(n,k): exact evaluation, the pair identity,
both telescoping collapses, and the factored closed form for G((p+1)/2, k).

F(n,0) reduces to (3n+1)(-8)^(-n) C(2n,n)^3, so the telescoped F-column is
exactly the half/full central-binomial sum checked by the congruence registry.
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction

from .combinat import binomial, factorial, pochhammer, recip_factorial


@dataclass(frozen=True)
class GridVerdict:
    """Outcome of an identity checked over a finite grid."""

    n_max: int
    k_max: int
    failures: tuple[tuple[int, int], ...]
    passed: bool

    @staticmethod
    def collect(n_max: int, k_max: int, failures: list[tuple[int, int]]) -> "GridVerdict":
        fails = tuple(sorted(failures))
        return GridVerdict(n_max, k_max, fails, not fails)


def _pow2(e: int) -> Fraction:
    # 2^e for possibly negative e, exactly
    return Fraction(1 << e) if e >= 0 else Fraction(1, 1 << -e)


def eval_f(n: int, k: int) -> Fraction:
    """F(n,k) = (-1)^n (3n-2k+1) C(2n,n) C(2n-2k,n-k) C(2n-2k,n) / 2^(3n-2k).

    Zero whenever n < k, and F(n,n) = 0 for n >= 1.
    """
    if n < 0 or k < 0:
        raise ValueError("indices must be nonnegative")
    c = binomial(2 * n, n) * binomial(2 * n - 2 * k, n - k) * binomial(2 * n - 2 * k, n)
    if c == 0:
        return Fraction(0)
    sign = -1 if n % 2 else 1
    return sign * (3 * n - 2 * k + 1) * c / _pow2(3 * n - 2 * k)


def eval_g(n: int, k: int) -> Fraction:
    """G(n,k) = (-1)^(n+1) n C(2n,n) C(2n-2k,n-k) C(2n-2k,n-1) / 2^(3n-2k).

    Zero whenever n < k, and zero when the last binomial is out of range.
    """
    if n < 0 or k < 0:
        raise ValueError("indices must be nonnegative")
    if n == 0:
        return Fraction(0)
    c = binomial(2 * n, n) * binomial(2 * n - 2 * k, n - k) * binomial(2 * n - 2 * k, n - 1)
    if c == 0:
        return Fraction(0)
    sign = 1 if n % 2 else -1
    return sign * n * c / _pow2(3 * n - 2 * k)


def check_pair_identity(n_max: int, k_max: int) -> GridVerdict:
    """Verify F(n,k-1) - F(n,k) = G(n+1,k) - G(n,k) exactly on
    0 <= n <= n_max, 1 <= k <= k_max."""
    if n_max < 1 or k_max < 1:
        raise ValueError("grid bounds must be at least 1")
    failures = []
    for n in range(n_max + 1):
        for k in range(1, k_max + 1):
            lhs = eval_f(n, k - 1) - eval_f(n, k)
            rhs = eval_g(n + 1, k) - eval_g(n, k)
            if lhs != rhs:
                failures.append((n, k))
    return GridVerdict.collect(n_max, k_max, failures)


def telescope_half_sum(m: int) -> tuple[Fraction, Fraction]:
    """(sum_{n=0}^{m} F(n,0), sum_{k=1}^{m} G(m+1,k)); the pair identity
    forces the two components to be equal.  m plays the role of (p-1)/2 but
    needs no primality."""
    if m < 1:
        raise ValueError(f"m must be positive, got {m}")
    f_side = Fraction(0)
    for n in range(m + 1):
        f_side += eval_f(n, 0)
    g_side = Fraction(0)
    for k in range(1, m + 1):
        g_side += eval_g(m + 1, k)
    return f_side, g_side


def telescope_full_sum(big_m: int) -> tuple[Fraction, Fraction]:
    """(sum_{n=0}^{M-1} F(n,0), sum_{k=1}^{M-1} G(M,k)) for M >= 2.

    For odd M the G-column also vanishes for every k > (M+1)/2, so the
    full sum collapses onto k <= (M+1)/2; see upper_tail_vanishes.
    """
    if big_m < 2:
        raise ValueError(f"M must be at least 2, got {big_m}")
    f_side = Fraction(0)
    for n in range(big_m):
        f_side += eval_f(n, 0)
    g_side = Fraction(0)
    for k in range(1, big_m):
        g_side += eval_g(big_m, k)
    return f_side, g_side


def upper_tail_vanishes(big_m: int) -> bool:
    """For odd M: G(M,k) = 0 for all (M+1)/2 < k <= M-1."""
    if big_m < 3 or big_m % 2 == 0:
        raise ValueError(f"odd M >= 3 required, got {big_m}")
    for k in range((big_m + 1) // 2 + 1, big_m):
        if eval_g(big_m, k) != 0:
            return False
    return True


def closed_form_g(p_odd: int, k: int) -> Fraction:
    """Factored closed form for G((p+1)/2, k) on 1 <= k <= (p+1)/2:

        32 p (-1)^((p-1)/2) C(p-1,(p-1)/2)^3 / 2^((3p+3)/2)
          * ((p-1)/2)! / ( ((p+3)/2 - 2k)! * (p/2 + 1 - k)_{k-1}^2 * 4^k )

    with 1/(negative)! = 0, which makes the form total on its k-range.
    p_odd only needs to be odd: the identity is rational-function algebra,
    not a primality fact, so composite odd values exercise it too.
    """
    if p_odd < 5 or p_odd % 2 == 0:
        raise ValueError(f"odd integer >= 5 required, got {p_odd}")
    if not 1 <= k <= (p_odd + 1) // 2:
        raise ValueError(f"k = {k} outside [1, {(p_odd + 1) // 2}]")
    h = (p_odd - 1) // 2
    sign = -1 if h % 2 else 1
    prefactor = sign * 32 * p_odd * binomial(p_odd - 1, h) ** 3 / _pow2((3 * p_odd + 3) // 2)
    shifted = pochhammer(Fraction(p_odd, 2) + 1 - k, k - 1)  # never zero for odd p
    tail = factorial(h) * recip_factorial((p_odd + 3) // 2 - 2 * k) / (shifted * shifted) / Fraction(4) ** k
    return prefactor * tail
