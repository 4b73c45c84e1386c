"""Finite prime-free identities used by the congruence machinery, each
checkable exactly for every n in a declared range.

Provenance of I1-I9 is numerical evidence, not proof: the registry records
them as assumptions-with-evidence and the range checks are the evidence.
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from math import comb
from typing import Callable

from .combinat import binomial, binomial_rational, factorial, frac_part, harmonic, recip_factorial
from .exactnum import UnknownIdError
from .special import bernoulli_poly_exact
from .wz import GridVerdict


@dataclass(frozen=True)
class IdentitySpec:
    id: str
    description: str
    n_min: int
    lhs: Callable[[int], Fraction] | None
    rhs: Callable[[int], Fraction] | None
    check: Callable[[int], bool]


def _pointwise(lhs, rhs):
    return lambda n: lhs(n) == rhs(n)


# -- even/odd companions over C(2n,k)C(2n-k,k)/4^k ---------------------------


def _fold_even(n: int, weight) -> Fraction:
    # sum_{k=0}^{n} C(2n,k) C(2n-k,k) weight(k) / 4^k
    total = Fraction(0)
    h1 = Fraction(0)
    h2 = Fraction(0)
    for k in range(n + 1):
        if k:
            h1 += Fraction(1, k)
            h2 += Fraction(1, k * k)
        w = weight(k, h1, h2)
        if w:
            total += Fraction(comb(2 * n, k) * comb(2 * n - k, k), 4**k) * w
    return total


def _fold_odd(n: int, weight) -> Fraction:
    # sum_{k=0}^{n} C(2n+1,k) C(2n+1-k,k) weight(k) / 4^k
    total = Fraction(0)
    h1 = Fraction(0)
    h2 = Fraction(0)
    for k in range(n + 1):
        if k:
            h1 += Fraction(1, k)
            h2 += Fraction(1, k * k)
        w = weight(k, h1, h2)
        if w:
            total += Fraction(comb(2 * n + 1, k) * comb(2 * n + 1 - k, k), 4**k) * w
    return total


_W_ONE = lambda k, h1, h2: 1
_W_H = lambda k, h1, h2: h1
_W_HH = lambda k, h1, h2: h1 * h1 + h2
_W_H2 = lambda k, h1, h2: h2

_i1_lhs = lambda n: _fold_even(n, _W_ONE)
_i1_rhs = lambda n: Fraction(comb(4 * n, 2 * n), 4**n)
_i2_lhs = lambda n: _fold_odd(n, _W_ONE)
_i2_rhs = lambda n: Fraction(comb(4 * n + 1, 2 * n + 1), 4**n)
_i3_lhs = lambda n: _fold_even(n, _W_H)
_i3_rhs = lambda n: _i1_rhs(n) * (3 * harmonic(2 * n) - 2 * harmonic(4 * n))
_i4_lhs = lambda n: _fold_odd(n, _W_H)
_i4_rhs = lambda n: _i2_rhs(n) * (3 * harmonic(2 * n + 1) - 2 * harmonic(4 * n + 2))


def _i5_rhs(n: int) -> Fraction:
    c = _i1_rhs(n)
    return c * (5 * harmonic(2 * n, 2) - 4 * harmonic(4 * n, 2)) + c * (
        3 * harmonic(2 * n) - 2 * harmonic(4 * n)
    ) ** 2


def _i6_rhs(n: int) -> Fraction:
    c = _i2_rhs(n)
    return c * (
        (5 * harmonic(2 * n + 1, 2) - 4 * harmonic(4 * n + 2, 2))
        + (3 * harmonic(2 * n + 1) - 2 * harmonic(4 * n + 2)) ** 2
    )


_i5_lhs = lambda n: _fold_even(n, _W_HH)
_i6_lhs = lambda n: _fold_odd(n, _W_HH)


# -- quarter-parameter identities ---------------------------------------------


def _quarter_pair(n: int, a_num: int, b_num: int) -> tuple[Fraction, Fraction]:
    """(lhs, rhs) of sum_k C(n,k) C(b/4,k) H_k^(2)
       = (-1)^n C(a/4,n) (H_n^(2) - sum_k (-1)^k / (k^2 C(a/4,k)))."""
    a = Fraction(a_num, 4)
    b = Fraction(b_num, 4)
    lhs = Fraction(0)
    inner = Fraction(0)
    cb = Fraction(1)  # C(b, k)
    ca = Fraction(1)  # C(a, k)
    h2 = Fraction(0)
    for k in range(1, n + 1):
        cb *= (b - k + 1) / k
        ca *= (a - k + 1) / k
        h2 += Fraction(1, k * k)
        lhs += comb(n, k) * cb * h2
        inner += Fraction((-1) ** k, k * k) / ca
    sign = -1 if n % 2 else 1
    rhs = sign * binomial_rational(a, n) * (h2 - inner)
    return lhs, rhs


_i7_lhs = lambda n: _quarter_pair(n, -1, -3)[0]
_i7_rhs = lambda n: _quarter_pair(n, -1, -3)[1]
_i8_lhs = lambda n: _quarter_pair(n, -3, -1)[0]
_i8_rhs = lambda n: _quarter_pair(n, -3, -1)[1]


def _i9_lhs(n: int) -> Fraction:
    total = Fraction(0)
    for k in range(1, n + 1):
        total += Fraction((-1) ** k, k * k * comb(n, k))
    return total


def _i9_rhs(n: int) -> Fraction:
    alt = Fraction(0)
    for k in range(1, n + 1):
        alt += Fraction((-1) ** k, k * k)
    return harmonic(n, 2) + 2 * alt


# -- power-sum / Bernoulli formula (3 extra parameters) -----------------------


def _i10_point(big_p: int, m: int, r: int, k: int) -> bool:
    lhs = 0
    for x in range(r % m, big_p, m):
        lhs += x**k
    upper = Fraction(big_p, m) + frac_part(Fraction(r - big_p, m))
    lower = frac_part(Fraction(r, m))
    rhs = Fraction(m**k, k + 1) * (
        bernoulli_poly_exact(k + 1, upper) - bernoulli_poly_exact(k + 1, lower)
    )
    return lhs == rhs


def _i10_check(big_p: int, m_max: int = 8, k_max: int = 6) -> bool:
    for m in range(1, m_max + 1):
        for r in range(m):
            for k in range(k_max + 1):
                if not _i10_point(big_p, m, r, k):
                    return False
    return True


_i11_lhs = lambda n: Fraction(comb(4 * n, 2 * n) * comb(2 * n, n), 64**n)
_i11_rhs = lambda n: binomial_rational(Fraction(-1, 4), n) * binomial_rational(Fraction(-3, 4), n)


def _i12_check(n: int) -> bool:
    # C(2n-2k, n-1) = C(2n-2k, n-k) (n-k)!^2 / ((n-1)! (n+1-2k)!) for 1 <= k <= n
    for k in range(1, n + 1):
        lhs = Fraction(binomial(2 * n - 2 * k, n - 1))
        rhs = (
            binomial(2 * n - 2 * k, n - k)
            * Fraction(factorial(n - k) ** 2, factorial(n - 1))
            * recip_factorial(n + 1 - 2 * k)
        )
        if lhs != rhs:
            return False
    return True


def _spec(id, description, n_min, lhs, rhs) -> IdentitySpec:
    return IdentitySpec(id, description, n_min, lhs, rhs, _pointwise(lhs, rhs))


REGISTRY: dict[str, IdentitySpec] = {
    s.id: s
    for s in (
        _spec("I1", "sum C(2n,k)C(2n-k,k)/4^k = C(4n,2n)/4^n", 0, _i1_lhs, _i1_rhs),
        _spec("I2", "sum C(2n+1,k)C(2n+1-k,k)/4^k = C(4n+1,2n+1)/4^n", 0, _i2_lhs, _i2_rhs),
        _spec(
            "I3",
            "sum C(2n,k)C(2n-k,k)H_k/4^k = C(4n,2n)/4^n (3H_{2n} - 2H_{4n})",
            0,
            _i3_lhs,
            _i3_rhs,
        ),
        _spec(
            "I4",
            "sum C(2n+1,k)C(2n+1-k,k)H_k/4^k = C(4n+1,2n+1)/4^n (3H_{2n+1} - 2H_{4n+2})",
            0,
            _i4_lhs,
            _i4_rhs,
        ),
        _spec(
            "I5",
            "sum C(2n,k)C(2n-k,k)(H_k^2+H_k^(2))/4^k = "
            "C(4n,2n)/4^n ((5H_{2n}^(2) - 4H_{4n}^(2)) + (3H_{2n} - 2H_{4n})^2)",
            0,
            _i5_lhs,
            _i5_rhs,
        ),
        _spec(
            "I6",
            "odd companion of I5 with upper row 2n+1",
            0,
            _i6_lhs,
            _i6_rhs,
        ),
        _spec(
            "I7",
            "sum C(n,k)C(-3/4,k)H_k^(2) = (-1)^n C(-1/4,n)(H_n^(2) - sum (-1)^k/(k^2 C(-1/4,k)))",
            0,
            _i7_lhs,
            _i7_rhs,
        ),
        _spec(
            "I8",
            "the (-1/4 <-> -3/4) swap of I7",
            0,
            _i8_lhs,
            _i8_rhs,
        ),
        _spec(
            "I9",
            "sum (-1)^k/(k^2 C(n,k)) = H_n^(2) + 2 sum (-1)^k/k^2",
            0,
            _i9_lhs,
            _i9_rhs,
        ),
        IdentitySpec(
            "I10",
            "sum of x^k over 0 <= x < P, x == r (mod m) equals "
            "m^k/(k+1) (B_{k+1}(P/m + {(r-P)/m}) - B_{k+1}({r/m})); "
            "quantified over m <= 8, 0 <= r < m, k <= 6 at each P",
            1,
            None,
            None,
            _i10_check,
        ),
        _spec(
            "I11",
            "C(4k,2k)C(2k,k)/64^k = C(-1/4,k)C(-3/4,k) (n plays the role of k)",
            0,
            _i11_lhs,
            _i11_rhs,
        ),
        IdentitySpec(
            "I12",
            "C(2n-2k,n-1) = C(2n-2k,n-k)(n-k)!^2/((n-1)!(n+1-2k)!), "
            "quantified over 1 <= k <= n with 1/(negative)! = 0",
            1,
            None,
            None,
            _i12_check,
        ),
    )
}


def check_identity(identity_id: str, n: int) -> bool:
    """True iff the identity holds exactly at n (quantified identities fold
    their auxiliary parameters internally)."""
    spec = REGISTRY.get(identity_id)
    if spec is None:
        raise UnknownIdError(f"unknown identity id: {identity_id}")
    if n < spec.n_min:
        raise ValueError(f"{identity_id} is declared for n >= {spec.n_min}, got {n}")
    return spec.check(n)


def check_identity_range(identity_id: str, n_max: int) -> GridVerdict:
    """check_identity for every n from the declared range start to n_max."""
    spec = REGISTRY.get(identity_id)
    if spec is None:
        raise UnknownIdError(f"unknown identity id: {identity_id}")
    failures = []
    for n in range(spec.n_min, n_max + 1):
        if not spec.check(n):
            failures.append((n, 0))
    return GridVerdict.collect(n_max, 0, failures)
