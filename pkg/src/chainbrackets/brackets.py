"""Closed-form transformation brackets and their normalization coefficients.

Every value is an exact SurdValue.  Each formula is factored as an exact
rational k-sum times a single surd prefactor, so no surd addition is ever
needed here.  Three independent evaluation routes for the bracket are
provided (factored, fully expanded, Pochhammer series) plus the closed form
for the stretched sigma = N column; their mutual equality is a test, not an
assumption.
"""

from __future__ import annotations

import math
from dataclasses import dataclass
from enum import Enum

from ._backend import rational
from .exactnum import (
    DomainError,
    SurdSumError,
    SurdValue,
    binomial,
    double_factorial,
    factorial,
    pochhammer,
    signed_half_power,
)
from .labels import LabelError, bracket_index_set, check_dimension

__all__ = [
    "Convention",
    "BracketTable",
    "coeff_B",
    "coeff_A",
    "coeff_F",
    "bracket",
    "bracket_expanded",
    "bracket_pochhammer",
    "bracket_sigma_eq_N",
    "barred_sign",
    "table",
    "gegenbauer_coeffs",
    "verify_F_via_gegenbauer",
]


class Convention(Enum):
    """Choice of deformed-chain realization; they differ by a pair-operator sign."""

    STANDARD = "standard"
    BARRED = "barred"


def as_convention(value) -> Convention:
    if isinstance(value, Convention):
        return value
    return Convention(value)


def coeff_B(nu: int, n: int, tau: int) -> SurdValue:
    """Normalization of the (n - tau)/2-fold pair-creation ladder on a seniority-tau seed."""
    check_dimension(nu)
    if tau < 0:
        raise LabelError(f"tau={tau} must be nonnegative here (evaluate at |tau|)")
    if n < tau:
        raise LabelError(f"n={n} must be >= tau={tau}")
    if (n - tau) % 2:
        raise LabelError(f"n - tau must be even, got n={n}, tau={tau}")
    value = SurdValue.sqrt(
        rational(
            double_factorial(2 * tau + nu - 2),
            double_factorial(n + tau + nu - 2) * double_factorial(n - tau),
        )
    )
    return -value if ((n - tau) // 2) % 2 else value


def coeff_A(nu: int, N: int, sigma: int) -> SurdValue:
    """Normalization of the (N - sigma)/2-fold full pair-creation ladder."""
    check_dimension(nu)
    if sigma < 0:
        raise LabelError(f"sigma={sigma} must be nonnegative")
    if N < sigma:
        raise LabelError(f"N={N} must be >= sigma={sigma}")
    if (N - sigma) % 2:
        raise LabelError(f"N - sigma must be even, got N={N}, sigma={sigma}")
    value = SurdValue.sqrt(
        rational(
            double_factorial(2 * sigma + nu - 1),
            double_factorial(N + sigma + nu - 1) * double_factorial(N - sigma),
        )
    )
    return -value if ((N - sigma) // 2) % 2 else value


def _coeff_F_norm(nu: int, sigma: int, tau: int) -> SurdValue:
    return SurdValue.sqrt(
        rational(
            factorial(sigma - tau) * double_factorial(2 * tau + nu - 2),
            double_factorial(2 * sigma + nu - 3) * factorial(sigma + tau + nu - 2),
        )
    )


def coeff_F(nu: int, sigma: int, tau: int, k: int) -> SurdValue:
    """k-th expansion coefficient of the intrinsic deformed state over the seed family."""
    check_dimension(nu)
    if not 0 <= tau <= sigma:
        raise LabelError(f"need 0 <= tau <= sigma, got tau={tau}, sigma={sigma}")
    if not 0 <= k <= (sigma - tau) // 2:
        raise DomainError(
            f"k={k} outside 0 <= k <= floor((sigma-tau)/2) = {(sigma - tau) // 2}"
        )
    q = rational((-1) ** k * double_factorial(2 * sigma + nu - 3 - 2 * k), 2**k)
    q /= factorial(sigma - tau - 2 * k) * factorial(k)
    return _coeff_F_norm(nu, sigma, tau).scale(q)


def _validate_bracket_labels(nu: int, N: int, n: int, sigma: int, tau: int) -> int:
    """Admissibility of (n, tau) in chain I and (sigma, tau) in chain II; returns |tau|."""
    check_dimension(nu)
    if N < 0:
        raise LabelError(f"N={N} must be nonnegative")
    if tau < 0 and nu != 2:
        raise LabelError(f"negative tau={tau} only exists for nu=2")
    t = abs(tau)
    if not 0 <= n <= N:
        raise LabelError(f"n={n} violates 0 <= n <= N={N}")
    if n < t:
        raise LabelError(f"n={n} violates n >= |tau|={t} (U(nu) > SO(nu) branching)")
    if (n - t) % 2:
        raise LabelError(
            f"n - tau must be even, got n={n}, tau={tau} (U(nu) > SO(nu) branching)"
        )
    if not 0 <= sigma <= N:
        raise LabelError(f"sigma={sigma} violates 0 <= sigma <= N={N}")
    if (N - sigma) % 2:
        raise LabelError(
            f"N - sigma must be even, got N={N}, sigma={sigma} "
            "(U(nu+1) > SO(nu+1) branching)"
        )
    if sigma < t:
        raise LabelError(
            f"sigma={sigma} violates sigma >= |tau|={t} (SO(nu+1) > SO(nu) branching)"
        )
    return t


def barred_sign(n: int, tau: int) -> int:
    """Relative sign (-1)^((n-|tau|)/2) between barred and standard brackets."""
    return -1 if ((n - abs(tau)) // 2) % 2 else 1


def bracket(
    nu: int,
    N: int,
    n: int,
    sigma: int,
    tau: int,
    convention: Convention | str = Convention.STANDARD,
) -> SurdValue:
    """Overlap of the chain-I state (N, n, tau) with the chain-II state (N, sigma, tau).

    Factored route: sqrt((N-n)!) * A/B * sum_k F_k * C(k + (N-sigma)/2, (n-tau)/2),
    accumulated as an exact rational sum times one surd prefactor.
    """
    convention = as_convention(convention)
    t = _validate_bracket_labels(nu, N, n, sigma, tau)
    k_lo = max(0, (n - t - N + sigma) // 2)
    k_hi = (sigma - t) // 2
    if k_lo > k_hi:
        return SurdValue.zero()
    ksum = rational(0)
    for k in range(k_lo, k_hi + 1):
        ksum += (
            rational((-1) ** k * double_factorial(2 * sigma + nu - 3 - 2 * k), 2**k)
            * binomial(k + (N - sigma) // 2, (n - t) // 2)
            / (factorial(sigma - t - 2 * k) * factorial(k))
        )
    prefactor = (
        SurdValue.sqrt(rational(factorial(N - n)))
        * coeff_A(nu, N, sigma)
        * coeff_B(nu, n, t).inverse()
        * _coeff_F_norm(nu, sigma, t)
    )
    value = prefactor.scale(ksum)
    if convention is Convention.BARRED and barred_sign(n, t) < 0:
        value = -value
    return value


def bracket_expanded(nu: int, N: int, n: int, sigma: int, tau: int) -> SurdValue:
    """Same bracket via the fully expanded single-radical form (standard convention)."""
    t = _validate_bracket_labels(nu, N, n, sigma, tau)
    e = (N - sigma - n + t) // 2
    k_lo = max(0, -e)
    k_hi = (sigma - t) // 2
    if k_lo > k_hi:
        return SurdValue.zero()
    ksum = rational(0)
    for k in range(k_lo, k_hi + 1):
        term = rational(
            double_factorial(2 * sigma + nu - 3 - 2 * k)
            * double_factorial(N - sigma + 2 * k),
            factorial(sigma - t - 2 * k)
            * double_factorial(2 * k)
            * double_factorial(N - sigma - n + t + 2 * k),
        )
        ksum += -term if k % 2 else term
    radicand = rational(
        factorial(N - n)
        * double_factorial(n + t + nu - 2)
        * factorial(sigma - t)
        * (2 * sigma + nu - 1),
        double_factorial(N + sigma + nu - 1)
        * double_factorial(N - sigma)
        * factorial(sigma + t + nu - 2)
        * double_factorial(n - t),
    )
    signed_sum = -ksum if e % 2 else ksum
    return SurdValue.sqrt(radicand).scale(signed_sum)


def bracket_pochhammer(nu: int, N: int, n: int, sigma: int, tau: int) -> SurdValue:
    """Same bracket via the Pochhammer-series form (standard convention).

    Half-integer Pochhammer arguments (even nu) stay exact rationals; no
    gamma function is evaluated anywhere.
    """
    t = _validate_bracket_labels(nu, N, n, sigma, tau)
    e = (N - sigma - n + t) // 2
    k_lo = max(0, -e)
    k_hi = (sigma - t) // 2
    if k_lo > k_hi:
        return SurdValue.zero()
    a_rise = rational(N - sigma + 2, 2)
    a_neg = rational(t - sigma, 2)
    a_neg_half = rational(t - sigma + 1, 2)
    a_den = rational(-2 * sigma - nu + 3, 2)
    ksum = rational(0)
    for k in range(k_lo, k_hi + 1):
        ksum += (
            pochhammer(a_rise, k)
            * pochhammer(a_neg, k)
            * pochhammer(a_neg_half, k)
            / (factorial(e + k) * pochhammer(a_den, k) * factorial(k))
        )
    prefactor = signed_half_power(e) * double_factorial(2 * sigma + nu - 1)
    radicand = rational(
        factorial(N - n)
        * double_factorial(N - sigma)
        * double_factorial(n + t + nu - 2),
        factorial(sigma - t)
        * double_factorial(n - t)
        * factorial(sigma + t + nu - 2)
        * double_factorial(N + sigma + nu - 1)
        * (2 * sigma + nu - 1),
    )
    return SurdValue.sqrt(radicand).scale(prefactor * ksum)


def bracket_sigma_eq_N(nu: int, N: int, n: int, tau: int) -> SurdValue:
    """Closed form of the sigma = N column; the sum collapses and the sign is +1."""
    t = _validate_bracket_labels(nu, N, n, N, tau)
    return SurdValue.sqrt(
        rational(
            factorial(N - t) * factorial(N + t + nu - 2),
            factorial(N - n)
            * double_factorial(n + t + nu - 2)
            * double_factorial(n - t)
            * double_factorial(2 * N + nu - 3),
        )
    )


@dataclass(frozen=True)
class BracketTable:
    """Full bracket matrix for fixed (nu, N, tau): rows n ascending, columns sigma ascending."""

    nu: int
    N: int
    tau: int
    convention: Convention
    ns: tuple[int, ...]
    sigmas: tuple[int, ...]
    entries: tuple[tuple[SurdValue, ...], ...]

    def entry(self, n: int, sigma: int) -> SurdValue:
        return self.entries[self.ns.index(n)][self.sigmas.index(sigma)]

    def is_orthogonal(self) -> bool:
        """Exact orthogonality of rows and columns under surd arithmetic."""
        d = len(self.ns)
        one = SurdValue.one()
        zero = SurdValue.zero()
        try:
            for i in range(d):
                for j in range(i, d):
                    col = zero
                    row = zero
                    for a in range(d):
                        col = col + self.entries[a][i] * self.entries[a][j]
                        row = row + self.entries[i][a] * self.entries[j][a]
                    want = one if i == j else zero
                    if col != want or row != want:
                        return False
        except SurdSumError:
            return False
        return True


def table(
    nu: int,
    N: int,
    tau: int,
    convention: Convention | str = Convention.STANDARD,
) -> BracketTable:
    """All brackets for fixed (nu, N, tau) as an exactly orthogonal matrix."""
    convention = as_convention(convention)
    ns, sigmas = bracket_index_set(nu, N, tau)
    entries = tuple(
        tuple(bracket(nu, N, n, sigma, tau, convention) for sigma in sigmas)
        for n in ns
    )
    return BracketTable(nu, N, tau, convention, ns, sigmas, entries)


def gegenbauer_coeffs(lam, m: int) -> tuple:
    """Monomial coefficients of the ultraspherical polynomial of degree m.

    Built from the three-term recurrence
    m C_m = 2x(m + lam - 1) C_{m-1} - (m + 2 lam - 2) C_{m-2}; index = power.
    """
    lam = rational(lam)
    if lam <= 0:
        raise DomainError(f"lambda must be positive, got {lam}")
    if m < 0:
        raise DomainError(f"degree must be nonnegative, got {m}")
    prev = [rational(1)]
    if m == 0:
        return tuple(prev)
    cur = [rational(0), 2 * lam]
    for j in range(2, m + 1):
        nxt = [rational(0)] * (j + 1)
        a = 2 * (j + lam - 1)
        b = j + 2 * lam - 2
        for power, c in enumerate(cur):
            nxt[power + 1] += a * c
        for power, c in enumerate(prev):
            nxt[power] -= b * c
        prev, cur = cur, [c / j for c in nxt]
    return tuple(cur)


def verify_F_via_gegenbauer(nu: int, sigma: int, tau: int) -> bool:
    """Independent reconstruction of every F_k from the Gegenbauer expansion.

    The intrinsic deformed state is also reachable as (ratio of hyperspherical
    normalizations) * (pair-creation/2)^((sigma-tau)/2) * C_{sigma-tau}(t)
    with t the scalar mode over the square root of the pair creator.
    Expanding the polynomial through the recurrence and collecting powers must
    reproduce coeff_F for every k.  False indicates an implementation bug.
    """
    check_dimension(nu)
    if not 0 <= tau <= sigma:
        raise LabelError(f"need 0 <= tau <= sigma, got tau={tau}, sigma={sigma}")
    m = sigma - tau
    coeffs = gegenbauer_coeffs(rational(2 * tau + nu - 1, 2), m)
    for power, c in enumerate(coeffs):
        if (m - power) % 2 and c != 0:
            return False
    # Ratio of the two hyperspherical normalization constants at the stretched
    # configuration; the pi's, the (2 tau + nu - 3)!! prefactors and the
    # half-integer parts of the power of two cancel mechanically.
    ratio_radicand = rational(
        2**m
        * (2 * sigma + nu - 1)
        * factorial(m)
        * double_factorial(2 * tau + nu - 1)
        * factorial(2 * tau + nu - 2),
        double_factorial(2 * sigma + nu - 1)
        * factorial(sigma + tau + nu - 2)
        * (2 * tau + nu - 1),
    )
    base = SurdValue.sqrt(ratio_radicand) * SurdValue.sqrt(rational(1, 2**m))
    for k in range(m // 2 + 1):
        reconstructed = base.scale(coeffs[m - 2 * k])
        if reconstructed != coeff_F(nu, sigma, tau, k):
            return False
    return True
