"""Exact number tower: big-integer combinatorics, Gaussian rationals, quadratic surds.

Every coefficient produced by this package is of the form
sign * sqrt(nonnegative rational), so the value domain is closed under the
operations provided here and no floating point enters any computation.
Floats exist only as a rendering of the exact result.
"""

from __future__ import annotations

import math
import struct
from fractions import Fraction

from ._backend import available_backends, current_backend, rational, set_backend

__all__ = [
    "DomainError",
    "SurdSumError",
    "GaussianRational",
    "SurdValue",
    "available_backends",
    "current_backend",
    "set_backend",
    "rational",
    "rational_sqrt",
    "sqrt_to_float",
    "double_factorial",
    "factorial",
    "binomial",
    "pochhammer",
    "surd_mul",
    "surd_scale",
    "surd_add",
]

factorial = math.factorial


class DomainError(ValueError):
    """An argument left the domain the formulas are defined on."""


class SurdSumError(ArithmeticError):
    """A sum of surds left the representable domain sign * sqrt(rational)."""


def double_factorial(m: int) -> int:
    """m!! with the conventions (-1)!! = 0!! = 1; m < -1 is rejected loudly."""
    if m < -1:
        raise DomainError(f"double factorial undefined for {m} < -1")
    result = 1
    while m > 1:
        result *= m
        m -= 2
    return result


def binomial(top: int, bottom: int) -> int:
    """C(top, bottom); returns 0 when bottom < 0 or bottom > top."""
    if top < 0:
        raise DomainError(f"binomial needs top >= 0, got {top}")
    if bottom < 0 or bottom > top:
        return 0
    return math.comb(top, bottom)


def pochhammer(a, k: int):
    """Rising product a (a+1) ... (a+k-1); exact for rational a, 1 for k = 0."""
    if k < 0:
        raise DomainError(f"pochhammer needs k >= 0, got {k}")
    result = rational(1)
    term = rational(a)
    for _ in range(k):
        result *= term
        term += 1
    return result


def signed_half_power(e: int):
    """(-1/2)**e as an exact rational, valid for negative e as well."""
    if e >= 0:
        return rational((-1) ** e, 2**e)
    return rational((-2) ** (-e))


def rational_sqrt(q):
    """Exact square root of a rational if it is a perfect square, else None."""
    num, den = int(q.numerator), int(q.denominator)
    if num < 0:
        return None
    rn = math.isqrt(num)
    rd = math.isqrt(den)
    if rn * rn == num and rd * rd == den:
        return rational(rn, rd)
    return None


def _mantissa_even(x: float) -> bool:
    return struct.unpack("<Q", struct.pack("<d", x))[0] & 1 == 0


def _nearer_to_sqrt(a: float, b: float, q) -> float:
    """The one of two doubles a <= b nearer to sqrt(q); exact tie goes to even."""
    if a == b:
        return a
    mid = (Fraction(a) + Fraction(b)) / 2
    mid_sq = mid * mid
    if q < mid_sq:
        return a
    if q > mid_sq:
        return b
    return a if _mantissa_even(a) else b


def sqrt_to_float(q) -> float:
    """Correctly rounded double of sqrt(q) for rational q >= 0 (ties to even)."""
    num, den = int(q.numerator), int(q.denominator)
    if num < 0:
        raise DomainError("sqrt of a negative rational")
    if num == 0:
        return 0.0
    # Scaled integer sqrt gives >= ~128 significant bits; the exact neighbor
    # comparison below then settles the final rounding decision.
    shift = max(0, 260 - (num.bit_length() - den.bit_length()))
    shift += shift & 1
    t = math.isqrt((num << shift) // den)
    try:
        x = float(Fraction(t, 1 << (shift // 2)))
    except OverflowError:
        return math.inf
    lo = max(0.0, math.nextafter(x, -math.inf))
    hi = math.nextafter(x, math.inf)
    best = lo
    for cand in (x, hi):
        a, b = (best, cand) if best <= cand else (cand, best)
        best = _nearer_to_sqrt(a, b, q)
    return best


class GaussianRational:
    """Complex number with exact rational real and imaginary parts."""

    __slots__ = ("re", "im")

    def __init__(self, re, im):
        self.re = re
        self.im = im

    @classmethod
    def of(cls, re=0, im=0) -> "GaussianRational":
        return cls(rational(re), rational(im))

    @property
    def is_zero(self) -> bool:
        return not self.re and not self.im

    def __add__(self, other: "GaussianRational") -> "GaussianRational":
        return GaussianRational(self.re + other.re, self.im + other.im)

    def __sub__(self, other: "GaussianRational") -> "GaussianRational":
        return GaussianRational(self.re - other.re, self.im - other.im)

    def __neg__(self) -> "GaussianRational":
        return GaussianRational(-self.re, -self.im)

    def __mul__(self, other: "GaussianRational") -> "GaussianRational":
        return GaussianRational(
            self.re * other.re - self.im * other.im,
            self.re * other.im + self.im * other.re,
        )

    def times(self, scalar) -> "GaussianRational":
        """Product with an exact real scalar (int or rational)."""
        return GaussianRational(self.re * scalar, self.im * scalar)

    def conjugate(self) -> "GaussianRational":
        return GaussianRational(self.re, -self.im)

    def inverse(self) -> "GaussianRational":
        norm = self.re * self.re + self.im * self.im
        if not norm:
            raise ZeroDivisionError("inverse of zero Gaussian rational")
        return GaussianRational(self.re / norm, -self.im / norm)

    def __eq__(self, other) -> bool:
        if not isinstance(other, GaussianRational):
            return NotImplemented
        return self.re == other.re and self.im == other.im

    def __hash__(self):
        return hash((self.re, self.im))

    def __repr__(self) -> str:
        return f"GaussianRational({self.re!s}, {self.im!s})"


class SurdValue:
    """Exact value sign * sqrt(radicand) with sign in {-1, 0, +1}.

    The radicand equals the square of the value, so (sign, radicand) is a
    canonical form and equality of the pair is equality of values.  Addition
    is defined only when the two radicands have a rational square ratio;
    every formula in this package is factored so that restriction never
    bites (rational k-sum times a single surd prefactor).
    """

    __slots__ = ("sign", "radicand")

    def __init__(self, sign: int, radicand):
        radicand = rational(radicand)
        if sign not in (-1, 0, 1):
            raise DomainError(f"surd sign must be -1, 0 or +1, got {sign}")
        if radicand < 0:
            raise DomainError("surd radicand must be nonnegative")
        if (sign == 0) != (radicand == 0):
            raise DomainError("surd sign is 0 exactly when the radicand is 0")
        self.sign = sign
        self.radicand = radicand

    @classmethod
    def zero(cls) -> "SurdValue":
        return cls(0, rational(0))

    @classmethod
    def one(cls) -> "SurdValue":
        return cls(1, rational(1))

    @classmethod
    def sqrt(cls, q) -> "SurdValue":
        """The nonnegative square root +sqrt(q) of a rational q >= 0."""
        q = rational(q)
        if q < 0:
            raise DomainError("sqrt of a negative rational")
        return cls(1 if q > 0 else 0, q)

    @classmethod
    def of_rational(cls, q) -> "SurdValue":
        """Exact embedding of a rational: sign(q) * sqrt(q**2)."""
        q = rational(q)
        if q > 0:
            return cls(1, q * q)
        if q < 0:
            return cls(-1, q * q)
        return cls.zero()

    @property
    def is_zero(self) -> bool:
        return self.sign == 0

    def __mul__(self, other: "SurdValue") -> "SurdValue":
        return SurdValue(self.sign * other.sign, self.radicand * other.radicand)

    def scale(self, q) -> "SurdValue":
        """Product with an exact rational q, staying in surd form."""
        q = rational(q)
        if not q or self.sign == 0:
            return SurdValue.zero()
        sign = self.sign if q > 0 else -self.sign
        return SurdValue(sign, q * q * self.radicand)

    def __neg__(self) -> "SurdValue":
        return SurdValue(-self.sign, self.radicand)

    def inverse(self) -> "SurdValue":
        if self.sign == 0:
            raise ZeroDivisionError("inverse of zero surd")
        return SurdValue(self.sign, 1 / self.radicand)

    def __add__(self, other: "SurdValue") -> "SurdValue":
        if self.sign == 0:
            return other
        if other.sign == 0:
            return self
        root = rational_sqrt(self.radicand / other.radicand)
        if root is None:
            raise SurdSumError(
                f"cannot add sqrt({self.radicand}) and sqrt({other.radicand}): "
                "radicand ratio is not a perfect rational square"
            )
        coeff = self.sign * root + other.sign
        return SurdValue.sqrt(other.radicand).scale(coeff)

    def __sub__(self, other: "SurdValue") -> "SurdValue":
        return self + (-other)

    def rational_value(self):
        """The exact rational value if the radicand is a perfect square, else None."""
        root = rational_sqrt(self.radicand)
        if root is None:
            return None
        return self.sign * root

    def to_float(self) -> float:
        return self.sign * sqrt_to_float(self.radicand)

    def render(self) -> str:
        """Exact text form, e.g. '-sqrt(1/3)' or '0'."""
        if self.sign == 0:
            return "0"
        prefix = "+" if self.sign > 0 else "-"
        return f"{prefix}sqrt({self.radicand})"

    def to_json_dict(self) -> dict:
        return {
            "sign": self.sign,
            "num": str(int(self.radicand.numerator)),
            "den": str(int(self.radicand.denominator)),
            "float": self.to_float(),
        }

    def __eq__(self, other) -> bool:
        if not isinstance(other, SurdValue):
            return NotImplemented
        return self.sign == other.sign and self.radicand == other.radicand

    def __hash__(self):
        return hash((self.sign, self.radicand))

    def __repr__(self) -> str:
        return f"SurdValue({self.render()})"


def surd_mul(a: SurdValue, b: SurdValue) -> SurdValue:
    """Exact product of two surds."""
    return a * b


def surd_scale(q, a: SurdValue) -> SurdValue:
    """Exact product of a rational q with a surd."""
    return a.scale(q)


def surd_add(a: SurdValue, b: SurdValue) -> SurdValue:
    """Exact sum; defined only for rationally square-compatible radicands."""
    return a + b
