"""Exact number tower: combinatorics, surd arithmetic, float rendering."""

from __future__ import annotations

import math
from fractions import Fraction

import pytest

from chainbrackets.exactnum import (
    DomainError,
    GaussianRational,
    SurdSumError,
    SurdValue,
    available_backends,
    binomial,
    current_backend,
    double_factorial,
    pochhammer,
    rational,
    rational_sqrt,
    set_backend,
    sqrt_to_float,
    surd_add,
    surd_mul,
    surd_scale,
)


@pytest.mark.parametrize("m, expected", [(0, 1), (-1, 1), (7, 105), (1, 1), (6, 48), (10, 3840)])
def test_double_factorial_values(m, expected):
    assert double_factorial(m) == expected


def test_double_factorial_rejects_below_minus_one():
    with pytest.raises(DomainError):
        double_factorial(-2)
    with pytest.raises(DomainError):
        double_factorial(-3)


def test_double_factorial_recurrence_and_identities():
    for m in range(1, 40):
        assert double_factorial(m) == m * double_factorial(m - 2)
    for m in range(0, 25):
        assert double_factorial(2 * m) == 2**m * math.factorial(m)
        assert double_factorial(2 * m - 1) * double_factorial(2 * m) == math.factorial(2 * m)


@pytest.mark.parametrize(
    "a, k, expected",
    [
        (rational(1, 2), 0, rational(1)),
        (rational(1, 2), 3, rational(15, 8)),
        (rational(-2), 3, rational(0)),
        (5, 4, rational(1680)),
    ],
)
def test_pochhammer_values(a, k, expected):
    assert pochhammer(a, k) == expected


def test_pochhammer_recurrence():
    for num in range(-6, 7):
        a = rational(num, 2)
        for k in range(6):
            assert pochhammer(a, k + 1) == pochhammer(a, k) * (a + k)


@pytest.mark.parametrize(
    "top, bottom, expected", [(5, 2, 10), (3, 0, 1), (2, 5, 0), (4, -1, 0), (0, 0, 1)]
)
def test_binomial_values(top, bottom, expected):
    assert binomial(top, bottom) == expected


def test_surd_mul_examples():
    assert surd_mul(SurdValue.sqrt(rational(1, 2)), SurdValue.sqrt(2)) == SurdValue.one()
    minus_three = surd_mul(-SurdValue.sqrt(3), SurdValue.sqrt(3))
    assert minus_three == SurdValue(-1, 9)
    assert minus_three.rational_value() == -3
    assert surd_mul(SurdValue.zero(), SurdValue.sqrt(5)) == SurdValue.zero()


def test_surd_scale_examples():
    assert surd_scale(rational(-1, 2), SurdValue.sqrt(3)) == SurdValue(-1, rational(3, 4))
    assert surd_scale(0, SurdValue.sqrt(5)) == SurdValue.zero()
    assert surd_scale(2, SurdValue(-1, rational(1, 4))) == SurdValue(-1, 1)


def test_surd_mul_commutative_associative():
    values = [
        SurdValue.zero(),
        SurdValue.one(),
        -SurdValue.sqrt(rational(2, 3)),
        SurdValue.sqrt(rational(5, 7)),
        SurdValue(-1, rational(9, 4)),
    ]
    for a in values:
        for b in values:
            assert a * b == b * a
            for c in values:
                assert (a * b) * c == a * (b * c)


def test_surd_add_compatible_and_incompatible():
    a = SurdValue.sqrt(rational(1, 3))
    b = SurdValue.sqrt(rational(4, 3))
    assert surd_add(a, b) == SurdValue.sqrt(3)
    assert surd_add(a, -a) == SurdValue.zero()
    assert surd_add(SurdValue.zero(), a) == a
    with pytest.raises(SurdSumError):
        surd_add(a, SurdValue.sqrt(rational(1, 2)))


def test_surd_of_rational_and_inverse():
    assert SurdValue.of_rational(rational(-1, 2)) == SurdValue(-1, rational(1, 4))
    assert SurdValue.of_rational(0) == SurdValue.zero()
    v = SurdValue(-1, rational(4, 9))
    assert v.inverse() * v == SurdValue.one()
    with pytest.raises(ZeroDivisionError):
        SurdValue.zero().inverse()


def test_surd_invariants_enforced():
    with pytest.raises(DomainError):
        SurdValue(0, 1)
    with pytest.raises(DomainError):
        SurdValue(1, 0)
    with pytest.raises(DomainError):
        SurdValue(2, 1)
    with pytest.raises(DomainError):
        SurdValue.sqrt(-1)


def test_rational_sqrt():
    assert rational_sqrt(rational(4, 9)) == rational(2, 3)
    assert rational_sqrt(rational(0)) == 0
    assert rational_sqrt(rational(2, 3)) is None
    assert rational_sqrt(rational(18, 2)) == 3


def test_sqrt_to_float_is_correctly_rounded():
    samples = [rational(1, 3), rational(2, 3), rational(9, 4), rational(1), rational(7, 11)]
    samples += [rational(p, q) for p in (1, 3, 17, 121) for q in (2, 5, 64, 997)]
    for r in samples:
        x = sqrt_to_float(r)
        if rational_sqrt(r) is not None:
            assert Fraction(x) ** 2 == r
            continue
        lo = math.nextafter(x, -math.inf)
        hi = math.nextafter(x, math.inf)
        mid_lo = (Fraction(lo) + Fraction(x)) / 2
        mid_hi = (Fraction(x) + Fraction(hi)) / 2
        assert mid_lo**2 <= r <= mid_hi**2


def test_surd_render_and_json():
    v = SurdValue(-1, rational(1, 3))
    assert v.render() == "-sqrt(1/3)"
    d = v.to_json_dict()
    assert d["sign"] == -1 and d["num"] == "1" and d["den"] == "3"
    assert d["float"] == pytest.approx(-0.5773502691896257, abs=0)
    assert SurdValue.zero().render() == "0"
    assert SurdValue.one().to_json_dict() == {"sign": 1, "num": "1", "den": "1", "float": 1.0}


def test_gaussian_rational_arithmetic():
    a = GaussianRational.of(1, 2)
    b = GaussianRational.of(rational(1, 2), -1)
    assert a * b == GaussianRational.of(rational(5, 2), 0)
    assert a + b == GaussianRational.of(rational(3, 2), 1)
    assert (a * a.inverse()) == GaussianRational.of(1, 0)
    assert a.conjugate() == GaussianRational.of(1, -2)
    assert (-a).is_zero is False
    assert (a - a).is_zero


def test_backends_agree():
    if len(available_backends()) < 2:
        pytest.skip("only one rational backend installed")
    original = current_backend()
    try:
        results = {}
        for name in available_backends():
            set_backend(name)
            v = surd_scale(rational(-3, 7), SurdValue.sqrt(rational(5, 11)))
            results[name] = (v.sign, str(v.radicand), v.to_float(), v.render())
        vals = list(results.values())
        assert vals[0] == vals[1]
    finally:
        set_backend(original)
