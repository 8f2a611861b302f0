"""Certified rational enclosures of a few transcendental values.

Every function returns a pair ``(lo, hi)`` of Fractions with the true
value inside and ``hi - lo <= 2**-bits``. No floating point is involved:
partial sums are exact and the series tails are bounded by hand.
"""

from __future__ import annotations

from fractions import Fraction
from math import isqrt

Enclosure = tuple[Fraction, Fraction]

_ONE = Fraction(1)


def _exp_unit(t: Fraction, bits: int) -> Enclosure:
    """exp(t) for 0 <= t <= 1 by the Taylor series with a tail bound."""
    target = Fraction(1, 1 << (bits + 1))
    total = _ONE
    term = _ONE
    k = 0
    while True:
        k += 1
        term = term * t / k
        total += term
        # remaining tail is dominated by a geometric series with ratio t/(k+1) <= 1/2
        tail = term * t / (k + 1) * 2
        if tail <= target:
            return total, total + tail


def exp_enclosure(t: Fraction, bits: int) -> Enclosure:
    """exp(t) for any rational t."""
    t = Fraction(t)
    if t < 0:
        # invert the enclosure of exp(-t); widen bits to absorb division
        inner_bits = bits + 2
        while True:
            lo, hi = exp_enclosure(-t, inner_bits)
            out = (1 / hi, 1 / lo)
            if out[1] - out[0] <= Fraction(1, 1 << bits):
                return out
            inner_bits *= 2
    if t <= 1:
        return _exp_unit(t, bits)
    # exp(t) = exp(t/2)**2; squaring roughly doubles the relative error
    inner_bits = bits + 2 + 2 * (t.numerator // t.denominator + 1)
    while True:
        lo, hi = exp_enclosure(t / 2, inner_bits)
        out = (lo * lo, hi * hi)
        if out[1] - out[0] <= Fraction(1, 1 << bits):
            return out
        inner_bits *= 2


def e_enclosure(bits: int) -> Enclosure:
    return exp_enclosure(_ONE, bits)


def _atanh_small(z: Fraction, bits: int) -> Enclosure:
    """atanh(z) for 0 <= z <= 1/3 via the odd series."""
    target = Fraction(1, 1 << (bits + 1))
    total = z
    power = z
    z2 = z * z
    k = 1
    while True:
        power = power * z2
        term = power / (2 * k + 1)
        total += term
        # tail <= power * z^2 / (2k+3) * 1/(1 - z^2) <= next term * 9/8
        tail = power * z2 / (2 * k + 3) * Fraction(9, 8)
        if tail <= target:
            return total, total + tail
        k += 1


def ln_enclosure(x: Fraction, bits: int) -> Enclosure:
    """ln(x) for rational x > 0."""
    x = Fraction(x)
    if x <= 0:
        raise ValueError("ln needs a positive argument")
    if x < 1:
        lo, hi = ln_enclosure(1 / x, bits)
        return -hi, -lo
    if x == 1:
        return Fraction(0), Fraction(0)
    # write x = 2**k * m with m in [1, 2)
    k = x.numerator.bit_length() - x.denominator.bit_length()
    if (x.denominator << k) > x.numerator:
        k -= 1
    m = x / (1 << k)
    guard = bits + 2 + max(k, 1).bit_length()
    ln2_lo, ln2_hi = _ln2(guard)
    z = (m - 1) / (m + 1)  # in [0, 1/3)
    at_lo, at_hi = _atanh_small(z, guard)
    return k * ln2_lo + 2 * at_lo, k * ln2_hi + 2 * at_hi


_LN2_CACHE: dict[int, Enclosure] = {}


def _ln2(bits: int) -> Enclosure:
    if bits not in _LN2_CACHE:
        lo, hi = _atanh_small(Fraction(1, 3), bits + 1)
        _LN2_CACHE[bits] = (2 * lo, 2 * hi)
    return _LN2_CACHE[bits]


def sqrt2_enclosure(bits: int) -> Enclosure:
    """sqrt(2) bracketed by integer square roots at the requested scale."""
    s = isqrt(2 << (2 * bits))
    return Fraction(s, 1 << bits), Fraction(s + 1, 1 << bits)
