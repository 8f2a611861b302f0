"""Small exact-arithmetic helpers used throughout the package.

Everything here works on :class:`fractions.Fraction`; no floating point.
"""

from __future__ import annotations

from fractions import Fraction

from .errors import ParseError


def round_half_down(value: Fraction, bits: int) -> int:
    """Round ``value * 2**bits`` to the nearest integer, ties toward -inf.

    This is the canonical two-sided rounding used when an approximation
    map is derived from an exact weight: the result ``v`` satisfies
    ``|value - v / 2**bits| <= 2**-(bits+1)``.
    """
    scaled = value * (1 << bits)
    num, den = scaled.numerator, scaled.denominator
    n = num // den
    rem = num - n * den
    return n + 1 if 2 * rem > den else n


def floor_log2(q: Fraction) -> int:
    """Largest ``g`` with ``2**g <= q``; requires ``q > 0``."""
    if q <= 0:
        raise ValueError("floor_log2 needs a positive argument")
    g = q.numerator.bit_length() - q.denominator.bit_length()
    # candidate is within one of the answer; fix up exactly
    while _pow2_le(g + 1, q):
        g += 1
    while not _pow2_le(g, q):
        g -= 1
    return g


def ceil_log2(q: Fraction) -> int:
    """Smallest ``g`` with ``q <= 2**g``; requires ``q > 0``."""
    g = floor_log2(q)
    return g if (1 << max(g, 0)) == q * (1 << max(-g, 0)) else g + 1


def _pow2_le(g: int, q: Fraction) -> bool:
    # 2**g <= q, exactly, for any sign of g
    if g >= 0:
        return (q.denominator << g) <= q.numerator
    return q.denominator <= (q.numerator << (-g))


def encoding_bits(value: Fraction) -> int:
    """Bits needed for the reduced fraction: |numerator| plus denominator."""
    return abs(value.numerator).bit_length() + value.denominator.bit_length()


def format_rational(value: Fraction) -> str:
    """Serialize as ``a/b``, or plain ``a`` when the denominator is 1."""
    if value.denominator == 1:
        return str(value.numerator)
    return "%d/%d" % (value.numerator, value.denominator)


def parse_rational(text: str, line: int | None = None) -> Fraction:
    """Parse ``a`` or ``a/b`` into a Fraction."""
    try:
        return Fraction(text.strip())
    except (ValueError, ZeroDivisionError) as exc:
        raise ParseError("bad rational %r (%s)" % (text, exc), line=line) from None
