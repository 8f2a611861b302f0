"""Dyadic rationals ``mantissa / 2**exponent``.

The natural value type of a precision-b approximation: an integer over a
power of two. Canonical form has an odd mantissa or exponent zero.
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction


@dataclass(frozen=True)
class Dyadic:
    mantissa: int
    exponent: int

    def __post_init__(self):
        m, e = int(self.mantissa), int(self.exponent)
        if e < 0:
            raise ValueError("exponent must be a natural number")
        if m == 0:
            e = 0
        while e > 0 and m % 2 == 0:
            m //= 2
            e -= 1
        object.__setattr__(self, "mantissa", m)
        object.__setattr__(self, "exponent", e)

    @classmethod
    def zero(cls) -> "Dyadic":
        return cls(0, 0)

    def to_fraction(self) -> Fraction:
        return Fraction(self.mantissa, 1 << self.exponent)

    def __neg__(self) -> "Dyadic":
        return Dyadic(-self.mantissa, self.exponent)

    def __add__(self, other: "Dyadic") -> "Dyadic":
        e = max(self.exponent, other.exponent)
        m = (self.mantissa << (e - self.exponent)) + (other.mantissa << (e - other.exponent))
        return Dyadic(m, e)

    def __sub__(self, other: "Dyadic") -> "Dyadic":
        return self + (-other)

    def _as_frac(self, other) -> Fraction:
        if isinstance(other, Dyadic):
            return other.to_fraction()
        return Fraction(other)

    def __eq__(self, other) -> bool:
        if isinstance(other, Dyadic):
            return (self.mantissa, self.exponent) == (other.mantissa, other.exponent)
        try:
            return self.to_fraction() == self._as_frac(other)
        except (TypeError, ValueError):
            return NotImplemented

    def __lt__(self, other) -> bool:
        return self.to_fraction() < self._as_frac(other)

    def __le__(self, other) -> bool:
        return self.to_fraction() <= self._as_frac(other)

    def __gt__(self, other) -> bool:
        return self.to_fraction() > self._as_frac(other)

    def __ge__(self, other) -> bool:
        return self.to_fraction() >= self._as_frac(other)

    def __hash__(self):
        return hash(self.to_fraction())

    def __str__(self) -> str:
        if self.exponent == 0:
            return str(self.mantissa)
        return "%d/2^%d" % (self.mantissa, self.exponent)
