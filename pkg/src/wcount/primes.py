"""Prime-reciprocal weights and the prime-gap sanity check.

The reciprocal-of-primes problem is the standing example of a rational
weight function whose exact output outgrows every polynomial bit budget:
its value at x is sum(1/p for primes p <= x) and the denominator is the
primorial of x.
"""

from __future__ import annotations

from fractions import Fraction

from .bits import to_nat
from .errors import DomainViolation
from .intpoly import IntPolynomial
from .oracle import RangeTag, WeightedCountingProblem, WeightOracle
from .realenclose import e_enclosure, ln_enclosure


def is_prime(n: int) -> bool:
    """Trial division; adequate for desk-scale path spaces."""
    if n < 2:
        return False
    if n < 4:
        return True
    if n % 2 == 0 or n % 3 == 0:
        return False
    f = 5
    while f * f <= n:
        if n % f == 0 or n % (f + 2) == 0:
            return False
        f += 6
    return True


def sieve(limit: int) -> list[int]:
    """Primes up to and including limit."""
    if limit < 2:
        return []
    marks = bytearray([1]) * (limit + 1)
    marks[0] = marks[1] = 0
    for p in range(2, int(limit**0.5) + 1):
        if marks[p]:
            marks[p * p :: p] = bytearray(len(marks[p * p :: p]))
    return [i for i, m in enumerate(marks) if m]


def prime_counts(limit: int) -> list[int]:
    """Prefix table of the prime-counting function pi(0..limit)."""
    counts = [0] * (limit + 1)
    running = 0
    marks = set(sieve(limit))
    for i in range(limit + 1):
        if i in marks:
            running += 1
        counts[i] = running
    return counts


def primorial(x: int) -> int:
    """Product of all primes up to x."""
    out = 1
    for p in sieve(x):
        out *= p
    return out


def prime_reciprocal_oracle() -> WeightedCountingProblem:
    """Weights 1/(#u+1) on paths whose successor is a prime below the input.

    The path polynomial is the identity, so input x ranges paths over
    {0,1}^|x| and the sum is sum(1/p) over primes p <= #x.
    """

    def exact(x: str, u: str) -> Fraction:
        n = to_nat(u)
        if n < to_nat(x) and is_prime(n + 1):
            return Fraction(1, n + 1)
        return Fraction(0)

    oracle = WeightOracle.from_exact(exact, range_tag=RangeTag.QPOLY,
                                     weight_bound=lambda n: Fraction(1, 2))
    return WeightedCountingProblem(IntPolynomial.identity(), oracle)


def prime_gap_check(x_max: int, start_bits: int = 64) -> bool:
    """Check pi(x) - pi(x/e) >= x / (3 ln x) for every integer x in [17, x_max].

    The right-hand side and x/e are irrational, so both are bracketed by
    certified rational enclosures (64 fractional bits to start); whenever
    a comparison is indecisive the precision doubles until it is not.
    """
    if x_max < 17:
        raise DomainViolation("the bound is only claimed from 17 upward")
    counts = prime_counts(x_max)
    for x in range(17, x_max + 1):
        if not _gap_holds_at(x, counts, start_bits):
            return False
    return True


def _gap_holds_at(x: int, counts: list[int], bits: int) -> bool:
    while True:
        e_lo, e_hi = e_enclosure(bits)
        over_e_lo, over_e_hi = x / e_hi, x / e_lo
        floor_lo = over_e_lo.numerator // over_e_lo.denominator
        floor_hi = over_e_hi.numerator // over_e_hi.denominator
        ln_lo, ln_hi = ln_enclosure(Fraction(x), bits)
        bound_lo, bound_hi = Fraction(x) / (3 * ln_hi), Fraction(x) / (3 * ln_lo)
        if floor_lo == floor_hi:
            gap = counts[x] - counts[floor_lo]
            if gap >= bound_hi:
                return True
            if gap < bound_lo:
                return False
        bits *= 2
