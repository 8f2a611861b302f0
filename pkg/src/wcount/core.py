"""Exact and approximate path-space summation, threshold decisions, and
rational recovery from narrow intervals.

All sums enumerate the full path space, so they are honest only at desk
scale; the default cap refuses anything past 2**24 weights. Exact
rational addition is associative and commutative, so any enumeration or
reduction order produces the identical canonical result.
"""

from __future__ import annotations

from fractions import Fraction

from .bits import bitstrings
from .dyadic import Dyadic
from .errors import MissingBound, NoUniqueRational
from .intpoly import IntPolynomial
from .oracle import DEFAULT_PATH_CAP, DecisionInstance, WeightedCountingProblem
from .ratmath import encoding_bits


def exact_sum(problem: WeightedCountingProblem, x: str, cap: int = DEFAULT_PATH_CAP) -> Fraction:
    """Sum the exact weights over the whole path space."""
    total = Fraction(0)
    for _, w in problem.iter_weights(x, cap):
        total = total + w
    return total


def approx_sum(problem: WeightedCountingProblem, x: str, b: int, cap: int = DEFAULT_PATH_CAP) -> Dyadic:
    """Approximate the sum within an additive error of 2**-b.

    Each of the 2**p weights is queried at precision p + b, so the
    per-weight errors of at most 2**-(p+b) add up to at most 2**-b.
    """
    if b < 0:
        raise ValueError("precision must be a natural number")
    p = problem.path_bits(x, cap)
    prec = p + b
    total = 0
    for u in bitstrings(p):
        total += problem.oracle.approx(x, u, prec)
    return Dyadic(total, prec)


def approx_sum_above(problem: WeightedCountingProblem, x: str, c: int, cap: int = DEFAULT_PATH_CAP) -> Dyadic:
    """One-sided approximation: 0 <= result - f(x) <= 2**-c.

    Computes one additional bit of each weight and shifts upward: the
    two-sided value v(x, u, p+c+1) plus one, over 2**(p+c+1), is at least
    the weight and overshoots by at most 2**-(p+c).
    """
    if c < 0:
        raise ValueError("precision must be a natural number")
    p = problem.path_bits(x, cap)
    prec = p + c + 1
    total = 0
    for u in bitstrings(p):
        total += problem.oracle.approx(x, u, prec) + 1
    return Dyadic(total, prec)


def decide_threshold(instance: DecisionInstance, x: str, cap: int = DEFAULT_PATH_CAP) -> bool:
    """Decide f(x) >= t exactly, via the one-sided approximation.

    Requires the output-size bound q: when f(x) fits in q(|x|) bits as a
    reduced fraction and differs from the threshold, it differs by more
    than the one-sided error at precision c, so the comparison of the
    upper approximation against t is already exact. The precision
    accounts for the threshold's denominator; for integer thresholds it
    is the classic q(|x|) + 1.
    """
    if instance.output_bit_bound is None:
        raise MissingBound("decision needs an output bit bound")
    t = Fraction(instance.threshold)
    q = instance.output_bit_bound(len(x))
    c = q + t.denominator.bit_length()
    upper = approx_sum_above(instance.problem, x, c, cap)
    return upper.to_fraction() >= t


def recover_rational(lo: Fraction, hi: Fraction, q: int) -> Fraction:
    """Minimal-denominator rational in [lo, hi], encodable in q bits.

    Walks the Stern-Brocot tree with continued-fraction acceleration
    (equivalently: the simplest-fraction-in-interval recursion on the
    continued fraction of the endpoints).
    """
    lo, hi = Fraction(lo), Fraction(hi)
    if lo > hi:
        raise ValueError("empty interval")
    best = _simplest_in(lo, hi)
    if encoding_bits(best) > q:
        raise NoUniqueRational(
            "minimal-denominator rational %s needs %d bits, budget is %d"
            % (best, encoding_bits(best), q)
        )
    return best


def _simplest_in(lo: Fraction, hi: Fraction) -> Fraction:
    if lo > 0:
        return _simplest_pos(lo, hi)
    if hi < 0:
        return -_simplest_pos(-hi, -lo)
    return Fraction(0)


def _simplest_pos(lo: Fraction, hi: Fraction) -> Fraction:
    """Simplest rational in [lo, hi] for 0 < lo <= hi."""
    # smallest integer >= lo; if it fits, no smaller denominator exists
    n = -((-lo.numerator) // lo.denominator)
    if n <= hi:
        return Fraction(n)
    whole = lo.numerator // lo.denominator
    frac = _simplest_pos(1 / (hi - whole), 1 / (lo - whole))
    return whole + 1 / frac


def solve_bounded_output(
    problem: WeightedCountingProblem,
    x: str,
    q: IntPolynomial,
    cap: int = DEFAULT_PATH_CAP,
) -> Fraction:
    """Recover the exact sum when it fits in q(|x|) bits as a fraction.

    One approximation at precision 2q+2 pins the value inside an interval
    of width 2**-(2q+1); two distinct q-bit rationals differ by more than
    that, so the minimal-denominator rational of the interval is the sum.
    """
    qn = q(len(x))
    b = 2 * qn + 2
    mid = approx_sum(problem, x, b, cap).to_fraction()
    eps = Fraction(1, 1 << b)
    return recover_rational(mid - eps, mid + eps, qn)
