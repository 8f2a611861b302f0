"""Weight oracles and weighted counting problems.

A weight oracle pairs an optional exact weight map ``w(x, u)`` with a
mandatory integer approximation map ``v(x, u, b)`` that satisfies

    |w(x, u) - v(x, u, b) / 2**b| <= 2**-b        for every b

The weighted counting problem built on top of it asks for the sum of
``w(x, u)`` over all paths ``u`` in ``{0,1}**path_poly(|x|)``.

Oracles must be pure and deterministic; every type here is immutable
after construction. Exact weights are :class:`fractions.Fraction` values
in the common case, but any exact value type with rational-compatible
arithmetic (comparison, addition, subtraction) works, which the quantum
stack uses for values carrying a sqrt(2) part.
"""

from __future__ import annotations

import enum
from dataclasses import dataclass, field
from fractions import Fraction
from typing import Callable, Iterator, Optional

from .bits import bitstrings
from .errors import CapExceeded, ExactUnavailable, InvariantViolation
from .intpoly import IntPolynomial
from .ratmath import round_half_down

#: Default cap on the number of enumerated weights (2**24 paths).
DEFAULT_PATH_CAP = 1 << 24


class RangeTag(enum.Enum):
    """Declared range of an oracle's weights.

    Tags are checked where they matter, never inferred: feeding a B01
    problem to an operation expecting PM1 weights is an error even though
    {0,1} values would pass a PM1 membership scan after retagging.
    """

    B01 = "b01"          # {0, 1}
    PM1 = "pm1"          # {-1, 1}
    T101 = "t101"        # {-1, 0, 1}
    NAT = "nat"          # nonnegative integers
    INT = "int"          # integers
    QPOLY = "qpoly"      # rationals
    REAL = "real"        # efficiently approximable reals

    def admits(self, value) -> bool:
        if self is RangeTag.B01:
            return value in (0, 1)
        if self is RangeTag.PM1:
            return value in (-1, 1)
        if self is RangeTag.T101:
            return value in (-1, 0, 1)
        if self is RangeTag.NAT:
            return isinstance(value, (int, Fraction)) and value == int(value) and value >= 0
        if self is RangeTag.INT:
            return isinstance(value, (int, Fraction)) and value == int(value)
        if self is RangeTag.QPOLY:
            return isinstance(value, (int, Fraction))
        return True


#: Tags whose members are bounded by 1 in absolute value.
_UNIT_BOUND_TAGS = frozenset({RangeTag.B01, RangeTag.PM1, RangeTag.T101})


@dataclass(frozen=True)
class WeightOracle:
    """Deterministic weight evaluator.

    ``approx(x, u, b)`` returns an integer with ``|w - approx/2**b| <= 2**-b``.
    ``exact(x, u)`` returns the exact weight when available.
    ``weight_bound(n)`` optionally bounds ``|w(x, u)|`` for ``|x| = n``;
    it defaults to 1 for the unit-bounded tags and is required by closure
    constructions that multiply black-box weights.
    """

    approx: Callable[[str, str, int], int]
    exact: Optional[Callable[[str, str], Fraction]] = None
    range_tag: RangeTag = RangeTag.REAL
    weight_bound: Optional[Callable[[int], Fraction]] = None

    def __post_init__(self):
        if self.weight_bound is None and self.range_tag in _UNIT_BOUND_TAGS:
            object.__setattr__(self, "weight_bound", lambda n: Fraction(1))

    @classmethod
    def from_exact(
        cls,
        exact: Callable[[str, str], Fraction],
        range_tag: RangeTag = RangeTag.QPOLY,
        weight_bound: Optional[Callable[[int], Fraction]] = None,
    ) -> "WeightOracle":
        """Derive the approximation map by rounding the exact weight.

        The rounding is two-sided to b fractional bits with ties toward
        -inf, so it is deterministic and beats the required error bound
        by a factor of two.
        """

        def approx(x: str, u: str, b: int) -> int:
            return round_half_down(Fraction(exact(x, u)), b)

        return cls(approx=approx, exact=exact, range_tag=range_tag, weight_bound=weight_bound)


@dataclass(frozen=True)
class WeightedCountingProblem:
    """A path-length polynomial plus a weight oracle."""

    path_poly: IntPolynomial
    oracle: WeightOracle

    def path_bits(self, x: str, cap: int = DEFAULT_PATH_CAP) -> int:
        """Path-space width for input x; errors out beyond the cap.

        Exceeding the cap is an error, not a silent truncation.
        """
        p = self.path_poly(len(x))
        if (1 << p) > cap:
            raise CapExceeded("2**%d paths exceed the cap of %d weights" % (p, cap))
        return p

    def iter_weights(self, x: str, cap: int = DEFAULT_PATH_CAP) -> Iterator[tuple[str, Fraction]]:
        """Yield (u, exact weight) over the whole path space."""
        if self.oracle.exact is None:
            raise ExactUnavailable("oracle has no exact weight map")
        p = self.path_bits(x, cap)
        for u in bitstrings(p):
            yield u, self.oracle.exact(x, u)


@dataclass(frozen=True)
class DecisionInstance:
    """Threshold decision attached to a weighted counting problem.

    When ``output_bit_bound`` is present, the exact sum for input x must
    fit, as a reduced fraction, in ``output_bit_bound(|x|)`` bits.
    """

    problem: WeightedCountingProblem
    threshold: Fraction
    output_bit_bound: Optional[IntPolynomial] = None


def constant_problem(value: Fraction, range_tag: RangeTag = RangeTag.QPOLY) -> WeightedCountingProblem:
    """Single-path problem whose sum is the given exact value."""
    value = Fraction(value)
    oracle = WeightOracle.from_exact(lambda x, u: value, range_tag=range_tag,
                                     weight_bound=lambda n: abs(value))
    return WeightedCountingProblem(IntPolynomial.zero(), oracle)


def table_problem(
    weights: dict[str, Fraction] | list[Fraction],
    range_tag: RangeTag = RangeTag.QPOLY,
) -> WeightedCountingProblem:
    """Problem over a fixed table of weights, independent of the input.

    Accepts either a dict keyed by path bitstrings of one common length
    or a dense list of length 2**p in big-endian path order.
    """
    if isinstance(weights, dict):
        if weights:
            widths = {len(u) for u in weights}
            if len(widths) != 1:
                raise InvariantViolation("table keys must share one path width")
            p = widths.pop()
        else:
            p = 0
        dense = [Fraction(0)] * (1 << p)
        for u, w in weights.items():
            dense[int(u, 2) if u else 0] = Fraction(w)
    else:
        dense = [Fraction(w) for w in weights]
        p = (len(dense) - 1).bit_length() if len(dense) > 1 else 0
        if len(dense) != (1 << p):
            raise InvariantViolation("dense table length must be a power of two")
    bound = max((abs(w) for w in dense), default=Fraction(0))

    def exact(x: str, u: str) -> Fraction:
        return dense[int(u, 2) if u else 0]

    oracle = WeightOracle.from_exact(exact, range_tag=range_tag, weight_bound=lambda n: bound)
    return WeightedCountingProblem(IntPolynomial.constant(p), oracle)


def retagged(problem: WeightedCountingProblem, tag: RangeTag) -> WeightedCountingProblem:
    """Explicit retagging; the only sanctioned way to move between tags."""
    o = problem.oracle
    return WeightedCountingProblem(
        problem.path_poly,
        WeightOracle(approx=o.approx, exact=o.exact, range_tag=tag, weight_bound=o.weight_bound),
    )


def check_tag_discipline(problem: WeightedCountingProblem, x: str, cap: int = DEFAULT_PATH_CAP) -> None:
    """Scan the whole path space and verify weights lie in the tagged set."""
    tag = problem.oracle.range_tag
    for u, w in problem.iter_weights(x, cap):
        if not tag.admits(w):
            raise InvariantViolation("weight %s at path %r outside range %s" % (w, u, tag.name))


def check_approximation_soundness(
    problem: WeightedCountingProblem,
    x: str,
    bit_range: range = range(0, 41),
    cap: int = DEFAULT_PATH_CAP,
) -> None:
    """Verify |exact - approx/2**b| <= 2**-b over the path space."""
    o = problem.oracle
    if o.exact is None:
        raise ExactUnavailable("soundness check needs an exact map")
    p = problem.path_bits(x, cap)
    for u in bitstrings(p):
        w = o.exact(x, u)
        for b in bit_range:
            v = o.approx(x, u, b)
            err = w - Fraction(v, 1 << b)
            if not (-Fraction(1, 1 << b) <= err <= Fraction(1, 1 << b)):
                raise InvariantViolation(
                    "approximation bound broken at u=%r b=%d (err=%s)" % (u, b, err)
                )
