"""Univariate polynomials with nonnegative integer coefficients.

These measure path-space sizes and output-size bounds, so evaluation at
any natural number must be a natural number; nonnegative coefficients
guarantee that and make the polynomials monotone, which the padding
constructions rely on.
"""

from __future__ import annotations

from dataclasses import dataclass


@dataclass(frozen=True)
class IntPolynomial:
    """Coefficients in ascending degree order; trailing zeros stripped."""

    coeffs: tuple[int, ...]

    def __post_init__(self):
        coeffs = tuple(int(c) for c in self.coeffs)
        if any(c < 0 for c in coeffs):
            raise ValueError("coefficients must be nonnegative")
        while coeffs and coeffs[-1] == 0:
            coeffs = coeffs[:-1]
        object.__setattr__(self, "coeffs", coeffs)

    @classmethod
    def constant(cls, c: int) -> "IntPolynomial":
        return cls((c,))

    @classmethod
    def identity(cls) -> "IntPolynomial":
        return cls((0, 1))

    @classmethod
    def zero(cls) -> "IntPolynomial":
        return cls(())

    @property
    def degree(self) -> int:
        return len(self.coeffs) - 1 if self.coeffs else 0

    @property
    def is_zero(self) -> bool:
        return not self.coeffs

    def __call__(self, n: int) -> int:
        if n < 0:
            raise ValueError("evaluation point must be nonnegative")
        acc = 0
        for c in reversed(self.coeffs):
            acc = acc * n + c
        return acc

    def __add__(self, other: "IntPolynomial") -> "IntPolynomial":
        a, b = self.coeffs, other.coeffs
        if len(a) < len(b):
            a, b = b, a
        return IntPolynomial(tuple(x + (b[i] if i < len(b) else 0) for i, x in enumerate(a)))

    def __mul__(self, other: "IntPolynomial") -> "IntPolynomial":
        if self.is_zero or other.is_zero:
            return IntPolynomial.zero()
        out = [0] * (len(self.coeffs) + len(other.coeffs) - 1)
        for i, a in enumerate(self.coeffs):
            for j, b in enumerate(other.coeffs):
                out[i + j] += a * b
        return IntPolynomial(tuple(out))

    def compose(self, inner: "IntPolynomial") -> "IntPolynomial":
        """self(inner(n)); closed for nonnegative coefficients."""
        acc = IntPolynomial.zero()
        for c in reversed(self.coeffs):
            acc = acc * inner + IntPolynomial.constant(c)
        return acc

    def pointwise_max(self, other: "IntPolynomial") -> "IntPolynomial":
        """Coefficient-wise max: dominates both operands at every n >= 0."""
        n = max(len(self.coeffs), len(other.coeffs))
        a = self.coeffs + (0,) * (n - len(self.coeffs))
        b = other.coeffs + (0,) * (n - len(other.coeffs))
        return IntPolynomial(tuple(max(x, y) for x, y in zip(a, b)))

    def __str__(self) -> str:
        if self.is_zero:
            return "0"
        parts = []
        for i, c in enumerate(self.coeffs):
            if c == 0:
                continue
            if i == 0:
                parts.append(str(c))
            elif i == 1:
                parts.append("%d*n" % c if c != 1 else "n")
            else:
                parts.append(("%d*n^%d" % (c, i)) if c != 1 else ("n^%d" % i))
        return " + ".join(parts)
