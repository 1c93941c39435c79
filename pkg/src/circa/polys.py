"""Dense univariate polynomial arithmetic over exact scalars.

`IntPolynomial` stores arbitrary-precision integer coefficients, lowest
degree first, with no trailing zeros (the zero polynomial is the empty
tuple).  The module also provides exact remainders against monic integer
divisors and a rational-arithmetic resultant used by the determinant route
that evaluates a polynomial over groups of roots of unity.
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from typing import Iterable, Sequence

from .errors import InputError

__all__ = ["IntPolynomial", "monic_int_remainder", "resultant"]


def _strip(coeffs: Sequence[int]) -> tuple[int, ...]:
    last = len(coeffs)
    while last > 0 and coeffs[last - 1] == 0:
        last -= 1
    return tuple(coeffs[:last])


@dataclass(frozen=True)
class IntPolynomial:
    """Integer-coefficient polynomial, coefficients lowest degree first."""

    coefficients: tuple[int, ...]

    def __post_init__(self) -> None:
        if self.coefficients and self.coefficients[-1] == 0:
            raise InputError("leading coefficient must be nonzero (use IntPolynomial.of)")
        if any(not isinstance(c, int) for c in self.coefficients):
            raise InputError("coefficients must be integers")

    @staticmethod
    def of(coeffs: Iterable[int]) -> "IntPolynomial":
        """Build a polynomial, stripping trailing zero coefficients."""
        return IntPolynomial(_strip(list(coeffs)))

    @staticmethod
    def zero() -> "IntPolynomial":
        return IntPolynomial(())

    @staticmethod
    def x_power_minus_one(n: int) -> "IntPolynomial":
        """x**n - 1."""
        if n < 1:
            raise InputError("need n >= 1")
        return IntPolynomial((-1,) + (0,) * (n - 1) + (1,))

    @property
    def degree(self) -> int:
        """Degree, with the zero polynomial reported as -1."""
        return len(self.coefficients) - 1

    @property
    def is_zero(self) -> bool:
        return not self.coefficients

    @property
    def is_monic(self) -> bool:
        return bool(self.coefficients) and self.coefficients[-1] == 1

    @property
    def leading(self) -> int:
        if self.is_zero:
            raise InputError("zero polynomial has no leading coefficient")
        return self.coefficients[-1]

    def __add__(self, other: "IntPolynomial") -> "IntPolynomial":
        a, b = self.coefficients, other.coefficients
        if len(a) < len(b):
            a, b = b, a
        out = list(a)
        for i, c in enumerate(b):
            out[i] += c
        return IntPolynomial.of(out)

    def __neg__(self) -> "IntPolynomial":
        return IntPolynomial(tuple(-c for c in self.coefficients))

    def __sub__(self, other: "IntPolynomial") -> "IntPolynomial":
        return self + (-other)

    def __mul__(self, other: "IntPolynomial") -> "IntPolynomial":
        if self.is_zero or other.is_zero:
            return IntPolynomial.zero()
        a, b = self.coefficients, other.coefficients
        out = [0] * (len(a) + len(b) - 1)
        for i, ca in enumerate(a):
            if ca == 0:
                continue
            for j, cb in enumerate(b):
                out[i + j] += ca * cb
        return IntPolynomial.of(out)

    def evaluate(self, x: Fraction | int) -> Fraction | int:
        """Horner evaluation at an exact scalar."""
        acc: Fraction | int = 0
        for c in reversed(self.coefficients):
            acc = acc * x + c
        return acc

    def monic_divmod(self, divisor: "IntPolynomial") -> tuple["IntPolynomial", "IntPolynomial"]:
        """Quotient and remainder against a monic integer divisor.

        Because the divisor is monic, both results have integer coefficients
        with no division ever performed.
        """
        if not divisor.is_monic:
            raise InputError("divisor must be monic")
        rem = list(self.coefficients)
        ddeg = divisor.degree
        if len(rem) - 1 < ddeg:
            return IntPolynomial.zero(), self
        quot = [0] * (len(rem) - ddeg)
        dcoeffs = divisor.coefficients
        for k in range(len(rem) - 1, ddeg - 1, -1):
            c = rem[k]
            if c == 0:
                continue
            quot[k - ddeg] = c
            for i in range(ddeg + 1):
                rem[k - ddeg + i] -= c * dcoeffs[i]
        return IntPolynomial.of(quot), IntPolynomial.of(rem[:ddeg])

    def divides(self, other: "IntPolynomial") -> bool:
        """True iff this monic polynomial divides `other` exactly."""
        _, rem = other.monic_divmod(self)
        return rem.is_zero


def monic_int_remainder(coeffs: Sequence[int], divisor: IntPolynomial) -> tuple[int, ...]:
    """Remainder of an integer coefficient sequence modulo a monic divisor.

    Convenience wrapper that skips building an intermediate IntPolynomial
    for the dividend.
    """
    _, rem = IntPolynomial.of(coeffs).monic_divmod(divisor)
    return rem.coefficients


def _frac_strip(coeffs: Sequence[Fraction]) -> list[Fraction]:
    out = list(coeffs)
    while out and out[-1] == 0:
        out.pop()
    return out


def _frac_mod(a: list[Fraction], b: list[Fraction]) -> list[Fraction]:
    """Remainder of a modulo b over the rationals (b nonzero)."""
    rem = list(a)
    db = len(b) - 1
    lead = b[-1]
    for k in range(len(rem) - 1, db - 1, -1):
        c = rem[k]
        if c == 0:
            continue
        factor = c / lead
        for i in range(db + 1):
            rem[k - db + i] -= factor * b[i]
    return _frac_strip(rem[:db])


def resultant(a: Sequence[Fraction | int], b: Sequence[Fraction | int]) -> Fraction:
    """Resultant of two polynomials with exact rational coefficients.

    Computed by the Euclidean remainder recursion
        Res(A, B) = (-1)^(deg A * deg B) * lc(B)^(deg A - deg R) * Res(B, R)
    with R = A mod B.  Conventions: if either argument is the zero
    polynomial the result is 0; two nonzero constants have resultant 1.
    """
    A = _frac_strip([Fraction(c) for c in a])
    B = _frac_strip([Fraction(c) for c in b])
    if not A or not B:
        return Fraction(0)
    result = Fraction(1)
    while True:
        da, db = len(A) - 1, len(B) - 1
        if da == 0 and db == 0:
            return result
        if da == 0:
            return result * A[0] ** db
        if db == 0:
            return result * B[0] ** da
        if da < db:
            if (da * db) % 2 == 1:
                result = -result
            A, B = B, A
            da, db = db, da
        R = _frac_mod(A, B)
        if not R:
            return Fraction(0)
        dr = len(R) - 1
        if (da * db) % 2 == 1:
            result = -result
        result *= B[-1] ** (da - dr)
        A, B = B, R
