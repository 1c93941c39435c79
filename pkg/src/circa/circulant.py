"""Circulant matrices with exact rational entries.

A circulant is represented by its first row v = (v_0, ..., v_{n-1}); row i of
the full matrix is v cyclically shifted right i times.  The eigenvalues are
the values of the associated polynomial f(x) = sum v_j x^j at the n-th roots
of unity, which gives two independent exact determinant routes:

* `det_bareiss` - fraction-free integer elimination on the expanded matrix;
* `det_resultant` - grouping the eigenvalues by the order d of each root of
  unity, det = prod over d | n of Res(Phi_d, f).

The two routes share no code and are cross-checked by the test suite and the
CLI; `is_singular_exact` decides singularity structurally by testing which
cyclotomic polynomials divide f.
"""

from __future__ import annotations

import math
import re
from dataclasses import dataclass
from fractions import Fraction
from typing import Iterable, Optional, Sequence, Union

from .errors import InputError
from .numtheory import divisors
from .polys import IntPolynomial, resultant
from .ramanujan import cyclotomic

__all__ = [
    "FirstRow",
    "AssociatedPolynomial",
    "first_row",
    "parse_rational",
    "parse_row",
    "rotate",
    "expand",
    "matrix_csv",
    "associated_polynomial",
    "bareiss_determinant",
    "det_bareiss",
    "det_resultant",
    "eigenvalue_is_zero",
    "is_singular_exact",
]

Scalar = Union[int, str, Fraction]

_RATIONAL_RE = re.compile(r"^[+-]?\d+(/\d+)?$")


def parse_rational(token: str) -> Fraction:
    """Parse `a` or `a/b` with integer a, b into an exact Fraction."""
    token = token.strip()
    if not _RATIONAL_RE.match(token):
        raise InputError(f"not a rational literal: {token!r} (expected 'a' or 'a/b')")
    num, _, den = token.partition("/")
    if den:
        if int(den) == 0:
            raise InputError(f"zero denominator in {token!r}")
        return Fraction(int(num), int(den))
    return Fraction(int(num))


@dataclass(frozen=True)
class FirstRow:
    """First row of a circulant matrix; entries are normalized Fractions."""

    entries: tuple[Fraction, ...]

    def __post_init__(self) -> None:
        if len(self.entries) < 1:
            raise InputError("a circulant needs at least one entry")
        if any(not isinstance(v, Fraction) for v in self.entries):
            raise InputError("entries must be Fractions (use first_row to coerce)")

    @property
    def n(self) -> int:
        return len(self.entries)

    def as_strings(self) -> list[str]:
        """Entries rendered exactly in the `a` / `a/b` grammar."""
        return [str(v) for v in self.entries]


def first_row(values: Iterable[Scalar]) -> FirstRow:
    """Coerce ints, Fractions, or `a/b` strings into a FirstRow."""
    out = []
    for v in values:
        if isinstance(v, Fraction):
            out.append(v)
        elif isinstance(v, int):
            out.append(Fraction(v))
        elif isinstance(v, str):
            out.append(parse_rational(v))
        else:
            raise InputError(f"unsupported entry type: {type(v).__name__}")
    return FirstRow(tuple(out))


def parse_row(text: str) -> FirstRow:
    """Parse a comma-separated row string, e.g. '1,2/3,-5'."""
    tokens = [t for t in text.split(",")]
    if not tokens or all(not t.strip() for t in tokens):
        raise InputError("empty row")
    return first_row([t for t in tokens])


def rotate(row: FirstRow, k: int) -> FirstRow:
    """Cyclic left rotation by k positions."""
    n = row.n
    k %= n
    return FirstRow(row.entries[k:] + row.entries[:k])


def expand(row: FirstRow) -> list[list[Fraction]]:
    """Materialize the full n x n circulant: entry (i, j) = v_{(j-i) mod n}."""
    n = row.n
    v = row.entries
    return [[v[(j - i) % n] for j in range(n)] for i in range(n)]


def matrix_csv(row: FirstRow) -> str:
    """CSV rendering of the expanded matrix with exact `a/b` entries."""
    return "\n".join(",".join(str(x) for x in r) for r in expand(row)) + "\n"


@dataclass(frozen=True)
class AssociatedPolynomial:
    """Denominator-cleared form of f(x) = sum v_j x^j.

    poly has integer coefficients and poly / scale == f exactly; scale is the
    least common multiple of the entry denominators.
    """

    poly: IntPolynomial
    scale: int

    def __post_init__(self) -> None:
        if self.scale < 1:
            raise InputError("scale must be a positive integer")


def associated_polynomial(row: FirstRow) -> AssociatedPolynomial:
    scale = 1
    for v in row.entries:
        scale = scale * v.denominator // math.gcd(scale, v.denominator)
    coeffs = [int(v * scale) for v in row.entries]
    return AssociatedPolynomial(IntPolynomial.of(coeffs), scale)


def bareiss_determinant(matrix: Sequence[Sequence[int]]) -> int:
    """Exact determinant of a square integer matrix by fraction-free
    (Bareiss) elimination.

    Every intermediate division is exact, so all arithmetic stays in the
    integers.  Zero pivots are handled by row swaps with sign tracking; if a
    pivot column is entirely zero the determinant is 0.
    """
    n = len(matrix)
    if any(len(r) != n for r in matrix):
        raise InputError("matrix must be square")
    m = [list(map(int, r)) for r in matrix]
    if n == 0:
        return 1
    sign = 1
    prev = 1
    for k in range(n - 1):
        if m[k][k] == 0:
            for i in range(k + 1, n):
                if m[i][k] != 0:
                    m[k], m[i] = m[i], m[k]
                    sign = -sign
                    break
            else:
                return 0
        pivot = m[k][k]
        for i in range(k + 1, n):
            row_i = m[i]
            row_k = m[k]
            factor = row_i[k]
            for j in range(k + 1, n):
                row_i[j] = (row_i[j] * pivot - factor * row_k[j]) // prev
            row_i[k] = 0
        prev = pivot
    return sign * m[n - 1][n - 1]


def det_bareiss(row: FirstRow) -> Fraction:
    """Exact determinant via integer Bareiss elimination.

    Denominators are cleared once up front (every entry multiplied by the
    common scale), so the integer determinant must be rescaled by scale**n.
    """
    n = row.n
    ap = associated_polynomial(row)
    scale = ap.scale
    v = [int(x * scale) for x in row.entries]
    matrix = [[v[(j - i) % n] for j in range(n)] for i in range(n)]
    return Fraction(bareiss_determinant(matrix), scale**n)


def det_resultant(row: FirstRow) -> Fraction:
    """Exact determinant via cyclotomic resultants.

    The eigenvalues f(epsilon^l) grouped by the multiplicative order d of
    epsilon^l multiply out to Res(Phi_d, f); the determinant is the product
    of these resultants over all divisors d of n.  Works on the
    denominator-cleared polynomial F = scale * f and divides by scale**n at
    the end.  The first reduction step F mod Phi_d stays in the integers
    because Phi_d is monic.
    """
    n = row.n
    ap = associated_polynomial(row)
    if ap.poly.is_zero:
        return Fraction(0)
    result = Fraction(1)
    for d in divisors(n):
        phi_d = cyclotomic(d)
        _, reduced = ap.poly.monic_divmod(phi_d)
        if reduced.is_zero:
            return Fraction(0)
        result *= resultant(phi_d.coefficients, reduced.coefficients)
    return result / Fraction(ap.scale) ** n


def eigenvalue_is_zero(row: FirstRow, l: int) -> bool:
    """True iff the eigenvalue f(epsilon^l) vanishes exactly.

    epsilon^l is a primitive d-th root of unity for d = n / gcd(n, l), and
    f(epsilon^l) = 0 iff Phi_d divides f.
    """
    n = row.n
    if not 0 <= l <= n - 1:
        raise InputError(f"eigenvalue index {l} out of range for n={n}")
    d = n // math.gcd(n, l)
    ap = associated_polynomial(row)
    return cyclotomic(d).divides(ap.poly)


def is_singular_exact(row: FirstRow) -> tuple[bool, Optional[int]]:
    """Exact singularity decision with the smallest witnessing divisor.

    The circulant is singular iff some eigenvalue vanishes, i.e. iff Phi_d
    divides the associated polynomial for some divisor d of n.  Divisors are
    scanned in increasing order so the witness is deterministic.
    """
    ap = associated_polynomial(row)
    for d in divisors(row.n):
        if cyclotomic(d).divides(ap.poly):
            return True, d
    return False, None
