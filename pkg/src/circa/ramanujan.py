"""Ramanujan sums C_d(n) and integer cyclotomic polynomials.

Two independent routes to C_d(n) are provided and kept separate on purpose:

* `ramanujan_sum` - the fast path, multiplying the closed-form prime-power
  values over the coprime parts of d;
* `ramanujan_sum_oracle` - a from-the-definition path that forms the sum of
  x^(a*n mod d) over the units a of Z_d and reduces it modulo the d-th
  cyclotomic polynomial; the residue must be a constant, and that constant
  is the value.

The oracle never consults the fast path, so agreement between the two is a
meaningful cross-check rather than a tautology.
"""

from __future__ import annotations

import threading
from dataclasses import dataclass

from .errors import InputError, InternalInconsistencyError
from .numtheory import divisors, factorize, unit_group
from .polys import IntPolynomial, monic_int_remainder

__all__ = [
    "RamanujanValue",
    "cyclotomic",
    "ramanujan_sum",
    "ramanujan_sum_oracle",
    "ramanujan_table_tsv",
]

_cyclotomic_cache: dict[int, IntPolynomial] = {}
_cyclotomic_lock = threading.Lock()


@dataclass(frozen=True)
class RamanujanValue:
    """One evaluated Ramanujan sum: C_d(n) = value.

    The value is always an integer and is d-periodic in n; n = 0 follows the
    convention C_d(0) = totient(d) (consistent with d | 0).
    """

    d: int
    n: int
    value: int


def cyclotomic(d: int) -> IntPolynomial:
    """The d-th cyclotomic polynomial as an exact integer polynomial.

    Computed by recursive exact division:  x^d - 1 divided by the product of
    the cyclotomic polynomials of all proper divisors of d.  Results are
    memoized per process; the cache only ever stores values of this pure
    function, so concurrent use is safe.
    """
    if d < 1:
        raise InputError(f"cyclotomic index must be >= 1, got {d}")
    cached = _cyclotomic_cache.get(d)
    if cached is not None:
        return cached
    if d == 1:
        result = IntPolynomial((-1, 1))
    else:
        quotient = IntPolynomial.x_power_minus_one(d)
        for e in divisors(d):
            if e == d:
                continue
            q, rem = quotient.monic_divmod(cyclotomic(e))
            if not rem.is_zero:
                raise InternalInconsistencyError(
                    f"x^{d}-1 not divisible by the cyclotomic polynomial of {e}"
                )
            quotient = q
        result = quotient
    with _cyclotomic_lock:
        _cyclotomic_cache.setdefault(d, result)
    return result


def ramanujan_sum(d: int, n: int) -> int:
    """C_d(n): the sum of the n-th powers of the primitive d-th roots of unity.

    Fast closed-form path: the sum is multiplicative over coprime parts of d,
    and for a prime power p**k it is
        totient(p**k)  if p**k divides n,
        -p**(k-1)      if p**(k-1) divides n but p**k does not,
        0              otherwise.
    """
    if d < 1:
        raise InputError(f"modulus must be >= 1, got {d}")
    if n < 0:
        raise InputError(f"argument must be >= 0, got {n}")
    value = 1
    for p, k in factorize(d).prime_powers:
        pk = p**k
        pk_prev = pk // p
        if n % pk_prev != 0:
            return 0
        value *= (pk - pk_prev) if n % pk == 0 else -pk_prev
    return value


def ramanujan_sum_oracle(d: int, n: int) -> int:
    """C_d(n) evaluated from the definition by symbolic reduction.

    Forms sum_{a in U(d)} x^(a*n mod d) and reduces it modulo the d-th
    cyclotomic polynomial.  All primitive d-th roots of unity share that
    minimal polynomial, so the residue must be a constant; a non-constant
    residue would falsify the implementation and raises
    InternalInconsistencyError.
    """
    if d < 1:
        raise InputError(f"modulus must be >= 1, got {d}")
    if n < 0:
        raise InputError(f"argument must be >= 0, got {n}")
    counts = [0] * d
    for a in unit_group(d):
        counts[(a * n) % d] += 1
    residue = monic_int_remainder(counts, cyclotomic(d))
    if len(residue) > 1:
        raise InternalInconsistencyError(
            f"reduction of the unit-power sum for d={d}, n={n} is not constant: {residue}"
        )
    return residue[0] if residue else 0


def ramanujan_table_tsv(dmax: int, nmax: int) -> str:
    """TSV table of C_d(n) for 1 <= d <= dmax, 0 <= n <= nmax."""
    if dmax < 1 or nmax < 0:
        raise InputError("need dmax >= 1 and nmax >= 0")
    header = "d\\n\t" + "\t".join(str(n) for n in range(nmax + 1))
    lines = [header]
    for d in range(1, dmax + 1):
        row = [str(d)] + [str(ramanujan_sum(d, n)) for n in range(nmax + 1)]
        lines.append("\t".join(row))
    return "\n".join(lines) + "\n"
