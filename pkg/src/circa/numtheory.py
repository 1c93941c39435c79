"""Integer and modular-arithmetic foundation.

Factorization, Euler's totient, divisor and unit-group enumeration, and
primitive elements of the prime field Z_p.  Everything here is exact,
deterministic, and pure; all functions are safe to call concurrently.
"""

from __future__ import annotations

import math
from dataclasses import dataclass

from .errors import InputError

__all__ = [
    "Factorization",
    "PrimeField",
    "factorize",
    "totient",
    "divisors",
    "unit_group",
    "is_prime",
    "is_prime_power",
    "is_primitive_element",
    "primitive_elements",
    "canonical_primitive_element",
    "multiplicative_order",
    "two_generates_4q_plus_1",
]

# Below this bound primality is settled by trial division; above it by the
# deterministic Miller-Rabin witness set.
_TRIAL_DIVISION_BOUND = 1 << 20

# Sufficient deterministic witness set for every n < 3.3 * 10**24.
_MR_WITNESSES = (2, 3, 5, 7, 11, 13, 17, 19, 23, 29, 31, 37)


@dataclass(frozen=True)
class Factorization:
    """Prime factorization as an ordered tuple of (prime, exponent) pairs.

    Primes are strictly increasing and every exponent is >= 1; the empty
    tuple represents 1.
    """

    prime_powers: tuple[tuple[int, int], ...]

    def __post_init__(self) -> None:
        primes = [p for p, _ in self.prime_powers]
        if primes != sorted(set(primes)):
            raise InputError("factor primes must be strictly increasing")
        if any(e < 1 for _, e in self.prime_powers):
            raise InputError("factor exponents must be >= 1")

    def value(self) -> int:
        """The integer this factorization reconstructs."""
        out = 1
        for p, e in self.prime_powers:
            out *= p**e
        return out


@dataclass(frozen=True)
class PrimeField:
    """The field of residues modulo an odd prime p."""

    p: int

    def __post_init__(self) -> None:
        if self.p < 3 or not is_prime(self.p):
            raise InputError(f"modulus {self.p} is not an odd prime")


def _trial_division_is_prime(n: int) -> bool:
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


def _miller_rabin_is_prime(n: int) -> bool:
    d = n - 1
    s = 0
    while d % 2 == 0:
        d //= 2
        s += 1
    for a in _MR_WITNESSES:
        if a % n == 0:
            continue
        x = pow(a, d, n)
        if x in (1, n - 1):
            continue
        for _ in range(s - 1):
            x = x * x % n
            if x == n - 1:
                break
        else:
            return False
    return True


def is_prime(n: int) -> bool:
    """Deterministic primality check (trial division at desk scale, fixed
    Miller-Rabin witness set above it)."""
    if n < _TRIAL_DIVISION_BOUND:
        return _trial_division_is_prime(n)
    return _miller_rabin_is_prime(n)


def factorize(n: int) -> Factorization:
    """Prime factorization by trial division with a 2/3/6k±1 wheel.

    n = 1 yields the empty factorization.
    """
    if n < 1:
        raise InputError(f"cannot factor {n}: need n >= 1")
    out: list[tuple[int, int]] = []
    for p in (2, 3):
        if n % p == 0:
            e = 0
            while n % p == 0:
                n //= p
                e += 1
            out.append((p, e))
    f = 5
    while f * f <= n:
        for p in (f, f + 2):
            if n % p == 0:
                e = 0
                while n % p == 0:
                    n //= p
                    e += 1
                out.append((p, e))
        f += 6
    if n > 1:
        out.append((n, 1))
    return Factorization(tuple(out))


def is_prime_power(n: int) -> tuple[int, int] | None:
    """Return (p, t) when n = p**t for a prime p and t >= 1, else None."""
    if n < 2:
        return None
    pp = factorize(n).prime_powers
    if len(pp) == 1:
        return pp[0]
    return None


def totient(n: int) -> int:
    """Euler's totient: the number of integers in [1, n] coprime to n."""
    if n < 1:
        raise InputError(f"totient undefined for {n}")
    out = 1
    for p, e in factorize(n).prime_powers:
        out *= (p - 1) * p ** (e - 1)
    return out


def divisors(n: int) -> list[int]:
    """All divisors of n in increasing order, including 1 and n."""
    if n < 1:
        raise InputError(f"divisors undefined for {n}")
    out = [1]
    for p, e in factorize(n).prime_powers:
        out = [d * p**k for d in out for k in range(e + 1)]
    return sorted(out)


def unit_group(n: int) -> list[int]:
    """Ascending residues in [1, n] coprime to n.

    For n = 1 this returns [1] (the trivial group), so the length always
    equals totient(n).
    """
    if n < 1:
        raise InputError(f"unit group undefined for {n}")
    if n == 1:
        return [1]
    return [a for a in range(1, n + 1) if math.gcd(a, n) == 1]


def multiplicative_order(h: int, n: int) -> int:
    """Order of h in the unit group modulo n (h must be coprime to n)."""
    if math.gcd(h, n) != 1:
        raise InputError(f"{h} is not a unit modulo {n}")
    order = totient(n)
    for p, _ in factorize(order).prime_powers:
        while order % p == 0 and pow(h, order // p, n) == 1:
            order //= p
    return order


def _as_prime_modulus(f: PrimeField | int) -> int:
    if isinstance(f, PrimeField):
        return f.p
    PrimeField(f)  # validates
    return f


def is_primitive_element(h: int, f: PrimeField | int) -> bool:
    """True iff h generates the multiplicative group of Z_p.

    Checked by order divisibility: h is a generator iff h^((p-1)/q) != 1 for
    every prime q dividing p - 1.
    """
    p = _as_prime_modulus(f)
    if not 1 <= h <= p - 1:
        raise InputError(f"element {h} out of range for Z_{p}")
    for q, _ in factorize(p - 1).prime_powers:
        if pow(h, (p - 1) // q, p) == 1:
            return False
    return True


def primitive_elements(f: PrimeField | int) -> list[int]:
    """All generators of Z_p's multiplicative group, ascending.

    The length equals totient(p - 1); the smallest entry is the canonical
    generator used by the matrix-family constructors.
    """
    p = _as_prime_modulus(f)
    return [h for h in range(1, p) if is_primitive_element(h, p)]


def canonical_primitive_element(f: PrimeField | int) -> int:
    """The smallest generator of Z_p's multiplicative group."""
    p = _as_prime_modulus(f)
    for h in range(2, p):
        if is_primitive_element(h, p):
            return h
    raise InputError(f"no generator found modulo {p}")  # unreachable for prime p > 2


def two_generates_4q_plus_1(q: int) -> bool:
    """Regression guard: for prime q with p = 4q + 1 prime, 2 generates Z_p.

    This always holds, so the return value is always True; computing it
    anyway guards both the fact and the primitivity test.  Rejects q
    where q or 4q + 1 is composite.
    """
    if not is_prime(q):
        raise InputError(f"q={q} is not prime")
    p = 4 * q + 1
    if not is_prime(p):
        raise InputError(f"4q+1 = {p} is composite for q={q}")
    return is_primitive_element(2, p)
