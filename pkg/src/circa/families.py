"""Generators and criteria for two structured circulant families.

1. Power-product matrices generalizing the classical Maillet determinant:
   for an odd prime p and exponent m, the (p-1) x (p-1) matrix with entry
   (i, j) = ((i^{-1} mod p) * j mod p)^m (1-indexed).  Each such matrix is
   permutation similar to the circulant whose first row lists the powers of
   a generator h of Z_p: (1, (h mod p)^m, (h^2 mod p)^m, ...).

2. Zero/one circulants of prime-power size, where a simple count of the
   ones already decides invertibility in a band around 0 and n.

The module also provides the exact tag criteria behind the summary grid of
decided parameters (the power-threshold, half-prime, and quarter-prime
criteria) and the residue scan over primes q with 4q + 1 prime.
"""

from __future__ import annotations

import random
from concurrent.futures import ThreadPoolExecutor
from dataclasses import dataclass
from enum import Enum
from fractions import Fraction
from itertools import combinations
from typing import Iterable, Mapping, Optional, Sequence

from .circulant import FirstRow, bareiss_determinant, det_bareiss, expand, first_row
from .conditions import Verdict, decide
from .errors import InputError
from .numtheory import (
    canonical_primitive_element,
    is_prime,
    is_prime_power,
    is_primitive_element,
)

__all__ = [
    "MailletSpec",
    "Tag",
    "TagGrid",
    "ZeroOneReport",
    "PairRecord",
    "maillet_matrix",
    "maillet_row",
    "verify_permutation_similarity",
    "threshold_inequality_holds",
    "power_sum_inequality_holds",
    "half_prime_criterion",
    "quarter_prime_criterion",
    "quarter_prime_residue",
    "tag_grid",
    "display_symbol",
    "render_tag_grid",
    "ones_count_criterion",
    "zeroone_scan",
    "four_q_plus_one_scan",
    "DEFAULT_SEED",
]

DEFAULT_SEED = 20240901


@dataclass(frozen=True)
class MailletSpec:
    """Parameters (p, m, h) of one power-product matrix.

    p is an odd prime, m >= 1 the entry exponent, h a generator of Z_p
    (defaults to the smallest one so outputs are reproducible).
    """

    p: int
    m: int
    h: Optional[int] = None

    def __post_init__(self) -> None:
        if self.p < 3 or not is_prime(self.p):
            raise InputError(f"p={self.p} must be an odd prime")
        if self.m < 1:
            raise InputError(f"m={self.m} must be >= 1")
        if self.h is None:
            object.__setattr__(self, "h", canonical_primitive_element(self.p))
        elif not is_primitive_element(self.h, self.p):
            raise InputError(f"h={self.h} does not generate Z_{self.p}")


def maillet_matrix(spec: MailletSpec) -> list[list[int]]:
    """The (p-1) x (p-1) integer matrix with entry (i, j), 1-indexed, equal
    to ((i^{-1} mod p) * j mod p)^m."""
    p, m = spec.p, spec.m
    inverse = [0] * p
    for i in range(1, p):
        inverse[i] = pow(i, p - 2, p)
    return [[((inverse[i] * j) % p) ** m for j in range(1, p)] for i in range(1, p)]


def maillet_row(spec: MailletSpec) -> FirstRow:
    """First row (1, (h mod p)^m, (h^2 mod p)^m, ..., (h^{p-2} mod p)^m) of
    the circulant the power-product matrix is permutation similar to."""
    p, m, h = spec.p, spec.m, spec.h
    return first_row([Fraction(pow(h, j, p) ** m) for j in range(p - 1)])


def verify_permutation_similarity(spec: MailletSpec) -> bool:
    """Exhibit the permutation relating the two constructions and verify it.

    The index map a -> h^a mod p sends entry (a, b) of the circulant to
    entry (h^a, h^b) of the power-product matrix; checking all n^2 cells
    verifies P^T A P = circ exactly.  The determinants (computed
    independently by Bareiss elimination) must then agree in absolute value,
    which is asserted as well.
    """
    if spec.p > 50:
        raise InputError("similarity verification is supported for p <= 50")
    p = spec.p
    n = p - 1
    a_matrix = maillet_matrix(spec)
    g_matrix = expand(maillet_row(spec))
    sigma = [pow(spec.h, a, p) for a in range(n)]  # values in 1..p-1
    for a in range(n):
        for b in range(n):
            if a_matrix[sigma[a] - 1][sigma[b] - 1] != g_matrix[a][b]:
                return False
    det_a = bareiss_determinant(a_matrix)
    det_g = det_bareiss(maillet_row(spec))
    return abs(Fraction(det_a)) == abs(det_g)


def threshold_inequality_holds(p: int, m: int) -> bool:
    """Exact integer form of the threshold m >= log(p-2) / log((p-1)/(p-2)):
    true iff (p-1)^m >= (p-2)^(m+1).

    This is the criterion the summary grid's diamond tag uses; it implies
    the power-sum inequality below and hence nonsingularity.
    """
    _require_odd_prime(p)
    if m < 1:
        raise InputError(f"m={m} must be >= 1")
    return (p - 1) ** m >= (p - 2) ** (m + 1)


def power_sum_inequality_holds(p: int, m: int) -> bool:
    """True iff (p-1)^m > sum_{k=1}^{p-2} k^m (exact big-integer evaluation).

    Sufficient for nonsingularity of the power-product matrix: it makes the
    row-reversed matrix strictly diagonally dominant.
    """
    _require_odd_prime(p)
    if m < 1:
        raise InputError(f"m={m} must be >= 1")
    return (p - 1) ** m > sum(k**m for k in range(1, p - 1))


def half_prime_criterion(p: int) -> bool:
    """True iff p = 2q + 1 with q an odd prime.

    For such p the power-product matrix is nonsingular for every m >= 2.
    """
    _require_odd_prime(p)
    q, rem = divmod(p - 1, 2)
    return rem == 0 and q % 2 == 1 and is_prime(q)


def quarter_prime_residue(p: int) -> Optional[int]:
    """For p = 4q + 1 with q an odd prime, the residue r = 2^q mod p;
    None when p does not have that shape."""
    _require_odd_prime(p)
    q, rem = divmod(p - 1, 4)
    if rem != 0 or q % 2 == 0 or not is_prime(q):
        return None
    return pow(2, q, p)


def quarter_prime_criterion(p: int, m: int) -> bool:
    """True iff p = 4q + 1 with q an odd prime, m is odd and >= 3, and
    r = 2^q mod p satisfies r mod 4 in {0, 1}.

    Under these conditions the power-product matrix is nonsingular.
    """
    if m < 1:
        raise InputError(f"m={m} must be >= 1")
    r = quarter_prime_residue(p)
    if r is None:
        return False
    return m % 2 == 1 and m >= 3 and r % 4 in (0, 1)


def _require_odd_prime(p: int) -> None:
    if p < 3 or not is_prime(p):
        raise InputError(f"p={p} must be an odd prime")


class Tag(Enum):
    """Criteria that settle a (p, m) cell, with their display symbols."""

    POWER_THRESHOLD = "⋄"  # diamond
    HALF_PRIME = "★"  # star
    QUARTER_PRIME = "★★"  # double star


_TAG_PRIORITY = (Tag.POWER_THRESHOLD, Tag.HALF_PRIME, Tag.QUARTER_PRIME)


@dataclass(frozen=True)
class TagGrid:
    """Applicable-criteria sets for every odd prime 5 <= p <= pmax and
    exponent 2 <= m <= mmax."""

    primes: tuple[int, ...]
    exponents: tuple[int, ...]
    cells: Mapping[tuple[int, int], frozenset[Tag]]


def tag_grid(pmax: int, mmax: int) -> TagGrid:
    """Evaluate all three criteria on the (p, m) rectangle."""
    if pmax < 5 or mmax < 2:
        raise InputError("need pmax >= 5 and mmax >= 2")
    primes = tuple(p for p in range(5, pmax + 1) if is_prime(p))
    exponents = tuple(range(2, mmax + 1))
    cells: dict[tuple[int, int], frozenset[Tag]] = {}
    for p in primes:
        for m in exponents:
            tags = set()
            if threshold_inequality_holds(p, m):
                tags.add(Tag.POWER_THRESHOLD)
            if half_prime_criterion(p):
                tags.add(Tag.HALF_PRIME)
            if quarter_prime_criterion(p, m):
                tags.add(Tag.QUARTER_PRIME)
            cells[(p, m)] = frozenset(tags)
    return TagGrid(primes, exponents, cells)


def display_symbol(tags: frozenset[Tag] | set[Tag]) -> str:
    """Single display symbol for a cell: highest-priority tag, or ''."""
    for tag in _TAG_PRIORITY:
        if tag in tags:
            return tag.value
    return ""


def render_tag_grid(grid: TagGrid, markdown: bool = False) -> str:
    """Aligned text (or Markdown) table, exponents descending top to bottom."""
    header = ["m\\p"] + [str(p) for p in grid.primes]
    rows = []
    for m in sorted(grid.exponents, reverse=True):
        rows.append([str(m)] + [display_symbol(grid.cells[(p, m)]) for p in grid.primes])
    if markdown:
        lines = ["| " + " | ".join(header) + " |"]
        lines.append("|" + "|".join(" --- " for _ in header) + "|")
        for row in rows:
            lines.append("| " + " | ".join(cell or " " for cell in row) + " |")
        return "\n".join(lines) + "\n"
    widths = [max(len(r[i]) for r in [header] + rows) for i in range(len(header))]
    lines = ["  ".join(cell.ljust(widths[i]) for i, cell in enumerate(header)).rstrip()]
    for row in rows:
        lines.append("  ".join(cell.ljust(widths[i]) for i, cell in enumerate(row)).rstrip())
    return "\n".join(lines) + "\n"


def ones_count_criterion(n: int, m: int) -> bool:
    """For n = p^t, true iff 1 <= m <= p-1 or 1 <= n-m <= p-1.

    A zero/one circulant of size n with m ones is nonsingular whenever this
    holds.  Rejects n that is not a prime power.
    """
    pp = is_prime_power(n)
    if pp is None:
        raise InputError(f"n={n} is not a prime power")
    if not 0 <= m <= n:
        raise InputError(f"ones count m={m} out of range for n={n}")
    p, _ = pp
    return 1 <= m <= p - 1 or 1 <= n - m <= p - 1


@dataclass(frozen=True)
class ZeroOneReport:
    """Scan result over zero/one arrangements of size n with m ones.

    Arrangements are canonicalized up to rotation (rotation preserves the
    absolute determinant), so each class is decided once.  `predicate` is
    the ones-count criterion when n is a prime power, else None; when the
    predicate is true the scan must find zero singular classes.
    """

    n: int
    m: int
    predicate: Optional[bool]
    mode: str
    draws: Optional[int]
    classes_tested: int
    arrangements_covered: int
    singular_classes: tuple[tuple[int, ...], ...]
    nonsingular_classes: int

    @property
    def cross_check_ok(self) -> bool:
        return not (self.predicate is True and self.singular_classes)


def _canonical_rotation(positions: Iterable[int], n: int) -> tuple[int, ...]:
    pos = sorted(p % n for p in positions)
    best = None
    for shift in range(n):
        rotated = tuple(sorted((p - shift) % n for p in pos))
        if best is None or rotated < best:
            best = rotated
    return best if best is not None else tuple()


def _orbit_size(positions: tuple[int, ...], n: int) -> int:
    seen = set()
    for shift in range(n):
        seen.add(tuple(sorted((p + shift) % n for p in positions)))
    return len(seen)


def _zero_one_row(positions: tuple[int, ...], n: int) -> FirstRow:
    entries = [0] * n
    for p in positions:
        entries[p] = 1
    return first_row(entries)


def zeroone_scan(
    n: int,
    m: int,
    *,
    exhaustive: bool = True,
    samples: Optional[int] = None,
    seed: int = DEFAULT_SEED,
    threads: int = 1,
) -> ZeroOneReport:
    """Decide zero/one circulants of size n with m ones, up to rotation.

    Exhaustive mode enumerates all C(n, m) position sets (supported for
    n <= 20); sampling mode draws `samples` uniform position sets with a
    seeded generator.  Any n >= 1 is accepted; the ones-count predicate is
    reported only when n is a prime power.
    """
    if not 0 <= m <= n:
        raise InputError(f"ones count m={m} out of range for n={n}")
    if samples is not None:
        exhaustive = False
    if exhaustive and n > 20:
        raise InputError(f"exhaustive scan supported for n <= 20 (got n={n}); pass samples=")
    if not exhaustive and samples is None:
        raise InputError("sampling mode needs a sample count")

    predicate = ones_count_criterion(n, m) if is_prime_power(n) else None

    classes: set[tuple[int, ...]] = set()
    draws = None
    if exhaustive:
        for positions in combinations(range(n), m):
            classes.add(_canonical_rotation(positions, n))
        mode = "exhaustive"
    else:
        rng = random.Random(seed)
        draws = samples
        population = list(range(n))
        for _ in range(samples):
            classes.add(_canonical_rotation(tuple(rng.sample(population, m)), n))
        mode = "sampled"

    ordered = sorted(classes)

    def decide_class(positions: tuple[int, ...]) -> Verdict:
        verdict, _ = decide(_zero_one_row(positions, n))
        return verdict

    if threads > 1:
        with ThreadPoolExecutor(max_workers=threads) as pool:
            verdicts = list(pool.map(decide_class, ordered))
    else:
        verdicts = [decide_class(c) for c in ordered]

    singular = tuple(c for c, v in zip(ordered, verdicts) if v is Verdict.SINGULAR)
    covered = sum(_orbit_size(c, n) for c in ordered)
    return ZeroOneReport(
        n=n,
        m=m,
        predicate=predicate,
        mode=mode,
        draws=draws,
        classes_tested=len(ordered),
        arrangements_covered=covered,
        singular_classes=singular,
        nonsingular_classes=len(ordered) - len(singular),
    )


@dataclass(frozen=True)
class PairRecord:
    """One prime q with p = 4q + 1 prime, and the residue r = 2^q mod p.

    `qualifies` is true when r mod 4 is 0 or 1, i.e. when the quarter-prime
    criterion applies to p for odd exponents m >= 3.
    """

    q: int
    p: int
    residue: int
    residue_mod_4: int
    qualifies: bool


def four_q_plus_one_scan(qmax: int) -> list[PairRecord]:
    """All primes q <= qmax with 4q + 1 prime, classified by 2^q mod p."""
    if qmax < 2:
        raise InputError("need qmax >= 2")
    out = []
    for q in range(3, qmax + 1, 2):
        if not is_prime(q):
            continue
        p = 4 * q + 1
        if not is_prime(p):
            continue
        r = pow(2, q, p)
        out.append(PairRecord(q, p, r, r % 4, r % 4 in (0, 1)))
    return out
