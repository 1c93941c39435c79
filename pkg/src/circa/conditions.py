"""Divisor-indexed linear conditions screening circulants for singularity.

For each divisor d of n there is one integer-coefficient condition
    sum_j C_d(j) v_j = 0        (coefficients are Ramanujan sums)
that must hold whenever circ{v} is singular.  Evaluating all of them gives a
sound nonsingularity screen: if no condition vanishes, the matrix is
certifiably nonsingular.  A vanishing condition alone proves nothing (the
conditions are necessary, not sufficient), so `decide` resolves the
ambiguous case with the exact cyclotomic-divisibility oracle.

For structured sizes n = 2^k1 * q^k2 * r^k3 the same conditions are also
built a second way: as hand-expanded summation templates, one per divisor
shape, written out term by term (`template_conditions`).  The template route
shares no code with the Ramanujan-sum generator, so
`templates_match_generic` is a genuine cross-validation of the catalog.
Two of the source summation forms are wrong as printed; the builders keep
the corrected sums and record the printed variant in `TemplateDeviation`
entries rather than silently patching them (see `template_deviations`).
"""

from __future__ import annotations

from dataclasses import dataclass
from enum import Enum
from fractions import Fraction
from math import gcd
from typing import Mapping, Optional

from .circulant import FirstRow, associated_polynomial, det_bareiss, is_singular_exact
from .errors import InputError, InternalInconsistencyError
from .numtheory import divisors, factorize, is_prime
from .ramanujan import cyclotomic, ramanujan_sum

__all__ = [
    "ScreenOutcome",
    "Verdict",
    "DivisorCondition",
    "ScreenVerdict",
    "Certificate",
    "TemplateDeviation",
    "TemplateComparison",
    "generate_conditions",
    "condition_value",
    "screen",
    "decide",
    "classify_prime",
    "template_conditions",
    "template_deviations",
    "compare_templates_to_generic",
    "templates_match_generic",
]


class ScreenOutcome(Enum):
    CERTIFIED_NONSINGULAR = "CertifiedNonsingular"
    UNKNOWN = "Unknown"


class Verdict(Enum):
    NONSINGULAR = "NONSINGULAR"
    SINGULAR = "SINGULAR"


@dataclass(frozen=True)
class DivisorCondition:
    """The linear condition for divisor d of n: dot(coeffs, v) = 0.

    coeffs[j] = C_d(j) is d-periodic in j and coeffs[0] = totient(d); for
    d = 1 this is the all-ones row-sum condition.
    """

    n: int
    d: int
    coeffs: tuple[int, ...]

    def __post_init__(self) -> None:
        if self.n < 1 or self.d < 1 or self.n % self.d != 0:
            raise InputError(f"d={self.d} must divide n={self.n}")
        if len(self.coeffs) != self.n:
            raise InputError("coefficient vector length must equal n")


@dataclass(frozen=True)
class ScreenVerdict:
    """Outcome of evaluating every divisor condition exactly.

    CERTIFIED_NONSINGULAR iff `vanishing` is empty.  UNKNOWN never asserts
    singularity; it only lists the divisors whose conditions vanished.
    `values` maps every divisor to its exact condition value.
    """

    outcome: ScreenOutcome
    vanishing: tuple[int, ...]
    values: Mapping[int, Fraction]


@dataclass(frozen=True)
class Certificate:
    """Audit record for a decided row.

    Always carries every screen value (so margins can be audited), which
    path decided (`screen` or `oracle`), and - when the oracle ran - the
    witnessing divisor for singular rows or the exact determinant for
    nonsingular ones.
    """

    n: int
    row: tuple[Fraction, ...]
    screen_values: Mapping[int, Fraction]
    verdict: Verdict
    decided_by: str
    witness_d: Optional[int] = None
    determinant: Optional[Fraction] = None

    def to_json_dict(self) -> dict:
        """JSON-ready dict with stable key order and exact string scalars."""
        out: dict = {
            "n": self.n,
            "row": [str(v) for v in self.row],
            "screen": {str(d): str(val) for d, val in sorted(self.screen_values.items())},
            "verdict": self.verdict.value,
            "decided_by": self.decided_by,
        }
        if self.witness_d is not None:
            out["witness_d"] = self.witness_d
        if self.determinant is not None:
            out["determinant"] = str(self.determinant)
        return out


def generate_conditions(n: int) -> list[DivisorCondition]:
    """One condition per divisor of n, ordered by increasing d."""
    if n < 1:
        raise InputError(f"need n >= 1, got {n}")
    return [
        DivisorCondition(n, d, tuple(ramanujan_sum(d, j) for j in range(n)))
        for d in divisors(n)
    ]


def condition_value(condition: DivisorCondition, row: FirstRow) -> Fraction:
    """Exact value of dot(coeffs, v)."""
    if row.n != condition.n:
        raise InputError("row length does not match condition size")
    return sum((c * v for c, v in zip(condition.coeffs, row.entries)), Fraction(0))


def screen(row: FirstRow) -> ScreenVerdict:
    """Evaluate every divisor condition exactly.

    All values nonzero certifies nonsingularity; otherwise the verdict is
    UNKNOWN with the vanishing divisors listed in increasing order.
    """
    values: dict[int, Fraction] = {}
    vanishing: list[int] = []
    for cond in generate_conditions(row.n):
        val = condition_value(cond, row)
        values[cond.d] = val
        if val == 0:
            vanishing.append(cond.d)
    outcome = ScreenOutcome.UNKNOWN if vanishing else ScreenOutcome.CERTIFIED_NONSINGULAR
    return ScreenVerdict(outcome, tuple(vanishing), values)


def decide(row: FirstRow) -> tuple[Verdict, Certificate]:
    """Screen first; resolve UNKNOWN with the exact cyclotomic oracle.

    Resolution order: test cyclotomic divisibility only for the vanishing
    divisors (ascending - a vanishing condition flags the only plausible
    witnesses), then fall back to the full structural oracle and the Bareiss
    determinant as cross-checks.  Divergence between those stages would mean
    an implementation bug and raises InternalInconsistencyError.
    """
    sv = screen(row)
    if sv.outcome is ScreenOutcome.CERTIFIED_NONSINGULAR:
        cert = Certificate(row.n, row.entries, sv.values, Verdict.NONSINGULAR, "screen")
        return Verdict.NONSINGULAR, cert

    ap = associated_polynomial(row)
    for d in sv.vanishing:
        if cyclotomic(d).divides(ap.poly):
            cert = Certificate(
                row.n, row.entries, sv.values, Verdict.SINGULAR, "oracle",
                witness_d=d, determinant=Fraction(0),
            )
            return Verdict.SINGULAR, cert

    singular, witness = is_singular_exact(row)
    if singular:
        raise InternalInconsistencyError(
            f"structural oracle found witness d={witness} outside the vanishing set "
            f"{sv.vanishing} - the necessity of the divisor conditions is violated"
        )
    det = det_bareiss(row)
    if det == 0:
        raise InternalInconsistencyError(
            "determinant is 0 but no cyclotomic polynomial divides the row polynomial"
        )
    cert = Certificate(
        row.n, row.entries, sv.values, Verdict.NONSINGULAR, "oracle", determinant=det
    )
    return Verdict.NONSINGULAR, cert


def classify_prime(row: FirstRow) -> Verdict:
    """Complete singularity classification for prime n.

    For prime n the screen is also necessary: circ{v} is singular iff the
    row sums to zero or all entries are equal.
    """
    n = row.n
    if not is_prime(n):
        raise InputError(f"classify_prime needs prime size, got n={n}")
    row_sum = sum(row.entries, Fraction(0))
    all_equal = all(v == row.entries[0] for v in row.entries)
    return Verdict.SINGULAR if (row_sum == 0 or all_equal) else Verdict.NONSINGULAR


# --------------------------------------------------------------------------
# Hand-expanded condition templates for structured sizes
# --------------------------------------------------------------------------


@dataclass(frozen=True)
class TemplateDeviation:
    """Record of a summation form that is wrong as printed in the source
    catalog of identities.

    `printed` is the literal term-by-term expansion of the printed sums
    (indices reduced mod n), `corrected` is the form the template catalog
    actually uses; `first_difference` is the first index where they differ.
    """

    n: int
    d: int
    printed: tuple[int, ...]
    corrected: tuple[int, ...]
    first_difference: int
    note: str


@dataclass(frozen=True)
class TemplateComparison:
    """Result of checking every template against the generic generator."""

    n: int
    matches: bool
    mismatches: tuple[tuple[int, int], ...]  # (d, first differing index)
    deviations: tuple[TemplateDeviation, ...]


def _first_difference(a: list[int], b: list[int]) -> int:
    for i, (x, y) in enumerate(zip(a, b)):
        if x != y:
            return i
    return -1


def _all_ones(n: int) -> list[int]:
    return [1] * n


def _parity_vector(n: int) -> list[int]:
    # sum of even-index entries minus sum of odd-index entries
    return [1 if j % 2 == 0 else -1 for j in range(n)]


def _prime_vector(n: int, q: int, stride: int = 1, blocks: int = 1) -> list[int]:
    """(q-1) * sum_j v_{q*stride*j} - sum_j sum_{i=1..q-1} v_{q*stride*j + i*stride},
    accumulated over `blocks` consecutive j blocks.  stride=1, blocks covering
    n/q reproduces the plain prime-divisor condition."""
    vec = [0] * n
    for j in range(blocks):
        vec[(q * stride * j) % n] += q - 1
        for i in range(1, q):
            vec[(q * stride * j + i * stride) % n] -= 1
    return vec


def _odd_prime_power_vectors(n: int, q: int, k: int, length_blocks: int) -> list[tuple[int, list[int]]]:
    """Conditions for d = q^t, 1 <= t <= k, inside a row of length n.

    length_blocks is the number of base points q^t * j to sweep (q^(k-t) for
    n = q^k, doubled when n = 2 q^k)."""
    out = []
    for t in range(1, k + 1):
        qt, qt1 = q**t, q ** (t - 1)
        vec = [0] * n
        for j in range(length_blocks * q ** (k - t)):
            vec[qt * j] += q - 1
            for i in range(1, q):
                vec[qt * j + i * qt1] -= 1
        out.append((qt, vec))
    return out


def _two_power_vectors(n: int, k: int, length_blocks: int) -> list[tuple[int, list[int]]]:
    """Conditions for d = 2^t, 1 <= t <= k: sum v_{2^t j} = sum v_{2^t j + 2^(t-1)}."""
    out = []
    for t in range(1, k + 1):
        tp, tp1 = 2**t, 2 ** (t - 1)
        vec = [0] * n
        for j in range(length_blocks * 2 ** (k - t)):
            vec[tp * j] += 1
            vec[tp * j + tp1] -= 1
        out.append((tp, vec))
    return out


def _twice_prime_top_condition(n: int, q: int) -> tuple[list[int], list[int]]:
    """d = 2q condition for n = 2q: corrected vector and the printed variant.

    The printed right-hand side enumerates the odd indices as two sums that
    stop one term early, skipping index 2q-1; the corrected form includes it.
    """
    corrected = [0] * n
    corrected[q] += q - 1
    for j in range(1, q):
        corrected[2 * j] += 1
    corrected[0] -= q - 1
    for j in range(1, (q - 1) // 2 + 1):
        corrected[2 * j - 1] -= 1
    for j in range((q + 1) // 2 + 1, q + 1):
        corrected[2 * j - 1] -= 1

    printed = [0] * n
    printed[q] += q - 1
    for j in range(1, q):
        printed[2 * j] += 1
    printed[0] -= q - 1
    for j in range(1, (q - 1) // 2 + 1):
        printed[2 * j - 1] -= 1
    for j in range((q + 1) // 2 + 1, q):
        printed[2 * j - 1] -= 1
    return corrected, printed


def _twice_prime_power_top_vectors(n: int, q: int, k: int) -> list[tuple[int, list[int]]]:
    """Conditions for d = 2 q^t, 1 <= t <= k, inside n = 2 q^k (these
    summation forms are correct as printed)."""
    out = []
    for t in range(1, k + 1):
        qt, qt1 = q**t, q ** (t - 1)
        vec = [0] * n
        for j in range(q ** (k - t)):
            base = 2 * qt * j
            vec[base] += q - 1
            for c in range(1, q - 1, 2):  # odd multiples of q^(t-1)
                vec[base + c * qt1] += 1
            for c in range(2, q, 2):  # q^t + even multiples
                vec[base + qt + c * qt1] += 1
            vec[base + qt] -= q - 1
            for c in range(2, q, 2):  # even multiples
                vec[base + c * qt1] -= 1
            for c in range(1, q - 1, 2):  # q^t + odd multiples
                vec[base + qt + c * qt1] -= 1
        out.append((2 * qt, vec))
    return out


def _two_power_times_prime_top_vectors(
    n: int, q: int, k: int
) -> tuple[list[tuple[int, list[int]]], list[tuple[int, list[int]]]]:
    """Conditions for d = 2^t q, 1 <= t <= k, inside n = 2^k q.

    Returns (corrected, printed).  The printed form contains an extra sum
    over offsets 2^(t-1) q + c 2^t which re-enumerates, modulo the period,
    the same index classes as its two odd-multiple sums, so those
    coefficients come out doubled; the corrected form counts each class
    once.
    """
    corrected = []
    printed = []
    for t in range(1, k + 1):
        tp, tp1 = 2**t, 2 ** (t - 1)
        vec = [0] * n
        vec_p = [0] * n
        for j in range(2 ** (k - t)):
            base = tp * q * j
            vec[base] += q - 1
            for c in range(1, 2 * q, 2):
                if c != q:
                    vec[base + c * tp1] += 1
            vec[base + tp1 * q] -= q - 1
            for c in range(1, q):
                vec[base + c * tp] -= 1

            vec_p[base] += q - 1
            for c in range(1, q):
                vec_p[(base + tp1 * q + c * tp) % n] += 1
            for c in range(1, q - 1, 2):
                vec_p[(base + c * tp1) % n] += 1
            for c in range(q + 2, 2 * q, 2):
                vec_p[(base + c * tp1) % n] += 1
            vec_p[(base + tp1 * q) % n] -= q - 1
            for c in range(1, q):
                vec_p[(base + c * tp) % n] -= 1
        corrected.append((tp * q, vec))
        printed.append((tp * q, vec_p))
    return corrected, printed


def _twice_two_primes_vectors(n: int, q: int, r: int) -> list[tuple[int, list[int]]]:
    """All non-trivial divisor conditions for n = 2qr (q < r odd primes)."""
    out: list[tuple[int, list[int]]] = []
    out.append((2, _parity_vector(n)))
    out.append((q, _prime_vector(n, q, stride=1, blocks=2 * r)))
    out.append((r, _prime_vector(n, r, stride=1, blocks=2 * q)))

    # d = 2q: even non-multiples of q, plus (q-1) times the odd multiples,
    # balanced against odd non-multiples and (q-1) times the even multiples.
    for s, other in ((q, r), (r, q)):
        vec = [0] * n
        for a in range(1, s * other):
            if a % s != 0:
                vec[2 * a] += 1
        for b in range(other):
            vec[(2 * b + 1) * s] += s - 1
        for a in range(s * other):
            if (2 * a + 1) % s != 0:
                vec[2 * a + 1] -= 1
        for b in range(other):
            vec[2 * b * s] -= s - 1
        out.append((2 * s, vec))

    # d = qr
    vec = [0] * n
    vec[0] += (q - 1) * (r - 1)
    vec[q * r] += (q - 1) * (r - 1)
    for i in range(1, 2 * q * r):
        if i % q != 0 and i % r != 0:
            vec[i] += 1
    for j in range(1, 2 * r):
        if j != r:
            vec[j * q] -= q - 1
    for j in range(1, 2 * q):
        if j != q:
            vec[j * r] -= r - 1
    out.append((q * r, vec))

    # d = 2qr
    vec = [0] * n
    for j in range(r):
        if j != (r - 1) // 2:
            vec[(2 * j + 1) * q] += q - 1
    for j in range(q):
        if j != (q - 1) // 2:
            vec[(2 * j + 1) * r] += r - 1
    vec[0] += (q - 1) * (r - 1)
    for i in range(1, q * r):
        if i % q != 0 and i % r != 0:
            vec[2 * i] += 1
    for j in range(1, r):
        vec[2 * j * q] -= q - 1
    for j in range(1, q):
        vec[2 * j * r] -= r - 1
    vec[q * r] -= (q - 1) * (r - 1)
    for i in range(q * r):
        odd = 2 * i + 1
        if odd % q != 0 and odd % r != 0:
            vec[odd] -= 1
    out.append((2 * q * r, vec))
    return out


def _template_shape(n: int):
    """Classify n into one of the supported template shapes, or None."""
    if n < 2:
        return None
    if is_prime(n):
        return ("prime", n)
    pp = factorize(n).prime_powers
    if len(pp) == 1:
        p, k = pp[0]
        return ("two_power", k) if p == 2 else ("odd_prime_power", p, k)
    if len(pp) == 2 and pp[0][0] == 2 and pp[0][1] == 1 and pp[1][1] == 1:
        return ("twice_prime", pp[1][0])
    if len(pp) == 2 and pp[0][0] == 2 and pp[0][1] == 1:
        return ("twice_prime_power", pp[1][0], pp[1][1])
    if len(pp) == 2 and pp[0][0] == 2 and pp[1][1] == 1:
        return ("two_power_times_prime", pp[1][0], pp[0][1])
    if (
        len(pp) == 3
        and pp[0] == (2, 1)
        and pp[1][1] == 1
        and pp[2][1] == 1
    ):
        return ("twice_two_primes", pp[1][0], pp[2][0])
    return None


def _build_templates(n: int) -> Optional[tuple[list[tuple[int, list[int]]], list[TemplateDeviation]]]:
    shape = _template_shape(n)
    if shape is None:
        return None
    kind = shape[0]
    pairs: list[tuple[int, list[int]]] = [(1, _all_ones(n))]
    deviations: list[TemplateDeviation] = []

    if kind == "prime":
        pairs.append((n, _prime_vector(n, n)))
    elif kind == "odd_prime_power":
        _, q, k = shape
        pairs.extend(_odd_prime_power_vectors(n, q, k, length_blocks=1))
    elif kind == "two_power":
        _, k = shape
        pairs.extend(_two_power_vectors(n, k, length_blocks=1))
    elif kind == "twice_prime":
        _, q = shape
        pairs.append((2, _parity_vector(n)))
        pairs.append((q, _prime_vector(n, q, stride=1, blocks=2)))
        corrected, printed = _twice_prime_top_condition(n, q)
        pairs.append((2 * q, corrected))
        deviations.append(
            TemplateDeviation(
                n=n,
                d=2 * q,
                printed=tuple(printed),
                corrected=tuple(corrected),
                first_difference=_first_difference(printed, corrected),
                note=(
                    "the printed right-hand sums over the odd indices stop at "
                    f"index {2 * q - 3} and never reach index {2 * q - 1}; the "
                    "corrected form includes it"
                ),
            )
        )
    elif kind == "twice_prime_power":
        _, q, k = shape
        pairs.append((2, _parity_vector(n)))
        pairs.extend(_odd_prime_power_vectors(n, q, k, length_blocks=2))
        pairs.extend(_twice_prime_power_top_vectors(n, q, k))
    elif kind == "two_power_times_prime":
        _, q, k = shape
        pairs.append((q, _prime_vector(n, q, stride=1, blocks=2**k)))
        pairs.extend(_two_power_vectors(n, k, length_blocks=q))
        corrected, printed = _two_power_times_prime_top_vectors(n, q, k)
        pairs.extend(corrected)
        for (d, vec_c), (_, vec_p) in zip(corrected, printed):
            deviations.append(
                TemplateDeviation(
                    n=n,
                    d=d,
                    printed=tuple(vec_p),
                    corrected=tuple(vec_c),
                    first_difference=_first_difference(vec_p, vec_c),
                    note=(
                        "the printed form has an extra sum over offsets "
                        "2^(t-1) q + c 2^t that re-enumerates the odd-multiple "
                        "index classes, doubling those coefficients; the "
                        "corrected form counts each class once"
                    ),
                )
            )
    elif kind == "twice_two_primes":
        _, q, r = shape
        pairs.extend(_twice_two_primes_vectors(n, q, r))
    else:  # pragma: no cover - exhaustive above
        raise InternalInconsistencyError(f"unhandled template shape {kind}")

    pairs.sort(key=lambda item: item[0])
    return pairs, deviations


def template_conditions(n: int) -> Optional[list[DivisorCondition]]:
    """Hand-expanded condition catalog for supported shapes of n.

    Supported shapes: prime, q^k, 2^k, 2q, 2q^k, 2^k q, and 2qr with q < r
    odd primes.  Returns None for any other n.  Vectors are left-hand side
    minus right-hand side of each summation identity, in the identity's own
    (content-reduced) scale, so they may differ from the generic Ramanujan
    coefficients by a positive constant factor.
    """
    built = _build_templates(n)
    if built is None:
        return None
    pairs, _ = built
    return [DivisorCondition(n, d, tuple(vec)) for d, vec in pairs]


def template_deviations(n: int) -> list[TemplateDeviation]:
    """Printed-form corrections applied while building the templates for n."""
    built = _build_templates(n)
    if built is None:
        return []
    _, deviations = built
    return list(deviations)


def _content_normalize(vec: tuple[int, ...]) -> tuple[int, ...]:
    g = 0
    for c in vec:
        g = gcd(g, abs(c))
    if g == 0:
        return vec
    out = [c // g for c in vec]
    for c in out:
        if c != 0:
            if c < 0:
                out = [-x for x in out]
            break
    return tuple(out)


def compare_templates_to_generic(n: int) -> Optional[TemplateComparison]:
    """Check each template vector against the Ramanujan-sum generator.

    Vectors are compared after content normalization (divide by the gcd of
    the absolute coefficients, then fix the sign of the first nonzero
    entry), which makes the comparison independent of the overall scale and
    of which side of the identity each term sits on.
    """
    built = _build_templates(n)
    if built is None:
        return None
    pairs, deviations = built
    generic = {cond.d: cond.coeffs for cond in generate_conditions(n)}
    if sorted(d for d, _ in pairs) != sorted(generic):
        raise InternalInconsistencyError(
            f"template catalog for n={n} does not cover the divisors of n"
        )
    mismatches = []
    for d, vec in pairs:
        lhs = _content_normalize(tuple(vec))
        rhs = _content_normalize(generic[d])
        if lhs != rhs:
            mismatches.append((d, _first_difference(list(lhs), list(rhs))))
    return TemplateComparison(
        n=n,
        matches=not mismatches,
        mismatches=tuple(mismatches),
        deviations=tuple(deviations),
    )


def templates_match_generic(n: int) -> bool:
    """True iff every template for n matches its generic condition."""
    comparison = compare_templates_to_generic(n)
    if comparison is None:
        raise InputError(f"no template catalog covers n={n}")
    return comparison.matches
