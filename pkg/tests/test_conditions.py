"""Divisor conditions: screen soundness, decide pipeline, template catalog."""

from __future__ import annotations

import json
import random
from fractions import Fraction
from itertools import product

import pytest

from circa import (
    Certificate,
    InputError,
    ScreenOutcome,
    Verdict,
    classify_prime,
    compare_templates_to_generic,
    condition_value,
    cyclotomic,
    decide,
    det_bareiss,
    divisors,
    first_row,
    generate_conditions,
    is_singular_exact,
    ramanujan_sum,
    screen,
    template_conditions,
    template_deviations,
    templates_match_generic,
    totient,
)
from circa.polys import IntPolynomial


# --------------------------------------------------------------------------
# generic condition catalog
# --------------------------------------------------------------------------


def test_generate_conditions_worked_examples():
    conds = {c.d: c.coeffs for c in generate_conditions(6)}
    assert set(conds) == {1, 2, 3, 6}
    assert conds[1] == (1, 1, 1, 1, 1, 1)
    assert conds[2] == (1, -1, 1, -1, 1, -1)
    assert conds[3] == (2, -1, -1, 2, -1, -1)
    assert conds[6] == (2, 1, -1, -2, -1, 1)
    assert [c.d for c in generate_conditions(12)] == [1, 2, 3, 4, 6, 12]
    with pytest.raises(InputError):
        generate_conditions(0)


def test_condition_coefficients_are_periodic_ramanujan_values():
    for n in (1, 2, 8, 12, 18, 24):
        for cond in generate_conditions(n):
            assert cond.coeffs[0] == totient(cond.d)
            for j in range(n):
                assert cond.coeffs[j] == ramanujan_sum(cond.d, j % cond.d)


def test_condition_value_checks_length():
    cond = generate_conditions(4)[0]
    with pytest.raises(InputError):
        condition_value(cond, first_row([1, 2]))


# --------------------------------------------------------------------------
# screen
# --------------------------------------------------------------------------


def test_screen_worked_examples():
    sv = screen(first_row([2, 1, 1]))
    assert sv.outcome is ScreenOutcome.CERTIFIED_NONSINGULAR
    assert sv.vanishing == ()
    assert sv.values == {1: Fraction(4), 3: Fraction(2)}

    sv = screen(first_row([1, 1, 1]))
    assert sv.outcome is ScreenOutcome.UNKNOWN
    assert sv.vanishing == (3,)

    sv = screen(first_row([1, 2, 1, 2]))
    assert sv.vanishing == (4,)

    sv = screen(first_row([1, 2, 2, 1]))
    assert sv.vanishing == (2,)


def test_screen_is_incomplete_a_vanishing_condition_proves_nothing():
    # Row whose d=4 condition vanishes although the matrix is invertible:
    # the screen must answer UNKNOWN while the oracle says nonsingular.
    row = first_row([1, 1, 1, 2])
    sv = screen(row)
    assert sv.outcome is ScreenOutcome.UNKNOWN
    assert sv.vanishing == (4,)
    assert det_bareiss(row) == -5
    verdict, cert = decide(row)
    assert verdict is Verdict.NONSINGULAR
    assert cert.decided_by == "oracle"
    assert cert.determinant == -5


def test_screen_necessity_on_constructed_singular_rows():
    # Multiply the d-th cyclotomic polynomial by random polynomials and
    # reduce mod x^n - 1: the result is singular and its d-condition must
    # vanish.
    rng = random.Random(11)
    checked = 0
    for _ in range(120):
        n = rng.randint(2, 18)
        d = rng.choice(divisors(n))
        phi = cyclotomic(d)
        g_deg = n - phi.degree
        if g_deg < 0:
            continue
        g = IntPolynomial.of([rng.randint(-3, 3) for _ in range(g_deg + 1)])
        prod = phi * g
        coeffs = [0] * n
        for j, c in enumerate(prod.coefficients):
            coeffs[j % n] += c
        row = first_row(coeffs)
        sv = screen(row)
        values = dict(sv.values)
        assert values[d] == 0, (n, d, coeffs)
        assert det_bareiss(row) == 0
        checked += 1
    assert checked >= 100


# --------------------------------------------------------------------------
# decide
# --------------------------------------------------------------------------


def test_decide_worked_examples():
    verdict, cert = decide(first_row([1, -1]))
    assert verdict is Verdict.SINGULAR
    assert cert.witness_d == 1  # the row-sum condition witnesses x - 1 | f

    verdict, cert = decide(first_row([2, 1, 1]))
    assert verdict is Verdict.NONSINGULAR
    assert cert.decided_by == "screen"
    assert cert.witness_d is None and cert.determinant is None

    verdict, cert = decide(first_row([1, 1, 1]))
    assert verdict is Verdict.SINGULAR
    assert cert.witness_d == 3 and cert.determinant == 0

    verdict, cert = decide(first_row([1, 2, 2, 1]))
    assert verdict is Verdict.SINGULAR
    assert cert.witness_d == 2

    verdict, cert = decide(first_row([1, 2, 1, 2]))
    assert verdict is Verdict.SINGULAR
    assert cert.witness_d == 4


def test_decide_agrees_with_exact_oracle_on_random_rows():
    rng = random.Random(31337)
    for _ in range(250):
        n = rng.randint(1, 14)
        row = first_row([rng.randint(-2, 2) for _ in range(n)])
        verdict, cert = decide(row)
        singular, _ = is_singular_exact(row)
        assert (verdict is Verdict.SINGULAR) == singular
        assert cert.verdict is verdict
        assert set(cert.screen_values) == set(divisors(n))


def test_certificate_json_shape():
    _, cert = decide(first_row([1, 1, 1]))
    doc = cert.to_json_dict()
    assert list(doc) == ["n", "row", "screen", "verdict", "decided_by", "witness_d", "determinant"]
    assert doc["n"] == 3
    assert doc["row"] == ["1", "1", "1"]
    assert doc["screen"] == {"1": "3", "3": "0"}
    assert doc["verdict"] == "SINGULAR"
    assert doc["witness_d"] == 3
    assert doc["determinant"] == "0"
    json.dumps(doc)  # must be JSON-serializable

    _, cert = decide(first_row(["1/2", 1, 1]))
    doc = cert.to_json_dict()
    assert list(doc) == ["n", "row", "screen", "verdict", "decided_by"]
    assert doc["row"] == ["1/2", "1", "1"]
    assert doc["decided_by"] == "screen"


def test_certificate_is_auditable():
    # Recomputing each screen value from the stored row must reproduce the
    # certificate exactly.
    for entries in ([2, 1, 1], [1, 1, 1], [1, 1, 1, 2], ["1/2", "2/3", -1, 4]):
        _, cert = decide(first_row(entries))
        conds = {c.d: c for c in generate_conditions(cert.n)}
        for d, value in cert.screen_values.items():
            assert condition_value(conds[d], first_row(cert.row)) == value


# --------------------------------------------------------------------------
# prime-size complete classification
# --------------------------------------------------------------------------


def test_classify_prime_exhaustive_n3():
    for entries in product((-1, 0, 1, 2), repeat=3):
        row = first_row(entries)
        expected = Verdict.SINGULAR if det_bareiss(row) == 0 else Verdict.NONSINGULAR
        assert classify_prime(row) is expected, entries


def test_classify_prime_random_n5_n7():
    rng = random.Random(5150)
    for n in (5, 7):
        for _ in range(300):
            row = first_row([rng.randint(-2, 2) for _ in range(n)])
            expected = Verdict.SINGULAR if det_bareiss(row) == 0 else Verdict.NONSINGULAR
            assert classify_prime(row) is expected


def test_classify_prime_worked_examples():
    assert classify_prime(first_row([1, 1, 1, 1, 1])) is Verdict.SINGULAR  # all equal
    assert classify_prime(first_row([3, -1, -1, -1, 0])) is Verdict.SINGULAR  # zero row sum
    assert classify_prime(first_row([2, 1, 1, 1, 1])) is Verdict.NONSINGULAR


def test_classify_prime_rejects_composite_sizes():
    with pytest.raises(InputError):
        classify_prime(first_row([1, 2, 3, 4]))


# --------------------------------------------------------------------------
# template catalog
# --------------------------------------------------------------------------


def test_templates_cover_expected_shapes_and_reject_others():
    for n in (2, 3, 7, 4, 8, 16, 9, 27, 25, 6, 10, 14, 18, 50, 12, 20, 28, 30, 42, 66):
        conds = template_conditions(n)
        assert conds is not None, n
        assert [c.d for c in conds] == divisors(n)
    for n in (1, 15, 36, 60, 100, 105, 210):
        assert template_conditions(n) is None, n
        with pytest.raises(InputError):
            templates_match_generic(n)


def test_template_vectors_use_the_printed_scale():
    # Odd prime power n = 9: the top condition is printed at 1/3 of the
    # generic Ramanujan coefficients.
    conds = {c.d: c.coeffs for c in template_conditions(9)}
    assert conds[3] == (2, -1, -1, 2, -1, -1, 2, -1, -1)
    assert conds[9] == (2, 0, 0, -1, 0, 0, -1, 0, 0)
    generic = {c.d: c.coeffs for c in generate_conditions(9)}
    assert conds[3] == generic[3]
    assert tuple(3 * c for c in conds[9]) == generic[9]
    # Power of two n = 4: top condition printed at 1/2 scale.
    conds4 = {c.d: c.coeffs for c in template_conditions(4)}
    assert conds4[4] == (1, 0, -1, 0)
    assert conds4[2] == (1, -1, 1, -1)


def test_template_comparison_reports_no_mismatches():
    for n in (9, 27, 8, 16, 10, 14, 18, 50, 12, 20, 28, 30, 42, 66):
        comparison = compare_templates_to_generic(n)
        assert comparison is not None
        assert comparison.matches, (n, comparison.mismatches)
        assert comparison.mismatches == ()


def test_printed_form_deviations_twice_prime():
    # For n = 2q the printed top-condition enumeration stops short of index
    # 2q - 1; the recorded deviation pins exactly that.
    for n, q in ((10, 5), (14, 7)):
        devs = template_deviations(n)
        assert len(devs) == 1
        dev = devs[0]
        assert dev.d == n
        assert dev.first_difference == n - 1
        assert dev.corrected[n - 1] - dev.printed[n - 1] == -1
        assert dev.printed[: n - 1] == dev.corrected[: n - 1]
        # and the corrected form is the one that matches the generic catalog
        assert templates_match_generic(n)


def test_printed_form_deviations_two_power_times_prime():
    # For n = 2^k q the printed form double-counts the odd-multiple classes
    # via an extra overlapping sum; one deviation is recorded per divisor
    # 2^t q.
    expected = {
        12: {(6, 1), (12, 2)},
        20: {(10, 1), (20, 2)},
        28: {(14, 1), (28, 2)},
    }
    for n, pairs in expected.items():
        devs = template_deviations(n)
        assert {(d.d, d.first_difference) for d in devs} == pairs
        for dev in devs:
            assert dev.printed != dev.corrected
            # doubling: at the first differing index the printed value is
            # twice the corrected one
            i = dev.first_difference
            assert dev.printed[i] == 2 * dev.corrected[i]


def test_clean_shapes_record_no_deviations():
    for n in (2, 3, 4, 8, 9, 27, 18, 50, 30, 42, 66):
        assert template_deviations(n) == []


def test_template_conditions_annihilate_constructed_singular_rows():
    # A row built as a multiple of the d-th cyclotomic polynomial must zero
    # out the template condition for d too (the templates are equivalent to
    # the generic conditions).
    rng = random.Random(77)
    for n in (10, 12, 20, 30):
        for d in divisors(n):
            phi = cyclotomic(d)
            g = IntPolynomial.of([rng.randint(-2, 2) for _ in range(n - phi.degree + 1)])
            prod = phi * g
            coeffs = [0] * n
            for j, c in enumerate(prod.coefficients):
                coeffs[j % n] += c
            row = first_row(coeffs)
            cond = next(c for c in template_conditions(n) if c.d == d)
            assert condition_value(cond, row) == 0
