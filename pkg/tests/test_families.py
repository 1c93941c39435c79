"""Structured families: power-product matrices and zero/one circulants."""

from __future__ import annotations

import pytest

import math

from circa import (
    InputError,
    MailletSpec,
    is_prime,
    Tag,
    Verdict,
    decide,
    det_bareiss,
    four_q_plus_one_scan,
    half_prime_criterion,
    maillet_matrix,
    maillet_row,
    ones_count_criterion,
    power_sum_inequality_holds,
    primitive_elements,
    quarter_prime_criterion,
    quarter_prime_residue,
    render_tag_grid,
    tag_grid,
    threshold_inequality_holds,
    verify_permutation_similarity,
    zeroone_scan,
)
from circa.families import display_symbol


# --------------------------------------------------------------------------
# constructors
# --------------------------------------------------------------------------


def test_maillet_spec_validation():
    assert MailletSpec(5, 2).h == 2  # canonical generator
    assert MailletSpec(7, 2).h == 3
    assert MailletSpec(7, 2, h=5).h == 5
    with pytest.raises(InputError):
        MailletSpec(9, 2)
    with pytest.raises(InputError):
        MailletSpec(2, 2)
    with pytest.raises(InputError):
        MailletSpec(7, 0)
    with pytest.raises(InputError):
        MailletSpec(7, 2, h=2)  # 2 has order 3 mod 7
    with pytest.raises(InputError):
        MailletSpec(7, 2, h=7)


@pytest.mark.parametrize("m", [1, 2, 3])
def test_maillet_matrix_displayed_rows(m):
    a5 = maillet_matrix(MailletSpec(5, m))
    assert a5[0] == [1, 2**m, 3**m, 4**m]
    assert a5[1] == [3**m, 1, 4**m, 2**m]
    a7 = maillet_matrix(MailletSpec(7, m))
    assert a7[1] == [4**m, 1, 5**m, 2**m, 6**m, 3**m]
    a3 = maillet_matrix(MailletSpec(3, m))
    assert a3 == [[1, 2**m], [2**m, 1]]


@pytest.mark.parametrize("m", [1, 2, 3])
def test_maillet_row_displayed_examples(m):
    assert maillet_row(MailletSpec(5, m, h=2)).entries == (1, 2**m, 4**m, 3**m)
    assert maillet_row(MailletSpec(7, m, h=3)).entries == (
        1,
        3**m,
        2**m,
        6**m,
        4**m,
        5**m,
    )
    assert maillet_row(MailletSpec(3, m, h=2)).entries == (1, 2**m)


def test_permutation_similarity_all_generators_small_primes():
    for p in (3, 5, 7, 11, 13):
        for h in primitive_elements(p):
            for m in (1, 2, 3):
                assert verify_permutation_similarity(MailletSpec(p, m, h=h)), (p, m, h)
    with pytest.raises(InputError):
        verify_permutation_similarity(MailletSpec(53, 2))


def test_absolute_determinant_is_generator_independent():
    # All generator choices give circulants permutation similar to the same
    # power-product matrix, so |det| cannot depend on h.
    for p in (5, 7, 11, 13):
        for m in (1, 2, 3):
            dets = {abs(det_bareiss(maillet_row(MailletSpec(p, m, h=h)))) for h in primitive_elements(p)}
            assert len(dets) == 1, (p, m, dets)


# --------------------------------------------------------------------------
# tag criteria
# --------------------------------------------------------------------------


def test_threshold_inequality_examples():
    assert not threshold_inequality_holds(5, 3)
    assert threshold_inequality_holds(5, 4)
    assert not threshold_inequality_holds(7, 8)
    assert threshold_inequality_holds(7, 9)
    with pytest.raises(InputError):
        threshold_inequality_holds(4, 2)


def test_power_sum_inequality_examples():
    # The summed form is weaker than the threshold: it already holds at
    # (5, 3) where the threshold fails (4^3 = 64 > 1 + 8 + 27 = 36).
    assert power_sum_inequality_holds(5, 3)
    assert not power_sum_inequality_holds(5, 1)  # 4 is not > 1 + 2 + 3
    assert power_sum_inequality_holds(7, 9)


def test_threshold_implies_power_sum():
    for p in (5, 7, 11, 13, 17, 19, 23, 29, 31, 37, 41, 43, 47):
        for m in range(1, 21):
            if threshold_inequality_holds(p, m):
                assert power_sum_inequality_holds(p, m), (p, m)


def test_half_prime_criterion_examples():
    assert half_prime_criterion(7)
    assert half_prime_criterion(11)
    assert half_prime_criterion(23)
    assert half_prime_criterion(47)
    assert half_prime_criterion(59)
    assert half_prime_criterion(83)
    for p in (5, 13, 17, 19, 29, 31, 37, 41, 43):
        assert not half_prime_criterion(p), p


def test_quarter_prime_residue_and_criterion():
    assert quarter_prime_residue(13) == 8  # 2^3 mod 13
    assert quarter_prime_residue(29) == 12  # 2^7 mod 29
    assert quarter_prime_residue(53) == 30  # 2^13 mod 53
    assert quarter_prime_residue(17) is None  # q = 4 not prime
    assert quarter_prime_residue(41) is None  # q = 10 not prime
    assert quarter_prime_residue(7) is None

    assert quarter_prime_criterion(13, 3)
    assert quarter_prime_criterion(29, 5)
    assert not quarter_prime_criterion(13, 4)  # m even
    assert not quarter_prime_criterion(13, 1)  # m below 3
    assert not quarter_prime_criterion(53, 3)  # r = 30 = 2 mod 4
    assert not quarter_prime_criterion(17, 3)


# --------------------------------------------------------------------------
# tag grid
# --------------------------------------------------------------------------


def test_tag_grid_pinned_cells():
    grid = tag_grid(47, 14)
    assert grid.cells[(11, 5)] == {Tag.HALF_PRIME}
    assert grid.cells[(13, 5)] == {Tag.QUARTER_PRIME}
    assert grid.cells[(17, 5)] == frozenset()
    assert grid.cells[(5, 4)] == {Tag.POWER_THRESHOLD}
    assert grid.cells[(5, 3)] == frozenset()
    # Overlap: at (7, 9) both the threshold and the half-prime criterion
    # apply; the display symbol prefers the threshold diamond.
    assert grid.cells[(7, 9)] == {Tag.POWER_THRESHOLD, Tag.HALF_PRIME}
    assert display_symbol(grid.cells[(7, 9)]) == "⋄"
    assert display_symbol(grid.cells[(11, 5)]) == "★"
    assert display_symbol(grid.cells[(13, 5)]) == "★★"
    assert display_symbol(frozenset()) == ""


def test_tag_grid_validation_and_rendering():
    with pytest.raises(InputError):
        tag_grid(4, 14)
    with pytest.raises(InputError):
        tag_grid(47, 1)
    grid = tag_grid(13, 5)
    text = render_tag_grid(grid)
    lines = text.strip().split("\n")
    assert lines[0].split()[0] == "m\\p"
    assert len(lines) == 5  # header + m = 5,4,3,2
    md = render_tag_grid(grid, markdown=True)
    assert md.startswith("| m\\p |")
    assert "---" in md


# --------------------------------------------------------------------------
# end-to-end nonsingularity of the power-product family
# --------------------------------------------------------------------------


def test_half_prime_cells_decide_nonsingular_via_screen_alone():
    for p in (7, 11, 23):
        for m in (2, 3, 4):
            verdict, cert = decide(maillet_row(MailletSpec(p, m)))
            assert verdict is Verdict.NONSINGULAR
            assert cert.decided_by == "screen", (p, m)


def test_quarter_prime_cells_decide_nonsingular():
    for p in (13, 29):
        for m in (3, 5):
            verdict, _ = decide(maillet_row(MailletSpec(p, m)))
            assert verdict is Verdict.NONSINGULAR


def test_exponent_one_is_always_singular():
    for p in (5, 7, 11):
        row = maillet_row(MailletSpec(p, 1))
        assert det_bareiss(row) == 0
        verdict, cert = decide(row)
        assert verdict is Verdict.SINGULAR
        assert cert.witness_d is not None


# --------------------------------------------------------------------------
# residue scan
# --------------------------------------------------------------------------


def test_four_q_plus_one_scan_to_200():
    records = four_q_plus_one_scan(200)
    assert [(r.q, r.p) for r in records] == [
        (3, 13),
        (7, 29),
        (13, 53),
        (37, 149),
        (43, 173),
        (67, 269),
        (73, 293),
        (79, 317),
        (97, 389),
        (127, 509),
        (139, 557),
        (163, 653),
        (193, 773),
        (199, 797),
    ]
    qualifying = [(r.q, r.p) for r in records if r.qualifies]
    assert qualifying == [
        (3, 13),
        (7, 29),
        (37, 149),
        (43, 173),
        (127, 509),
        (163, 653),
        (193, 773),
    ]
    assert len(qualifying) == 7
    # The non-qualifying residues split 4 : 3 between r = 3 mod 4 and
    # r = 2 mod 4.
    assert [(r.q, r.p) for r in records if r.residue_mod_4 == 3] == [
        (67, 269),
        (79, 317),
        (97, 389),
        (199, 797),
    ]
    assert [(r.q, r.p) for r in records if r.residue_mod_4 == 2] == [
        (13, 53),
        (73, 293),
        (139, 557),
    ]
    # Every record is internally consistent.
    for rec in records:
        assert rec.p == 4 * rec.q + 1
        assert rec.residue == pow(2, rec.q, rec.p)
        assert rec.residue_mod_4 == rec.residue % 4
        assert rec.qualifies == (rec.residue_mod_4 in (0, 1))


def test_four_q_plus_one_scan_reports_computed_q_for_509():
    # The source listing shows the pair (207, 509); 207 is composite, and
    # the scan computes q = 127 for p = 509 (and the pair qualifies).
    records = {r.p: r for r in four_q_plus_one_scan(200)}
    rec = records[509]
    assert rec.q == 127
    assert rec.qualifies
    assert not is_prime(207)  # 207 = 9 * 23


# --------------------------------------------------------------------------
# zero/one circulants
# --------------------------------------------------------------------------


def test_ones_count_criterion_examples():
    assert ones_count_criterion(27, 2)
    assert ones_count_criterion(27, 25)
    assert not ones_count_criterion(27, 5)
    assert ones_count_criterion(9, 2)
    assert ones_count_criterion(9, 8)
    assert not ones_count_criterion(8, 2)  # p = 2: the band is m in {1, 7}
    assert ones_count_criterion(8, 7)
    assert ones_count_criterion(8, 1)
    assert not ones_count_criterion(9, 0)
    assert not ones_count_criterion(9, 9)  # n - m = 0 fails both branches
    with pytest.raises(InputError):
        ones_count_criterion(12, 3)
    with pytest.raises(InputError):
        ones_count_criterion(27, 28)


def test_zeroone_scan_exhaustive_n6():
    report = zeroone_scan(6, 3)
    assert report.mode == "exhaustive"
    assert report.predicate is None  # 6 is not a prime power
    assert report.classes_tested == 4
    assert report.arrangements_covered == 20  # C(6,3)
    # (0,1,2) is the third cyclotomic polynomial itself; (0,2,4) vanishes
    # on the primitive cube roots as well.
    assert report.singular_classes == ((0, 1, 2), (0, 2, 4))
    assert report.nonsingular_classes == 2
    assert report.cross_check_ok  # no predicate, nothing to contradict


def test_zeroone_scan_guaranteed_cells_find_no_singular():
    for n, m in ((9, 2), (9, 8), (8, 7), (8, 1), (16, 15)):
        report = zeroone_scan(n, m)
        assert report.predicate is True, (n, m)
        assert report.singular_classes == ()
        assert report.cross_check_ok
        # every arrangement was covered through its rotation class
        assert report.arrangements_covered == math.comb(n, m)


def test_zeroone_scan_outside_band_n8_m2():
    # For n = 8 the ones-count band is only m in {1, 7}; with m = 2 every
    # rotation class turns out singular (1 + x^k always has a 2^j-th root
    # of unity as a zero when n is a power of two).
    report = zeroone_scan(8, 2)
    assert report.predicate is False
    assert report.singular_classes == ((0, 1), (0, 2), (0, 3), (0, 4))
    assert report.nonsingular_classes == 0
    assert report.cross_check_ok


def test_zeroone_scan_finds_singular_outside_the_band():
    # n = 8, m = 4: the predicate is false and singular arrangements exist
    # (e.g. ones at {0,1,4,5} gives a row annihilated by the d = 4 condition).
    report = zeroone_scan(8, 4)
    assert report.predicate is False
    assert (0, 1, 4, 5) in report.singular_classes
    assert report.cross_check_ok


def test_zeroone_scan_sampling_is_seeded_and_deterministic():
    r1 = zeroone_scan(27, 2, samples=150, seed=7)
    r2 = zeroone_scan(27, 2, samples=150, seed=7)
    assert r1 == r2
    assert r1.mode == "sampled" and r1.draws == 150
    assert r1.predicate is True
    assert r1.singular_classes == ()
    assert r1.classes_tested <= 150


def test_zeroone_scan_threads_do_not_change_the_report():
    base = zeroone_scan(8, 4, threads=1)
    threaded = zeroone_scan(8, 4, threads=4)
    assert base == threaded


def test_zeroone_scan_validation():
    with pytest.raises(InputError):
        zeroone_scan(25, 26)
    with pytest.raises(InputError):
        zeroone_scan(24, 3)  # exhaustive beyond n = 20
    with pytest.raises(InputError):
        zeroone_scan(27, 2)  # needs sampling
