"""Naive count, orbifold Euler data, inequality derivation, enumeration."""

import random
from fractions import Fraction

import pytest

from freecurves.combinatorics import (
    AlphaDomainError,
    EnumerationSizeError,
    FINAL_COEFFS_REFERENCE,
    ORBIFOLD_TABLE,
    SING_FIELDS,
    WeakCombinatorics,
    bmy_applicable,
    bmy_sides,
    derive_inequality,
    enumerate_admissible,
    hirzebruch_slack,
    lhs_type_coefficient,
    naive_count_residual,
    orbifold_euler,
)

HALF = Fraction(1, 2)


def test_residual_examples():
    assert naive_count_residual(WeakCombinatorics(1, 1, 1, n2=11)) == 0
    assert naive_count_residual(WeakCombinatorics(1, 1, 1)) == 22
    assert naive_count_residual(WeakCombinatorics(1, 1, 1, n2=5, t11=1)) == 0


def test_count_identity_random():
    rng = random.Random(2718)
    for _ in range(1000):
        d, k, l = rng.randint(1, 40), rng.randint(1, 40), rng.randint(1, 40)
        lhs = (
            d * (d - 1)
            + 4 * k * (k - 1)
            + 9 * l * (l - 1)
            + 4 * d * k
            + 6 * d * l
            + 12 * k * l
        )
        assert lhs == (d + 2 * k + 3 * l) ** 2 - d - 4 * k - 9 * l


def test_counts_must_be_sane():
    with pytest.raises(ValueError):
        WeakCombinatorics(0, 1, 1)
    with pytest.raises(ValueError):
        WeakCombinatorics(1, 1, 1, n2=-1)


def test_orbifold_values_at_half():
    assert orbifold_euler("A1", HALF) == Fraction(1, 4)
    assert orbifold_euler("A11", HALF) == Fraction(1, 24)
    assert orbifold_euler("D14", HALF) == Fraction(1, 96)
    assert orbifold_euler("A3", HALF) == Fraction(1, 8)
    assert orbifold_euler("A5", HALF) == Fraction(1, 12)
    assert orbifold_euler("A7", HALF) == Fraction(1, 16)
    assert orbifold_euler("D4", HALF) == Fraction(1, 16)


def test_orbifold_domains():
    with pytest.raises(AlphaDomainError):
        orbifold_euler("A3", Fraction(1, 4))
    with pytest.raises(AlphaDomainError):
        orbifold_euler("A11", Fraction(2, 3))
    with pytest.raises(AlphaDomainError):
        orbifold_euler("D4", 0)
    assert orbifold_euler("A1", 0) == 1
    assert orbifold_euler("A1", 1) == 0
    with pytest.raises(KeyError):
        orbifold_euler("A9", HALF)


def test_lhs_type_coefficients_at_half():
    expected = {
        "A1": Fraction(9, 4),
        "A3": Fraction(45, 8),
        "D4": Fraction(117, 16),
        "A5": Fraction(35, 4),
        "A7": Fraction(189, 16),
        "A11": Fraction(143, 8),
        "D14": Fraction(719, 32),
    }
    for tag, value in expected.items():
        assert lhs_type_coefficient(tag, HALF) == value


def test_bmy_sides_examples():
    w = WeakCombinatorics(1, 1, 1, n2=11)
    lhs, rhs = bmy_sides(w, HALF)
    assert lhs == Fraction(99, 4)
    assert rhs == 36
    assert bmy_sides(WeakCombinatorics(1, 1, 1, t5=1), HALF)[0] == Fraction(35, 4)
    assert bmy_sides(WeakCombinatorics(1, 1, 1, t11=1), HALF)[0] == Fraction(143, 8)
    assert bmy_applicable(w)


def test_bmy_hypothesis_flag():
    assert bmy_applicable(WeakCombinatorics(1, 1, 1))  # m = 6
    # m >= 6 always holds with d, k, l >= 1, so the flag is structural
    assert WeakCombinatorics(1, 1, 1).total_degree == 6


def test_hirzebruch_slack_examples():
    assert hirzebruch_slack(WeakCombinatorics(1, 1, 1, n2=11)) == 45
    assert hirzebruch_slack(WeakCombinatorics(1, 1, 1)) == 34
    assert hirzebruch_slack(
        WeakCombinatorics(1, 1, 1, n2=5, t11=1)
    ) == Fraction(55, 2)


def test_derivation_matches_reference_with_single_flag():
    report = derive_inequality()
    assert report.final_matches_reference
    assert report.final_coefficients == FINAL_COEFFS_REFERENCE
    assert report.intermediate_mismatches == ("t7",)
    assert report.intermediate_computed["t7"] == Fraction(189, 16)
    assert report.intermediate_reference["t7"] == Fraction(189, 4)
    assert report.final_coefficients["t7"] == Fraction(29, 4)


def test_derivation_at_other_alpha_stays_consistent():
    # the machinery accepts any admissible weight; at 25/48 every type domain
    # still contains alpha and the bound evaluates exactly
    alpha = Fraction(25, 48)
    for tag, entry in ORBIFOLD_TABLE.items():
        assert entry.contains(alpha), tag
    report = derive_inequality(alpha)
    assert set(report.final_coefficients) == {"d", "k", "l", *SING_FIELDS}


def test_enumeration_includes_expected_solutions():
    records = enumerate_admissible(1, 1, 1)
    by_counts = {
        tuple(getattr(r.combinatorics, n) for n in SING_FIELDS): r for r in records
    }
    general = by_counts[(11, 0, 0, 0, 0, 0, 0)]
    assert general.slack == 45 and general.passes
    deep = by_counts[(5, 0, 0, 0, 0, 1, 0)]
    assert deep.slack == Fraction(55, 2) and deep.passes
    assert all(
        naive_count_residual(r.combinatorics) == 0 for r in records
    )


def test_enumeration_snapshot_and_order():
    records = enumerate_admissible(1, 1, 1)
    assert len(records) == 62
    keys = [tuple(getattr(r.combinatorics, n) for n in SING_FIELDS) for r in records]
    assert keys == sorted(keys)
    # stability across runs
    again = enumerate_admissible(1, 1, 1)
    assert keys == [
        tuple(getattr(r.combinatorics, n) for n in SING_FIELDS) for r in again
    ]


def test_enumeration_slack_consistent_with_bmy():
    for r in enumerate_admissible(1, 1, 1):
        lhs, rhs = bmy_sides(r.combinatorics, HALF)
        assert 4 * (rhs - lhs) == r.slack


def test_enumeration_cap():
    with pytest.raises(EnumerationSizeError):
        enumerate_admissible(10, 10, 10, cap=200)
