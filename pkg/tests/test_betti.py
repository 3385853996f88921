from __future__ import annotations

import pytest
from hypothesis import given, settings, strategies as st

from macaulification import (
    BettiTable,
    Profile,
    ValidationError,
    diagonal_report,
    hilbert_alternating_sums,
    numerical_reduction,
    numerically_equivalent,
    profile_from_table,
    remove_common_pairs,
    validate_table,
)
from macaulification import fixtures

CI22 = BettiTable.from_positions({1: [2, 2], 2: [4]})


def test_fixture_tables_are_valid():
    for name in fixtures.FIXTURES:
        assert validate_table(fixtures.table(name)), name


def test_ci33_union_table():
    t = fixtures.table("ci33_union")
    assert t.entries == {(0, 0): 1, (1, 6): 4, (2, 9): 4, (3, 12): 1}


def test_zero_ideal_rejected():
    v = validate_table(BettiTable({(0, 0): 1}))
    assert not v and "|r| = |s| + 1" in v.condition


def test_changed_syzygy_breaks_degree_sum():
    t = fixtures.table("ci33_union")
    entries = dict(t.entries)
    entries[(2, 9)] = 3
    entries[(2, 8)] = 1
    v = validate_table(BettiTable(entries))
    assert not v and "sum" in v.condition


def test_structural_violations():
    assert not validate_table(BettiTable({(0, 0): 2, (1, 1): 1}))
    assert not validate_table(BettiTable({(0, 0): 1, (0, 3): 1, (1, 1): 1}))
    assert not validate_table(BettiTable({(0, 0): 1, (1, 1): 2, (2, 2): 1}, num_vars=1))
    with pytest.raises(ValidationError):
        BettiTable({(0, 0): 1, (1, 2): -1})


@pytest.mark.parametrize("name", ["ci33_union", "line_cubic_linked"])
def test_profiles_from_fixtures(name):
    fx = fixtures.get(name)
    p = profile_from_table(fixtures.table(name))
    assert p.s == fx.extra["s"]
    assert p.r == fx.extra["r"]


def test_koszul_profile():
    assert profile_from_table(CI22) == Profile((4,), (2, 2))


def test_three_components_pair_removal():
    fx = fixtures.get("three_components")
    raw = profile_from_table(fixtures.table("three_components"))
    assert (len(raw.s), len(raw.r)) == (26, 27)
    p = remove_common_pairs(raw)
    assert p.s == fx.extra["reduced_s"]
    assert p.r == fx.extra["reduced_r"]


def test_pair_removal_small():
    assert remove_common_pairs(Profile((5, 5, 3), (5, 4, 3, 1))) == Profile((5,), (4, 1))
    p = Profile((9, 9), (6, 6, 6))
    assert remove_common_pairs(p) == p


def test_diagonal_reports():
    p = remove_common_pairs(profile_from_table(fixtures.table("ci33_union")))
    rep = diagonal_report(p)
    assert rep.negatives == ((1, 3),)
    assert diagonal_report(Profile((4,), (2, 2))).negatives == ()
    q = remove_common_pairs(profile_from_table(fixtures.table("three_components")))
    assert sorted(d for _, d in diagonal_report(q).negatives) == [1, 1, 1, 2, 2, 2]
    with pytest.raises(ValidationError):
        diagonal_report(Profile((5,), (5, 3)))


def test_trivial_summand_cancels():
    padded = BettiTable.from_positions({1: [2, 2, 1], 2: [4, 1]})
    assert numerical_reduction(padded) == CI22
    assert numerical_reduction(CI22) == CI22
    assert numerically_equivalent(padded, CI22)


def test_input_and_output_not_equivalent():
    assert not numerically_equivalent(fixtures.table("ci33_union"), fixtures.table("ci33_union", final=True))


tables = st.builds(
    lambda gens, extra: BettiTable.from_positions({1: gens + extra, 2: [sum(gens)] + extra}),
    st.lists(st.integers(1, 6), min_size=2, max_size=2),
    st.lists(st.integers(1, 9), max_size=3),
)


@settings(max_examples=60, deadline=None)
@given(tables)
def test_reduction_idempotent_and_sum_preserving(t):
    red = numerical_reduction(t)
    assert numerical_reduction(red) == red
    assert hilbert_alternating_sums(red) == hilbert_alternating_sums(t)
    assert validate_table(red)
