from __future__ import annotations

import itertools

import pytest
from hypothesis import given, settings, strategies as st

from macaulification import (
    Profile,
    ValidationError,
    ci_hvector,
    deficit,
    difference,
    hvector_from_profile,
    initial_degree,
    is_o_sequence_codim2,
    is_o_sequence_macaulay,
    macaulay_bound,
    profile_from_table,
    random_instance,
)
from macaulification import fixtures
from macaulification.betti import BettiTable

from _oracles import hvector_by_binomials


def test_hvector_examples():
    assert hvector_from_profile(Profile((9, 9, 9, 9), (12, 6, 6, 6, 6))) == (1, 2, 3, 4, 5, 6, 3, 0, -3, -2, -1)
    assert hvector_from_profile(Profile((2,), (1, 1))) == (1,)
    assert hvector_from_profile(profile_from_table(fixtures.table("three_components"))) == fixtures.get("three_components").hvector


@pytest.mark.parametrize("name", sorted(fixtures.FIXTURES))
def test_hvector_matches_binomial_oracle(name):
    for final in (False, True):
        text = fixtures.get(name).final_diagram if final else fixtures.get(name).diagram
        if text is None:
            continue
        t = fixtures.table(name, final)
        assert hvector_from_profile(profile_from_table(t)) == hvector_by_binomials(t)


@settings(max_examples=80, deadline=None)
@given(st.integers(0, 10**6))
def test_hvector_oracle_on_random_profiles(seed):
    p = random_instance(seed)
    t = BettiTable.from_positions({1: p.r, 2: p.s})
    assert hvector_from_profile(p) == hvector_by_binomials(t)


def test_difference():
    assert difference((1, 3, 6, 10)) == [1, 2, 3, 4]
    assert difference((1,)) == [1]
    d = difference((1, 2, 3, 4, 5, 6, 7, 8, 8, 6, 5, 5, 3, 2, 1))
    assert d[9] == -2 and d[14] == -1


def test_o_sequence_examples():
    assert is_o_sequence_codim2((1, 2, 3, 4, 5, 6, 7, 8, 9, 6, 3))
    assert not is_o_sequence_codim2((1, 2, 3, 4, 5, 6, 3, 0, -3, -2, -1))
    assert not is_o_sequence_codim2((1, 2, 3, 4, 5, 6, 5, 5, 3, 4, 2, 0, -3, -2))


def test_macaulay_examples():
    assert is_o_sequence_macaulay((1, 2, 3, 4))
    assert not is_o_sequence_macaulay((1, 2, 1, 2))
    assert is_o_sequence_macaulay((1, 3, 6, 10, 15))
    assert macaulay_bound(1, 2) == 1
    assert macaulay_bound(3, 2) == 4


def test_codim2_agrees_with_macaulay_exhaustively():
    for length in range(1, 7):
        for tail in itertools.product(range(0, 6), repeat=length - 1):
            h = (1,) + tail
            if len(h) > 1 and h[1] > 2:
                continue
            if h[-1] == 0 and len(h) > 1:
                continue
            assert is_o_sequence_codim2(h) == is_o_sequence_macaulay(h), h


def test_initial_degree():
    assert initial_degree((1, 2, 3, 4, 5, 6, 3, 0, -3, -2, -1)) == 6
    assert initial_degree((1,)) == 1
    assert initial_degree((1, 1)) == 1


def test_deficit_examples():
    assert deficit(fixtures.get("three_components").hvector) == 9
    assert deficit((1, 2, 3, 4, 5, 6, 7, 8, 9, 6, 3)) == 0
    assert deficit((1, 2, 3, 4, 5, 6, 3, 0, -3, -2, -1)) == 3
    assert deficit(fixtures.get("line_cubic_linked").hvector) == 4


def test_ci_hvector():
    assert ci_hvector(12, 3) == (1, 2, 3, 3, 3, 3, 3, 3, 3, 3, 3, 3, 2, 1)
    assert ci_hvector(7, 1) == (1,) * 7
    assert ci_hvector(1, 1) == (1,)
    for d in range(1, 8):
        for a in range(1, 8):
            assert ci_hvector(d, a) == hvector_from_profile(Profile((d + a,), (d, a)))


def test_malformed_hvectors():
    with pytest.raises(ValidationError):
        deficit((2, 3))
    with pytest.raises(ValidationError):
        is_o_sequence_codim2((1, 3, 6))
