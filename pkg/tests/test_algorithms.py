from __future__ import annotations

import pytest
from hypothesis import given, settings, strategies as st

from macaulification import (
    DefectError,
    HilbertBurchMatrix,
    Profile,
    ValidationError,
    algorithm_one,
    algorithm_one_table,
    algorithm_two,
    apply_bdl_profile,
    check_numerically_acm,
    cross_check,
    deficit,
    hilbert_burch_witness,
    hvector_from_profile,
    is_o_sequence_codim2,
    minimal_profile,
    numerically_equivalent,
    profile_from_table,
    random_instance,
)
from macaulification import fixtures


def _profile(name):
    return profile_from_table(fixtures.table(name))


def test_verdicts():
    v = check_numerically_acm(_profile("ci33_union"))
    assert not v.numerically_acm and not any(v.criteria().values())
    v = check_numerically_acm(_profile("line_cubic_acm"))
    assert v.numerically_acm and all(v.criteria().values())
    v = check_numerically_acm(Profile((4,), (2, 2)))
    assert v.witness == HilbertBurchMatrix((2,), (2,))


def test_hypothesis_enforced():
    with pytest.raises(ValidationError):
        check_numerically_acm(Profile((5, 1), (2, 2, 2)))


def test_witnesses():
    assert hilbert_burch_witness(Profile((4,), (2, 2))).minors() == [(0, 2), (2, 0)]
    cubic = hilbert_burch_witness(Profile((3, 3), (2, 2, 2)))
    assert cubic.shape == (2, 3)
    assert set(cubic.diagonal + cubic.superdiagonal) == {1}
    out = algorithm_one(_profile("ci33_union")).final
    w = hilbert_burch_witness(out)
    assert w.shape == (3, 4)
    assert w.diagonal == (3, 3, 3)
    assert w.hvector() == (1, 2, 3, 4, 5, 6, 7, 8, 9, 6, 3)
    with pytest.raises(ValidationError):
        hilbert_burch_witness(_profile("ci33_union"))


@pytest.mark.parametrize("name", ["ci33_union", "three_components", "eleven_points"])
def test_algorithm_one_fixtures(name):
    fx = fixtures.get(name)
    run = algorithm_one_table(fixtures.table(name))
    assert [tuple(s) for s in run.steps] == list(fx.alg_one)
    if fx.final_hvector:
        assert hvector_from_profile(run.final) == fx.final_hvector
    if fx.final_diagram:
        assert numerically_equivalent(run.final_table, fixtures.table(name, final=True))


def test_algorithm_one_four_quartics():
    fx = fixtures.get("four_quartics")
    run = algorithm_one_table(fixtures.table("four_quartics"))
    assert len(run.steps) == fx.extra["num_links"]
    assert hvector_from_profile(run.final) == fx.final_hvector
    assert numerically_equivalent(run.final_table, fixtures.table("four_quartics", final=True))


@pytest.mark.parametrize("name", ["ci33_union", "line_cubic_linked", "three_components"])
def test_algorithm_two_fixtures(name):
    fx = fixtures.get(name)
    run = algorithm_two(fx.hvector)
    assert tuple(run.steps.degrees) == fx.alg_two_degrees
    if fx.alg_two_trace:
        assert tuple(run.trace) == fx.alg_two_trace
    assert len(run.steps) == deficit(fx.hvector)


def test_acm_input_untouched():
    run = algorithm_two(fixtures.get("line_cubic_linked").final_hvector)
    assert len(run.steps) == 0
    assert algorithm_one(_profile("line_cubic_acm")).steps.total_height == 0


def test_cross_check_fixtures():
    c = cross_check(_profile("ci33_union"))
    assert c.deficit == 3 == c.one.steps.total_height == len(c.two.steps)
    c = cross_check(_profile("three_components"))
    assert c.deficit == 9 and c.final_hvector == c.two.final


def test_minimal_profile_examples():
    assert minimal_profile((1, 2, 3, 4, 5, 6, 7, 8, 9, 6, 3)) == Profile((12, 12, 12), (9, 9, 9, 9))
    assert minimal_profile((1, 2, -1)) == Profile((3, 3, 3, 3), (4, 2, 2, 2, 2))


hvectors = st.builds(
    lambda alpha, tail: tuple(range(1, alpha + 1)) + tuple(tail),
    st.integers(2, 7),
    st.lists(st.integers(-4, 9), max_size=8),
).filter(lambda h: h[-1] != 0)


@settings(max_examples=200, deadline=None)
@given(hvectors)
def test_minimal_profile_round_trip(h):
    assert hvector_from_profile(minimal_profile(h)) == h


def test_random_instance_deterministic():
    assert random_instance(0) == random_instance(0)
    assert random_instance(7, max_initial=4, max_tail=3) == random_instance(7, max_initial=4, max_tail=3)


@settings(max_examples=150, deadline=None)
@given(st.integers(0, 10**9))
def test_cross_check_random(seed):
    p = random_instance(seed)
    c = cross_check(p)
    assert is_o_sequence_codim2(c.final_hvector)
    assert check_numerically_acm(c.one.final).numerically_acm


@settings(max_examples=100, deadline=None)
@given(st.integers(0, 10**9), st.integers(0, 5), st.integers(1, 3))
def test_acm_closed_under_links(seed, offset, a):
    q = algorithm_one(random_instance(seed)).final
    nxt = apply_bdl_profile(q, (q.initial_degree() + offset, a))
    assert check_numerically_acm(nxt).numerically_acm


def test_defect_is_raised_on_bad_witness(monkeypatch):
    import macaulification.algorithms as alg

    monkeypatch.setattr(alg.HilbertBurchMatrix, "hvector", lambda self: (1,))
    with pytest.raises(DefectError):
        check_numerically_acm(Profile((4,), (2, 2)))
