from __future__ import annotations

import random

import pytest
from hypothesis import given, settings, strategies as st

from macaulification import (
    BdlSequence,
    CanonicalSequence,
    ValidationError,
    algorithm_one,
    apply_bdl_hvector,
    apply_sequence,
    expand_sequence,
    hvector_from_profile,
    initial_degree,
    initial_degrees,
    normalize,
    normalize_with_table,
    profile_from_table,
    random_instance,
    sequences_equivalent,
    swap_adjacent,
)
from macaulification import fixtures

THREE = fixtures.get("three_components")


def test_expand():
    assert expand_sequence([(19, 2)]) == BdlSequence([(19, 1), (19, 1)])
    assert expand_sequence([(7, 1)]) == BdlSequence([(7, 1)])
    steps = algorithm_one(profile_from_table(fixtures.table("three_components"))).steps
    assert tuple(expand_sequence(steps, THREE.hvector).degrees) == THREE.extra["swap_table"][0]


def test_swap_rule():
    seq = BdlSequence([(11, 1), (19, 1), (21, 1)])
    assert swap_adjacent(seq, 1, 12).degrees == [11, 20, 20]
    with pytest.raises(ValidationError):
        swap_adjacent(seq, 1, 21)
    with pytest.raises(ValidationError):
        swap_adjacent(BdlSequence([(3, 2), (4, 1)]), 0, 1)
    with pytest.raises(ValidationError):
        swap_adjacent(seq, 2, 1)


def test_three_components_swap_table():
    steps = algorithm_one(profile_from_table(fixtures.table("three_components"))).steps
    canon, rows = normalize_with_table(steps, THREE.hvector)
    assert rows == list(THREE.extra["swap_table"])
    assert canon == CanonicalSequence(8, 0, THREE.alg_two_degrees)


def test_canonical_fixpoint():
    canon = CanonicalSequence(8, 0, THREE.alg_two_degrees)
    c2, rows = normalize_with_table(canon.steps(), THREE.hvector)
    assert c2 == canon and len(rows) == 1


def test_canonical_validation():
    with pytest.raises(ValidationError):
        CanonicalSequence(5, 0, (7, 7))
    with pytest.raises(ValidationError):
        CanonicalSequence(5, 0, (5, 8))
    with pytest.raises(ValidationError):
        normalize([(9, 1)], THREE.hvector, a=9)


def test_equivalence():
    h = THREE.hvector
    assert sequences_equivalent([(19, 2)], [(19, 1), (19, 1)], h)
    assert not sequences_equivalent([(11, 1)], [(12, 1)], h)
    steps = algorithm_one(profile_from_table(fixtures.table("three_components"))).steps
    assert sequences_equivalent(steps, normalize(steps, h).steps(), h)


def test_leading_block():
    h = (1, 2, 3, 4, 5, 6, 3, 0, -3, -2, -1)
    canon = normalize([(6, 1), (6, 1), (9, 1)], h)
    assert canon.a == 6 == initial_degree(h)
    assert canon.b == 2 and canon.gs == (9,) and canon.shift == 3


def _random_sequence(rng, h, length):
    steps = []
    for _ in range(length):
        d = rng.randint(initial_degree(h), initial_degree(h) + 5)
        steps.append((d, 1))
        h = apply_bdl_hvector(h, (d, 1))
    return steps


def _reachable(start, seq):
    """Every sequence reachable by allowed swaps in either direction."""
    first = tuple(d for d, _ in seq)
    seen = {first}
    todo = [first]
    while todo:
        cur = todo.pop()
        alphas = initial_degrees(start, [(d, 1) for d in cur])
        for k in range(len(cur) - 1):
            try:
                nxt = swap_adjacent([(d, 1) for d in cur], k, alphas[k], start)
            except ValidationError:
                continue
            key = tuple(nxt.degrees)
            if key not in seen:
                seen.add(key)
                todo.append(key)
    return seen


def _is_canonical(degrees, a):
    b = 0
    while b < len(degrees) and degrees[b] == a:
        b += 1
    rest = degrees[b:]
    return all(x < y for x, y in zip((a,) + rest, rest))


@settings(max_examples=60, deadline=None)
@given(st.integers(0, 10**6), st.integers(1, 5))
def test_all_rewrite_orders_agree(seed, length):
    rng = random.Random(seed)
    start = hvector_from_profile(random_instance(seed))
    seq = _random_sequence(rng, start, length)
    a = initial_degree(start)
    reach = _reachable(start, seq)
    target = apply_sequence(start, seq)
    assert all(apply_sequence(start, [(d, 1) for d in r]) == target for r in reach)
    canon = [r for r in reach if _is_canonical(r, a)]
    assert len(canon) == 1
    assert tuple(normalize(seq, start).steps().degrees) == canon[0]
