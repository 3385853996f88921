"""h-vectors, O-sequence tests and the deficit.

h-vectors are tuples of ints ``(h_0, ..., h_e)`` with ``h_0 = 1`` and
``h_e != 0``.  Entries past ``e`` are zero.  Negative entries are allowed:
they arise whenever the input ideal is not Cohen-Macaulay of codimension two.
"""
from __future__ import annotations

from math import comb
from typing import Sequence

from .betti import Profile, validate_profile
from .errors import ValidationError

__all__ = [
    "trim",
    "hvector",
    "hvector_from_profile",
    "difference",
    "initial_degree",
    "is_o_sequence_codim2",
    "is_o_sequence_macaulay",
    "macaulay_bound",
    "deficit",
    "ci_hvector",
]


def trim(values: Sequence[int]) -> tuple[int, ...]:
    values = list(values)
    while values and values[-1] == 0:
        values.pop()
    return tuple(values)


def hvector(values: Sequence[int]) -> tuple[int, ...]:
    """Trim trailing zeros and check ``h_0 = 1``."""
    h = trim(int(v) for v in values)
    if not h or h[0] != 1:
        raise ValidationError("h_0 = 1", tuple(values))
    return h


def _at(h: Sequence[int], i: int) -> int:
    return h[i] if 0 <= i < len(h) else 0


def hvector_from_profile(p: Profile) -> tuple[int, ...]:
    """h-vector computed directly from the twists.

    ``h(k) = k + 1 - sum_{r_i <= k} (k - r_i + 1) + sum_{s_j <= k} (k - s_j + 1)``.
    Shared values of ``s`` and ``r`` cancel, so the profile need not be reduced.
    """
    validate_profile(p)
    horizon = p.max_twist() + 1
    values = []
    for k in range(horizon + 2):
        v = k + 1
        v -= sum(k - x + 1 for x in p.r if x <= k)
        v += sum(k - x + 1 for x in p.s if x <= k)
        values.append(v)
    if values[-1] or values[-2]:
        raise ValidationError("h-vector tail vanishes", values[-2:])
    return hvector(values)


def difference(hf: Sequence[int]) -> list[int]:
    """First difference, with ``Delta(0) = hf[0]``."""
    hf = list(hf)
    return [hf[0]] + [b - a for a, b in zip(hf, hf[1:])] if hf else []


def initial_degree(h: Sequence[int]) -> int:
    """Least ``i`` with ``h_i <= i``: the initial degree of the ideal."""
    i = 0
    while _at(h, i) > i:
        i += 1
    return i


def _check_h1(h: Sequence[int]) -> None:
    if _at(h, 1) > 2:
        raise ValidationError("h_1 <= 2 (no linear forms in the ideal)", _at(h, 1))


def is_o_sequence_codim2(h: Sequence[int]) -> bool:
    """O-sequence test for h-vectors with ``h_1 <= 2``.

    Valid sequences rise by exactly one up to the initial degree and are
    weakly decreasing afterwards.
    """
    _check_h1(h)
    if _at(h, 0) != 1:
        return False
    for i, v in enumerate(h):
        if v < 0 or v > i + 1:
            return False
        if v <= i and _at(h, i + 1) > v:
            return False
    return True


def _binomial_expansion(value: int, i: int) -> list[tuple[int, int]]:
    """The ``i``-binomial expansion of ``value`` as ``[(k_i, i), (k_{i-1}, i-1), ...]``."""
    terms = []
    while value > 0 and i > 0:
        k = i
        while comb(k + 1, i) <= value:
            k += 1
        terms.append((k, i))
        value -= comb(k, i)
        i -= 1
    return terms


def macaulay_bound(value: int, i: int) -> int:
    """Largest admissible value in degree ``i + 1`` after ``value`` in degree ``i``."""
    return sum(comb(k + 1, j + 1) for k, j in _binomial_expansion(value, i))


def is_o_sequence_macaulay(h: Sequence[int]) -> bool:
    """Macaulay's growth criterion, independent of the codimension-two shortcut."""
    h = list(h)
    if not h or h[0] != 1 or any(v < 0 for v in h):
        return False
    for i in range(1, len(h)):
        if _at(h, i + 1) > macaulay_bound(h[i], i):
            return False
    return True


def deficit(h: Sequence[int]) -> int:
    """Total positive growth at and after the initial degree.

    A terminal zero is appended, so trailing negative entries count.
    """
    _check_h1(h)
    a = list(h) + [0]
    start = initial_degree(h)
    total = sum(max(0, a[i + 1] - a[i]) for i in range(start, len(a) - 1))
    if (total == 0) != is_o_sequence_codim2(h):
        raise ValidationError("staircase prefix", tuple(h))
    return total


def ci_hvector(d: int, a: int) -> tuple[int, ...]:
    """h-vector of a complete intersection of type ``(d, a)``."""
    if d < 1 or a < 1:
        raise ValidationError("positive degrees", (d, a))
    m = min(d, a)
    return tuple(min(t + 1, m, d + a - 1 - t) for t in range(d + a - 1))
