"""Graded Betti tables and the twist profiles extracted from them.

A table stores ``beta[(i, j)]``: the number of copies of ``R(-j)`` in
homological position ``i`` of a (not necessarily minimal) free resolution
of ``R/I``.  Everything is plain Python integers, so there is no overflow.
"""
from __future__ import annotations

from collections import Counter
from dataclasses import dataclass, field
from typing import Iterable, Mapping, NamedTuple

from .errors import ValidationError

__all__ = [
    "BettiTable",
    "Profile",
    "DiagonalReport",
    "Validation",
    "validate_table",
    "ensure_valid",
    "validate_profile",
    "profile_from_table",
    "remove_common_pairs",
    "diagonal_report",
    "numerical_reduction",
    "numerically_equivalent",
    "hilbert_alternating_sums",
]


@dataclass(frozen=True)
class BettiTable:
    """Multiplicities of twists in a graded free resolution of ``R/I``.

    ``entries`` maps ``(position, twist)`` to a positive multiplicity; zero
    multiplicities are dropped on construction.  ``num_vars`` is the number
    of ring variables (4 for P^3).
    """

    entries: Mapping[tuple[int, int], int]
    num_vars: int = 4

    def __post_init__(self):
        clean = {}
        for key, mult in dict(self.entries).items():
            i, j = (int(x) for x in key)
            mult = int(mult)
            if mult < 0:
                raise ValidationError("positive multiplicities", (i, j, mult))
            if mult:
                clean[(i, j)] = clean.get((i, j), 0) + mult
        object.__setattr__(self, "entries", dict(sorted(clean.items())))
        if int(self.num_vars) < 1:
            raise ValidationError("num_vars positive", self.num_vars)
        object.__setattr__(self, "num_vars", int(self.num_vars))

    @classmethod
    def from_positions(cls, positions: Mapping[int, Iterable[int]], num_vars: int = 4) -> "BettiTable":
        """Build from ``{position: iterable of twists}`` with repetition.

        Position 0 (the free module ``R``) is added automatically.
        """
        entries: Counter = Counter({(0, 0): 1})
        for i, twists in positions.items():
            for j in twists:
                entries[(i, j)] += 1
        return cls(entries, num_vars)

    def __getitem__(self, key: tuple[int, int]) -> int:
        return self.entries.get(key, 0)

    def __hash__(self):
        return hash((tuple(self.entries.items()), self.num_vars))

    def __eq__(self, other):
        if not isinstance(other, BettiTable):
            return NotImplemented
        return self.entries == other.entries and self.num_vars == other.num_vars

    @property
    def length(self) -> int:
        """Largest homological position with a nonzero entry."""
        return max(i for i, _ in self.entries) if self.entries else 0

    def twists(self, position: int) -> list[int]:
        """Twists at ``position`` with repetition, non-increasing."""
        out = []
        for (i, j), m in self.entries.items():
            if i == position:
                out.extend([j] * m)
        return sorted(out, reverse=True)

    def totals(self) -> list[int]:
        return [sum(m for (i, _), m in self.entries.items() if i == p) for p in range(self.length + 1)]

    def __repr__(self):
        body = ", ".join(f"{k}: {v}" for k, v in self.entries.items())
        return f"BettiTable({{{body}}}, num_vars={self.num_vars})"


@dataclass(frozen=True)
class Profile:
    """Twists at even (``s``) and odd (``r``) homological positions.

    Both tuples are kept sorted non-increasing.
    """

    s: tuple[int, ...]
    r: tuple[int, ...]

    def __post_init__(self):
        object.__setattr__(self, "s", tuple(sorted((int(x) for x in self.s), reverse=True)))
        object.__setattr__(self, "r", tuple(sorted((int(x) for x in self.r), reverse=True)))

    @property
    def nu(self) -> int:
        return len(self.r)

    def max_twist(self) -> int:
        return max(self.s + self.r)

    def initial_degree(self) -> int:
        """Smallest generator twist that survives pair removal."""
        return min(remove_common_pairs(self).r)


class Validation(NamedTuple):
    ok: bool
    condition: str | None = None
    detail: object = None

    def __bool__(self):
        return self.ok


@dataclass(frozen=True)
class DiagonalReport:
    """Main diagonal of the matrix ``(s_i - r_j)``, 1-based indices."""

    entries: tuple[tuple[int, int], ...]
    negatives: tuple[tuple[int, int], ...] = field(default=())


def _profile_problem(s: Iterable[int], r: Iterable[int]) -> Validation:
    s, r = list(s), list(r)
    bad = [x for x in s + r if x <= 0]
    if bad:
        return Validation(False, "positive twists", bad[0])
    if len(r) != len(s) + 1:
        return Validation(False, "rank: |r| = |s| + 1", (len(s), len(r)))
    if sum(r) != sum(s):
        return Validation(False, "degree: sum(r) = sum(s)", (sum(s), sum(r)))
    return Validation(True)


def validate_table(t: BettiTable) -> Validation:
    """Check the table invariants and the invariants of its profile.

    Returns the first violated condition; the result is falsy on failure.
    """
    if t[(0, 0)] != 1:
        return Validation(False, "beta(0,0) = 1", t[(0, 0)])
    for (i, j), m in t.entries.items():
        if i < 0 or j < 0:
            return Validation(False, "nonnegative indices", (i, j))
        if i == 0 and j != 0:
            return Validation(False, "position 0 is R only", (i, j, m))
        if i > t.num_vars:
            return Validation(False, "length bound: position <= num_vars", (i, j, m))
        if i >= 1 and j == 0:
            return Validation(False, "positive twists", (i, j, m))
    s = [j for (i, j), m in t.entries.items() if i >= 2 and i % 2 == 0 for _ in range(m)]
    r = [j for (i, j), m in t.entries.items() if i % 2 == 1 for _ in range(m)]
    return _profile_problem(s, r)


def ensure_valid(t: BettiTable) -> BettiTable:
    v = validate_table(t)
    if not v:
        raise ValidationError(v.condition, v.detail)
    return t


def validate_profile(p: Profile) -> Profile:
    v = _profile_problem(p.s, p.r)
    if not v:
        raise ValidationError(v.condition, v.detail)
    return p


def profile_from_table(t: BettiTable) -> Profile:
    ensure_valid(t)
    s, r = [], []
    for (i, j), m in t.entries.items():
        if i == 0:
            continue
        (s if i % 2 == 0 else r).extend([j] * m)
    return Profile(s, r)


def remove_common_pairs(p: Profile) -> Profile:
    """Cancel each value shared by ``s`` and ``r``, once per shared copy."""
    cs, cr = Counter(p.s), Counter(p.r)
    common = cs & cr
    return Profile(list((cs - common).elements()), list((cr - common).elements()))


def diagonal_report(p: Profile) -> DiagonalReport:
    """Diagonal values ``s_i - r_i`` and the negative ones, bottom-right first."""
    if set(p.s) & set(p.r):
        raise ValidationError("s and r disjoint (remove common pairs first)", sorted(set(p.s) & set(p.r)))
    entries = tuple((i + 1, si - ri) for i, (si, ri) in enumerate(zip(p.s, p.r)))
    # r is non-increasing, so walking the index downward gives non-decreasing r
    negatives = tuple((i, -v) for i, v in reversed(entries) if v < 0)
    return DiagonalReport(entries, negatives)


def _cancel_once(entries: dict) -> bool:
    for (i, j) in sorted(entries):
        if i == 0:
            continue
        partner = (i + 1, j)
        if entries.get(partner, 0) > 0:
            k = min(entries[(i, j)], entries[partner])
            for key in ((i, j), partner):
                entries[key] -= k
                if not entries[key]:
                    del entries[key]
            return True
    return False


def numerical_reduction(t: BettiTable) -> BettiTable:
    """Formally cancel equal twists in adjacent homological positions.

    Cancelation order: lowest position first, then lowest twist.
    """
    ensure_valid(t)
    entries = dict(t.entries)
    while _cancel_once(entries):
        pass
    return BettiTable(entries, t.num_vars)


def numerically_equivalent(t1: BettiTable, t2: BettiTable) -> bool:
    return numerical_reduction(t1) == numerical_reduction(t2)


def hilbert_alternating_sums(t: BettiTable) -> dict[int, int]:
    """``j -> sum_i (-1)^i beta(i, j)`` for every twist that occurs."""
    out: dict[int, int] = {}
    for (i, j), m in t.entries.items():
        out[j] = out.get(j, 0) + (-1) ** i * m
    return {j: v for j, v in sorted(out.items()) if v}
