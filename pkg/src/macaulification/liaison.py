"""Rewriting sequences of basic double links up to numerical equivalence.

Two rules generate everything:

* a link of type ``(d, a)`` equals ``a`` links of type ``(d, 1)``;
* height-one links ``(x, 1), (y, 1)`` may be replaced by ``(y - 1, 1), (x + 1, 1)``
  unless ``y`` is the initial degree of the ideal the pair is applied to.

Writing a height-one sequence as ``c_k = g_k - k`` turns the second rule
into a transposition of ``c_k`` and ``c_{k+1}``; the canonical form is the
sorted ``c`` behind a (blocked) leading run at the initial degree.
"""
from __future__ import annotations

from dataclasses import dataclass
from typing import Sequence

from .bdl import BdlSequence, BdlStep, apply_bdl_hvector, apply_sequence
from .errors import DefectError, ValidationError
from .hilbert import hvector, initial_degree

__all__ = [
    "CanonicalSequence",
    "expand_sequence",
    "initial_degrees",
    "swap_adjacent",
    "normalize",
    "normalize_with_table",
    "sequences_equivalent",
]


@dataclass(frozen=True)
class CanonicalSequence:
    """``b`` links at the initial degree ``a``, then height-one links of degrees ``gs``."""

    a: int
    b: int
    gs: tuple[int, ...]

    def __post_init__(self):
        object.__setattr__(self, "gs", tuple(self.gs))
        if self.b < 0:
            raise ValidationError("b >= 0", self.b)
        if any(x >= y for x, y in zip((self.a,) + self.gs, self.gs)):
            raise ValidationError("a < g_2 < ... < g_r", (self.a, self.gs))

    @property
    def shift(self) -> int:
        return self.b + len(self.gs)

    def steps(self) -> BdlSequence:
        return BdlSequence([(self.a, 1)] * self.b + [(g, 1) for g in self.gs])


def _as_sequence(seq) -> BdlSequence:
    return seq if isinstance(seq, BdlSequence) else BdlSequence(seq)


def expand_sequence(seq, start: Sequence[int] | None = None) -> BdlSequence:
    """Replace every ``(d, a)`` by ``a`` consecutive ``(d, 1)``."""
    seq = _as_sequence(seq)
    out = BdlSequence([(st.d, 1) for st in seq for _ in range(st.a)])
    if start is not None and apply_sequence(start, out) != apply_sequence(start, seq):
        raise DefectError(f"expansion of {seq} changed the h-vector")
    return out


def initial_degrees(start: Sequence[int], seq) -> list[int]:
    """Initial degree of the ideal before each step, and after the last."""
    h = hvector(start)
    out = [initial_degree(h)]
    for st in _as_sequence(seq):
        h = apply_bdl_hvector(h, st)
        out.append(initial_degree(h))
    return out


def swap_adjacent(seq, i: int, a0: int, start: Sequence[int] | None = None) -> BdlSequence:
    """Rewrite steps ``i, i+1`` = ``(x, 1), (y, 1)`` as ``(y-1, 1), (x+1, 1)``.

    ``a0`` is the initial degree of the ideal the pair acts on.  With
    ``start`` given the full sequence is checked to give the same h-vector.
    """
    seq = _as_sequence(seq)
    if not 0 <= i < len(seq) - 1:
        raise ValidationError("pair index in range", i)
    first, second = seq[i], seq[i + 1]
    if first.a != 1 or second.a != 1:
        raise ValidationError("height-one pair", (tuple(first), tuple(second)))
    if second.d == a0:
        raise ValidationError("second degree differs from the initial degree", (second.d, a0))
    steps = list(seq)
    steps[i:i + 2] = [BdlStep(second.d - 1, 1), BdlStep(first.d + 1, 1)]
    out = BdlSequence(steps)
    if start is not None:
        try:
            same = apply_sequence(start, out) == apply_sequence(start, seq)
        except ValidationError as exc:
            raise ValidationError("rewritten sequence admissible", exc.detail) from exc
        if not same:
            raise DefectError(f"swap at {i} changed the h-vector of {seq}")
    return out


def _rewrite(seq: BdlSequence, start: tuple[int, ...]) -> list[BdlSequence]:
    rows = [seq]
    limit = len(seq) * (len(seq) - 1) // 2
    while True:
        alphas = initial_degrees(start, seq)
        degrees = seq.degrees
        for k in range(len(seq) - 1):
            if degrees[k + 1] <= degrees[k] and degrees[k + 1] != alphas[k]:
                seq = swap_adjacent(seq, k, alphas[k], start)
                rows.append(seq)
                break
        else:
            return rows
        if len(rows) - 1 > limit:
            raise DefectError(f"rewriting did not terminate within {limit} swaps")


def normalize_with_table(seq, start: Sequence[int], a: int | None = None):
    """Canonical form together with every intermediate sequence.

    Swaps are applied at the leftmost non-increasing adjacent pair that the
    rule allows.  Returns ``(CanonicalSequence, rows)`` where ``rows[0]`` is
    the expanded input and ``rows[-1]`` the canonical sequence.
    """
    start = hvector(start)
    alpha = initial_degree(start)
    if a is None:
        a = alpha
    elif a != alpha:
        raise ValidationError("a is the initial degree of the start", (a, alpha))
    expanded = expand_sequence(seq, start)
    rows = _rewrite(expanded, start)
    final = rows[-1].degrees
    b = 0
    while b < len(final) and final[b] == a:
        b += 1
    canon = CanonicalSequence(a, b, tuple(final[b:]))
    if apply_sequence(start, canon.steps()) != apply_sequence(start, seq):
        raise DefectError("canonical form changed the h-vector")
    return canon, [tuple(r.degrees) for r in rows]


def normalize(seq, start: Sequence[int], a: int | None = None) -> CanonicalSequence:
    return normalize_with_table(seq, start, a)[0]


def sequences_equivalent(s1, s2, start: Sequence[int]) -> bool:
    """Same resulting h-vector and same total height."""
    return apply_sequence(start, s1) == apply_sequence(start, s2)
