"""Basic double links ``J = G*I + (F)`` acting on numerical data.

A step of type ``(d, a)`` uses ``F`` in ``I`` of degree ``d`` and a general
form ``G`` of degree ``a`` (the height).  Only degrees matter here.
"""
from __future__ import annotations

from collections import Counter
from dataclasses import dataclass
from typing import Iterable, Iterator, NamedTuple, Sequence

from .betti import BettiTable, Profile, ensure_valid, remove_common_pairs, validate_profile
from .errors import ValidationError
from .hilbert import ci_hvector, hvector, initial_degree

__all__ = [
    "BdlStep",
    "BdlSequence",
    "apply_bdl_profile",
    "apply_bdl_hvector",
    "apply_bdl_table",
    "apply_sequence",
    "bdl_degree",
    "table_initial_degree",
]


class BdlStep(NamedTuple):
    d: int
    a: int = 1


@dataclass(frozen=True, init=False, repr=False)
class BdlSequence:
    steps: tuple[BdlStep, ...] = ()

    def __init__(self, steps: Iterable[Sequence[int]] = ()):
        object.__setattr__(self, "steps", tuple(_step(st) for st in steps))

    @property
    def total_height(self) -> int:
        return sum(st.a for st in self.steps)

    @property
    def degrees(self) -> list[int]:
        return [st.d for st in self.steps]

    def __iter__(self) -> Iterator[BdlStep]:
        return iter(self.steps)

    def __len__(self):
        return len(self.steps)

    def __getitem__(self, i):
        return self.steps[i]

    def __repr__(self):
        return f"BdlSequence({[tuple(st) for st in self.steps]})"


def _step(step) -> BdlStep:
    try:
        d, a = (int(x) for x in step)
    except (TypeError, ValueError):
        raise ValidationError("step is a pair of integers (d, a)", step) from None
    if d < 1 or a < 1:
        raise ValidationError("step degrees positive", (d, a))
    return BdlStep(d, a)


def apply_bdl_profile(p: Profile, step) -> Profile:
    """New twists: ``r + a`` plus ``d``; ``s + a`` plus ``d + a``."""
    validate_profile(p)
    d, a = _step(step)
    alpha = p.initial_degree()
    if d < alpha:
        raise ValidationError("d >= initial degree", (d, alpha))
    return Profile([x + a for x in p.s] + [d + a], [x + a for x in p.r] + [d])


def apply_bdl_hvector(h: Sequence[int], step) -> tuple[int, ...]:
    """``h'(t) = h(t - a) + h_CI(d, a)(t)``."""
    h = hvector(h)
    d, a = _step(step)
    alpha = initial_degree(h)
    if d < alpha:
        raise ValidationError("d >= initial degree", (d, alpha))
    ci = ci_hvector(d, a)
    out = [0] * max(len(h) + a, len(ci))
    for t, v in enumerate(h):
        out[t + a] += v
    for t, v in enumerate(ci):
        out[t] += v
    return hvector(out)


def table_initial_degree(t: BettiTable) -> int:
    """Initial degree of the ideal, read off the numerically reduced twists."""
    p = Profile([j for (i, j), m in t.entries.items() if i >= 2 and i % 2 == 0 for _ in range(m)],
                [j for (i, j), m in t.entries.items() if i % 2 == 1 for _ in range(m)])
    return min(remove_common_pairs(p).r)


def apply_bdl_table(t: BettiTable, step, f_is_minimal_generator: bool | None = None) -> BettiTable:
    """Resolution of the basic double link, shifted positions plus two new twists.

    With ``f_is_minimal_generator`` true, one copy of ``R(-d-a)`` cancels between
    positions 1 and 2; this needs a generator of degree ``d`` in ``t``.  The
    default ``None`` cancels exactly when such a generator exists.
    """
    ensure_valid(t)
    d, a = _step(step)
    alpha = table_initial_degree(t)
    if d < alpha:
        raise ValidationError("d >= initial degree", (d, alpha))
    has_generator = t[(1, d)] > 0
    if f_is_minimal_generator is None:
        f_is_minimal_generator = has_generator
    elif f_is_minimal_generator and not has_generator:
        raise ValidationError("F minimal generator needs a generator of degree d", d)
    entries: Counter = Counter({(0, 0): 1})
    for (i, j), m in t.entries.items():
        if i >= 1:
            entries[(i, j + a)] += m
    entries[(1, d)] += 1
    entries[(2, d + a)] += 1
    if f_is_minimal_generator:
        entries[(1, d + a)] -= 1
        entries[(2, d + a)] -= 1
    return BettiTable(entries, max(t.num_vars, 2))


def apply_sequence(h: Sequence[int], seq) -> tuple[tuple[int, ...], int]:
    """Fold ``apply_bdl_hvector`` over ``seq``; return the result and the total height."""
    seq = seq if isinstance(seq, BdlSequence) else BdlSequence(seq)
    h = hvector(h)
    for k, st in enumerate(seq):
        try:
            h = apply_bdl_hvector(h, st)
        except ValidationError as exc:
            raise ValidationError(exc.condition, {"step": k, "type": tuple(st), "detail": exc.detail}) from exc
    return h, seq.total_height


def bdl_degree(deg_x: int, step) -> int:
    d, a = _step(step)
    return a * d + deg_x
