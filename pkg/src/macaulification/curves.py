"""Numerical characters and the smooth numerically ACM curves of the family L_n.

A curve is described by two h-vectors: its own (possibly with negative
entries) and that of its general hyperplane section, a zero-dimensional
scheme in P^2.  Basic double links act on both in the same way.
"""
from __future__ import annotations

from collections import Counter
from dataclasses import dataclass
from typing import NamedTuple, Sequence

from .bdl import BdlSequence, apply_sequence, bdl_degree
from .algorithms import algorithm_two
from .errors import DefectError, ValidationError
from .hilbert import hvector, is_o_sequence_codim2

__all__ = [
    "NumericalCharacter",
    "CurveData",
    "Condition",
    "SmoothabilityReport",
    "FamilyReport",
    "character_from_hvector",
    "hvector_from_character",
    "has_gaps",
    "is_decreasing_type",
    "curve_genus",
    "minimal_curve",
    "expected_character",
    "construct_smooth_nacm",
    "family_report",
    "smoothability_check",
    "gorenstein_bound",
]


@dataclass(frozen=True)
class NumericalCharacter:
    values: tuple[int, ...]

    def __post_init__(self):
        vals = tuple(int(v) for v in self.values)
        if not vals:
            raise ValidationError("non-empty character")
        if any(x < y for x, y in zip(vals, vals[1:])):
            raise ValidationError("character non-increasing", vals)
        object.__setattr__(self, "values", vals)

    @property
    def sigma(self) -> int:
        return len(self.values)

    def A(self, i: int) -> int:
        """Number of entries equal to ``i``."""
        return self.values.count(i)

    def __iter__(self):
        return iter(self.values)

    def __len__(self):
        return len(self.values)


@dataclass(frozen=True)
class CurveData:
    n: int
    degree: int
    genus: int
    hvector: tuple[int, ...]
    hyperplane_hvector: tuple[int, ...]
    module_degree: int
    shift: int

    def __post_init__(self):
        if sum(self.hyperplane_hvector) != self.degree:
            raise ValidationError("degree is the sum of the hyperplane h-vector",
                                  (self.degree, sum(self.hyperplane_hvector)))


def _hyperplane_sigma(h: tuple[int, ...]) -> int:
    return next(i for i in range(len(h) + 1) if (h[i] if i < len(h) else 0) < i + 1)


def _check_hyperplane(h: Sequence[int]) -> tuple[int, ...]:
    h = hvector(h)
    if not is_o_sequence_codim2(h):
        raise ValidationError("hyperplane h-vector is a codimension-two O-sequence", h)
    return h


def character_from_hvector(h: Sequence[int]) -> NumericalCharacter:
    """Each drop ``Δh(t) = -k`` contributes ``k`` copies of ``t``."""
    h = _check_hyperplane(h)
    ext = h + (0,)
    values = []
    for t in range(1, len(ext)):
        drop = ext[t - 1] - ext[t]
        values.extend([t] * max(drop, 0))
    c = NumericalCharacter(sorted(values, reverse=True))
    if c.sigma != _hyperplane_sigma(h):
        raise DefectError(f"character length {c.sigma} differs from the initial degree of {h}")
    return c


def hvector_from_character(c) -> tuple[int, ...]:
    """Integrate ``+1`` below ``sigma`` and ``-A_t`` from ``sigma`` on."""
    c = c if isinstance(c, NumericalCharacter) else NumericalCharacter(c)
    sigma = c.sigma
    if c.values[-1] < sigma:
        raise ValidationError("every entry at least sigma", (c.values, sigma))
    counts = Counter(c.values)
    h = list(range(1, sigma + 1))
    cur = sigma
    for t in range(sigma, max(c.values) + 1):
        cur -= counts[t]
        if cur < 0:
            raise ValidationError("integral stays nonnegative", (c.values, t))
        h.append(cur)
    return hvector(h)


def has_gaps(c) -> bool:
    vals = set(c.values if isinstance(c, NumericalCharacter) else c)
    return len(vals) != max(vals) - min(vals) + 1


def is_decreasing_type(h: Sequence[int]) -> bool:
    """Strictly decreasing from the first drop until it reaches zero."""
    h = _check_hyperplane(h)
    ext = h + (0,)
    first = next(t for t in range(1, len(ext)) if ext[t] < ext[t - 1])
    return all(ext[t] < ext[t - 1] for t in range(first, len(ext)))


def curve_genus(h: Sequence[int]) -> int:
    """Arithmetic genus of a curve in P^3 from its h-vector."""
    return 1 + sum((i - 1) * v for i, v in enumerate(h))


def _closed_form_genus(n: int) -> int:
    num = (2 * n - 3) * (2 * n - 1) * (2 * n + 1)
    g, rem = divmod(num, 3)
    if rem:
        raise DefectError(f"genus numerator {num} not divisible by 3")
    return g


def _check_n(n) -> int:
    if not isinstance(n, int) or n < 1:
        raise ValidationError("n >= 1", n)
    return n


def minimal_curve(n: int) -> CurveData:
    n = _check_n(n)
    h = tuple(range(1, 2 * n + 1)) + (-n,)
    hyper = tuple(range(1, 2 * n)) + (n,)
    degree = 2 * n * n
    genus = _closed_form_genus(n)
    if sum(h) != degree or curve_genus(h) != genus:
        raise DefectError(f"minimal curve data inconsistent at n={n}")
    return CurveData(n, degree, genus, h, hyper, 2 * n - 2, 0)


def expected_character(n: int, last_step: bool = True) -> NumericalCharacter:
    """Closed forms for C' and, with ``last_step`` false, for Y."""
    if last_step:
        vals = [3 * n + 2] * n + [3 * n + 1] * (n + 1) + [3 * n] * (n - 1)
    else:
        vals = [3 * n + 1] * n + [3 * n] * n + [3 * n - 1] * (n - 1)
    return NumericalCharacter(vals)


def _linked(base: CurveData, seq: BdlSequence) -> CurveData:
    h, height = apply_sequence(base.hvector, seq)
    hyper, _ = apply_sequence(base.hyperplane_hvector, seq)
    degree = base.degree
    for st in seq:
        degree = bdl_degree(degree, st)
    if degree != sum(h):
        raise DefectError(f"degree {degree} differs from the h-vector sum {sum(h)}")
    return CurveData(base.n, degree, curve_genus(h), h, hyper,
                     base.module_degree + height, base.shift + height)


class FamilyReport(NamedTuple):
    minimal: CurveData
    y_steps: BdlSequence
    y: CurveData
    y_character: NumericalCharacter
    steps: BdlSequence
    curve: CurveData
    character: NumericalCharacter


def family_report(n: int) -> FamilyReport:
    """Minimal curve, the intermediate curve Y, and the final curve C'."""
    n = _check_n(n)
    base = minimal_curve(n)
    y_steps = BdlSequence([(d, 1) for d in range(2 * n + 2, 3 * n + 2)])
    run = algorithm_two(base.hvector)
    if list(run.steps) != list(y_steps):
        raise DefectError(f"algorithm two on the minimal curve gave {run.steps}")
    y = _linked(base, y_steps)
    steps = BdlSequence(list(y_steps) + [(3 * n + 1, 1)])
    curve = _linked(base, steps)
    y_char = character_from_hvector(y.hyperplane_hvector)
    char = character_from_hvector(curve.hyperplane_hvector)
    if y_char != expected_character(n, last_step=False) or char != expected_character(n):
        raise DefectError(f"characters {y_char.values}, {char.values} disagree with the closed form")
    if 2 * curve.degree != 9 * n * n + 9 * n + 2 or char.sigma != 3 * n:
        raise DefectError(f"C' degree {curve.degree} or sigma {char.sigma} off at n={n}")
    if not is_o_sequence_codim2(curve.hvector) or not is_o_sequence_codim2(y.hvector):
        raise DefectError(f"linked curves at n={n} are not numerically ACM")
    return FamilyReport(base, y_steps, y, y_char, steps, curve, char)


def construct_smooth_nacm(n: int) -> tuple[BdlSequence, CurveData, NumericalCharacter]:
    rep = family_report(n)
    if not smoothability_check(rep.character, n):
        raise DefectError(f"C' character fails the smoothability conditions at n={n}")
    return rep.steps, rep.curve, rep.character


class Condition(NamedTuple):
    name: str
    ok: bool


class SmoothabilityReport(NamedTuple):
    conditions: tuple[Condition, ...]

    @property
    def ok(self) -> bool:
        return all(c.ok for c in self.conditions)

    @property
    def failed(self) -> list[str]:
        return [c.name for c in self.conditions if not c.ok]

    def __bool__(self):
        return self.ok


def smoothability_check(c, n: int) -> SmoothabilityReport:
    """Sufficient conditions for a smooth maximal rank curve in L_n with character ``c``."""
    c = c if isinstance(c, NumericalCharacter) else NumericalCharacter(c)
    sigma = c.sigma
    a_next = c.A(sigma + 1)
    tail_empty = all(v <= sigma + 1 for v in c.values)
    return SmoothabilityReport((
        Condition("no gaps", not has_gaps(c)),
        Condition("n_(sigma-1) >= sigma", c.values[-1] >= sigma),
        Condition("sigma >= 2n-1", sigma >= 2 * n - 1),
        Condition("A_sigma >= n-1", c.A(sigma) >= n - 1),
        Condition("A_(sigma+1) >= n, and = n forces A_t = 0 beyond",
                  a_next >= n and (a_next != n or tail_empty)),
    ))


def gorenstein_bound(degree: int, regularity: int) -> int:
    if degree < 1 or regularity < 1:
        raise ValidationError("positive degree and regularity", (degree, regularity))
    return degree * regularity
