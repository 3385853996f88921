"""The two repair algorithms and the numerically-ACM verdict.

``algorithm_one`` works on twist profiles: it repairs the negative entries
of the diagonal of ``(s_i - r_j)`` one at a time, each with a single basic
double link whose height is the size of the entry.  ``algorithm_two`` works
on the h-vector alone and uses height-one links only, one per unit of
deficit.  Both end at the same h-vector.
"""
from __future__ import annotations

import random
from collections import Counter
from dataclasses import dataclass
from typing import NamedTuple, Sequence

from .bdl import BdlSequence, BdlStep, apply_bdl_hvector, apply_bdl_profile, apply_bdl_table
from .betti import (
    BettiTable,
    Profile,
    diagonal_report,
    profile_from_table,
    remove_common_pairs,
    validate_profile,
)
from .errors import DefectError, ValidationError
from .hilbert import deficit, hvector, hvector_from_profile, initial_degree, is_o_sequence_codim2

__all__ = [
    "AcmVerdict",
    "HilbertBurchMatrix",
    "AlgorithmRun",
    "TraceEntry",
    "CrossCheck",
    "check_numerically_acm",
    "hilbert_burch_witness",
    "algorithm_one",
    "algorithm_one_table",
    "algorithm_two",
    "cross_check",
    "minimal_profile",
    "random_instance",
]


@dataclass(frozen=True)
class HilbertBurchMatrix:
    """Bidiagonal monomial matrix; entry ``(i, i)`` is ``x0**diagonal[i]``,
    entry ``(i, i+1)`` is ``x1**superdiagonal[i]``, everything else is 0."""

    diagonal: tuple[int, ...]
    superdiagonal: tuple[int, ...]

    @property
    def shape(self) -> tuple[int, int]:
        return len(self.diagonal), len(self.diagonal) + 1

    def entry(self, i: int, j: int) -> tuple[int, int] | None:
        """Exponent pair ``(e0, e1)`` of entry ``(i, j)`` (0-based), ``None`` for zero."""
        if j == i:
            return (self.diagonal[i], 0)
        if j == i + 1:
            return (0, self.superdiagonal[i])
        return None

    def minors(self) -> list[tuple[int, int]]:
        """Maximal minors as exponent pairs; minor ``j`` omits column ``j``.

        Deleting column ``j`` leaves a block-triangular matrix whose
        determinant is the product of the diagonal entries above row ``j``
        and the superdiagonal entries from row ``j`` on.
        """
        rows = len(self.diagonal)
        return [(sum(self.diagonal[:j]), sum(self.superdiagonal[j:rows])) for j in range(rows + 1)]

    def implied_profile(self) -> Profile:
        """Twists of the resolution read off the matrix degrees.

        Each row is a homogeneous syzygy between consecutive minors, so both
        of its nonzero entries must give the same degree.
        """
        gens = [sum(m) for m in self.minors()]
        syz = []
        for i in range(len(self.diagonal)):
            left = self.diagonal[i] + gens[i]
            right = self.superdiagonal[i] + gens[i + 1]
            if left != right:
                raise DefectError(f"row {i} of the witness is not homogeneous: {left} != {right}")
            syz.append(left)
        return Profile(syz, gens)

    def hvector(self) -> tuple[int, ...]:
        """Hilbert function of ``K[x0, x1]`` modulo the minors, by counting monomials."""
        gens = self.minors()
        # past this degree every monomial is divisible by x0**sum(diag) or x1**sum(super)
        top = sum(self.diagonal) + sum(self.superdiagonal)
        values = []
        for t in range(top + 1):
            values.append(sum(1 for u in range(t + 1)
                              if not any(u >= gu and t - u >= gv for gu, gv in gens)))
        return hvector(values)


@dataclass(frozen=True)
class AcmVerdict:
    o_sequence: bool
    counting: bool
    diagonal: bool
    witness: HilbertBurchMatrix | None = None

    @property
    def numerically_acm(self) -> bool:
        return self.o_sequence

    def criteria(self) -> dict[str, bool]:
        return {"o_sequence": self.o_sequence, "counting": self.counting, "diagonal": self.diagonal}


class TraceEntry(NamedTuple):
    profile: Profile
    negatives: tuple[tuple[int, int], ...]
    step: BdlStep
    hvector: tuple[int, ...]


class AlgorithmRun(NamedTuple):
    steps: BdlSequence
    final: object
    trace: list
    final_table: BettiTable | None = None


class CrossCheck(NamedTuple):
    one: AlgorithmRun
    two: AlgorithmRun
    final_hvector: tuple[int, ...]
    deficit: int


def _check_hypothesis(p: Profile) -> None:
    if not p.s or not min(p.s) > min(p.r) >= 1:
        raise ValidationError("min(s) > min(r) >= 1 after pair removal", (p.s[-1:], p.r[-1:]))


def check_numerically_acm(p: Profile) -> AcmVerdict:
    """Evaluate the O-sequence, counting and diagonal criteria; they must agree."""
    validate_profile(p)
    p = remove_common_pairs(p)
    _check_hypothesis(p)
    o_seq = is_o_sequence_codim2(hvector_from_profile(p))
    counting = all(
        sum(1 for x in p.r if x <= k) > sum(1 for x in p.s if x <= k)
        for k in range(min(p.r), p.max_twist() + 1)
    )
    diag = all(si >= ri for si, ri in zip(p.s, p.r))
    if not o_seq == counting == diag:
        raise DefectError(f"criteria disagree on {p}: o_sequence={o_seq} counting={counting} diagonal={diag}")
    witness = _witness(p) if diag else None
    return AcmVerdict(o_seq, counting, diag, witness)


def _witness(p: Profile) -> HilbertBurchMatrix:
    m = HilbertBurchMatrix(
        tuple(p.s[i] - p.r[i] for i in range(len(p.s))),
        tuple(p.s[i] - p.r[i + 1] for i in range(len(p.s))),
    )
    if min(m.diagonal + m.superdiagonal) <= 0:
        raise DefectError(f"witness exponents not positive for {p}")
    if m.implied_profile() != p:
        raise DefectError(f"witness twists {m.implied_profile()} differ from {p}")
    if m.hvector() != hvector_from_profile(p):
        raise DefectError(f"witness h-vector {m.hvector()} differs from {hvector_from_profile(p)}")
    return m


def hilbert_burch_witness(p: Profile) -> HilbertBurchMatrix:
    """Monomial matrix whose maximal minors have resolution twists ``(s, r)``."""
    verdict = check_numerically_acm(p)
    if verdict.witness is None:
        raise ValidationError("numerically ACM profile required", p)
    return verdict.witness


def algorithm_one(p: Profile) -> AlgorithmRun:
    """Repair the negative diagonal entries, bottom-right first.

    Each iteration removes common pairs, takes the lowest negative diagonal
    entry ``s_i - r_i = -d`` and applies a link of type ``(r_i, d)``.  The
    next diagonal is the old one with that entry deleted.
    """
    validate_profile(p)
    current = remove_common_pairs(p)
    expected = len(diagonal_report(current).negatives)
    steps, trace = [], []
    while True:
        current = remove_common_pairs(current)
        report = diagonal_report(current)
        if not report.negatives:
            break
        index, height = report.negatives[0]
        step = BdlStep(current.r[index - 1], height)
        nxt = remove_common_pairs(apply_bdl_profile(current, step))
        kept = [v for i, v in report.entries if i != index]
        if [v for _, v in diagonal_report(nxt).entries] != kept:
            raise DefectError(f"step {step} did not delete diagonal entry {index} of {current}")
        trace.append(TraceEntry(current, report.negatives, step, hvector_from_profile(nxt)))
        steps.append(step)
        current = nxt
    if len(steps) != expected:
        raise DefectError(f"{len(steps)} steps for {expected} negative diagonal entries")
    if not check_numerically_acm(current).numerically_acm:
        raise DefectError(f"final profile {current} is not numerically ACM")
    return AlgorithmRun(BdlSequence(steps), current, trace)


def algorithm_one_table(t: BettiTable) -> AlgorithmRun:
    """``algorithm_one`` on the profile of ``t``, replaying the links on the table."""
    run = algorithm_one(profile_from_table(t))
    table = t
    for step in run.steps:
        table = apply_bdl_table(table, step)
    if remove_common_pairs(profile_from_table(table)) != run.final:
        raise DefectError("table replay disagrees with the profile run")
    return run._replace(final_table=table)


def _repair_index(h: Sequence[int]) -> int:
    a = list(h) + [0]
    for i in range(len(a) - 1):
        if a[i] <= i and a[i] < a[i + 1]:
            return i
    raise ValidationError("no repairable degree (h-vector outside the calculus)", tuple(h))


def algorithm_two(h: Sequence[int]) -> AlgorithmRun:
    """Height-one links of degree ``i + 2`` at the leftmost growth violation ``i``."""
    h = hvector(h)
    delta = deficit(h)
    steps, trace = [], []
    while not is_o_sequence_codim2(h):
        step = BdlStep(_repair_index(h) + 2, 1)
        h = apply_bdl_hvector(h, step)
        steps.append(step)
        trace.append(h)
    if len(steps) != delta:
        raise DefectError(f"{len(steps)} steps for deficit {delta}")
    degrees = [st.d for st in steps]
    if any(x >= y for x, y in zip(degrees, degrees[1:])):
        raise DefectError(f"degrees not strictly increasing: {degrees}")
    return AlgorithmRun(BdlSequence(steps), h, trace)


def cross_check(p: Profile) -> CrossCheck:
    """Run both algorithms on ``p`` and compare final h-vectors and heights."""
    one = algorithm_one(p)
    h0 = hvector_from_profile(p)
    two = algorithm_two(h0)
    h1 = hvector_from_profile(one.final)
    delta = deficit(h0)
    if h1 != two.final:
        raise DefectError(f"final h-vectors differ: {h1} vs {two.final}")
    if not one.steps.total_height == len(two.steps) == delta == two.steps.total_height:
        raise DefectError(
            f"heights {one.steps.total_height}, steps {len(two.steps)}, deficit {delta} disagree")
    return CrossCheck(one, two, h1, delta)


def minimal_profile(h: Sequence[int]) -> Profile:
    """Fewest twists reproducing ``h``: ``r`` where the first difference drops, ``s`` where it rises."""
    h = hvector(h)
    c = [h[0]] + [h[k] - h[k - 1] for k in range(1, len(h))] + [-h[-1], 0]
    r, s = [], []
    for k in range(1, len(c)):
        jump = c[k - 1] - c[k]
        (r if jump > 0 else s).extend([k] * abs(jump))
    return Profile(s, r)


# --- random instances -------------------------------------------------------

def _random_o_sequence(rng: random.Random, max_initial: int, max_tail: int) -> tuple[int, ...]:
    alpha = rng.randint(2, max_initial)
    h = list(range(1, alpha + 1))
    v = alpha
    for _ in range(rng.randint(1, max_tail)):
        v = rng.randint(max(0, v - 3), v)
        if v == 0:
            break
        h.append(v)
    return tuple(h)


def _random_hvector(rng: random.Random, max_initial: int, max_tail: int) -> tuple[int, ...]:
    """Staircase up to the initial degree, then an arbitrary integer tail."""
    alpha = rng.randint(2, max_initial)
    tail = [rng.randint(-3, alpha + 2) for _ in range(rng.randint(1, max_tail))]
    return hvector(list(range(1, alpha + 1)) + tail)


def _inverse_bdl(rng: random.Random, p: Profile) -> Profile | None:
    """Undo a random link: drop ``d`` from ``r`` and ``d + a`` from ``s``, shift down by ``a``."""
    options = [(d, x - d) for d in set(p.r) for x in set(p.s) if x > d]
    rng.shuffle(options)
    for d, a in options:
        cs, cr = Counter(p.s), Counter(p.r)
        cs[d + a] -= 1
        cr[d] -= 1
        s = [x - a for x in cs.elements()]
        r = [x - a for x in cr.elements()]
        if not s or min(s + r) < 1:
            continue
        q = Profile(s, r)
        if d >= q.initial_degree():
            return q
    return None


def _seed_fixtures() -> list[Profile]:
    from . import fixtures

    seeds = [profile_from_table(fixtures.table(name)) for name in ("ci33_union", "line_cubic_linked", "three_components")]
    seeds += [Profile((4,), (2, 2)), Profile((3, 3), (2, 2, 2))]
    seeds += [minimal_profile(tuple(range(1, 2 * n + 1)) + (-n,)) for n in (1, 2, 3)]
    return seeds


def _in_domain(p: Profile) -> bool:
    try:
        validate_profile(p)
        q = remove_common_pairs(p)
        _check_hypothesis(q)
        h = hvector_from_profile(q)
    except ValidationError:
        return False
    return len(h) < 2 or h[1] <= 2


def random_instance(seed, *, max_initial: int = 6, max_tail: int = 8,
                    perturbations: int = 3, forward_steps: int = 3) -> Profile:
    """A random valid profile ``(s, r)`` inside the calculus' domain.

    A third of the instances are the minimal profile of a random h-vector,
    a third start from a random ACM profile and undo up to ``perturbations``
    random links, and the rest push a fixture forward by up to
    ``forward_steps`` random links.  Same seed, same profile.
    """
    rng = random.Random(seed)
    while True:
        mode = rng.randrange(3)
        if mode == 0:
            p = minimal_profile(_random_hvector(rng, max_initial, max_tail))
        elif mode == 1:
            p = minimal_profile(_random_o_sequence(rng, max_initial, max_tail))
            for _ in range(rng.randint(1, perturbations)):
                q = _inverse_bdl(rng, remove_common_pairs(p) if rng.random() < 0.5 else p)
                if q is None:
                    break
                p = q
        else:
            p = rng.choice(_seed_fixtures())
            for _ in range(rng.randint(0, forward_steps)):
                alpha = p.initial_degree()
                p = apply_bdl_profile(p, (rng.randint(alpha, alpha + 8), rng.randint(1, 3)))
        if _in_domain(p):
            return p
