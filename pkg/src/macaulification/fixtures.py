"""Worked examples used throughout the tests and demos.

Diagrams are kept in the text layout accepted by ``parse_betti_text``.
"""
from __future__ import annotations

from dataclasses import dataclass, field

from .io import parse_betti_text

__all__ = ["Fixture", "FIXTURES", "table", "get"]


@dataclass(frozen=True)
class Fixture:
    name: str
    source: str
    diagram: str | None = None
    hvector: tuple[int, ...] | None = None
    alg_one: tuple[tuple[int, int], ...] | None = None
    alg_two_degrees: tuple[int, ...] | None = None
    alg_two_trace: tuple[tuple[int, ...], ...] = ()
    final_hvector: tuple[int, ...] | None = None
    final_diagram: str | None = None
    extra: dict = field(default_factory=dict)


_CI33 = """
        0    1    2    3
-------------------------
 0:     1    -    -    -
 1:     -    -    -    -
 2:     -    -    -    -
 3:     -    -    -    -
 4:     -    -    -    -
 5:     -    4    -    -
 6:     -    -    -    -
 7:     -    -    4    -
 8:     -    -    -    -
 9:     -    -    -    1
-------------------------
Tot:    1    4    4    1
"""

_CI33_LINKED = """
         0    1    2    3
 -------------------------
  0:     1    -    -    -
  1:     -    -    -    -
         ...
  7:     -    -    -    -
  8:     -    4    -    -
  9:     -    -    -    -
 10:     -    -    4    -
 11:     -    1    -    -
 12:     -    -    -    1
 13:     -    -    1    -
 -------------------------
 Tot:    1    5    5    1
"""

_LINE_CUBIC_LINKED = """
        0    1    2    3
-------------------------
 0:     1    -    -    -
 1:     -    -    -    -
 2:     -    -    -    -
 3:     -    -    -    -
 4:     -    -    -    -
 5:     -    2    1    -
 6:     -    -    -    -
 7:     -    2    3    1
 8:     -    -    -    -
 9:     -    2    1    -
10:     -    1    -    -
11:     -    1    5    2
12:     -    1    3    2
-------------------------
Tot:    1    9   13    5
"""

_LINE_CUBIC_LINKED_FINAL = """
        0    1    2    3
-------------------------
 0:     1    -    -    -
 1:     -    -    -    -
 2:     -    -    -    -
 3:     -    -    -    -
 4:     -    -    -    -
 5:     -    -    -    -
 6:     -    -    -    -
 7:     -    -    -    -
 8:     -    -    -    -
 9:     -    2    1    -
10:     -    -    -    -
11:     -    2    3    1
12:     -    1    -    -
13:     -    1    1    -
14:     -    1    -    -
15:     -    1    5    2
16:     -    2    4    2
17:     -    2    2    -
-------------------------
Tot:    1   12   16    5
"""

_THREE_COMPONENTS = """
        0    1    2    3
-------------------------
 0:     1    -    -    -
 1:     -    -    -    -
 2:     -    -    -    -
 3:     -    -    -    -
 4:     -    -    -    -
 5:     -    -    -    -
 6:     -    -    -    -
 7:     -    4    3    -
 8:     -    4    7    3
 9:     -    -    -    -
10:     -    -    -    -
11:     -    5    4    -
12:     -    4    8    4
13:     -    -    4    3
-------------------------
Tot:    1   17   26   10
"""

_ELEVEN_POINTS = """
        0    1    2    3
-------------------------
 0:     1    -    -    -
 1:     -    -    -    -
 2:     -    9   12    3
 3:     -    -    -    1
-------------------------
Tot:    1    9   12    4
"""

_ELEVEN_POINTS_FINAL = """
        0    1    2    3
-------------------------
 0:     1    -    -    -
 1:     -    -    -    -
 2:     -    -    -    -
 3:     -    -    -    -
 4:     -    -    -    -
 5:     -    -    -    -
 6:     -    -    -    -
 7:     -    9   12    3
 8:     -    4    3    1
 9:     -    -    1    -
-------------------------
Tot:    1   13   16    4
"""

_FOUR_QUARTICS = """
        0    1    2    3    4
------------------------------
 0:     1    -    -    -    -
 1:     -    -    -    -    -
 2:     -    -    -    -    -
 3:     -    4    -    -    -
 4:     -    -    -    -    -
 5:     -    -    -    -    -
 6:     -    -    6    -    -
 7:     -    -    -    -    -
 8:     -    -    1    -    -
 9:     -    -    3   16    9
------------------------------
Tot:    1    4   10   16    9
"""

_FOUR_QUARTICS_FINAL = """
        0    1    2    3    4
------------------------------
 0:     1    -    -    -    -
 1:     -    -    -    -    -
              ...
19:     -    -    -    -    -
20:     -    4    -    -    -
21:     -    -    -    -    -
22:     -    -    -    -    -
23:     -    -    6    -    -
24:     -    3    -    -    -
25:     -    -    1    -    -
26:     -    1    3   16    9
27:     -    3    7    -    -
------------------------------
Tot:    1   11   17   16    9
"""

FIXTURES = {
    f.name: f
    for f in [
        Fixture(
            "ci33_union",
            "union of two complete intersections of type (3,3) meeting in a point",
            diagram=_CI33,
            hvector=(1, 2, 3, 4, 5, 6, 3, 0, -3, -2, -1),
            alg_one=((12, 3),),
            alg_two_degrees=(10, 12, 14),
            final_hvector=(1, 2, 3, 4, 5, 6, 7, 8, 9, 6, 3),
            final_diagram=_CI33_LINKED,
            extra={"s": (9, 9, 9, 9), "r": (12, 6, 6, 6, 6)},
        ),
        Fixture(
            "line_cubic_linked",
            "line, plane cubic and a curve linked to a line in a (4,8) complete intersection",
            diagram=_LINE_CUBIC_LINKED,
            hvector=(1, 2, 3, 4, 5, 6, 5, 5, 3, 4, 2, 0, -3, -2),
            alg_two_degrees=(10, 15, 17, 18),
            alg_two_trace=(
                (1, 2, 3, 4, 5, 6, 7, 6, 6, 4, 4, 2, 0, -3, -2),
                (1, 2, 3, 4, 5, 6, 7, 8, 7, 7, 5, 5, 3, 1, -2, -2),
                (1, 2, 3, 4, 5, 6, 7, 8, 9, 8, 8, 6, 6, 4, 2, -1, -1),
                (1, 2, 3, 4, 5, 6, 7, 8, 9, 10, 9, 9, 7, 7, 5, 3),
            ),
            final_hvector=(1, 2, 3, 4, 5, 6, 7, 8, 9, 10, 9, 9, 7, 7, 5, 3),
            final_diagram=_LINE_CUBIC_LINKED_FINAL,
            extra={
                "s": (14, 14, 14, 13, 13, 13, 13, 13, 11, 9, 9, 9, 7),
                "r": (15, 15, 14, 14, 13, 12, 11, 10, 10, 10, 8, 8, 6, 6),
            },
        ),
        Fixture(
            "three_components",
            "triple line, a (1,2) and a (4,8) complete intersection",
            diagram=_THREE_COMPONENTS,
            hvector=(1, 2, 3, 4, 5, 6, 7, 8, 5, 1, 4, 4, -1, -6, -3),
            alg_one=((11, 1), (12, 1), (13, 1), (19, 2), (21, 2), (23, 2)),
            alg_two_degrees=(11, 12, 13, 18, 19, 20, 22, 23, 24),
            extra={
                "reduced_s": (14,) * 8 + (10,) * 7,
                "reduced_r": (16, 16, 16, 12, 12, 12, 12, 12, 11, 11, 11, 9, 8, 8, 8, 8),
                "swap_table": (
                    (11, 12, 13, 19, 19, 21, 21, 23, 23),
                    (11, 12, 13, 18, 20, 21, 21, 23, 23),
                    (11, 12, 13, 18, 20, 20, 22, 23, 23),
                    (11, 12, 13, 18, 19, 21, 22, 23, 23),
                    (11, 12, 13, 18, 19, 21, 22, 22, 24),
                    (11, 12, 13, 18, 19, 21, 21, 23, 24),
                    (11, 12, 13, 18, 19, 20, 22, 23, 24),
                ),
                "deficit": 9,
            },
        ),
        Fixture(
            "eleven_points",
            "eleven general points in P^3",
            diagram=_ELEVEN_POINTS,
            alg_one=((5, 1), (6, 1), (7, 1), (9, 2)),
            final_hvector=(1, 2, 3, 4, 5, 6, 7, 8),
            final_diagram=_ELEVEN_POINTS_FINAL,
        ),
        Fixture(
            "four_quartics",
            "ideal of four general quartics through eleven general points",
            diagram=_FOUR_QUARTICS,
            final_hvector=tuple(range(1, 22)) + (18, 15, 12, 9, 9, 9, 9, 9),
            final_diagram=_FOUR_QUARTICS_FINAL,
            extra={"num_links": 7},
        ),
        Fixture(
            "line_cubic_acm",
            "the numerically ACM curve obtained from line_cubic_linked by height-one links",
            diagram=_LINE_CUBIC_LINKED_FINAL,
        ),
    ]
}


def get(name: str) -> Fixture:
    return FIXTURES[name]


def table(name: str, final: bool = False):
    fx = FIXTURES[name]
    text = fx.final_diagram if final else fx.diagram
    return parse_betti_text(text)
