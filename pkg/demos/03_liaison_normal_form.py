"""Rewriting a sequence of links into its canonical form.

A link of height a is a run of a height-one links of the same degree, and
adjacent height-one links (x, 1), (y, 1) can be traded for (y-1, 1),
(x+1, 1).  Sorting with these moves turns algorithm one's output into
algorithm two's.
"""
from __future__ import annotations

from macaulification import (
    algorithm_one,
    apply_sequence,
    expand_sequence,
    format_hvector,
    normalize_with_table,
    profile_from_table,
)
from macaulification import fixtures

fx = fixtures.get("three_components")
steps = algorithm_one(profile_from_table(fixtures.table("three_components"))).steps
print("algorithm one:", [tuple(st) for st in steps])
print("expanded:     ", expand_sequence(steps).degrees)

# %% Each row is one swap; the last row is strictly increasing.
canon, rows = normalize_with_table(steps, fx.hvector)
for row in rows:
    print(" ".join(f"{d:3d}" for d in row))
print(f"canonical form: b = {canon.b} links at degree {canon.a}, then {list(canon.gs)}")

# %% Same h-vector and same shift, before and after.
before = apply_sequence(fx.hvector, steps)
after = apply_sequence(fx.hvector, canon.steps())
print(format_hvector(before[0]), before[1])
print(format_hvector(after[0]), after[1])
