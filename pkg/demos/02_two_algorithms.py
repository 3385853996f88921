"""The two repair algorithms side by side.

Algorithm one repairs the negative diagonal entries of the twist profile
with links of arbitrary height.  Algorithm two looks only at the h-vector
and uses height-one links, one per unit of deficit.  Both reach the same
h-vector.
"""
from __future__ import annotations

from macaulification import (
    algorithm_one_table,
    algorithm_two,
    cross_check,
    deficit,
    format_hvector,
    hvector_from_profile,
    profile_from_table,
    render_betti_text,
)
from macaulification import fixtures

# %%
for name in ("ci33_union", "line_cubic_linked", "three_components"):
    fx = fixtures.get(name)
    table = fixtures.table(name)
    h = hvector_from_profile(profile_from_table(table))
    print(f"== {fx.source}")
    print("h =", format_hvector(h), " deficit", deficit(h))

    one = algorithm_one_table(table)
    print("algorithm one:", [tuple(st) for st in one.steps])
    two = algorithm_two(h)
    print("algorithm two degrees:", two.steps.degrees)
    for line in two.trace:
        print("   ", format_hvector(line))
    check = cross_check(profile_from_table(table))
    print("common final h-vector:", format_hvector(check.final_hvector))
    print()

# %% The table can be carried along with the profile.
run = algorithm_one_table(fixtures.table("eleven_points"))
print("eleven points after", [tuple(st) for st in run.steps])
print(render_betti_text(run.final_table))
