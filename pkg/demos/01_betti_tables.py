"""Betti tables, twist profiles and h-vectors.

Reads the diagram of a union of two (3,3) complete intersections meeting
in a point, extracts the twist lists, and computes the h-vector both from
the profile formula and from the h-vector of each summand.
"""
from __future__ import annotations

from macaulification import (
    check_numerically_acm,
    diagonal_report,
    format_hvector,
    hvector_from_profile,
    is_o_sequence_codim2,
    numerical_reduction,
    parse_betti_text,
    profile_from_table,
    remove_common_pairs,
    render_betti_text,
)
from macaulification import fixtures

# %% A diagram in the usual layout: rows are j - i, columns homological position.
table = parse_betti_text(fixtures.get("ci33_union").diagram)
print(render_betti_text(table))

# %% Even positions (from 2 on) give s, odd positions give r.
p = profile_from_table(table)
print("s =", list(p.s))
print("r =", list(p.r))

# %% The h-vector has negative entries, so this is not the h-vector of an ACM curve.
h = hvector_from_profile(p)
print("h =", format_hvector(h), "O-sequence:", is_o_sequence_codim2(h))

# %% Three equivalent tests all say no.  The diagonal s_i - r_i shows why.
q = remove_common_pairs(p)
print("diagonal:", [v for _, v in diagonal_report(q).entries])
verdict = check_numerically_acm(q)
print("criteria:", verdict.criteria())

# %% Numerical reduction cancels equal twists in adjacent positions.
padded = parse_betti_text(fixtures.get("ci33_union").final_diagram)
print(render_betti_text(numerical_reduction(padded)))
