"""Smooth numerically ACM curves that are not ACM.

Starting from a minimal curve of the liaison class L_n, the height-one links
chosen by algorithm two give a numerically ACM curve Y whose numerical
character fails one smoothability condition.  One more link repairs it.
For n = 1 this is a curve of degree 10 and genus 11.
"""
from __future__ import annotations

from macaulification import family_report, format_hvector, gorenstein_bound, smoothability_check

for n in (1, 2, 3):
    rep = family_report(n)
    print(f"n = {n}: minimal curve of degree {rep.minimal.degree}, genus {rep.minimal.genus}")
    for label, curve, char in (("Y ", rep.y, rep.y_character), ("C'", rep.curve, rep.character)):
        check = smoothability_check(char, n)
        print(f"  {label} degree {curve.degree:3d} genus {curve.genus:4d} "
              f"hyperplane {format_hvector(curve.hyperplane_hvector)}")
        print(f"     character {list(char.values)}  smoothable: {check.ok}  failed: {check.failed}")
    print("  links:", [tuple(st) for st in rep.steps])

# %% Degree of a curve times the regularity of its ideal bounds arithmetically
# Gorenstein subschemes; with regularity 4 for illustration:
print("bound for degree 10, regularity 4:", gorenstein_bound(10, 4))
