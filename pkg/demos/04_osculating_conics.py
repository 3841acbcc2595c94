"""Recover the hyperosculating conics of the nodal cubic from scratch.

At any smooth non-flex point of a cubic there is a unique conic with contact
at least 5.  At exactly three special points the contact jumps to 6; those
are the deep-contact points, and solving the 5x6 linear system along the
local branch reproduces the curated conics exactly, coefficient by
coefficient (up to scale).
"""

from fractions import Fraction

from freecurves import (
    branch_mult,
    expand_branches,
    is_sextactic,
    osculating_conic,
    parse_point,
    proportional,
)
from freecurves.catalog import component, point

E = component("E").poly

for i in (1, 2, 3):
    p = point(f"P{i}")
    conic = osculating_conic(E, p)
    curated = component(f"C{i}").poly
    branch = expand_branches(E, p, 16)[0]
    contact = branch_mult(conic, branch)
    print(f"P{i} = {p}")
    print(f"  solved conic : {conic}")
    print(f"  curated conic: {curated}")
    print(f"  proportional: {proportional(conic, curated)}, contact order {contact}, "
          f"deep contact: {is_sextactic(E, p)}")
    print()

rho = Fraction(5, 3)
generic = parse_point(f"1 : {rho} : {(1 + rho**3) / rho}")
conic = osculating_conic(E, generic)
branch = expand_branches(E, generic, 16)[0]
print(f"Generic smooth point {generic}:")
print(f"  osculating conic {conic}")
print(f"  contact order {branch_mult(conic, branch)} (exactly 5: not a deep-contact point),"
      f" deep contact: {is_sextactic(E, generic)}")
