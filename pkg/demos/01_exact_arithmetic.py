"""Tour of the exact arithmetic layer: Q(w), polynomials, projective points.

Everything in this package is computed over the field Q(w) with
w^2 + w + 1 = 0 (so w is a primitive cube root of unity), never floats.
"""

from freecurves import (
    EisensteinNumber,
    OMEGA,
    hessian_det,
    parse_curve,
    parse_point,
    parse_scalar,
)

w = OMEGA
print("w^2        =", w * w)
print("w^3        =", w**3)
print("1 + w + w^2 =", 1 + w + w**2)
print("(1 + w)^-1 =", (EisensteinNumber(1) + w).inverse())
print("norm(1+w)   =", (EisensteinNumber(1) + w).norm())
print()

print("Scalars parse from text with integer, p/q, and w constants:")
s = parse_scalar("3*w^2 - 1/2")
print('  parse_scalar("3*w^2 - 1/2") =', s)
print()

E = parse_curve("x^3 + y^3 - x*y*z")
print("Nodal cubic:", E)
print("Partials:", ", ".join(str(E.partial(v)) for v in "xyz"))
H = hessian_det(E)
print("Hessian determinant:", H)
print()

node = parse_point("0 : 0 : 1")
flex = parse_point("1 : -1 : 0")
print("At the node", node, "the cubic and its Hessian vanish:",
      E.evaluate(node), H.evaluate(node))
print("At the flex", flex, "likewise:", E.evaluate(flex), H.evaluate(flex))
print()

print("The Euler relation x f_x + y f_y + z f_z = d f holds exactly:")
x, y, z = (parse_curve(v) for v in "xyz")
combo = x * E.partial("x") + y * E.partial("y") + z * E.partial("z")
print("  combination == 3*E:", combo == E.scale(3))
