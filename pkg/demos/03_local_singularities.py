"""Local branch expansions and ADE classification at singular points.

Each singular point of an arrangement is profiled by expanding every
component through it as truncated power series (smooth branches), measuring
pairwise contact orders, and reading the type off the profile:
two branches meeting with multiplicity m give A_(2m-1); three pairwise
transverse branches give D4; contacts {6,1,1} give D14.
"""

from freecurves import analyze_arrangement, build, expand_branches

E_arr = build("F(1,1)")
E = E_arr.components[0].poly

print("Branches of the nodal cubic at its node (0 : 0 : 1):")
for b in expand_branches(E, E_arr.singular_points[0], 6):
    u_text = " + ".join(f"({c})*t^{i}" for i, c in enumerate(b.u) if c)
    v_text = " + ".join(f"({c})*t^{i}" for i, c in enumerate(b.v) if c)
    print(f"  tangent {tuple(str(t) for t in b.tangent)}: "
          f"u(t) = {u_text or '0'},  v(t) = {v_text or '0'}")
print()

for name in ("F(1,1)", "node_chord", "flex_triangle", "nearly_free_2"):
    arr = build(name)
    results, total = analyze_arrangement(arr.labelled(), list(arr.singular_points))
    print(f"{arr.name}: {len(results)} singular points")
    for p, prof, stype in results:
        labels = "+".join(lbl for lbl, _ in prof.branches)
        print(f"  {str(p):>58}  {stype.tag:>4}  mu={stype.milnor:>2} "
              f"tau={stype.tjurina:>2}  branches: {labels}")
    print(f"  sum of local Tjurina numbers: {total}")
    print()
