"""
Bourbaki ideals
===============

v(r) = det[(x, y, z); r1; r] / f for the remaining generators r of AR(f).
"""

# %%
from plane_syzygy import parse_poly
from plane_syzygy.bourbaki import bourbaki_ideal, dprime_search, unique_relation
from plane_syzygy.resolution import jacobian_syzygies

f = parse_poly("(x^2+y^2)^3-4x^2y^2z^2")
syz = jacobian_syzygies(f)
bd = bourbaki_ideal(f, syz)
print("generators:", [str(g) for g in bd.generators])
print("degree", bd.degree, " complete intersection", bd.is_complete_intersection)
print(dprime_search(f, syz, bd))

# %%
# a 3-syzygy curve: B is a complete intersection and the relation among
# r1, r2, r3 has h2, h3 proportional to g3, -g2
f = parse_poly("(x^2+y^2)^2-4xy^2z")
syz = jacobian_syzygies(f)
bd = bourbaki_ideal(f, syz)
rel = unique_relation(f, syz, bd)
print("g =", [str(g) for g in bd.generators], " deg B =", bd.degree)
print("h =", [str(h) for h in rel.h], " alpha =", rel.alpha)
