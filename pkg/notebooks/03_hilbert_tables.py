"""
Hilbert functions of M(f) and N(f)
==================================

tau, the N(f) table with its symmetry about T/2 = (3d-6)/2, and the
degrees ct and st where m(f)_k leaves the smooth value and settles at tau.
"""

# %%
from plane_syzygy import parse_poly
from plane_syzygy.invariants import JacobianData, smooth_hilbert

f = parse_poly("x^5 - y^2z^3 - xz^4")
jd = JacobianData(f)
M, N = jd.milnor(), jd.jacobian_module()
print("tau =", jd.tau())
print("m(f) ", list(M.values))
print("smooth", [smooth_hilbert(5, k) for k in range(len(M.values))])
print("n(f) ", list(N.values), " nu =", N.maximum, " sigma =", N.initial_degree)
print(jd.thresholds())

# %%
# cross-check against plain linear algebra
from plane_syzygy import oracle

oM, oN = oracle.tables(f)
print("oracle agrees:", oM == list(M.values) and oN == list(N.values))
