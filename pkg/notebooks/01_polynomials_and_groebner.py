"""
Polynomials and Groebner bases
==============================

Exact arithmetic in Q[x, y, z], graded reverse lexicographic order.
"""

# %%
from plane_syzygy import parse_poly
from plane_syzygy.groebner import ideal, krull_dimension, saturate_max_ideal, syzygies

f = parse_poly("x^5 - y^2z^3 - xz^4")
print(f, " degree", f.degree)
J = [f.diff(i) for i in range(3)]
print("partials:", *J, sep="\n  ")

# %%
# Groebner basis of the Jacobian ideal and the Hilbert function of S/J
G = ideal(J)
for p in G.reduced_basis:
    print("  ", p)
print("HF of S/J:", G.hilbert_function(12))
print("Krull dimension of S/J:", krull_dimension(G))

# %%
# The saturation drops the part supported at the irrelevant ideal
I = saturate_max_ideal(G)
print("HF of S/I:", I.hilbert_function(12))

# %%
# Syzygies of the partials: the module AR(f)
S = syzygies(J)
print(len(S.reduced_basis), "basis elements; degrees",
      sorted(v.degree - (f.degree - 1) for v in S.reduced_basis))
