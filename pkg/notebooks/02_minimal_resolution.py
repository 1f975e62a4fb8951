"""
Minimal free resolution of the Milnor algebra
=============================================

0 <- S/J <- S(-d+1)^3 <- F2 <- F3 <- 0, read off from iterated syzygies.
"""

# %%
from plane_syzygy import parse_poly
from plane_syzygy.resolution import minimal_resolution

for text in ["x^3+y^3+z^3", "x(x^2+xy+z^2)", "(x^2+y^2)^2-4xy^2z", "(x^2+y^2)^3-4x^2y^2z^2"]:
    res = minimal_resolution(parse_poly(text))
    print(f"{text:28s} exponents {res.d_list}  e {res.e_list}  epsilons {res.epsilons}")

# %%
# the generators themselves, for the sextic
res = minimal_resolution(parse_poly("(x^2+y^2)^3-4x^2y^2z^2"))
for r, dj in zip(res.syzygies.generators, res.d_list):
    print(dj, [str(c) for c in r.components])
