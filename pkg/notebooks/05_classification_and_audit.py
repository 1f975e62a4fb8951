"""
Classification and audit
========================

Each analysis carries a verdict and a list of checks of known identities.
"""

# %%
from dataclasses import replace

from plane_syzygy.analysis import analyze

for text in ["x^3+y^3+z^3", "x(x^2+xy+z^2)", "x^2y^2+z^4", "(x^2+y^2)^2-4xy^2z",
             "x^5-y^2z^3-xz^4", "xyz+x^3+y^3"]:
    a = analyze(text)
    print(f"{text:22s} {a.classification.label:28s} tau={a.tau:2d} nu={a.nu}  failed={len(a.failed_checks())}")

# %%
# a wrong tau is noticed by several independent checks
a = analyze("(x^2+y^2)^2-4xy^2z")
for c in replace(a, tau=a.tau + 1).with_audit().failed_checks():
    print(c.id, "-", c.details)
