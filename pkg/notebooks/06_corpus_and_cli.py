"""
The golden corpus and the command line
======================================

The same entry point as the ``plane-syzygy`` script, driven from Python.
"""

# %%
import io
import json

from plane_syzygy.cli import run_cli
from plane_syzygy.corpus import corpus

print(len(corpus()), "curves:", ", ".join(r.name for r in corpus()))

# %%
out = io.StringIO()
code = run_cli(["corpus", "--filter", "lines", "--audit", "--jobs", "1"], out)
print(out.getvalue(), "exit", code)

# %%
out = io.StringIO()
run_cli(["family", "two-branch", "--params", "k=3"], out)
report = json.loads(out.getvalue())[0]
print(report["classification"]["label"], report["invariants"]["tau"], report["hilbert"]["N"])
