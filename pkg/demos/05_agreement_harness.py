"""
A small agreement run
=====================

The full run (200 cases) is what `monomult verify` and the acceptance tests do.
"""

from monomult.oracle import agreement_harness, CorpusSpec

report = agreement_harness(CorpusSpec(cases=30, seed=1))
for key, val in report.summary().items():
    print(f"{key:>26}: {val}")

# every record keeps the exact and the numerical view side by side
r = report.records[0]
print(r["ideal"], r["beta"], r["c"], r["polyhedral"], r["oracle"], r["boundedness"])
