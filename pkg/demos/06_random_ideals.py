"""
Random dense ideals
===================

d+1 random forms of degree d.  Each trial checks the dimension, asks for
agreement over the samples and compares the vertex count with the bound.
"""

from ginfan.generic import SamplerConfig, theorem_generic_experiment

cfg = SamplerConfig(seed=20140501)
for d in (4, 5, 6):
    rep = theorem_generic_experiment(d, 5, cfg)
    counts = [row.get("count") for row in rep["trials"]]
    print(f"d={d}: bound {rep['bound']}, counts {counts}, passed {rep['passed']}/{rep['total']}")

# all forms equal: the dimension check refuses, the report records it
rep = theorem_generic_experiment(5, 2, cfg, degenerate=True)
for row in rep["trials"]:
    print(row["trial"], row["failure"], row["error"])
