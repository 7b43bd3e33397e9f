"""
Checking the sweep against every maximal minor
===============================================

For small degrees all Pluecker coordinates can be listed.  The hull of the
resulting points must match the support-function sweep exactly.
"""

import time

from ginfan.family import family_ideal
from ginfan.fan import enumerate_vertices
from ginfan.generic import SamplerConfig, sample_gl3
from ginfan.oracle import all_pluecker, brute_M, brute_vertices
from ginfan.poly import degree_matrix

for d in (3, 4, 5):
    g, _ = sample_gl3(SamplerConfig(seed=1), 0)
    A, _ = degree_matrix(family_ideal(d).transform(g), d)

    t = time.perf_counter()
    table = all_pluecker(A)
    hull = set(brute_vertices(brute_M(table)))
    t_brute = time.perf_counter() - t

    t = time.perf_counter()
    sweep = enumerate_vertices(A).point_set()
    t_sweep = time.perf_counter() - t

    print(f"d={d}: {table.total_subsets} minors, {len(table)} nonzero, "
          f"{len(brute_M(table))} distinct sums, hull {len(hull)} vertices; "
          f"equal={hull == sweep}  brute {t_brute:.2f}s sweep {t_sweep:.3f}s")
