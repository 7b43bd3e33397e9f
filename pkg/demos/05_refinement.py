"""
Combining degrees: the common refinement
=========================================

The ideal (x,y)^d in three variables, moved by a generic change.  Each
degree gives a polygon; their Minkowski sum has the refined normal fan.
"""

from ginfan.fan import enumerate_vertices, refine
from ginfan.generic import SamplerConfig, generic_degree_fan
from ginfan.poly import IdealSpec, Poly, degree_matrix

cfg = SamplerConfig(samples=3)

for d in (3, 4):
    I = IdealSpec(tuple(Poly.monomial((d - a, a, 0)) for a in range(d + 1)))
    comps = []
    for e in range(d, d + 4):
        comps.append(generic_degree_fan(I, e, cfg).component)
        print(f"d={d} degree {e}: {comps[-1].count} vertices, "
              f"refined so far {refine(comps).count}")

# without the coordinate change the same ideal has a single vertex
A, _ = degree_matrix(IdealSpec(tuple(Poly.monomial((3 - a, a, 0)) for a in range(4))), 3)
print("untransformed, degree 3:", enumerate_vertices(A).points())
