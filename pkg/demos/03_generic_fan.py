"""
The generic degree-d fan component of I(d)
===========================================

Five seeded random coordinate changes stand in for a generic one.  The
component is reported only if all of them give the same vertex set.
"""

from ginfan.family import family_ideal, omega_lambda, valid_n
from ginfan.fan import locate_cone
from ginfan.generic import SamplerConfig, check_omega_cones, generic_degree_fan

cfg = SamplerConfig(seed=20140501, samples=5)

for d in range(3, 10):
    res = generic_degree_fan(family_ideal(d), d, cfg)
    om = check_omega_cones(res.component, d)
    print(f"d={d}: agree={res.agreement} vertices={res.component.count} "
          f"omega cones distinct={om.distinct}")

# the vertices with their certificates (a strict minimising weight each)
res = generic_degree_fan(family_ideal(7), 7, cfg)
for v in res.component.vertices:
    print(v.m, "certificate", v.certificate)

# where omega(n) lands; for d=7 the weights omega(1) and omega(2) share a vertex
for n in valid_n(7):
    loc = locate_cone(res.component, None, omega_lambda(7, n).omega)
    print(f"omega({n}) -> {loc.vertex.m} strict={loc.strict}")
