"""Degree components of generic Gröbner fans in three variables.

Exact rational arithmetic throughout.  The main entry points:

* :func:`ginfan.fan.enumerate_vertices`: vertices of ``conv M(I, e)`` for a
  coefficient matrix of ``I_e``, i.e. the maximal cones of the degree-``e``
  Gröbner fan component;
* :func:`ginfan.generic.generic_degree_fan` and
  :func:`ginfan.generic.gin_lower_bound`: the same for generic coordinates;
* :mod:`ginfan.family`: the family ``I(d)`` and its separating weights;
* :mod:`ginfan.oracle`: brute-force Plücker coordinates for cross-checks.
"""

from .errors import *  # noqa: F401,F403
from .linalg import RationalMatrix, det, rank, try_extend, EliminationState
from .poly import (IdealSpec, LinearChange, Poly, apply_linear_change,
                   degree_matrix, load_ideal, monomial_basis, parse_ideal)
from .fan import (BasisIndexSet, DegreeFanComponent, FanVertex, enumerate_vertices,
                  greedy_min_basis, locate_cone, refine, support_vertex)
from .family import (G0, appendix_reduction, build_matrix_B, check_separation,
                     family_ideal, index_set_J, omega_lambda)
from .generic import (SamplerConfig, gin_lower_bound, generic_degree_fan,
                      random_dense_ideal, random_gl3, theorem_generic_experiment)
from .oracle import all_pluecker, brute_M, brute_vertices

__version__ = "0.1.0"
