"""
The family I(d), the index sets J(n) and their separating weights
==================================================================

For each n < d/3 a weight omega(n) and a level lambda(n) cut the simplex of
degree-d monomials so that exactly J(n) lies on or below the line.
"""

from ginfan.family import (bound, build_matrix_B, check_separation, family_ideal,
                           index_set_J, m_of, omega_lambda, valid_n)
from ginfan.linalg import det

d = 7
print("I(7) generators:", family_ideal(d).generators)
print("number of valid n:", bound(d))

for n in valid_n(d):
    sep = omega_lambda(d, n)
    rep = check_separation(d, n)
    print(f"n={n}: omega={sep.omega} lambda={sep.lam} m_J={m_of(sep.J)} "
          f"separates={rep.passed} on the line: {list(rep.boundary)}")

print("J(2) =", index_set_J(7, 2))

# a sweep over many d is cheap: integer dot products only
bad = [(d, n) for d in range(3, 31) for n in valid_n(d) if not check_separation(d, n).passed]
print("failures for d <= 30:", bad)

# the minor of g0(I(d))_d on the columns J(n)
for d in (3, 5, 7):
    print(f"d={d}: det B(n) =", " ".join(str(det(build_matrix_B(d, n, appendix=True))) for n in range(d)))
# only n = 0, 1 and d-1 give a nonzero value
