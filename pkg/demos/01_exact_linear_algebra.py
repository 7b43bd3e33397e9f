"""
Exact determinants and incremental independence
================================================

Everything runs over the rationals, so nothing here has a tolerance.
"""

from fractions import Fraction

from ginfan.linalg import (EliminationState, RationalMatrix, det, det_bareiss,
                           det_laplace, rank, try_extend)

# a small integer matrix, three ways
M = RationalMatrix.from_rows([[1, 3, 3, 0], [1, 2, 1, 1], [1, 1, 0, 2], [1, 0, 0, 0]])
print("det (pivoting):", det(M))
print("det (Bareiss): ", det_bareiss(M))
print("det (Leibniz): ", det_laplace(M))

# rational entries stay exact
H = RationalMatrix.from_rows([[Fraction(1, i + j + 1) for j in range(4)] for i in range(4)])
print("Hilbert 4x4 det:", det(H))          # 1/6048000

# rank of a matrix with a repeated direction
R = RationalMatrix.from_rows([[1, 2, 3], [2, 4, 6], [0, 1, 1]])
print("rank:", rank(R))

# columns are offered one at a time; dependent ones are refused and the
# old state is kept, so branches can share a prefix
state = EliminationState(3)
for name, col in [("a", (1, 1, 0)), ("b", (2, 2, 0)), ("c", (0, 1, 1)), ("d", (1, 0, 2))]:
    state, ok = try_extend(state, col, name)
    print(f"column {name} {col}: {'accepted' if ok else 'dependent'}")
print("selected:", state.selected, "det of selected columns:", state.determinant())
