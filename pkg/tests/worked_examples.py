"""Worked-example matrices and frozen reference values.

Printed values are transcribed from the source examples. Values marked
"exact oracle" were computed beforehand in exact symbolic arithmetic
(sympy, rationals and surds) and frozen here; the package never computes
them that way at runtime.
"""

from fractions import Fraction

import numpy as np

S2 = np.sqrt(2.0)
S3 = np.sqrt(3.0)

# nilpotent, A^3 = 0
NILPOTENT = np.array([[1, 1, 3], [5, 2, 6], [-2, -1, -3]], dtype=float)

B_INT = [
    [-1, 1, 0, 0, 1, 0],
    [1, -1, 0, 0, -1, 0],
    [0, 0, 0, 1, -1, 1],
    [-1, -1, 0, 0, 1, -1],
    [1, -1, 0, 0, 1, -1],
    [1, -1, 0, 0, 0, 0],
]
B = np.array(B_INT, dtype=float)

B_CORE_EP = np.array([
    [0, 0, 0, -1, 1, 2],
    [0, 0, 0, 1, -1, -2],
    [0, 0, 0, 0, 0, 0],
    [0, 0, 0, 4, 2, -2],
    [3, -3, 0, -2, 2, 4],
    [3, -3, 0, -6, 0, 6],
]) / 6

# printed decimal reading
B_DRAZIN_PRINTED = np.array([
    [0, 0, 0, 0, 1e-4, 0.4999],
    [0, 0, 0, 0, -1e-4, -0.4999],
    [0, 0, 0, 0, 0, 0],
    [0, 0, 0, 0, 1, -1],
    [0.5, -0.5, 0, 0, 3e-4, 0.9996],
    [0.5, -0.5, 0, 0, -0.9997, 4999 / 2500],
])

# exact oracle
_h = Fraction(1, 2)
B_DRAZIN_EXACT = [
    [0, 0, 0, 0, 0, _h],
    [0, 0, 0, 0, 0, -_h],
    [0, 0, 0, 0, 0, 0],
    [0, 0, 0, 0, 1, -1],
    [_h, -_h, 0, 0, 0, 1],
    [_h, -_h, 0, 0, -1, 2],
]
B_DRAZIN = np.array([[float(x) for x in row] for row in B_DRAZIN_EXACT])
B_RANK = 5
B_INDEX = 3

# not a partial isometry, index 2
E42 = np.array([[2, 0, 0], [-1, 1, 1], [-1, -1, -1]], dtype=float)
E42_DRAZIN = np.array([[1, 0, 0], [-1, 0, 0], [0, 0, 0]]) / 2
E42_DAA = np.array([[3, 0, 0], [-3, 0, 0], [0, 0, 0]], dtype=float)  # A^D A^* A
E42_DSTAR = np.array([[2, -1, -1], [-2, 1, 1], [0, 0, 0]], dtype=float)  # exact oracle

# partial isometry, index 1
E43I = np.array([[2, 0, 0], [0, S3, 0], [0, 1, 0]]) / 2
E43I_DRAZIN = np.array([[3, 0, 0], [0, 2 * S3, 0], [0, 2, 0]]) / 3
E43I_DMP = np.array([[6, 0, 0], [0, 3 * S3, 3], [0, 3, S3]]) / 6
E43I_MPD = np.array([[3, 0, 0], [0, 2 * S3, 0], [0, 0, 0]]) / 3
E43I_CORE_EP = E43I_DMP
E43I_CMP = np.array([[1, 0, 0], [0, S3 / 2, 0.5], [0, 0, 0]])  # exact oracle
E43I_PINV = E43I_CMP.copy()  # exact oracle; equals A^*

# partial isometry, index 2, not normal
E43II = np.array([[0, 1, 0, 0], [1, 0, 0, 0], [0, 0, 0, 1], [0, 0, 0, 0]], dtype=float)
E43II_DRAZIN = np.array([[0, 1, 0, 0], [1, 0, 0, 0], [0, 0, 0, 0], [0, 0, 0, 0]], dtype=float)

# index 2, not a partial isometry
E45 = np.array([[0, 1, 1], [0, 0, 0], [0, 0, 1]], dtype=float)
E45_PINV = np.array([[0, 0, 0], [1, 0, -1], [0, 0, 1]], dtype=float)
E45_DRAZIN = np.array([[0, 0, 1], [0, 0, 0], [0, 0, 1]], dtype=float)
E45_CORE_EP = np.array([[1, 0, 1], [0, 0, 0], [1, 0, 1]]) / 2
E45_SQ_PINV = np.array([[0, 0, 0], [0, 0, 0], [1, 0, 1]]) / 2  # (A^2)^+ = (A^3)^+
E45_CORE = np.array([[0, 0, 1], [0, 0, 0], [0, 0, 1]], dtype=float)
E45_NILPOTENT = np.array([[0, 1, 0], [0, 0, 0], [0, 0, 0]], dtype=float)

# 2-EP block example of index 2
E2EP = np.array([[1, 2, 0, 0], [2, 1, 0, 0], [0, 0, 0, 1], [0, 0, 0, 0]], dtype=float)
E2EP_SQ_PINV = np.zeros((4, 4))
E2EP_SQ_PINV[:2, :2] = np.array([[5, -4], [-4, 5]]) / 9
E2EP_CUBE_PINV = np.zeros((4, 4))
E2EP_CUBE_PINV[:2, :2] = np.array([[-13, 14], [14, -13]]) / 27
E2EP_DRAZIN = np.zeros((4, 4))
E2EP_DRAZIN[:2, :2] = np.array([[-1, 2], [2, -1]]) / 3  # exact oracle

# partial isometry of index 2 that is not CEPD
F6 = np.array([
    [0, 0, 0, 0, 0, 0],
    [S2, -S2, 0, 0, 0, 0],
    [1, 1, 0, 0, 0, 0],
    [1, 1, 0, 0, 0, 0],
    [0, 0, 0, 0, 0, S2],
    [0, 0, 0, 0, 0, S2],
]) / 2
F6_DRAZIN = np.array([
    [0, 0, 0, 0, 0, 0],
    [S2, -S2, 0, 0, 0, 0],
    [-1, 1, 0, 0, 0, 0],
    [-1, 1, 0, 0, 0, 0],
    [0, 0, 0, 0, 0, S2],
    [0, 0, 0, 0, 0, S2],
])
F6_CORE_EP = np.array([
    [0, 0, 0, 0, 0, 0],
    [0, -2 * S2, 2, 2, 0, 0],
    [0, 2, -S2, -S2, 0, 0],
    [0, 2, -S2, -S2, 0, 0],
    [0, 0, 0, 0, 2 * S2, 2 * S2],
    [0, 0, 0, 0, 2 * S2, 2 * S2],
]) / 4
F6_SQ_PINV = np.array([
    [0, -2, S2, S2, 0, 0],
    [0, 2, -S2, -S2, 0, 0],
    [0, 0, 0, 0, 0, 0],
    [0, 0, 0, 0, 0, 0],
    [0, 0, 0, 0, 0, 0],
    [0, 0, 0, 0, 4, 4],
]) / 4
F6_CUBE_PINV = np.array([
    [0, S2, -1, -1, 0, 0],
    [0, -S2, 1, 1, 0, 0],
    [0, 0, 0, 0, 0, 0],
    [0, 0, 0, 0, 0, 0],
    [0, 0, 0, 0, 0, 0],
    [0, 0, 0, 0, 2 * S2, 2 * S2],
]) / 2

ALL = {
    "nilpotent": NILPOTENT,
    "B": B,
    "ex42": E42,
    "ex43i": E43I,
    "ex43ii": E43II,
    "ex45": E45,
    "block_2ep": E2EP,
    "final6": F6,
}


def fraction_matrix(rows):
    return [[Fraction(x) for x in row] for row in rows]


def fraction_matmul(x, y):
    return [[sum(x[i][t] * y[t][j] for t in range(len(y))) for j in range(len(y[0]))] for i in range(len(x))]


def fraction_rank(rows) -> int:
    """Rank by Gaussian elimination over the rationals."""
    m = [list(r) for r in fraction_matrix(rows)]
    rank, col, ncols = 0, 0, len(m[0])
    while rank < len(m) and col < ncols:
        pivot = next((i for i in range(rank, len(m)) if m[i][col] != 0), None)
        if pivot is None:
            col += 1
            continue
        m[rank], m[pivot] = m[pivot], m[rank]
        for i in range(len(m)):
            if i != rank and m[i][col] != 0:
                f = m[i][col] / m[rank][col]
                m[i] = [a - f * b for a, b in zip(m[i], m[rank])]
        rank += 1
        col += 1
    return rank
