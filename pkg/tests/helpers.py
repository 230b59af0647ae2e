"""Independent reference computations shared by the test modules."""
from fractions import Fraction

from bordersolve import FamilySpec, generate

EXAMPLE31_X = [3.8638, -2.2838, 3.1464, 1.9121, -1.0871, 2.6192, -2.9767]


def laplace_det(A):
    """Cofactor expansion along the first row; exponential, for tiny matrices only."""
    m = len(A)
    if m == 1:
        return A[0][0]
    total = Fraction(0)
    for j in range(m):
        if A[0][j]:
            minor = [row[:j] + row[j + 1:] for row in A[1:]]
            total += (-1) ** j * A[0][j] * laplace_det(minor)
    return total


def dense_matvec(A, v):
    return [sum((a * b for a, b in zip(row, v)), Fraction(0)) for row in A]


def random_systems(count, family="random", n_min=4, n_max=12, offset=0):
    span = n_max - n_min + 1
    return [
        generate(FamilySpec(family, n_min + (k % span), seed=offset + k))
        for k in range(count)
    ]
