"""Dense reference solvers used to check the structured ones.

Both use row exchanges and never the symbolic ``t`` substitution, so agreement
with them is independent evidence.
"""
from __future__ import annotations

from fractions import Fraction
from math import lcm
from typing import Sequence

import numpy as np

from .errors import BadDimensions, Singular
from .scalar import FLOAT_ZERO_TOL

__all__ = ["gauss_solve", "gauss_solve_det", "bareiss_solve", "bareiss_determinant"]


def _check_square(A, rhs=None):
    m = len(A)
    if any(len(row) != m for row in A):
        raise BadDimensions("matrix is not square")
    if rhs is not None and len(rhs) != m:
        raise BadDimensions(f"rhs has length {len(rhs)}, expected {m}")
    return m


def gauss_solve_det(A, rhs, tau: float = FLOAT_ZERO_TOL):
    """Gaussian elimination with partial pivoting; returns ``(x, det)``.

    A column is rejected as singular when the largest available pivot is at
    most ``tau`` times the largest magnitude of its (original) row.
    """
    M = np.array(A, dtype=float)
    y = np.array(rhs, dtype=float)
    if M.ndim != 2 or M.shape[0] != M.shape[1]:
        raise BadDimensions("matrix is not square")
    m = M.shape[0]
    if y.shape != (m,):
        raise BadDimensions(f"rhs has length {y.size}, expected {m}")
    row_scale = np.abs(M).max(axis=1)
    sign = 1.0
    det = 1.0
    for k in range(m):
        piv = k + int(np.argmax(np.abs(M[k:, k])))
        if abs(M[piv, k]) <= tau * row_scale[piv]:
            raise Singular(f"no acceptable pivot in column {k + 1}")
        if piv != k:
            M[[k, piv]] = M[[piv, k]]
            y[[k, piv]] = y[[piv, k]]
            row_scale[[k, piv]] = row_scale[[piv, k]]
            sign = -sign
        f = M[k + 1:, k] / M[k, k]
        M[k + 1:, k:] -= np.outer(f, M[k, k:])
        y[k + 1:] -= f * y[k]
        with np.errstate(over="ignore", under="ignore"):
            det *= M[k, k]
    x = np.empty(m)
    for i in range(m - 1, -1, -1):
        x[i] = (y[i] - M[i, i + 1:] @ x[i + 1:]) / M[i, i]
    return x, sign * det


def gauss_solve(A, rhs, tau: float = FLOAT_ZERO_TOL) -> np.ndarray:
    return gauss_solve_det(A, rhs, tau)[0]


def _integer_rows(A, rhs):
    """Scale each row (with its rhs entry) to integers; returns rows and the scale product."""
    rows = []
    scale = 1
    for i, row in enumerate(A):
        vals = [Fraction(v) for v in row]
        if rhs is not None:
            vals.append(Fraction(rhs[i]))
        k = lcm(*(v.denominator for v in vals)) if vals else 1
        rows.append([int(v * k) for v in vals])
        scale *= k
    return rows, scale


def _bareiss(rows, m):
    """In-place fraction-free elimination on ``m`` pivot columns.

    Returns the sign of the row permutation, or 0 when a column has no
    nonzero pivot.
    """
    sign = 1
    prev = 1
    width = len(rows[0]) if rows else 0
    for k in range(m):
        piv = next((r for r in range(k, m) if rows[r][k]), None)
        if piv is None:
            return 0
        if piv != k:
            rows[k], rows[piv] = rows[piv], rows[k]
            sign = -sign
        pk = rows[k]
        akk = pk[k]
        for i in range(k + 1, m):
            ri = rows[i]
            aik = ri[k]
            for j in range(k + 1, width):
                ri[j] = (ri[j] * akk - aik * pk[j]) // prev
            ri[k] = 0
        prev = akk
    return sign


def bareiss_determinant(A) -> Fraction:
    m = _check_square(A)
    if m == 0:
        return Fraction(1)
    rows, scale = _integer_rows(A, None)
    sign = _bareiss(rows, m)
    if sign == 0:
        return Fraction(0)
    return Fraction(sign * rows[m - 1][m - 1], scale)


def bareiss_solve(A, rhs: Sequence):
    """Exact solve over the rationals; returns ``(x, det)``.

    Raises :class:`Singular` for a rank-deficient matrix.
    """
    m = _check_square(A, rhs)
    rows, scale = _integer_rows(A, rhs)
    sign = _bareiss(rows, m)
    if sign == 0:
        raise Singular("matrix is singular")
    det = Fraction(sign * rows[m - 1][m - 1], scale)
    x = [Fraction(0)] * m
    for i in range(m - 1, -1, -1):
        r = rows[i]
        acc = Fraction(r[m])
        for j in range(i + 1, m):
            if r[j]:
                acc -= r[j] * x[j]
        x[i] = acc / r[i]
    return x, det
