"""Bordered tridiagonal systems and the pivot-free symbolic LU solver.

The coefficient matrix has a tridiagonal body plus a dense last row and last
column::

    [ a1  b1                    p1      ]
    [ c2  a2  b2                p2      ]
    [     c3  a3  b3            p3      ]
    [          .   .   .        ...     ]
    [             c(n-1) a(n-1) b(n-1)  ]
    [ q1  q2  ...  q(n-2) c(n)  a(n)    ]

Lists are stored 0-based: ``c[0]`` is the subdiagonal entry of row 2, ``b[-1]``
is the (n-1, n) entry and ``c[-1]`` the (n, n-1) entry. Substitution indices in
``BorderedFactorization.subs`` are 1-based pivot numbers.

In exact mode a pivot that comes out exactly zero is replaced by the symbol
``t`` and the rest of the computation runs over rational functions of ``t``;
``t = 0`` is substituted into the finished solution. In floating-point mode a
numerically zero pivot raises :class:`ZeroPivot`.
"""
from __future__ import annotations

import math
from dataclasses import dataclass, field
from fractions import Fraction
from typing import Mapping, Optional, Sequence

from .errors import BadDimensions, BadScalar, Singular, SingularAtZero, ZeroPivot
from .scalar import (
    FLOAT_ZERO_TOL,
    T,
    ScalarMode,
    eval_at_zero,
    parse_scalar,
    scalar_is_zero,
    to_mode,
)

__all__ = [
    "BorderedSystem",
    "BorderedFactorization",
    "Solution",
    "validate_system",
    "dense_matrix",
    "factor",
    "determinant",
    "solve_sbtls",
    "reconstruct_LU",
    "multiply",
]


@dataclass(frozen=True)
class BorderedSystem:
    n: int
    a: tuple
    b: tuple
    c: tuple
    p: tuple
    q: tuple
    y: tuple

    def __post_init__(self):
        if not isinstance(self.n, int) or isinstance(self.n, bool):
            raise BadDimensions(f"n must be an integer, got {self.n!r}")
        if self.n <= 3:
            raise BadDimensions(f"need n > 3, got n = {self.n}")
        n = self.n
        expected = {"a": n, "b": n - 1, "c": n - 1, "p": n - 2, "q": n - 2, "y": n}
        for name, size in expected.items():
            value = tuple(getattr(self, name))
            object.__setattr__(self, name, value)
            if len(value) != size:
                raise BadDimensions(
                    f"|{name}| = {len(value)}, expected {size} for n = {n}"
                )

    def with_rhs(self, y: Sequence) -> "BorderedSystem":
        return BorderedSystem(self.n, self.a, self.b, self.c, self.p, self.q, tuple(y))

    def in_mode(self, mode: ScalarMode) -> "BorderedSystem":
        """Copy with every entry converted to the scalar type of ``mode``."""
        return BorderedSystem(
            self.n,
            *(tuple(to_mode(getattr(self, k), mode)) for k in "abcpqy"),
        )


@dataclass(frozen=True)
class BorderedFactorization:
    """Factors of ``A = L U``.

    ``mult[i]`` is the L subdiagonal entry of row ``i`` (``c/d`` of the
    previous pivot), defined for ``1 <= i <= n-2``; ``mult[0]`` is unused.
    """

    d: tuple
    alpha: tuple
    beta: tuple
    mult: tuple
    subs: tuple
    source: BorderedSystem
    mode: ScalarMode
    flops: int


@dataclass(frozen=True)
class Solution:
    x: tuple
    determinant: object
    subs_count: int
    flops: int
    subs: tuple = ()
    # the solution before t = 0 was substituted; equal to x without substitutions
    x_symbolic: tuple = field(default=(), compare=False)


_FIELDS = ("a", "b", "c", "p", "q", "y")


def validate_system(raw: Mapping) -> BorderedSystem:
    """Build a checked system from parsed fields (``n`` plus scalar arrays)."""
    if "n" not in raw:
        raise BadDimensions("missing field 'n'")
    n = raw["n"]
    if isinstance(n, bool) or not isinstance(n, int):
        raise BadDimensions(f"n must be an integer, got {n!r}")
    values = {}
    for name in _FIELDS:
        if name not in raw:
            raise BadDimensions(f"missing field {name!r}")
        arr = raw[name]
        if isinstance(arr, (str, bytes)) or not isinstance(arr, Sequence):
            raise BadDimensions(f"field {name!r} must be an array")
        parsed = []
        for k, item in enumerate(arr):
            try:
                parsed.append(parse_scalar(item))
            except BadScalar as exc:
                raise BadScalar(f"{name}[{k}]: {exc}") from None
        values[name] = tuple(parsed)
    return BorderedSystem(n, **values)


def _zero_like(mode: ScalarMode):
    return 0.0 if mode is ScalarMode.F64 else Fraction(0)


def dense_matrix(S: BorderedSystem) -> list:
    """Assemble the full n x n coefficient matrix as a list of rows."""
    n = S.n
    zero = 0.0 if isinstance(S.a[0], float) else Fraction(0)
    A = [[zero] * n for _ in range(n)]
    for i in range(n):
        A[i][i] = S.a[i]
    for i in range(n - 1):
        A[i][i + 1] = S.b[i]
        A[i + 1][i] = S.c[i]
    for i in range(n - 2):
        A[i][n - 1] = S.p[i]
        A[n - 1][i] = S.q[i]
    return A


def _check_pivot(value, scale, index, mode, subs, tau):
    if mode is ScalarMode.EXACT:
        if not value:
            subs.append(index)
            return T
        return value
    if scalar_is_zero(value, mode, scale, tau):
        raise ZeroPivot(index, value)
    return value


def factor(S: BorderedSystem, mode: ScalarMode = ScalarMode.EXACT,
           tau: float = FLOAT_ZERO_TOL) -> BorderedFactorization:
    mode = ScalarMode.parse(mode)
    n = S.n
    a = to_mode(S.a, mode)
    b = to_mode(S.b, mode)
    c = to_mode(S.c, mode)
    p = to_mode(S.p, mode)
    q = to_mode(S.q, mode)
    zero = _zero_like(mode)
    subs: list = []
    flops = 0

    d = [zero] * n
    mult = [zero] * (n - 1)
    d[0] = _check_pivot(a[0], a[0], 1, mode, subs, tau)
    for i in range(1, n - 1):
        mult[i] = c[i - 1] / d[i - 1]
        bc = b[i - 1] * mult[i]
        d[i] = _check_pivot(a[i] - bc, max(abs(a[i]), abs(bc)) if mode is ScalarMode.F64 else 0,
                            i + 1, mode, subs, tau)
    flops += 3 * (n - 2)

    alpha = [zero] * (n - 1)
    beta = [zero] * (n - 1)
    alpha[0] = q[0] / d[0]
    beta[0] = p[0]
    flops += 1
    for i in range(1, n - 2):
        alpha[i] = (q[i] - alpha[i - 1] * b[i - 1]) / d[i]
        beta[i] = p[i] - beta[i - 1] * mult[i]
    flops += 5 * (n - 3)
    alpha[n - 2] = (c[n - 2] - alpha[n - 3] * b[n - 3]) / d[n - 2]
    beta[n - 2] = b[n - 2] - beta[n - 3] * mult[n - 2]
    flops += 5

    acc = a[n - 1]
    scale = abs(acc) if mode is ScalarMode.F64 else 0
    for j in range(n - 1):
        term = alpha[j] * beta[j]
        acc = acc - term
        if mode is ScalarMode.F64:
            scale += abs(term)
    flops += 2 * (n - 1)
    d[n - 1] = _check_pivot(acc, scale, n, mode, subs, tau)

    return BorderedFactorization(
        d=tuple(d), alpha=tuple(alpha), beta=tuple(beta), mult=tuple(mult),
        subs=tuple(subs), source=S, mode=mode, flops=flops,
    )


def determinant(F: BorderedFactorization):
    """Product of the pivots, with ``t = 0`` substituted in exact mode.

    A pole at ``t = 0`` means the unperturbed matrix is singular; 0 is
    returned in that case.
    """
    if F.mode is ScalarMode.F64:
        return math.prod(F.d)
    prod = Fraction(1)
    for v in F.d:
        prod = prod * v
    try:
        return eval_at_zero(prod)
    except SingularAtZero:
        return Fraction(0)


def solve_sbtls(S: BorderedSystem, mode: ScalarMode = ScalarMode.EXACT,
                tau: float = FLOAT_ZERO_TOL,
                factorization: Optional[BorderedFactorization] = None) -> Solution:
    mode = ScalarMode.parse(mode)
    F = factorization if factorization is not None else factor(S, mode, tau)
    det = determinant(F)
    if mode is ScalarMode.EXACT and not det:
        raise Singular("coefficient matrix is singular (determinant is 0)")
    n = S.n
    y = to_mode(S.y, mode)
    b = to_mode(S.b, mode)
    d, alpha, beta, mult = F.d, F.alpha, F.beta, F.mult
    flops = F.flops

    z = [y[0]] * n
    for i in range(1, n - 1):
        z[i] = y[i] - mult[i] * z[i - 1]
    flops += 2 * (n - 2)
    acc = y[n - 1]
    for j in range(n - 1):
        acc = acc - alpha[j] * z[j]
    z[n - 1] = acc
    flops += 2 * (n - 1)

    x = [z[0]] * n
    xn = x[n - 1] = z[n - 1] / d[n - 1]
    x[n - 2] = (z[n - 2] - beta[n - 2] * xn) / d[n - 2]
    flops += 4
    for i in range(n - 3, -1, -1):
        x[i] = (z[i] - b[i] * x[i + 1] - beta[i] * xn) / d[i]
    flops += 5 * (n - 2)

    symbolic = tuple(x)
    if F.subs:
        try:
            x = [eval_at_zero(v) for v in x]
        except SingularAtZero as exc:
            raise Singular(f"solution has a pole at t = 0: {exc}") from None
    return Solution(
        x=tuple(x), determinant=det, subs_count=len(F.subs), flops=flops,
        subs=F.subs, x_symbolic=symbolic,
    )


def reconstruct_LU(F: BorderedFactorization) -> list:
    """Dense product ``L @ U`` of the stored factors."""
    n = len(F.d)
    zero = _zero_like(F.mode)
    one = 1.0 if F.mode is ScalarMode.F64 else Fraction(1)
    b = to_mode(F.source.b, F.mode)
    L = [[zero] * n for _ in range(n)]
    U = [[zero] * n for _ in range(n)]
    for i in range(n):
        L[i][i] = one
        U[i][i] = F.d[i]
    for i in range(1, n - 1):
        L[i][i - 1] = F.mult[i]
    for j in range(n - 1):
        L[n - 1][j] = F.alpha[j]
        U[j][n - 1] = F.beta[j]
    for i in range(n - 2):
        U[i][i + 1] = b[i]
    out = [[zero] * n for _ in range(n)]
    for i in range(n):
        for k in range(n):
            lik = L[i][k]
            if not lik:
                continue
            row = U[k]
            for j in range(n):
                if row[j]:
                    out[i][j] = out[i][j] + lik * row[j]
    return out


def multiply(S: BorderedSystem, v: Sequence) -> list:
    """Matrix-vector product ``A @ v`` without assembling ``A``."""
    n = S.n
    if len(v) != n:
        raise BadDimensions(f"vector has length {len(v)}, expected {n}")
    a, b, c, p, q = S.a, S.b, S.c, S.p, S.q
    out = [a[i] * v[i] for i in range(n)]
    for i in range(n - 1):
        out[i] = out[i] + b[i] * v[i + 1]
        out[i + 1] = out[i + 1] + c[i] * v[i]
    vn = v[n - 1]
    last = out[n - 1]
    for i in range(n - 2):
        out[i] = out[i] + p[i] * vn
        last = last + q[i] * v[i]
    out[n - 1] = last
    return out
