"""Block solver for bordered tridiagonal systems via Sherman-Morrison-Woodbury.

The system is split as ``[[M1, v], [u^T, m2]]`` with ``M1`` the leading
(n-1) x (n-1) tridiagonal block and ``m2 = a[n]``. Eliminating the last unknown
leaves ``(M1 - v u^T / m2) x' = y_hat``, a rank-one update of ``M1``, which is
solved with two tridiagonal solves sharing ``M1``::

    M1 r = y_hat,   M1 qbar = v
    x'  = r + qbar * (u.r) / (m2 - u.qbar)
    x'' = (y[n] - u.x') / m2

In exact mode zero pivots of ``M1`` and a zero corner ``a[n]`` become the
symbol ``t``; the sub-solves stay symbolic and ``t = 0`` is substituted once,
after the combination step.
"""
from __future__ import annotations

from concurrent.futures import ThreadPoolExecutor
from dataclasses import dataclass
from fractions import Fraction
from typing import Optional, Sequence

from .core import BorderedSystem, Solution, determinant, factor
from .errors import BadDimensions, Singular, SingularAtZero, ZeroCorner, ZeroPivot
from .scalar import FLOAT_ZERO_TOL, T, ScalarMode, eval_at_zero, scalar_is_zero, to_mode

__all__ = ["TridiagonalSystem", "Partition", "partition", "thomas_solve", "solve_smw"]


@dataclass(frozen=True)
class TridiagonalSystem:
    """``lower[i]`` sits at row ``i+1``, column ``i``; ``upper[i]`` at row ``i``, column ``i+1``."""

    m: int
    diag: tuple
    upper: tuple
    lower: tuple
    rhs: Optional[tuple] = None

    def __post_init__(self):
        for name in ("diag", "upper", "lower"):
            object.__setattr__(self, name, tuple(getattr(self, name)))
        if self.rhs is not None:
            object.__setattr__(self, "rhs", tuple(self.rhs))
        m = self.m
        if m < 1:
            raise BadDimensions(f"tridiagonal size must be positive, got {m}")
        if len(self.diag) != m or len(self.upper) != m - 1 or len(self.lower) != m - 1:
            raise BadDimensions(
                f"inconsistent tridiagonal lengths {len(self.diag)}/"
                f"{len(self.upper)}/{len(self.lower)} for m = {m}"
            )
        if self.rhs is not None and len(self.rhs) != m:
            raise BadDimensions(f"rhs has length {len(self.rhs)}, expected {m}")

    def with_rhs(self, rhs: Sequence) -> "TridiagonalSystem":
        return TridiagonalSystem(self.m, self.diag, self.upper, self.lower, tuple(rhs))

    def multiply(self, v: Sequence) -> list:
        m = self.m
        out = [self.diag[i] * v[i] for i in range(m)]
        for i in range(m - 1):
            out[i] = out[i] + self.upper[i] * v[i + 1]
            out[i + 1] = out[i + 1] + self.lower[i] * v[i]
        return out


@dataclass(frozen=True)
class Partition:
    m1: TridiagonalSystem
    m2: object
    u: tuple
    v: tuple
    y_head: tuple
    y_tail: object
    y_hat: tuple
    corner_substituted: bool = False
    flops: int = 0


def partition(S: BorderedSystem, mode: ScalarMode = ScalarMode.EXACT,
              tau: float = FLOAT_ZERO_TOL) -> Partition:
    mode = ScalarMode.parse(mode)
    n = S.n
    a, b, c, p, q, y = (to_mode(getattr(S, k), mode) for k in "abcpqy")
    m2 = a[n - 1]
    substituted = False
    if mode is ScalarMode.EXACT:
        if not m2:
            m2 = T
            substituted = True
    elif scalar_is_zero(m2, mode, abs(m2), tau):
        raise ZeroCorner(m2)
    m1 = TridiagonalSystem(n - 1, a[:n - 1], b[:n - 2], c[:n - 2])
    u = tuple(q) + (c[n - 2],)
    v = tuple(p) + (b[n - 2],)
    y_head = tuple(y[:n - 1])
    y_tail = y[n - 1]
    ratio = y_tail / m2
    y_hat = tuple(yi - vi * ratio for yi, vi in zip(y_head, v))
    return Partition(m1, m2, u, v, y_head, y_tail, y_hat, substituted,
                     flops=1 + 2 * (n - 1))


def _thomas(T_: TridiagonalSystem, rhs, mode: ScalarMode, tau: float):
    """Thomas elimination; returns ``(x, pivots, subs, flops)`` with ``t`` still symbolic."""
    m = T_.m
    diag, upper, lower = T_.diag, T_.upper, T_.lower
    subs = []
    w = [diag[0]] * m
    g = [rhs[0]] * m

    def check(value, scale, idx):
        if mode is ScalarMode.EXACT:
            if not value:
                subs.append(idx)
                return T
            return value
        if scalar_is_zero(value, mode, scale, tau):
            raise ZeroPivot(idx, value)
        return value

    w[0] = check(diag[0], diag[0], 1)
    for i in range(1, m):
        f = lower[i - 1] / w[i - 1]
        fu = f * upper[i - 1]
        w[i] = check(diag[i] - fu,
                     max(abs(diag[i]), abs(fu)) if mode is ScalarMode.F64 else 0, i + 1)
        g[i] = rhs[i] - f * g[i - 1]
    x = [g[0]] * m
    x[m - 1] = g[m - 1] / w[m - 1]
    for i in range(m - 2, -1, -1):
        x[i] = (g[i] - upper[i] * x[i + 1]) / w[i]
    flops = 5 * (m - 1) + 1 + 3 * (m - 1)
    return x, w, subs, flops


def _pivot_product_at_zero(pivots):
    prod = Fraction(1)
    for w in pivots:
        prod = prod * w
    try:
        return eval_at_zero(prod)
    except SingularAtZero:
        return Fraction(0)


def thomas_solve(T_: TridiagonalSystem, mode: ScalarMode = ScalarMode.EXACT,
                 tau: float = FLOAT_ZERO_TOL) -> list:
    """Solve a tridiagonal system with the Thomas algorithm.

    Exact mode replaces zero pivots by ``t`` and returns the solution with
    ``t = 0`` substituted; a zero determinant raises :class:`Singular`.
    """
    mode = ScalarMode.parse(mode)
    if T_.rhs is None:
        raise BadDimensions("tridiagonal system has no right-hand side")
    diag, upper, lower, rhs = (to_mode(v, mode) for v in (T_.diag, T_.upper, T_.lower, T_.rhs))
    sysm = TridiagonalSystem(T_.m, diag, upper, lower)
    x, pivots, subs, _ = _thomas(sysm, rhs, mode, tau)
    if mode is ScalarMode.F64:
        return x
    if not _pivot_product_at_zero(pivots):
        raise Singular("tridiagonal matrix is singular")
    try:
        return [eval_at_zero(v) for v in x]
    except SingularAtZero as exc:
        raise Singular(str(exc)) from None


def _dot(u, v):
    acc = u[0] * v[0]
    for i in range(1, len(u)):
        acc = acc + u[i] * v[i]
    return acc


def solve_smw(S: BorderedSystem, mode: ScalarMode = ScalarMode.EXACT,
              concurrent: bool = True, tau: float = FLOAT_ZERO_TOL,
              executor=None) -> Solution:
    """Solve ``S`` by the block (Woodbury) route.

    The two sub-solves against ``M1`` are independent; with ``concurrent`` they
    run on two worker threads (or on ``executor`` if given) and are combined
    only after both finish. The determinant comes from the LU factorization so
    reports from both solvers carry the same quantity; its cost is not counted
    in ``flops``.
    """
    mode = ScalarMode.parse(mode)
    n = S.n
    det = determinant(factor(S, mode, tau))
    if mode is ScalarMode.EXACT and not det:
        raise Singular("coefficient matrix is singular (determinant is 0)")

    P = partition(S, mode, tau)
    if concurrent:
        if executor is None:
            with ThreadPoolExecutor(max_workers=2) as pool:
                fr = pool.submit(_thomas, P.m1, P.y_hat, mode, tau)
                fq = pool.submit(_thomas, P.m1, P.v, mode, tau)
                r_res, q_res = fr.result(), fq.result()
        else:
            fr = executor.submit(_thomas, P.m1, P.y_hat, mode, tau)
            fq = executor.submit(_thomas, P.m1, P.v, mode, tau)
            r_res, q_res = fr.result(), fq.result()
    else:
        r_res = _thomas(P.m1, P.y_hat, mode, tau)
        q_res = _thomas(P.m1, P.v, mode, tau)
    r, _, subs, fl_r = r_res
    qbar, _, _, fl_q = q_res
    flops = P.flops + fl_r + fl_q

    u = P.u
    ur = _dot(u, r)
    uq = _dot(u, qbar)
    cap = P.m2 - uq
    flops += 4 * (n - 1) - 2 + 1
    if mode is ScalarMode.F64:
        scale = abs(P.m2) + sum(abs(ui * qi) for ui, qi in zip(u, qbar))
        if scalar_is_zero(cap, mode, scale, tau):
            raise Singular("capacitance m2 - u.qbar is numerically zero")
    elif not cap:
        raise Singular("capacitance m2 - u.qbar is zero")
    coef = ur / cap
    x_head = [ri + qi * coef for ri, qi in zip(r, qbar)]
    x_tail = (P.y_tail - _dot(u, x_head)) / P.m2
    flops += 1 + 2 * (n - 1) + 2 * (n - 1) + 1

    symbolic = tuple(x_head) + (x_tail,)
    all_subs = tuple(subs) + ((n,) if P.corner_substituted else ())
    x = symbolic
    if all_subs:
        try:
            x = tuple(eval_at_zero(v) for v in symbolic)
        except SingularAtZero as exc:
            raise Singular(f"solution has a pole at t = 0: {exc}") from None
    return Solution(
        x=x, determinant=det, subs_count=len(all_subs), flops=flops,
        subs=all_subs, x_symbolic=symbolic,
    )
