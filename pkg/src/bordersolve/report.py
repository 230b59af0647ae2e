"""Run one solver on one system and summarize the outcome."""
from __future__ import annotations

import time
from dataclasses import asdict, dataclass
from fractions import Fraction

from .core import BorderedSystem, dense_matrix, multiply, solve_sbtls
from .oracle import bareiss_solve, gauss_solve_det
from .scalar import ScalarMode, format_scalar, to_mode
from .smw import solve_smw

__all__ = ["METHODS", "SolveReport", "run_method", "solve_report", "residual_inf"]

METHODS = ("sbtls", "smw", "gauss")


@dataclass(frozen=True)
class SolveReport:
    method: str
    mode: str
    x: tuple
    determinant: str
    flops: int
    substitutions: int
    residual_inf: str
    wall_time_s: float

    def to_dict(self) -> dict:
        d = asdict(self)
        d["x"] = list(self.x)
        return d


def run_method(S: BorderedSystem, method: str, mode: ScalarMode, concurrent: bool = True):
    """Solve with ``method``; returns ``(x, determinant, flops, substitutions)``.

    ``gauss`` is the dense partial-pivoting solver in f64 mode and exact
    fraction-free elimination in exact mode; it is not flop-instrumented.
    """
    mode = ScalarMode.parse(mode)
    if method == "sbtls":
        sol = solve_sbtls(S, mode)
    elif method == "smw":
        sol = solve_smw(S, mode, concurrent=concurrent)
    elif method == "gauss":
        if mode is ScalarMode.F64:
            x, det = gauss_solve_det(dense_matrix(S.in_mode(mode)), to_mode(S.y, mode))
            return [float(v) for v in x], float(det), 0, 0
        x, det = bareiss_solve(dense_matrix(S), S.y)
        return list(x), det, 0, 0
    else:
        raise ValueError(f"unknown method {method!r}; choose from {', '.join(METHODS)}")
    return list(sol.x), sol.determinant, sol.flops, sol.subs_count


def residual_inf(S: BorderedSystem, x, mode: ScalarMode):
    """``max |A x - y|`` recomputed from the system, in the arithmetic of ``mode``."""
    Sm = S.in_mode(mode)
    xm = to_mode(x, mode)
    ax = multiply(Sm, xm)
    return max(abs(u - v) for u, v in zip(ax, Sm.y))


def solve_report(S: BorderedSystem, method: str, mode, concurrent: bool = True) -> SolveReport:
    mode = ScalarMode.parse(mode)
    start = time.perf_counter()
    x, det, flops, subs = run_method(S, method, mode, concurrent)
    elapsed = time.perf_counter() - start
    res = residual_inf(S, x, mode)
    if isinstance(res, Fraction):
        res_text = str(res) if res.denominator == 1 else repr(float(res))
    else:
        res_text = repr(float(res))
    return SolveReport(
        method=method,
        mode=mode.value,
        x=tuple(format_scalar(v) for v in x),
        determinant=format_scalar(det),
        flops=flops,
        substitutions=subs,
        residual_inf=res_text,
        wall_time_s=elapsed,
    )
