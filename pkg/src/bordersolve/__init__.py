"""Solvers for bordered tridiagonal linear systems.

Two pivot-free solvers are provided: an LU solver that replaces exactly-zero
pivots by a symbol ``t`` (exact mode), and a block solver built on the
Sherman-Morrison-Woodbury formula over a Thomas tridiagonal solve. Dense
reference solvers and example generators support checking and benchmarking.
"""
from .core import (
    BorderedFactorization,
    BorderedSystem,
    Solution,
    dense_matrix,
    determinant,
    factor,
    multiply,
    reconstruct_LU,
    solve_sbtls,
    validate_system,
)
from .errors import (
    BadDimensions,
    BadFile,
    BadScalar,
    BadSpec,
    BorderSolveError,
    DivisionByZero,
    Singular,
    SingularAtZero,
    ZeroCorner,
    ZeroDenominator,
    ZeroPivot,
)
from .generators import FamilySpec, generate
from .oracle import bareiss_determinant, bareiss_solve, gauss_solve
from .report import SolveReport, solve_report
from .scalar import Polynomial, Rational, RationalFunction, ScalarMode, T, rf_eval_at_zero, rf_reduce
from .smw import Partition, TridiagonalSystem, partition, solve_smw, thomas_solve

__version__ = "0.1.0"
