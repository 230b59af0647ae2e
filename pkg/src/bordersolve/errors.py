"""Exception hierarchy shared by the solvers, the generators and the CLI."""


class BorderSolveError(Exception):
    """Base class for every domain error raised by this package."""


class BadDimensions(BorderSolveError, ValueError):
    pass


class BadScalar(BorderSolveError, ValueError):
    pass


class BadSpec(BorderSolveError, ValueError):
    pass


class ZeroDenominator(BorderSolveError, ZeroDivisionError):
    pass


class DivisionByZero(BorderSolveError, ZeroDivisionError):
    pass


class SingularAtZero(BorderSolveError, ZeroDivisionError):
    """A reduced rational function has a pole at ``t = 0``."""


class Singular(BorderSolveError, ArithmeticError):
    """The coefficient matrix is singular."""


class ZeroPivot(BorderSolveError, ArithmeticError):
    """A pivot vanished numerically in floating-point mode.

    Floats cannot take the symbolic ``t`` route, so the caller is pointed at
    exact mode instead.
    """

    def __init__(self, index: int, value=None, what: str = "pivot"):
        self.index = index
        self.value = value
        msg = f"zero {what} d[{index}]"
        if value is not None:
            msg += f" (computed value {value!r})"
        msg += "; floating-point mode cannot continue, rerun with --mode exact"
        super().__init__(msg)


class ZeroCorner(ZeroPivot):
    """The corner entry ``a[n]`` is numerically zero in floating-point mode."""

    def __init__(self, value=None):
        self.index = None
        self.value = value
        ArithmeticError.__init__(
            self,
            f"corner entry a[n] is numerically zero ({value!r}); the block "
            "solver needs it inverted in floating-point mode, rerun with "
            "--mode exact",
        )


class BadFile(BorderSolveError, ValueError):
    """A system file is unreadable or not a JSON object."""
